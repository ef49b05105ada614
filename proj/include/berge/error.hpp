#ifndef BERGE_ERROR_HPP
#define BERGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace berge {

enum class errc {
    invalid_parameter,
    missing_edge,
    size_limit,
    input_not_admissible,
    no_valid_partition,
    precondition_violation,
    pipeline_order,
    forbidden_step,
    step_budget_exceeded,
    internal_invariant,
    incomplete_input,
    out_of_domain,
    parse_error,
    io_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace berge

#endif
