#ifndef BERGE_CLI_HPP
#define BERGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace berge {

// Exit codes: 0 success, 1 property violation or runtime failure, 2 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace berge

#endif
