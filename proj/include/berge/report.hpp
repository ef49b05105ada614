#ifndef BERGE_REPORT_HPP
#define BERGE_REPORT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace berge {

using field_value = std::variant<long long, double, std::string, bool>;

// Flat record with stable field order; one report is a homogeneous list.
struct record {
    std::vector<std::pair<std::string, field_value>> fields;

    void add(const std::string& key, long long v) { fields.emplace_back(key, v); }
    void add(const std::string& key, int v) { fields.emplace_back(key, static_cast<long long>(v)); }
    void add(const std::string& key, std::uint64_t v) {
        fields.emplace_back(key, static_cast<long long>(v));
    }
    void add(const std::string& key, double v) { fields.emplace_back(key, v); }
    void add(const std::string& key, const std::string& v) { fields.emplace_back(key, v); }
    void add(const std::string& key, const char* v) { fields.emplace_back(key, std::string(v)); }
    void add(const std::string& key, bool v) { fields.emplace_back(key, v); }
};

enum class report_format { json, csv, text };

report_format parse_format(const std::string& token);

// Stable, reproducible rendering: fixed field order, %.12g doubles,
// RFC 4180 CSV quoting, JSON array of objects. The schema names the columns
// when the record list is empty (header-only CSV, empty JSON array).
std::string emit_records(const std::vector<record>& records, report_format format,
                         const std::vector<std::string>& schema = {});

// Inverse of emit_records for the json format.
std::vector<record> parse_records_json(const std::string& text);

std::string format_double(double v);

} // namespace berge

#endif
