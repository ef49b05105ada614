#include "berge/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "berge/error.hpp"

namespace berge {

report_format parse_format(const std::string& token) {
    if (token == "json") return report_format::json;
    if (token == "csv") return report_format::csv;
    if (token == "text") return report_format::text;
    fail(errc::invalid_parameter, "unknown format: " + token);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string render(const field_value& v) {
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    return std::get<std::string>(v);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string emit_csv(const std::vector<record>& records, const std::vector<std::string>& schema) {
    std::ostringstream out;
    if (records.empty()) {
        for (std::size_t i = 0; i < schema.size(); ++i)
            out << (i ? "," : "") << csv_quote(schema[i]);
        if (!schema.empty()) out << "\r\n";
        return out.str();
    }
    const auto& head = records.front().fields;
    for (std::size_t i = 0; i < head.size(); ++i)
        out << (i ? "," : "") << csv_quote(head[i].first);
    out << "\r\n";
    for (const auto& rec : records) {
        require(rec.fields.size() == head.size(), errc::invalid_parameter,
                "records must share one schema");
        for (std::size_t i = 0; i < rec.fields.size(); ++i)
            out << (i ? "," : "") << csv_quote(render(rec.fields[i].second));
        out << "\r\n";
    }
    return out.str();
}

std::string emit_json(const std::vector<record>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [key, v] : rec.fields) {
            if (std::holds_alternative<long long>(v))
                obj[key] = std::get<long long>(v);
            else if (std::holds_alternative<double>(v))
                obj[key] = std::get<double>(v);
            else if (std::holds_alternative<bool>(v))
                obj[key] = std::get<bool>(v);
            else
                obj[key] = std::get<std::string>(v);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string emit_text(const std::vector<record>& records) {
    std::ostringstream out;
    if (records.empty()) return out.str();
    const auto& head = records.front().fields;
    std::vector<std::size_t> width(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].first.size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& rec : records) {
        require(rec.fields.size() == head.size(), errc::invalid_parameter,
                "records must share one schema");
        std::vector<std::string> row;
        for (std::size_t i = 0; i < rec.fields.size(); ++i) {
            row.push_back(render(rec.fields[i].second));
            width[i] = std::max(width[i], row.back().size());
        }
        cells.push_back(std::move(row));
    }
    auto pad = [&](const std::string& s, std::size_t w) {
        std::string p = s;
        p.resize(w, ' ');
        return p;
    };
    for (std::size_t i = 0; i < head.size(); ++i)
        out << (i ? "  " : "") << pad(head[i].first, width[i]);
    out << "\n";
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << pad(row[i], width[i]);
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string emit_records(const std::vector<record>& records, report_format format,
                         const std::vector<std::string>& schema) {
    switch (format) {
        case report_format::json: return emit_json(records);
        case report_format::csv: return emit_csv(records, schema);
        case report_format::text: return emit_text(records);
    }
    return {};
}

std::vector<record> parse_records_json(const std::string& text) {
    nlohmann::ordered_json arr;
    try {
        arr = nlohmann::ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("bad json: ") + e.what());
    }
    require(arr.is_array(), errc::parse_error, "expected a json array of records");
    std::vector<record> out;
    for (const auto& obj : arr) {
        require(obj.is_object(), errc::parse_error, "expected json objects");
        record rec;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            const auto& v = it.value();
            if (v.is_boolean())
                rec.add(it.key(), v.get<bool>());
            else if (v.is_number_integer())
                rec.add(it.key(), v.get<long long>());
            else if (v.is_number())
                rec.add(it.key(), v.get<double>());
            else if (v.is_string())
                rec.add(it.key(), v.get<std::string>());
            else
                fail(errc::parse_error, "unsupported field type in record");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace berge
