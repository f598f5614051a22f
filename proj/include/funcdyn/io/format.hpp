#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "funcdyn/verify/report.hpp"

namespace funcdyn {

enum class OutputFormat { Json, Table, Csv };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "table") return OutputFormat::Table;
    if (s == "csv") return OutputFormat::Csv;
    fail(Errc::UsageError, "--format must be json, table or csv, not '" + s + "'");
}

/// Leaves of a JSON document as (dotted path, scalar text) rows, in document order.
inline std::vector<std::pair<std::string, std::string>> flatten(const json& j, const std::string& prefix = "") {
    std::vector<std::pair<std::string, std::string>> rows;
    auto key = [&](const std::string& k) { return prefix.empty() ? k : prefix + "." + k; };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            auto sub = flatten(it.value(), key(it.key()));
            rows.insert(rows.end(), sub.begin(), sub.end());
        }
        if (j.empty()) rows.emplace_back(prefix, "{}");
    } else if (j.is_array()) {
        const bool scalars = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
        if (scalars) {
            std::string s;
            for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            rows.emplace_back(prefix, "[" + s + "]");
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) {
                auto sub = flatten(j[i], key(std::to_string(i)));
                rows.insert(rows.end(), sub.begin(), sub.end());
            }
        }
    } else {
        rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
    return rows;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string render(const json& j, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return j.dump(2) + "\n";
    const auto rows = flatten(j);
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "key,value\n";
        for (auto& [k, v] : rows) os << csv_escape(k) << ',' << csv_escape(v) << '\n';
        return os.str();
    }
    std::size_t w = 0;
    for (auto& [k, v] : rows) w = std::max(w, k.size());
    for (auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    return os.str();
}

}  // namespace funcdyn
