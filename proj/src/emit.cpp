#include "toppcomb/emit.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "json.hpp"

namespace toppcomb {

namespace {

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    if (s[i] == '0' && s.size() > i + 1) return false;  // no leading zeros as numbers
    return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string json_escape(const std::string& s) { return nlohmann::json(s).dump(); }

bool needs_csv_quotes(const std::string& s) {
    return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_field(const std::string& s) {
    if (!needs_csv_quotes(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

EmitFormat parse_format(const std::string& name) {
    if (name == "json") return EmitFormat::Json;
    if (name == "csv") return EmitFormat::Csv;
    if (name == "bfile") return EmitFormat::Bfile;
    throw std::invalid_argument("format must be json, csv, or bfile");
}

std::string emit(const Table& table, EmitFormat format) {
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::invalid_argument("emit: ragged row");

    std::string out;
    switch (format) {
        case EmitFormat::Json:
            // One object per line, keys in column order, empty cells as null;
            // integer-looking values stay bare so arbitrary precision survives.
            for (const auto& row : table.rows) {
                out += '{';
                for (size_t i = 0; i < row.size(); ++i) {
                    if (i) out += ',';
                    out += json_escape(table.columns[i]) + ':';
                    if (row[i].empty()) {
                        out += "null";
                    } else if (looks_numeric(row[i])) {
                        out += row[i];
                    } else {
                        out += json_escape(row[i]);
                    }
                }
                out += "}\n";
            }
            break;
        case EmitFormat::Csv: {
            for (size_t i = 0; i < table.columns.size(); ++i) {
                if (i) out += ',';
                out += csv_field(table.columns[i]);
            }
            out += '\n';
            for (const auto& row : table.rows) {
                for (size_t i = 0; i < row.size(); ++i) {
                    if (i) out += ',';
                    out += csv_field(row[i]);
                }
                out += '\n';
            }
            break;
        }
        case EmitFormat::Bfile:
            if (table.columns.size() != 2)
                throw std::invalid_argument("emit: bfile needs exactly two columns");
            for (const auto& row : table.rows) {
                if (row[0].empty() || row[1].empty())
                    throw std::invalid_argument("emit: bfile cannot hold empty cells");
                out += row[0] + ' ' + row[1] + '\n';
            }
            break;
    }
    return out;
}

}
