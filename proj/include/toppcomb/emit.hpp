#pragma once

#include <string>
#include <vector>

namespace toppcomb {

// Rectangular result set. Empty cells are allowed and render as empty CSV fields
// and JSON nulls.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

enum class EmitFormat { Json, Csv, Bfile };

EmitFormat parse_format(const std::string& name);  // "json" | "csv" | "bfile"

// json: one object per row, keys in column order; csv: header line plus rows;
// bfile: "index value" lines, only for two-column tables with no empty cells.
std::string emit(const Table& table, EmitFormat format);

}
