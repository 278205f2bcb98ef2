#pragma once

#include <string>
#include <vector>

namespace rrcast {

/// Minimal CSV table. Fields never contain separators or quotes in any of
/// the formats this engine reads or writes, so no quoting is implemented.
struct CsvTable {
    std::string path;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> line_numbers;  // 1-based source line per row
    std::vector<std::string> comments;

    int column(const std::string& name) const;  // -1 if absent
    int require_column(const std::string& name) const;
};

/// Reads a CSV file. Lines starting with '#' are collected as comments.
CsvTable read_csv(const std::string& path);

/// Writes header + rows; each comment becomes a leading "# ..." line.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows,
               const std::vector<std::string>& comments = {});

}  // namespace rrcast
