#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace contactnet {

// Minimal CSV support: header row required, UTF-8, comma separated, double
// quotes honored. Row numbers in error messages are 1-based and count the
// header.
struct CsvTable {
    std::filesystem::path source;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index for `name`; throws MissingColumn naming file and column.
    std::size_t column(const std::string& name) const;
    // Throws MissingColumn unless every listed column is present.
    void require_columns(const std::vector<std::string>& names) const;
};

CsvTable read_csv(const std::filesystem::path& path);

} // namespace contactnet
