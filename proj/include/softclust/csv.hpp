#pragma once

#include "softclust/types.hpp"

#include <filesystem>
#include <vector>

namespace softclust {

/// Comma-separated decimal floats, optional single header line, LF or CRLF.
/// Errors name the offending row and column.
Dataset load_csv(const std::filesystem::path& path, bool has_header);

/// Writes with enough digits that load_csv(write_csv(x)) == x to 1e-12.
void write_csv(const Dataset& data, const std::filesystem::path& path);

/// One integer label per line (-1 marks noise points).
void write_labels(const std::vector<int>& labels, const std::filesystem::path& path);
std::vector<int> load_labels(const std::filesystem::path& path);

} // namespace softclust
