#pragma once

#include <string>
#include <utility>
#include <vector>

namespace biphoton {

/// Numeric cell format shared by all writers: 9 significant digits.
std::string csv_number(double x);

/// Writes `content` to `path`, creating parent directories (IoError on failure).
void write_text_file(const std::string& path, const std::string& content);

/// Reads a two-column delimited file of (tau [ns], counts).  An optional
/// non-numeric header line is skipped; other malformed rows raise IoError
/// with their line number.  Returned times are converted to seconds.
std::vector<std::pair<double, double>> read_counts_file(const std::string& path);

}  // namespace biphoton
