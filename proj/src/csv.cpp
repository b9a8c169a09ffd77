#include "biphoton/csv.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "biphoton/errors.hpp"

namespace biphoton {

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + p.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

namespace {

bool parse_cell(const std::string& cell, double& out) {
  errno = 0;
  const char* begin = cell.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE) return false;
  while (*end != '\0') {
    if (!std::isspace(static_cast<unsigned char>(*end))) return false;
    ++end;
  }
  return true;
}

}  // namespace

std::vector<std::pair<double, double>> read_counts_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open data file: " + path);

  std::vector<std::pair<double, double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed.front() == '#') continue;

    // Normalize separators so comma-, tab-, and space-delimited files parse alike.
    std::string normalized = trimmed;
    for (char& c : normalized)
      if (c == ',' || c == '\t' || c == ';') c = ' ';
    std::istringstream cells(normalized);
    std::string tau_cell, count_cell, extra;
    cells >> tau_cell >> count_cell;
    double tau_ns = 0.0, counts = 0.0;
    if (!parse_cell(tau_cell, tau_ns) || !parse_cell(count_cell, counts)) {
      if (line_no == 1 && rows.empty()) continue;  // header line
      throw IoError(path + ": data row " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
    if (cells >> extra)
      throw IoError(path + ": data row " + std::to_string(line_no) + ": expected 2 columns");
    rows.emplace_back(tau_ns * 1e-9, counts);
  }
  if (rows.empty()) throw IoError(path + ": no data rows found");
  return rows;
}

}  // namespace biphoton
