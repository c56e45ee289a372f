#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "gamboost/dataset.hpp"

namespace gamboost {

// Comma-separated, UTF-8, '.' decimal, header row required. Every
// non-response column becomes a covariate in file order.
Dataset load_csv(const std::string& path, const std::string& response_column);

void write_csv(const Dataset& d, const std::string& path,
               const std::string& response_column = "y");

// Minimal writer for the output tables the CLI emits.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::size_t width_;
  std::string path_;
};

std::string cell(double x);
std::string cell(int x);
std::string cell(long long x);

// Reads a CSV back as strings (header row included).
std::vector<std::vector<std::string>> read_csv_rows(const std::string& path);

}  // namespace gamboost
