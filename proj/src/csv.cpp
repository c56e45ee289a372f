#include "gamboost/csv.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "gamboost/numeric.hpp"

namespace gamboost {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

double parse_cell(const std::string& s, std::size_t row, const std::string& column) {
  if (s.empty())
    throw std::invalid_argument("missing value at row " + std::to_string(row) + ", column " +
                                column);
  double value = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw std::invalid_argument("non-numeric cell '" + s + "' at row " + std::to_string(row) +
                                ", column " + column);
  return value;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& response_column) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty file '" + path + "'");
  const auto header = split_line(line);

  int response_index = -1;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == response_column) response_index = static_cast<int>(j);
  if (response_index < 0)
    throw std::invalid_argument("response column '" + response_column + "' not found in '" + path +
                                "'");

  Dataset d;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (static_cast<int>(j) != response_index) d.names.push_back(header[j]);
  d.columns.resize(d.names.size());

  std::size_t row = 1;  // data rows are 1-based in diagnostics
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size())
      throw std::invalid_argument("row " + std::to_string(row) + " has " +
                                  std::to_string(cells.size()) + " cells, expected " +
                                  std::to_string(header.size()));
    std::size_t out_col = 0;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const double v = parse_cell(cells[j], row, header[j]);
      if (static_cast<int>(j) == response_index) {
        d.y.push_back(v);
      } else {
        d.columns[out_col++].push_back(v);
      }
    }
    ++row;
  }
  d.validate();
  return d;
}

void write_csv(const Dataset& d, const std::string& path, const std::string& response_column) {
  std::vector<std::string> header{response_column};
  header.insert(header.end(), d.names.begin(), d.names.end());
  CsvWriter w(path, header);
  for (int i = 0; i < d.n(); ++i) {
    std::vector<std::string> cells;
    cells.reserve(header.size());
    cells.push_back(cell(d.y[static_cast<std::size_t>(i)]));
    for (int j = 0; j < d.p(); ++j)
      cells.push_back(cell(d.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
    w.row(cells);
  }
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), width_(header.size()), path_(path) {
  if (!out_) throw std::runtime_error("cannot write file '" + path + "'");
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_)
    throw std::invalid_argument("csv row width mismatch writing '" + path_ + "'");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  if (!out_) throw std::runtime_error("write failed on '" + path_ + "'");
}

std::string cell(double x) { return format_double(x); }
std::string cell(int x) { return std::to_string(x); }
std::string cell(long long x) { return std::to_string(x); }

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_line(line));
  }
  return rows;
}

}  // namespace gamboost
