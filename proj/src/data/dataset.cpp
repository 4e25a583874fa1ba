#include "aupc/data/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "aupc/core/error.hpp"

namespace aupc {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view cell, double& out) {
  cell = trim(cell);
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  return ec == std::errc{} && ptr == cell.data() + cell.size() && std::isfinite(out);
}

}  // namespace

Dataset::Dataset(std::vector<std::string> names, std::vector<double> values, std::string provenance)
    : names_(std::move(names)), values_(std::move(values)), provenance_(std::move(provenance)) {
  if (names_.size() < 2) throw InvalidArgument("a dataset needs at least 2 attributes");
  if (values_.size() % names_.size() != 0) {
    throw InvalidArgument("value count is not a multiple of the attribute count");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("dataset values must be finite");
  }
}

std::vector<double> Dataset::column(std::size_t col) const {
  std::vector<double> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, col);
  return out;
}

LoadedCsv parse_csv(const std::string& text, const std::string& provenance) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument(provenance + ": empty CSV");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

  std::vector<std::string> names;
  std::set<std::string> seen;
  for (auto cell : split_commas(line)) {
    std::string name(trim(cell));
    if (!seen.insert(name).second) {
      throw InvalidArgument(provenance + ": duplicate column name '" + name + "'");
    }
    names.push_back(std::move(name));
  }
  if (names.size() < 2) throw InvalidArgument(provenance + ": need at least 2 columns");

  LoadReport report;
  std::vector<double> values;
  std::vector<double> row(names.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_commas(line);
    if (cells.size() != names.size()) {
      throw InvalidArgument(provenance + ": line " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(names.size()));
    }
    ++report.rows_read;
    bool ok = true;
    for (std::size_t c = 0; c < cells.size() && ok; ++c) ok = parse_number(cells[c], row[c]);
    if (!ok) {
      ++report.rows_dropped;
      continue;
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  if (values.empty()) throw InvalidArgument(provenance + ": no valid data rows");
  return {Dataset(std::move(names), std::move(values), provenance), report};
}

LoadedCsv load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), path.string());
}

std::string to_csv(const Dataset& d) {
  std::string out;
  for (std::size_t c = 0; c < d.columns(); ++c) {
    if (c) out += ',';
    out += d.names()[c];
  }
  out += '\n';
  char buf[32];
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.columns(); ++c) {
      if (c) out += ',';
      // Shortest round-trip representation.
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d.at(r, c));
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  const std::string text = to_csv(d);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

NormalizedDataset normalize(const Dataset& d) {
  const std::size_t n = d.columns();
  const std::size_t r = d.rows();
  std::vector<ColumnRange> ranges(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (r == 0) break;
    ranges[c] = {d.at(0, c), d.at(0, c)};
    for (std::size_t i = 1; i < r; ++i) {
      ranges[c].min = std::min(ranges[c].min, d.at(i, c));
      ranges[c].max = std::max(ranges[c].max, d.at(i, c));
    }
  }
  std::vector<double> values(d.values().begin(), d.values().end());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      double& x = values[i * n + c];
      const double span = ranges[c].max - ranges[c].min;
      x = span > 0.0 ? (x - ranges[c].min) / span : 0.5;
    }
  }
  return {Dataset(d.names(), std::move(values), d.provenance()), std::move(ranges)};
}

namespace {

void check_permutation(std::span<const std::size_t> permutation, std::size_t n) {
  if (permutation.size() != n) throw InvalidArgument("axis permutation has the wrong length");
  std::vector<bool> used(n, false);
  for (std::size_t p : permutation) {
    if (p >= n || used[p]) throw InvalidArgument("axis order is not a permutation");
    used[p] = true;
  }
}

}  // namespace

Dataset reorder_axes(const Dataset& d, std::span<const std::size_t> permutation) {
  const std::size_t n = d.columns();
  check_permutation(permutation, n);
  std::vector<std::string> names(n);
  for (std::size_t c = 0; c < n; ++c) names[c] = d.names()[permutation[c]];
  std::vector<double> values(d.values().size());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t c = 0; c < n; ++c) values[i * n + c] = d.at(i, permutation[c]);
  }
  return Dataset(std::move(names), std::move(values), d.provenance());
}

NormalizedDataset reorder_axes(const NormalizedDataset& d, std::span<const std::size_t> permutation) {
  NormalizedDataset out{reorder_axes(d.data, permutation), {}};
  for (std::size_t p : permutation) out.original.push_back(d.original[p]);
  return out;
}

}  // namespace aupc
