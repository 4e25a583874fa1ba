#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aupc {

// Row-major table of finite reals with named columns.
class Dataset {
 public:
  Dataset() = default;
  // Throws InvalidArgument unless names.size() >= 2 and every value is finite
  // and values.size() is a multiple of names.size().
  Dataset(std::vector<std::string> names, std::vector<double> values, std::string provenance = {});

  std::size_t rows() const { return columns() == 0 ? 0 : values_.size() / columns(); }
  std::size_t columns() const { return names_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& provenance() const { return provenance_; }

  double at(std::size_t row, std::size_t col) const { return values_[row * columns() + col]; }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * columns(), columns()};
  }
  std::span<const double> values() const { return values_; }
  std::vector<double> column(std::size_t col) const;

  bool operator==(const Dataset& other) const {
    return names_ == other.names_ && values_ == other.values_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
  std::string provenance_;
};

struct ColumnRange {
  double min = 0.0;
  double max = 0.0;
};

struct NormalizedDataset {
  Dataset data;  // every column in [0, 1]
  std::vector<ColumnRange> original;

  std::size_t rows() const { return data.rows(); }
  std::size_t columns() const { return data.columns(); }
  std::size_t pairs() const { return columns() < 2 ? 0 : columns() - 1; }
};

struct LoadReport {
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
};

struct LoadedCsv {
  Dataset data;
  LoadReport report;
};

// Comma-separated, header row first, no quoting. Rows with empty, non-numeric
// or non-finite cells are dropped and counted; ragged rows are an error.
LoadedCsv load_csv(const std::filesystem::path& path);
LoadedCsv parse_csv(const std::string& text, const std::string& provenance = "inline");

std::string to_csv(const Dataset& d);
void write_csv(const Dataset& d, const std::filesystem::path& path);

// Column-wise min-max scaling; constant columns become 0.5.
NormalizedDataset normalize(const Dataset& d);

// Column new[i] = old[permutation[i]].
Dataset reorder_axes(const Dataset& d, std::span<const std::size_t> permutation);
NormalizedDataset reorder_axes(const NormalizedDataset& d, std::span<const std::size_t> permutation);

}  // namespace aupc
