#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfa/errors.hpp"

namespace cfa {

/// Dense row-major matrix of doubles. The one numeric container everything
/// else in this library is built on.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  /// Copy of rows [begin, end).
  Matrix slice_rows(std::size_t begin, std::size_t end) const;

  bool all_finite() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// One base model's predictions: n_samples x n_classes, finite entries.
struct ScoreMatrix {
  std::string model_id;
  Matrix values;
  std::vector<std::string> class_names;

  std::size_t n_samples() const { return values.rows(); }
  std::size_t n_classes() const { return values.cols(); }

  /// Throws InvalidInput on shape/finiteness violations.
  void validate() const;
};

/// Row-wise ranks derived from a score matrix; rank 1 marks the row maximum.
struct RankMatrix {
  std::string model_id;
  Matrix values;
};

/// Class index per sample.
using Labels = std::vector<std::size_t>;

enum class TiePolicy { average, min, max, dense, ordinal };

TiePolicy parse_tie_policy(std::string_view name);
std::string_view to_string(TiePolicy policy);

}  // namespace cfa
