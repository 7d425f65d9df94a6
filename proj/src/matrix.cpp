#include "cfa/matrix.hpp"

#include <algorithm>

namespace cfa {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols()) throw InvalidInput("from_rows: ragged initializer");
    std::copy(row.begin(), row.end(), m.row(r).begin());
    ++r;
  }
  return m;
}

Matrix Matrix::slice_rows(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw InvalidInput("slice_rows: range out of bounds");
  Matrix out(end - begin, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>(end * cols_),
            out.data_.begin());
  return out;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

void ScoreMatrix::validate() const {
  if (values.rows() < 1) throw InvalidInput("model '" + model_id + "': needs at least one sample");
  if (values.cols() < 2) throw InvalidInput("model '" + model_id + "': needs at least two classes");
  if (class_names.size() != values.cols())
    throw InvalidInput("model '" + model_id + "': class name count does not match columns");
  if (!values.all_finite())
    throw InvalidInput("model '" + model_id + "': non-finite score entry");
}

TiePolicy parse_tie_policy(std::string_view name) {
  if (name == "average") return TiePolicy::average;
  if (name == "min") return TiePolicy::min;
  if (name == "max") return TiePolicy::max;
  if (name == "dense") return TiePolicy::dense;
  if (name == "ordinal") return TiePolicy::ordinal;
  throw InvalidInput("unknown tie policy '" + std::string(name) +
                     "' (expected average|min|max|dense|ordinal)");
}

std::string_view to_string(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::average: return "average";
    case TiePolicy::min: return "min";
    case TiePolicy::max: return "max";
    case TiePolicy::dense: return "dense";
    case TiePolicy::ordinal: return "ordinal";
  }
  return "average";
}

}  // namespace cfa
