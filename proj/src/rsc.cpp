#include "cfa/rsc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

#include "cfa/ranking.hpp"

namespace cfa {

RscCurve rsc_of_score_row(std::span<const double> row) {
  RscCurve curve = normalize_row_scores(row);
  std::sort(curve.begin(), curve.end(), std::greater<>());
  return curve;
}

RscCurve rsc_of_rank_row(std::span<const double> row_ranks) {
  RscCurve curve = rank_to_score(row_ranks, row_ranks.size());
  std::sort(curve.begin(), curve.end(), std::greater<>());
  return curve;
}

Matrix rsc_curves(const Matrix& values, CurveSource source) {
  Matrix out(values.rows(), values.cols());
  const auto n_rows = static_cast<std::int64_t>(values.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n_rows; ++r) {
    const auto i = static_cast<std::size_t>(r);
    RscCurve curve = source == CurveSource::scores ? rsc_of_score_row(values.row(i))
                                                   : rsc_of_rank_row(values.row(i));
    std::copy(curve.begin(), curve.end(), out.row(i).begin());
  }
  return out;
}

double cognitive_diversity(std::span<const double> f_a, std::span<const double> f_b) {
  if (f_a.size() != f_b.size())
    throw InvalidInput("cognitive_diversity: curve length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < f_a.size(); ++i) {
    const double d = f_a[i] - f_b[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(f_a.size()));
}

Matrix cd_matrix(std::span<const Matrix> curves, std::size_t row) {
  const std::size_t t = curves.size();
  Matrix cd(t, t, 0.0);
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      const double v = cognitive_diversity(curves[a].row(row), curves[b].row(row));
      cd(a, b) = v;
      cd(b, a) = v;
    }
  }
  return cd;
}

double diversity_strength(const Matrix& cd, std::size_t j) {
  const std::size_t t = cd.rows();
  if (t < 2) throw InvalidInput("diversity_strength: needs at least two models");
  double sum = 0.0;
  for (std::size_t i = 0; i < t; ++i)
    if (i != j) sum += cd(j, i);
  return sum / static_cast<double>(t - 1);
}

Matrix ds_weights(std::span<const Matrix> curves) {
  const std::size_t t = curves.size();
  if (t < 2) throw InvalidInput("ds_weights: needs at least two models");
  const std::size_t n = curves.front().rows();
  for (const Matrix& c : curves)
    if (c.rows() != n || c.cols() != curves.front().cols())
      throw InvalidInput("ds_weights: curve matrices disagree in shape");

  Matrix ds(n, t);
  const auto n_rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n_rows; ++r) {
    const auto i = static_cast<std::size_t>(r);
    const Matrix cd = cd_matrix(curves, i);
    for (std::size_t j = 0; j < t; ++j) ds(i, j) = diversity_strength(cd, j);
  }
  return ds;
}

RscCurve average_rsc(const Matrix& curves) {
  if (curves.rows() == 0) throw InvalidInput("average_rsc: no curves");
  RscCurve mean(curves.cols(), 0.0);
  const auto n_cols = static_cast<std::int64_t>(curves.cols());
  // Column-wise so each entry is accumulated in sample order by one thread.
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n_cols; ++c) {
    const auto j = static_cast<std::size_t>(c);
    double sum = 0.0;
    for (std::size_t r = 0; r < curves.rows(); ++r) sum += curves(r, j);
    mean[j] = sum / static_cast<double>(curves.rows());
  }
  return mean;
}

}  // namespace cfa
