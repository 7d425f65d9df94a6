#include "cfa/ranking.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace cfa {

namespace {

// Ranks one row into `out`. `order` is scratch of the same length.
void rank_row(std::span<const double> row, TiePolicy policy,
              std::span<std::size_t> order, std::span<double> out) {
  const std::size_t n = row.size();
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return a < b;  // descending score, ascending class index
  });

  std::size_t group = 0;  // 1-based tie-group counter for dense ranks
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t end = pos + 1;
    while (end < n && row[order[end]] == row[order[pos]]) ++end;
    ++group;
    for (std::size_t i = pos; i < end; ++i) {
      double rank = 0.0;
      switch (policy) {
        case TiePolicy::average:
          rank = (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
          break;
        case TiePolicy::min: rank = static_cast<double>(pos + 1); break;
        case TiePolicy::max: rank = static_cast<double>(end); break;
        case TiePolicy::dense: rank = static_cast<double>(group); break;
        case TiePolicy::ordinal: rank = static_cast<double>(i + 1); break;
      }
      out[order[i]] = rank;
    }
    pos = end;
  }
}

}  // namespace

Matrix rank_rows(const Matrix& scores, TiePolicy policy) {
  if (!scores.all_finite()) throw InvalidInput("rank_rows: non-finite score entry");
  Matrix ranks(scores.rows(), scores.cols());
  const auto n_rows = static_cast<std::int64_t>(scores.rows());
#pragma omp parallel
  {
    std::vector<std::size_t> order(scores.cols());
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < n_rows; ++r) {
      rank_row(scores.row(static_cast<std::size_t>(r)), policy, order,
               ranks.row(static_cast<std::size_t>(r)));
    }
  }
  return ranks;
}

RankMatrix rank_rows(const ScoreMatrix& scores, TiePolicy policy) {
  scores.validate();
  return {scores.model_id, rank_rows(scores.values, policy)};
}

std::vector<double> normalize_row_scores(std::span<const double> row) {
  std::vector<double> out(row.begin(), row.end());
  auto [lo, hi] = std::minmax_element(out.begin(), out.end());
  const double range = *hi - *lo;
  if (range == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return out;
  }
  const double min = *lo;
  for (double& v : out) v = (v - min) / range;
  return out;
}

void normalize_rows(Matrix& m) {
  const auto n_rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n_rows; ++r) {
    auto row = m.row(static_cast<std::size_t>(r));
    auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    const double min = *lo;
    const double range = *hi - min;
    if (range == 0.0) {
      std::fill(row.begin(), row.end(), 0.0);
    } else {
      for (double& v : row) v = (v - min) / range;
    }
  }
}

std::vector<double> rank_to_score(std::span<const double> row_ranks, std::size_t n) {
  if (n < 2) throw InvalidInput("rank_to_score: needs n >= 2");
  std::vector<double> out(row_ranks.size());
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < row_ranks.size(); ++i)
    out[i] = (static_cast<double>(n) - row_ranks[i]) / denom;
  return out;
}

std::size_t decode_row(std::span<const double> row, DecodeKind kind) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < row.size(); ++i) {
    const bool better = kind == DecodeKind::score ? row[i] > row[best] : row[i] < row[best];
    if (better) best = i;
  }
  return best;
}

Labels decode(const Matrix& m, DecodeKind kind) {
  Labels out(m.rows());
  const auto n_rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n_rows; ++r)
    out[static_cast<std::size_t>(r)] = decode_row(m.row(static_cast<std::size_t>(r)), kind);
  return out;
}

}  // namespace cfa
