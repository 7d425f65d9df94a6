#include "reference.hpp"

#include <cmath>

namespace cfa::ref {

Matrix rank_rows(const Matrix& scores, TiePolicy policy) {
  const std::size_t n_rows = scores.rows();
  const std::size_t n = scores.cols();
  Matrix ranks(n_rows, n);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = scores(r, j);
      std::size_t greater = 0, equal = 0, equal_before = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (scores(r, i) > v) ++greater;
        if (scores(r, i) == v) {
          ++equal;
          if (i < j) ++equal_before;
        }
      }
      const double first = static_cast<double>(greater + 1);
      const double last = static_cast<double>(greater + equal);
      double rank = 0.0;
      switch (policy) {
        case TiePolicy::average: rank = (first + last) / 2.0; break;
        case TiePolicy::min: rank = first; break;
        case TiePolicy::max: rank = last; break;
        case TiePolicy::ordinal: rank = first + static_cast<double>(equal_before); break;
        case TiePolicy::dense: {
          // 1 + number of distinct values strictly greater than v
          std::size_t distinct = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (scores(r, i) <= v) continue;
            bool seen = false;
            for (std::size_t p = 0; p < i; ++p)
              if (scores(r, p) == scores(r, i)) {
                seen = true;
                break;
              }
            if (!seen) ++distinct;
          }
          rank = static_cast<double>(distinct + 1);
          break;
        }
      }
      ranks(r, j) = rank;
    }
  }
  return ranks;
}

Matrix ds_weights(std::span<const Matrix> curves) {
  const std::size_t t = curves.size();
  const std::size_t n_rows = curves.front().rows();
  const std::size_t n = curves.front().cols();
  Matrix ds(n_rows, t);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t j = 0; j < t; ++j) {
      double sum = 0.0;
      for (std::size_t i = 0; i < t; ++i) {
        if (i == j) continue;
        double sq = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
          const double d = curves[j](r, c) - curves[i](r, c);
          sq += d * d;
        }
        sum += std::sqrt(sq / static_cast<double>(n));
      }
      ds(r, j) = sum / static_cast<double>(t - 1);
    }
  }
  return ds;
}

namespace {

double member_weight(const WeightTable& weights, std::size_t model, std::size_t row) {
  return weights.is_per_sample() ? weights.per_sample(row, model) : weights.scalar[model];
}

}  // namespace

Matrix fuse_scores(const Combination& combo, std::span<const Matrix> scores,
                   const WeightTable& weights) {
  const std::size_t n_rows = scores.front().rows();
  const std::size_t n_cols = scores.front().cols();
  Matrix fused(n_rows, n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    double den = 0.0;
    for (std::size_t m : combo.members) {
      const double w = member_weight(weights, m, r);
      if (w > 0.0) den += w;
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (den > 0.0) {
        double num = 0.0;
        for (std::size_t m : combo.members) {
          const double w = member_weight(weights, m, r);
          if (w > 0.0) num += w * scores[m](r, c);
        }
        fused(r, c) = num / den;
      } else {
        double num = 0.0;
        for (std::size_t m : combo.members) num += scores[m](r, c);
        fused(r, c) = num / static_cast<double>(combo.members.size());
      }
    }
    // scalar min-max normalization of the fused row
    double lo = fused(r, 0), hi = fused(r, 0);
    for (std::size_t c = 1; c < n_cols; ++c) {
      if (fused(r, c) < lo) lo = fused(r, c);
      if (fused(r, c) > hi) hi = fused(r, c);
    }
    for (std::size_t c = 0; c < n_cols; ++c)
      fused(r, c) = hi == lo ? 0.0 : (fused(r, c) - lo) / (hi - lo);
  }
  return fused;
}

Matrix fuse_ranks(const Combination& combo, std::span<const Matrix> ranks,
                  const WeightTable& weights) {
  const std::size_t n_rows = ranks.front().rows();
  const std::size_t n_cols = ranks.front().cols();
  Matrix fused(n_rows, n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    double den = 0.0;
    for (std::size_t m : combo.members) {
      const double w = member_weight(weights, m, r);
      if (w > 0.0) den += 1.0 / w;
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (den > 0.0) {
        double num = 0.0;
        for (std::size_t m : combo.members) {
          const double w = member_weight(weights, m, r);
          if (w > 0.0) num += ranks[m](r, c) / w;
        }
        fused(r, c) = num / den;
      } else {
        double num = 0.0;
        for (std::size_t m : combo.members) num += ranks[m](r, c);
        fused(r, c) = num / static_cast<double>(combo.members.size());
      }
    }
  }
  return fused;
}

}  // namespace cfa::ref
