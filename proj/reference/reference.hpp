#pragma once

#include <span>

#include "cfa/fusion.hpp"
#include "cfa/matrix.hpp"

// Serial scalar reference implementations. These mirror the library
// contracts through independent algorithms (counting-based ranks, plain
// triple-loop fusion) and exist for tests and the benchmark only — never
// link them into the tool.
namespace cfa::ref {

/// Counting-based per-row ranks, no sorting. O(n^2) per row.
Matrix rank_rows(const Matrix& scores, TiePolicy policy);

/// Per-sample diversity strength via plain pairwise loops, [n_samples x t].
Matrix ds_weights(std::span<const Matrix> curves);

/// Scalar weighted score combination: zero-weight skip, unweighted-mean
/// fallback, per-row min-max normalization — all inline loops.
Matrix fuse_scores(const Combination& combo, std::span<const Matrix> scores,
                   const WeightTable& weights);

/// Scalar inverse-weighted rank combination with the same skip/fallback.
Matrix fuse_ranks(const Combination& combo, std::span<const Matrix> ranks,
                  const WeightTable& weights);

}  // namespace cfa::ref
