#pragma once

#include <span>
#include <vector>

#include "cfa/matrix.hpp"

namespace cfa {

enum class DecodeKind { score, rank };

/// Row-wise ranking by descending score: the row maximum gets rank 1.
/// Ties are resolved per `policy`; `ordinal` breaks them by ascending
/// class index. Parallel across rows.
Matrix rank_rows(const Matrix& scores, TiePolicy policy = TiePolicy::average);
RankMatrix rank_rows(const ScoreMatrix& scores, TiePolicy policy = TiePolicy::average);

/// Min-max normalization of one row into [0, 1]. Constant rows map to all
/// zeros (0/0 := 0).
std::vector<double> normalize_row_scores(std::span<const double> row);

/// Min-max normalizes every row in place. Parallel across rows.
void normalize_rows(Matrix& m);

/// Maps ranks into score space: (n - r) / (n - 1), so rank 1 -> 1.0 and
/// rank n -> 0.0. Requires n >= 2.
std::vector<double> rank_to_score(std::span<const double> row_ranks, std::size_t n);

/// Per-row argmax (scores) or argmin (ranks); ties break toward the lowest
/// class index.
std::size_t decode_row(std::span<const double> row, DecodeKind kind);
Labels decode(const Matrix& m, DecodeKind kind);

}  // namespace cfa
