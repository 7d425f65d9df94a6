#pragma once

#include <span>
#include <vector>

#include "cfa/matrix.hpp"

namespace cfa {

/// Rank-score characteristic of one sample row: its normalized scores in
/// descending order, so curve[i] is the score at rank i+1. Non-degenerate
/// rows start at 1 and end at 0.
using RscCurve = std::vector<double>;

enum class CurveSource { scores, ranks };

RscCurve rsc_of_score_row(std::span<const double> row);
RscCurve rsc_of_rank_row(std::span<const double> row_ranks);

/// RSC curves for every row of one model, stacked into an
/// [n_samples x n_classes] matrix. Parallel across rows.
Matrix rsc_curves(const Matrix& values, CurveSource source);

/// RMS distance between two RSC curves of equal length.
double cognitive_diversity(std::span<const double> f_a, std::span<const double> f_b);

/// Pairwise CD between t models on one sample row; symmetric with a zero
/// diagonal. `curves[m]` holds model m's curve matrix.
Matrix cd_matrix(std::span<const Matrix> curves, std::size_t row);

/// Mean CD of model j against every other model: requires t >= 2.
double diversity_strength(const Matrix& cd, std::size_t j);

/// Per-sample diversity strength for all models, [n_samples x t].
/// Parallel across samples.
Matrix ds_weights(std::span<const Matrix> curves);

/// Element-wise mean of one model's curves across samples.
RscCurve average_rsc(const Matrix& curves);

}  // namespace cfa
