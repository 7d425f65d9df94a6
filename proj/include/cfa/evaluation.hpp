#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfa/fusion.hpp"
#include "cfa/matrix.hpp"

namespace cfa {

/// Percentage of matching entries, in [0, 100].
double accuracy(const Labels& predictions, const Labels& truth);

/// Per-sample plurality vote over base-model predictions; ties break toward
/// the lowest class index.
Labels majority_vote(std::span<const Labels> base_predictions, std::size_t n_classes);

struct AccuracyEntry {
  std::string id;
  double accuracy = 0.0;
};
using AccuracyReport = std::vector<AccuracyEntry>;

/// Indices of the fused models whose accuracy strictly exceeds `base_max`,
/// best first, truncated to k. Accuracy ties break by canonical model order
/// (smaller combination first, then lexicographic, then kind, then scheme).
std::vector<std::size_t> top_k(std::span<const FusionModel> fused, double base_max,
                               std::size_t k);

enum class BestKind { score, rank, base };

std::string_view to_string(BestKind kind);

struct BestModel {
  std::string id;
  double accuracy = 0.0;
  BestKind kind = BestKind::base;
  std::optional<WeightingScheme> scheme;
};

struct Selection {
  BestModel best;
  Matrix matrix;       // the selected model's score or rank matrix
  Labels predictions;  // its decoded labels
};

/// The head of the top-k list when it is non-empty; otherwise the best base
/// model (first in input order on ties). The selected accuracy is never
/// below the best base accuracy.
Selection select_output(std::span<const std::size_t> top,
                        std::span<const FusionModel> fused,
                        std::span<const ScoreMatrix> base_models,
                        std::span<const double> base_accuracies);

}  // namespace cfa
