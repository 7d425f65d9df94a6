#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfa/matrix.hpp"
#include "cfa/rsc.hpp"

namespace cfa {

/// A subset of at least two models, stored as ascending indices into the
/// canonical (input) model order. Member order is canonicalized on
/// construction, so permuting the input changes nothing downstream.
struct Combination {
  std::vector<std::size_t> members;

  Combination() = default;
  explicit Combination(std::vector<std::size_t> member_indices);

  std::size_t size() const { return members.size(); }

  /// Display id, e.g. "A+C+D".
  std::string id(std::span<const std::string> model_ids) const;

  friend bool operator==(const Combination&, const Combination&) = default;
};

/// Smaller subsets first, then lexicographic over member indices.
bool combination_less(const Combination& a, const Combination& b);

/// All subsets of size 2..t in deterministic order (by size, then
/// lexicographic over the input model order). Requires t >= 2.
std::vector<Combination> enumerate_combinations(std::size_t n_models);
std::vector<Combination> enumerate_combinations(std::span<const std::string> model_ids);

enum class WeightingScheme { AC, WCDS, WCP };

WeightingScheme parse_scheme(std::string_view name);
std::string_view to_string(WeightingScheme scheme);

/// Parses a comma-delimited scheme list, e.g. "AC,WCDS,WCP".
std::vector<WeightingScheme> parse_scheme_list(std::string_view csv);

/// Per-model fusion weights. Scalar schemes (AC, WCP) carry one value per
/// model; WCDS carries one value per model per sample row.
struct WeightTable {
  WeightingScheme scheme = WeightingScheme::AC;
  std::vector<double> scalar;  // per model; used when per_sample is empty
  Matrix per_sample;           // [n_rows x t]

  bool is_per_sample() const { return !per_sample.empty(); }
  std::size_t models() const {
    return is_per_sample() ? per_sample.cols() : scalar.size();
  }
  double weight(std::size_t model, std::size_t row) const {
    return is_per_sample() ? per_sample(row, model) : scalar[model];
  }
};

WeightTable uniform_weights(std::size_t n_models);

/// Scalar weights from each model's accuracy fraction in [0, 1] against
/// `labels` (argmax decoding). 0%-accuracy models end up with weight 0 and
/// are skipped by the fusion rule.
WeightTable performance_weights(std::span<const Matrix> score_matrices, const Labels& labels);

/// Per-sample diversity-strength weights from the given curve matrices.
WeightTable wcds_weights(std::span<const Matrix> curve_matrices);

/// Scheme dispatcher over loaded score matrices. WCP requires labels
/// (MissingLabels otherwise); WCDS draws curves from `wcds_source` —
/// rank curves are derived with `ties` when needed.
WeightTable compute_weights(WeightingScheme scheme, std::span<const ScoreMatrix> scores,
                            const std::optional<Labels>& labels,
                            CurveSource wcds_source = CurveSource::scores,
                            TiePolicy ties = TiePolicy::average);

enum class FusionKind { score, rank };

std::string_view to_string(FusionKind kind);

/// One fused model: the member subset, the representation it was fused in,
/// the weighting scheme, and the fused matrix. Score-kind matrices are
/// min-max normalized per row; rank-kind matrices are raw weighted means.
struct FusionModel {
  Combination combo;
  FusionKind kind = FusionKind::score;
  WeightingScheme scheme = WeightingScheme::AC;
  Matrix values;
  std::optional<double> accuracy;

  /// "WCDS:score:A+B" — scheme, kind, member ids.
  std::string id(std::span<const std::string> model_ids) const;
};

/// Canonical ordering used for deterministic tie-breaks: combination first,
/// then kind (score before rank), then scheme.
bool fusion_id_less(const FusionModel& a, const FusionModel& b);

/// Weighted score combination over the members of `combo`:
///   fused = sum(w_m * S_m) / sum(w_m),
/// skipping members with zero weight. Rows where every member weight is
/// zero fall back to the unweighted member mean. The result is min-max
/// normalized per row. Parallel across rows.
FusionModel fuse_scores(const Combination& combo, std::span<const Matrix> scores,
                        const WeightTable& weights);

/// Weighted rank combination with inverted weights:
///   fused = sum(R_m / w_m) / sum(1 / w_m),
/// with the same zero-weight skip and all-zero fallback. Output ranks are
/// left unnormalized. Parallel across rows.
FusionModel fuse_ranks(const Combination& combo, std::span<const Matrix> ranks,
                       const WeightTable& weights);

/// Weight tables for one scheme; score and rank fusion may weight by
/// diversity in their own representation, hence the pair.
struct SchemeWeights {
  WeightingScheme scheme = WeightingScheme::AC;
  WeightTable score_weights;
  WeightTable rank_weights;
};

struct CfaResult {
  std::vector<FusionModel> fused_scores;  // scheme-major, combination order
  std::vector<FusionModel> fused_ranks;
};

/// Fuses every (scheme, combination) pair in both representations:
/// t models and one scheme yield 2 * (2^t - t - 1) fused models.
CfaResult run_cfa(std::span<const Matrix> scores, std::span<const Matrix> ranks,
                  std::span<const SchemeWeights> weights,
                  std::span<const Combination> combinations);

}  // namespace cfa
