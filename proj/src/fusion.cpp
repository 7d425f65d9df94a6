#include "cfa/fusion.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "cfa/ranking.hpp"

namespace cfa {

Combination::Combination(std::vector<std::size_t> member_indices)
    : members(std::move(member_indices)) {
  if (members.size() < 2) throw InvalidInput("combination needs at least two members");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InvalidInput("combination has a duplicate member");
}

std::string Combination::id(std::span<const std::string> model_ids) const {
  std::string out;
  for (std::size_t m : members) {
    if (!out.empty()) out += '+';
    out += model_ids[m];
  }
  return out;
}

bool combination_less(const Combination& a, const Combination& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                      b.members.begin(), b.members.end());
}

std::vector<Combination> enumerate_combinations(std::size_t n_models) {
  if (n_models < 2) throw InvalidInput("enumerate_combinations: needs at least two models");
  std::vector<Combination> out;
  for (std::size_t size = 2; size <= n_models; ++size) {
    std::vector<std::size_t> members(size);
    std::iota(members.begin(), members.end(), std::size_t{0});
    while (true) {
      out.push_back(Combination(members));
      // advance to the next lexicographic subset of this size
      std::size_t i = size;
      while (i > 0 && members[i - 1] == n_models - size + i - 1) --i;
      if (i == 0) break;
      ++members[i - 1];
      for (std::size_t j = i; j < size; ++j) members[j] = members[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Combination> enumerate_combinations(std::span<const std::string> model_ids) {
  return enumerate_combinations(model_ids.size());
}

WeightingScheme parse_scheme(std::string_view name) {
  if (name == "AC") return WeightingScheme::AC;
  if (name == "WCDS") return WeightingScheme::WCDS;
  if (name == "WCP") return WeightingScheme::WCP;
  throw InvalidInput("unknown weighting scheme '" + std::string(name) +
                     "' (expected AC|WCDS|WCP)");
}

std::string_view to_string(WeightingScheme scheme) {
  switch (scheme) {
    case WeightingScheme::AC: return "AC";
    case WeightingScheme::WCDS: return "WCDS";
    case WeightingScheme::WCP: return "WCP";
  }
  return "AC";
}

std::vector<WeightingScheme> parse_scheme_list(std::string_view csv) {
  std::vector<WeightingScheme> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view item = csv.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(parse_scheme(item));
    pos = comma + 1;
  }
  if (out.empty()) throw InvalidInput("empty weighting scheme list");
  return out;
}

WeightTable uniform_weights(std::size_t n_models) {
  WeightTable table;
  table.scheme = WeightingScheme::AC;
  table.scalar.assign(n_models, 1.0);
  return table;
}

WeightTable performance_weights(std::span<const Matrix> score_matrices,
                                const Labels& labels) {
  WeightTable table;
  table.scheme = WeightingScheme::WCP;
  table.scalar.reserve(score_matrices.size());
  for (const Matrix& scores : score_matrices) {
    if (scores.rows() != labels.size())
      throw InvalidInput("performance_weights: label count does not match samples");
    const Labels predicted = decode(scores, DecodeKind::score);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (predicted[i] == labels[i]) ++correct;
    table.scalar.push_back(static_cast<double>(correct) /
                           static_cast<double>(labels.size()));
  }
  return table;
}

WeightTable wcds_weights(std::span<const Matrix> curve_matrices) {
  WeightTable table;
  table.scheme = WeightingScheme::WCDS;
  table.per_sample = ds_weights(curve_matrices);
  return table;
}

WeightTable compute_weights(WeightingScheme scheme, std::span<const ScoreMatrix> scores,
                            const std::optional<Labels>& labels, CurveSource wcds_source,
                            TiePolicy ties) {
  switch (scheme) {
    case WeightingScheme::AC:
      return uniform_weights(scores.size());
    case WeightingScheme::WCP: {
      if (!labels) throw MissingLabels("WCP weighting needs labels (or pseudo-labels)");
      std::vector<Matrix> matrices;
      matrices.reserve(scores.size());
      for (const ScoreMatrix& s : scores) matrices.push_back(s.values);
      return performance_weights(matrices, *labels);
    }
    case WeightingScheme::WCDS: {
      std::vector<Matrix> curves;
      curves.reserve(scores.size());
      for (const ScoreMatrix& s : scores) {
        const Matrix values = wcds_source == CurveSource::scores
                                  ? s.values
                                  : rank_rows(s.values, ties);
        curves.push_back(rsc_curves(values, wcds_source));
      }
      return wcds_weights(curves);
    }
  }
  throw InvalidInput("compute_weights: unknown scheme");
}

std::string_view to_string(FusionKind kind) {
  return kind == FusionKind::score ? "score" : "rank";
}

std::string FusionModel::id(std::span<const std::string> model_ids) const {
  std::string out(to_string(scheme));
  out += ':';
  out += to_string(kind);
  out += ':';
  out += combo.id(model_ids);
  return out;
}

bool fusion_id_less(const FusionModel& a, const FusionModel& b) {
  if (a.combo != b.combo) return combination_less(a.combo, b.combo);
  if (a.kind != b.kind) return a.kind == FusionKind::score;
  return static_cast<int>(a.scheme) < static_cast<int>(b.scheme);
}

namespace {

void check_fusion_inputs(const Combination& combo, std::span<const Matrix> matrices,
                         const WeightTable& weights) {
  if (matrices.empty()) throw InvalidInput("fusion: no input matrices");
  const std::size_t n = matrices.front().rows();
  const std::size_t k = matrices.front().cols();
  for (const Matrix& m : matrices)
    if (m.rows() != n || m.cols() != k)
      throw InvalidInput("fusion: input matrices disagree in shape");
  if (weights.models() != matrices.size())
    throw InvalidInput("fusion: weight table does not cover all models");
  if (weights.is_per_sample() && weights.per_sample.rows() != n)
    throw InvalidInput("fusion: per-sample weights do not match sample count");
  for (std::size_t m : combo.members)
    if (m >= matrices.size()) throw InvalidInput("fusion: combination member out of range");
}

// Shared accumulation for both representations. `invert` switches the
// member weight w to 1/w after the zero test.
Matrix weighted_combination(const Combination& combo, std::span<const Matrix> matrices,
                            const WeightTable& weights, bool invert) {
  const std::size_t n = matrices.front().rows();
  const std::size_t k = matrices.front().cols();
  Matrix fused(n, k);
  const auto n_rows = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<std::pair<std::size_t, double>> active;  // (member, weight) with w > 0
    active.reserve(combo.size());
#pragma omp for schedule(static)
    for (std::int64_t row = 0; row < n_rows; ++row) {
      const auto r = static_cast<std::size_t>(row);
      active.clear();
      double den = 0.0;
      for (std::size_t m : combo.members) {
        const double w = weights.weight(m, r);
        if (w == 0.0) continue;
        const double effective = invert ? 1.0 / w : w;
        active.emplace_back(m, effective);
        den += effective;
      }
      auto out = fused.row(r);
      if (active.empty()) {
        // every member weight is zero: fall back to the unweighted mean
        const double inv = 1.0 / static_cast<double>(combo.size());
        for (std::size_t c = 0; c < k; ++c) {
          double num = 0.0;
          for (std::size_t m : combo.members) num += matrices[m](r, c);
          out[c] = num * inv;
        }
      } else {
        for (std::size_t c = 0; c < k; ++c) {
          double num = 0.0;
          for (const auto& [m, w] : active) num += w * matrices[m](r, c);
          out[c] = num / den;
        }
      }
    }
  }
  return fused;
}

}  // namespace

FusionModel fuse_scores(const Combination& combo, std::span<const Matrix> scores,
                        const WeightTable& weights) {
  check_fusion_inputs(combo, scores, weights);
  Matrix fused = weighted_combination(combo, scores, weights, /*invert=*/false);
  normalize_rows(fused);
  return {combo, FusionKind::score, weights.scheme, std::move(fused), std::nullopt};
}

FusionModel fuse_ranks(const Combination& combo, std::span<const Matrix> ranks,
                       const WeightTable& weights) {
  check_fusion_inputs(combo, ranks, weights);
  Matrix fused = weighted_combination(combo, ranks, weights, /*invert=*/true);
  return {combo, FusionKind::rank, weights.scheme, std::move(fused), std::nullopt};
}

CfaResult run_cfa(std::span<const Matrix> scores, std::span<const Matrix> ranks,
                  std::span<const SchemeWeights> weights,
                  std::span<const Combination> combinations) {
  if (weights.empty()) throw InvalidInput("run_cfa: no weighting schemes requested");
  if (scores.size() != ranks.size())
    throw InvalidInput("run_cfa: score/rank model counts disagree");
  for (std::size_t m = 0; m < scores.size(); ++m)
    if (scores[m].rows() != ranks[m].rows() || scores[m].cols() != ranks[m].cols())
      throw InvalidInput("run_cfa: score/rank matrices disagree in shape");

  CfaResult result;
  result.fused_scores.reserve(weights.size() * combinations.size());
  result.fused_ranks.reserve(weights.size() * combinations.size());
  for (const SchemeWeights& scheme : weights) {
    for (const Combination& combo : combinations)
      result.fused_scores.push_back(fuse_scores(combo, scores, scheme.score_weights));
    for (const Combination& combo : combinations)
      result.fused_ranks.push_back(fuse_ranks(combo, ranks, scheme.rank_weights));
  }
  return result;
}

}  // namespace cfa
