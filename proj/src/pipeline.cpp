#include "cfa/pipeline.hpp"

#include <algorithm>

#include "cfa/ranking.hpp"

namespace cfa {

std::string_view to_string(LabelMode mode) {
  return mode == LabelMode::supervised ? "supervised" : "unsupervised";
}

std::vector<RowRange> split_batches(std::size_t n_samples, std::size_t batch_size) {
  if (batch_size < 1) throw InvalidInput("split_batches: batch size must be >= 1");
  std::vector<RowRange> out;
  for (std::size_t begin = 0; begin < n_samples; begin += batch_size)
    out.push_back({begin, std::min(begin + batch_size, n_samples)});
  return out;
}

Matrix merge_batches(std::span<const Matrix> parts, std::size_t expected_rows) {
  if (parts.empty()) throw InternalError("merge_batches: no parts");
  const std::size_t cols = parts.front().cols();
  std::size_t total = 0;
  for (const Matrix& p : parts) {
    if (p.cols() != cols) throw InternalError("merge_batches: column count mismatch");
    total += p.rows();
  }
  if (total != expected_rows)
    throw InternalError("merge_batches: parts cover " + std::to_string(total) +
                        " rows, expected " + std::to_string(expected_rows));
  Matrix out(total, cols);
  std::size_t row = 0;
  for (const Matrix& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      const auto src = p.row(r);
      std::copy(src.begin(), src.end(), out.row(row).begin());
      ++row;
    }
  }
  return out;
}

namespace {

void validate_config(const LayerConfig& config) {
  if (config.models.size() < 2)
    throw InvalidInput("run_layer: needs at least two base models");
  const ScoreMatrix& first = config.models.front();
  first.validate();
  for (const ScoreMatrix& m : config.models) {
    m.validate();
    if (m.n_samples() != first.n_samples() || m.n_classes() != first.n_classes())
      throw InvalidInput("run_layer: model '" + m.model_id + "' disagrees in shape");
    if (m.class_names != first.class_names)
      throw InvalidInput("run_layer: model '" + m.model_id + "' disagrees in class names");
  }
  for (std::size_t i = 0; i < config.models.size(); ++i)
    for (std::size_t j = i + 1; j < config.models.size(); ++j)
      if (config.models[i].model_id == config.models[j].model_id)
        throw InvalidInput("run_layer: duplicate model id '" + config.models[i].model_id + "'");
  if (config.schemes.empty()) throw InvalidInput("run_layer: no weighting schemes");
  for (std::size_t i = 0; i < config.schemes.size(); ++i)
    for (std::size_t j = i + 1; j < config.schemes.size(); ++j)
      if (config.schemes[i] == config.schemes[j])
        throw InvalidInput("run_layer: duplicate weighting scheme");
  if (config.batch_size < 1) throw InvalidInput("run_layer: batch size must be >= 1");
  if (config.mode == LabelMode::supervised) {
    if (!config.labels) throw MissingLabels("run_layer: supervised mode needs labels");
    if (config.labels->size() != first.n_samples())
      throw InvalidInput("run_layer: label count does not match samples");
    for (std::size_t v : *config.labels)
      if (v >= first.n_classes()) throw InvalidInput("run_layer: label index out of range");
  }
}

}  // namespace

LayerResult run_layer(const LayerConfig& config) {
  validate_config(config);

  const std::size_t t = config.models.size();
  const std::size_t n = config.models.front().n_samples();
  const std::size_t n_classes = config.models.front().n_classes();
  const std::size_t k = config.k == 0 ? t : config.k;

  std::vector<std::string> model_ids;
  model_ids.reserve(t);
  for (const ScoreMatrix& m : config.models) model_ids.push_back(m.model_id);

  // Rank derivation happens once, up front; every later step is row-local.
  std::vector<Matrix> ranks;
  ranks.reserve(t);
  for (const ScoreMatrix& m : config.models)
    ranks.push_back(rank_rows(m.values, config.tie_policy));

  std::vector<Labels> base_predictions;
  base_predictions.reserve(t);
  for (const ScoreMatrix& m : config.models)
    base_predictions.push_back(decode(m.values, DecodeKind::score));

  LayerResult result;
  result.used_pseudo_labels = config.mode == LabelMode::unsupervised;
  const Labels eval_labels = result.used_pseudo_labels
                                 ? majority_vote(base_predictions, n_classes)
                                 : *config.labels;

  std::vector<double> base_acc(t);
  for (std::size_t m = 0; m < t; ++m) {
    base_acc[m] = accuracy(base_predictions[m], eval_labels);
    result.base_accuracies.push_back({model_ids[m], base_acc[m]});
  }
  const double base_max = *std::max_element(base_acc.begin(), base_acc.end());

  const std::vector<Combination> combos = enumerate_combinations(t);
  const std::size_t n_combos = combos.size();
  const std::size_t n_schemes = config.schemes.size();

  // WCP weights are dataset-global accuracies, fixed before batching.
  WeightTable wcp_table;
  const bool wants_wcp = std::find(config.schemes.begin(), config.schemes.end(),
                                   WeightingScheme::WCP) != config.schemes.end();
  if (wants_wcp) {
    std::vector<Matrix> score_values;
    score_values.reserve(t);
    for (const ScoreMatrix& m : config.models) score_values.push_back(m.values);
    wcp_table = performance_weights(score_values, eval_labels);
  }

  // slot = kind * (n_schemes * n_combos) + scheme * n_combos + combo
  const std::size_t n_per_kind = n_schemes * n_combos;
  std::vector<std::vector<Matrix>> parts(2 * n_per_kind);
  const std::vector<RowRange> batches = split_batches(n, config.batch_size);
  for (auto& p : parts) p.reserve(batches.size());

  for (const RowRange& batch : batches) {
    std::vector<Matrix> score_slices;
    std::vector<Matrix> rank_slices;
    score_slices.reserve(t);
    rank_slices.reserve(t);
    for (std::size_t m = 0; m < t; ++m) {
      score_slices.push_back(config.models[m].values.slice_rows(batch.begin, batch.end));
      rank_slices.push_back(ranks[m].slice_rows(batch.begin, batch.end));
    }

    std::vector<SchemeWeights> scheme_weights;
    scheme_weights.reserve(n_schemes);
    for (WeightingScheme scheme : config.schemes) {
      SchemeWeights sw;
      sw.scheme = scheme;
      switch (scheme) {
        case WeightingScheme::AC:
          sw.score_weights = uniform_weights(t);
          sw.rank_weights = sw.score_weights;
          break;
        case WeightingScheme::WCP:
          sw.score_weights = wcp_table;
          sw.rank_weights = wcp_table;
          break;
        case WeightingScheme::WCDS: {
          std::vector<Matrix> score_curves;
          score_curves.reserve(t);
          for (const Matrix& s : score_slices)
            score_curves.push_back(rsc_curves(s, CurveSource::scores));
          sw.score_weights = wcds_weights(score_curves);
          if (config.wcds_rank_curves == CurveSource::ranks) {
            std::vector<Matrix> rank_curves;
            rank_curves.reserve(t);
            for (const Matrix& r : rank_slices)
              rank_curves.push_back(rsc_curves(r, CurveSource::ranks));
            sw.rank_weights = wcds_weights(rank_curves);
          } else {
            sw.rank_weights = sw.score_weights;
          }
          break;
        }
      }
      scheme_weights.push_back(std::move(sw));
    }

    const CfaResult cfa = run_cfa(score_slices, rank_slices, scheme_weights, combos);
    for (std::size_t s = 0; s < n_schemes; ++s) {
      for (std::size_t c = 0; c < n_combos; ++c) {
        parts[s * n_combos + c].push_back(cfa.fused_scores[s * n_combos + c].values);
        parts[n_per_kind + s * n_combos + c].push_back(
            cfa.fused_ranks[s * n_combos + c].values);
      }
    }
  }

  // All score models first, then all rank models; scheme-major within a kind.
  std::vector<FusionModel> fused;
  fused.reserve(2 * n_per_kind);
  for (std::size_t kind = 0; kind < 2; ++kind) {
    for (std::size_t s = 0; s < n_schemes; ++s) {
      for (std::size_t c = 0; c < n_combos; ++c) {
        const std::size_t slot = kind * n_per_kind + s * n_combos + c;
        FusionModel model;
        model.combo = combos[c];
        model.kind = kind == 0 ? FusionKind::score : FusionKind::rank;
        model.scheme = config.schemes[s];
        model.values = merge_batches(parts[slot], n);
        std::vector<Matrix>().swap(parts[slot]);  // release batch parts early
        const Labels predicted =
            decode(model.values, kind == 0 ? DecodeKind::score : DecodeKind::rank);
        model.accuracy = accuracy(predicted, eval_labels);
        fused.push_back(std::move(model));
      }
    }
  }

  for (const FusionModel& model : fused)
    result.fused_accuracies.push_back({model.id(model_ids), *model.accuracy});

  // Top-k within the score and rank groups, then a merged top-k across both.
  const std::span<const FusionModel> all(fused);
  const std::vector<std::size_t> top_score = top_k(all.subspan(0, n_per_kind), base_max, k);
  std::vector<std::size_t> top_rank = top_k(all.subspan(n_per_kind), base_max, k);
  std::vector<std::size_t> merged;
  merged.reserve(top_score.size() + top_rank.size());
  merged.insert(merged.end(), top_score.begin(), top_score.end());
  for (std::size_t i : top_rank) merged.push_back(n_per_kind + i);
  std::sort(merged.begin(), merged.end(), [&](std::size_t a, std::size_t b) {
    if (*fused[a].accuracy != *fused[b].accuracy)
      return *fused[a].accuracy > *fused[b].accuracy;
    return fusion_id_less(fused[a], fused[b]);
  });
  if (merged.size() > k) merged.resize(k);

  for (std::size_t i : merged)
    result.top_models.push_back({fused[i].id(model_ids), *fused[i].accuracy});

  Selection selection = select_output(merged, fused, config.models, base_acc);
  result.best = selection.best;
  result.best_matrix = std::move(selection.matrix);
  result.predictions = std::move(selection.predictions);

  for (std::size_t s = 0; s < n_schemes; ++s) {
    SchemeTrend trend;
    trend.scheme = config.schemes[s];
    trend.rows.reserve(n_combos);
    for (std::size_t c = 0; c < n_combos; ++c) {
      trend.rows.push_back({combos[c].id(model_ids),
                            *fused[s * n_combos + c].accuracy,
                            *fused[n_per_kind + s * n_combos + c].accuracy});
    }
    result.trends.push_back(std::move(trend));
  }

  for (std::size_t m = 0; m < t; ++m) {
    const Matrix curves = rsc_curves(config.models[m].values, CurveSource::scores);
    result.average_rsc.push_back({model_ids[m], average_rsc(curves)});
  }

  return result;
}

}  // namespace cfa
