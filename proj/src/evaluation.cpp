#include "cfa/evaluation.hpp"

#include <algorithm>
#include <cstdint>

#include "cfa/ranking.hpp"

namespace cfa {

double accuracy(const Labels& predictions, const Labels& truth) {
  if (predictions.size() != truth.size())
    throw InvalidInput("accuracy: prediction/truth length mismatch");
  if (truth.empty()) throw InvalidInput("accuracy: empty labels");
  std::int64_t correct = 0;
  const auto n = static_cast<std::int64_t>(truth.size());
#pragma omp parallel for schedule(static) reduction(+ : correct)
  for (std::int64_t i = 0; i < n; ++i)
    if (predictions[static_cast<std::size_t>(i)] == truth[static_cast<std::size_t>(i)])
      ++correct;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(truth.size());
}

Labels majority_vote(std::span<const Labels> base_predictions, std::size_t n_classes) {
  if (base_predictions.empty()) throw InvalidInput("majority_vote: no base predictions");
  const std::size_t n = base_predictions.front().size();
  for (const Labels& p : base_predictions)
    if (p.size() != n) throw InvalidInput("majority_vote: prediction length mismatch");

  Labels out(n);
  const auto n_rows = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<std::size_t> votes(n_classes);
#pragma omp for schedule(static)
    for (std::int64_t row = 0; row < n_rows; ++row) {
      const auto i = static_cast<std::size_t>(row);
      std::fill(votes.begin(), votes.end(), std::size_t{0});
      for (const Labels& p : base_predictions) ++votes[p[i]];
      std::size_t winner = 0;
      for (std::size_t c = 1; c < n_classes; ++c)
        if (votes[c] > votes[winner]) winner = c;  // tie keeps the lower index
      out[i] = winner;
    }
  }
  return out;
}

std::vector<std::size_t> top_k(std::span<const FusionModel> fused, double base_max,
                               std::size_t k) {
  std::vector<std::size_t> qualifying;
  for (std::size_t i = 0; i < fused.size(); ++i) {
    if (fused[i].accuracy && *fused[i].accuracy > base_max) qualifying.push_back(i);
  }
  std::sort(qualifying.begin(), qualifying.end(), [&](std::size_t a, std::size_t b) {
    if (*fused[a].accuracy != *fused[b].accuracy)
      return *fused[a].accuracy > *fused[b].accuracy;
    return fusion_id_less(fused[a], fused[b]);
  });
  if (qualifying.size() > k) qualifying.resize(k);
  return qualifying;
}

std::string_view to_string(BestKind kind) {
  switch (kind) {
    case BestKind::score: return "score";
    case BestKind::rank: return "rank";
    case BestKind::base: return "base";
  }
  return "base";
}

Selection select_output(std::span<const std::size_t> top,
                        std::span<const FusionModel> fused,
                        std::span<const ScoreMatrix> base_models,
                        std::span<const double> base_accuracies) {
  if (base_models.empty() || base_models.size() != base_accuracies.size())
    throw InvalidInput("select_output: base models and accuracies disagree");

  std::vector<std::string> ids;
  ids.reserve(base_models.size());
  for (const ScoreMatrix& m : base_models) ids.push_back(m.model_id);

  if (!top.empty()) {
    const FusionModel& winner = fused[top.front()];
    Selection sel;
    sel.best.id = winner.id(ids);
    sel.best.accuracy = *winner.accuracy;
    sel.best.kind = winner.kind == FusionKind::score ? BestKind::score : BestKind::rank;
    sel.best.scheme = winner.scheme;
    sel.matrix = winner.values;
    sel.predictions = decode(winner.values, winner.kind == FusionKind::score
                                                ? DecodeKind::score
                                                : DecodeKind::rank);
    return sel;
  }

  // Fallback: no fused model beats the best base model.
  std::size_t best = 0;
  for (std::size_t i = 1; i < base_accuracies.size(); ++i)
    if (base_accuracies[i] > base_accuracies[best]) best = i;
  Selection sel;
  sel.best.id = base_models[best].model_id;
  sel.best.accuracy = base_accuracies[best];
  sel.best.kind = BestKind::base;
  sel.matrix = base_models[best].values;
  sel.predictions = decode(sel.matrix, DecodeKind::score);
  return sel;
}

}  // namespace cfa
