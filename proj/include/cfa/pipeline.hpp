#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cfa/evaluation.hpp"
#include "cfa/fusion.hpp"
#include "cfa/matrix.hpp"
#include "cfa/rsc.hpp"

namespace cfa {

enum class LabelMode { supervised, unsupervised };

std::string_view to_string(LabelMode mode);

struct LayerConfig {
  std::vector<ScoreMatrix> models;  // canonical model order
  std::optional<Labels> labels;
  std::vector<WeightingScheme> schemes;
  std::size_t batch_size = 1024;
  TiePolicy tie_policy = TiePolicy::average;
  LabelMode mode = LabelMode::supervised;
  std::size_t k = 0;          // 0 -> number of base models
  std::string output_dir;     // where cli-io persists the results
  // Representation feeding the DS weights of rank-kind WCDS fusion.
  CurveSource wcds_rank_curves = CurveSource::ranks;
};

struct TrendRow {
  std::string combination;
  double score_accuracy = 0.0;
  double rank_accuracy = 0.0;
};

struct SchemeTrend {
  WeightingScheme scheme = WeightingScheme::AC;
  std::vector<TrendRow> rows;  // one per combination, enumeration order
};

struct ModelRsc {
  std::string model_id;
  RscCurve curve;  // average RSC over all samples
};

struct LayerResult {
  BestModel best;
  Matrix best_matrix;
  Labels predictions;
  AccuracyReport base_accuracies;   // input model order
  AccuracyReport fused_accuracies;  // scheme-major, scores then ranks
  AccuracyReport top_models;        // merged top-k
  std::vector<SchemeTrend> trends;
  std::vector<ModelRsc> average_rsc;
  bool used_pseudo_labels = false;
};

struct RowRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

/// Contiguous, ordered, disjoint ranges covering [0, n_samples); the last
/// batch may be short.
std::vector<RowRange> split_batches(std::size_t n_samples, std::size_t batch_size);

/// Row-wise concatenation of per-batch parts in range order. Throws
/// InternalError if widths disagree or row counts do not add up to
/// `expected_rows`.
Matrix merge_batches(std::span<const Matrix> parts, std::size_t expected_rows);

/// One full layer pass: rank derivation, per-batch weights and fusion,
/// concatenation, accuracy evaluation, within-group and merged top-k,
/// final selection. Deterministic regardless of batch size or thread count.
LayerResult run_layer(const LayerConfig& config);

}  // namespace cfa
