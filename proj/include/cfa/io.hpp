#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfa/matrix.hpp"
#include "cfa/pipeline.hpp"

namespace cfa {

/// Everything needed to replay a run; serialized verbatim into report.json.
struct RunManifest {
  std::vector<std::string> model_files;
  std::optional<std::string> labels_file;
  std::vector<WeightingScheme> schemes;
  std::size_t batch_size = 1024;
  TiePolicy tie_policy = TiePolicy::average;
  LabelMode mode = LabelMode::supervised;
  std::size_t k = 0;
  std::string output_dir;
  std::string tool_version;
  std::string timestamp;  // ISO 8601 UTC
};

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::ordered_json& j);

/// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Loads one model's score matrix from CSV: first row class names, data
/// rows finite decimals. model_id is the file stem. Parse diagnostics cite
/// (line, column), 1-based with the header on line 1.
ScoreMatrix load_score_csv(const std::filesystem::path& path);

/// Throws HeaderMismatch unless `other` carries exactly the class columns
/// of `first`, in the same order.
void check_class_names(const ScoreMatrix& first, const ScoreMatrix& other);

/// One label per line, either a class name or a 0-based index. Class names
/// win when a name could parse as a number.
Labels load_labels(const std::filesystem::path& path,
                   std::span<const std::string> class_names,
                   std::size_t expected_samples);

/// Writes a score/rank matrix in the input CSV format. Numbers use the
/// shortest round-trip decimal form, so load_score_csv reproduces the
/// matrix exactly.
void write_matrix_csv(const std::filesystem::path& path, const Matrix& values,
                      std::span<const std::string> class_names);

/// Average RSC curve as "rank,score" rows, rank = 1..n.
void write_rsc_csv(const std::filesystem::path& path, const RscCurve& curve);

/// Emits report.json, best_model.csv, predictions.csv, per-scheme trend
/// CSVs, per-model RSC CSVs, and (optionally) SVG renders into `dir`,
/// creating it if absent. Filesystem failures throw IoError.
void write_outputs(const LayerResult& result, const RunManifest& manifest,
                   std::span<const std::string> class_names,
                   const std::filesystem::path& dir, bool render_svg = false);

/// Shortest decimal form that parses back to the same double;
/// locale-independent.
std::string format_number(double value);

}  // namespace cfa
