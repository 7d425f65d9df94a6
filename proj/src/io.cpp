#include "cfa/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cfa/svg.hpp"
#include "cfa/version.hpp"

namespace cfa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(pos)));
      break;
    }
    cells.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return cells;
}

double parse_cell(std::string_view cell, const std::filesystem::path& path,
                  std::size_t line, std::size_t col) {
  double value = 0.0;
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(path.string() + ": cannot parse cell '" + std::string(cell) +
                     "' at (" + std::to_string(line) + "," + std::to_string(col) + ")");
  if (!std::isfinite(value))
    throw ParseError(path.string() + ": non-finite value at (" + std::to_string(line) +
                     "," + std::to_string(col) + ")");
  return value;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed while writing '" + path.string() + "'");
}

// Fixed-point, locale-independent.
std::string format_fixed2(double value) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
  return std::string(buf, ptr);
}

double round2(double value) { return std::round(value * 100.0) / 100.0; }

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["models"] = manifest.model_files;
  if (manifest.labels_file)
    j["labels"] = *manifest.labels_file;
  else
    j["labels"] = nullptr;
  std::vector<std::string> schemes;
  for (WeightingScheme s : manifest.schemes) schemes.emplace_back(to_string(s));
  j["schemes"] = schemes;
  j["batch_size"] = manifest.batch_size;
  j["tie_policy"] = std::string(to_string(manifest.tie_policy));
  j["mode"] = std::string(to_string(manifest.mode));
  j["k"] = manifest.k;
  j["output_dir"] = manifest.output_dir;
  j["tool_version"] = manifest.tool_version;
  j["timestamp"] = manifest.timestamp;
  return j;
}

RunManifest manifest_from_json(const nlohmann::ordered_json& j) {
  RunManifest m;
  m.model_files = j.at("models").get<std::vector<std::string>>();
  if (!j.at("labels").is_null()) m.labels_file = j.at("labels").get<std::string>();
  for (const auto& s : j.at("schemes")) m.schemes.push_back(parse_scheme(s.get<std::string>()));
  m.batch_size = j.at("batch_size").get<std::size_t>();
  m.tie_policy = parse_tie_policy(j.at("tie_policy").get<std::string>());
  m.mode = j.at("mode").get<std::string>() == "unsupervised" ? LabelMode::unsupervised
                                                             : LabelMode::supervised;
  m.k = j.at("k").get<std::size_t>();
  m.output_dir = j.at("output_dir").get<std::string>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.timestamp = j.at("timestamp").get<std::string>();
  return m;
}

ScoreMatrix load_score_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open model file '" + path.string() + "'");

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> class_names;
  std::vector<double> data;
  std::size_t n_rows = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string_view> cells = split_csv_line(line);
    if (class_names.empty()) {
      for (std::string_view c : cells) {
        if (c.empty())
          throw ParseError(path.string() + ": empty class name in header (column " +
                           std::to_string(class_names.size() + 1) + ")");
        class_names.emplace_back(c);
      }
      if (class_names.size() < 2)
        throw InvalidInput(path.string() + ": needs at least two class columns");
      continue;
    }
    if (cells.size() != class_names.size())
      throw ParseError(path.string() + ": row at line " + std::to_string(line_no) +
                       " has " + std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(class_names.size()));
    for (std::size_t c = 0; c < cells.size(); ++c)
      data.push_back(parse_cell(cells[c], path, line_no, c + 1));
    ++n_rows;
  }
  if (class_names.empty()) throw InvalidInput(path.string() + ": empty file");
  if (n_rows == 0) throw InvalidInput(path.string() + ": no data rows");

  ScoreMatrix m;
  m.model_id = path.stem().string();
  m.class_names = std::move(class_names);
  m.values = Matrix(n_rows, m.class_names.size());
  for (std::size_t r = 0; r < n_rows; ++r) {
    const auto row_begin = data.begin() + static_cast<std::ptrdiff_t>(r * m.class_names.size());
    std::copy(row_begin, row_begin + static_cast<std::ptrdiff_t>(m.class_names.size()),
              m.values.row(r).begin());
  }
  m.validate();
  return m;
}

void check_class_names(const ScoreMatrix& first, const ScoreMatrix& other) {
  if (first.class_names != other.class_names)
    throw HeaderMismatch("model '" + other.model_id + "' class columns differ from '" +
                         first.model_id + "' (columns must match by name and order)");
}

Labels load_labels(const std::filesystem::path& path,
                   std::span<const std::string> class_names,
                   std::size_t expected_samples) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open labels file '" + path.string() + "'");

  std::unordered_map<std::string_view, std::size_t> by_name;
  for (std::size_t i = 0; i < class_names.size(); ++i) by_name[class_names[i]] = i;

  Labels labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view cell = trim(line);
    if (cell.empty()) continue;
    if (auto it = by_name.find(cell); it != by_name.end()) {
      labels.push_back(it->second);
      continue;
    }
    std::size_t index = 0;
    const char* end = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(cell.data(), end, index);
    if (ec != std::errc{} || ptr != end)
      throw UnknownClass(path.string() + ": unknown class '" + std::string(cell) +
                         "' at line " + std::to_string(line_no));
    if (index >= class_names.size())
      throw UnknownClass(path.string() + ": class index " + std::to_string(index) +
                         " out of range at line " + std::to_string(line_no));
    labels.push_back(index);
  }
  if (labels.size() != expected_samples)
    throw InvalidInput(path.string() + ": " + std::to_string(labels.size()) +
                       " labels for " + std::to_string(expected_samples) + " samples");
  return labels;
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& values,
                      std::span<const std::string> class_names) {
  std::ofstream out = open_output(path);
  for (std::size_t c = 0; c < class_names.size(); ++c) {
    if (c) out << ',';
    out << class_names[c];
  }
  out << '\n';
  for (std::size_t r = 0; r < values.rows(); ++r) {
    for (std::size_t c = 0; c < values.cols(); ++c) {
      if (c) out << ',';
      out << format_number(values(r, c));
    }
    out << '\n';
  }
  finish_output(out, path);
}

void write_rsc_csv(const std::filesystem::path& path, const RscCurve& curve) {
  std::ofstream out = open_output(path);
  out << "rank,score\n";
  for (std::size_t i = 0; i < curve.size(); ++i)
    out << (i + 1) << ',' << format_number(curve[i]) << '\n';
  finish_output(out, path);
}

namespace {

void write_trend_csv(const std::filesystem::path& path, const SchemeTrend& trend) {
  std::ofstream out = open_output(path);
  out << "combination,score_accuracy,rank_accuracy\n";
  for (const TrendRow& row : trend.rows)
    out << row.combination << ',' << format_fixed2(row.score_accuracy) << ','
        << format_fixed2(row.rank_accuracy) << '\n';
  finish_output(out, path);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out = open_output(path);
  out << text;
  finish_output(out, path);
}

}  // namespace

void write_outputs(const LayerResult& result, const RunManifest& manifest,
                   std::span<const std::string> class_names,
                   const std::filesystem::path& dir, bool render_svg) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  nlohmann::ordered_json report;
  report["manifest"] = manifest_to_json(manifest);
  report["accuracy_basis"] = result.used_pseudo_labels ? "majority_vote_pseudo" : "ground_truth";
  nlohmann::ordered_json base = nlohmann::ordered_json::object();
  for (const AccuracyEntry& e : result.base_accuracies) base[e.id] = round2(e.accuracy);
  report["base_accuracies"] = base;
  nlohmann::ordered_json fused = nlohmann::ordered_json::object();
  for (const AccuracyEntry& e : result.fused_accuracies) fused[e.id] = round2(e.accuracy);
  report["fused_accuracies"] = fused;
  nlohmann::ordered_json top = nlohmann::ordered_json::array();
  for (const AccuracyEntry& e : result.top_models)
    top.push_back({{"id", e.id}, {"accuracy", round2(e.accuracy)}});
  report["top_k"] = top;
  nlohmann::ordered_json best;
  best["id"] = result.best.id;
  best["accuracy"] = round2(result.best.accuracy);
  best["kind"] = std::string(to_string(result.best.kind));
  if (result.best.scheme)
    best["scheme"] = std::string(to_string(*result.best.scheme));
  else
    best["scheme"] = nullptr;
  report["best"] = best;
  write_text(dir / "report.json", report.dump(2) + "\n");

  write_matrix_csv(dir / "best_model.csv", result.best_matrix, class_names);

  {
    std::ofstream out = open_output(dir / "predictions.csv");
    for (std::size_t label : result.predictions) out << class_names[label] << '\n';
    finish_output(out, dir / "predictions.csv");
  }

  for (const SchemeTrend& trend : result.trends)
    write_trend_csv(dir / ("trend_" + std::string(to_string(trend.scheme)) + ".csv"), trend);

  for (const ModelRsc& rsc : result.average_rsc)
    write_rsc_csv(dir / ("rsc_" + rsc.model_id + ".csv"), rsc.curve);

  if (render_svg) {
    for (const SchemeTrend& trend : result.trends) {
      std::vector<svg::Series> series(2);
      series[0].label = "score fusion";
      series[0].color = "#1f77b4";
      series[1].label = "rank fusion";
      series[1].color = "#d62728";
      for (const TrendRow& row : trend.rows) {
        series[0].y.push_back(row.score_accuracy);
        series[1].y.push_back(row.rank_accuracy);
      }
      const std::string name = "trend_" + std::string(to_string(trend.scheme));
      write_text(dir / (name + ".svg"),
                 svg::line_chart(name, "combination", "accuracy [%]", series));
    }
    for (const ModelRsc& rsc : result.average_rsc) {
      std::vector<svg::Series> series(1);
      series[0].label = rsc.model_id;
      series[0].y = rsc.curve;
      write_text(dir / ("rsc_" + rsc.model_id + ".svg"),
                 svg::line_chart("average RSC: " + rsc.model_id, "rank", "score", series));
    }
  }
}

}  // namespace cfa
