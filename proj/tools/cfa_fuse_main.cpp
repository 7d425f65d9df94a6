#include <charconv>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfa/io.hpp"
#include "cfa/pipeline.hpp"
#include "cfa/version.hpp"

namespace {

std::string percent(double value) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
  return std::string(buf, ptr) + "%";
}

int run(int argc, char** argv) {
  CLI::App app{"cfa-fuse: combinatorial score/rank fusion over base classifier outputs"};
  app.set_version_flag("--version", std::string(cfa::kToolVersion));

  std::vector<std::string> model_files;
  std::string labels_file;
  std::string weights_csv = "AC,WCDS,WCP";
  std::size_t batch_size = 1024;
  std::string ties = "average";
  std::string mode = "supervised";
  std::size_t k = 0;
  std::string out_dir;
  bool render_svg = false;
  std::string wcds_rank_curves = "rank";

  app.add_option("--models", model_files, "Model score CSVs (first row class names)")
      ->required()
      ->expected(2, -1);
  app.add_option("--labels", labels_file, "Ground truth labels, one per line");
  app.add_option("--weights", weights_csv, "Comma-delimited weighting schemes (AC,WCDS,WCP)");
  app.add_option("--batch-size", batch_size, "Rows per processing batch")->default_val(1024);
  app.add_option("--ties", ties, "Rank tie policy: average|min|max|dense|ordinal");
  app.add_option("--mode", mode, "supervised|unsupervised");
  app.add_option("--k", k, "Top-k size (default: number of models)");
  app.add_option("--out", out_dir, "Output directory")->required();
  app.add_flag("--svg", render_svg, "Also render trend and RSC curves as SVG");
  app.add_option("--wcds-rank-curves", wcds_rank_curves,
                 "RSC curves weighting rank-kind WCDS fusion: rank|score");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cfa::LayerConfig config;
  config.batch_size = batch_size;
  config.tie_policy = cfa::parse_tie_policy(ties);
  config.schemes = cfa::parse_scheme_list(weights_csv);
  config.k = k;
  config.output_dir = out_dir;
  if (mode == "supervised") {
    config.mode = cfa::LabelMode::supervised;
  } else if (mode == "unsupervised") {
    config.mode = cfa::LabelMode::unsupervised;
  } else {
    throw cfa::InvalidInput("unknown mode '" + mode + "' (expected supervised|unsupervised)");
  }
  if (wcds_rank_curves == "rank") {
    config.wcds_rank_curves = cfa::CurveSource::ranks;
  } else if (wcds_rank_curves == "score") {
    config.wcds_rank_curves = cfa::CurveSource::scores;
  } else {
    throw cfa::InvalidInput("--wcds-rank-curves expects rank|score");
  }
  if (config.mode == cfa::LabelMode::supervised && labels_file.empty())
    throw cfa::MissingLabels("supervised mode needs --labels (or use --mode unsupervised)");
  if (config.mode == cfa::LabelMode::unsupervised && !labels_file.empty())
    throw cfa::InvalidInput("--labels conflicts with --mode unsupervised; drop one");

  config.models.reserve(model_files.size());
  for (const std::string& file : model_files) {
    cfa::ScoreMatrix m = cfa::load_score_csv(file);
    if (!config.models.empty()) cfa::check_class_names(config.models.front(), m);
    config.models.push_back(std::move(m));
  }
  if (config.mode == cfa::LabelMode::supervised)
    config.labels = cfa::load_labels(labels_file, config.models.front().class_names,
                                     config.models.front().n_samples());

  const cfa::LayerResult result = cfa::run_layer(config);

  cfa::RunManifest manifest;
  manifest.model_files = model_files;
  if (!labels_file.empty()) manifest.labels_file = labels_file;
  manifest.schemes = config.schemes;
  manifest.batch_size = config.batch_size;
  manifest.tie_policy = config.tie_policy;
  manifest.mode = config.mode;
  manifest.k = config.k == 0 ? config.models.size() : config.k;
  manifest.output_dir = config.output_dir;
  manifest.tool_version = std::string(cfa::kToolVersion);
  manifest.timestamp = cfa::utc_timestamp();

  cfa::write_outputs(result, manifest, config.models.front().class_names,
                     config.output_dir, render_svg);

  const char* basis = result.used_pseudo_labels ? "pseudo-accuracy" : "accuracy";
  std::cout << "best model: " << result.best.id << " (" << basis << " "
            << percent(result.best.accuracy) << ")\n";
  for (const cfa::AccuracyEntry& e : result.base_accuracies)
    std::cout << "  base " << e.id << ": " << percent(e.accuracy) << "\n";
  std::cout << "outputs written to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cfa::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
