#include <doctest.h>

#include <fstream>
#include <random>

#include "cfa/io.hpp"
#include "test_helpers.hpp"

using cfa::Matrix;

namespace {

std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name,
                                 const std::string& content) {
  const auto path = dir / name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli-io") {

TEST_CASE("load_score_csv reads header and rows") {
  testutil::TempDir dir("csv");
  const auto path = write_file(dir.path(), "modelA.csv", "cat,dog\n0.9,0.1\n");
  const cfa::ScoreMatrix m = cfa::load_score_csv(path);
  CHECK(m.model_id == "modelA");
  CHECK(m.class_names == std::vector<std::string>{"cat", "dog"});
  REQUIRE(m.values.rows() == 1);
  CHECK(m.values(0, 0) == 0.9);
  CHECK(m.values(0, 1) == 0.1);
}

TEST_CASE("CRLF files load cleanly") {
  testutil::TempDir dir("crlf");
  const auto csv = write_file(dir.path(), "win.csv", "cat,dog\r\n0.9,0.1\r\n-2.5,3.5\r\n");
  const cfa::ScoreMatrix m = cfa::load_score_csv(csv);
  REQUIRE(m.values.rows() == 2);
  CHECK(m.values(1, 0) == -2.5);
  const auto labels = write_file(dir.path(), "labels.txt", "cat\r\ndog\r\n");
  CHECK(cfa::load_labels(labels, m.class_names, 2) == cfa::Labels{0, 1});
}

TEST_CASE("class column order is enforced across files") {
  testutil::TempDir dir("hdr");
  const auto a = cfa::load_score_csv(write_file(dir.path(), "a.csv", "cat,dog\n0.9,0.1\n"));
  const auto b = cfa::load_score_csv(write_file(dir.path(), "b.csv", "dog,cat\n0.9,0.1\n"));
  CHECK_THROWS_AS(cfa::check_class_names(a, b), cfa::HeaderMismatch);
  const auto c = cfa::load_score_csv(write_file(dir.path(), "c.csv", "cat,dog\n1,2\n"));
  CHECK_NOTHROW(cfa::check_class_names(a, c));
}

TEST_CASE("parse diagnostics cite line and column") {
  testutil::TempDir dir("diag");
  const auto bad = write_file(dir.path(), "bad.csv", "cat,dog\n0.5,0.5\n0.1,abc\n");
  CHECK_THROWS_WITH_AS(cfa::load_score_csv(bad), doctest::Contains("(3,2)"),
                       cfa::ParseError);

  const auto ragged = write_file(dir.path(), "ragged.csv", "cat,dog\n0.5\n");
  CHECK_THROWS_AS(cfa::load_score_csv(ragged), cfa::ParseError);

  const auto inf = write_file(dir.path(), "inf.csv", "cat,dog\n0.5,inf\n");
  CHECK_THROWS_WITH_AS(cfa::load_score_csv(inf), doctest::Contains("non-finite"),
                       cfa::ParseError);

  const auto one_col = write_file(dir.path(), "one.csv", "cat\n0.5\n");
  CHECK_THROWS_AS(cfa::load_score_csv(one_col), cfa::InvalidInput);

  const auto headers_only = write_file(dir.path(), "headers.csv", "cat,dog\n");
  CHECK_THROWS_AS(cfa::load_score_csv(headers_only), cfa::InvalidInput);

  CHECK_THROWS_AS(cfa::load_score_csv(dir.path() / "missing.csv"), cfa::InvalidInput);
}

TEST_CASE("load_labels accepts class names and 0-based indices") {
  testutil::TempDir dir("labels");
  const std::vector<std::string> classes{"cat", "dog"};

  const auto names = write_file(dir.path(), "names.txt", "cat\ndog\n");
  CHECK(cfa::load_labels(names, classes, 2) == cfa::Labels{0, 1});

  const auto indices = write_file(dir.path(), "indices.txt", "0\n1\n");
  CHECK(cfa::load_labels(indices, classes, 2) == cfa::Labels{0, 1});

  const auto unknown = write_file(dir.path(), "unknown.txt", "cat\nfish\n");
  CHECK_THROWS_AS(cfa::load_labels(unknown, classes, 2), cfa::UnknownClass);

  const auto out_of_range = write_file(dir.path(), "range.txt", "0\n7\n");
  CHECK_THROWS_AS(cfa::load_labels(out_of_range, classes, 2), cfa::UnknownClass);

  const auto short_file = write_file(dir.path(), "short.txt", "cat\n");
  CHECK_THROWS_AS(cfa::load_labels(short_file, classes, 2), cfa::InvalidInput);
}

TEST_CASE("matrix CSV round trip is exact, comfortably within 1e-9") {
  testutil::TempDir dir("round");
  std::mt19937 rng(113);
  const Matrix original = testutil::random_matrix(rng, 20, 5, -1000.0, 1000.0);
  const auto path = dir.path() / "m.csv";
  cfa::write_matrix_csv(path, original, testutil::class_names(5));
  const cfa::ScoreMatrix loaded = cfa::load_score_csv(path);
  CHECK(loaded.values == original);
  CHECK(testutil::max_rel_diff(loaded.values, original) <= 1e-9);
}

TEST_CASE("format_number uses a dot separator and round-trips") {
  CHECK(cfa::format_number(0.5) == "0.5");
  CHECK(cfa::format_number(1.0) == "1");
  CHECK(cfa::format_number(2.0 / 3.0) == "0.6666666666666666");
  CHECK(cfa::format_number(-12345.6789) == "-12345.6789");
}

TEST_CASE("manifest survives a JSON round trip") {
  cfa::RunManifest m;
  m.model_files = {"a.csv", "b.csv"};
  m.labels_file = "labels.txt";
  m.schemes = {cfa::WeightingScheme::AC, cfa::WeightingScheme::WCP};
  m.batch_size = 256;
  m.tie_policy = cfa::TiePolicy::dense;
  m.mode = cfa::LabelMode::supervised;
  m.k = 5;
  m.output_dir = "./run1";
  m.tool_version = "0.1.0";
  m.timestamp = "2025-01-01T00:00:00Z";

  const cfa::RunManifest back = cfa::manifest_from_json(cfa::manifest_to_json(m));
  CHECK(back.model_files == m.model_files);
  CHECK(back.labels_file == m.labels_file);
  CHECK(back.schemes == m.schemes);
  CHECK(back.batch_size == m.batch_size);
  CHECK(back.tie_policy == m.tie_policy);
  CHECK(back.mode == m.mode);
  CHECK(back.k == m.k);
  CHECK(back.output_dir == m.output_dir);
  CHECK(back.tool_version == m.tool_version);
  CHECK(back.timestamp == m.timestamp);
}

TEST_CASE("RSC export of a tie-free rank model is the straight line") {
  testutil::TempDir dir("rsc");
  const std::vector<double> ranks{3, 1, 5, 2, 4};
  const cfa::RscCurve curve = cfa::rsc_of_rank_row(ranks);
  const auto path = dir.path() / "rsc_rank_model.csv";
  cfa::write_rsc_csv(path, curve);
  CHECK(read_file(path) == "rank,score\n1,1\n2,0.75\n3,0.5\n4,0.25\n5,0\n");
}

TEST_CASE("write_outputs emits the full artifact set") {
  testutil::TempDir dir("outputs");
  const testutil::DisjointEnsemble ensemble = testutil::make_disjoint_ensemble(40, 4);
  cfa::LayerConfig config;
  config.models = ensemble.models;
  config.labels = ensemble.truth;
  config.schemes = {cfa::WeightingScheme::AC, cfa::WeightingScheme::WCDS};
  const cfa::LayerResult result = cfa::run_layer(config);

  cfa::RunManifest manifest;
  manifest.model_files = {"A.csv", "B.csv", "C.csv"};
  manifest.labels_file = "labels.txt";
  manifest.schemes = config.schemes;
  manifest.k = 3;
  manifest.output_dir = dir.path().string();
  manifest.tool_version = "0.1.0";
  manifest.timestamp = cfa::utc_timestamp();

  const auto out = dir.path() / "run";
  cfa::write_outputs(result, manifest, ensemble.models.front().class_names, out, true);

  CHECK(std::filesystem::exists(out / "report.json"));
  CHECK(std::filesystem::exists(out / "best_model.csv"));
  CHECK(std::filesystem::exists(out / "predictions.csv"));
  CHECK(std::filesystem::exists(out / "trend_AC.csv"));
  CHECK(std::filesystem::exists(out / "trend_WCDS.csv"));
  for (const char* model : {"A", "B", "C"})
    CHECK(std::filesystem::exists(out / ("rsc_" + std::string(model) + ".csv")));
  CHECK(std::filesystem::exists(out / "trend_AC.svg"));
  CHECK(std::filesystem::exists(out / "rsc_A.svg"));

  const auto report = nlohmann::ordered_json::parse(read_file(out / "report.json"));
  const cfa::RunManifest back = cfa::manifest_from_json(report.at("manifest"));
  CHECK(back.model_files == manifest.model_files);
  CHECK(report.at("base_accuracies").size() == 3);
  CHECK(report.at("fused_accuracies").size() == result.fused_accuracies.size());
  CHECK(report.at("best").at("id").get<std::string>() == result.best.id);

  // trend files: header plus one row per combination
  std::ifstream trend(out / "trend_AC.csv");
  std::string line;
  std::size_t lines = 0;
  while (std::getline(trend, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 1 + 4);  // 3 models -> 4 combinations

  const cfa::ScoreMatrix reloaded = cfa::load_score_csv(out / "best_model.csv");
  CHECK(testutil::max_rel_diff(reloaded.values, result.best_matrix) <= 1e-9);

  std::ifstream preds(out / "predictions.csv");
  std::size_t pred_lines = 0;
  while (std::getline(preds, line))
    if (!line.empty()) ++pred_lines;
  CHECK(pred_lines == 40);
}

TEST_CASE("write failures surface as IoError") {
  testutil::TempDir dir("ioerr");
  write_file(dir.path(), "blocker", "not a directory\n");
  const testutil::DisjointEnsemble ensemble = testutil::make_disjoint_ensemble(10, 4);
  cfa::LayerConfig config;
  config.models = ensemble.models;
  config.labels = ensemble.truth;
  config.schemes = {cfa::WeightingScheme::AC};
  const cfa::LayerResult result = cfa::run_layer(config);
  cfa::RunManifest manifest;
  CHECK_THROWS_AS(cfa::write_outputs(result, manifest,
                                     ensemble.models.front().class_names,
                                     dir.path() / "blocker" / "sub", false),
                  cfa::IoError);
}

}  // TEST_SUITE
