#pragma once

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cfa/matrix.hpp"
#include "cfa/rsc.hpp"

namespace testutil {

inline std::vector<std::string> class_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

inline cfa::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                 double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  cfa::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Scores snapped to a coarse grid so ties actually occur and affine
// transforms stay exact in floating point.
inline cfa::Matrix random_grid_matrix(std::mt19937& rng, std::size_t rows,
                                      std::size_t cols, int levels = 64) {
  std::uniform_int_distribution<int> dist(0, levels - 1);
  cfa::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<double>(dist(rng)) / static_cast<double>(levels);
  return m;
}

inline cfa::ScoreMatrix random_score_matrix(std::mt19937& rng, const std::string& id,
                                            std::size_t rows, std::size_t cols) {
  return {id, random_matrix(rng, rows, cols), class_names(cols)};
}

inline cfa::Labels random_labels(std::mt19937& rng, std::size_t n, std::size_t n_classes) {
  std::uniform_int_distribution<std::size_t> dist(0, n_classes - 1);
  cfa::Labels labels(n);
  for (auto& v : labels) v = dist(rng);
  return labels;
}

inline cfa::RscCurve random_curve(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> row(n);
  for (auto& v : row) v = dist(rng);
  return cfa::rsc_of_score_row(row);
}

inline double max_abs_diff(const cfa::Matrix& a, const cfa::Matrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

inline double max_rel_diff(const cfa::Matrix& a, const cfa::Matrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const double scale = std::max({std::abs(a(r, c)), std::abs(b(r, c)), 1.0});
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)) / scale);
    }
  return worst;
}

// Three base models, each 70% accurate, erring on disjoint sample blocks.
// For every sample at least two models score the true class on top, so the
// mean combination recovers it.
struct DisjointEnsemble {
  std::vector<cfa::ScoreMatrix> models;
  cfa::Labels truth;
};

inline DisjointEnsemble make_disjoint_ensemble(std::size_t n_samples = 100,
                                               std::size_t n_classes = 4) {
  DisjointEnsemble out;
  out.truth.resize(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) out.truth[i] = i % n_classes;

  const std::size_t block = (n_samples * 3) / 10;  // 30% errors per model
  const auto names = class_names(n_classes);
  for (std::size_t m = 0; m < 3; ++m) {
    cfa::Matrix values(n_samples, n_classes);
    for (std::size_t i = 0; i < n_samples; ++i) {
      const bool errs = i >= m * block && i < (m + 1) * block;
      const std::size_t predicted = errs ? (out.truth[i] + 1) % n_classes : out.truth[i];
      for (std::size_t c = 0; c < n_classes; ++c)
        values(i, c) = 0.05 + 0.25 * static_cast<double>(c) / static_cast<double>(n_classes);
      values(i, predicted) = 0.9;
    }
    out.models.push_back({std::string(1, static_cast<char>('A' + m)), std::move(values), names});
  }
  return out;
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("cfa_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace testutil
