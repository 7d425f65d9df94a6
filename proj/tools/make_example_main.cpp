// Generates a deterministic synthetic ensemble for trying out cfa-fuse:
// a handful of model score CSVs plus a labels file. Base models err on
// disjoint sample subsets, so fusion has room to beat every one of them.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfa/io.hpp"
#include "cfa/matrix.hpp"

namespace {

std::string model_name(std::size_t index) {
  if (index < 26) return std::string("model_") + static_cast<char>('a' + index);
  return "model_" + std::to_string(index);
}

int run(int argc, char** argv) {
  CLI::App app{"cfa-make-example: write a synthetic ensemble for cfa-fuse"};

  std::string out_dir;
  std::size_t n_samples = 1000;
  std::size_t n_classes = 10;
  std::size_t n_models = 5;
  std::uint32_t seed = 42;

  app.add_option("--out", out_dir, "Directory for CSVs and labels.txt")->required();
  app.add_option("--samples", n_samples, "Samples per model")->default_val(1000);
  app.add_option("--classes", n_classes, "Classes")->default_val(10);
  app.add_option("--models", n_models, "Base models")->default_val(5);
  app.add_option("--seed", seed, "RNG seed")->default_val(42);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (n_classes < 2 || n_models < 2 || n_samples < 1)
    throw cfa::InvalidInput("need samples >= 1, classes >= 2, models >= 2");

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_class(0, n_classes - 1);
  std::uniform_int_distribution<std::size_t> pick_owner(0, n_models - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::size_t> truth(n_samples);
  std::vector<std::size_t> owner(n_samples);   // the model allowed to err here
  std::vector<double> err_draw(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    truth[i] = pick_class(rng);
    owner[i] = pick_owner(rng);
    err_draw[i] = unit(rng);
  }

  std::vector<std::string> class_names;
  for (std::size_t c = 0; c < n_classes; ++c) class_names.push_back("class_" + std::to_string(c));

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw cfa::IoError("cannot create '" + out_dir + "': " + ec.message());

  for (std::size_t m = 0; m < n_models; ++m) {
    // per-model error share of owned samples and score sharpness
    const double err_rate = 0.4 + 0.1 * static_cast<double>(m % 5);
    const double temperature = 0.5 + 0.3 * static_cast<double>(m);
    cfa::Matrix values(n_samples, n_classes);
    for (std::size_t i = 0; i < n_samples; ++i) {
      std::size_t predicted = truth[i];
      if (owner[i] == m && err_draw[i] < err_rate) {
        predicted = (truth[i] + 1 + m) % n_classes;
      }
      for (std::size_t c = 0; c < n_classes; ++c)
        values(i, c) = 0.4 * unit(rng);
      values(i, predicted) = 0.6 + 0.4 * unit(rng);
      for (std::size_t c = 0; c < n_classes; ++c)
        values(i, c) = std::pow(values(i, c), temperature);
    }
    cfa::write_matrix_csv(std::filesystem::path(out_dir) / (model_name(m) + ".csv"),
                          values, class_names);
  }

  {
    std::ofstream out(std::filesystem::path(out_dir) / "labels.txt");
    if (!out) throw cfa::IoError("cannot write labels.txt");
    for (std::size_t label : truth) out << class_names[label] << '\n';
  }

  std::cout << "wrote " << n_models << " model CSVs and labels.txt to " << out_dir << "\n";
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
