#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cfa/ranking.hpp"
#include "cfa/rsc.hpp"
#include "reference.hpp"
#include "test_helpers.hpp"

using cfa::Matrix;
using cfa::RscCurve;

TEST_SUITE("rsc-diversity") {

TEST_CASE("rsc_of_score_row normalizes and sorts descending") {
  CHECK(cfa::rsc_of_score_row(std::vector<double>{0.1, 0.9, 0.5}) ==
        RscCurve{1.0, 0.5, 0.0});
  CHECK(cfa::rsc_of_score_row(std::vector<double>{5, 5, 5}) == RscCurve{0.0, 0.0, 0.0});
  CHECK(cfa::rsc_of_score_row(std::vector<double>{0, 1}) == RscCurve{1.0, 0.0});
}

TEST_CASE("rsc_of_rank_row maps ranks into score space") {
  const RscCurve four = cfa::rsc_of_rank_row(std::vector<double>{1, 2, 3, 4});
  REQUIRE(four.size() == 4);
  CHECK(four[0] == 1.0);
  CHECK(four[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(four[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(four[3] == 0.0);
  CHECK(cfa::rsc_of_rank_row(std::vector<double>{2, 1}) == RscCurve{1.0, 0.0});
  CHECK(cfa::rsc_of_rank_row(std::vector<double>{1.5, 1.5, 3}) == RscCurve{0.75, 0.75, 0.0});
}

TEST_CASE("cognitive_diversity hand values") {
  const RscCurve a{1.0, 0.5, 0.0};
  const RscCurve b{1.0, 0.0, 0.0};
  CHECK(cfa::cognitive_diversity(a, a) == 0.0);
  CHECK(cfa::cognitive_diversity(a, b) ==
        doctest::Approx(std::sqrt(0.25 / 3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(cfa::cognitive_diversity(a, RscCurve{1.0, 0.0}), cfa::InvalidInput);
}

TEST_CASE("cognitive_diversity is symmetric and non-negative") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const RscCurve a = testutil::random_curve(rng, 6);
    const RscCurve b = testutil::random_curve(rng, 6);
    const double ab = cfa::cognitive_diversity(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab == cfa::cognitive_diversity(b, a));
  }
}

TEST_CASE("diversity_strength") {
  const double cd_ab = std::sqrt(0.25 / 3.0);
  Matrix cd(3, 3, 0.0);
  cd(0, 1) = cd(1, 0) = cd_ab;
  cd(0, 2) = cd(2, 0) = 0.1;
  cd(1, 2) = cd(2, 1) = 0.2;
  CHECK(cfa::diversity_strength(cd, 0) ==
        doctest::Approx((cd_ab + 0.1) / 2.0).epsilon(1e-12));

  SUBCASE("two models: DS equals their CD on both sides") {
    Matrix pair(2, 2, 0.0);
    pair(0, 1) = pair(1, 0) = 0.37;
    CHECK(cfa::diversity_strength(pair, 0) == 0.37);
    CHECK(cfa::diversity_strength(pair, 1) == 0.37);
  }
  SUBCASE("single model is rejected") {
    CHECK_THROWS_AS(cfa::diversity_strength(Matrix(1, 1, 0.0), 0), cfa::InvalidInput);
  }
}

TEST_CASE("identical models have zero DS everywhere") {
  std::mt19937 rng(29);
  const Matrix scores = testutil::random_matrix(rng, 10, 5);
  const Matrix curves = cfa::rsc_curves(scores, cfa::CurveSource::scores);
  const std::vector<Matrix> models{curves, curves, curves};
  const Matrix ds = cfa::ds_weights(models);
  for (std::size_t r = 0; r < ds.rows(); ++r)
    for (std::size_t m = 0; m < ds.cols(); ++m) CHECK(ds(r, m) == 0.0);
}

TEST_CASE("mean DS equals the mean off-diagonal CD") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Matrix> curves;
    for (int m = 0; m < 4; ++m)
      curves.push_back(cfa::rsc_curves(testutil::random_matrix(rng, 6, 5),
                                       cfa::CurveSource::scores));
    const Matrix ds = cfa::ds_weights(curves);
    for (std::size_t r = 0; r < ds.rows(); ++r) {
      const Matrix cd = cfa::cd_matrix(curves, r);
      double ds_mean = 0.0;
      for (std::size_t j = 0; j < 4; ++j) ds_mean += ds(r, j);
      ds_mean /= 4.0;
      double cd_mean = 0.0;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          if (a != b) cd_mean += cd(a, b);
      cd_mean /= 12.0;
      CHECK(ds_mean == doctest::Approx(cd_mean).epsilon(1e-12));
    }
  }
}

TEST_CASE("tie-free rank rows produce the exact RSC line") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 8;
    std::vector<double> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1.0);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    const RscCurve curve = cfa::rsc_of_rank_row(ranks);
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = (static_cast<double>(n) - static_cast<double>(i + 1)) /
                              (static_cast<double>(n) - 1.0);
      CHECK(curve[i] == expected);
    }
    // a second tie-free permutation gives the same line, so CD vanishes
    std::shuffle(ranks.begin(), ranks.end(), rng);
    CHECK(cfa::cognitive_diversity(curve, cfa::rsc_of_rank_row(ranks)) == 0.0);
  }
}

TEST_CASE("average_rsc") {
  Matrix single = Matrix::from_rows({{1.0, 0.5, 0.0}});
  CHECK(cfa::average_rsc(single) == RscCurve{1.0, 0.5, 0.0});

  Matrix two = Matrix::from_rows({{1.0, 0.5, 0.0}, {1.0, 0.1, 0.0}});
  CHECK(cfa::average_rsc(two) == RscCurve{1.0, 0.3, 0.0});

  Matrix repeated = Matrix::from_rows({{1.0, 0.25, 0.0}, {1.0, 0.25, 0.0}, {1.0, 0.25, 0.0}});
  CHECK(cfa::average_rsc(repeated) == RscCurve{1.0, 0.25, 0.0});

  CHECK_THROWS_AS(cfa::average_rsc(Matrix()), cfa::InvalidInput);

  SUBCASE("stays non-increasing") {
    std::mt19937 rng(41);
    const Matrix curves = cfa::rsc_curves(testutil::random_matrix(rng, 50, 7),
                                          cfa::CurveSource::scores);
    const RscCurve mean = cfa::average_rsc(curves);
    for (std::size_t i = 1; i < mean.size(); ++i) CHECK(mean[i - 1] >= mean[i]);
  }
}

TEST_CASE("ds_weights matches the plain-loop reference") {
  std::mt19937 rng(43);
  std::vector<Matrix> curves;
  for (int m = 0; m < 5; ++m)
    curves.push_back(cfa::rsc_curves(testutil::random_matrix(rng, 12, 6),
                                     cfa::CurveSource::scores));
  const Matrix fast = cfa::ds_weights(curves);
  const Matrix slow = cfa::ref::ds_weights(curves);
  CHECK(testutil::max_abs_diff(fast, slow) <= 1e-12);
}

}  // TEST_SUITE
