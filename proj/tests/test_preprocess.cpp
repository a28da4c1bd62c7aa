#include <cmath>
#include <random>

#include "doctest.h"
#include "radar_order/preprocess.hpp"

using namespace radar;

namespace {

NumericColumn num(std::initializer_list<double> xs) {
  NumericColumn out;
  for (double x : xs) out.emplace_back(x);
  return out;
}

CategoricalColumn cat(std::initializer_list<const char*> xs) {
  CategoricalColumn out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("target_encode uses category means") {
  auto e = target_encode(cat({"A", "A", "B", "B"}), num({1, 1, 0, 0}), 0.0);
  CHECK(*e[0] == 1.0);
  CHECK(*e[1] == 1.0);
  CHECK(*e[2] == 0.0);
  CHECK(*e[3] == 0.0);

  e = target_encode(cat({"A", "A", "A", "A"}), num({2, 4, 6, 8}), 0.0);
  for (const auto& x : e) CHECK(*x == 5.0);
}

TEST_CASE("target_encode shrinks toward the global mean") {
  const auto e = target_encode(cat({"A", "A", "B"}), num({1, 0, 1}), 1.0);
  CHECK(std::abs(*e[0] - 5.0 / 9.0) < 1e-12);
  CHECK(std::abs(*e[1] - 5.0 / 9.0) < 1e-12);
  CHECK(std::abs(*e[2] - 5.0 / 6.0) < 1e-12);

  const auto huge =
      target_encode(cat({"A", "A", "B"}), num({1, 0, 1}), 1e12);
  for (const auto& x : huge) CHECK(std::abs(*x - 2.0 / 3.0) < 1e-6);
}

TEST_CASE("target_encode errors") {
  CHECK_THROWS_AS(target_encode({}, {}, 0.0), input_error);
  CHECK_THROWS_AS(target_encode(cat({"A"}), num({1}), -1.0), config_error);
  CHECK_THROWS_AS(target_encode(cat({"A", "B"}), num({1}), 0.0), input_error);
  CHECK_THROWS_AS(target_encode(cat({"A", "B"}), NumericColumn{1.0, std::nullopt}, 0.0),
                  input_error);
}

TEST_CASE("target_encode keeps missing categories missing") {
  CategoricalColumn c = cat({"A", "B"});
  c.emplace_back(std::nullopt);
  NumericColumn t = num({1, 3});
  t.emplace_back(std::nullopt);
  const auto e = target_encode(c, t, 0.0);
  CHECK(*e[0] == 1.0);
  CHECK(*e[1] == 3.0);
  CHECK_FALSE(e[2].has_value());
}

TEST_CASE("min_max_scale maps onto [epsilon, 1]") {
  const std::vector<double> x{0, 5, 10};
  CHECK(min_max_scale(x, 0.0) == std::vector<double>{0.0, 0.5, 1.0});

  const std::vector<double> flat{7, 7, 7};
  CHECK(min_max_scale(flat, 0.02) == std::vector<double>{0.5, 0.5, 0.5});

  const auto floored = min_max_scale(x, 0.02);
  CHECK(floored[0] == 0.02);
  CHECK(std::abs(floored[1] - 0.51) < 1e-12);
  CHECK(floored[2] == 1.0);

  CHECK_THROWS_AS(min_max_scale(std::vector<double>{}, 0.0), input_error);
  CHECK_THROWS_AS(min_max_scale(x, 0.5), config_error);
  CHECK_THROWS_AS(min_max_scale(std::vector<double>{1.0, INFINITY}, 0.0),
                  input_error);
}

TEST_CASE("min_max_scale properties") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(2 + trial % 20);
    for (auto& v : x) v = u(rng);
    const double eps = 0.01 * (trial % 40);
    const auto once = min_max_scale(x, eps);
    const auto twice = min_max_scale(once, eps);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK((once[i] >= eps && once[i] <= 1.0));
      CHECK(std::abs(once[i] - twice[i]) <= 1e-12);
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[i] < x[k]) CHECK(once[i] <= once[k]);
      }
    }
  }
}

TEST_CASE("build_profile_matrix scales over the whole table") {
  RawTable t;
  t.add_column("a", num({0, 10, 5, 20}));
  t.add_column("b", num({1, 2, 3, 4}));
  t.add_column("c", num({-1, 1, 0, 3}));
  const std::vector<std::size_t> rows{1, 2};
  const std::vector<std::string> features{"a", "b", "c"};
  PreprocessConfig cfg;
  cfg.epsilon_floor = 0.0;
  const auto m = build_profile_matrix(t, rows, features, cfg);
  REQUIRE(m.profile_count() == 2);
  REQUIRE(m.feature_count() == 3);
  CHECK(m.at(0, 0) == 0.5);
  CHECK(m.at(1, 0) == 0.25);
  CHECK(std::abs(m.at(0, 1) - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(m.at(1, 1) - 2.0 / 3.0) < 1e-12);
  CHECK(m.at(0, 2) == 0.5);
  CHECK(m.at(1, 2) == 0.25);
  CHECK(m.profile_names() == std::vector<std::string>{"row 1", "row 2"});

  // Row 3 holds the population maximum of every column.
  const std::vector<std::size_t> top{3};
  const auto mt = build_profile_matrix(t, top, features, PreprocessConfig{});
  for (std::size_t k = 0; k < 3; ++k) CHECK(mt.at(0, k) == 1.0);
}

TEST_CASE("build_profile_matrix encodes then scales categoricals") {
  // smoker: yes -> mean(10, 8) = 9, no -> mean(2, 4) = 3; scaled to 1 / 0.
  RawTable t;
  t.add_column("x", num({1, 2, 3, 4}));
  t.add_column("smoker", cat({"yes", "no", "yes", "no"}));
  t.add_column("z", num({4, 4, 0, 2}));
  t.add_column("y", num({10, 2, 8, 4}));
  const std::vector<std::size_t> rows{0, 1, 2, 3};
  const std::vector<std::string> features{"x", "smoker", "z"};
  PreprocessConfig cfg;
  cfg.epsilon_floor = 0.0;
  cfg.target_column = "y";
  const auto m = build_profile_matrix(t, rows, features, cfg);
  const double want_x[] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  const double want_s[] = {1.0, 0.0, 1.0, 0.0};
  const double want_z[] = {1.0, 1.0, 0.0, 0.5};
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(std::abs(m.at(r, 0) - want_x[r]) < 1e-12);
    CHECK(std::abs(m.at(r, 1) - want_s[r]) < 1e-12);
    CHECK(std::abs(m.at(r, 2) - want_z[r]) < 1e-12);
  }
}

TEST_CASE("build_profile_matrix errors") {
  RawTable t;
  t.add_column("x", num({1, 2, 3}));
  t.add_column("k", cat({"a", "b", "a"}));
  NumericColumn holes{1.0, std::nullopt, 3.0};
  t.add_column("h", holes);
  t.add_column("y", num({1, 0, 1}));
  const std::vector<std::size_t> r0{0};
  const std::vector<std::size_t> r1{1};
  const std::vector<std::string> with_cat{"x", "k", "y"};
  const std::vector<std::string> with_hole{"x", "h", "y"};
  const std::vector<std::string> unknown{"x", "nope", "y"};
  const std::vector<std::string> too_few{"x", "y"};

  CHECK_THROWS_AS(build_profile_matrix(t, r0, with_cat, {}), config_error);
  CHECK_THROWS_AS(build_profile_matrix(t, r0, unknown, {}), input_error);
  CHECK_THROWS_AS(build_profile_matrix(t, r0, too_few, {}), input_error);
  const std::vector<std::size_t> bad_row{7};
  CHECK_THROWS_AS(build_profile_matrix(t, bad_row, with_hole, {}), input_error);
  CHECK_NOTHROW(build_profile_matrix(t, r0, with_hole, {}));
  CHECK_THROWS_WITH_AS(build_profile_matrix(t, r1, with_hole, {}),
                       "missing value at row 1, column 'h'", input_error);

  PreprocessConfig target_is_feature;
  target_is_feature.target_column = "y";
  CHECK_THROWS_AS(build_profile_matrix(t, r0, with_cat, target_is_feature),
                  config_error);
}

TEST_CASE("RawTable rejects inconsistent columns") {
  RawTable t;
  t.add_column("a", num({1, 2}));
  CHECK_THROWS_AS(t.add_column("a", num({1, 2})), input_error);
  CHECK_THROWS_AS(t.add_column("b", num({1, 2, 3})), input_error);
}
