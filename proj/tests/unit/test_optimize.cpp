#include <doctest.h>

#include <cmath>

#include "xychain/optimize.hpp"

using namespace xychain;

TEST_CASE("nelder_mead on a shifted quadratic") {
  auto f = [](const std::vector<double>& x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 2.0 * (x[1] + 0.5) * (x[1] + 0.5) + 3.0;
  };
  NelderMeadOptions opts;
  opts.tolerance = 1e-12;
  const auto r = nelder_mead(f, {0.0, 0.0}, opts);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.x[1] == doctest::Approx(-0.5).epsilon(1e-4));
  CHECK(r.evaluations <= opts.max_evaluations);
}

TEST_CASE("nelder_mead on Rosenbrock") {
  auto f = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opts;
  opts.tolerance = 1e-14;
  opts.max_evaluations = 5000;
  const auto r = nelder_mead(f, {-1.2, 1.0}, opts);
  CHECK(r.value < 1e-8);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-3);
  CHECK(std::abs(r.x[1] - 1.0) < 1e-3);
}

TEST_CASE("nelder_mead respects the evaluation budget") {
  int calls = 0;
  auto f = [&](const std::vector<double>& x) {
    ++calls;
    return x[0] * x[0];
  };
  NelderMeadOptions opts;
  opts.tolerance = 0.0;
  opts.max_evaluations = 40;
  const auto r = nelder_mead(f, {3.0}, opts);
  CHECK(!r.converged);
  CHECK(calls == r.evaluations);
  CHECK(r.evaluations <= 40 + 2);
}
