#include <cmath>

#include "doctest.h"
#include "mlqm/errors.hpp"
#include "mlqm/roots.hpp"
#include "test_util.hpp"

using namespace mlqm;

TEST_CASE("find_root solves a transcendental equation to full precision") {
  // x = cos(x) has the unique root 0.7390851332151606416553...
  const auto res = roots::find_root([](double x) { return std::cos(x) - x; },
                                    roots::RootBracket{0.0, 1.0});
  CHECK(std::abs(res.x - 0.7390851332151606416553) < 1e-14);
  CHECK(std::abs(res.f) < 1e-14);
  CHECK(res.iterations > 0);
}

TEST_CASE("find_root handles roots at a bracket endpoint") {
  const auto res = roots::find_root([](double x) { return x * x - 4.0; },
                                    roots::RootBracket{2.0, 5.0});
  CHECK(res.x == 2.0);
}

TEST_CASE("find_root rejects brackets that do not straddle a sign change") {
  CHECK_THROWS_AS((void)roots::find_root([](double x) { return x * x + 1.0; },
                                         roots::RootBracket{-1.0, 1.0}),
                  InvalidBracket);
}

TEST_CASE("find_root converges on a nearly flat function") {
  // f(x) = (x - 1)^9 is pathologically flat; bisection fallback must carry
  // the iteration when interpolation stalls.
  const auto res = roots::find_root(
      [](double x) { return std::pow(x - 1.0, 9); },
      roots::RootBracket{0.0, 3.0}, 1e-14, 1e-14, 400);
  CHECK(std::abs(res.x - 1.0) < 1e-5);
}

TEST_CASE("expand_bracket grows an interval until the sign changes") {
  const auto br = roots::expand_bracket(
      [](double x) { return x - 100.0; }, 0.5, 1.0);
  CHECK(br.lo < 100.0);
  CHECK(br.hi > 100.0);
}

TEST_CASE("expand_bracket gives up when no sign change exists") {
  CHECK_THROWS_AS((void)roots::expand_bracket(
                      [](double x) { return x * x + 1.0; }, 0.5, 1.0, 8),
                  InvalidBracket);
}
