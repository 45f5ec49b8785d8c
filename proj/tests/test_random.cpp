#include "symcirc/random.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace symcirc;

TEST_CASE("philox known-answer vectors") {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("gate stream is a pure function of its coordinates") {
  GateStream a(42, 7), b(42, 7), c(43, 7), d(42, 8);
  CHECK(a.uniform(3, 5) == b.uniform(3, 5));
  CHECK(a.uniform(3, 5) != c.uniform(3, 5));
  CHECK(a.uniform(3, 5) != d.uniform(3, 5));
  CHECK(a.uniform(3, 5) != a.uniform(5, 3));
}

TEST_CASE("uniforms lie in [0,1) with the right mean and variance") {
  GateStream g(1, 0);
  double sum = 0, sumsq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = g.uniform(static_cast<std::uint32_t>(i / 1000), static_cast<std::uint32_t>(i % 1000));
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sumsq += u * u;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean - 0.5) < 4 * std::sqrt(1.0 / 12 / n));
  CHECK(std::abs(sumsq / n - mean * mean - 1.0 / 12) < 2e-3);
  CHECK(to_unit(0xffffffffu, 0xffffffffu) < 1.0);
  CHECK(to_unit(0, 0) == 0.0);
}

TEST_CASE("philox stream reproduces and separates streams and domains") {
  PhiloxStream a(5, 1, 0), b(5, 1, 0), c(5, 2, 0), d(5, 1, 1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
    seen.insert(x);
  }
  CHECK(seen.size() == 100);
}
