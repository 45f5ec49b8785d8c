#include "symcirc/kernels.hpp"
#include "symcirc/random.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

using namespace symcirc;

namespace {

TwoSitePauli P(const char* s) { return TwoSitePauli::parse(s); }

// chi-square statistic of 1e6 draws of one kernel row against the exact probabilities
double chi_square(const TransitionKernel& k, TwoSitePauli in, std::array<long, 16>& counts) {
  counts.fill(0);
  const int n = 1000000;
  PhiloxStream rng(2024, static_cast<std::uint64_t>(in.index()), 7);
  for (int i = 0; i < n; ++i) ++counts[apply_gate(k, in, rng.uniform()).index()];
  double chi = 0;
  for (int j = 0; j < 16; ++j) {
    const double e = n * k.probability(in, TwoSitePauli::from_index(j));
    if (e == 0) {
      CHECK(counts[j] == 0);
      continue;
    }
    chi += (counts[j] - e) * (counts[j] - e) / e;
  }
  return chi;
}

} // namespace

TEST_CASE("class names round-trip") {
  for (auto c : kAllClasses) CHECK(parse_class(name(c)) == c);
  CHECK(parse_class("sp") == SymmetryClass::Symplectic);
  CHECK_THROWS_AS(parse_class("goe"), std::invalid_argument);
}

TEST_CASE("rates at d = 4") {
  CHECK(rates(SymmetryClass::Unitary, 4).uniform().p_uniform == frac(1, 15));
  const auto coe = rates(SymmetryClass::COE, 4).circular();
  CHECK(coe.p_self == frac(1, 7));
  CHECK(coe.p_commute == frac(2, 35));
  CHECK(coe.p_anticommute == frac(9, 140));
  const auto cse = rates(SymmetryClass::CSE, 4).circular();
  CHECK(cse.p_self == frac(1, 3));
  CHECK(cse.p_commute == 0);
  CHECK(cse.p_anticommute == frac(1, 12));
  const auto o = rates(SymmetryClass::Orthogonal, 4).parity();
  CHECK(o.p_even == frac(1, 9));
  CHECK(o.p_odd == frac(1, 6));
  CHECK(o.n_even == 9);
  CHECK(o.n_odd == 6);
  const auto sp = rates(SymmetryClass::Symplectic, 4).parity();
  CHECK(sp.p_even == frac(1, 5));
  CHECK(sp.p_even_alt == frac(2, 15));
  CHECK(sp.n_even == 5);
  CHECK(sp.p_odd == frac(1, 10));
  CHECK(sp.n_odd == 10);
}

TEST_CASE("rate identities hold exactly for general d") {
  for (long d = 4; d <= 64; d += 2) {
    for (auto c : {SymmetryClass::COE, SymmetryClass::CSE}) {
      const auto r = rates(c, d).circular();
      const Rational d2 = Rational(d) * d;
      CHECK(r.p_self + r.p_commute * (d2 / 2 - 2) + r.p_anticommute * d2 / 2 == 1);
    }
    for (auto c : {SymmetryClass::Orthogonal, SymmetryClass::Symplectic}) {
      const auto r = rates(c, d).parity();
      CHECK(r.n_even * r.p_even == 1);
      CHECK(r.n_odd * r.p_odd == 1);
    }
  }
  CHECK_THROWS_AS(rates(SymmetryClass::CSE, 5), std::invalid_argument);
  CHECK_THROWS_AS(rates(SymmetryClass::Symplectic, 7), std::invalid_argument);
  CHECK_THROWS_AS(rates(SymmetryClass::Unitary, 3), std::invalid_argument);
}

TEST_CASE("kernel structure for every class") {
  for (auto c : kAllClasses) {
    const auto& k = kernel(c);
    CHECK(k.exact()[0][0] == 1);
    for (int a = 0; a < 16; ++a) {
      Rational sum = 0;
      for (int b = 0; b < 16; ++b) {
        CHECK(k.exact()[a][b] >= 0);
        CHECK(k.exact()[a][b] == k.exact()[b][a]);
        sum += k.exact()[a][b];
      }
      CHECK(sum == 1);
      if (a > 0) CHECK(k.exact()[a][0] == 0);
      double dsum = 0;
      for (int b = 0; b < 16; ++b) dsum += k.matrix()[a][b];
      CHECK(std::abs(dsum - 1) <= 1e-15);
    }
  }
}

TEST_CASE("unitary kernel is the only one with a uniform block") {
  for (auto c : kAllClasses) {
    const auto& k = kernel(c);
    bool uniform = true;
    for (int a = 1; a < 16; ++a)
      for (int b = 1; b < 16; ++b) uniform = uniform && k.exact()[a][b] == frac(1, 15);
    CHECK(uniform == (c == SymmetryClass::Unitary));
  }
}

TEST_CASE("parity conservation") {
  for (auto c : {SymmetryClass::Orthogonal, SymmetryClass::Symplectic}) {
    const auto& k = kernel(c);
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b) {
        const auto pa = TwoSitePauli::from_index(a), pb = TwoSitePauli::from_index(b);
        if (class_parity(c, pa) != class_parity(c, pb)) CHECK(k.exact()[a][b] == 0);
      }
  }
}

TEST_CASE("circular kernels depend only on the commutation class") {
  for (auto c : {SymmetryClass::COE, SymmetryClass::CSE}) {
    const auto& k = kernel(c);
    const auto r = rates(c, 4).circular();
    for (int a = 1; a < 16; ++a)
      for (int b = 1; b < 16; ++b) {
        const auto pa = TwoSitePauli::from_index(a), pb = TwoSitePauli::from_index(b);
        const Rational want = a == b ? r.p_self : symplectic_inner(pa, pb) == 0 ? r.p_commute : r.p_anticommute;
        CHECK(k.exact()[a][b] == want);
      }
  }
  const auto& cse = kernel(SymmetryClass::CSE);
  CHECK(cse.exact()[P("XI").index()][P("XI").index()] == frac(1, 3));
  int anti = 0;
  for (int b = 0; b < 16; ++b)
    if (cse.exact()[P("XI").index()][b] == frac(1, 12)) ++anti;
  CHECK(anti == 8);
}

TEST_CASE("identity is a fixed point of sampling") {
  for (auto c : kAllClasses)
    for (double u : {0.0, 0.5, 0.999999}) CHECK(apply_gate(kernel(c), TwoSitePauli{}, u).is_identity());
}

TEST_CASE("sampling frequencies match the exact rows") {
  std::array<long, 16> counts{};
  // 99.9% quantiles of chi-square: 6 dof -> 22.46, 15 dof -> 37.70
  const double chi_o = chi_square(kernel(SymmetryClass::Orthogonal), P("YI"), counts);
  CHECK(chi_o < 22.46);
  for (int j = 0; j < 16; ++j) {
    if (transpose_parity(TwoSitePauli::from_index(j)) == Parity::Odd) {
      CHECK(std::abs(counts[j] / 1e6 - 1.0 / 6) < 3 * std::sqrt(1.0 / 6 * 5 / 6 / 1e6));
    }
  }
  const double chi_c = chi_square(kernel(SymmetryClass::COE), P("XI"), counts);
  CHECK(chi_c < 37.70);
  CHECK(std::abs(counts[P("XI").index()] / 1e6 - 1.0 / 7) < 3 * std::sqrt(1.0 / 7 * 6 / 7 / 1e6));
}
