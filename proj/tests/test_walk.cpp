#include "symcirc/walk.hpp"

#include "symcirc/random.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace symcirc;

namespace {

using Poly = std::vector<Rational>;

Poly P(std::initializer_list<long> c) {
  Poly p;
  for (long v : c) p.emplace_back(v);
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0, pw = 1;
  for (const auto& c : p) {
    acc += c * pw;
    pw *= x;
  }
  return acc;
}

// numerator and denominator in ascending powers of q
std::pair<Poly, Poly> reference_form(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Unitary: return {P({-1, 0, 1}), P({1, 0, 1})};
    case SymmetryClass::COE:
      return {mul(mul(P({-1, 0, 1}), P({-1, 0, 1})), P({2, 0, 4, 0, 1})),
              mul(P({1, 0, 1}), P({2, 0, 2, 0, 3, 0, 1}))};
    case SymmetryClass::CSE: return {P({-6, 0, 3, 0, 5, 0, -5, 0, 1}), P({-2, 0, 1, 0, 1, 0, -3, 0, 1})};
    case SymmetryClass::Orthogonal: return {P({-3, 1, 0, 1, 1}), mul(P({1, 1}), P({1, 2, 0, 1}))};
    case SymmetryClass::Symplectic: return {P({-3, 1, 0, -1, 1}), mul(P({1, 0, 1}), P({1, -1, 1}))};
  }
  return {};
}

// 1/q expansion by long division in x = 1/q, computed independently of the library
std::vector<Rational> reference_series(SymmetryClass cls, int order) {
  const auto [num, den] = reference_form(cls);
  const int m = static_cast<int>(num.size()) - 1, k = static_cast<int>(den.size()) - 1;
  std::vector<Rational> a(order + 1, Rational(0)), out(order + 1, Rational(0));
  for (int i = 0; i <= m && i <= order; ++i) a[i] = num[m - i];
  for (int i = 0; i + (k - m) <= order; ++i) {
    Rational acc = a[i];
    for (int j = 1; j <= i && j <= k; ++j) acc -= den[k - j] * out[i - j + (k - m)];
    out[i + (k - m)] = acc / den[k];
  }
  return out;
}

Rational random_probability(PhiloxStream& rng) {
  const long den = 1 + static_cast<long>(rng() % 997);
  return Rational(static_cast<long>(rng() % (den + 1)), den);
}

FourStateProbs random_four_state(PhiloxStream& rng) {
  auto split = [&](Rational* out) {
    long w[4];
    long total = 0;
    for (auto& v : w) total += (v = static_cast<long>(rng() % 50));
    if (total == 0) w[2] = total = 1;
    for (int i = 0; i < 4; ++i) out[i] = Rational(w[i], total);
  };
  FourStateProbs pr;
  Rational e[4], o[4];
  do {
    split(e);
    split(o);
    pr = {e[0], e[1], e[2], e[3], o[0], o[1], o[2], o[3]};
  } while (pr.gamma + pr.delta + pr.sigma + pr.tau == 0 || pr.alpha + pr.beta + pr.mu + pr.nu == 2);
  return pr;
}

// exact position distribution by dynamic programming; returns (drift, diffusion) from the last half
std::pair<double, double> dp_cumulants(const FourStateProbs& pr, int steps) {
  const double a = to_double(pr.alpha), b = to_double(pr.beta), g = to_double(pr.gamma), d = to_double(pr.delta);
  const double m = to_double(pr.mu), n = to_double(pr.nu), s = to_double(pr.sigma), t = to_double(pr.tau);
  const int w = 2 * steps + 3, c = steps + 1;
  const double S = g + d + s + t;
  std::vector<double> pe(w, 0.0), po(w, 0.0), ne(w), no(w);
  pe[c] = (s + t) / S;
  po[c] = (g + d) / S;
  double mean_half = 0, var_half = 0, mean = 0, var = 0;
  for (int k = 1; k <= steps; ++k) {
    std::fill(ne.begin(), ne.end(), 0.0);
    std::fill(no.begin(), no.end(), 0.0);
    for (int x = 1; x + 1 < w; ++x) {
      ne[x + 1] += pe[x] * a + po[x] * s;
      ne[x - 1] += pe[x] * b + po[x] * t;
      no[x + 1] += pe[x] * g + po[x] * m;
      no[x - 1] += pe[x] * d + po[x] * n;
    }
    pe.swap(ne);
    po.swap(no);
    if (k == steps / 2 || k == steps) {
      double m1 = 0, m2 = 0;
      for (int x = 0; x < w; ++x) {
        const double p = pe[x] + po[x];
        m1 += p * (x - c);
        m2 += p * (x - c) * (x - c);
      }
      (k == steps ? mean : mean_half) = m1;
      (k == steps ? var : var_half) = m2 - m1 * m1;
    }
  }
  const double dt = steps - steps / 2;
  return {(mean - mean_half) / dt, (var - var_half) / (2 * dt)};
}

} // namespace

TEST_CASE("biased walk") {
  auto w = biased_walk(frac(1, 5));
  CHECK(w.v_B == frac(3, 5));
  CHECK(w.D == frac(8, 25));
  CHECK(w.alpha == 0);
  w = biased_walk(frac(1, 2));
  CHECK(w.v_B == 0);
  CHECK(w.D == frac(1, 2));
  w = biased_walk(0);
  CHECK(w.v_B == 1);
  CHECK(w.D == 0);
  CHECK_THROWS_AS(biased_walk(frac(3, 2)), std::invalid_argument);
}

TEST_CASE("persistent walk") {
  const auto w = persistent_walk(frac(19, 70), frac(51, 280));
  CHECK(w.p == frac(76, 305));
  CHECK(w.v_B == frac(153, 305));
  CHECK(w.v_B == 1 - 2 * w.p);
  CHECK(std::abs(to_double(w.D) - 0.31) < 0.01);
  const auto u = persistent_walk(frac(1, 3), frac(1, 3));
  CHECK(u.alpha == 0);
  CHECK(u.D == u.D0);
  CHECK(u.p == frac(1, 3));
}

TEST_CASE("persistent walk diffusion is continuous at zero persistence") {
  for (int i = 1; i <= 9; ++i) {
    const Rational p(i, 10);
    for (int k = 1; k <= 5; ++k) {
      const Rational eps(1, 1000 * k);
      const auto w = persistent_walk(p, p + eps);
      CHECK(abs(w.D - w.D0) <= 5 * abs(w.alpha));
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_vb(SymmetryClass::Unitary, 2) == frac(3, 5));
  CHECK(closed_form_vb(SymmetryClass::COE, 2) == frac(153, 305));
  CHECK(closed_form_vb(SymmetryClass::CSE, 2) == frac(11, 41));
  CHECK(closed_form_vb(SymmetryClass::Orthogonal, 2) == frac(23, 39));
  CHECK(closed_form_vb(SymmetryClass::Symplectic, 2) == frac(7, 15));
  for (auto cls : kAllClasses)
    for (int q = 2; q <= 10; ++q) {
      const auto [num, den] = reference_form(cls);
      const Rational v = closed_form_vb(cls, q);
      CHECK(v == eval(num, q) / eval(den, q));
      CHECK(v > 0);
      CHECK(v < 1);
      if (cls != SymmetryClass::Unitary) CHECK(v < closed_form_vb(SymmetryClass::Unitary, q));
    }
}

TEST_CASE("series coefficients") {
  auto as_long = [](const std::vector<Rational>& c) {
    std::vector<long> out;
    for (const auto& r : c) out.push_back(static_cast<long>(r));
    return out;
  };
  CHECK(as_long(series_vb(SymmetryClass::Unitary, 6)) == std::vector<long>{1, 0, -2, 0, 2, 0, -2});
  CHECK(as_long(series_vb(SymmetryClass::COE, 6)) == std::vector<long>{1, 0, -2, 0, -2, 0, 14});
  CHECK(as_long(series_vb(SymmetryClass::CSE, 6)) == std::vector<long>{1, 0, -2, 0, -2, 0, -2});
  CHECK(as_long(series_vb(SymmetryClass::Orthogonal, 6)) == std::vector<long>{1, 0, -2, 0, 0, 6, -4});
  CHECK(as_long(series_vb(SymmetryClass::Symplectic, 7)) == std::vector<long>{1, 0, -2, 0, 0, -2, 0, 4});
  for (auto cls : kAllClasses) CHECK(series_vb(cls, 8) == reference_series(cls, 8));
  CHECK_THROWS_AS(series_vb(SymmetryClass::Unitary, 9), std::invalid_argument);
}

TEST_CASE("series partial sums are bounded by the first omitted term at q = 100") {
  const Rational x(1, 100);
  for (auto cls : kAllClasses) {
    const auto full = reference_series(cls, 16);
    const Rational v = closed_form_vb(cls, 100);
    for (int order = 4; order <= 8; ++order) {
      const auto c = series_vb(cls, order);
      Rational partial = 0, pw = 1;
      for (const auto& ck : c) {
        partial += ck * pw;
        pw *= x;
      }
      Rational omitted = 0;
      for (int k = order + 1; k <= 16 && omitted == 0; ++k) {
        Rational xk = 1;
        for (int i = 0; i < k; ++i) xk *= x;
        omitted = full[k] * xk;
      }
      CHECK_MESSAGE(to_double(abs(v - partial)) <= to_double(abs(omitted)) + 1e-12, name(cls), " order ", order);
    }
  }
}

TEST_CASE("orthogonal even/odd chain") {
  const auto c = evenodd_chain(SymmetryClass::Orthogonal, 2);
  CHECK(c.p_even == frac(9, 13));
  CHECK(c.p_odd == frac(4, 13));
  CHECK(c.p == frac(8, 39));
  CHECK(c.p_even + c.p_odd == 1);
  const auto w = four_state_front(c.probs);
  CHECK(w.v_B == frac(23, 39));
  CHECK(std::abs(to_double(w.D) - 0.31) < 0.01);
  for (int q = 2; q <= 8; ++q) {
    const auto cq = evenodd_chain(SymmetryClass::Orthogonal, q);
    const Rational Q(q);
    CHECK(cq.p == (Q * Q + Q + 2) / ((Q + 1) * (Q * Q * Q + 2 * Q + 1)));
    CHECK(1 - 2 * cq.p == closed_form_vb(SymmetryClass::Orthogonal, q));
  }
}

TEST_CASE("chain stationarity is exact") {
  for (auto cls : {SymmetryClass::Orthogonal, SymmetryClass::Symplectic})
    for (int q : {2, 4, 6})
      for (Edge e : {Edge::Right, Edge::Left}) {
        const auto c = evenodd_chain(cls, q, e);
        const auto& r = c.recursion;
        CHECK(r[0][0] * c.p_even + r[0][1] * c.p_odd == c.p_even);
        CHECK(r[1][0] * c.p_even + r[1][1] * c.p_odd == c.p_odd);
        CHECK_NOTHROW(c.probs.validate());
      }
  CHECK_THROWS_AS(evenodd_chain(SymmetryClass::Symplectic, 3), std::invalid_argument);
  CHECK_THROWS_AS(evenodd_chain(SymmetryClass::COE, 2), std::invalid_argument);
}

TEST_CASE("symplectic chain") {
  for (Edge e : {Edge::Right, Edge::Left}) {
    const auto c = evenodd_chain(SymmetryClass::Symplectic, 2, e);
    CHECK(1 - 2 * c.p == frac(7, 15));
    CHECK(four_state_cumulants(c.probs).v == frac(7, 15));
  }
  for (int q : {4, 6}) {
    const Rational Q2 = Rational(q) * q;
    CHECK(1 - 2 * evenodd_chain(SymmetryClass::Symplectic, q).p == (Q2 * Q2 - 2 * Q2 - 1) / ((Q2 - 1) * (Q2 + 1)));
  }
}

TEST_CASE("circular endpoint walks") {
  const auto coe = circular_endpoint(SymmetryClass::COE, 2, default_identity_weight(SymmetryClass::COE, 2));
  CHECK(coe.p1 == frac(19, 70));
  CHECK(coe.p2 == frac(51, 280));
  const auto recipe = persistent_walk(circular_endpoint(SymmetryClass::CSE, 2, frac(1, 4)).p1,
                                      circular_endpoint(SymmetryClass::CSE, 2, frac(1, 4)).p2);
  CHECK(recipe.p == frac(4, 11));
  CHECK(recipe.v_B == frac(3, 11));
  const auto cse = circular_endpoint(SymmetryClass::CSE, 2, default_identity_weight(SymmetryClass::CSE, 2));
  CHECK(cse.p2 == frac(2, 15));
  CHECK(persistent_walk(cse.p1, cse.p2).p == frac(15, 41));
  for (int q = 2; q <= 8; ++q) {
    const auto e = circular_endpoint(SymmetryClass::COE, q, default_identity_weight(SymmetryClass::COE, q));
    CHECK(persistent_walk(e.p1, e.p2).v_B == closed_form_vb(SymmetryClass::COE, q));
  }
  CHECK_THROWS_AS(circular_endpoint(SymmetryClass::Orthogonal, 2, frac(1, 4)), std::invalid_argument);
}

TEST_CASE("class theory at q = 2") {
  CHECK(class_theory(SymmetryClass::Unitary, 2).walk->D == frac(8, 25));
  CHECK(class_theory(SymmetryClass::COE, 2).walk->v_B == frac(153, 305));
  const auto cse = class_theory(SymmetryClass::CSE, 2);
  CHECK(cse.walk->v_B == frac(11, 41));
  CHECK(cse.alternative->v_B == frac(3, 11));
  CHECK(std::abs(to_double(cse.walk->D) - 0.22) < 0.01);
  CHECK(class_theory(SymmetryClass::Orthogonal, 2).walk->v_B == frac(23, 39));
  CHECK(class_theory(SymmetryClass::Symplectic, 2).walk->v_B == frac(7, 15));
  CHECK(!class_theory(SymmetryClass::CSE, 3).walk);
}

TEST_CASE("four-state front reduces to the persistent walk on 1000 random tuples") {
  PhiloxStream rng(17, 0, 3);
  int checked = 0;
  while (checked < 1000) {
    const Rational p1 = random_probability(rng), p2 = random_probability(rng);
    if (p2 - p1 == 1 || (p1 == 0 && p2 == 1) || (p1 == 0 && p2 == 0)) continue;
    const auto four = four_state_front(persistent_embedding(p1, p2));
    const auto two = persistent_walk(p1, p2);
    REQUIRE(four.p == two.p);
    REQUIRE(four.v_B == two.v_B);
    REQUIRE(four.D == two.D);
    REQUIRE(four.alpha == two.alpha);
    const auto exact = four_state_cumulants(persistent_embedding(p1, p2));
    REQUIRE(exact.v == two.v_B);
    REQUIRE(exact.D == two.D);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("four-state drift is exact and the cumulants match a dynamic-programming oracle") {
  PhiloxStream rng(23, 0, 3);
  for (int i = 0; i < 25; ++i) {
    const FourStateProbs pr = random_four_state(rng);
    const auto exact = four_state_cumulants(pr);
    CHECK(four_state_front(pr).v_B == exact.v);
    const auto [v, D] = dp_cumulants(pr, 1200);
    CHECK(std::abs(v - to_double(exact.v)) < 1e-7);
    CHECK(std::abs(D - to_double(exact.D)) < 1e-6);
  }
  for (auto cls : {SymmetryClass::Orthogonal, SymmetryClass::Symplectic}) {
    const auto c = evenodd_chain(cls, 2);
    const auto [v, D] = dp_cumulants(c.probs, 1200);
    const auto exact = four_state_cumulants(c.probs);
    CHECK(std::abs(v - to_double(exact.v)) < 1e-9);
    CHECK(std::abs(D - to_double(exact.D)) < 1e-8);
  }
}

TEST_CASE("four-state validation") {
  FourStateProbs bad{frac(1, 2), frac(1, 2), frac(1, 2), 0, frac(1, 2), frac(1, 2), 0, 0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  FourStateProbs reducible{frac(1, 2), frac(1, 2), 0, 0, frac(1, 2), frac(1, 2), 0, 0};
  CHECK_THROWS_AS(four_state_front(reducible), std::invalid_argument);
}
