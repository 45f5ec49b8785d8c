#include "symcirc/walk.hpp"

#include <stdexcept>
#include <string>

namespace symcirc {

namespace {

using Poly = std::vector<Rational>;  // ascending powers

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly(std::initializer_list<long> coeffs) {
  Poly p;
  for (long c : coeffs) p.emplace_back(c);
  return p;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

struct RationalFunction {
  Poly num;
  Poly den;
};

RationalFunction closed_form(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Unitary:
      return {poly({-1, 0, 1}), poly({1, 0, 1})};
    case SymmetryClass::COE: {
      const Poly a = poly({-1, 0, 1});
      return {mul(mul(a, a), poly({2, 0, 4, 0, 1})), mul(poly({1, 0, 1}), poly({2, 0, 2, 0, 3, 0, 1}))};
    }
    case SymmetryClass::CSE:
      return {poly({-6, 0, 3, 0, 5, 0, -5, 0, 1}), poly({-2, 0, 1, 0, 1, 0, -3, 0, 1})};
    case SymmetryClass::Orthogonal:
      return {poly({-3, 1, 0, 1, 1}), mul(poly({1, 1}), poly({1, 2, 0, 1}))};
    case SymmetryClass::Symplectic:
      return {poly({-3, 1, 0, -1, 1}), mul(poly({1, 0, 1}), poly({1, -1, 1}))};
  }
  throw std::logic_error("unhandled class");
}

void check_probability(const Rational& p, const char* what) {
  if (p < 0 || p > 1) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

struct SiteType {
  Rational count;
  int fl;  // parity factor when the site is the left site of a gate
  int fr;  // parity factor when the site is the right site of a gate
  bool identity;
};

std::vector<SiteType> site_types(SymmetryClass cls, int q) {
  const Rational Q(q);
  if (cls == SymmetryClass::Orthogonal) {
    // symmetric and antisymmetric Hermitian basis elements
    return {{Rational(1), 1, 1, true}, {Q * (Q + 1) / 2 - 1, 1, 1, false}, {Q * (Q - 1) / 2, -1, -1, false}};
  }
  if (cls == SymmetryClass::Symplectic) {
    if (q % 2 != 0) throw std::invalid_argument("symplectic chain needs even q");
    // joint (symplectic-conjugation, transposition) parities of single-site basis elements
    return {{Rational(1), 1, 1, true},
            {Q * Q / 4 - 1, 1, 1, false},
            {(Q * Q - 2 * Q) / 4, 1, -1, false},
            {(Q * Q + 2 * Q) / 4, -1, 1, false},
            {Q * Q / 4, -1, -1, false}};
  }
  throw std::invalid_argument("even/odd chain is defined for the orthogonal and symplectic classes");
}

int pidx(int f) { return f > 0 ? 0 : 1; }

Rational safe_div(const Rational& a, const Rational& b) { return b == 0 ? Rational(0) : a / b; }

} // namespace

WalkSolution biased_walk(const Rational& p) {
  check_probability(p, "back-step probability");
  WalkSolution w;
  w.p = p;
  w.alpha = 0;
  w.v_B = 1 - 2 * p;
  w.D0 = 2 * p * (1 - p);
  w.D = w.D0;
  return w;
}

WalkSolution persistent_walk(const Rational& p1, const Rational& p2) {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
  if (p1 == 0 && p2 == 1) throw std::invalid_argument("persistent walk with p1 = 0, p2 = 1 has no unique stationary state");
  WalkSolution w;
  w.alpha = p2 - p1;
  w.p = p1 / (1 + p1 - p2);
  w.v_B = 1 - 2 * w.p;
  w.D0 = 2 * w.p * (1 - w.p);
  if (w.alpha == 1) throw std::invalid_argument("persistence 1 gives no diffusive limit");
  w.D = w.D0 * (1 + w.alpha) / (1 - w.alpha);
  return w;
}

void FourStateProbs::validate() const {
  for (const Rational* r : {&alpha, &beta, &gamma, &delta, &mu, &nu, &sigma, &tau})
    if (*r < 0 || *r > 1) throw std::invalid_argument("four-state probabilities must lie in [0, 1]");
  if (alpha + beta + gamma + delta != 1 || mu + nu + sigma + tau != 1)
    throw std::invalid_argument("four-state probabilities must sum to one per parity");
  if (gamma + delta + sigma + tau == 0) throw std::invalid_argument("parity chain is reducible");
}

WalkSolution four_state_front(const FourStateProbs& pr) {
  pr.validate();
  const auto& [a, b, g, d, m, n, s, t] = pr;
  const Rational S = g + d + s + t;
  const Rational pe = (s + t) / S;
  WalkSolution w;
  w.p = (b + d) * pe + (n + t) * (1 - pe);
  w.alpha = 1 - S;
  w.v_B = ((g + d) * (s + m - t - n) + (s + t) * (a + g - b - d)) / S;
  w.D0 = 2 * w.p * (1 - w.p);
  const Rational corr = 2 * (a + g - m - s) / S * ((s + t) * (a - g - b + d) + (d + g) * (s - m - t + n)) / S;
  w.D = (1 + corr) * w.D0;
  return w;
}

ChainCumulants four_state_cumulants(const FourStateProbs& pr) {
  pr.validate();
  const auto& [a, b, g, d, m, n, s, t] = pr;
  // lambda^2 - T(theta) lambda + Delta(theta) = 0 at lambda(0) = 1
  const Rational T0 = a + b + m + n;
  const Rational T1 = (a + m) - (b + n);
  const Rational T2 = T0;
  const Rational A = a * m - g * s;
  const Rational C = b * n - d * t;
  const Rational D1 = 2 * A - 2 * C;
  const Rational D2 = 4 * A + 4 * C;
  const Rational Fl = 2 - T0;
  const Rational l1 = (T1 - D1) / Fl;
  const Rational l2 = -(2 * l1 * l1 - 2 * T1 * l1 - T2 + D2) / Fl;
  return {l1, (l2 - l1 * l1) / 2};
}

FourStateProbs persistent_embedding(const Rational& p1, const Rational& p2) {
  // "even" = last step forward, "odd" = last step back
  return {1 - p1, Rational(0), Rational(0), p1, Rational(0), p2, 1 - p2, Rational(0)};
}

EvenOddState evenodd_chain(SymmetryClass cls, int q, Edge edge) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const auto types = site_types(cls, q);
  const Rational q2 = Rational(q) * q;

  std::array<Rational, 2> n{Rational(0), Rational(0)};
  for (const auto& u : types)
    for (const auto& v : types) n[pidx(u.fl * v.fr)] += u.count * v.count;
  n[0] -= 1;

  // fraction of interior sites with each factor
  std::array<Rational, 2> s_left{Rational(0), Rational(0)}, s_right{Rational(0), Rational(0)};
  for (const auto& u : types) {
    s_left[pidx(u.fl)] += u.count / q2;
    s_right[pidx(u.fr)] += u.count / q2;
  }

  std::array<std::array<Rational, 2>, 2> F{}, B{};
  for (auto& row : F) row.fill(Rational(0));
  for (auto& row : B) row.fill(Rational(0));
  const bool right = edge == Edge::Right;
  for (const auto& u : types) {
    if (u.identity) continue;
    // back step: the outer site becomes the identity; the inner operator u pairs with an interior site
    const int par = right ? u.fl : u.fr;
    for (int k = 0; k < 2; ++k) {
      const int fs = k == 0 ? 1 : -1;
      const Rational& w = right ? s_left[k] : s_right[k];
      const int next = right ? fs * u.fr : u.fl * fs;
      B[pidx(par)][pidx(next)] += u.count * w;
    }
    // forward step: outer operator u, inner operator v arbitrary
    for (const auto& v : types) {
      const int p = right ? v.fl * u.fr : u.fl * v.fr;
      const int next = right ? u.fl : u.fr;
      F[pidx(p)][pidx(next)] += u.count * v.count;
    }
  }
  for (int p = 0; p < 2; ++p)
    for (int k = 0; k < 2; ++k) {
      F[p][k] /= n[p];
      B[p][k] /= n[p];
    }

  EvenOddState st;
  st.cls = cls;
  st.q = q;
  st.edge = edge;
  st.n_even = n[0];
  st.n_odd = n[1];
  st.back_even = B[0][0] + B[0][1];
  st.back_odd = B[1][0] + B[1][1];
  const Rational fe = F[0][0] + F[0][1];
  const Rational fo = F[1][0] + F[1][1];
  st.fwd_e_to_e = safe_div(F[0][0], fe);
  st.fwd_e_to_o = safe_div(F[0][1], fe);
  st.fwd_o_to_e = safe_div(F[1][0], fo);
  st.fwd_o_to_o = safe_div(F[1][1], fo);
  st.back_e_to_e = safe_div(B[0][0], st.back_even);
  st.back_e_to_o = safe_div(B[0][1], st.back_even);
  st.back_o_to_e = safe_div(B[1][0], st.back_odd);
  st.back_o_to_o = safe_div(B[1][1], st.back_odd);
  st.probs = {F[0][0], B[0][0], F[0][1], B[0][1], F[1][1], B[1][1], F[1][0], B[1][0]};
  st.probs.validate();
  st.recursion = {{{F[0][0] + B[0][0], F[1][0] + B[1][0]}, {F[0][1] + B[0][1], F[1][1] + B[1][1]}}};
  const Rational to_odd = st.recursion[1][0];
  const Rational to_even = st.recursion[0][1];
  st.p_even = to_even / (to_even + to_odd);
  st.p_odd = 1 - st.p_even;
  st.p = st.back_even * st.p_even + st.back_odd * st.p_odd;
  return st;
}

Rational closed_form_vb(SymmetryClass cls, int q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const auto f = closed_form(cls);
  return eval(f.num, Rational(q)) / eval(f.den, Rational(q));
}

Rational closed_form_back_probability(SymmetryClass cls, int q) { return (1 - closed_form_vb(cls, q)) / 2; }

std::vector<Rational> series_vb(SymmetryClass cls, int order) {
  if (order < 0 || order > 8) throw std::invalid_argument("series order must lie in [0, 8]");
  const auto f = closed_form(cls);
  const int m = degree(f.num);
  const int k = degree(f.den);
  const int shift = k - m;
  if (shift < 0) throw std::logic_error("closed form grows with q");
  // in x = 1/q: v = x^shift * rev(num)(x) / rev(den)(x)
  Poly a(order + 1, Rational(0)), b(k + 1, Rational(0));
  for (int i = 0; i <= m && i <= order; ++i) a[i] = f.num[m - i];
  for (int i = 0; i <= k; ++i) b[i] = f.den[k - i];
  std::vector<Rational> c(order + 1, Rational(0));
  Poly quotient(order + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    Rational acc = a[i];
    for (int j = 1; j <= i && j <= k; ++j) acc -= b[j] * quotient[i - j];
    quotient[i] = acc / b[0];
  }
  for (int i = 0; i + shift <= order; ++i) c[i + shift] = quotient[i];
  return c;
}

CircularEndpoint circular_endpoint(SymmetryClass cls, int q, const Rational& identity_weight) {
  if (cls != SymmetryClass::COE && cls != SymmetryClass::CSE)
    throw std::invalid_argument("circular endpoint walk is defined for COE and CSE");
  check_probability(identity_weight, "identity weight");
  const long d = static_cast<long>(q) * q;
  const auto c = rates(cls, d).circular();
  const Rational half(d, 2);
  CircularEndpoint e;
  e.p1 = c.p_self + (half - 2) * c.p_commute + half * c.p_anticommute;
  e.p2 = (1 - identity_weight) * ((half - 1) * c.p_commute + half * c.p_anticommute) +
         identity_weight * Rational(d - 1) * c.p_commute;
  return e;
}

Rational default_identity_weight(SymmetryClass cls, int q) {
  const Rational q2 = Rational(q) * q;
  if (cls == SymmetryClass::COE) return 1 / q2;
  if (cls == SymmetryClass::CSE) return 1 / (q2 + 1);
  throw std::invalid_argument("identity weight is defined for COE and CSE");
}

ClassTheory class_theory(SymmetryClass cls, int q, int series_order) {
  ClassTheory th;
  th.cls = cls;
  th.q = q;
  th.v_closed = closed_form_vb(cls, q);
  th.p_closed = (1 - th.v_closed) / 2;
  th.series = series_vb(cls, series_order);
  const Rational q2 = Rational(q) * q;
  switch (cls) {
    case SymmetryClass::Unitary:
      th.walk = biased_walk(1 / (q2 + 1));
      th.exact = four_state_cumulants(persistent_embedding(th.walk->p, th.walk->p));
      break;
    case SymmetryClass::COE:
    case SymmetryClass::CSE: {
      if (cls == SymmetryClass::CSE && q % 2 != 0) break;
      const auto e = circular_endpoint(cls, q, default_identity_weight(cls, q));
      th.walk = persistent_walk(e.p1, e.p2);
      th.exact = four_state_cumulants(persistent_embedding(e.p1, e.p2));
      if (cls == SymmetryClass::CSE) {
        const auto alt = circular_endpoint(cls, q, 1 / q2);
        th.alternative = persistent_walk(alt.p1, alt.p2);
      }
      break;
    }
    case SymmetryClass::Orthogonal:
    case SymmetryClass::Symplectic: {
      if (cls == SymmetryClass::Symplectic && q % 2 != 0) break;
      th.chain_right = evenodd_chain(cls, q, Edge::Right);
      th.chain_left = evenodd_chain(cls, q, Edge::Left);
      const auto& used = cls == SymmetryClass::Orthogonal ? *th.chain_right : *th.chain_left;
      th.walk = four_state_front(used.probs);
      th.exact = four_state_cumulants(used.probs);
      break;
    }
  }
  return th;
}

} // namespace symcirc
