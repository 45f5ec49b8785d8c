#include "symcirc/kernels.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace symcirc {

std::string_view name(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Unitary: return "unitary";
    case SymmetryClass::COE: return "coe";
    case SymmetryClass::CSE: return "cse";
    case SymmetryClass::Orthogonal: return "orthogonal";
    case SymmetryClass::Symplectic: return "symplectic";
  }
  return "?";
}

SymmetryClass parse_class(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "unitary" || s == "u") return SymmetryClass::Unitary;
  if (s == "coe") return SymmetryClass::COE;
  if (s == "cse") return SymmetryClass::CSE;
  if (s == "orthogonal" || s == "o") return SymmetryClass::Orthogonal;
  if (s == "symplectic" || s == "sp") return SymmetryClass::Symplectic;
  throw std::invalid_argument("unknown symmetry class '" + std::string(text) + "'");
}

KernelRates rates(SymmetryClass cls, long d) {
  if (d < 4) throw std::invalid_argument("gate dimension d must be at least 4");
  const bool odd = d % 2 != 0;
  if (odd && (cls == SymmetryClass::CSE || cls == SymmetryClass::Symplectic))
    throw std::invalid_argument("d must be even for the CSE and symplectic classes");

  const Rational D(d);
  KernelRates out;
  out.cls = cls;
  out.d = d;
  switch (cls) {
    case SymmetryClass::Unitary:
      out.rates = UniformRates{1 / (D * D - 1)};
      break;
    case SymmetryClass::COE: {
      const Rational den = D * (D + 1) * (D + 3);
      out.rates = CircularRates{(3 * D + 8) / den, (D + 4) / den, (D + 2) * (D + 2) / (D * den)};
      break;
    }
    case SymmetryClass::CSE: {
      const Rational den = D * (D - 3) * (D - 1);
      out.rates = CircularRates{(3 * D - 8) / den, (D - 4) / den, (D - 2) * (D - 2) / (D * den)};
      break;
    }
    case SymmetryClass::Orthogonal:
      out.rates = ParityRates{2 / ((D - 1) * (D + 2)), 2 / (D * (D - 1)), (D - 1) * (D + 2) / 2,
                              D * (D - 1) / 2, Rational(0)};
      break;
    case SymmetryClass::Symplectic:
      out.rates = ParityRates{2 / ((D + 1) * (D - 2)), 2 / (D * (D + 1)), (D + 1) * (D - 2) / 2,
                              D * (D + 1) / 2, 2 / ((D - 1) * (D + 1))};
      break;
  }
  return out;
}

Parity class_parity(SymmetryClass cls, TwoSitePauli p) {
  if (cls == SymmetryClass::Orthogonal) return transpose_parity(p);
  if (cls == SymmetryClass::Symplectic) return sympl_parity(p);
  throw std::invalid_argument("parity is defined only for the orthogonal and symplectic classes");
}

TransitionKernel::TransitionKernel(SymmetryClass cls) : cls_(cls) {
  const KernelRates r = rates(cls, 4);
  for (auto& row : exact_) row.fill(Rational(0));
  exact_[0][0] = 1;

  for (int a = 1; a < 16; ++a) {
    const auto pa = TwoSitePauli::from_index(a);
    for (int b = 1; b < 16; ++b) {
      const auto pb = TwoSitePauli::from_index(b);
      Rational& e = exact_[a][b];
      switch (cls) {
        case SymmetryClass::Unitary:
          e = r.uniform().p_uniform;
          break;
        case SymmetryClass::COE:
        case SymmetryClass::CSE: {
          const auto& c = r.circular();
          if (a == b) e = c.p_self;
          else e = symplectic_inner(pa, pb) ? c.p_anticommute : c.p_commute;
          break;
        }
        case SymmetryClass::Orthogonal:
        case SymmetryClass::Symplectic: {
          const auto& par = r.parity();
          const Parity from = class_parity(cls, pa);
          if (class_parity(cls, pb) == from) e = from == Parity::Even ? par.p_even : par.p_odd;
          break;
        }
      }
    }
  }

  for (int a = 0; a < 16; ++a) {
    Rational sum = 0;
    for (int b = 0; b < 16; ++b) {
      if (exact_[a][b] < 0) throw std::logic_error("negative kernel entry");
      sum += exact_[a][b];
      prob_[a][b] = to_double(exact_[a][b]);
      cumulative_[a][b] = to_double(sum);
    }
    if (sum != 1) throw std::logic_error("kernel row " + std::to_string(a) + " is not stochastic");
    cumulative_[a][15] = 1.0;
  }
}

const TransitionKernel& kernel(SymmetryClass cls) {
  static const std::array<TransitionKernel, 5> all = {
      TransitionKernel(SymmetryClass::Unitary), TransitionKernel(SymmetryClass::COE),
      TransitionKernel(SymmetryClass::CSE), TransitionKernel(SymmetryClass::Orthogonal),
      TransitionKernel(SymmetryClass::Symplectic)};
  return all[static_cast<int>(cls)];
}

} // namespace symcirc
