#pragma once

#include "symcirc/pauli.hpp"
#include "symcirc/rational.hpp"

#include <array>
#include <string_view>
#include <variant>

namespace symcirc {

enum class SymmetryClass { Unitary, COE, CSE, Orthogonal, Symplectic };

inline constexpr std::array<SymmetryClass, 5> kAllClasses = {
    SymmetryClass::Unitary, SymmetryClass::COE, SymmetryClass::CSE, SymmetryClass::Orthogonal,
    SymmetryClass::Symplectic};

std::string_view name(SymmetryClass cls);
SymmetryClass parse_class(std::string_view text);

struct UniformRates {
  Rational p_uniform;
};

struct CircularRates {
  Rational p_self;
  Rational p_commute;
  Rational p_anticommute;
};

struct ParityRates {
  Rational p_even;
  Rational p_odd;
  Rational n_even;
  Rational n_odd;
  // symplectic only: the alternative even rate 2/((d-1)(d+1)); zero otherwise
  Rational p_even_alt;
};

struct KernelRates {
  SymmetryClass cls = SymmetryClass::Unitary;
  long d = 4;
  std::variant<UniformRates, CircularRates, ParityRates> rates;

  const UniformRates& uniform() const { return std::get<UniformRates>(rates); }
  const CircularRates& circular() const { return std::get<CircularRates>(rates); }
  const ParityRates& parity() const { return std::get<ParityRates>(rates); }
};

KernelRates rates(SymmetryClass cls, long d);

// transpose parity for Orthogonal, symplectic parity for Symplectic
Parity class_parity(SymmetryClass cls, TwoSitePauli p);

class TransitionKernel {
 public:
  using ExactMatrix = std::array<std::array<Rational, 16>, 16>;
  using Matrix = std::array<std::array<double, 16>, 16>;

  explicit TransitionKernel(SymmetryClass cls);

  SymmetryClass symmetry_class() const { return cls_; }
  const ExactMatrix& exact() const { return exact_; }
  const Matrix& matrix() const { return prob_; }
  double probability(TwoSitePauli from, TwoSitePauli to) const { return prob_[from.index()][to.index()]; }

  // u in [0, 1)
  TwoSitePauli sample(TwoSitePauli in, double u) const {
    const auto& row = cumulative_[in.index()];
    int j = 0;
    while (j < 15 && !(u < row[j])) ++j;
    return TwoSitePauli::from_index(j);
  }

 private:
  SymmetryClass cls_;
  ExactMatrix exact_;
  Matrix prob_{};
  Matrix cumulative_{};
};

const TransitionKernel& kernel(SymmetryClass cls);

inline TwoSitePauli apply_gate(const TransitionKernel& k, TwoSitePauli in, double u) {
  if (in.is_identity()) return in;
  return k.sample(in, u);
}

} // namespace symcirc
