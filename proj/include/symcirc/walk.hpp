#pragma once

#include "symcirc/kernels.hpp"
#include "symcirc/pauli.hpp"
#include "symcirc/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace symcirc {

struct WalkSolution {
  Rational p;
  Rational alpha;
  Rational v_B;
  Rational D0;
  Rational D;
};

WalkSolution biased_walk(const Rational& p);
WalkSolution persistent_walk(const Rational& p1, const Rational& p2);

// alpha: even -> forward -> even, beta: even -> back -> even, gamma: even -> forward -> odd,
// delta: even -> back -> odd, mu: odd -> forward -> odd, nu: odd -> back -> odd,
// sigma: odd -> forward -> even, tau: odd -> back -> even
struct FourStateProbs {
  Rational alpha, beta, gamma, delta;
  Rational mu, nu, sigma, tau;

  void validate() const;
};

// Closed-form drift and diffusion of the four-state continuum limit.
WalkSolution four_state_front(const FourStateProbs& pr);

struct ChainCumulants {
  Rational v;
  Rational D;
};

// Exact asymptotic drift and diffusion from the leading eigenvalue of the tilted transfer matrix.
ChainCumulants four_state_cumulants(const FourStateProbs& pr);

FourStateProbs persistent_embedding(const Rational& p1, const Rational& p2);

struct EvenOddState {
  SymmetryClass cls = SymmetryClass::Orthogonal;
  int q = 2;
  Edge edge = Edge::Right;
  Rational n_even, n_odd;
  // probability of the edge moving back given the parity of the edge window
  Rational back_even, back_odd;
  // parity transitions conditioned on the direction of the move
  Rational fwd_e_to_e, fwd_e_to_o, fwd_o_to_e, fwd_o_to_o;
  Rational back_e_to_e, back_e_to_o, back_o_to_e, back_o_to_o;
  // p(t) = recursion * p(t-1) on (p_even, p_odd)
  std::array<std::array<Rational, 2>, 2> recursion;
  Rational p_even, p_odd;
  Rational p;
  FourStateProbs probs;
};

// Orthogonal: any q >= 2. Symplectic: even q, symplectic form on the left site of each gate.
EvenOddState evenodd_chain(SymmetryClass cls, int q, Edge edge = Edge::Right);

Rational closed_form_vb(SymmetryClass cls, int q);
Rational closed_form_back_probability(SymmetryClass cls, int q);

// coefficients c_0..c_order of v_B = sum_k c_k q^-k
std::vector<Rational> series_vb(SymmetryClass cls, int order);

struct CircularEndpoint {
  Rational p1;
  Rational p2;
};

// Back-step probabilities after a forward (p1) and a back (p2) step for COE/CSE, with the
// interior site next to the edge being the identity with probability identity_weight.
CircularEndpoint circular_endpoint(SymmetryClass cls, int q, const Rational& identity_weight);
// 1/q^2 for COE; 1/(q^2+1) for CSE, the weight matching the CSE closed form
Rational default_identity_weight(SymmetryClass cls, int q);

struct ClassTheory {
  SymmetryClass cls = SymmetryClass::Unitary;
  int q = 2;
  Rational v_closed;
  Rational p_closed;
  std::optional<WalkSolution> walk;
  std::optional<ChainCumulants> exact;
  // CSE only: the recipe with identity weight 1/q^2
  std::optional<WalkSolution> alternative;
  std::optional<EvenOddState> chain_right;
  std::optional<EvenOddState> chain_left;
  std::vector<Rational> series;
};

ClassTheory class_theory(SymmetryClass cls, int q, int series_order = 8);

} // namespace symcirc
