#pragma once

#include "symcirc/kernels.hpp"
#include "symcirc/random.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <vector>

namespace symcirc {

using Gate = Eigen::Matrix4cd;
using Moments16 = std::array<std::array<double, 16>, 16>;

// J = iY (x) I
const Eigen::Matrix4d& symplectic_form();

const Eigen::Matrix4cd& pauli4(TwoSitePauli p);

Gate sample_gate(SymmetryClass cls, PhiloxStream& rng);

struct GateResiduals {
  double unitarity = 0;
  double constraint = 0;
};

GateResiduals residuals(SymmetryClass cls, const Gate& u);

// c[a][p] = Tr(U P_a U^dagger P_p); throws if a trace has an imaginary part above 1e-10
Moments16 gate_traces(const Gate& u);
// (1/16) c[a][p]^2
Moments16 gate_moments(const Gate& u);

struct CrossMoment {
  int a = 0;
  int b = 0;
  int p = 0;
  double mean = 0;
  double std_error = 0;
};

struct KernelEstimate {
  SymmetryClass cls = SymmetryClass::Unitary;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Moments16 mean{};
  Moments16 std_error{};
  // O/Sp: per-sample average over the even -> even non-identity block
  double even_block_mean = 0;
  double even_block_std_error = 0;
  std::vector<CrossMoment> cross;
  double max_residual = 0;
};

// samples >= 10000; threads <= 0 selects the hardware concurrency
KernelEstimate estimate_kernel(SymmetryClass cls, std::size_t samples, std::uint64_t seed, int threads = 0);

// Transform applied to every sampled gate before the moments are taken (Haar invariance checks).
using GateTransform = Gate (*)(const Gate&, const void*);
KernelEstimate estimate_kernel_transformed(SymmetryClass cls, std::size_t samples, std::uint64_t seed, int threads,
                                           GateTransform transform, const void* context);

struct OracleReport {
  double max_abs_dev = 0;
  double max_z = 0;
  int worst_from = 0;
  int worst_to = 0;
  int failures = 0;
  bool pass = false;
  Moments16 z{};
};

OracleReport compare(const KernelEstimate& est, const TransitionKernel& k);

struct EvenRateResolution {
  double pooled_mean = 0;
  double pooled_std_error = 0;
  Rational consistent;
  Rational alternative;
  double z_consistent = 0;
  double z_alternative = 0;
  Rational supported;
};

// pools the symplectic even -> even non-identity entries
EvenRateResolution resolve_symplectic_even_rate(const KernelEstimate& est);

} // namespace symcirc
