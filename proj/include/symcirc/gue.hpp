#pragma once

#include "symcirc/random.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symcirc {

// Pauli string on a few qubits; character i of the label acts on the i-th Kronecker factor.
struct QubitPauli {
  int n = 0;
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  static QubitPauli parse(std::string_view label);
  std::string label() const;
  bool is_identity() const { return (x | z) == 0; }
  std::size_t index() const { return (static_cast<std::size_t>(x) << n) | z; }
  bool anticommutes(const QubitPauli& o) const;
};

Eigen::MatrixXcd pauli_matrix(const QubitPauli& p);

// H = (A + A^dagger)/2 with E|A_ij|^2 = 2/d, so off-diagonal E|H_ij|^2 = 1/d
Eigen::MatrixXcd sample_gue(int dim, PhiloxStream& rng);

class GueEvolution {
 public:
  GueEvolution(const Eigen::MatrixXcd& h, const QubitPauli& initial);

  int dim() const { return static_cast<int>(energies_.size()); }
  const Eigen::VectorXd& energies() const { return energies_; }

  // |gamma_p(t)|^2 for all 4^n strings, indexed by QubitPauli::index()
  std::vector<double> coefficients(double t) const;
  // |Tr e^{iHt}|^2
  double form_factor(double t) const;
  // infinite-time average of |gamma_initial|^2 (non-degenerate spectrum)
  double infinite_time_initial_weight() const;

 private:
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
  Eigen::MatrixXcd o_eigen_;  // initial operator in the eigenbasis
  int n_;
};

std::vector<double> coeffs(const Eigen::MatrixXcd& h, const QubitPauli& initial, double t);

struct GueConfig {
  int qubits = 4;
  int samples = 100;
  double tmax = 200;
  std::uint64_t seed = 1;
  std::string initial = "";  // empty: X on the first qubit
  std::vector<double> times;  // empty: default grid up to tmax

  QubitPauli initial_operator() const;
  std::vector<double> grid() const;
};

struct GueRun {
  int qubits = 0;
  int dim = 0;
  int samples = 0;
  int n_commute = 0;
  int n_anticommute = 0;
  std::vector<double> times;
  std::vector<double> g_initial;
  std::vector<double> g_commute;
  std::vector<double> g_anticommute;
  std::vector<double> r2;
  double max_norm_error = 0;
  // sample average of the exact infinite-time weight of the initial operator
  double infinite_time_initial = 0;
};

// threads <= 0 selects the hardware concurrency
GueRun ensemble_curves(const GueConfig& cfg, int threads = 0);

struct GueRegimes {
  std::size_t dip_index = 0;
  double dip_time = 0;
  std::size_t plateau_index = 0;
  double plateau_time = 0;
  double plateau_ratio = 0;
  double infinite_time_ratio = 0;
  // group averages over (dip, plateau)
  double ramp_commute = 0;
  double ramp_anticommute = 0;
};

GueRegimes locate_regimes(const GueRun& run);

} // namespace symcirc
