#pragma once

#include "symcirc/kernels.hpp"
#include "symcirc/pauli.hpp"
#include "symcirc/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace symcirc {

class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FitWindow {
  int lo = 0;
  int hi = 0;
};

struct SimConfig {
  SymmetryClass cls = SymmetryClass::Unitary;
  int sites = 304;
  int layers = 150;
  int ensemble = 2000;
  std::uint64_t seed = 1;
  std::optional<int> initial_site;
  SiteOp initial_op = SiteOp::X;
  int burn_in = 20;
  std::optional<FitWindow> fit_window;
  bool record_occupation = false;

  int start_site() const { return initial_site.value_or(sites / 2); }
  FitWindow window() const { return fit_window.value_or(FitWindow{burn_in, layers}); }
  void validate() const;
};

// Applies layer `layer` (parity = layer mod 2) in place.
void step(PauliString& s, int layer, const TransitionKernel& k, const GateStream& rng);

class EnsembleStats {
 public:
  EnsembleStats(int sites, int layers, int batches, bool occupation = false);

  int sites() const { return sites_; }
  int layers() const { return layers_; }
  int batches() const { return batches_; }
  std::int64_t trajectories() const;

  void record(int batch, int t, EdgeCoords e);
  void record_occupation(int t, const PauliString& s);
  void finish_trajectory(int batch) { ++batch_count_[batch]; }
  void merge(const EnsembleStats& other);

  double mean(Edge e, int t) const;
  double variance(Edge e, int t) const;
  // per-layer mean and variance with one batch left out (-1 keeps all)
  void series(Edge e, int exclude_batch, std::vector<double>& mean, std::vector<double>& var) const;

  double rho(Edge e, int t, int x) const;
  std::span<const std::uint64_t> histogram(Edge e, int t) const;
  bool has_occupation() const { return !occupation_.empty(); }
  double occupation(int t, int x) const;

 private:
  std::size_t sum_index(int batch, int t) const { return static_cast<std::size_t>(batch) * (layers_ + 1) + t; }

  int sites_;
  int layers_;
  int batches_;
  std::vector<std::int64_t> batch_count_;
  std::vector<std::int64_t> sum_r_, sumsq_r_, sum_l_, sumsq_l_;
  std::vector<std::uint64_t> hist_r_, hist_l_;
  std::vector<std::uint64_t> occupation_;
};

// threads <= 0 selects the hardware concurrency
EnsembleStats run_ensemble(const SimConfig& cfg, int threads = 0);

struct EdgeFit {
  double v = 0;
  double v_stderr = 0;
  double D = 0;
  double D_stderr = 0;
  double v_ols_stderr = 0;
  double D_ols_stderr = 0;
  double mean_intercept = 0;
  double var_intercept = 0;
  double r2_mean = 0;
  double r2_var = 0;
};

struct FrontFit {
  FitWindow window;
  int batches = 0;
  EdgeFit right;
  EdgeFit left;
  // average of the two edges, jackknifed jointly
  double v = 0;
  double v_stderr = 0;
  double D = 0;
  double D_stderr = 0;

  const EdgeFit& edge(Edge e) const { return e == Edge::Right ? right : left; }
};

FrontFit fit_front(const EnsembleStats& stats, FitWindow window);

struct ProfileReport {
  int t = 0;
  Edge edge = Edge::Right;
  double sup_norm = 0;
  double skewness = 0;
  double mean = 0;
  double variance = 0;
  double predicted_mean = 0;
  double predicted_variance = 0;
};

ProfileReport front_profile_check(const EnsembleStats& stats, const FrontFit& fit, int t, Edge edge = Edge::Right);

} // namespace symcirc
