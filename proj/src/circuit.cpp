#include "symcirc/circuit.hpp"

#include "symcirc/regression.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

namespace symcirc {

void SimConfig::validate() const {
  if (layers < 1) throw std::invalid_argument("layers must be at least 1");
  if (ensemble < 1) throw std::invalid_argument("ensemble must be at least 1");
  if (sites <= 2 * layers + 2)
    throw std::invalid_argument("sites must exceed 2*layers+2 so the light cone cannot reach a boundary");
  if (initial_op == SiteOp::I) throw std::invalid_argument("initial operator must not be the identity");
  const int c = start_site();
  if (c < layers + 1 || c + layers > sites - 2)
    throw std::invalid_argument("initial site " + std::to_string(c) + " is within " + std::to_string(layers) +
                                " layers of a boundary");
  if (burn_in < 0 || burn_in >= layers) throw std::invalid_argument("burn-in must lie in [0, layers)");
  const FitWindow w = window();
  if (w.lo < burn_in || w.hi > layers) throw std::invalid_argument("fit window must lie within [burn_in, layers]");
  if (w.hi - w.lo < 10) throw std::invalid_argument("fit window must span at least 10 layers");
}

void step(PauliString& s, int layer, const TransitionKernel& k, const GateStream& rng) {
  const int l = s.leftmost();
  if (l < 0) throw std::invalid_argument("cannot evolve the identity string");
  const int r = s.rightmost();
  const LayerParity par = layer_parity(layer);
  const int off = par == LayerParity::Odd ? 1 : 0;
  const int g_lo = std::max(0, (l - off) >> 1);
  const int g_hi = std::min(num_gates(s.size(), par) - 1, (r - off) >> 1);
  for (int g = g_lo; g <= g_hi; ++g) {
    const TwoSitePauli in = gate_window(s, g, par);
    if (in.is_identity()) continue;
    const TwoSitePauli out = k.sample(in, rng.uniform(static_cast<std::uint32_t>(layer), static_cast<std::uint32_t>(g)));
    if (out != in) set_gate_window(s, g, par, out);
  }
  const int nl = s.leftmost();
  if (nl < 0) throw std::logic_error("Pauli string evolved to the identity");
  if (nl == 0 || s.rightmost() == s.size() - 1) throw BoundaryError("light cone hit boundary");
}

EnsembleStats::EnsembleStats(int sites, int layers, int batches, bool occupation)
    : sites_(sites), layers_(layers), batches_(batches) {
  if (sites < 2 || layers < 1 || batches < 1) throw std::invalid_argument("invalid ensemble dimensions");
  const std::size_t sums = static_cast<std::size_t>(batches) * (layers + 1);
  batch_count_.assign(batches, 0);
  sum_r_.assign(sums, 0);
  sumsq_r_.assign(sums, 0);
  sum_l_.assign(sums, 0);
  sumsq_l_.assign(sums, 0);
  const std::size_t cells = static_cast<std::size_t>(layers + 1) * sites;
  hist_r_.assign(cells, 0);
  hist_l_.assign(cells, 0);
  if (occupation) occupation_.assign(cells, 0);
}

std::int64_t EnsembleStats::trajectories() const {
  std::int64_t total = 0;
  for (auto c : batch_count_) total += c;
  return total;
}

void EnsembleStats::record(int batch, int t, EdgeCoords e) {
  if (e.left_link < 0 || e.right_link >= sites_) throw std::out_of_range("edge outside the chain");
  const std::size_t i = sum_index(batch, t);
  sum_r_[i] += e.right_link;
  sumsq_r_[i] += static_cast<std::int64_t>(e.right_link) * e.right_link;
  sum_l_[i] += e.left_link;
  sumsq_l_[i] += static_cast<std::int64_t>(e.left_link) * e.left_link;
  const std::size_t row = static_cast<std::size_t>(t) * sites_;
  ++hist_r_[row + e.right_link];
  ++hist_l_[row + e.left_link];
}

void EnsembleStats::record_occupation(int t, const PauliString& s) {
  if (occupation_.empty()) return;
  const std::size_t row = static_cast<std::size_t>(t) * sites_;
  const int l = s.leftmost();
  const int r = s.rightmost();
  for (int x = l; x <= r; ++x)
    if (s.site(x) != SiteOp::I) ++occupation_[row + x];
}

void EnsembleStats::merge(const EnsembleStats& o) {
  if (o.sites_ != sites_ || o.layers_ != layers_ || o.batches_ != batches_ ||
      o.occupation_.size() != occupation_.size())
    throw std::invalid_argument("cannot merge ensembles of different shape");
  auto add = [](auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  };
  add(batch_count_, o.batch_count_);
  add(sum_r_, o.sum_r_);
  add(sumsq_r_, o.sumsq_r_);
  add(sum_l_, o.sum_l_);
  add(sumsq_l_, o.sumsq_l_);
  add(hist_r_, o.hist_r_);
  add(hist_l_, o.hist_l_);
  add(occupation_, o.occupation_);
}

void EnsembleStats::series(Edge e, int exclude_batch, std::vector<double>& mean, std::vector<double>& var) const {
  const auto& s1 = e == Edge::Right ? sum_r_ : sum_l_;
  const auto& s2 = e == Edge::Right ? sumsq_r_ : sumsq_l_;
  mean.assign(layers_ + 1, 0.0);
  var.assign(layers_ + 1, 0.0);
  std::int64_t m = 0;
  for (int b = 0; b < batches_; ++b)
    if (b != exclude_batch) m += batch_count_[b];
  if (m < 2) throw std::invalid_argument("need at least two trajectories for edge statistics");
  for (int t = 0; t <= layers_; ++t) {
    __int128 a = 0, q = 0;
    for (int b = 0; b < batches_; ++b) {
      if (b == exclude_batch) continue;
      a += s1[sum_index(b, t)];
      q += s2[sum_index(b, t)];
    }
    // exact integer numerator for the unbiased variance
    const __int128 num = static_cast<__int128>(m) * q - a * a;
    mean[t] = static_cast<double>(a) / static_cast<double>(m);
    var[t] = static_cast<double>(num) / (static_cast<double>(m) * static_cast<double>(m - 1));
  }
}

double EnsembleStats::mean(Edge e, int t) const {
  std::vector<double> m, v;
  series(e, -1, m, v);
  return m.at(t);
}

double EnsembleStats::variance(Edge e, int t) const {
  std::vector<double> m, v;
  series(e, -1, m, v);
  return v.at(t);
}

std::span<const std::uint64_t> EnsembleStats::histogram(Edge e, int t) const {
  if (t < 0 || t > layers_) throw std::out_of_range("layer out of range");
  const auto& h = e == Edge::Right ? hist_r_ : hist_l_;
  return {h.data() + static_cast<std::size_t>(t) * sites_, static_cast<std::size_t>(sites_)};
}

double EnsembleStats::rho(Edge e, int t, int x) const {
  if (x < 0 || x >= sites_) return 0.0;
  return static_cast<double>(histogram(e, t)[x]) / static_cast<double>(trajectories());
}

double EnsembleStats::occupation(int t, int x) const {
  if (occupation_.empty()) throw std::logic_error("site occupation was not recorded");
  if (t < 0 || t > layers_ || x < 0 || x >= sites_) throw std::out_of_range("occupation index out of range");
  return static_cast<double>(occupation_[static_cast<std::size_t>(t) * sites_ + x]) /
         static_cast<double>(trajectories());
}

namespace {

void run_trajectories(const SimConfig& cfg, int begin, int end, int batches, EnsembleStats& out) {
  const TransitionKernel& k = kernel(cfg.cls);
  const PauliString initial = make_string(cfg.sites, cfg.start_site(), cfg.initial_op);
  for (int i = begin; i < end; ++i) {
    const int batch = static_cast<int>(static_cast<std::int64_t>(i) * batches / cfg.ensemble);
    const GateStream rng(cfg.seed, static_cast<std::uint32_t>(i));
    PauliString s = initial;
    out.record(batch, 0, edges(s));
    out.record_occupation(0, s);
    for (int layer = 0; layer < cfg.layers; ++layer) {
      step(s, layer, k, rng);
      out.record(batch, layer + 1, edges(s));
      out.record_occupation(layer + 1, s);
    }
    out.finish_trajectory(batch);
  }
}

} // namespace

EnsembleStats run_ensemble(const SimConfig& cfg, int threads) {
  cfg.validate();
  const int batches = std::min(64, cfg.ensemble);
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, cfg.ensemble);

  std::vector<EnsembleStats> parts;
  parts.reserve(threads);
  for (int w = 0; w < threads; ++w) parts.emplace_back(cfg.sites, cfg.layers, batches, cfg.record_occupation);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int w) {
    try {
      const int begin = static_cast<int>(static_cast<std::int64_t>(cfg.ensemble) * w / threads);
      const int end = static_cast<int>(static_cast<std::int64_t>(cfg.ensemble) * (w + 1) / threads);
      run_trajectories(cfg, begin, end, batches, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (int w = 1; w < threads; ++w) parts[0].merge(parts[w]);
  return std::move(parts[0]);
}

namespace {

struct SlopePair {
  double v;
  double D;
};

SlopePair edge_slopes(const EnsembleStats& stats, Edge e, FitWindow w, int exclude, LineFit* mean_fit,
                      LineFit* var_fit) {
  std::vector<double> mean, var;
  stats.series(e, exclude, mean, var);
  std::vector<double> t;
  for (int k = w.lo; k <= w.hi; ++k) t.push_back(k);
  const std::span<const double> ms(mean.data() + w.lo, t.size());
  const std::span<const double> vs(var.data() + w.lo, t.size());
  const LineFit fm = fit_line(t, ms);
  const LineFit fv = fit_line(t, vs);
  if (mean_fit) *mean_fit = fm;
  if (var_fit) *var_fit = fv;
  const double sign = e == Edge::Right ? 1.0 : -1.0;
  return {sign * fm.slope, fv.slope / 2};
}

} // namespace

FrontFit fit_front(const EnsembleStats& stats, FitWindow window) {
  if (window.lo < 0 || window.hi > stats.layers() || window.hi <= window.lo)
    throw std::invalid_argument("fit window is empty or outside the recorded layers");
  if (window.hi - window.lo < 10) throw std::invalid_argument("fit window must span at least 10 layers");
  if (stats.batches() < 2) throw std::invalid_argument("fit needs at least two trajectory batches");

  FrontFit fit;
  fit.window = window;
  fit.batches = stats.batches();
  for (Edge e : {Edge::Right, Edge::Left}) {
    LineFit fm, fv;
    const SlopePair full = edge_slopes(stats, e, window, -1, &fm, &fv);
    EdgeFit& out = e == Edge::Right ? fit.right : fit.left;
    out.v = full.v;
    out.D = full.D;
    out.v_ols_stderr = fm.slope_stderr;
    out.D_ols_stderr = fv.slope_stderr / 2;
    out.mean_intercept = fm.intercept;
    out.var_intercept = fv.intercept;
    out.r2_mean = fm.r_squared;
    out.r2_var = fv.r_squared;
  }
  fit.v = (fit.right.v + fit.left.v) / 2;
  fit.D = (fit.right.D + fit.left.D) / 2;

  const int b = stats.batches();
  std::vector<double> vr(b), dr(b), vl(b), dl(b), vc(b), dc(b);
  for (int k = 0; k < b; ++k) {
    const SlopePair r = edge_slopes(stats, Edge::Right, window, k, nullptr, nullptr);
    const SlopePair l = edge_slopes(stats, Edge::Left, window, k, nullptr, nullptr);
    vr[k] = r.v;
    dr[k] = r.D;
    vl[k] = l.v;
    dl[k] = l.D;
    vc[k] = (r.v + l.v) / 2;
    dc[k] = (r.D + l.D) / 2;
  }
  fit.right.v_stderr = jackknife_stderr(vr);
  fit.right.D_stderr = jackknife_stderr(dr);
  fit.left.v_stderr = jackknife_stderr(vl);
  fit.left.D_stderr = jackknife_stderr(dl);
  fit.v_stderr = jackknife_stderr(vc);
  fit.D_stderr = jackknife_stderr(dc);
  return fit;
}

ProfileReport front_profile_check(const EnsembleStats& stats, const FrontFit& fit, int t, Edge edge) {
  if (t < fit.window.lo || t > fit.window.hi) throw std::invalid_argument("profile time outside the fit window");
  const auto hist = stats.histogram(edge, t);
  const double total = static_cast<double>(stats.trajectories());
  std::vector<double> w(hist.size());
  for (std::size_t x = 0; x < hist.size(); ++x) w[x] = static_cast<double>(hist[x]) / total;
  const Moments m = weighted_moments(w, 0);

  const EdgeFit& ef = fit.edge(edge);
  const double slope = edge == Edge::Right ? ef.v : -ef.v;
  ProfileReport rep;
  rep.t = t;
  rep.edge = edge;
  rep.mean = m.mean;
  rep.variance = m.variance;
  rep.skewness = m.skewness;
  rep.predicted_mean = ef.mean_intercept + slope * t;
  rep.predicted_variance = ef.var_intercept + 2 * ef.D * t;
  if (rep.predicted_variance <= 0) throw std::runtime_error("fitted variance is not positive");

  // two-site cells aligned with the gates of layer t
  const LayerParity next = layer_parity(t);
  const int shift = edge == Edge::Left ? 1 : 0;
  const int n = stats.sites();
  int first = n, last = -1;
  for (int x = 0; x < n; ++x) {
    if (hist[x] == 0) continue;
    first = std::min(first, x);
    last = std::max(last, x);
  }
  auto cell_start = [&](int x) { return gate_link(x + shift, next) - shift; };
  const int lo = cell_start(std::max(0, first - 4));
  const int hi = last + 4;
  const double sd = std::sqrt(rep.predicted_variance);
  double sup = 0;
  for (int c = lo; c <= hi; c += 2) {
    const double mass = (c >= 0 && c < n ? w[c] : 0.0) + (c + 1 >= 0 && c + 1 < n ? w[c + 1] : 0.0);
    const double z = (c + 0.5 - rep.predicted_mean) / sd;
    const double gauss = std::exp(-0.5 * z * z) / (sd * std::sqrt(2 * std::numbers::pi));
    sup = std::max(sup, std::abs(mass / 2 - gauss));
  }
  rep.sup_norm = sup;
  return rep;
}

} // namespace symcirc
