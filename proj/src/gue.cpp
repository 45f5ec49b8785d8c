#include "symcirc/gue.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

namespace symcirc {

namespace {

using cd = std::complex<double>;

void walsh_hadamard(std::vector<cd>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1)
    for (std::size_t i = 0; i < v.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const cd a = v[j];
        const cd b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
}

} // namespace

QubitPauli QubitPauli::parse(std::string_view label) {
  if (label.empty() || label.size() > 10) throw std::invalid_argument("Pauli label must have 1..10 letters");
  QubitPauli p;
  p.n = static_cast<int>(label.size());
  for (int i = 0; i < p.n; ++i) {
    const std::uint32_t bit = 1u << (p.n - 1 - i);
    switch (label[i]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.x |= bit; p.z |= bit; break;
      case 'Z': p.z |= bit; break;
      default: throw std::invalid_argument("unknown Pauli letter in '" + std::string(label) + "'");
    }
  }
  return p;
}

std::string QubitPauli::label() const {
  std::string out(n, 'I');
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << (n - 1 - i);
    const bool xb = x & bit;
    const bool zb = z & bit;
    out[i] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

bool QubitPauli::anticommutes(const QubitPauli& o) const {
  return std::popcount((x & o.z) ^ (z & o.x)) & 1;
}

Eigen::MatrixXcd pauli_matrix(const QubitPauli& p) {
  const int d = 1 << p.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  // phase i^{|x & z|} turns X^x Z^z into a tensor product of I, X, Y, Z
  const cd phases[4] = {1.0, cd(0, 1), -1.0, cd(0, -1)};
  const cd phase = phases[std::popcount(p.x & p.z) & 3];
  for (int j = 0; j < d; ++j) {
    const double sign = (std::popcount(static_cast<std::uint32_t>(j) & p.z) & 1) ? -1.0 : 1.0;
    m(j ^ static_cast<int>(p.x), j) = phase * sign;
  }
  return m;
}

Eigen::MatrixXcd sample_gue(int dim, PhiloxStream& rng) {
  if (dim < 2) throw std::invalid_argument("GUE dimension must be at least 2");
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(static_cast<double>(dim)));
  Eigen::MatrixXcd a(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(i, j) = cd(re, im);
    }
  return (a + a.adjoint()) / 2.0;
}

GueEvolution::GueEvolution(const Eigen::MatrixXcd& h, const QubitPauli& initial) : n_(initial.n) {
  const int d = static_cast<int>(h.rows());
  if (h.cols() != d || d != (1 << initial.n)) throw std::invalid_argument("Hamiltonian and operator sizes differ");
  if (initial.is_identity()) throw std::invalid_argument("initial operator must not be the identity");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
  energies_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
  o_eigen_ = vectors_.adjoint() * pauli_matrix(initial) * vectors_;
}

std::vector<double> GueEvolution::coefficients(double t) const {
  const int d = dim();
  Eigen::VectorXcd ph(d);
  for (int m = 0; m < d; ++m) ph(m) = std::polar(1.0, -energies_(m) * t);
  const Eigen::MatrixXcd rotated = ph.asDiagonal() * o_eigen_ * ph.conjugate().asDiagonal();
  const Eigen::MatrixXcd op = vectors_ * rotated * vectors_.adjoint();

  std::vector<double> out(static_cast<std::size_t>(d) * d);
  std::vector<cd> v(d);
  const double norm = 1.0 / (static_cast<double>(d) * d);
  for (int x = 0; x < d; ++x) {
    for (int j = 0; j < d; ++j) v[j] = op(j, j ^ x);
    walsh_hadamard(v);
    for (int z = 0; z < d; ++z) out[(static_cast<std::size_t>(x) << n_) | z] = std::norm(v[z]) * norm;
  }
  return out;
}

double GueEvolution::form_factor(double t) const {
  cd tr = 0;
  for (int m = 0; m < dim(); ++m) tr += std::polar(1.0, energies_(m) * t);
  return std::norm(tr);
}

double GueEvolution::infinite_time_initial_weight() const {
  const int d = dim();
  double diag = 0, off = 0;
  for (int m = 0; m < d; ++m) {
    diag += std::norm(o_eigen_(m, m));
    for (int n = 0; n < d; ++n)
      if (n != m) off += std::norm(o_eigen_(m, n)) * std::norm(o_eigen_(m, n));
  }
  return (diag * diag + off) / (static_cast<double>(d) * d);
}

std::vector<double> coeffs(const Eigen::MatrixXcd& h, const QubitPauli& initial, double t) {
  return GueEvolution(h, initial).coefficients(t);
}

QubitPauli GueConfig::initial_operator() const {
  if (!initial.empty()) {
    const QubitPauli p = QubitPauli::parse(initial);
    if (p.n != qubits) throw std::invalid_argument("initial operator length differs from the qubit count");
    if (p.is_identity()) throw std::invalid_argument("initial operator must not be the identity");
    return p;
  }
  return QubitPauli::parse("X" + std::string(qubits - 1, 'I'));
}

std::vector<double> GueConfig::grid() const {
  if (!times.empty()) return times;
  if (!(tmax > 0)) throw std::invalid_argument("tmax must be positive");
  std::vector<double> out;
  const double fine_until = std::min(tmax, 20.0);
  for (int k = 0; 0.1 * k <= fine_until + 1e-12; ++k) out.push_back(0.1 * k);
  if (tmax > 20.0) {
    const int coarse = 200;
    for (int j = 1; j <= coarse; ++j) out.push_back(20.0 * std::pow(tmax / 20.0, static_cast<double>(j) / coarse));
  }
  return out;
}

GueRun ensemble_curves(const GueConfig& cfg, int threads) {
  if (cfg.qubits < 3 || cfg.qubits > 5) throw std::invalid_argument("GUE runs support 3 to 5 qubits");
  if (cfg.samples < 100) throw std::invalid_argument("GUE runs need at least 100 samples");
  const QubitPauli o0 = cfg.initial_operator();
  const std::vector<double> grid = cfg.grid();
  const int d = 1 << cfg.qubits;
  const std::size_t nt = grid.size();

  std::vector<int> group(static_cast<std::size_t>(d) * d);
  int n_comm = 0, n_anti = 0;
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(d); ++x)
    for (std::uint32_t z = 0; z < static_cast<std::uint32_t>(d); ++z) {
      const QubitPauli p{cfg.qubits, x, z};
      int g;
      if (p.is_identity()) g = -1;
      else if (p.x == o0.x && p.z == o0.z) g = 0;
      else if (p.anticommutes(o0)) g = 2, ++n_anti;
      else g = 1, ++n_comm;
      group[p.index()] = g;
    }

  // per sample: [initial, commute, anticommute, r2] per time, then norm error and infinite-time weight
  const std::size_t stride = 4 * nt + 2;
  std::vector<double> per_sample(static_cast<std::size_t>(cfg.samples) * stride);
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, cfg.samples);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int w) {
    try {
      for (int s = w; s < cfg.samples; s += threads) {
        PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(s), 2);
        const GueEvolution ev(sample_gue(d, rng), o0);
        double* out = per_sample.data() + static_cast<std::size_t>(s) * stride;
        double worst = 0;
        for (std::size_t k = 0; k < nt; ++k) {
          const auto c = ev.coefficients(grid[k]);
          double sums[3] = {0, 0, 0};
          double total = 0;
          for (std::size_t i = 0; i < c.size(); ++i) {
            total += c[i];
            if (group[i] >= 0) sums[group[i]] += c[i];
          }
          worst = std::max(worst, std::abs(total - 1.0));
          out[4 * k] = sums[0];
          out[4 * k + 1] = sums[1] / n_comm;
          out[4 * k + 2] = sums[2] / n_anti;
          out[4 * k + 3] = ev.form_factor(grid[k]);
        }
        out[4 * nt] = worst;
        out[4 * nt + 1] = ev.infinite_time_initial_weight();
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  GueRun run;
  run.qubits = cfg.qubits;
  run.dim = d;
  run.samples = cfg.samples;
  run.n_commute = n_comm;
  run.n_anticommute = n_anti;
  run.times = grid;
  run.g_initial.assign(nt, 0.0);
  run.g_commute.assign(nt, 0.0);
  run.g_anticommute.assign(nt, 0.0);
  run.r2.assign(nt, 0.0);
  for (int s = 0; s < cfg.samples; ++s) {
    const double* in = per_sample.data() + static_cast<std::size_t>(s) * stride;
    for (std::size_t k = 0; k < nt; ++k) {
      run.g_initial[k] += in[4 * k];
      run.g_commute[k] += in[4 * k + 1];
      run.g_anticommute[k] += in[4 * k + 2];
      run.r2[k] += in[4 * k + 3];
    }
    run.max_norm_error = std::max(run.max_norm_error, in[4 * nt]);
    run.infinite_time_initial += in[4 * nt + 1];
  }
  const double m = cfg.samples;
  for (std::size_t k = 0; k < nt; ++k) {
    run.g_initial[k] /= m;
    run.g_commute[k] /= m;
    run.g_anticommute[k] /= m;
    run.r2[k] /= m;
  }
  run.infinite_time_initial /= m;
  return run;
}

GueRegimes locate_regimes(const GueRun& run) {
  const std::size_t nt = run.times.size();
  if (nt < 20) throw std::invalid_argument("time grid too short to locate regimes");
  GueRegimes out;
  out.dip_index = 1;
  for (std::size_t k = 1; k < nt; ++k)
    if (run.r2[k] < run.r2[out.dip_index]) out.dip_index = k;
  out.dip_time = run.times[out.dip_index];

  // saturation: smoothed R2 first reaches 90% of d after the dip
  const int half = 5;
  std::size_t sat = nt;
  for (std::size_t k = out.dip_index; k < nt; ++k) {
    const std::size_t lo = k >= static_cast<std::size_t>(half) ? k - half : 0;
    const std::size_t hi = std::min(nt - 1, k + half);
    double avg = 0;
    for (std::size_t i = lo; i <= hi; ++i) avg += run.r2[i];
    avg /= static_cast<double>(hi - lo + 1);
    if (avg >= 0.9 * run.dim) {
      sat = k;
      break;
    }
  }
  if (sat == nt) throw std::runtime_error("spectral form factor did not saturate on the time grid");
  const double t_plateau = 2 * run.times[sat];
  out.plateau_index = nt;
  for (std::size_t k = sat; k < nt; ++k)
    if (run.times[k] >= t_plateau) {
      out.plateau_index = k;
      break;
    }
  if (out.plateau_index + 5 > nt) throw std::runtime_error("time grid ends before the plateau is established");
  out.plateau_time = run.times[out.plateau_index];

  const double nc = run.n_commute;
  const double na = run.n_anticommute;
  double gi = 0, go = 0;
  for (std::size_t k = out.plateau_index; k < nt; ++k) {
    gi += run.g_initial[k];
    go += (nc * run.g_commute[k] + na * run.g_anticommute[k]) / (nc + na);
  }
  out.plateau_ratio = gi / go;

  const double w = run.infinite_time_initial;
  out.infinite_time_ratio = w / ((1 - w) / (nc + na));

  double rc = 0, ra = 0;
  std::size_t count = 0;
  for (std::size_t k = out.dip_index + 1; k < sat; ++k) {
    rc += run.g_commute[k];
    ra += run.g_anticommute[k];
    ++count;
  }
  if (count > 0) {
    out.ramp_commute = rc / count;
    out.ramp_anticommute = ra / count;
  }
  return out;
}

} // namespace symcirc
