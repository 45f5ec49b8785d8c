#include "symcirc/haar.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

namespace symcirc {

namespace {

using cd = std::complex<double>;

constexpr double kResidualTol = 1e-12;
constexpr double kImagTol = 1e-10;
constexpr std::size_t kChunk = 2048;

Eigen::Matrix4cd complex_ginibre(PhiloxStream& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::Matrix4cd z;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = cd(re, im);
    }
  return z;
}

Gate haar_unitary(PhiloxStream& rng) {
  for (;;) {
    const Eigen::Matrix4cd z = complex_ginibre(rng);
    Eigen::HouseholderQR<Eigen::Matrix4cd> qr(z);
    const Eigen::Matrix4cd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    Eigen::Vector4cd phase;
    bool degenerate = false;
    for (int i = 0; i < 4; ++i) {
      const double mag = std::abs(r(i, i));
      if (mag < 1e-12) degenerate = true;
      phase(i) = r(i, i) / mag;
    }
    if (degenerate) continue;
    return q * phase.asDiagonal();
  }
}

Gate haar_orthogonal(PhiloxStream& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::Matrix4d z;
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) z(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::Matrix4d> qr(z);
    const Eigen::Matrix4d q = qr.householderQ();
    const auto& r = qr.matrixQR();
    Eigen::Vector4d sign;
    bool degenerate = false;
    for (int i = 0; i < 4; ++i) {
      if (std::abs(r(i, i)) < 1e-12) degenerate = true;
      sign(i) = r(i, i) < 0 ? -1.0 : 1.0;
    }
    if (degenerate) continue;
    return (q * sign.asDiagonal()).cast<cd>();
  }
}

// partner column keeping the quaternionic structure: (x; y) -> (-conj(y); conj(x))
Eigen::Vector4cd partner(const Eigen::Vector4cd& v) {
  Eigen::Vector4cd w;
  w << -std::conj(v(2)), -std::conj(v(3)), std::conj(v(0)), std::conj(v(1));
  return w;
}

Gate haar_symplectic(PhiloxStream& rng) {
  for (;;) {
    // first two columns of [[A, B], [-conj(B), conj(A)]]; only the A and -conj(B) blocks are needed
    const Eigen::Matrix4cd g = complex_ginibre(rng);
    Eigen::Matrix<cd, 4, 2> z;
    z.topRows<2>() = g.block<2, 2>(0, 0);
    z.bottomRows<2>() = -g.block<2, 2>(2, 0).conjugate();

    Gate u;
    bool degenerate = false;
    std::array<Eigen::Vector4cd, 4> basis;
    int filled = 0;
    for (int k = 0; k < 2; ++k) {
      Eigen::Vector4cd v = z.col(k);
      for (int pass = 0; pass < 2; ++pass)
        for (int j = 0; j < filled; ++j) v -= basis[j] * basis[j].dot(v);
      const double nv = v.norm();
      if (nv < 1e-12) {
        degenerate = true;
        break;
      }
      v /= nv;
      basis[filled++] = v;
      basis[filled++] = partner(v);
    }
    if (degenerate) continue;
    u.col(0) = basis[0];
    u.col(2) = basis[1];
    u.col(1) = basis[2];
    u.col(3) = basis[3];
    return u;
  }
}

double max_abs(const Eigen::Matrix4cd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Matrix4cd dual(const Eigen::Matrix4cd& v) {
  const Eigen::Matrix4cd j = symplectic_form().cast<cd>();
  return j * v.transpose() * j.transpose();
}

const std::vector<std::array<int, 3>>& cross_triples() {
  static const std::vector<std::array<int, 3>> triples = [] {
    const char* labels[][3] = {{"XI", "ZI", "XI"}, {"XI", "IX", "XX"}, {"IX", "XX", "IX"}, {"YZ", "ZY", "YY"},
                               {"XI", "YI", "ZZ"}, {"ZZ", "XX", "YY"}, {"IZ", "ZI", "ZZ"}, {"XY", "YX", "XY"}};
    std::vector<std::array<int, 3>> out;
    for (const auto& t : labels)
      out.push_back({TwoSitePauli::parse(t[0]).index(), TwoSitePauli::parse(t[1]).index(),
                     TwoSitePauli::parse(t[2]).index()});
    return out;
  }();
  return triples;
}

struct Accumulator {
  Moments16 sum{};
  Moments16 sumsq{};
  std::vector<double> cross_sum, cross_sumsq;
  double block_sum = 0;
  double block_sumsq = 0;
  double max_residual = 0;

  Accumulator() : cross_sum(cross_triples().size(), 0.0), cross_sumsq(cross_triples().size(), 0.0) {}

  void add(const Accumulator& o) {
    for (int a = 0; a < 16; ++a)
      for (int p = 0; p < 16; ++p) {
        sum[a][p] += o.sum[a][p];
        sumsq[a][p] += o.sumsq[a][p];
      }
    for (std::size_t i = 0; i < cross_sum.size(); ++i) {
      cross_sum[i] += o.cross_sum[i];
      cross_sumsq[i] += o.cross_sumsq[i];
    }
    block_sum += o.block_sum;
    block_sumsq += o.block_sumsq;
    max_residual = std::max(max_residual, o.max_residual);
  }
};

std::vector<std::pair<int, int>> even_block(SymmetryClass cls) {
  std::vector<std::pair<int, int>> out;
  if (cls != SymmetryClass::Orthogonal && cls != SymmetryClass::Symplectic) return out;
  for (int a = 1; a < 16; ++a)
    for (int p = 1; p < 16; ++p)
      if (class_parity(cls, TwoSitePauli::from_index(a)) == Parity::Even &&
          class_parity(cls, TwoSitePauli::from_index(p)) == Parity::Even)
        out.emplace_back(a, p);
  return out;
}

void run_chunk(SymmetryClass cls, std::size_t begin, std::size_t end, std::uint64_t seed, GateTransform transform,
               const void* context, const std::vector<std::pair<int, int>>& block, Accumulator& acc) {
  const auto& triples = cross_triples();
  for (std::size_t i = begin; i < end; ++i) {
    PhiloxStream rng(seed, i, 1);
    Gate u = sample_gate(cls, rng);
    if (transform) u = transform(u, context);
    const GateResiduals res = residuals(cls, u);
    const double worst = std::max(res.unitarity, res.constraint);
    if (worst > kResidualTol) throw std::runtime_error("sampled gate violates its class constraints");
    acc.max_residual = std::max(acc.max_residual, worst);
    const Moments16 c = gate_traces(u);
    for (int a = 0; a < 16; ++a)
      for (int p = 0; p < 16; ++p) {
        const double m = c[a][p] * c[a][p] / 16.0;
        acc.sum[a][p] += m;
        acc.sumsq[a][p] += m * m;
      }
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const auto [a, b, p] = triples[t];
      const double m = c[a][p] * c[b][p] / 16.0;
      acc.cross_sum[t] += m;
      acc.cross_sumsq[t] += m * m;
    }
    if (!block.empty()) {
      double s = 0;
      for (const auto& [a, p] : block) s += c[a][p] * c[a][p] / 16.0;
      s /= static_cast<double>(block.size());
      acc.block_sum += s;
      acc.block_sumsq += s * s;
    }
  }
}

void mean_and_error(double sum, double sumsq, std::size_t n, double& mean, double& err) {
  const double nn = static_cast<double>(n);
  mean = sum / nn;
  const double var = std::max(0.0, (sumsq - nn * mean * mean) / (nn - 1));
  err = std::sqrt(var / nn);
}

} // namespace

const Eigen::Matrix4d& symplectic_form() {
  static const Eigen::Matrix4d j = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 2) = 1;
    m(1, 3) = 1;
    m(2, 0) = -1;
    m(3, 1) = -1;
    if (!(m * m.transpose()).isIdentity(0) || !(m + m.transpose()).isZero(0))
      throw std::logic_error("symplectic form is not real antisymmetric orthogonal");
    return m;
  }();
  return j;
}

const Eigen::Matrix4cd& pauli4(TwoSitePauli p) {
  static const std::array<Eigen::Matrix4cd, 16> table = [] {
    std::array<Eigen::Matrix2cd, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, cd(0, -1), cd(0, 1), 0;
    s[3] << 1, 0, 0, -1;
    std::array<Eigen::Matrix4cd, 16> out;
    for (int idx = 0; idx < 16; ++idx) {
      const auto& l = s[idx >> 2];
      const auto& r = s[idx & 3];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[idx].block<2, 2>(2 * i, 2 * j) = l(i, j) * r;
    }
    return out;
  }();
  return table[p.index()];
}

Gate sample_gate(SymmetryClass cls, PhiloxStream& rng) {
  switch (cls) {
    case SymmetryClass::Unitary: return haar_unitary(rng);
    case SymmetryClass::Orthogonal: return haar_orthogonal(rng);
    case SymmetryClass::Symplectic: return haar_symplectic(rng);
    case SymmetryClass::COE: {
      const Gate v = haar_unitary(rng);
      return v.transpose() * v;
    }
    case SymmetryClass::CSE: {
      const Gate v = haar_unitary(rng);
      return dual(v) * v;
    }
  }
  throw std::logic_error("unhandled class");
}

GateResiduals residuals(SymmetryClass cls, const Gate& u) {
  GateResiduals r;
  r.unitarity = max_abs(u.adjoint() * u - Eigen::Matrix4cd::Identity());
  switch (cls) {
    case SymmetryClass::Unitary: break;
    case SymmetryClass::COE: r.constraint = max_abs(u - u.transpose()); break;
    case SymmetryClass::CSE: r.constraint = max_abs(u - dual(u)); break;
    case SymmetryClass::Orthogonal: r.constraint = u.imag().cwiseAbs().maxCoeff(); break;
    case SymmetryClass::Symplectic: {
      const Eigen::Matrix4cd j = symplectic_form().cast<cd>();
      r.constraint = max_abs(u.transpose() * j * u - j);
      break;
    }
  }
  return r;
}

Moments16 gate_traces(const Gate& u) {
  Moments16 c{};
  const Eigen::Matrix4cd ud = u.adjoint();
  for (int a = 0; a < 16; ++a) {
    const Eigen::Matrix4cd m = u * pauli4(TwoSitePauli::from_index(a)) * ud;
    for (int p = 0; p < 16; ++p) {
      const cd tr = m.cwiseProduct(pauli4(TwoSitePauli::from_index(p)).transpose()).sum();
      if (std::abs(tr.imag()) > kImagTol) throw std::runtime_error("Pauli trace has a non-zero imaginary part");
      c[a][p] = tr.real();
    }
  }
  return c;
}

Moments16 gate_moments(const Gate& u) {
  Moments16 m = gate_traces(u);
  for (auto& row : m)
    for (auto& v : row) v = v * v / 16.0;
  return m;
}

KernelEstimate estimate_kernel_transformed(SymmetryClass cls, std::size_t samples, std::uint64_t seed, int threads,
                                           GateTransform transform, const void* context) {
  if (samples < 10000) throw std::invalid_argument("kernel estimation needs at least 10000 samples");
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  threads = static_cast<int>(std::min<std::size_t>(threads, chunks));
  const auto block = even_block(cls);

  std::vector<Accumulator> partial(chunks);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int w) {
    try {
      for (std::size_t c = w; c < chunks; c += threads)
        run_chunk(cls, c * kChunk, std::min(samples, (c + 1) * kChunk), seed, transform, context, block, partial[c]);
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

  Accumulator total;
  for (const auto& p : partial) total.add(p);

  KernelEstimate est;
  est.cls = cls;
  est.samples = samples;
  est.seed = seed;
  est.max_residual = total.max_residual;
  for (int a = 0; a < 16; ++a)
    for (int p = 0; p < 16; ++p) mean_and_error(total.sum[a][p], total.sumsq[a][p], samples, est.mean[a][p], est.std_error[a][p]);
  const auto& triples = cross_triples();
  for (std::size_t t = 0; t < triples.size(); ++t) {
    CrossMoment cm{triples[t][0], triples[t][1], triples[t][2], 0, 0};
    mean_and_error(total.cross_sum[t], total.cross_sumsq[t], samples, cm.mean, cm.std_error);
    est.cross.push_back(cm);
  }
  if (!block.empty()) mean_and_error(total.block_sum, total.block_sumsq, samples, est.even_block_mean, est.even_block_std_error);
  return est;
}

KernelEstimate estimate_kernel(SymmetryClass cls, std::size_t samples, std::uint64_t seed, int threads) {
  return estimate_kernel_transformed(cls, samples, seed, threads, nullptr, nullptr);
}

OracleReport compare(const KernelEstimate& est, const TransitionKernel& k) {
  if (est.cls != k.symmetry_class()) throw std::invalid_argument("estimate and kernel belong to different classes");
  OracleReport rep;
  for (int a = 0; a < 16; ++a)
    for (int p = 0; p < 16; ++p) {
      const double dev = est.mean[a][p] - k.matrix()[a][p];
      const double se = est.std_error[a][p];
      const double ad = std::abs(dev);
      const double z = se > 0 ? ad / se : (ad > 0 ? INFINITY : 0.0);
      rep.z[a][p] = z;
      const bool ok = ad <= std::max(4.0 * se, 1e-10);
      if (!ok) ++rep.failures;
      if (ad > rep.max_abs_dev) rep.max_abs_dev = ad;
      // entries that vanish identically carry no statistical information
      if (ad > 1e-10 && z > rep.max_z) {
        rep.max_z = z;
        rep.worst_from = a;
        rep.worst_to = p;
      }
    }
  rep.pass = rep.failures == 0;
  return rep;
}

EvenRateResolution resolve_symplectic_even_rate(const KernelEstimate& est) {
  if (est.cls != SymmetryClass::Symplectic) throw std::invalid_argument("even-rate resolution needs a symplectic estimate");
  const ParityRates r = rates(SymmetryClass::Symplectic, 4).parity();
  EvenRateResolution out;
  out.pooled_mean = est.even_block_mean;
  out.pooled_std_error = est.even_block_std_error;
  out.consistent = r.p_even;
  out.alternative = r.p_even_alt;
  out.z_consistent = std::abs(out.pooled_mean - to_double(r.p_even)) / out.pooled_std_error;
  out.z_alternative = std::abs(out.pooled_mean - to_double(r.p_even_alt)) / out.pooled_std_error;
  out.supported = out.z_consistent <= out.z_alternative ? r.p_even : r.p_even_alt;
  return out;
}

} // namespace symcirc
