#include "symcirc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace symcirc {

namespace {

// Gaussian integers are enough for products of Pauli matrices and J
struct GInt {
  int re = 0;
  int im = 0;
};

GInt operator*(GInt a, GInt b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GInt operator+(GInt a, GInt b) { return {a.re + b.re, a.im + b.im}; }
bool operator==(GInt a, GInt b) { return a.re == b.re && a.im == b.im; }

using Mat2 = std::array<std::array<GInt, 2>, 2>;
using Mat4 = std::array<std::array<GInt, 4>, 4>;

Mat2 pauli_matrix(SiteOp op) {
  switch (op) {
    case SiteOp::I: return {{{{{1, 0}, {0, 0}}}, {{{0, 0}, {1, 0}}}}};
    case SiteOp::X: return {{{{{0, 0}, {1, 0}}}, {{{1, 0}, {0, 0}}}}};
    case SiteOp::Y: return {{{{{0, 0}, {0, -1}}}, {{{0, 1}, {0, 0}}}}};
    case SiteOp::Z: return {{{{{1, 0}, {0, 0}}}, {{{0, 0}, {-1, 0}}}}};
  }
  return {};
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return m;
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m[i][j] = m[i][j] + a[i][k] * b[k][j];
  return m;
}

Mat4 transpose(const Mat4& a) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = a[j][i];
  return m;
}

Mat4 negate(Mat4 a) {
  for (auto& row : a)
    for (auto& v : row) v = {-v.re, -v.im};
  return a;
}

std::array<Parity, 16> build_sympl_table() {
  // J = iY (x) I = [[0, I2], [-I2, 0]]
  Mat2 iy{{{{{0, 0}, {1, 0}}}, {{{-1, 0}, {0, 0}}}}};
  const Mat4 j = kron(iy, pauli_matrix(SiteOp::I));
  const Mat4 jt = transpose(j);
  std::array<Parity, 16> table{};
  for (int idx = 0; idx < 16; ++idx) {
    const auto p = TwoSitePauli::from_index(idx);
    const Mat4 m = kron(pauli_matrix(p.left()), pauli_matrix(p.right()));
    const Mat4 conj = matmul(matmul(j, transpose(m)), jt);
    if (conj == m) {
      table[idx] = Parity::Even;
    } else if (conj == negate(m)) {
      table[idx] = Parity::Odd;
    } else {
      throw std::logic_error("symplectic conjugation did not return +-P");
    }
  }
  return table;
}

int word_count(int n) { return (n + 63) / 64; }

void check_site(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("site index out of range");
}

} // namespace

char to_char(SiteOp op) { return "IXYZ"[static_cast<int>(op)]; }

SiteOp parse_site_op(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'I': case 'i': return SiteOp::I;
      case 'X': case 'x': return SiteOp::X;
      case 'Y': case 'y': return SiteOp::Y;
      case 'Z': case 'z': return SiteOp::Z;
      default: break;
    }
  }
  throw std::invalid_argument("unknown Pauli label '" + std::string(text) + "'");
}

TwoSitePauli TwoSitePauli::from_index(int index) {
  if (index < 0 || index > 15) throw std::out_of_range("two-site Pauli index out of range");
  return {static_cast<SiteOp>(index >> 2), static_cast<SiteOp>(index & 3)};
}

TwoSitePauli TwoSitePauli::parse(std::string_view label) {
  if (label.size() != 2) throw std::invalid_argument("two-site Pauli label must have 2 letters");
  return {parse_site_op(label.substr(0, 1)), parse_site_op(label.substr(1, 1))};
}

std::string TwoSitePauli::label() const { return {to_char(left()), to_char(right())}; }

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string_view to_string(Edge e) { return e == Edge::Right ? "right" : "left"; }

int symplectic_inner(TwoSitePauli a, TwoSitePauli b) {
  auto site = [](SiteOp u, SiteOp v) { return (x_bit(u) & z_bit(v)) ^ (z_bit(u) & x_bit(v)); };
  return site(a.left(), b.left()) ^ site(a.right(), b.right());
}

Parity transpose_parity(TwoSitePauli p) {
  const int ys = (p.left() == SiteOp::Y) + (p.right() == SiteOp::Y);
  return (ys & 1) ? Parity::Odd : Parity::Even;
}

Parity sympl_parity(TwoSitePauli p) {
  static const std::array<Parity, 16> table = build_sympl_table();
  return table[p.index()];
}

PauliString::PauliString(int n) : n_(n), x_(word_count(n), 0), z_(word_count(n), 0) {
  if (n < 2) throw std::invalid_argument("a Pauli string needs at least 2 sites");
}

SiteOp PauliString::site(int i) const {
  check_site(n_, i);
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  return site_op_from_bits(x_[i >> 6] & bit, z_[i >> 6] & bit);
}

void PauliString::set(int i, SiteOp op) {
  check_site(n_, i);
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  auto& xw = x_[i >> 6];
  auto& zw = z_[i >> 6];
  xw = x_bit(op) ? (xw | bit) : (xw & ~bit);
  zw = z_bit(op) ? (zw | bit) : (zw & ~bit);
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w)
    if (x_[w] | z_[w]) return false;
  return true;
}

int PauliString::weight() const {
  int total = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] | z_[w]);
  return total;
}

int PauliString::leftmost() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    const std::uint64_t m = x_[w] | z_[w];
    if (m) return static_cast<int>(64 * w) + std::countr_zero(m);
  }
  return -1;
}

int PauliString::rightmost() const {
  for (std::size_t w = x_.size(); w-- > 0;) {
    const std::uint64_t m = x_[w] | z_[w];
    if (m) return static_cast<int>(64 * w) + 63 - std::countl_zero(m);
  }
  return -1;
}

std::string PauliString::to_string() const {
  std::string out(n_, 'I');
  for (int i = 0; i < n_; ++i) out[i] = to_char(site(i));
  return out;
}

PauliString make_string(int n, int site, SiteOp op) {
  if (op == SiteOp::I) throw std::invalid_argument("initial operator must not be the identity");
  PauliString s(n);
  if (site < 0 || site >= n) throw std::invalid_argument("initial site out of range");
  s.set(site, op);
  return s;
}

EdgeCoords edges(const PauliString& s) {
  const int l = s.leftmost();
  if (l < 0) throw std::invalid_argument("edges of the identity string are undefined");
  return {l - 1, s.rightmost()};
}

int num_gates(int n, LayerParity parity) { return parity == LayerParity::Even ? n / 2 : (n - 1) / 2; }

int gate_first_site(int g, LayerParity parity) { return 2 * g + (parity == LayerParity::Odd ? 1 : 0); }

TwoSitePauli gate_window(const PauliString& s, int g, LayerParity parity) {
  if (g < 0 || g >= num_gates(s.size(), parity)) throw std::out_of_range("gate index out of range");
  const int a = gate_first_site(g, parity);
  return {s.site(a), s.site(a + 1)};
}

void set_gate_window(PauliString& s, int g, LayerParity parity, TwoSitePauli p) {
  if (g < 0 || g >= num_gates(s.size(), parity)) throw std::out_of_range("gate index out of range");
  const int a = gate_first_site(g, parity);
  s.set(a, p.left());
  s.set(a + 1, p.right());
}

int gate_link(int site, LayerParity next_parity) {
  const int offset = next_parity == LayerParity::Odd ? 1 : 0;
  return ((site - offset) & 1) ? site - 1 : site;
}

} // namespace symcirc
