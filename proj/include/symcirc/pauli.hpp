#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symcirc {

enum class SiteOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr bool x_bit(SiteOp op) { return op == SiteOp::X || op == SiteOp::Y; }
constexpr bool z_bit(SiteOp op) { return op == SiteOp::Z || op == SiteOp::Y; }

constexpr SiteOp site_op_from_bits(bool x, bool z) {
  if (x) return z ? SiteOp::Y : SiteOp::X;
  return z ? SiteOp::Z : SiteOp::I;
}

char to_char(SiteOp op);
SiteOp parse_site_op(std::string_view text);

class TwoSitePauli {
 public:
  constexpr TwoSitePauli() = default;
  constexpr TwoSitePauli(SiteOp left, SiteOp right)
      : index_(static_cast<std::uint8_t>(4 * static_cast<int>(left) + static_cast<int>(right))) {}

  static TwoSitePauli from_index(int index);
  static TwoSitePauli parse(std::string_view label);

  constexpr int index() const { return index_; }
  constexpr SiteOp left() const { return static_cast<SiteOp>(index_ >> 2); }
  constexpr SiteOp right() const { return static_cast<SiteOp>(index_ & 3); }
  constexpr bool is_identity() const { return index_ == 0; }
  std::string label() const;

  friend constexpr bool operator==(TwoSitePauli a, TwoSitePauli b) { return a.index_ == b.index_; }

 private:
  std::uint8_t index_ = 0;
};

enum class Parity { Even, Odd };

std::string_view to_string(Parity p);

int symplectic_inner(TwoSitePauli a, TwoSitePauli b);
Parity transpose_parity(TwoSitePauli p);
// parity under O -> J O^T J^T with J = iY (x) I
Parity sympl_parity(TwoSitePauli p);

enum class LayerParity { Even, Odd };

constexpr LayerParity layer_parity(int layer) { return (layer & 1) ? LayerParity::Odd : LayerParity::Even; }

class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);

  int size() const { return n_; }
  SiteOp site(int i) const;
  void set(int i, SiteOp op);
  bool is_identity() const;
  int weight() const;
  // -1 when the string is the identity
  int leftmost() const;
  int rightmost() const;
  std::string to_string() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

PauliString make_string(int n, int site, SiteOp op);

enum class Edge { Right, Left };

std::string_view to_string(Edge e);

struct EdgeCoords {
  int left_link = 0;
  int right_link = 0;
};

EdgeCoords edges(const PauliString& s);

int num_gates(int n, LayerParity parity);
int gate_first_site(int g, LayerParity parity);
TwoSitePauli gate_window(const PauliString& s, int g, LayerParity parity);
void set_gate_window(PauliString& s, int g, LayerParity parity, TwoSitePauli p);

// Link index of the gate in the coming layer that contains the given site.
int gate_link(int site, LayerParity next_parity);

} // namespace symcirc
