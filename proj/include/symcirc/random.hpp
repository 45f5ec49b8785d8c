#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace symcirc {

// Philox4x32 with 10 rounds (Salmon et al., SC'11)
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);
};

inline Philox4x32::Key key_from_seed(std::uint64_t seed) {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

// 53 random bits mapped onto [0, 1)
inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = ((std::uint64_t{hi} << 32) | lo) >> 11;
  return static_cast<double>(bits) * 0x1.0p-53;
}

// One uniform per (trajectory, layer, gate); independent of evaluation order.
class GateStream {
 public:
  GateStream(std::uint64_t seed, std::uint32_t trajectory) : key_(key_from_seed(seed)), trajectory_(trajectory) {}

  double uniform(std::uint32_t layer, std::uint32_t gate) const {
    const auto r = Philox4x32::block({trajectory_, layer, gate, 0u}, key_);
    return to_unit(r[0], r[1]);
  }

 private:
  Philox4x32::Key key_;
  std::uint32_t trajectory_;
};

// Sequential 64-bit engine for one stream id; satisfies UniformRandomBitGenerator.
class PhiloxStream {
 public:
  using result_type = std::uint64_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint32_t domain = 0)
      : key_(key_from_seed(seed)),
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)),
        domain_(domain) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (used_ == 2) {
      buffer_ = Philox4x32::block({stream_lo_, stream_hi_, counter_++, domain_ | 0x80000000u}, key_);
      used_ = 0;
    }
    const std::uint64_t out = (std::uint64_t{buffer_[2 * used_]} << 32) | buffer_[2 * used_ + 1];
    ++used_;
    return out;
  }

  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  Philox4x32::Key key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint32_t domain_;
  std::uint32_t counter_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 2;
};

} // namespace symcirc
