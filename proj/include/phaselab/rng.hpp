#pragma once
// Counter-style splittable RNG.  Every experiment derives its stream
// from a (master, stream) pair, so any single trial can be reproduced
// in isolation and results do not depend on scheduling order.
//
// NOTE: std::uniform_int_distribution and friends are implementation
// defined, which would break bit-for-bit reproducibility across
// standard libraries, so the draw primitives live here instead.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace phaselab {
namespace rng {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

// Finalizer with full avalanche; also used to salt seeds from
// experiment-cell coordinates.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += golden_gamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Order-dependent combiner for deriving sub-seeds from several fields.
inline constexpr std::uint64_t mix_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (b + golden_gamma + (a << 6) + (a >> 2)));
}

struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

class SplitRng {
public:
  explicit SplitRng(Seed s)
      : state_(mix_combine(mix64(s.master), s.stream)) {}
  SplitRng(std::uint64_t master, std::uint64_t stream)
      : SplitRng(Seed{master, stream}) {}

  std::uint64_t next_u64() {
    state_ += golden_gamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound) via 128-bit multiply with rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0)
      throw std::invalid_argument("next_below: bound must be positive");
    while (true) {
      std::uint64_t x = next_u64();
      unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        if (lo < threshold) continue;
      }
      return static_cast<std::uint64_t>(m >> 64);
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  bool bernoulli(double p) { return next_double() < p; }

  // Ordered tuple of k distinct values from [0, n); rejection sampling
  // (k is tiny compared to n everywhere this is used).
  void distinct(std::uint32_t n, std::uint32_t k,
                std::vector<std::uint32_t>& out) {
    if (k > n)
      throw std::invalid_argument("distinct: k exceeds n");
    out.clear();
    while (out.size() < k) {
      auto v = static_cast<std::uint32_t>(next_below(n));
      bool dup = false;
      for (auto w : out)
        if (w == v) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(v);
    }
  }

  // UniformRandomBitGenerator shape for generic helpers (never feed
  // this to std distributions in library code; see header note).
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ull; }
  result_type operator()() { return next_u64(); }

private:
  std::uint64_t state_;
};

}  // namespace rng

using rng::Seed;
using rng::SplitRng;

}  // namespace phaselab
