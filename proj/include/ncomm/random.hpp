#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ncomm/integers.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

/// Deterministic sampler. mt19937_64 output is pinned by the standard, and the
/// bounded draws below avoid std::uniform_int_distribution on purpose: its
/// output is implementation-defined, and identical seeds must reproduce
/// identical samples everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  std::uint64_t below(std::uint64_t bound) { return bound ? gen_() % bound : 0; }

  /// Integer in [-box, box].
  Int int_box(int box) {
    return Int(static_cast<long long>(below(2 * static_cast<std::uint64_t>(box) + 1)) - box);
  }

  Int residue(const Int& m) {
    // moduli here are small; draw via 64-bit remainder
    return Int(below(static_cast<std::uint64_t>(m)));
  }

  Vec element(const Ring& ring, int box) {
    Vec v(ring.dim());
    for (Int& x : v) x = ring.modulus() > 0 ? residue(ring.modulus()) : int_box(box);
    return v;
  }

  Vec nonzero_element(const Ring& ring, int box) {
    for (;;) {
      Vec v = element(ring, box);
      if (!is_zero_vec(v)) return v;
    }
  }

  /// Nonzero scalar over Z, unit over Z/m.
  Int beta_scalar(const Int& m, int box) {
    for (;;) {
      Int b = m > 0 ? residue(m) : int_box(box);
      if (b == 0) continue;
      if (m > 0 && gcd(b, m) != 1) continue;
      return b;
    }
  }

private:
  std::mt19937_64 gen_;
};

/// Stable per-(seed, tag) stream so scenarios stay independent of each other.
inline Rng derived_rng(std::uint64_t seed, const std::string& tag) {
  return Rng(seed ^ fnv1a(tag));
}

}  // namespace ncomm
