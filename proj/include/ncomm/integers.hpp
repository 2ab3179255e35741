#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace ncomm {

/// Exact arbitrary-precision integer; every coordinate in the library is one of these.
using Int = boost::multiprecision::cpp_int;

/// Dense coordinate vector over Z or Z/m.
using Vec = std::vector<Int>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Floor division (round toward minus infinity); b must be positive.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Canonical residue in [0, m) for m > 0; identity for m = 0.
inline Int mod_canon(const Int& a, const Int& m) {
  if (m == 0 || (a >= 0 && a < m)) return a;
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline void reduce_vec(Vec& v, const Int& m) {
  if (m == 0) return;
  for (Int& x : v) x = mod_canon(x, m);
}

inline bool is_zero_vec(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

/// FNV-1a, used to derive per-scenario/per-ring RNG streams from one master seed.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ncomm
