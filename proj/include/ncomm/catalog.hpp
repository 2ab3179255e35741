#pragma once

#include <string>
#include <vector>

#include "ncomm/algebra.hpp"
#include "ncomm/builtin.hpp"
#include "ncomm/errors.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

/// The ring from Example-(4)-style triangular constructions: over GF(p),
/// span of e21 together with the upper triangular block on rows/columns
/// 2..n. Not unital (e21 annihilates the ring on the right), R = R^2, and
/// the quotient by the commutator ideal has rank n-1. Built as a subring of
/// M_n(GF(p)) so the subring machinery gets exercised on a real case.
inline Ring corner_triangular_ring(std::size_t n, const Int& p, const std::string& name) {
  Ring ambient = matrix_ring(n, 1, p, "ambient");
  std::vector<Vec> gens;
  std::vector<std::string> labels;
  auto unit = [&](std::size_t i, std::size_t j) {
    Vec v(n * n, 0);
    v[(i - 1) * n + (j - 1)] = 1;
    return v;
  };
  gens.push_back(unit(2, 1));
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) gens.push_back(unit(i, j));
  // canonical basis rows come back sorted by ambient position
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  pos.emplace_back(2, 1);
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) pos.emplace_back(i, j);
  std::sort(pos.begin(), pos.end(), [&](auto a, auto b) {
    return (a.first - 1) * n + a.second < (b.first - 1) * n + b.second;
  });
  for (auto [i, j] : pos) labels.push_back("e" + std::to_string(i) + std::to_string(j));
  return subring_generated(ambient, gens, name, labels).ring;
}

/// Z*I + M_m(2Z): unital, free of rank m^2 with basis {I, 2e_ij for
/// (i, j) != (1, 1)}; the canonical lattice basis produces exactly that.
inline Ring unital_double_matrix_ring(std::size_t m, const std::string& name) {
  Ring ambient = matrix_ring(m, 1, 0, "ambient");
  std::vector<Vec> gens;
  Vec id(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) id[i * m + i] = 1;
  gens.push_back(id);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec v(m * m, 0);
      v[i * m + j] = 2;
      gens.push_back(std::move(v));
    }
  std::vector<std::string> labels{"I"};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!(i == 0 && j == 0))
        labels.push_back("2e" + std::to_string(i + 1) + std::to_string(j + 1));
  return subring_generated(ambient, gens, name, labels).ring;
}

struct CatalogEntry {
  std::string name;
  std::string description;
  Ring (*build)();
};

/// Named rings reachable from the CLI as `builtin:<name>`. The first block is
/// the default verification set; it spans unital and non-unital rings, rings
/// with and without R = R^2, characteristics 2/3/5 and scalar ring Z.
inline const std::vector<CatalogEntry>& ring_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"m2_gf2", "2x2 matrices over GF(2)", [] { return matrix_ring(2, 1, 2, "m2_gf2"); }},
      {"m2_gf3", "2x2 matrices over GF(3)", [] { return matrix_ring(2, 1, 3, "m2_gf3"); }},
      {"m2_gf5", "2x2 matrices over GF(5)", [] { return matrix_ring(2, 1, 5, "m2_gf5"); }},
      {"t3_gf2", "3x3 upper triangular over GF(2)",
       [] { return upper_triangular_ring(3, 2, "t3_gf2"); }},
      {"su4_gf2", "4x4 strictly upper triangular over GF(2)",
       [] { return strict_upper_ring(4, 2, "su4_gf2"); }},
      {"su5_gf2", "5x5 strictly upper triangular over GF(2)",
       [] { return strict_upper_ring(5, 2, "su5_gf2"); }},
      {"matrix2x2scale2", "2x2 matrices with even entries, as a ring over Z",
       [] { return matrix_ring(2, 2, 0, "matrix2x2scale2"); }},
      {"idem5_gf2", "span of five idempotents v_i with v_i v_j = v_i, over GF(2)",
       [] { return idempotent_span_ring(5, 2, "idem5_gf2"); }},
      {"nil2_12_gf2", "2x2 matrices over the nil truncation T_12, over GF(2)",
       [] { return nil_truncation_ring(2, 12, 2, "nil2_12_gf2"); }},
      {"ex4_r4_gf2", "corner-triangular ring at size 4 over GF(2)",
       [] { return corner_triangular_ring(4, 2, "ex4_r4_gf2"); }},
      {"ex7_m2", "Z*I + M_2(2Z)", [] { return unital_double_matrix_ring(2, "ex7_m2"); }},
  };
  return entries;
}

inline Ring catalog_ring(const std::string& name) {
  for (const CatalogEntry& e : ring_catalog())
    if (e.name == name) return e.build();
  throw BadParameter("no builtin ring named '" + name + "'");
}

/// The default verification set, in catalog order.
inline std::vector<Ring> default_ring_set() {
  std::vector<Ring> rings;
  for (const CatalogEntry& e : ring_catalog()) rings.push_back(e.build());
  return rings;
}

}  // namespace ncomm
