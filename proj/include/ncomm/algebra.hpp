#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncomm/errors.hpp"
#include "ncomm/lattice.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

struct SubringResult {
  Ring ring;                   // the subring with re-expressed structure constants
  Ring ambient;                // the ring it lives in
  std::vector<Vec> basis;      // canonical lattice basis, in ambient coordinates
};

/// Smallest multiplicatively closed additive subgroup of `ambient` containing
/// the generators, as a ring of its own. Saturation multiplies the current
/// lattice basis pairwise and re-canonicalizes until the basis stops moving;
/// ascending chains of subgroups stabilize, so this terminates.
inline SubringResult subring_generated(const Ring& ambient, const std::vector<Vec>& generators,
                                       const std::string& name = "",
                                       std::vector<std::string> labels = {}) {
  if (generators.empty()) throw BadParameter("subring needs at least one generator");
  Subgroup seed = Subgroup::span(ambient, generators);
  Subgroup closed = saturate(seed, [&](const Subgroup& s) {
    std::vector<Vec> out;
    for (const Vec& a : s.rows())
      for (const Vec& b : s.rows()) out.push_back(ambient.mul(a, b));
    return out;
  });

  const std::size_t r = closed.rank();
  if (ambient.modulus() > 0) {
    // A single-modulus presentation needs a free module: all pivots 1.
    for (const Vec& row : closed.rows())
      if (row[detail::lead_col(row)] != 1)
        throw BadParameter("subring lattice is not a free Z/m-module; cannot present it");
  }

  RingPresentation pres;
  pres.dim = r;
  pres.modulus = ambient.modulus();
  pres.name = name.empty() ? (ambient.name() + ".subring") : name;
  if (!labels.empty()) {
    pres.labels = std::move(labels);
  } else {
    for (std::size_t i = 0; i < r; ++i) pres.labels.push_back("b" + std::to_string(i + 1));
  }
  pres.products.resize(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Vec prod = ambient.mul(closed.rows()[i], closed.rows()[j]);
      auto coeffs = closed.solve(prod);
      if (!coeffs) throw Error("internal: closed subring basis not closed under product");
      for (std::size_t k = 0; k < r; ++k)
        if ((*coeffs)[k] != 0) pres.products[i * r + j].emplace_back(k, (*coeffs)[k]);
    }
  }
  if (ambient.unity() && closed.member(*ambient.unity())) pres.unity = *closed.solve(*ambient.unity());

  return SubringResult{make_ring(pres), ambient, closed.rows()};
}

/// Z(R) = { x : x e_i = e_i x for all i }, the kernel of
/// x -> ([x, e_1], ..., [x, e_d]) computed by exact linear algebra.
inline Subgroup center(const Ring& ring) {
  const std::size_t d = ring.dim();
  std::vector<Vec> rows;  // row i = coordinates of ([e_i, e_1], ..., [e_i, e_d]) concatenated
  rows.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec row;
    row.reserve(d * d);
    Vec ei = ring.basis_vec(i);
    for (std::size_t j = 0; j < d; ++j) {
      Vec ej = ring.basis_vec(j);
      Vec comm = ring.sub(ring.mul(ei, ej), ring.mul(ej, ei));
      row.insert(row.end(), comm.begin(), comm.end());
    }
    rows.push_back(std::move(row));
  }
  return Subgroup::span(ring, left_kernel(rows, d * d, ring.modulus()));
}

/// Calls fn for every element of a finite ring, in lexicographic coordinate
/// order (leftmost coordinate most significant). Throws for m = 0.
inline void for_each_element(const Ring& ring, const std::function<void(const Vec&)>& fn,
                             unsigned long long budget = 1ull << 20) {
  const Int& m = ring.modulus();
  if (m == 0) throw InfiniteScalar("cannot enumerate a ring over Z");
  Int total = 1;
  for (std::size_t i = 0; i < ring.dim(); ++i) {
    total *= m;
    if (total > budget)
      throw BudgetExceeded("ring has more than " + std::to_string(budget) + " elements");
  }
  Vec v(ring.dim(), 0);
  for (;;) {
    fn(v);
    std::size_t pos = ring.dim();
    while (pos > 0) {
      --pos;
      v[pos] += 1;
      if (v[pos] < m) break;
      v[pos] = 0;
      if (pos == 0) return;
    }
    if (pos == 0 && v[0] == 0) return;
  }
}

/// Exhaustive list of x with x*x = x, in deterministic lexicographic order.
inline std::vector<RingElement> idempotents(const Ring& ring,
                                            unsigned long long budget = 1ull << 20) {
  std::vector<RingElement> out;
  for_each_element(
      ring,
      [&](const Vec& v) {
        if (ring.mul(v, v) == v) out.emplace_back(ring, v);
      },
      budget);
  return out;
}

}  // namespace ncomm
