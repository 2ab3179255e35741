#pragma once

#include <string>
#include <vector>

#include "ncomm/errors.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

namespace detail {

inline bool is_small_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void set_product(RingPresentation& pres, std::size_t i, std::size_t j, std::size_t k,
                        Int c) {
  pres.products[i * pres.dim + j].emplace_back(k, std::move(c));
}

}  // namespace detail

/// M_k(sZ) as an abstract ring when m = 0: basis {s*e_ij} with
/// (s e_ij)(s e_kl) = delta_jk * s * (s e_il). For m > 0 the same table over
/// Z/m; s = 1 gives the full matrix ring with unity.
inline Ring matrix_ring(std::size_t k, const Int& scale, const Int& m,
                        const std::string& name = "") {
  if (k < 1) throw BadParameter("matrix ring needs k >= 1");
  if (scale == 0 || (m > 0 && mod_canon(scale, m) == 0))
    throw BadParameter("matrix ring scale must be nonzero");
  RingPresentation pres;
  pres.dim = k * k;
  pres.modulus = m;
  pres.name = name.empty() ? ("matrix" + std::to_string(k) + "x" + std::to_string(k)) : name;
  pres.products.resize(pres.dim * pres.dim);
  std::string prefix = scale == 1 ? "" : scale.str();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      pres.labels.push_back(prefix + "e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        detail::set_product(pres, i * k + j, j * k + l, i * k + l, scale);
  if (scale == 1 || (m > 0 && mod_canon(scale, m) == 1)) {
    Vec u(pres.dim, 0);
    for (std::size_t i = 0; i < k; ++i) u[i * k + i] = 1;
    pres.unity = u;
  }
  return make_ring(pres);
}

/// Strictly upper triangular k x k matrices; basis e_ij for i < j.
inline Ring strict_upper_ring(std::size_t k, const Int& m, const std::string& name = "") {
  if (k < 2) throw BadParameter("strict upper triangular ring needs k >= 2");
  RingPresentation pres;
  pres.modulus = m;
  pres.name = name.empty() ? ("strict_upper" + std::to_string(k)) : name;
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pos.emplace_back(i, j);
  pres.dim = pos.size();
  pres.products.resize(pres.dim * pres.dim);
  auto index_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < pos.size(); ++t)
      if (pos[t] == std::make_pair(i, j)) return t;
    return pos.size();
  };
  for (const auto& [i, j] : pos)
    pres.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b)
      if (pos[a].second == pos[b].first)
        detail::set_product(pres, a, b, index_of(pos[a].first, pos[b].second), 1);
  return make_ring(pres);
}

/// Upper triangular k x k matrices including the diagonal; unital.
inline Ring upper_triangular_ring(std::size_t k, const Int& m, const std::string& name = "") {
  if (k < 1) throw BadParameter("upper triangular ring needs k >= 1");
  RingPresentation pres;
  pres.modulus = m;
  pres.name = name.empty() ? ("upper_triangular" + std::to_string(k)) : name;
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) pos.emplace_back(i, j);
  pres.dim = pos.size();
  pres.products.resize(pres.dim * pres.dim);
  auto index_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < pos.size(); ++t)
      if (pos[t] == std::make_pair(i, j)) return t;
    return pos.size();
  };
  for (const auto& [i, j] : pos)
    pres.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b)
      if (pos[a].second == pos[b].first)
        detail::set_product(pres, a, b, index_of(pos[a].first, pos[b].second), 1);
  Vec u(pres.dim, 0);
  for (std::size_t i = 0; i < k; ++i) u[index_of(i, i)] = 1;
  pres.unity = u;
  return make_ring(pres);
}

/// External direct sum; component moduli must agree.
inline Ring direct_sum_ring(const Ring& a, const Ring& b, const std::string& name = "") {
  if (a.modulus() != b.modulus()) throw BadParameter("direct sum needs equal moduli");
  RingPresentation pres;
  pres.modulus = a.modulus();
  pres.name = name.empty() ? (a.name() + "+" + b.name()) : name;
  pres.dim = a.dim() + b.dim();
  pres.products.resize(pres.dim * pres.dim);
  for (const auto& l : a.labels()) pres.labels.push_back("l." + l);
  for (const auto& l : b.labels()) pres.labels.push_back("r." + l);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.table(i, j)) detail::set_product(pres, i, j, k, c);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& [k, c] : b.table(i, j))
        detail::set_product(pres, a.dim() + i, a.dim() + j, a.dim() + k, c);
  if (a.unity() && b.unity()) {
    Vec u(pres.dim, 0);
    for (std::size_t i = 0; i < a.dim(); ++i) u[i] = (*a.unity())[i];
    for (std::size_t i = 0; i < b.dim(); ++i) u[a.dim() + i] = (*b.unity())[i];
    pres.unity = u;
  }
  return make_ring(pres);
}

/// Span of v_1..v_N over GF(p) with v_i v_j = v_i. Every v_i is idempotent,
/// and the span is closed, so rank-N truncation is an exact subalgebra.
inline Ring idempotent_span_ring(std::size_t n, const Int& p, const std::string& name = "") {
  if (n < 1) throw BadParameter("idempotent span needs N >= 1");
  if (!detail::is_small_prime(p)) throw BadParameter("idempotent span needs a prime modulus");
  RingPresentation pres;
  pres.modulus = p;
  pres.name = name.empty() ? ("idem_span" + std::to_string(n)) : name;
  pres.dim = n;
  pres.products.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) pres.labels.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) detail::set_product(pres, i, j, i, 1);
  return make_ring(pres);
}

/// M_k(T_K) over GF(p), where T_K = span{v_{1/K}, ..., v_{(K-1)/K}} with
/// v_a v_b = v_{a+b} when a+b < 1 and 0 otherwise. Products whose denominator
/// sum reaches K vanish, so the truncation is an exact subalgebra; the whole
/// ring is nilpotent of index K.
inline Ring nil_truncation_ring(std::size_t k, std::size_t K, const Int& p,
                                const std::string& name = "") {
  if (k < 1) throw BadParameter("nil truncation needs matrix size k >= 1");
  if (K < 2) throw BadParameter("nil truncation needs K >= 2");
  if (!detail::is_small_prime(p)) throw BadParameter("nil truncation needs a prime modulus");
  RingPresentation pres;
  pres.modulus = p;
  pres.name = name.empty() ? ("nil_trunc" + std::to_string(k) + "_" + std::to_string(K)) : name;
  const std::size_t nv = K - 1;  // numerators 1..K-1
  pres.dim = k * k * nv;
  pres.products.resize(pres.dim * pres.dim);
  auto idx = [&](std::size_t i, std::size_t j, std::size_t t) {  // t = numerator - 1
    return (i * k + j) * nv + t;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < nv; ++t)
        pres.labels.push_back("v" + std::to_string(t + 1) + "e" + std::to_string(i + 1) +
                              std::to_string(j + 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t s = 0; s < nv; ++s)
          for (std::size_t t = 0; t < nv; ++t)
            if (s + t + 2 <= nv)  // numerators (s+1) + (t+1) < K
              detail::set_product(pres, idx(i, j, s), idx(j, l, t), idx(i, l, s + t + 1), 1);
  return make_ring(pres);
}

}  // namespace ncomm
