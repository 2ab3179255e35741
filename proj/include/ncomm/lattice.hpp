#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ncomm/errors.hpp"
#include "ncomm/integers.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

namespace detail {

/// In-place row-style Hermite normal form over Z. On return the rows are the
/// unique canonical basis of the input row span: leading columns strictly
/// increasing, pivots positive, entries above a pivot reduced into [0, pivot).
/// Zero rows are removed.
inline void hnf_rows(std::vector<Vec>& rows, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    // Euclid on the column entries of rows r..end until one survivor remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;  // column is zero below r
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[r][col];  // truncated: remainder shrinks in |.|
        if (q != 0)
          for (std::size_t t = col; t < width; ++t) rows[i][t] -= q * rows[r][t];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] != 0) {
      if (rows[r][col] < 0)
        for (Int& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(rows[i][col], rows[r][col]);
        if (q != 0)
          for (std::size_t t = col; t < width; ++t) rows[i][t] -= q * rows[r][t];
      }
      ++r;
    }
  }
  rows.resize(r);
}

/// Canonical basis rows of the span of `gens` over Z (m = 0) or Z/m (m > 0).
/// For m > 0 this is the Howell form, realized as HNF of the generators
/// stacked with m*I and reduced mod m: the pivots of that full-rank HNF all
/// divide m, rows whose pivot reaches m are exactly m*e_j and get dropped,
/// and what remains is the unique canonical generating matrix.
inline std::vector<Vec> canonical_rows(std::vector<Vec> gens, std::size_t width, const Int& m) {
  for (Vec& g : gens) reduce_vec(g, m);
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Vec& v) { return is_zero_vec(v); }),
             gens.end());
  if (m > 0) {
    for (std::size_t i = 0; i < width; ++i) {
      Vec row(width, 0);
      row[i] = m;
      gens.push_back(std::move(row));
    }
  }
  hnf_rows(gens, width);
  if (m > 0) {
    std::vector<Vec> kept;
    for (Vec& row : gens) {
      reduce_vec(row, m);
      if (!is_zero_vec(row)) kept.push_back(std::move(row));
    }
    gens = std::move(kept);
  }
  return gens;
}

inline std::size_t lead_col(const Vec& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) return i;
  return row.size();
}

/// Reduces v against canonical rows; returns the coefficient used per row.
/// v ends at zero iff it was a member. Over Z/m any solution of c*g == v[j]
/// (mod m) serves: the Howell property makes the outcome independent of the
/// choice, and g | m turns solvability into plain integer divisibility.
inline std::optional<Vec> reduce_against(const std::vector<Vec>& rows, Vec& v, const Int& m) {
  Vec coeffs(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t j = lead_col(rows[i]);
    if (v[j] == 0) continue;
    const Int& g = rows[i][j];
    if (v[j] % g != 0) return std::nullopt;
    Int c = v[j] / g;
    for (std::size_t t = j; t < v.size(); ++t) v[t] = mod_canon(v[t] - c * rows[i][t], m);
    coeffs[i] = mod_canon(c, m);
  }
  return coeffs;
}

}  // namespace detail

/// Additive subgroup of a ring's coordinate module, held in canonical form:
/// Hermite normal form over Z, Howell form over Z/m. Two Subgroups are equal
/// iff their basis matrices are bit-identical, which the canonical form
/// guarantees for equal subgroups however they were generated.
class Subgroup {
public:
  static Subgroup span(const Ring& ring, std::vector<Vec> generators) {
    for (const Vec& g : generators)
      if (g.size() != ring.dim())
        throw DimensionMismatch("generator length does not match ring dimension");
    return Subgroup(ring, detail::canonical_rows(std::move(generators), ring.dim(), ring.modulus()));
  }

  static Subgroup zero(const Ring& ring) { return Subgroup(ring, {}); }

  static Subgroup whole(const Ring& ring) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ring.dim(); ++i) rows.push_back(ring.basis_vec(i));
    return span(ring, std::move(rows));
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Vec>& rows() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  bool member(Vec v) const {
    if (v.size() != ring_.dim())
      throw DimensionMismatch("vector length does not match ring dimension");
    reduce_vec(v, ring_.modulus());
    auto c = detail::reduce_against(rows_, v, ring_.modulus());
    return c.has_value() && is_zero_vec(v);
  }

  bool member(const RingElement& x) const {
    if (x.ring() != ring_) throw RingMismatch("element of a different ring");
    return member(x.coords());
  }

  /// Coefficients expressing v over the basis rows, if v is a member.
  std::optional<Vec> solve(Vec v) const {
    reduce_vec(v, ring_.modulus());
    auto c = detail::reduce_against(rows_, v, ring_.modulus());
    if (!c || !is_zero_vec(v)) return std::nullopt;
    return c;
  }

  bool contains(const Subgroup& other) const {
    if (other.ring_ != ring_) throw RingMismatch("subgroups of different rings");
    for (const Vec& row : other.rows_)
      if (!member(row)) return false;
    return true;
  }

  /// Number of elements when the scalars are Z/m: product of m / pivot.
  Int element_count() const {
    if (ring_.modulus() == 0) throw InfiniteScalar("subgroup over Z is infinite unless zero");
    Int n = 1;
    for (const Vec& row : rows_) n *= ring_.modulus() / row[detail::lead_col(row)];
    return n;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }

private:
  Subgroup(Ring ring, std::vector<Vec> rows) : ring_(std::move(ring)), rows_(std::move(rows)) {}
  Ring ring_;
  std::vector<Vec> rows_;
};

inline Subgroup sum(const Subgroup& a, const Subgroup& b) {
  if (a.ring() != b.ring()) throw RingMismatch("subgroups of different rings");
  std::vector<Vec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Subgroup::span(a.ring(), std::move(rows));
}

/// Accumulates vectors into a growing span without re-canonicalizing per
/// vector: candidates that already reduce to zero are discarded, the rest are
/// folded in batches. The end result equals span(all added vectors).
class SpanBuilder {
public:
  explicit SpanBuilder(const Ring& ring)
      : ring_(ring), current_(Subgroup::zero(ring)), batch_(std::max<std::size_t>(8, ring.dim())) {}

  void add(Vec v) {
    reduce_vec(v, ring_.modulus());
    Vec probe = v;
    auto c = detail::reduce_against(current_.rows(), probe, ring_.modulus());
    if (c && is_zero_vec(probe)) return;
    pending_.push_back(std::move(v));
    if (pending_.size() >= batch_) flush();
  }

  Subgroup finish() {
    flush();
    return current_;
  }

private:
  void flush() {
    if (pending_.empty()) return;
    std::vector<Vec> rows = current_.rows();
    rows.insert(rows.end(), pending_.begin(), pending_.end());
    pending_.clear();
    current_ = Subgroup::span(ring_, std::move(rows));
  }

  Ring ring_;
  Subgroup current_;
  std::vector<Vec> pending_;
  std::size_t batch_;
};

/// Iterates S <- span(S union expand(S)) to the least fixed point. Ascending
/// chains of subgroups of Z^d and (Z/m)^d stabilize, so termination needs no
/// budget; the budget only turns an implementation bug into a loud error.
inline Subgroup saturate(const Subgroup& seed,
                         const std::function<std::vector<Vec>(const Subgroup&)>& expand,
                         int max_rounds = 10000) {
  Subgroup current = seed;
  for (int round = 1; round <= max_rounds; ++round) {
    std::vector<Vec> extra = expand(current);
    std::vector<Vec> rows = current.rows();
    rows.insert(rows.end(), extra.begin(), extra.end());
    Subgroup next = Subgroup::span(current.ring(), std::move(rows));
    if (next == current) return current;
    current = std::move(next);
  }
  throw BudgetExceeded("saturation did not stabilize within " + std::to_string(max_rounds) +
                       " rounds (rank " + std::to_string(current.rank()) + ")");
}

/// Generators of { c in scalars^n : sum_i c_i * A_i == 0 (mod m) } for n rows
/// A of width `width`. Triangularizes [A | I] column by column; over Z/m the
/// row m*e_col joins the pool when its column is processed, which plays the
/// role of the stacked m*I block without ever materializing all of it. Rows
/// whose A-part hits zero are exactly the kernel generators.
inline std::vector<Vec> left_kernel(const std::vector<Vec>& a_rows, std::size_t width,
                                    const Int& m) {
  const std::size_t n = a_rows.size();
  std::vector<Vec> pool;
  std::vector<Vec> kernel;

  auto a_part_zero = [&](const Vec& row) {
    for (std::size_t j = 0; j < width; ++j)
      if (row[j] != 0) return false;
    return true;
  };
  auto stash_if_kernel = [&](Vec& row) {
    if (!a_part_zero(row)) return false;
    Vec tail(row.begin() + static_cast<std::ptrdiff_t>(width), row.end());
    reduce_vec(tail, m);
    if (!is_zero_vec(tail)) kernel.push_back(std::move(tail));
    return true;
  };

  for (std::size_t i = 0; i < n; ++i) {
    Vec row(width + n, 0);
    for (std::size_t j = 0; j < width; ++j) row[j] = mod_canon(a_rows[i][j], m);
    row[width + i] = 1;
    if (!stash_if_kernel(row)) pool.push_back(std::move(row));
  }

  for (std::size_t col = 0; col < width; ++col) {
    if (m > 0) {
      Vec row(width + n, 0);
      row[col] = m;
      pool.push_back(std::move(row));
    }
    for (;;) {
      std::size_t best = pool.size();
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i][col] == 0) continue;
        if (best == pool.size() || abs(pool[i][col]) < abs(pool[best][col])) best = i;
      }
      if (best == pool.size()) break;
      bool clean = true;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i == best || pool[i][col] == 0) continue;
        Int q = pool[i][col] / pool[best][col];
        if (q != 0) {
          for (std::size_t t = 0; t < pool[i].size(); ++t) pool[i][t] -= q * pool[best][t];
          if (m > 0) reduce_vec(pool[i], m);
        }
        if (pool[i][col] != 0) clean = false;
      }
      if (clean) {
        // retire the pivot row; nothing later may combine with it
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [&](Vec& row) { return stash_if_kernel(row); }),
               pool.end());
  }
  for (Vec& row : pool) stash_if_kernel(row);
  return kernel;
}

}  // namespace ncomm
