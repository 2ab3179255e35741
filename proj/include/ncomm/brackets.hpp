#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncomm/errors.hpp"
#include "ncomm/integers.hpp"
#include "ncomm/lattice.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

/// Resource limits for the enumerative operations. Exceeding one raises
/// BudgetExceeded; nothing is ever silently truncated.
struct Budgets {
  unsigned long long tuples = 10'000'000;     // bracket/lie-ideal tuple enumerations
  unsigned long long enumeration = 1u << 20;  // finite-ring element enumerations
  unsigned long long grid = 10'000'000;       // polynomial-image grid points
  int saturation_rounds = 10'000;
};

/// Which bracket/Lie-ideal condition is meant: arity n, distinguished slot
/// r+1 (so r ring slots before it, s = n-1-r after it), and the scalar beta
/// of the twisted bracket a_1...a_n - beta a_n...a_1.
class BracketSpec {
public:
  BracketSpec(int n, int r, Int beta, const Int& modulus) : n_(n), r_(r), beta_(std::move(beta)) {
    if (n_ < 2) throw BadParameter("bracket arity must be >= 2");
    if (r_ < 0 || r_ > n_ - 1) throw BadParameter("slot position out of range");
    if (beta_ == 0) throw ZeroBeta("beta must be nonzero");
    if (modulus > 0) {
      beta_ = mod_canon(beta_, modulus);
      if (beta_ == 0 || gcd(beta_, modulus) != 1)
        throw BadParameter("beta must be a unit modulo " + modulus.str());
    }
  }
  int n() const { return n_; }
  int r() const { return r_; }
  int s() const { return n_ - 1 - r_; }
  const Int& beta() const { return beta_; }

private:
  int n_;
  int r_;
  Int beta_;
};

/// a_1 a_2 ... a_n - beta * a_n a_{n-1} ... a_1 on coordinate vectors.
inline Vec bracket_vec(const Ring& ring, const std::vector<Vec>& elems, const Int& beta = 1) {
  if (elems.size() < 2) throw BadParameter("bracket needs at least two elements");
  if (beta == 0) throw ZeroBeta("beta must be nonzero");
  Vec fwd = elems.front();
  for (std::size_t i = 1; i < elems.size(); ++i) fwd = ring.mul(fwd, elems[i]);
  Vec rev = elems.back();
  for (std::size_t i = elems.size() - 1; i-- > 0;) rev = ring.mul(rev, elems[i]);
  return ring.sub(fwd, ring.scale(beta, rev));
}

/// The n-generalized commutator [a_1, ..., a_n]_n, optionally beta-twisted.
inline RingElement bracket_n(const std::vector<RingElement>& elems, const Int& beta = 1) {
  if (elems.size() < 2) throw BadParameter("bracket needs at least two elements");
  const Ring& ring = elems.front().ring();
  std::vector<Vec> coords;
  for (const RingElement& e : elems) {
    if (e.ring() != ring) throw RingMismatch("bracket over elements of different rings");
    coords.push_back(e.coords());
  }
  return RingElement(ring, bracket_vec(ring, coords, beta));
}

namespace detail {

inline Int product_of_ranks(const std::vector<Subgroup>& groups) {
  Int p = 1;
  for (const Subgroup& g : groups) p *= Int(g.rank());
  return p;
}

}  // namespace detail

/// [A_1, ..., A_n]_{n,beta}: the additive subgroup generated by all brackets
/// of members. Per-slot linearity reduces generation to basis tuples. The
/// enumeration walks a prefix tree carrying the forward and the reversed
/// partial product and prunes subtrees where both are already zero.
inline Subgroup bracket_subgroup(const Ring& ring, const std::vector<Subgroup>& groups,
                                 const Int& beta = 1, const Budgets& budgets = {}) {
  if (groups.size() < 2) throw BadParameter("bracket subgroup needs arity >= 2");
  for (const Subgroup& g : groups)
    if (g.ring() != ring) throw RingMismatch("subgroup over a different ring");
  Int b = ring.modulus() > 0 ? mod_canon(beta, ring.modulus()) : beta;
  if (b == 0) throw ZeroBeta("beta must be nonzero");
  for (const Subgroup& g : groups)
    if (g.is_zero()) return Subgroup::zero(ring);
  if (detail::product_of_ranks(groups) > Int(budgets.tuples))
    throw BudgetExceeded("bracket tuple count exceeds budget of " +
                         std::to_string(budgets.tuples));

  const std::size_t n = groups.size();
  const std::size_t d = ring.dim();
  std::vector<std::vector<ProductRow>> rows_sparse(n);
  for (std::size_t g = 0; g < n; ++g)
    for (const Vec& row : groups[g].rows()) rows_sparse[g].push_back(ring.to_sparse(row));

  SpanBuilder span(ring);
  std::vector<ProductRow> fwd(n + 1), rev(n + 1);
  Vec leaf(d, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t depth) {
    if (depth == n) {
      std::fill(leaf.begin(), leaf.end(), Int(0));
      for (const auto& [k, c] : fwd[n]) leaf[k] = c;
      for (const auto& [k, c] : rev[n]) leaf[k] -= b * c;
      reduce_vec(leaf, ring.modulus());
      span.add(leaf);
      return;
    }
    for (const ProductRow& row : rows_sparse[depth]) {
      if (depth == 0) {
        fwd[1] = row;
        rev[1] = row;
      } else {
        ring.mul_sparse(fwd[depth], row, fwd[depth + 1]);
        ring.mul_sparse(row, rev[depth], rev[depth + 1]);
        if (fwd[depth + 1].empty() && rev[depth + 1].empty()) continue;
      }
      walk(depth + 1);
    }
  };
  walk(0);
  return span.finish();
}

inline Subgroup bracket_subgroup_power(const Ring& ring, const Subgroup& a, std::size_t n,
                                       const Int& beta = 1, const Budgets& budgets = {}) {
  return bracket_subgroup(ring, std::vector<Subgroup>(n, a), beta, budgets);
}

/// AB: span of pairwise products of basis rows.
inline Subgroup product_subgroup(const Ring& ring, const Subgroup& a, const Subgroup& b) {
  if (a.ring() != ring || b.ring() != ring) throw RingMismatch("subgroup over a different ring");
  SpanBuilder span(ring);
  for (const Vec& x : a.rows())
    for (const Vec& y : b.rows()) span.add(ring.mul(x, y));
  return span.finish();
}

/// R^k, computed iteratively from R^1 = R.
inline Subgroup power_subgroup(const Ring& ring, std::size_t k) {
  if (k < 1) throw BadParameter("power needs k >= 1");
  Subgroup acc = Subgroup::whole(ring);
  Subgroup whole = acc;
  for (std::size_t i = 1; i < k; ++i) acc = product_subgroup(ring, acc, whole);
  return acc;
}

/// I(T): the additive group of the two-sided ideal generated by T, i.e.
/// T + RT + TR + RTR, reached by saturating under basis multiplication.
inline Subgroup ideal_generated(const Ring& ring, const Subgroup& t, const Budgets& budgets = {}) {
  if (t.ring() != ring) throw RingMismatch("subgroup over a different ring");
  return saturate(
      t,
      [&](const Subgroup& s) {
        std::vector<Vec> out;
        for (const Vec& x : s.rows()) {
          for (std::size_t i = 0; i < ring.dim(); ++i) {
            Vec e = ring.basis_vec(i);
            out.push_back(ring.mul(e, x));
            out.push_back(ring.mul(x, e));
          }
        }
        return out;
      },
      budgets.saturation_rounds);
}

enum class Side { left, right, two_sided };

/// Outcome of a membership-style predicate; carries a witness on failure.
struct CheckResult {
  bool ok = true;
  std::string detail;
  std::optional<Vec> witness;
  explicit operator bool() const { return ok; }
};

inline CheckResult is_ideal(const Ring& ring, const Subgroup& a, Side side = Side::two_sided) {
  if (a.ring() != ring) throw RingMismatch("subgroup over a different ring");
  for (const Vec& x : a.rows()) {
    for (std::size_t i = 0; i < ring.dim(); ++i) {
      Vec e = ring.basis_vec(i);
      if (side != Side::right) {
        Vec p = ring.mul(e, x);
        if (!a.member(p))
          return {false, ring.labels()[i] + " * (" + format_element(ring, x) + ") escapes", p};
      }
      if (side != Side::left) {
        Vec p = ring.mul(x, e);
        if (!a.member(p))
          return {false, "(" + format_element(ring, x) + ") * " + ring.labels()[i] + " escapes", p};
      }
    }
  }
  return {};
}

inline CheckResult is_lie_ideal(const Ring& ring, const Subgroup& a) {
  if (a.ring() != ring) throw RingMismatch("subgroup over a different ring");
  for (const Vec& x : a.rows()) {
    for (std::size_t i = 0; i < ring.dim(); ++i) {
      Vec e = ring.basis_vec(i);
      Vec c = ring.sub(ring.mul(x, e), ring.mul(e, x));
      if (!a.member(c))
        return {false, "[" + format_element(ring, x) + ", " + ring.labels()[i] + "] escapes", c};
    }
  }
  return {};
}

namespace detail {

/// Calls fn for every tuple in {0..d-1}^len; returns false if fn aborts.
inline bool for_each_tuple(std::size_t d, std::size_t len,
                           const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> t(len, 0);
  for (;;) {
    if (!fn(t)) return false;
    std::size_t pos = len;
    for (;;) {
      if (pos == 0) return true;
      --pos;
      if (++t[pos] < d) break;
      t[pos] = 0;
    }
  }
}

}  // namespace detail

/// Definition of an n-generalized Lie ideal at position r+1: every bracket
/// [x_1..x_r, a, y_1..y_s] with ring entries x, y and a in A lands in A.
/// Checking basis vectors suffices by per-slot linearity.
inline CheckResult is_n_gen_lie_ideal(const Ring& ring, const Subgroup& a, const BracketSpec& spec,
                                      const Budgets& budgets = {}) {
  if (a.ring() != ring) throw RingMismatch("subgroup over a different ring");
  const std::size_t d = ring.dim();
  const std::size_t outer = static_cast<std::size_t>(spec.n()) - 1;
  Int count = Int(a.rank());
  for (std::size_t i = 0; i < outer; ++i) count *= Int(d);
  if (count > Int(budgets.tuples))
    throw BudgetExceeded("lie-ideal tuple count exceeds budget");

  CheckResult result;
  for (const Vec& row : a.rows()) {
    bool keep = detail::for_each_tuple(d, outer, [&](const std::vector<std::size_t>& t) {
      std::vector<Vec> elems;
      elems.reserve(spec.n());
      for (int i = 0; i < spec.r(); ++i) elems.push_back(ring.basis_vec(t[i]));
      elems.push_back(row);
      for (int i = 0; i < spec.s(); ++i) elems.push_back(ring.basis_vec(t[spec.r() + i]));
      Vec val = bracket_vec(ring, elems, spec.beta());
      if (a.member(val)) return true;
      std::string desc = "[";
      for (std::size_t i = 0; i < elems.size(); ++i)
        desc += (i ? ", " : "") + format_element(ring, elems[i]);
      result = {false, desc + "] escapes", val};
      return false;
    });
    if (!keep) break;
  }
  return result;
}

/// Smallest n-generalized Lie ideal (at the spec's position) containing seed.
inline Subgroup n_gen_lie_closure(const Ring& ring, const Subgroup& seed, const BracketSpec& spec,
                                  const Budgets& budgets = {}) {
  if (seed.ring() != ring) throw RingMismatch("subgroup over a different ring");
  const std::size_t d = ring.dim();
  const std::size_t outer = static_cast<std::size_t>(spec.n()) - 1;
  return saturate(
      seed,
      [&](const Subgroup& s) {
        std::vector<Vec> out;
        for (const Vec& row : s.rows()) {
          detail::for_each_tuple(d, outer, [&](const std::vector<std::size_t>& t) {
            std::vector<Vec> elems;
            elems.reserve(spec.n());
            for (int i = 0; i < spec.r(); ++i) elems.push_back(ring.basis_vec(t[i]));
            elems.push_back(row);
            for (int i = 0; i < spec.s(); ++i) elems.push_back(ring.basis_vec(t[spec.r() + i]));
            out.push_back(bracket_vec(ring, elems, spec.beta()));
            return true;
          });
        }
        return out;
      },
      budgets.saturation_rounds);
}

/// Additive subgroup generated by all squares: span of e_i^2 and the
/// polarizations e_i e_j + e_j e_i, which expand (sum a_i e_i)^2.
inline Subgroup squares_subgroup(const Ring& ring) {
  SpanBuilder span(ring);
  for (std::size_t i = 0; i < ring.dim(); ++i) {
    Vec e = ring.basis_vec(i);
    span.add(ring.mul(e, e));
    for (std::size_t j = i + 1; j < ring.dim(); ++j) {
      Vec f = ring.basis_vec(j);
      span.add(ring.add(ring.mul(e, f), ring.mul(f, e)));
    }
  }
  return span.finish();
}

namespace detail {

/// Multi-indices alpha in N^vars with |alpha| <= degree, fed to fn. Each
/// coordinate of a total-degree-<= k integer polynomial map is determined on
/// this simplex, and by discrete Newton expansion the additive span of its
/// values over all of Z^vars equals the span of its values on the simplex.
inline void for_each_simplex_point(std::size_t vars, unsigned degree,
                                   const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> alpha(vars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos == vars) {
      fn(alpha);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      alpha[pos] = v;
      rec(pos + 1, left - v);
    }
    alpha[pos] = 0;
  };
  rec(0, degree);
}

inline Int simplex_size(std::size_t vars, unsigned degree) {
  // C(vars + degree, degree)
  Int num = 1, den = 1;
  for (unsigned i = 1; i <= degree; ++i) {
    num *= Int(vars + i);
    den *= Int(i);
  }
  return num / den;
}

}  // namespace detail

/// Subgroup generated by { x^k : x in R }. The coordinates of x^k are integer
/// polynomials of total degree <= k in the coordinates of x, so the span of
/// all values equals the span over the degree-k simplex of coordinate grids.
inline Subgroup power_values_subgroup(const Ring& ring, unsigned k, const Budgets& budgets = {}) {
  if (k < 1) throw BadParameter("power values need k >= 1");
  if (k == 1) return Subgroup::whole(ring);
  if (detail::simplex_size(ring.dim(), k) > Int(budgets.grid))
    throw BudgetExceeded("power-value grid exceeds budget");
  SpanBuilder span(ring);
  detail::for_each_simplex_point(ring.dim(), k, [&](const std::vector<unsigned>& alpha) {
    Vec x(ring.dim());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = alpha[i];
    reduce_vec(x, ring.modulus());
    span.add(ring.pow(x, k));
  });
  return span.finish();
}

/// K_I = sum_{z in I} I z^{n-1} [z^{n-1}, I] I, generated by
/// u z^{n-1} [z^{n-1}, v] w over basis u, v, w (multilinear slots) and z
/// ranging over I: exhaustively when I is small and finite, otherwise over
/// the degree-2(n-1) coefficient simplex, which the Newton argument covers.
inline Subgroup herstein_kernel(const Ring& ring, const Subgroup& ideal, unsigned n,
                                const Budgets& budgets = {}) {
  if (ideal.ring() != ring) throw RingMismatch("subgroup over a different ring");
  if (n < 3) throw BadParameter("herstein kernel needs n >= 3");
  if (ideal.is_zero()) return Subgroup::zero(ring);

  const unsigned degree = 2 * (n - 1);
  std::vector<Vec> zs;
  bool enumerated = false;
  if (ring.modulus() > 0) {
    Int total = 1;
    bool small = true;
    for (std::size_t i = 0; i < ideal.rank() && small; ++i) {
      total *= ring.modulus();
      if (total > Int(budgets.enumeration)) small = false;
    }
    if (small) {
      enumerated = true;
      std::vector<Int> coeff(ideal.rank(), 0);
      for (;;) {
        Vec z = ring.zero_vec();
        for (std::size_t i = 0; i < ideal.rank(); ++i)
          if (coeff[i] != 0) z = ring.add(z, ring.scale(coeff[i], ideal.rows()[i]));
        zs.push_back(std::move(z));
        std::size_t pos = ideal.rank();
        for (;;) {
          if (pos == 0) goto done_enum;
          --pos;
          if (++coeff[pos] < ring.modulus()) break;
          coeff[pos] = 0;
        }
      }
    done_enum:;
    }
  }
  if (!enumerated) {
    if (detail::simplex_size(ideal.rank(), degree) > Int(budgets.grid))
      throw BudgetExceeded("herstein kernel grid exceeds budget");
    detail::for_each_simplex_point(ideal.rank(), degree, [&](const std::vector<unsigned>& alpha) {
      Vec z = ring.zero_vec();
      for (std::size_t i = 0; i < ideal.rank(); ++i)
        if (alpha[i] != 0) z = ring.add(z, ring.scale(Int(alpha[i]), ideal.rows()[i]));
      zs.push_back(std::move(z));
    });
  }

  SpanBuilder span(ring);
  for (const Vec& z : zs) {
    Vec p = ring.pow(z, n - 1);
    if (is_zero_vec(p)) continue;
    for (const Vec& v : ideal.rows()) {
      Vec comm = ring.sub(ring.mul(p, v), ring.mul(v, p));
      if (is_zero_vec(comm)) continue;
      Vec mid = ring.mul(p, comm);
      for (const Vec& u : ideal.rows()) {
        Vec umid = ring.mul(u, mid);
        for (const Vec& w : ideal.rows()) span.add(ring.mul(umid, w));
      }
    }
  }
  return span.finish();
}

}  // namespace ncomm
