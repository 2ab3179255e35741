#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncomm/errors.hpp"
#include "ncomm/integers.hpp"

namespace ncomm {

/// One structure-constant row: the nonzero coordinates of e_i * e_j, sorted by index.
using ProductRow = std::vector<std::pair<std::size_t, Int>>;

/// Unvalidated input for make_ring. Indices are 0-based here; the text file
/// format and all error messages use 1-based indices.
struct RingPresentation {
  std::string name = "ring";
  std::size_t dim = 0;
  Int modulus = 0;  // 0 means scalars Z, m > 0 means Z/m
  std::vector<std::string> labels;             // may be empty: defaults to e1..ed
  std::vector<ProductRow> products;            // dim*dim rows, row-major (i*dim + j)
  std::optional<Vec> unity;
};

namespace detail {

struct RingData {
  std::string name;
  std::size_t dim = 0;
  Int modulus = 0;
  std::vector<std::string> labels;
  std::vector<ProductRow> table;  // dim*dim, canonical residues when modulus > 0
  std::optional<Vec> unity;
};

}  // namespace detail

/// Immutable validated ring handle. Copies share the underlying presentation;
/// two Ring values denote the same ring iff they share it (pointer identity).
class Ring {
public:
  Ring() = default;

  std::size_t dim() const { return data_->dim; }
  const Int& modulus() const { return data_->modulus; }
  const std::string& name() const { return data_->name; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::optional<Vec>& unity() const { return data_->unity; }
  bool valid() const { return data_ != nullptr; }

  const ProductRow& table(std::size_t i, std::size_t j) const {
    return data_->table[i * data_->dim + j];
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  /// Coordinates of the product x*y, exact and reduced.
  Vec mul(const Vec& x, const Vec& y) const {
    Vec out;
    mul_into(x, y, out);
    return out;
  }

  /// Same as mul but reuses the capacity of `out` (the bracket enumerations
  /// call this millions of times). `out` must not alias x or y.
  void mul_into(const Vec& x, const Vec& y, Vec& out) const {
    const std::size_t d = dim();
    if (x.size() != d || y.size() != d)
      throw DimensionMismatch("element length does not match ring dimension");
    out.assign(d, Int(0));
    Int c;
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        c = x[i] * y[j];
        for (const auto& [k, coeff] : table(i, j)) out[k] += c * coeff;
      }
    }
    reduce_vec(out, modulus());
  }

  Vec add(const Vec& x, const Vec& y) const {
    Vec out(x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    reduce_vec(out, modulus());
    return out;
  }

  Vec sub(const Vec& x, const Vec& y) const {
    Vec out(x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
    reduce_vec(out, modulus());
    return out;
  }

  Vec scale(const Int& c, const Vec& x) const {
    Vec out(x);
    for (Int& v : out) v *= c;
    reduce_vec(out, modulus());
    return out;
  }

  /// Sparse product for the bracket enumerations: operands and result are
  /// sorted (index, coefficient) lists. `out` must not alias x or y.
  void mul_sparse(const ProductRow& x, const ProductRow& y, ProductRow& out) const {
    out.clear();
    for (const auto& [i, ci] : x) {
      for (const auto& [j, cj] : y) {
        const ProductRow& row = table(i, j);
        if (row.empty()) continue;
        Int c = ci * cj;
        for (const auto& [k, ck] : row) out.emplace_back(k, c * ck);
      }
    }
    if (out.size() > 1) {
      std::sort(out.begin(), out.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::size_t w = 0;
      for (std::size_t r = 1; r < out.size(); ++r) {
        if (out[r].first == out[w].first)
          out[w].second += out[r].second;
        else
          out[++w] = std::move(out[r]);
      }
      out.resize(w + 1);
    }
    const Int& m = modulus();
    if (m > 0)
      for (auto& [k, c] : out) c = mod_canon(c, m);
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }),
              out.end());
  }

  ProductRow to_sparse(const Vec& v) const {
    ProductRow out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out.emplace_back(i, v[i]);
    return out;
  }

  Vec zero_vec() const { return Vec(dim(), 0); }

  Vec basis_vec(std::size_t i) const {
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
  }

  /// x^k with k >= 1 (associativity makes the bracketing irrelevant).
  Vec pow(const Vec& x, unsigned k) const {
    Vec out = x;
    for (unsigned t = 1; t < k; ++t) out = mul(out, x);
    return out;
  }

private:
  friend Ring make_ring(const RingPresentation&);
  explicit Ring(std::shared_ptr<const detail::RingData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::RingData> data_;
};

/// Element of a specific ring: a coordinate vector in the ring's basis.
class RingElement {
public:
  RingElement(Ring ring, Vec coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (coords_.size() != ring_.dim())
      throw DimensionMismatch("element length does not match ring dimension");
    reduce_vec(coords_, ring_.modulus());
  }

  const Ring& ring() const { return ring_; }
  const Vec& coords() const { return coords_; }
  bool is_zero() const { return is_zero_vec(coords_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    a.same_ring(b);
    return RingElement(a.ring_, a.ring_.add(a.coords_, b.coords_));
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    a.same_ring(b);
    return RingElement(a.ring_, a.ring_.sub(a.coords_, b.coords_));
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.same_ring(b);
    return RingElement(a.ring_, a.ring_.mul(a.coords_, b.coords_));
  }
  friend RingElement operator*(const Int& c, const RingElement& a) {
    return RingElement(a.ring_, a.ring_.scale(c, a.coords_));
  }
  friend RingElement operator-(const RingElement& a) { return Int(-1) * a; }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    a.same_ring(b);
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  RingElement pow(unsigned k) const { return RingElement(ring_, ring_.pow(coords_, k)); }

private:
  void same_ring(const RingElement& other) const {
    if (ring_ != other.ring_) throw RingMismatch("elements of different rings");
  }
  Ring ring_;
  Vec coords_;
};

inline RingElement ring_zero(const Ring& r) { return RingElement(r, r.zero_vec()); }
inline RingElement basis_element(const Ring& r, std::size_t i) {
  return RingElement(r, r.basis_vec(i));
}

/// Validates a presentation (associativity by the full triple loop, unity if
/// present) and returns the ring handle.
inline Ring make_ring(const RingPresentation& pres) {
  if (pres.dim < 1) throw BadParameter("ring dimension must be >= 1");
  if (pres.modulus < 0) throw BadParameter("modulus must be >= 0");
  if (pres.products.size() != pres.dim * pres.dim)
    throw DimensionMismatch("structure constant table must have dim*dim entries");

  auto data = std::make_shared<detail::RingData>();
  data->name = pres.name;
  data->dim = pres.dim;
  data->modulus = pres.modulus;
  if (pres.labels.empty()) {
    for (std::size_t i = 0; i < pres.dim; ++i) data->labels.push_back("e" + std::to_string(i + 1));
  } else {
    if (pres.labels.size() != pres.dim)
      throw DimensionMismatch("label count does not match ring dimension");
    data->labels = pres.labels;
  }

  data->table.resize(pres.dim * pres.dim);
  for (std::size_t idx = 0; idx < pres.products.size(); ++idx) {
    ProductRow row;
    for (const auto& [k, c] : pres.products[idx]) {
      if (k >= pres.dim) throw DimensionMismatch("structure constant index out of range");
      Int cc = mod_canon(c, pres.modulus);
      if (cc != 0) row.emplace_back(k, cc);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 1; t < row.size(); ++t)
      if (row[t].first == row[t - 1].first)
        throw BadParameter("duplicate target index in structure constant row");
    data->table[idx] = std::move(row);
  }

  Ring ring{std::shared_ptr<const detail::RingData>(data)};

  // (e_i e_j) e_k = e_i (e_j e_k) for all basis triples.
  const std::size_t d = pres.dim;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec ij(d, 0);
      for (const auto& [k, c] : ring.table(i, j)) ij[k] = c;
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = ring.mul(ij, ring.basis_vec(k));
        Vec jk(d, 0);
        for (const auto& [t, c] : ring.table(j, k)) jk[t] = c;
        Vec rhs = ring.mul(ring.basis_vec(i), jk);
        if (lhs != rhs) throw NonAssociative(i + 1, j + 1, k + 1);
      }
    }
  }

  if (pres.unity) {
    Vec u = *pres.unity;
    if (u.size() != d) throw DimensionMismatch("unity length does not match ring dimension");
    reduce_vec(u, pres.modulus);
    for (std::size_t i = 0; i < d; ++i) {
      Vec e = ring.basis_vec(i);
      if (ring.mul(u, e) != e || ring.mul(e, u) != e)
        throw BadUnity("claimed unity does not fix basis element " + std::to_string(i + 1));
    }
    data->unity = u;
  }

  return ring;
}

// ---- element text syntax: "c*label + c*label - ...", bare label means coefficient 1 ----

inline std::string format_element(const Ring& ring, const Vec& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Int c = v[i];
    if (first) {
      if (c < 0) { out << "-"; c = -c; }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) out << c.str() << "*";
    out << ring.labels()[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

/// Parses the element syntax used on the CLI and in reports. A coefficient
/// needs an explicit '*' so that labels may themselves start with digits
/// (the scaled matrix rings label their basis "2e12" and so on).
inline Vec parse_element(const Ring& ring, const std::string& text) {
  Vec out = ring.zero_vec();
  std::size_t pos = 0;
  const std::string& s = text;
  auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
  skip_ws();
  if (pos == s.size()) throw BadParameter("empty element expression");
  if (s.compare(pos, 1, "0") == 0 && pos + 1 == s.size()) return out;
  bool expect_term = true;
  Int sign = 1;
  while (pos < s.size()) {
    skip_ws();
    if (pos == s.size()) break;
    char c = s[pos];
    if (!expect_term) {
      if (c == '+') { sign = 1; ++pos; expect_term = true; continue; }
      if (c == '-') { sign = -1; ++pos; expect_term = true; continue; }
      throw BadParameter("expected '+' or '-' in element expression near '" + s.substr(pos) + "'");
    }
    if (c == '-') { sign = -sign; ++pos; continue; }
    if (c == '+') { ++pos; continue; }
    // term: [integer '*'] label ; label runs to the next +, -, or whitespace
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-' &&
           !std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    std::string term = s.substr(start, pos - start);
    Int coeff = 1;
    std::string label = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      try {
        coeff = Int(term.substr(0, star));
      } catch (...) {
        throw BadParameter("bad coefficient in term '" + term + "'");
      }
      label = term.substr(star + 1);
    }
    const auto& labels = ring.labels();
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw BadParameter("unknown basis label '" + label + "'");
    out[static_cast<std::size_t>(it - labels.begin())] += sign * coeff;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw BadParameter("dangling operator in element expression");
  reduce_vec(out, ring.modulus());
  return out;
}

}  // namespace ncomm
