#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncomm/errors.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

/// Text format for ring presentations. Indices are 1-based. '#' starts a
/// comment. Header keys (any order): name, dim, modulus, labels, unity; then
/// a `products` section of lines `i j -> k1:c1 k2:c2 ...`. Pairs that never
/// appear multiply to zero. Coefficients must be canonical residues when the
/// modulus is positive.
///
///     name gf2
///     dim 1
///     modulus 2
///     labels e1
///     unity 1
///     products
///     1 1 -> 1:1
inline RingPresentation parse_ring_presentation(std::istream& in) {
  RingPresentation pres;
  bool saw_dim = false, saw_modulus = false, in_products = false;
  std::vector<std::vector<bool>> seen;
  std::string raw;
  std::size_t lineno = 0;

  auto parse_int = [&](const std::string& tok) {
    try {
      return Int(tok);
    } catch (...) {
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
  };
  auto check_coeff = [&](const Int& c) {
    if (saw_modulus && pres.modulus > 0 && (c < 0 || c >= pres.modulus))
      throw ParseError(lineno, "coefficient " + c.str() + " is not a canonical residue mod " +
                                   pres.modulus.str());
  };

  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string key;
    if (!(line >> key)) continue;

    if (!in_products) {
      if (key == "name") {
        if (!(line >> pres.name)) throw ParseError(lineno, "name needs a value");
      } else if (key == "dim") {
        std::string tok;
        if (!(line >> tok)) throw ParseError(lineno, "dim needs a value");
        Int d = parse_int(tok);
        if (d < 1) throw ParseError(lineno, "dim must be >= 1");
        pres.dim = static_cast<std::size_t>(d);
        saw_dim = true;
      } else if (key == "modulus") {
        std::string tok;
        if (!(line >> tok)) throw ParseError(lineno, "modulus needs a value");
        pres.modulus = parse_int(tok);
        if (pres.modulus < 0) throw ParseError(lineno, "modulus must be >= 0");
        saw_modulus = true;
      } else if (key == "labels") {
        std::string tok;
        while (line >> tok) pres.labels.push_back(tok);
      } else if (key == "unity") {
        Vec u;
        std::string tok;
        while (line >> tok) u.push_back(parse_int(tok));
        pres.unity = u;
      } else if (key == "products") {
        if (!saw_dim) throw ParseError(lineno, "dim must appear before products");
        if (!saw_modulus) throw ParseError(lineno, "modulus must appear before products");
        in_products = true;
        seen.assign(pres.dim, std::vector<bool>(pres.dim, false));
      } else {
        throw ParseError(lineno, "unknown header key '" + key + "'");
      }
      continue;
    }

    // products section: i j -> k1:c1 k2:c2 ...
    std::string jtok, arrow;
    if (!(line >> jtok >> arrow)) throw ParseError(lineno, "product line needs 'i j ->'");
    if (arrow != "->") throw ParseError(lineno, "expected '->', got '" + arrow + "'");
    Int iv = parse_int(key), jv = parse_int(jtok);
    if (iv < 1 || iv > Int(pres.dim) || jv < 1 || jv > Int(pres.dim))
      throw ParseError(lineno, "basis index out of range");
    std::size_t i = static_cast<std::size_t>(iv) - 1, j = static_cast<std::size_t>(jv) - 1;
    if (seen[i][j]) throw ParseError(lineno, "duplicate product line for this pair");
    seen[i][j] = true;
    if (pres.products.empty()) pres.products.resize(pres.dim * pres.dim);
    std::string term;
    while (line >> term) {
      auto colon = term.find(':');
      if (colon == std::string::npos)
        throw ParseError(lineno, "product term must be index:coefficient");
      Int kv = parse_int(term.substr(0, colon));
      if (kv < 1 || kv > Int(pres.dim)) throw ParseError(lineno, "target index out of range");
      Int c = parse_int(term.substr(colon + 1));
      check_coeff(c);
      for (const auto& [prev, _] : pres.products[i * pres.dim + j])
        if (prev == static_cast<std::size_t>(kv) - 1)
          throw ParseError(lineno, "duplicate target index in product line");
      pres.products[i * pres.dim + j].emplace_back(static_cast<std::size_t>(kv) - 1, c);
    }
  }

  if (!saw_dim) throw ParseError(lineno, "missing dim");
  if (!saw_modulus) throw ParseError(lineno, "missing modulus");
  if (!in_products) throw ParseError(lineno, "missing products section");
  if (pres.products.empty()) pres.products.resize(pres.dim * pres.dim);
  if (!pres.labels.empty() && pres.labels.size() != pres.dim)
    throw ParseError(lineno, "label count does not match dim");
  if (pres.unity) {
    if (pres.unity->size() != pres.dim) throw ParseError(lineno, "unity length does not match dim");
    for (const Int& c : *pres.unity) check_coeff(c);
  }
  return pres;
}

inline void write_ring_presentation(std::ostream& out, const Ring& ring) {
  out << "name " << ring.name() << "\n";
  out << "dim " << ring.dim() << "\n";
  out << "modulus " << ring.modulus().str() << "\n";
  out << "labels";
  for (const auto& l : ring.labels()) out << " " << l;
  out << "\n";
  if (ring.unity()) {
    out << "unity";
    for (const Int& c : *ring.unity()) out << " " << c.str();
    out << "\n";
  }
  out << "products\n";
  for (std::size_t i = 0; i < ring.dim(); ++i) {
    for (std::size_t j = 0; j < ring.dim(); ++j) {
      const ProductRow& row = ring.table(i, j);
      if (row.empty()) continue;
      out << (i + 1) << " " << (j + 1) << " ->";
      for (const auto& [k, c] : row) out << " " << (k + 1) << ":" << c.str();
      out << "\n";
    }
  }
}

}  // namespace ncomm
