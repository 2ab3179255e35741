#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncomm/algebra.hpp"
#include "ncomm/brackets.hpp"
#include "ncomm/random.hpp"
#include "ncomm/ring.hpp"

namespace ncomm {

/// A ring prepared for identity fuzzing; `idem` is the distinguished nonzero
/// idempotent used by the property-# identity (unity when present, otherwise
/// the lexicographically first nonzero idempotent of a small finite ring).
struct FuzzRing {
  Ring ring;
  std::optional<Vec> idem;
};

inline FuzzRing make_fuzz_ring(const Ring& ring, unsigned long long enum_budget = 1u << 20) {
  FuzzRing fr{ring, std::nullopt};
  if (ring.unity()) {
    fr.idem = *ring.unity();
    return fr;
  }
  if (ring.modulus() > 0) {
    Int total = 1;
    bool small = true;
    for (std::size_t i = 0; i < ring.dim() && small; ++i) {
      total *= ring.modulus();
      if (total > Int(enum_budget)) small = false;
    }
    if (small) {
      for (const RingElement& e : idempotents(ring, enum_budget)) {
        if (!e.is_zero()) {
          fr.idem = e.coords();
          break;
        }
      }
    }
  }
  return fr;
}

struct IdentityWitness {
  std::string description;
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

/// One registered element-level identity; run() draws one random sample and
/// returns a witness iff the two sides differ.
struct Identity {
  std::string name;
  std::string summary;
  std::function<bool(const FuzzRing&)> applicable;
  std::function<std::optional<IdentityWitness>(const FuzzRing&, Rng&, int box)> run;
};

namespace detail {

inline std::optional<IdentityWitness> mismatch(const Ring& ring, const std::string& what,
                                               const std::vector<Vec>& inputs, const Vec& lhs,
                                               const Vec& rhs) {
  if (lhs == rhs) return std::nullopt;
  IdentityWitness w;
  w.description = what;
  for (const Vec& v : inputs) w.inputs.push_back(format_element(ring, v));
  w.lhs = format_element(ring, lhs);
  w.rhs = format_element(ring, rhs);
  return w;
}

/// Shared core of the two slot-insertion expansions, Eq-style: for odd n,
///   [a_1..a_n] r = sum_k (-1)^k [.., slot n-k modified ..]   (right_first)
///   r [a_1..a_n] = sum_k (-1)^k [.., slot n-k modified ..]   (left first)
/// where the modification alternates between multiplying r on one side and
/// the other, starting with `right_first` at the last slot.
inline std::optional<IdentityWitness> eq12_check(const Ring& ring, int n, bool right_first,
                                                 Rng& rng, int box) {
  std::vector<Vec> a;
  for (int i = 0; i < n; ++i) a.push_back(rng.element(ring, box));
  Vec r = rng.element(ring, box);
  Vec lhs = right_first ? ring.mul(bracket_vec(ring, a), r) : ring.mul(r, bracket_vec(ring, a));
  Vec rhs = ring.zero_vec();
  for (int k = 0; k < n; ++k) {
    std::vector<Vec> mod = a;
    std::size_t slot = static_cast<std::size_t>(n - 1 - k);
    bool mul_right = (k % 2 == 0) == right_first;
    mod[slot] = mul_right ? ring.mul(a[slot], r) : ring.mul(r, a[slot]);
    Vec term = bracket_vec(ring, mod);
    rhs = (k % 2 == 0) ? ring.add(rhs, term) : ring.sub(rhs, term);
  }
  std::vector<Vec> inputs = a;
  inputs.push_back(r);
  return mismatch(ring, right_first ? "bracket times r expansion" : "r times bracket expansion",
                  inputs, lhs, rhs);
}

}  // namespace detail

/// The registered element identities the fuzzer knows about. Everything is
/// exact; a single mismatch is a hard failure with a printable witness.
inline const std::vector<Identity>& identity_registry() {
  static const std::vector<Identity> registry = [] {
    std::vector<Identity> ids;
    auto any_ring = [](const FuzzRing&) { return true; };

    for (int n : {3, 5}) {
      ids.push_back({"eq1_n" + std::to_string(n),
                     "right multiplication expansion of an odd bracket, n = " + std::to_string(n),
                     any_ring,
                     [n](const FuzzRing& fr, Rng& rng, int box) {
                       return detail::eq12_check(fr.ring, n, true, rng, box);
                     }});
      ids.push_back({"eq2_n" + std::to_string(n),
                     "left multiplication expansion of an odd bracket, n = " + std::to_string(n),
                     any_ring,
                     [n](const FuzzRing& fr, Rng& rng, int box) {
                       return detail::eq12_check(fr.ring, n, false, rng, box);
                     }});
    }

    for (int n : {3, 4, 5}) {
      ids.push_back({"eq3_n" + std::to_string(n),
                     "[x, z^(n-1)] equals the n-bracket with repeated z, n = " + std::to_string(n),
                     any_ring,
                     [n](const FuzzRing& fr, Rng& rng, int box) -> std::optional<IdentityWitness> {
                       const Ring& ring = fr.ring;
                       Vec x = rng.element(ring, box), z = rng.element(ring, box);
                       Vec zp = ring.pow(z, static_cast<unsigned>(n - 1));
                       Vec lhs = ring.sub(ring.mul(x, zp), ring.mul(zp, x));
                       std::vector<Vec> elems{x};
                       for (int i = 0; i < n - 1; ++i) elems.push_back(z);
                       return detail::mismatch(ring, "commutator with a power", {x, z}, lhs,
                                               bracket_vec(ring, elems));
                     }});
      ids.push_back({"eq4_n" + std::to_string(n),
                     "x y z^(n-1) - z^(n-1) y x as an n-bracket, n = " + std::to_string(n),
                     any_ring,
                     [n](const FuzzRing& fr, Rng& rng, int box) -> std::optional<IdentityWitness> {
                       const Ring& ring = fr.ring;
                       Vec x = rng.element(ring, box), y = rng.element(ring, box),
                           z = rng.element(ring, box);
                       Vec zp = ring.pow(z, static_cast<unsigned>(n - 1));
                       Vec lhs = ring.sub(ring.mul(ring.mul(x, y), zp), ring.mul(ring.mul(zp, y), x));
                       std::vector<Vec> elems{x, y};
                       for (int i = 0; i < n - 3; ++i) elems.push_back(z);
                       elems.push_back(ring.pow(z, 2));
                       return detail::mismatch(ring, "three-slot power identity", {x, y, z}, lhs,
                                               bracket_vec(ring, elems));
                     }});
    }

    ids.push_back({"lemma6_2", "y(axb - bxa)z as a sum of three 3-brackets", any_ring,
                   [](const FuzzRing& fr, Rng& rng, int box) -> std::optional<IdentityWitness> {
                     const Ring& ring = fr.ring;
                     Vec a = rng.element(ring, box), b = rng.element(ring, box),
                         x = rng.element(ring, box), y = rng.element(ring, box),
                         z = rng.element(ring, box);
                     Vec axb = ring.mul(ring.mul(a, x), b);
                     Vec bxa = ring.mul(ring.mul(b, x), a);
                     Vec lhs = ring.mul(ring.mul(y, ring.sub(axb, bxa)), z);
                     Vec rhs = bracket_vec(ring, {ring.mul(ring.mul(y, a), x), b, z});
                     rhs = ring.add(rhs, bracket_vec(ring, {ring.mul(ring.mul(z, b), y), a, x}));
                     rhs = ring.add(rhs, bracket_vec(ring, {ring.mul(ring.mul(x, a), z), b, y}));
                     return detail::mismatch(ring, "three 3-bracket expansion", {a, b, x, y, z},
                                             lhs, rhs);
                   }});

    ids.push_back(
        {"beta_lemma6_2", "y(axb - beta bxa)z as three beta-twisted 3-brackets", any_ring,
         [](const FuzzRing& fr, Rng& rng, int box) -> std::optional<IdentityWitness> {
           const Ring& ring = fr.ring;
           Int beta = rng.beta_scalar(ring.modulus(), box);
           Vec a = rng.element(ring, box), b = rng.element(ring, box), x = rng.element(ring, box),
               y = rng.element(ring, box), z = rng.element(ring, box);
           Vec axb = ring.mul(ring.mul(a, x), b);
           Vec bxa = ring.mul(ring.mul(b, x), a);
           Vec lhs = ring.mul(ring.mul(y, ring.sub(axb, ring.scale(beta, bxa))), z);
           Vec rhs = bracket_vec(ring, {ring.mul(ring.mul(y, a), x), b, z}, beta);
           rhs = ring.sub(rhs, bracket_vec(ring, {x, a, ring.mul(ring.mul(z, b), y)}, beta));
           rhs = ring.add(rhs, bracket_vec(ring, {ring.mul(ring.mul(x, a), z), b, y}, beta));
           return detail::mismatch(ring, "beta-twisted 3-bracket expansion", {a, b, x, y, z}, lhs,
                                   rhs);
         }});

    for (int j : {1, 2}) {
      ids.push_back(
          {"prop4_2_j" + std::to_string(j),
           "[x, x^j, y_1..y_{n-1}] collapses to [x^(j+1), y_1..y_{n-1}], j = " + std::to_string(j),
           any_ring,
           [j](const FuzzRing& fr, Rng& rng, int box) -> std::optional<IdentityWitness> {
             const Ring& ring = fr.ring;
             int n = 2 + static_cast<int>(rng.below(3));  // n in {2, 3, 4}
             Vec x = rng.element(ring, box);
             std::vector<Vec> ys;
             for (int i = 0; i < n - 1; ++i) ys.push_back(rng.element(ring, box));
             std::vector<Vec> lhs_elems{x, ring.pow(x, static_cast<unsigned>(j))};
             lhs_elems.insert(lhs_elems.end(), ys.begin(), ys.end());
             std::vector<Vec> rhs_elems{ring.pow(x, static_cast<unsigned>(j + 1))};
             rhs_elems.insert(rhs_elems.end(), ys.begin(), ys.end());
             std::vector<Vec> inputs{x};
             inputs.insert(inputs.end(), ys.begin(), ys.end());
             return detail::mismatch(ring, "power collapse, n = " + std::to_string(n), inputs,
                                     bracket_vec(ring, lhs_elems), bracket_vec(ring, rhs_elems));
           }});
    }

    ids.push_back(
        {"thm3_7", "appending the idempotent g fixes brackets ending in gRg",
         [](const FuzzRing& fr) { return fr.idem.has_value() && !is_zero_vec(*fr.idem); },
         [](const FuzzRing& fr, Rng& rng, int box) -> std::optional<IdentityWitness> {
           const Ring& ring = fr.ring;
           const Vec& g = *fr.idem;
           int k = 2 + static_cast<int>(rng.below(3));  // k in {2, 3, 4}
           std::vector<Vec> elems;
           for (int i = 0; i + 1 < k; ++i) elems.push_back(rng.element(ring, box));
           Vec last = ring.mul(ring.mul(g, rng.element(ring, box)), g);  // into gRg
           elems.push_back(last);
           Vec lhs = bracket_vec(ring, elems);
           std::vector<Vec> ext = elems;
           ext.push_back(g);
           std::vector<Vec> inputs = elems;
           inputs.push_back(g);
           return detail::mismatch(ring, "idempotent extension, k = " + std::to_string(k), inputs,
                                   lhs, bracket_vec(ring, ext));
         }});

    // Engine self-test: a deliberately wrong variant that a healthy fuzzer
    // must be able to refute. Only runs when a config asks for it.
    ids.push_back({"selftest_corrupted", "eq3 with the reversed term dropped; meant to fail",
                   any_ring,
                   [](const FuzzRing& fr, Rng& rng, int box) -> std::optional<IdentityWitness> {
                     const Ring& ring = fr.ring;
                     Vec x = rng.element(ring, box), z = rng.element(ring, box);
                     Vec lhs = ring.mul(x, ring.pow(z, 2));  // "forgot" - z^2 x
                     return detail::mismatch(ring, "deliberately corrupted identity", {x, z}, lhs,
                                             bracket_vec(ring, {x, z, z}));
                   }});

    return ids;
  }();
  return registry;
}

inline const Identity& find_identity(const std::string& name) {
  for (const Identity& id : identity_registry())
    if (id.name == name) return id;
  throw UnknownIdentity("no identity named '" + name + "'");
}

}  // namespace ncomm
