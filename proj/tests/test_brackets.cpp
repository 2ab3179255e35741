#include <catch2/catch_amalgamated.hpp>

#include "ncomm/algebra.hpp"
#include "ncomm/brackets.hpp"
#include "ncomm/builtin.hpp"
#include "ncomm/catalog.hpp"
#include "ncomm/random.hpp"
#include "oracles.hpp"

using namespace ncomm;

TEST_CASE("basic bracket values", "[brackets]") {
  Ring r = matrix_ring(2, 2, 0, "mat2");
  RingElement a(r, Vec{1, 2, 0, 3});
  REQUIRE(bracket_n({a, a}).is_zero());
  RingElement b = basis_element(r, 2);
  REQUIRE(bracket_n({a, b, a}).is_zero());  // palindrome

  // [2e12, 2e22] = 4e12
  RingElement e12 = basis_element(r, 1), e22 = basis_element(r, 3);
  REQUIRE(bracket_n({e12, e22}).coords() == Vec{0, 2, 0, 0});

  REQUIRE_THROWS_AS(bracket_n({a, b}, 0), ZeroBeta);
  Ring q = matrix_ring(2, 2, 0);
  REQUIRE_THROWS_AS(bracket_n({a, basis_element(q, 0)}), RingMismatch);
  REQUIRE_THROWS_AS(bracket_n({a}), BadParameter);
}

TEST_CASE("brackets are multilinear in every slot", "[brackets]") {
  for (const Ring& r : {matrix_ring(2, 1, 3), strict_upper_ring(4, 2), matrix_ring(2, 2, 0)}) {
    Rng rng(fnv1a(r.name()) ^ 77);
    for (int n : {2, 3, 4}) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec> elems;
        for (int i = 0; i < n; ++i) elems.push_back(rng.element(r, 5));
        std::size_t slot = rng.below(static_cast<std::size_t>(n));
        Vec extra = rng.element(r, 5);
        Int beta = rng.beta_scalar(r.modulus(), 5);

        std::vector<Vec> shifted = elems;
        shifted[slot] = r.add(elems[slot], extra);
        Vec lhs = bracket_vec(r, shifted, beta);
        std::vector<Vec> other = elems;
        other[slot] = extra;
        Vec rhs = r.add(bracket_vec(r, elems, beta), bracket_vec(r, other, beta));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("reversing the slots negates the bracket", "[brackets]") {
  Ring r = matrix_ring(2, 1, 5);
  Rng rng(123);
  for (int n : {2, 3, 4, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vec> elems;
      for (int i = 0; i < n; ++i) elems.push_back(rng.element(r, 5));
      std::vector<Vec> reversed(elems.rbegin(), elems.rend());
      REQUIRE(bracket_vec(r, reversed) == r.scale(-1, bracket_vec(r, elems)));
    }
  }
}

TEST_CASE("bracket subgroups of commutative rings vanish", "[brackets]") {
  Ring gf2 = matrix_ring(1, 1, 2, "gf2");
  Ring r = direct_sum_ring(gf2, gf2);
  Subgroup whole = Subgroup::whole(r);
  for (std::size_t n : {2u, 3u, 4u})
    REQUIRE(bracket_subgroup_power(r, whole, n).is_zero());
}

TEST_CASE("strict upper bracket subgroups equal ring powers", "[brackets]") {
  Ring r = strict_upper_ring(4, 2);
  Subgroup whole = Subgroup::whole(r);
  for (std::size_t k : {2u, 3u})
    REQUIRE(bracket_subgroup_power(r, whole, k) == power_subgroup(r, k));
  REQUIRE(power_subgroup(r, 4).is_zero());
}

TEST_CASE("power and product subgroup basics", "[brackets]") {
  Ring r = matrix_ring(2, 1, 2);
  REQUIRE(power_subgroup(r, 3) == Subgroup::whole(r));  // unital
  REQUIRE(product_subgroup(r, Subgroup::whole(r), Subgroup::zero(r)).is_zero());
}

TEST_CASE("tuple budgets hold", "[brackets]") {
  Ring r = matrix_ring(2, 1, 2);
  Budgets tiny;
  tiny.tuples = 3;
  Subgroup whole = Subgroup::whole(r);
  REQUIRE_THROWS_AS(bracket_subgroup(r, {whole, whole}, 1, tiny), BudgetExceeded);
}

TEST_CASE("ideal generation", "[brackets]") {
  Ring r = matrix_ring(2, 1, 2, "m2gf2");
  REQUIRE(ideal_generated(r, Subgroup::zero(r)).is_zero());
  REQUIRE(ideal_generated(r, Subgroup::whole(r)) == Subgroup::whole(r));

  Ring span4 = idempotent_span_ring(4, 2);
  Subgroup b2 = bracket_subgroup_power(span4, Subgroup::whole(span4), 2);
  Subgroup ideal = ideal_generated(span4, b2);
  std::vector<Vec> pair_sums;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      pair_sums.push_back(span4.add(span4.basis_vec(i), span4.basis_vec(j)));
  REQUIRE(ideal == Subgroup::span(span4, pair_sums));
  REQUIRE(ideal.rank() == 3);

  // I(L) = L + LR for a Lie ideal
  for (const Ring& ring : {matrix_ring(2, 1, 3), strict_upper_ring(4, 2)}) {
    Subgroup lie = bracket_subgroup_power(ring, Subgroup::whole(ring), 2);
    REQUIRE(is_lie_ideal(ring, lie).ok);
    REQUIRE(ideal_generated(ring, lie) ==
            sum(lie, product_subgroup(ring, lie, Subgroup::whole(ring))));
  }

  // minimality: every sampled ideal containing T contains I(T)
  Rng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    Subgroup t = Subgroup::span(r, {rng.element(r, 1)});
    Subgroup it = ideal_generated(r, t);
    REQUIRE(is_ideal(r, it).ok);
    REQUIRE(it.contains(t));
    Subgroup bigger = ideal_generated(r, sum(t, Subgroup::span(r, {rng.element(r, 1)})));
    REQUIRE(bigger.contains(it));
  }
}

TEST_CASE("stopping the saturation one round early breaks the ideal", "[brackets]") {
  Ring r = matrix_ring(2, 1, 2);
  Subgroup seed = Subgroup::span(r, {r.basis_vec(1)});  // span{e12}
  auto expand_once = [&](const Subgroup& s) {
    std::vector<Vec> rows = s.rows();
    for (const Vec& x : s.rows())
      for (std::size_t i = 0; i < r.dim(); ++i) {
        rows.push_back(r.mul(r.basis_vec(i), x));
        rows.push_back(r.mul(x, r.basis_vec(i)));
      }
    return Subgroup::span(r, rows);
  };
  Subgroup one_round = expand_once(seed);
  Subgroup two_rounds = expand_once(one_round);
  REQUIRE(!is_ideal(r, one_round).ok);
  REQUIRE(is_ideal(r, two_rounds).ok);
  REQUIRE(two_rounds == ideal_generated(r, seed));
}

TEST_CASE("one-sided ideal checks produce witnesses", "[brackets]") {
  Ring r = matrix_ring(2, 2, 0, "mat2");
  REQUIRE(is_ideal(r, Subgroup::whole(r)).ok);
  Subgroup b2 = bracket_subgroup_power(r, Subgroup::whole(r), 2);
  CheckResult right = is_ideal(r, b2, Side::right);
  REQUIRE(!right.ok);
  REQUIRE(right.witness.has_value());
  // every commutator has trace zero; the witness must not
  for (const Vec& row : b2.rows()) REQUIRE(oracles::trace_coordinate(row, 2) == 0);
  REQUIRE(oracles::trace_coordinate(*right.witness, 2) != 0);
  // the specific escape (4e12)(2e21) = 8e11
  Vec esc = r.mul(Vec{0, 2, 0, 0}, r.basis_vec(2));
  REQUIRE(esc == Vec{4, 0, 0, 0});
  REQUIRE(!b2.member(esc));
}

TEST_CASE("generalized lie ideal predicate", "[brackets]") {
  Ring r = matrix_ring(2, 1, 3, "m2gf3");
  Subgroup whole = Subgroup::whole(r);
  for (int n : {2, 3}) {
    for (int pos = 0; pos < n; ++pos) {
      BracketSpec spec(n, pos, 1, r.modulus());
      REQUIRE(is_n_gen_lie_ideal(r, whole, spec).ok);  // ideals absorb brackets
      Subgroup bn = bracket_subgroup_power(r, whole, static_cast<std::size_t>(n));
      REQUIRE(is_n_gen_lie_ideal(r, bn, spec).ok);
    }
  }

  Ring gf2 = matrix_ring(2, 1, 2);
  Subgroup diag = Subgroup::span(gf2, {gf2.basis_vec(0)});  // span{e11}
  CheckResult check = is_n_gen_lie_ideal(gf2, diag, BracketSpec(2, 0, 1, gf2.modulus()));
  REQUIRE(!check.ok);
  REQUIRE(check.witness.has_value());
  REQUIRE(!diag.member(*check.witness));
}

TEST_CASE("generalized lie closure", "[brackets]") {
  Ring r = matrix_ring(2, 1, 3, "m2gf3");
  BracketSpec spec(3, 1, 1, r.modulus());
  REQUIRE(n_gen_lie_closure(r, Subgroup::zero(r), spec).is_zero());
  Subgroup seed = Subgroup::span(r, {r.basis_vec(1)});
  REQUIRE(n_gen_lie_closure(r, seed, spec) == Subgroup::whole(r));

  Subgroup ideal = ideal_generated(r, seed);
  REQUIRE(n_gen_lie_closure(r, ideal, spec).contains(ideal));

  REQUIRE_NOTHROW(BracketSpec(3, 1, 3, 0));                  // beta = 3 over Z is fine...
  REQUIRE_THROWS_AS(BracketSpec(3, 1, 3, 6), BadParameter);  // ...but not a unit mod 6
  REQUIRE_THROWS_AS(BracketSpec(3, 4, 1, 0), BadParameter);
  REQUIRE_THROWS_AS(BracketSpec(1, 0, 1, 0), BadParameter);
  REQUIRE_THROWS_AS(BracketSpec(3, 1, 0, 0), ZeroBeta);
}

TEST_CASE("squares subgroup matches enumeration", "[brackets]") {
  Ring su2 = strict_upper_ring(2, 2);
  REQUIRE(squares_subgroup(su2).is_zero());
  Ring gf2 = matrix_ring(1, 1, 2);
  REQUIRE(squares_subgroup(gf2) == Subgroup::whole(gf2));
  Ring m2gf3 = matrix_ring(2, 1, 3);
  REQUIRE(squares_subgroup(m2gf3) == Subgroup::whole(m2gf3));
  for (const Ring& r : {matrix_ring(2, 1, 2), strict_upper_ring(3, 2), upper_triangular_ring(2, 2),
                        idempotent_span_ring(3, 2)}) {
    REQUIRE(squares_subgroup(r) == oracles::squares_by_enumeration(r));
  }
}

TEST_CASE("power values via the simplex grid", "[brackets]") {
  Ring r = matrix_ring(2, 1, 2, "m2gf2");
  REQUIRE(power_values_subgroup(r, 1) == Subgroup::whole(r));
  REQUIRE(power_values_subgroup(r, 2) == oracles::power_values_by_enumeration(r, 2));
  Ring su3 = strict_upper_ring(3, 2);
  REQUIRE(power_values_subgroup(su3, 3).is_zero());
  Budgets tiny;
  tiny.grid = 2;
  REQUIRE_THROWS_AS(power_values_subgroup(r, 3, tiny), BudgetExceeded);
}

TEST_CASE("herstein kernel", "[brackets]") {
  Ring gf2 = matrix_ring(1, 1, 2, "gf2");
  Ring comm = direct_sum_ring(gf2, gf2);
  REQUIRE(herstein_kernel(comm, Subgroup::whole(comm), 3).is_zero());

  Ring r = matrix_ring(2, 1, 2, "m2gf2");
  Subgroup k = herstein_kernel(r, Subgroup::whole(r), 3);
  REQUIRE(!k.is_zero());
  REQUIRE(is_ideal(r, k).ok);
  REQUIRE(bracket_subgroup_power(r, Subgroup::whole(r), 3).contains(k));
  REQUIRE(!bracket_subgroup(r, {k, k}).is_zero());

  // the coefficient-simplex path must agree with plain enumeration
  Budgets no_enum;
  no_enum.enumeration = 1;
  REQUIRE(herstein_kernel(r, Subgroup::whole(r), 3, no_enum) == k);
  Ring m2gf3 = matrix_ring(2, 1, 3);
  REQUIRE(herstein_kernel(m2gf3, Subgroup::whole(m2gf3), 4, no_enum) ==
          herstein_kernel(m2gf3, Subgroup::whole(m2gf3), 4));
}
