#include <catch2/catch_amalgamated.hpp>

#include "ncomm/algebra.hpp"
#include "ncomm/builtin.hpp"
#include "ncomm/catalog.hpp"
#include "ncomm/random.hpp"
#include "oracles.hpp"

using namespace ncomm;

TEST_CASE("scaled matrix ring multiplies like s e_ij", "[builtin]") {
  Ring r = matrix_ring(2, 2, 0);
  REQUIRE(r.dim() == 4);
  REQUIRE(!r.unity());
  // (2e12)(2e22) = 2 * (2e12)
  REQUIRE(r.mul(r.basis_vec(1), r.basis_vec(3)) == Vec{0, 2, 0, 0});
  REQUIRE(r.labels()[1] == "2e12");

  Ring gf2 = matrix_ring(2, 1, 2);
  REQUIRE(gf2.unity().has_value());
  REQUIRE(*gf2.unity() == Vec{1, 0, 0, 1});
}

TEST_CASE("strict upper triangular ring", "[builtin]") {
  Ring r = strict_upper_ring(3, 2);
  REQUIRE(r.dim() == 3);  // e12, e13, e23
  REQUIRE(r.mul(r.basis_vec(0), r.basis_vec(2)) == Vec{0, 1, 0});  // e12 e23 = e13
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!(i == 0 && j == 2)) REQUIRE(is_zero_vec(r.mul(r.basis_vec(i), r.basis_vec(j))));
}

TEST_CASE("upper triangular ring is unital", "[builtin]") {
  Ring r = upper_triangular_ring(3, 2, "t3");
  REQUIRE(r.dim() == 6);
  REQUIRE(r.unity().has_value());
}

TEST_CASE("idempotent span ring", "[builtin]") {
  Ring r = idempotent_span_ring(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    REQUIRE(r.mul(r.basis_vec(i), r.basis_vec(i)) == r.basis_vec(i));
  REQUIRE(r.mul(r.basis_vec(0), r.basis_vec(1)) == r.basis_vec(0));  // v1 v2 = v1

  // the ring satisfies the identity [xy, x] = 0
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    Vec x = rng.element(r, 1), y = rng.element(r, 1);
    Vec xy = r.mul(x, y);
    REQUIRE(r.mul(xy, x) == r.mul(x, xy));
  }
}

TEST_CASE("nil truncation ring multiplies by adding numerators", "[builtin]") {
  Ring r = nil_truncation_ring(2, 3, 2);  // numerators 1, 2 per matrix slot
  REQUIRE(r.dim() == 8);
  auto idx = [&](std::size_t i, std::size_t j, std::size_t t) { return (i * 2 + j) * 2 + (t - 1); };
  // v1 e11 * v1 e11 = v2 e11; numerators 1+2 >= 3 vanish
  REQUIRE(r.mul(r.basis_vec(idx(0, 0, 1)), r.basis_vec(idx(0, 0, 1))) ==
          r.basis_vec(idx(0, 0, 2)));
  REQUIRE(is_zero_vec(r.mul(r.basis_vec(idx(0, 0, 1)), r.basis_vec(idx(0, 0, 2)))));
  // matrix positions must chain: v1 e12 * v1 e11 = 0, v1 e12 * v1 e21 = v2 e11
  REQUIRE(is_zero_vec(r.mul(r.basis_vec(idx(0, 1, 1)), r.basis_vec(idx(0, 0, 1)))));
  REQUIRE(r.mul(r.basis_vec(idx(0, 1, 1)), r.basis_vec(idx(1, 0, 1))) ==
          r.basis_vec(idx(0, 0, 2)));
}

TEST_CASE("direct sum multiplies blockwise", "[builtin]") {
  Ring gf2 = matrix_ring(1, 1, 2, "gf2");
  Ring r = direct_sum_ring(gf2, gf2);
  REQUIRE(r.dim() == 2);
  REQUIRE(r.unity().has_value());
  REQUIRE(is_zero_vec(r.mul(r.basis_vec(0), r.basis_vec(1))));
  REQUIRE(center(r) == Subgroup::whole(r));  // commutative
}

TEST_CASE("builtin parameter validation", "[builtin]") {
  REQUIRE_THROWS_AS(matrix_ring(2, 0, 0), BadParameter);
  REQUIRE_THROWS_AS(strict_upper_ring(1, 2), BadParameter);
  REQUIRE_THROWS_AS(nil_truncation_ring(2, 1, 2), BadParameter);
  REQUIRE_THROWS_AS(idempotent_span_ring(3, 4), BadParameter);  // modulus must be prime
  Ring gf2 = matrix_ring(1, 1, 2);
  Ring gf3 = matrix_ring(1, 1, 3);
  REQUIRE_THROWS_AS(direct_sum_ring(gf2, gf3), BadParameter);
}

TEST_CASE("subring generated by the unit and even matrices", "[algebra]") {
  Ring ambient = matrix_ring(2, 1, 0, "m2z");
  std::vector<Vec> gens{Vec{1, 0, 0, 1}, Vec{2, 0, 0, 0}, Vec{0, 2, 0, 0}, Vec{0, 0, 2, 0},
                        Vec{0, 0, 0, 2}};
  SubringResult sub = subring_generated(ambient, gens, "zi_plus_2m2");
  REQUIRE(sub.ring.dim() == 4);
  std::vector<Vec> expected{Vec{1, 0, 0, 1}, Vec{0, 2, 0, 0}, Vec{0, 0, 2, 0}, Vec{0, 0, 0, 2}};
  REQUIRE(sub.basis == expected);
  REQUIRE(sub.ring.unity().has_value());

  // single even diagonal generator closes onto itself: (2e11)^2 = 2 * (2e11)
  SubringResult tiny = subring_generated(ambient, {Vec{2, 0, 0, 0}});
  REQUIRE(tiny.ring.dim() == 1);
  REQUIRE(tiny.basis == std::vector<Vec>{Vec{2, 0, 0, 0}});

  // the full basis regenerates the ambient ring
  std::vector<Vec> all;
  for (std::size_t i = 0; i < 4; ++i) all.push_back(ambient.basis_vec(i));
  SubringResult full = subring_generated(ambient, all);
  REQUIRE(full.ring.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) REQUIRE(full.ring.table(i, j) == ambient.table(i, j));
}

TEST_CASE("subring closure is idempotent and multiplicatively closed", "[algebra]") {
  Ring ambient = matrix_ring(2, 1, 0);
  SubringResult sub = subring_generated(
      ambient, {Vec{1, 0, 0, 1}, Vec{0, 2, 0, 0}});
  Subgroup lattice = Subgroup::span(ambient, sub.basis);
  for (const Vec& a : sub.basis)
    for (const Vec& b : sub.basis) REQUIRE(lattice.member(ambient.mul(a, b)));

  std::vector<Vec> own_basis;
  for (std::size_t i = 0; i < sub.ring.dim(); ++i) own_basis.push_back(sub.ring.basis_vec(i));
  SubringResult again = subring_generated(sub.ring, own_basis);
  REQUIRE(again.basis == own_basis);
}

TEST_CASE("center matches exhaustive enumeration on small rings", "[algebra]") {
  for (const Ring& r : {matrix_ring(2, 1, 2, "m2gf2"), strict_upper_ring(3, 2, "su3"),
                        upper_triangular_ring(2, 2, "t2")}) {
    REQUIRE(center(r) == oracles::center_by_enumeration(r));
  }
  Ring su3 = strict_upper_ring(3, 2);
  REQUIRE(center(su3) == Subgroup::span(su3, {Vec{0, 1, 0}}));  // span{e13}

  Ring m2gf2 = matrix_ring(2, 1, 2);
  REQUIRE(center(m2gf2) == Subgroup::span(m2gf2, {Vec{1, 0, 0, 1}}));

  Ring mat2 = matrix_ring(2, 2, 0);
  REQUIRE(center(mat2) == Subgroup::span(mat2, {Vec{1, 0, 0, 1}}));
}

TEST_CASE("center elements commute with random elements", "[algebra]") {
  for (const Ring& r : default_ring_set()) {
    Subgroup z = center(r);
    Rng rng(fnv1a(r.name()));
    for (int trial = 0; trial < 100; ++trial) {
      Vec x = rng.element(r, 9);
      for (const Vec& c : z.rows()) REQUIRE(r.mul(c, x) == r.mul(x, c));
    }
  }
}

TEST_CASE("idempotent enumeration", "[algebra]") {
  Ring gf2 = matrix_ring(1, 1, 2, "gf2");
  auto ids = idempotents(gf2);
  REQUIRE(ids.size() == 2);  // 0 and 1
  REQUIRE(ids[0].is_zero());

  Ring span2 = idempotent_span_ring(2, 2);
  auto idem2 = idempotents(span2);
  std::vector<Vec> coords;
  for (const auto& e : idem2) coords.push_back(e.coords());
  REQUIRE(std::find(coords.begin(), coords.end(), Vec{1, 0}) != coords.end());
  REQUIRE(std::find(coords.begin(), coords.end(), Vec{0, 1}) != coords.end());
  REQUIRE(std::find(coords.begin(), coords.end(), Vec{0, 0}) != coords.end());

  Ring su2 = strict_upper_ring(2, 2);
  REQUIRE(idempotents(su2).size() == 1);  // only zero in a nilpotent ring

  Ring overz = matrix_ring(2, 2, 0);
  REQUIRE_THROWS_AS(idempotents(overz), InfiniteScalar);
  Ring big = nil_truncation_ring(2, 12, 2);
  REQUIRE_THROWS_AS(idempotents(big), BudgetExceeded);
}

TEST_CASE("subring over Z/m must be free", "[algebra]") {
  Ring r4 = make_ring([] {
    RingPresentation pres;
    pres.dim = 2;
    pres.modulus = 4;
    pres.products.resize(4);  // zero multiplication
    return pres;
  }());
  // span{(2,2)} is Z/2, not presentable over Z/4
  REQUIRE_THROWS_AS(subring_generated(r4, {Vec{2, 2}}), BadParameter);
}

TEST_CASE("catalog builds every ring", "[catalog]") {
  for (const CatalogEntry& e : ring_catalog()) {
    Ring r = e.build();
    REQUIRE(r.dim() >= 1);
    REQUIRE(r.name() == e.name);
  }
  REQUIRE(catalog_ring("ex4_r4_gf2").dim() == 7);
  REQUIRE(catalog_ring("nil2_12_gf2").dim() == 44);
  REQUIRE_THROWS_AS(catalog_ring("nope"), BadParameter);
}
