#include <doctest.h>

#include "hamnodal/equitable.hpp"
#include "hamnodal/nodal.hpp"
#include "hamnodal/spectra.hpp"
#include "testutil.hpp"

using namespace hamnodal;

namespace {

VertexIndex index_of(std::initializer_list<int> coords, const GraphParams& params) {
  return encode(std::vector<int>(coords), params).index;
}

void check_quotient(const EquitablePartition2& p, std::int64_t s11, std::int64_t s12,
                    std::int64_t s21, std::int64_t s22) {
  CHECK(p.quotient()[0][0] == s11);
  CHECK(p.quotient()[0][1] == s12);
  CHECK(p.quotient()[1][0] == s21);
  CHECK(p.quotient()[1][1] == s22);
}

void check_edge_count_identity(const EquitablePartition2& p) {
  CHECK(static_cast<std::int64_t>(p.c1().size()) * p.quotient()[0][1] ==
        static_cast<std::int64_t>(p.c2().size()) * p.quotient()[1][0]);
}

}  // namespace

TEST_CASE("the (D1,D2) partition of H(3,2) has quotient (0 3; 1 2)") {
  GraphParams p(3, 2);
  VertexSet d1(p);
  d1.set(index_of({0, 0, 0}, p));
  d1.set(index_of({1, 1, 1}, p));
  const auto partition = verify_equitable(p, d1, d1.complement());
  check_quotient(partition, 0, 3, 1, 2);
  check_edge_count_identity(partition);
}

TEST_CASE("verify_equitable rejects non-partitions and reports witnesses") {
  GraphParams p(2, 2);
  VertexSet c1(p);
  c1.set(0);

  SUBCASE("NotEquitable carries the first offending vertex") {
    try {
      verify_equitable(p, c1, c1.complement());
      FAIL("expected NotEquitable");
    } catch (const NotEquitable& e) {
      CHECK(e.witness == 3);  // (1,1) has no neighbor in C1, (1,0) has one
    }
  }

  SUBCASE("overlap") {
    VertexSet c2 = VertexSet::full(p);
    CHECK_THROWS_AS(verify_equitable(p, c1, c2), NotAPartition);
  }
  SUBCASE("gap") {
    VertexSet c2(p);
    c2.set(1);
    CHECK_THROWS_AS(verify_equitable(p, c1, c2), NotAPartition);
  }
  SUBCASE("empty cell") {
    CHECK_THROWS_AS(verify_equitable(p, VertexSet(p), VertexSet::full(p)), NotAPartition);
  }
}

TEST_CASE("multiplication construction multiplies the quotient matrix") {
  const auto base = type_a_partition(1);
  CHECK(multiplication_construction(base, 1).c1() == base.c1());

  const auto lifted = multiplication_construction(base, 2);
  CHECK(lifted.params().n() == 6);
  check_quotient(lifted, 0, 6, 2, 4);
  CHECK(lifted.c2().size() == 3 * lifted.c1().size());
  check_edge_count_identity(lifted);

  CHECK_THROWS_AS(multiplication_construction(lifted, 7), ScaleGuardExceeded);
  CHECK_THROWS_AS(multiplication_construction(type_b_partition(GraphParams(2, 3)), 2),
                  AlphabetMismatch);
}

TEST_CASE("type A partitions") {
  const auto a1 = type_a_partition(1);
  CHECK(a1.c1().to_indices() == std::vector<VertexIndex>{0, 7});
  check_quotient(a1, 0, 3, 1, 2);
  for (int k = 1; k <= 3; ++k) {
    const auto a = type_a_partition(k);
    CHECK(a.params().n() == 3 * k);
    check_quotient(a, 0, 3 * k, k, 2 * k);
    check_edge_count_identity(a);
    // C2 induces a connected subgraph.
    CHECK(induced_components(a.c2()).size() == 1);
  }
}

TEST_CASE("gamma level sets") {
  GraphParams p23(2, 3);
  const auto g0 = gamma_level(p23, 0);
  CHECK(g0.to_indices() ==
        std::vector<VertexIndex>{index_of({0, 0}, p23), index_of({2, 1}, p23),
                                 index_of({1, 2}, p23)});
  for (const auto& [n, q] : {std::pair{2, 3}, {3, 3}, {2, 5}, {4, 2}}) {
    GraphParams p(n, q);
    for (int a = 0; a < q; ++a) {
      CHECK(gamma_level(p, a).size() == p.vertex_count() / static_cast<VertexIndex>(q));
    }
  }
  GraphParams p14(1, 4);
  CHECK(gamma_level(p14, 2).to_indices() == std::vector<VertexIndex>{2});
  CHECK_THROWS_AS(gamma_level(p14, 4), BadLevel);
  CHECK_THROWS_AS(gamma_level(p14, -1), BadLevel);
}

TEST_CASE("type B partitions") {
  const auto b23 = type_b_partition(GraphParams(2, 3));
  CHECK(b23.c1() == gamma_level(GraphParams(2, 3), 0));
  check_quotient(b23, 0, 4, 2, 2);

  const auto b12 = type_b_partition(GraphParams(1, 2));
  CHECK(b12.c1().to_indices() == std::vector<VertexIndex>{0});
  check_quotient(b12, 0, 1, 1, 0);

  for (int n = 1; n <= 5; ++n) {
    const auto b = type_b_partition(GraphParams(n, 3));
    check_quotient(b, 0, 2 * n, n, n);
    CHECK(b.c2().size() == 2 * b.c1().size());
    check_edge_count_identity(b);
    CHECK(induced_components(b.c2()).size() == 1);
  }
}

TEST_CASE("level band partitions") {
  const auto band14 = level_band_partition(GraphParams(1, 4));
  CHECK(band14.c1().to_indices() == std::vector<VertexIndex>{0, 1});
  check_quotient(band14, 1, 2, 2, 1);

  check_quotient(level_band_partition(GraphParams(2, 4)), 2, 4, 4, 2);
  check_quotient(level_band_partition(GraphParams(2, 5)), 2, 6, 4, 4);
  CHECK_THROWS_AS(level_band_partition(GraphParams(2, 3)), AlphabetTooSmall);
}

TEST_CASE("translation lemma for type A and type B partitions") {
  // Type A, k=1, t=1: C3 = {(1,0,0),(0,1,1)} lies inside C2.
  const auto a1 = type_a_partition(1);
  const auto a1t = translate_partition(a1, 1);
  GraphParams p32(3, 2);
  CHECK(a1t.c1().to_indices() ==
        std::vector<VertexIndex>{index_of({1, 0, 0}, p32), index_of({0, 1, 1}, p32)});

  for (int k = 1; k <= 2; ++k) {
    const auto a = type_a_partition(k);
    for (int t = 1; t <= 3 * k; ++t) {
      const auto at = translate_partition(a, t);
      CHECK(at.quotient() == a.quotient());
      CHECK(a.c1().is_subset_of(at.c2()));       // C1 subset of C4
      CHECK(at.c1().is_subset_of(a.c2()));       // C3 subset of C2
      CHECK(a.c2().intersects(at.c2()));         // C2 meets C4
      CHECK(a.c1() != at.c2());                  // proper inclusions
      CHECK(at.c1() != a.c2());
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const auto b = type_b_partition(GraphParams(n, 3));
    for (int t = 1; t <= n; ++t) {
      const auto bt = translate_partition(b, t);
      CHECK(bt.quotient() == b.quotient());
      CHECK(b.c1().is_subset_of(bt.c2()));
      CHECK(bt.c1().is_subset_of(b.c2()));
      CHECK(b.c2().intersects(bt.c2()));
    }
  }
}

TEST_CASE("adjacent gamma bands induce connected subgraphs") {
  for (const auto& [n, q] : {std::pair{4, 2}, {3, 3}, {2, 5}, {2, 7}, {1, 6}}) {
    GraphParams p(n, q);
    for (int a = 0; a < q; ++a) {
      VertexSet band = gamma_level(p, a);
      gamma_level(p, (a + 1) % q).for_each([&](VertexIndex x) { band.set(x); });
      CHECK(induced_components(band).size() == 1);
    }
  }
}

TEST_CASE("associated functions are eigenfunctions at s12+s21") {
  const auto a1 = type_a_partition(1);
  const GridFunction fa = associated_function(a1);
  CHECK(fa.at(0) == Rational(3));
  CHECK(fa.at(1) == Rational(-1));
  CHECK(is_eigenfunction(fa, Rational(4)));

  const auto b23 = type_b_partition(GraphParams(2, 3));
  const GridFunction fb = associated_function(b23);
  CHECK(fb.at(0) == Rational(4));
  CHECK(fb.at(1) == Rational(-2));
  CHECK(is_eigenfunction(fb, Rational(6)));

  const auto band14 = level_band_partition(GraphParams(1, 4));
  const GridFunction fc = associated_function(band14);
  CHECK(fc.values() == std::vector<Rational>{Rational(2), Rational(2), Rational(-2),
                                             Rational(-2)});
  CHECK(is_eigenfunction(fc, Rational(4)));

  // Sweep: every constructed partition's associated function verifies.
  std::vector<EquitablePartition2> partitions;
  for (int k = 1; k <= 2; ++k) partitions.push_back(type_a_partition(k));
  for (int n = 1; n <= 4; ++n) partitions.push_back(type_b_partition(GraphParams(n, 3)));
  for (int q = 4; q <= 5; ++q) partitions.push_back(level_band_partition(GraphParams(2, q)));
  partitions.push_back(translate_partition(partitions.front(), 2));
  for (const auto& p : partitions) {
    check_edge_count_identity(p);
    const Rational lambda(p.quotient()[0][1] + p.quotient()[1][0]);
    CHECK(is_eigenfunction(associated_function(p), lambda));
  }
}
