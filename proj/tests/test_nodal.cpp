#include <doctest.h>

#include "hamnodal/catalog.hpp"
#include "hamnodal/nodal.hpp"
#include "hamnodal/spectra.hpp"
#include "testutil.hpp"

using namespace hamnodal;

TEST_CASE("strong domains of the small catalog functions") {
  const auto r1 = strong_domains(phi(1));
  CHECK(r1.snd == 2);
  REQUIRE(r1.positive_strong.size() == 1);
  REQUIRE(r1.negative_strong.size() == 1);
  CHECK(r1.positive_strong[0].to_indices() == std::vector<VertexIndex>{0});
  CHECK(r1.negative_strong[0].to_indices() == std::vector<VertexIndex>{3});

  CHECK(strong_domains(u2_33()).snd == 2);

  const auto [f23, f33] = figure5_functions();
  const auto r23 = strong_domains(f23);
  CHECK(r23.snd == 3);
  REQUIRE(r23.positive_strong.size() == 2);
  CHECK(r23.positive_strong[0].to_indices() == std::vector<VertexIndex>{0});
  CHECK(r23.positive_strong[1].to_indices() == std::vector<VertexIndex>{4, 5, 7});
  CHECK(r23.negative_strong.size() == 1);
  CHECK(strong_domains(f33).snd == 4);
}

TEST_CASE("weak domains pass through zero vertices") {
  CHECK(weak_domains(phi(1)).wnd == 2);

  const GridFunction f = lambda1_snd2(GraphParams(1, 3));
  const auto rep = weak_domains(f);
  CHECK(rep.wnd == 2);
  REQUIRE(rep.positive_weak.size() == 1);
  REQUIRE(rep.negative_weak.size() == 1);
  CHECK(rep.positive_weak[0].to_indices() == std::vector<VertexIndex>{0, 2});
  CHECK(rep.negative_weak[0].to_indices() == std::vector<VertexIndex>{1, 2});

  const GridFunction pos = GridFunction::constant(GraphParams(2, 3), Rational(7));
  CHECK(weak_domains(pos).wnd == 1);
  CHECK(strong_domains(pos).snd == 1);
}

TEST_CASE("the zero function has no nodal decomposition") {
  const GridFunction zero = GridFunction::zero(GraphParams(2, 2));
  CHECK_THROWS_AS(strong_domains(zero), ZeroFunction);
  CHECK_THROWS_AS(weak_domains(zero), ZeroFunction);
  CHECK_THROWS_AS(nodal_report(zero), ZeroFunction);
}

TEST_CASE("check_courant computes positions and slack") {
  const auto r = check_courant(phi(1), 1);
  CHECK(r.k == 2);
  CHECK(r.r == 2);
  CHECK(r.snd == 2);
  CHECK(r.wnd == 2);
  CHECK(r.snd_bound_ok);
  CHECK(r.wnd_bound_ok);
  CHECK(r.snd_slack == 1);
  CHECK(r.wnd_slack == 0);

  const auto [f23, f33] = figure5_functions();
  const auto r23 = check_courant(f23, 2);
  CHECK(r23.k == 6);
  CHECK(r23.r == 4);
  CHECK(r23.snd == 3);
  CHECK(r23.snd_bound_ok);
  CHECK(r23.wnd_bound_ok);

  CHECK_THROWS_AS(check_courant(phi(1), 2), NotAnEigenfunction);
}

TEST_CASE("eigenfunctions with positive eigenvalue take both signs") {
  std::vector<GridFunction> functions = {phi(1), phi(2), psi(1), psi(2), psi(3),
                                         u2_33(), construct_q2_odd(1), construct_q3(1),
                                         construct_q_ge4(GraphParams(2, 4))};
  const auto fig = figure5_functions();
  functions.push_back(fig.first);
  functions.push_back(fig.second);
  for (const auto& f : functions) {
    CHECK(!positive_support(f).empty());
    CHECK(!negative_support(f).empty());
    CHECK(strong_domains(f).snd >= 2);
  }
}

TEST_CASE("counts are invariant under scaling, translation and negation") {
  std::vector<GridFunction> functions = {phi(1), u2_33(), construct_q2_odd(1),
                                         figure5_functions().first};
  testutil::Rng rng(5);
  functions.push_back(rng.function(GraphParams(2, 3)));
  for (const auto& f : functions) {
    if (f.is_zero()) continue;
    const auto base = nodal_report(f);

    CHECK(nodal_report(f.scaled(Rational(7, 3))).snd == base.snd);
    CHECK(nodal_report(f.scaled(Rational(7, 3))).wnd == base.wnd);

    for (int t = 1; t <= f.params().n(); ++t) {
      const auto shifted = nodal_report(translate_function(f, t));
      CHECK(shifted.snd == base.snd);
      CHECK(shifted.wnd == base.wnd);
    }

    const auto negated = nodal_report(-f);
    CHECK(negated.snd == base.snd);
    CHECK(negated.wnd == base.wnd);
    CHECK(negated.positive_strong.size() == base.negative_strong.size());
    CHECK(negated.negative_strong.size() == base.positive_strong.size());
  }
}

TEST_CASE("weak counts never exceed strong counts") {
  std::vector<GridFunction> functions = {phi(1), phi(2), u2_33(), construct_q3(1),
                                         figure5_functions().second,
                                         lambda1_snd2(GraphParams(2, 4))};
  testutil::Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    functions.push_back(rng.function(GraphParams(2, 3)));
    functions.push_back(rng.function(GraphParams(3, 2)));
  }
  for (const auto& f : functions) {
    if (f.is_zero()) continue;
    const auto rep = nodal_report(f);
    CHECK(rep.wnd <= rep.snd);
    CHECK(rep.snd == static_cast<std::int64_t>(rep.positive_strong.size() +
                                               rep.negative_strong.size()));
    CHECK(rep.wnd == static_cast<std::int64_t>(rep.positive_weak.size() +
                                               rep.negative_weak.size()));
    // Every weak domain contains a strictly signed vertex.
    for (const auto& comp : rep.positive_weak) CHECK(comp.intersects(positive_support(f)));
    for (const auto& comp : rep.negative_weak) CHECK(comp.intersects(negative_support(f)));
  }
}

TEST_CASE("strong and weak decompositions coincide without zero vertices") {
  std::vector<GridFunction> functions = {figure5_functions().first,
                                         figure5_functions().second};
  testutil::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    GraphParams p(2, 3);
    GridFunction f = GridFunction::zero(p);
    for (VertexIndex x = 0; x < p.vertex_count(); ++x) {
      const std::int64_t v = rng.between(-5, 5);
      f.set(x, Rational(v >= 0 ? v + 1 : v));
    }
    functions.push_back(std::move(f));
  }
  for (const auto& f : functions) {
    CHECK(nonzero_support(f).size() == f.size());
    const auto rep = nodal_report(f);
    CHECK(rep.snd == rep.wnd);
    REQUIRE(rep.positive_strong.size() == rep.positive_weak.size());
    for (std::size_t i = 0; i < rep.positive_strong.size(); ++i) {
      CHECK(rep.positive_strong[i] == rep.positive_weak[i]);
    }
  }
}

TEST_CASE("courant bounds hold across the catalog") {
  struct Entry {
    GridFunction f;
    int i;
  };
  std::vector<Entry> entries = {{phi(1), 1},
                                {psi(3), 2},
                                {u2_33(), 2},
                                {lambda1_snd2(GraphParams(3, 3)), 1},
                                {construct_q2_odd(1), 3},
                                {construct_q2_even(1), 4},
                                {construct_q3(1), 3},
                                {construct_q_ge4(GraphParams(2, 5)), 2},
                                {figure5_functions().first, 2},
                                {figure5_functions().second, 3}};
  for (const auto& [f, i] : entries) {
    const auto rep = check_courant(f, i);
    CHECK(rep.snd_bound_ok);
    CHECK(rep.wnd_bound_ok);
  }
}
