#include "hamnodal/catalog.hpp"

#include <array>
#include <stdexcept>

#include "hamnodal/equitable.hpp"
#include "hamnodal/nodal.hpp"
#include "hamnodal/spectra.hpp"

namespace hamnodal {

std::string RouteStep::to_string() const {
  switch (kind) {
    case RouteKind::Lambda1: return "lambda1";
    case RouteKind::U233: return "u2_33";
    case RouteKind::Q2Odd: return "q2_odd(k=" + std::to_string(arg) + ")";
    case RouteKind::Q2Even: return "q2_even(k=" + std::to_string(arg) + ")";
    case RouteKind::Q3: return "q3(m=" + std::to_string(arg) + ")";
    case RouteKind::QGe4: return "q_ge4";
    case RouteKind::ExtendBy: return "extend_by(" + std::to_string(arg) + ")";
  }
  return "?";
}

std::string ConstructionRecipe::to_string() const {
  std::string out = "H(" + std::to_string(n) + "," + std::to_string(q) +
                    ") i=" + std::to_string(i) + ":";
  for (const auto& step : route) out += " " + step.to_string();
  return out;
}

namespace {

GridFunction from_supports(const GraphParams& params,
                           std::initializer_list<std::initializer_list<int>> plus,
                           std::initializer_list<std::initializer_list<int>> minus) {
  GridFunction f = GridFunction::zero(params);
  for (const auto& coords : plus) {
    f.set(encode(std::vector<int>(coords), params).index, Rational(1));
  }
  for (const auto& coords : minus) {
    f.set(encode(std::vector<int>(coords), params).index, Rational(-1));
  }
  return f;
}

}  // namespace

GridFunction phi(int j) {
  GraphParams params(2, 2);
  switch (j) {
    case 1: return from_supports(params, {{0, 0}}, {{1, 1}});
    case 2: return from_supports(params, {{0, 1}}, {{1, 0}});
    default: throw IndexOutOfRange("phi index must be 1 or 2");
  }
}

GridFunction psi(int j) {
  GraphParams params(3, 3);
  switch (j) {
    case 1:
      return from_supports(params, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}},
                           {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    case 2:
      return from_supports(params, {{1, 0, 0}, {2, 1, 1}, {0, 2, 2}},
                           {{2, 2, 0}, {0, 0, 1}, {1, 1, 2}});
    case 3:
      return from_supports(params, {{1, 1, 0}, {2, 2, 1}, {0, 0, 2}},
                           {{2, 0, 0}, {0, 1, 1}, {1, 2, 2}});
    default: throw IndexOutOfRange("psi index must be 1, 2 or 3");
  }
}

GridFunction lambda1_snd2(const GraphParams& params) {
  GridFunction f = GridFunction::zero(params);
  for (VertexIndex x = 0; x < params.vertex_count(); ++x) {
    const int d = params.digit(x, 1);
    if (d == 0) f.set(x, Rational(1));
    else if (d == 1) f.set(x, Rational(-1));
  }
  return f;
}

GridFunction u2_33() { return psi(1) + psi(2) + psi(3); }

GridFunction construct_q2_odd(int k) {
  if (k < 1) throw Error("k must be a positive integer");
  const EquitablePartition2 p = type_a_partition(k);
  const EquitablePartition2 pt = translate_partition(p, 1);
  const GridFunction g = associated_function(p);
  const GridFunction h = associated_function(pt);
  return tensor_product(g, phi(1)) + tensor_product(h, phi(2));
}

GridFunction construct_q2_even(int k) {
  const GridFunction f = construct_q2_odd(k);
  const GridFunction ft = translate_function(f, 3 * k + 2);
  return tensor_product(f, phi(1)) + tensor_product(ft, phi(2));
}

GridFunction construct_q3(int m) {
  if (m < 1) throw Error("m must be a positive integer");
  const EquitablePartition2 p = type_b_partition(GraphParams(m, 3));
  const EquitablePartition2 pt = translate_partition(p, 1);
  const GridFunction g = associated_function(p);
  const GridFunction h = associated_function(pt);
  return tensor_product(g, psi(1)) + tensor_product(h, psi(2)) +
         tensor_product(h, psi(3));
}

GridFunction construct_q_ge4(const GraphParams& params) {
  return associated_function(level_band_partition(params));
}

namespace {

CertifiedFunction certify(GridFunction f, ConstructionRecipe recipe) {
  const Rational lambda(eigenvalue(f.params(), recipe.i));
  if (!is_eigenfunction(f, lambda)) {
    throw std::logic_error("catalog route produced a non-eigenfunction: " +
                           recipe.to_string());
  }
  const NodalReport report = nodal_report(f);
  if (report.snd != 2) {
    throw std::logic_error("catalog route produced SND=" +
                           std::to_string(report.snd) + ": " + recipe.to_string());
  }
  return CertifiedFunction{std::move(f), recipe.i, report.snd, report.wnd,
                           std::move(recipe)};
}

ConstructOutcome unsupported(std::string reason) {
  return ConstructOutcome{std::nullopt, std::move(reason)};
}

}  // namespace

ConstructOutcome construct_snd2(int n, int q, int i) {
  if (q < 2) throw Error("q must be at least 2");
  if (n < 1 || i < 1 || i > n) {
    throw IndexOutOfRange("require 1 <= i <= n");
  }
  GraphParams target(n, q);

  ConstructionRecipe recipe;
  recipe.n = n;
  recipe.q = q;
  recipe.i = i;

  const auto extend = [&](GridFunction f, int built_on) {
    if (n > built_on) {
      recipe.route.push_back({RouteKind::ExtendBy, n - built_on});
      f = extend_by_constant(f, n - built_on);
    }
    return certify(std::move(f), recipe);
  };

  const auto via_lambda1 = [&]() {
    recipe.route.push_back({RouteKind::Lambda1, 0});
    return ConstructOutcome{certify(lambda1_snd2(target), recipe), ""};
  };

  if (q == 2) {
    if (i == 1) return via_lambda1();
    if (i % 2 == 1) {
      const int k = (i - 1) / 2;
      if (n < 3 * k + 2) {
        return unsupported("out of proven range: odd i=" + std::to_string(i) +
                           " with q=2 needs n >= " + std::to_string(3 * k + 2));
      }
      recipe.route.push_back({RouteKind::Q2Odd, k});
      return ConstructOutcome{extend(construct_q2_odd(k), 3 * k + 2), ""};
    }
    const int k = (i - 2) / 2;
    if (k < 1) {
      return unsupported("out of proven range: no SND=2 construction for q=2, i=2");
    }
    if (n < 3 * k + 4) {
      return unsupported("out of proven range: even i=" + std::to_string(i) +
                         " with q=2 needs n >= " + std::to_string(3 * k + 4));
    }
    recipe.route.push_back({RouteKind::Q2Even, k});
    return ConstructOutcome{extend(construct_q2_even(k), 3 * k + 4), ""};
  }

  if (q == 3) {
    if (i == 1) return via_lambda1();
    if (i == n) {
      return unsupported("open case q=3, i=n");
    }
    if (i == 2) {
      // i < n here, so n >= 3.
      recipe.route.push_back({RouteKind::U233, 0});
      return ConstructOutcome{extend(u2_33(), 3), ""};
    }
    const int m = i - 2;
    recipe.route.push_back({RouteKind::Q3, m});
    return ConstructOutcome{extend(construct_q3(m), m + 3), ""};
  }

  // q >= 4: build at n = i and extend.
  recipe.route.push_back({RouteKind::QGe4, 0});
  return ConstructOutcome{extend(construct_q_ge4(GraphParams(i, q)), i), ""};
}

std::pair<GridFunction, GridFunction> figure5_functions() {
  GraphParams p23(2, 3);
  // Index order x1 + 3*x2.
  const std::array<int, 9> small = {4, -3, -1, -3, 1, 2, -1, 2, -1};
  std::vector<Rational> v23(small.begin(), small.end());
  GridFunction f23(p23, std::move(v23));

  GraphParams p33(3, 3);
  // Index order x1 + 3*x2 + 9*x3.
  const std::array<int, 27> large = {
      -1, -1, 2,  -1, 4,  -3, 2,  -3, 1,    // x3 = 0
      -1, 4,  -3, 4,  4,  -8, -3, -8, 11,   // x3 = 1
      2,  -3, 1,  -3, -8, 11, 1,  11, -12,  // x3 = 2
  };
  std::vector<Rational> v33(large.begin(), large.end());
  GridFunction f33(p33, std::move(v33));

  if (!is_eigenfunction(f23, Rational(6)) || !is_eigenfunction(f33, Rational(9))) {
    throw std::logic_error("figure function transcription failed the eigenfunction check");
  }
  return {std::move(f23), std::move(f33)};
}

}  // namespace hamnodal
