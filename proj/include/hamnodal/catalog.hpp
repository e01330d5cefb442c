#ifndef HAMNODAL_CATALOG_HPP
#define HAMNODAL_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamnodal/core.hpp"

namespace hamnodal {

enum class RouteKind { Lambda1, U233, Q2Odd, Q2Even, Q3, QGe4, ExtendBy };

struct RouteStep {
  RouteKind kind;
  int arg = 0;  // k for Q2Odd/Q2Even, m for Q3, extra for ExtendBy
  std::string to_string() const;
};

// How a certified function was built: target (n,q,i) plus the applied steps.
struct ConstructionRecipe {
  int n = 0;
  int q = 0;
  int i = 0;
  std::vector<RouteStep> route;
  std::string to_string() const;
};

// A function together with counts recomputed from it, never trusted from the
// recipe.
struct CertifiedFunction {
  GridFunction f;
  int eigen_index;
  std::int64_t snd;
  std::int64_t wnd;
  ConstructionRecipe recipe;
};

struct ConstructOutcome {
  std::optional<CertifiedFunction> value;
  std::string unsupported_reason;
  bool supported() const { return value.has_value(); }
};

// phi_1 = +1 at (0,0), -1 at (1,1); phi_2 = +1 at (0,1), -1 at (1,0).
// Both are 2-eigenfunctions of H(2,2).
GridFunction phi(int j);

// The three +-1/0 functions on H(3,3); each is a 6-eigenfunction.
GridFunction psi(int j);

// (delta_0 - delta_1 on coordinate 1) extended by constants: a q-eigenfunction
// of H(n,q) with SND = 2.
GridFunction lambda1_snd2(const GraphParams& params);

// psi_1 + psi_2 + psi_3: a 6-eigenfunction of H(3,3) with SND = 2.
GridFunction u2_33();

// g (x) phi_1 + h (x) phi_2 on H(3k+2,2), where g and h are the associated
// functions of the type-A partition of H(3k,2) and its e_1-translate. A
// 2(2k+1)-eigenfunction with SND = 2.
GridFunction construct_q2_odd(int k);

// f (x) phi_1 + f' (x) phi_2 on H(3k+4,2) with f = construct_q2_odd(k) and
// f'(x) = f(x + e_{3k+2}). A 2(2k+2)-eigenfunction with SND = 2.
GridFunction construct_q2_even(int k);

// g (x) psi_1 + h (x) psi_2 + h (x) psi_3 on H(m+3,3), with g and h from the
// type-B partition of H(m,3) and its e_1-translate. A 3(m+2)-eigenfunction
// with SND = 2.
GridFunction construct_q3(int m);

// Associated function of the level-band partition: positive on
// Gamma_0 u Gamma_1. A q*n-eigenfunction of H(n,q), q >= 4, with SND = 2.
GridFunction construct_q_ge4(const GraphParams& params);

// Dispatcher: returns a certified SND=2 eigenfunction of H(n,q) at eigenvalue
// q*i wherever one of the catalog routes applies, and an Unsupported outcome
// (with the reason) on the open cases and outside the proven ranges.
ConstructOutcome construct_snd2(int n, int q, int i);

// The two hard-coded functions on H(2,3) and H(3,3) with 3 and 4 strong nodal
// domains; both verified against the eigenfunction equation at load.
std::pair<GridFunction, GridFunction> figure5_functions();

}  // namespace hamnodal

#endif
