#ifndef HAMNODAL_SPECTRA_HPP
#define HAMNODAL_SPECTRA_HPP

#include <cstdint>
#include <vector>

#include "hamnodal/core.hpp"

namespace hamnodal {

// The Laplacian of H(n,q) has eigenvalues q*i with multiplicity
// binom(n,i)*(q-1)^i, for 0 <= i <= n.
std::int64_t eigenvalue(const GraphParams& params, int i);
std::int64_t multiplicity(const GraphParams& params, int i);

// Position of eigenvalue q*i in the spectrum sorted ascending with
// multiplicity: k is the 1-based rank of its first occurrence, r its
// multiplicity. Feeds the Courant-type bounds WND <= k, SND <= k+r-1.
struct CourantPosition {
  std::int64_t k = 0;
  std::int64_t r = 0;
};

CourantPosition courant_position(const GraphParams& params, int i);

// True iff f is not identically zero and (Lf)(x) = lambda*f(x) exactly at
// every vertex. All-or-nothing; there is no tolerance.
bool is_eigenfunction(const GridFunction& f, const Rational& lambda);

// (f1 (x) f2)(x,y) = f1(x)*f2(y) on H(m+n,q): the first m coordinates index
// f1, the last n coordinates index f2. Eigenvalues add.
GridFunction tensor_product(const GridFunction& f1, const GridFunction& f2);

// g (x) 1 (x) ... (x) 1 with `extra` new coordinates appended at the high
// end. Preserves the eigenvalue index and SND.
GridFunction extend_by_constant(const GridFunction& g, int extra);

// Integer-valued basis of the q*i eigenspace: for each i-subset S of
// coordinates (colex order) and each assignment j: S -> {1,...,q-1} (lex
// order), the product over t in S of (indicator[x_t=0] - indicator[x_t=j(t)]).
std::vector<GridFunction> eigenspace_basis(const GraphParams& params, int i);

// The subsets of {1,...,n} of size k in colex order, each ascending.
std::vector<std::vector<int>> colex_subsets(int n, int k);

}  // namespace hamnodal

#endif
