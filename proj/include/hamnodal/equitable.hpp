#ifndef HAMNODAL_EQUITABLE_HPP
#define HAMNODAL_EQUITABLE_HPP

#include <array>
#include <cstdint>

#include "hamnodal/core.hpp"

namespace hamnodal {

// A verified equitable 2-partition (C1, C2) of H(n,q): every vertex of C_i
// has exactly s_{i,j} neighbors in C_j. Stores the C1 mask only; C2 is its
// complement, so "partition" is structural. Instances always come out of
// verify_equitable.
class EquitablePartition2 {
 public:
  using Quotient = std::array<std::array<std::int64_t, 2>, 2>;

  const GraphParams& params() const { return c1_.params(); }
  const VertexSet& c1() const { return c1_; }
  VertexSet c2() const { return c1_.complement(); }
  const Quotient& quotient() const { return quotient_; }

 private:
  friend EquitablePartition2 verify_equitable(const GraphParams& params,
                                              const VertexSet& c1,
                                              const VertexSet& c2);
  EquitablePartition2(VertexSet c1, const Quotient& s)
      : c1_(std::move(c1)), quotient_(s) {}

  VertexSet c1_;
  Quotient quotient_;
};

// Checks that (c1, c2) is a partition into nonempty cells and that neighbor
// counts are constant per cell; returns the partition with its quotient
// matrix. Throws NotAPartition on overlap/gap/empty cell and NotEquitable
// (with the first offending vertex in index order) otherwise.
EquitablePartition2 verify_equitable(const GraphParams& params,
                                     const VertexSet& c1, const VertexSet& c2);

// Lifts an equitable 2-partition of H(m,2) to H(km,2): x is assigned by the
// parity vector of its k-sized coordinate blocks (block j = coordinates
// (j-1)k+1 .. jk). The quotient matrix gets multiplied by k. Re-verified.
EquitablePartition2 multiplication_construction(const EquitablePartition2& d, int k);

// The multiplication lift of ({000,111}, rest) in H(3,2); quotient matrix
// (0, 3k; k, 2k).
EquitablePartition2 type_a_partition(int k);

// Gamma_a = {x : x_1 + ... + x_n = a (mod q)}; |Gamma_a| = q^(n-1).
VertexSet gamma_level(const GraphParams& params, int a);

// (Gamma_0, Gamma_1 u ... u Gamma_{q-1}); quotient (0, n(q-1); n, n(q-2)).
EquitablePartition2 type_b_partition(const GraphParams& params);

// (Gamma_0 u Gamma_1, Gamma_2 u ... u Gamma_{q-1}) for q >= 4; quotient
// (n, n(q-2); 2n, n(q-3)).
EquitablePartition2 level_band_partition(const GraphParams& params);

// (C1 + e_t, C2 + e_t); same quotient matrix.
EquitablePartition2 translate_partition(const EquitablePartition2& p, int t);

// s_{1,2} on C1 and -s_{2,1} on C2; always an (s_{1,2}+s_{2,1})-eigenfunction.
GridFunction associated_function(const EquitablePartition2& p);

}  // namespace hamnodal

#endif
