#ifndef HAMNODAL_CORE_HPP
#define HAMNODAL_CORE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hamnodal/errors.hpp"
#include "hamnodal/rational.hpp"

namespace hamnodal {

using VertexIndex = std::uint64_t;

// Parameters of the Hamming graph H(n,q): words of length n over {0,...,q-1},
// adjacent when they differ in exactly one coordinate. Every vertex has degree
// n*(q-1). Construction rejects q^n > 2^40.
class GraphParams {
 public:
  GraphParams(int n, int q);

  int n() const { return n_; }
  int q() const { return q_; }
  VertexIndex vertex_count() const { return pow_[static_cast<std::size_t>(n_)]; }
  std::int64_t degree() const { return static_cast<std::int64_t>(n_) * (q_ - 1); }

  // q^(t-1): the index weight of coordinate t. Coordinates are 1-based and
  // coordinate 1 is the least-significant base-q digit of the index.
  VertexIndex stride(int t) const { return pow_[static_cast<std::size_t>(t - 1)]; }

  int digit(VertexIndex index, int t) const {
    return static_cast<int>((index / stride(t)) % static_cast<VertexIndex>(q_));
  }

  bool operator==(const GraphParams& other) const {
    return n_ == other.n_ && q_ == other.q_;
  }
  bool operator!=(const GraphParams& other) const { return !(*this == other); }

 private:
  int n_;
  int q_;
  std::vector<VertexIndex> pow_;  // q^0 .. q^n
};

struct Vertex {
  VertexIndex index = 0;
  std::vector<int> coords;  // coords[0] is coordinate 1
};

// Base-q little-endian encoding: index = sum coords[t-1] * q^(t-1).
Vertex encode(std::span<const int> coords, const GraphParams& params);
Vertex decode(VertexIndex index, const GraphParams& params);

// All n*(q-1) vertices at Hamming distance 1, ordered by coordinate ascending
// and replacement digit ascending.
std::vector<Vertex> neighbors(const Vertex& v, const GraphParams& params);

// Index-level neighbor walk in the same deterministic order.
template <typename F>
void for_each_neighbor(const GraphParams& params, VertexIndex index, F&& fn) {
  const int q = params.q();
  for (int t = 1; t <= params.n(); ++t) {
    const VertexIndex stride = params.stride(t);
    const int d = params.digit(index, t);
    const VertexIndex base = index - static_cast<VertexIndex>(d) * stride;
    for (int r = 0; r < q; ++r) {
      if (r == d) continue;
      fn(base + static_cast<VertexIndex>(r) * stride);
    }
  }
}

// Dense vertex subset of one H(n,q), stored as a bit mask over indices.
class VertexSet {
 public:
  explicit VertexSet(const GraphParams& params);
  static VertexSet full(const GraphParams& params);

  const GraphParams& params() const { return params_; }

  bool test(VertexIndex i) const {
    return (words_[i >> 6] >> (i & 63u)) & 1u;
  }
  void set(VertexIndex i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63u)); }
  void reset(VertexIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63u)); }

  std::uint64_t size() const;
  bool empty() const { return size() == 0; }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_disjoint_from(const VertexSet& other) const { return !intersects(other); }

  bool operator==(const VertexSet& other) const;
  bool operator!=(const VertexSet& other) const { return !(*this == other); }

  // Members in ascending index order.
  std::vector<VertexIndex> to_indices() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<VertexIndex>((w << 6) + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  GraphParams params_;
  std::vector<std::uint64_t> words_;
};

VertexSet make_vertex_set(const GraphParams& params, std::span<const VertexIndex> indices);

// {x + e_t : x in S}, addition of 1 in coordinate t modulo q.
VertexSet translate_set(const VertexSet& s, int t);

// Connected components of the subgraph of H(n,q) induced by S, ordered by
// smallest contained index. BFS over the bit mask; deterministic.
std::vector<VertexSet> induced_components(const VertexSet& s);

// Exact-rational-valued function on all q^n vertices, indexed by vertex index.
class GridFunction {
 public:
  GridFunction(const GraphParams& params, std::vector<Rational> values);
  static GridFunction zero(const GraphParams& params);
  static GridFunction constant(const GraphParams& params, const Rational& value);

  const GraphParams& params() const { return params_; }
  VertexIndex size() const { return params_.vertex_count(); }

  const Rational& at(VertexIndex i) const { return values_[i]; }
  void set(VertexIndex i, Rational value) { values_[i] = std::move(value); }
  const std::vector<Rational>& values() const { return values_; }

  bool is_zero() const;

  GridFunction operator+(const GridFunction& other) const;
  GridFunction operator-(const GridFunction& other) const;
  GridFunction operator-() const;
  GridFunction scaled(const Rational& factor) const;

  bool operator==(const GridFunction& other) const;

 private:
  GraphParams params_;
  std::vector<Rational> values_;
};

VertexSet positive_support(const GridFunction& f);   // S_+(f)
VertexSet negative_support(const GridFunction& f);   // S_-(f)
VertexSet nonzero_support(const GridFunction& f);

// g with g(x) = f(x + e_t) for every x.
GridFunction translate_function(const GridFunction& f, int t);

// (Lf)(x) = sum over neighbors y of (f(x) - f(y)), computed exactly.
GridFunction laplacian_apply(const GridFunction& f);

}  // namespace hamnodal

#endif
