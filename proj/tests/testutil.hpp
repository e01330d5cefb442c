#ifndef HAMNODAL_TESTUTIL_HPP
#define HAMNODAL_TESTUTIL_HPP

#include <cstdint>
#include <vector>

#include "hamnodal/core.hpp"

namespace testutil {

// Deterministic generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, m).
  std::uint64_t below(std::uint64_t m) { return next() % m; }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  hamnodal::VertexSet subset(const hamnodal::GraphParams& params, int percent) {
    hamnodal::VertexSet s(params);
    for (hamnodal::VertexIndex x = 0; x < params.vertex_count(); ++x) {
      if (below(100) < static_cast<std::uint64_t>(percent)) s.set(x);
    }
    return s;
  }

  hamnodal::Rational small_rational() {
    const std::int64_t num = between(-9, 9);
    const std::int64_t den = between(1, 7);
    return hamnodal::Rational(num, den);
  }

  hamnodal::GridFunction function(const hamnodal::GraphParams& params) {
    std::vector<hamnodal::Rational> values(params.vertex_count());
    for (auto& v : values) v = small_rational();
    return hamnodal::GridFunction(params, std::move(values));
  }

 private:
  std::uint64_t state_;
};

// O(|S|^2) component oracle: unions every vertex pair at Hamming distance 1.
// Independent of the BFS path in the library.
std::vector<std::vector<hamnodal::VertexIndex>> components_naive(
    const hamnodal::VertexSet& s);

}  // namespace testutil

#endif
