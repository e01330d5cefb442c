#include "hamnodal/equitable.hpp"

#include <string>

namespace hamnodal {

EquitablePartition2 verify_equitable(const GraphParams& params,
                                     const VertexSet& c1, const VertexSet& c2) {
  if (c1.params() != params || c2.params() != params) {
    throw ParamsMismatch("cells live on a different graph than the stated params");
  }
  if (c1.intersects(c2)) throw NotAPartition("cells overlap");
  if (c1.size() + c2.size() != params.vertex_count()) {
    throw NotAPartition("cells do not cover the vertex set");
  }
  if (c1.empty() || c2.empty()) throw NotAPartition("both cells must be nonempty");

  EquitablePartition2::Quotient s{};
  bool seen[2] = {false, false};
  const VertexIndex count = params.vertex_count();
  for (VertexIndex x = 0; x < count; ++x) {
    const int cell = c1.test(x) ? 0 : 1;
    std::int64_t in_c1 = 0;
    for_each_neighbor(params, x, [&](VertexIndex y) {
      if (c1.test(y)) ++in_c1;
    });
    const std::int64_t in_c2 = params.degree() - in_c1;
    if (!seen[cell]) {
      seen[cell] = true;
      s[static_cast<std::size_t>(cell)] = {in_c1, in_c2};
    } else if (s[static_cast<std::size_t>(cell)][0] != in_c1) {
      throw NotEquitable("vertex " + std::to_string(x) + " in C" +
                             std::to_string(cell + 1) + " has " +
                             std::to_string(in_c1) + " neighbors in C1, expected " +
                             std::to_string(s[static_cast<std::size_t>(cell)][0]),
                         x);
    }
  }
  // Double counting the C1-C2 edges; holds for every equitable partition.
  if (static_cast<std::int64_t>(c1.size()) * s[0][1] !=
      static_cast<std::int64_t>(c2.size()) * s[1][0]) {
    throw Error("internal: edge-count identity violated");
  }
  return EquitablePartition2(c1, s);
}

EquitablePartition2 multiplication_construction(const EquitablePartition2& d, int k) {
  const GraphParams& base = d.params();
  if (base.q() != 2) {
    throw AlphabetMismatch("the multiplication construction requires q=2");
  }
  if (k < 1) throw Error("k must be a positive integer");
  const int m = base.n();
  GraphParams params(k * m, 2);
  VertexSet c1(params);
  const VertexIndex block_mask = (VertexIndex{1} << k) - 1;
  for (VertexIndex x = 0; x < params.vertex_count(); ++x) {
    // Parity of block j (coordinates (j-1)k+1 .. jk) becomes digit j.
    VertexIndex y = 0;
    for (int j = 0; j < m; ++j) {
      const auto parity =
          static_cast<VertexIndex>(__builtin_popcountll((x >> (j * k)) & block_mask) & 1);
      y |= parity << j;
    }
    if (d.c1().test(y)) c1.set(x);
  }
  return verify_equitable(params, c1, c1.complement());
}

EquitablePartition2 type_a_partition(int k) {
  GraphParams base(3, 2);
  VertexSet d1(base);
  d1.set(0);  // (0,0,0)
  d1.set(7);  // (1,1,1)
  const EquitablePartition2 seed = verify_equitable(base, d1, d1.complement());
  return multiplication_construction(seed, k);
}

VertexSet gamma_level(const GraphParams& params, int a) {
  if (a < 0 || a >= params.q()) {
    throw BadLevel("level " + std::to_string(a) + " outside [0," +
                   std::to_string(params.q() - 1) + "]");
  }
  VertexSet s(params);
  for (VertexIndex x = 0; x < params.vertex_count(); ++x) {
    int sum = 0;
    for (int t = 1; t <= params.n(); ++t) sum += params.digit(x, t);
    if (sum % params.q() == a) s.set(x);
  }
  return s;
}

EquitablePartition2 type_b_partition(const GraphParams& params) {
  const VertexSet c1 = gamma_level(params, 0);
  return verify_equitable(params, c1, c1.complement());
}

EquitablePartition2 level_band_partition(const GraphParams& params) {
  if (params.q() < 4) {
    throw AlphabetTooSmall("the level-band partition requires q >= 4");
  }
  VertexSet c1 = gamma_level(params, 0);
  gamma_level(params, 1).for_each([&](VertexIndex x) { c1.set(x); });
  return verify_equitable(params, c1, c1.complement());
}

EquitablePartition2 translate_partition(const EquitablePartition2& p, int t) {
  const VertexSet c3 = translate_set(p.c1(), t);
  return verify_equitable(p.params(), c3, c3.complement());
}

GridFunction associated_function(const EquitablePartition2& p) {
  const Rational on_c1(p.quotient()[0][1]);
  const Rational on_c2(-p.quotient()[1][0]);
  std::vector<Rational> values(p.params().vertex_count(), on_c2);
  p.c1().for_each([&](VertexIndex x) { values[x] = on_c1; });
  return GridFunction(p.params(), std::move(values));
}

}  // namespace hamnodal
