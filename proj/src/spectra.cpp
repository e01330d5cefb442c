#include "hamnodal/spectra.hpp"

#include <string>

namespace hamnodal {

namespace {

void check_index(const GraphParams& params, int i) {
  if (i < 0 || i > params.n()) {
    throw IndexOutOfRange("eigenvalue index " + std::to_string(i) +
                          " outside [0," + std::to_string(params.n()) + "]");
  }
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

std::int64_t eigenvalue(const GraphParams& params, int i) {
  check_index(params, i);
  return static_cast<std::int64_t>(params.q()) * i;
}

std::int64_t multiplicity(const GraphParams& params, int i) {
  check_index(params, i);
  std::int64_t m = binomial(params.n(), i);
  for (int j = 0; j < i; ++j) m *= params.q() - 1;
  return m;
}

CourantPosition courant_position(const GraphParams& params, int i) {
  check_index(params, i);
  CourantPosition pos;
  pos.k = 1;
  for (int j = 0; j < i; ++j) pos.k += multiplicity(params, j);
  pos.r = multiplicity(params, i);
  return pos;
}

bool is_eigenfunction(const GridFunction& f, const Rational& lambda) {
  if (f.is_zero()) return false;
  const GraphParams& params = f.params();
  const Rational degree(params.degree());
  for (VertexIndex x = 0; x < f.size(); ++x) {
    Rational acc = f.at(x) * degree;
    for_each_neighbor(params, x, [&](VertexIndex y) { acc -= f.at(y); });
    if (acc != lambda * f.at(x)) return false;
  }
  return true;
}

GridFunction tensor_product(const GridFunction& f1, const GridFunction& f2) {
  const GraphParams& p1 = f1.params();
  const GraphParams& p2 = f2.params();
  if (p1.q() != p2.q()) {
    throw AlphabetMismatch("tensor factors must share q, got " +
                           std::to_string(p1.q()) + " and " + std::to_string(p2.q()));
  }
  GraphParams out_params(p1.n() + p2.n(), p1.q());
  std::vector<Rational> out;
  out.reserve(out_params.vertex_count());
  for (VertexIndex i2 = 0; i2 < f2.size(); ++i2) {
    for (VertexIndex i1 = 0; i1 < f1.size(); ++i1) {
      out.push_back(f1.at(i1) * f2.at(i2));
    }
  }
  return GridFunction(out_params, std::move(out));
}

GridFunction extend_by_constant(const GridFunction& g, int extra) {
  if (extra < 0) throw Error("extension count must be non-negative");
  if (extra == 0) return g;
  GraphParams out_params(g.params().n() + extra, g.params().q());
  std::vector<Rational> out;
  out.reserve(out_params.vertex_count());
  const VertexIndex copies = out_params.vertex_count() / g.size();
  for (VertexIndex c = 0; c < copies; ++c) {
    for (VertexIndex x = 0; x < g.size(); ++x) out.push_back(g.at(x));
  }
  return GridFunction(out_params, std::move(out));
}

std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (k > n) return out;
  // Colex: order by largest element first; within a fixed largest element m,
  // recurse on the subsets of {1,...,m-1}.
  for (int m = k; m <= n; ++m) {
    for (auto& head : colex_subsets(m - 1, k - 1)) {
      head.push_back(m);
      out.push_back(std::move(head));
    }
  }
  return out;
}

std::vector<GridFunction> eigenspace_basis(const GraphParams& params, int i) {
  if (i < 1 || i > params.n()) {
    throw IndexOutOfRange("eigenspace index " + std::to_string(i) +
                          " outside [1," + std::to_string(params.n()) + "]");
  }
  const int q = params.q();
  std::vector<GridFunction> basis;
  basis.reserve(static_cast<std::size_t>(multiplicity(params, i)));
  for (const auto& subset : colex_subsets(params.n(), i)) {
    // Assignments j: subset -> {1,...,q-1} in lex order (first coordinate of
    // the subset most significant, last coordinate varying fastest).
    std::vector<int> assign(subset.size(), 1);
    while (true) {
      std::vector<Rational> values;
      values.reserve(params.vertex_count());
      for (VertexIndex x = 0; x < params.vertex_count(); ++x) {
        int v = 1;
        for (std::size_t s = 0; s < subset.size(); ++s) {
          const int d = params.digit(x, subset[s]);
          if (d == 0) continue;
          if (d == assign[s]) {
            v = -v;
          } else {
            v = 0;
            break;
          }
        }
        values.emplace_back(v);
      }
      basis.emplace_back(params, std::move(values));
      int pos = static_cast<int>(subset.size()) - 1;
      while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == q - 1) {
        assign[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++assign[static_cast<std::size_t>(pos)];
    }
  }
  return basis;
}

}  // namespace hamnodal
