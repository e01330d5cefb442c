#include "hamnodal/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hamnodal {

namespace {

constexpr VertexIndex kScaleGuard = VertexIndex{1} << 40;

}  // namespace

GraphParams::GraphParams(int n, int q) : n_(n), q_(q) {
  if (n < 1) throw Error("n must be a positive integer, got " + std::to_string(n));
  if (q < 2) throw Error("q must be at least 2, got " + std::to_string(q));
  pow_.reserve(static_cast<std::size_t>(n) + 1);
  pow_.push_back(1);
  for (int t = 1; t <= n; ++t) {
    const VertexIndex prev = pow_.back();
    if (prev > kScaleGuard / static_cast<VertexIndex>(q)) {
      throw ScaleGuardExceeded("q^n exceeds 2^40 for n=" + std::to_string(n) +
                               ", q=" + std::to_string(q));
    }
    pow_.push_back(prev * static_cast<VertexIndex>(q));
  }
}

Vertex encode(std::span<const int> coords, const GraphParams& params) {
  if (coords.size() != static_cast<std::size_t>(params.n())) {
    throw LengthMismatch("expected " + std::to_string(params.n()) +
                         " coordinates, got " + std::to_string(coords.size()));
  }
  Vertex v;
  v.coords.assign(coords.begin(), coords.end());
  for (int t = 1; t <= params.n(); ++t) {
    const int c = v.coords[static_cast<std::size_t>(t - 1)];
    if (c < 0 || c >= params.q()) {
      throw CoordOutOfRange("coordinate " + std::to_string(t) + " is " +
                            std::to_string(c) + ", must be in [0," +
                            std::to_string(params.q() - 1) + "]");
    }
    v.index += static_cast<VertexIndex>(c) * params.stride(t);
  }
  return v;
}

Vertex decode(VertexIndex index, const GraphParams& params) {
  if (index >= params.vertex_count()) {
    throw IndexOutOfRange("vertex index " + std::to_string(index) +
                          " out of range for q^n=" +
                          std::to_string(params.vertex_count()));
  }
  Vertex v;
  v.index = index;
  v.coords.resize(static_cast<std::size_t>(params.n()));
  for (int t = 1; t <= params.n(); ++t) {
    v.coords[static_cast<std::size_t>(t - 1)] = params.digit(index, t);
  }
  return v;
}

std::vector<Vertex> neighbors(const Vertex& v, const GraphParams& params) {
  if (v.index >= params.vertex_count()) {
    throw IndexOutOfRange("vertex index out of range");
  }
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(params.degree()));
  for_each_neighbor(params, v.index,
                    [&](VertexIndex w) { out.push_back(decode(w, params)); });
  return out;
}

VertexSet::VertexSet(const GraphParams& params)
    : params_(params),
      words_((params.vertex_count() + 63) >> 6, 0) {}

VertexSet VertexSet::full(const GraphParams& params) {
  VertexSet s(params);
  const VertexIndex count = params.vertex_count();
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  // Clear the bits beyond q^n in the last word.
  const unsigned used = static_cast<unsigned>(count & 63u);
  if (used != 0) s.words_.back() &= (std::uint64_t{1} << used) - 1;
  return s;
}

std::uint64_t VertexSet::size() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(params_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (params_ != other.params_) throw ParamsMismatch("vertex sets live on different graphs");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  if (params_ != other.params_) throw ParamsMismatch("vertex sets live on different graphs");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool VertexSet::operator==(const VertexSet& other) const {
  return params_ == other.params_ && words_ == other.words_;
}

std::vector<VertexIndex> VertexSet::to_indices() const {
  std::vector<VertexIndex> out;
  out.reserve(size());
  for_each([&](VertexIndex i) { out.push_back(i); });
  return out;
}

VertexSet make_vertex_set(const GraphParams& params, std::span<const VertexIndex> indices) {
  VertexSet s(params);
  for (VertexIndex i : indices) {
    if (i >= params.vertex_count()) throw IndexOutOfRange("vertex index out of range");
    s.set(i);
  }
  return s;
}

VertexSet translate_set(const VertexSet& s, int t) {
  const GraphParams& params = s.params();
  if (t < 1 || t > params.n()) {
    throw BadCoordinate("coordinate " + std::to_string(t) + " outside [1," +
                        std::to_string(params.n()) + "]");
  }
  const VertexIndex stride = params.stride(t);
  VertexSet out(params);
  s.for_each([&](VertexIndex x) {
    const int d = params.digit(x, t);
    const VertexIndex y =
        (d + 1 == params.q()) ? x - static_cast<VertexIndex>(params.q() - 1) * stride
                              : x + stride;
    out.set(y);
  });
  return out;
}

std::vector<VertexSet> induced_components(const VertexSet& s) {
  const GraphParams& params = s.params();
  std::vector<VertexSet> components;
  VertexSet visited(params);
  std::vector<VertexIndex> stack;
  s.for_each([&](VertexIndex start) {
    if (visited.test(start)) return;
    VertexSet comp(params);
    stack.push_back(start);
    visited.set(start);
    comp.set(start);
    while (!stack.empty()) {
      const VertexIndex x = stack.back();
      stack.pop_back();
      for_each_neighbor(params, x, [&](VertexIndex y) {
        if (s.test(y) && !visited.test(y)) {
          visited.set(y);
          comp.set(y);
          stack.push_back(y);
        }
      });
    }
    components.push_back(std::move(comp));
  });
  return components;
}

GridFunction::GridFunction(const GraphParams& params, std::vector<Rational> values)
    : params_(params), values_(std::move(values)) {
  if (values_.size() != params_.vertex_count()) {
    throw LengthMismatch("expected " + std::to_string(params_.vertex_count()) +
                         " values, got " + std::to_string(values_.size()));
  }
}

GridFunction GridFunction::zero(const GraphParams& params) {
  return GridFunction(params, std::vector<Rational>(params.vertex_count()));
}

GridFunction GridFunction::constant(const GraphParams& params, const Rational& value) {
  return GridFunction(params, std::vector<Rational>(params.vertex_count(), value));
}

bool GridFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v.is_zero(); });
}

GridFunction GridFunction::operator+(const GridFunction& other) const {
  if (params_ != other.params_) throw ParamsMismatch("functions live on different graphs");
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] + other.values_[i];
  return GridFunction(params_, std::move(out));
}

GridFunction GridFunction::operator-(const GridFunction& other) const {
  if (params_ != other.params_) throw ParamsMismatch("functions live on different graphs");
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] - other.values_[i];
  return GridFunction(params_, std::move(out));
}

GridFunction GridFunction::operator-() const { return scaled(Rational(-1)); }

GridFunction GridFunction::scaled(const Rational& factor) const {
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * factor;
  return GridFunction(params_, std::move(out));
}

bool GridFunction::operator==(const GridFunction& other) const {
  return params_ == other.params_ && values_ == other.values_;
}

namespace {

template <typename Pred>
VertexSet support_where(const GridFunction& f, Pred pred) {
  VertexSet s(f.params());
  const VertexIndex count = f.size();
  for (VertexIndex i = 0; i < count; ++i) {
    if (pred(f.at(i))) s.set(i);
  }
  return s;
}

}  // namespace

VertexSet positive_support(const GridFunction& f) {
  return support_where(f, [](const Rational& v) { return v.sign() > 0; });
}

VertexSet negative_support(const GridFunction& f) {
  return support_where(f, [](const Rational& v) { return v.sign() < 0; });
}

VertexSet nonzero_support(const GridFunction& f) {
  return support_where(f, [](const Rational& v) { return !v.is_zero(); });
}

GridFunction translate_function(const GridFunction& f, int t) {
  const GraphParams& params = f.params();
  if (t < 1 || t > params.n()) {
    throw BadCoordinate("coordinate " + std::to_string(t) + " outside [1," +
                        std::to_string(params.n()) + "]");
  }
  const VertexIndex stride = params.stride(t);
  std::vector<Rational> out(f.size());
  for (VertexIndex x = 0; x < f.size(); ++x) {
    const int d = params.digit(x, t);
    const VertexIndex shifted =
        (d + 1 == params.q()) ? x - static_cast<VertexIndex>(params.q() - 1) * stride
                              : x + stride;
    out[x] = f.at(shifted);
  }
  return GridFunction(params, std::move(out));
}

GridFunction laplacian_apply(const GridFunction& f) {
  const GraphParams& params = f.params();
  const Rational degree(params.degree());
  std::vector<Rational> out(f.size());
  for (VertexIndex x = 0; x < f.size(); ++x) {
    Rational acc = f.at(x) * degree;
    for_each_neighbor(params, x, [&](VertexIndex y) { acc -= f.at(y); });
    out[x] = std::move(acc);
  }
  return GridFunction(params, std::move(out));
}

}  // namespace hamnodal
