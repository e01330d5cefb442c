#include "hamnodal/minimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hamnodal/nodal.hpp"
#include "hamnodal/spectra.hpp"

namespace hamnodal {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Unbiased uniform draw from [0, m).
std::uint64_t bounded_uniform(std::uint64_t& state, std::uint64_t m) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m);
  std::uint64_t x;
  do {
    x = splitmix64(state);
  } while (x >= limit);
  return x % m;
}

// Integer basis values plus a flat neighbor table; everything the inner
// search loop touches. Basis elements take values in {-1,0,1}.
struct FastContext {
  GraphParams params;
  int dim = 0;
  std::size_t vcount = 0;
  std::size_t deg = 0;
  std::vector<GridFunction> basis;
  std::vector<std::vector<int>> bint;
  std::vector<std::uint32_t> nbr;

  explicit FastContext(const SearchTarget& target)
      : params(target.n, target.q), basis(eigenspace_basis(params, target.i)) {
    dim = static_cast<int>(basis.size());
    vcount = params.vertex_count();
    deg = static_cast<std::size_t>(params.degree());
    bint.resize(static_cast<std::size_t>(dim));
    for (int b = 0; b < dim; ++b) {
      auto& row = bint[static_cast<std::size_t>(b)];
      row.resize(vcount);
      for (std::size_t x = 0; x < vcount; ++x) {
        const Rational& v = basis[static_cast<std::size_t>(b)].at(x);
        row[x] = static_cast<int>(numerator(v));
      }
    }
    nbr.resize(vcount * deg);
    for (std::size_t x = 0; x < vcount; ++x) {
      std::size_t slot = x * deg;
      for_each_neighbor(params, x, [&](VertexIndex y) {
        nbr[slot++] = static_cast<std::uint32_t>(y);
      });
    }
  }

  void combine(std::span<const std::int64_t> coeffs, std::vector<std::int64_t>& vals) const {
    std::fill(vals.begin(), vals.end(), 0);
    for (int b = 0; b < dim; ++b) {
      const std::int64_t c = coeffs[static_cast<std::size_t>(b)];
      if (c == 0) continue;
      const auto& row = bint[static_cast<std::size_t>(b)];
      for (std::size_t x = 0; x < vcount; ++x) vals[x] += c * row[x];
    }
  }

  void shift(std::vector<std::int64_t>& vals, int b, std::int64_t delta) const {
    const auto& row = bint[static_cast<std::size_t>(b)];
    for (std::size_t x = 0; x < vcount; ++x) vals[x] += delta * row[x];
  }

  // Strong nodal domain count of the sign pattern of vals.
  std::int64_t snd(const std::vector<std::int64_t>& vals,
                   std::vector<std::uint8_t>& visited,
                   std::vector<std::uint32_t>& stack) const {
    std::fill(visited.begin(), visited.end(), 0);
    std::int64_t count = 0;
    for (std::size_t v = 0; v < vcount; ++v) {
      if (visited[v] || vals[v] == 0) continue;
      const bool positive = vals[v] > 0;
      ++count;
      visited[v] = 1;
      stack.clear();
      stack.push_back(static_cast<std::uint32_t>(v));
      while (!stack.empty()) {
        const std::uint32_t x = stack.back();
        stack.pop_back();
        const std::uint32_t* row = nbr.data() + static_cast<std::size_t>(x) * deg;
        for (std::size_t d = 0; d < deg; ++d) {
          const std::uint32_t y = row[d];
          if (!visited[y] && vals[y] != 0 && (vals[y] > 0) == positive) {
            visited[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    return count;
  }
};

struct Candidate {
  std::int64_t snd = -1;
  std::uint64_t ordinal = 0;
  std::vector<std::int64_t> coeffs;

  bool better_than(const Candidate& other) const {
    if (other.snd < 0) return true;
    if (snd != other.snd) return snd < other.snd;
    return ordinal < other.ordinal;
  }
};

struct Scratch {
  std::vector<std::int64_t> vals;
  std::vector<std::uint8_t> visited;
  std::vector<std::uint32_t> stack;

  explicit Scratch(const FastContext& ctx)
      : vals(ctx.vcount), visited(ctx.vcount) {
    stack.reserve(ctx.vcount);
  }
};

// One randomized sample: draw, then climb. Returns the refined candidate and
// adds the number of SND evaluations spent.
Candidate run_sample(const FastContext& ctx, const RandomizedMode& mode,
                     std::uint64_t seed, std::uint64_t ordinal, Scratch& scratch,
                     std::uint64_t& evaluations) {
  const int c = mode.coeff_range;
  const auto m = static_cast<std::uint64_t>(2 * c + 1);
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (ordinal + 1));
  splitmix64(state);

  Candidate cand;
  cand.ordinal = ordinal;
  cand.coeffs.resize(static_cast<std::size_t>(ctx.dim));
  int nonzero = 0;
  do {
    nonzero = 0;
    for (auto& v : cand.coeffs) {
      v = static_cast<std::int64_t>(bounded_uniform(state, m)) - c;
      if (v != 0) ++nonzero;
    }
  } while (nonzero == 0);

  ctx.combine(cand.coeffs, scratch.vals);
  cand.snd = ctx.snd(scratch.vals, scratch.visited, scratch.stack);
  ++evaluations;

  for (int step = 0; step < mode.local_steps; ++step) {
    bool improved = false;
    for (int b = 0; b < ctx.dim && !improved; ++b) {
      for (const std::int64_t delta : {std::int64_t{1}, std::int64_t{-1}}) {
        auto& coeff = cand.coeffs[static_cast<std::size_t>(b)];
        const std::int64_t next = coeff + delta;
        if (next > c || next < -c) continue;
        if (coeff != 0 && next == 0 && nonzero == 1) continue;  // keep f nonzero
        ctx.shift(scratch.vals, b, delta);
        const std::int64_t snd = ctx.snd(scratch.vals, scratch.visited, scratch.stack);
        ++evaluations;
        if (snd < cand.snd) {
          nonzero += (next != 0) - (coeff != 0);
          coeff = next;
          cand.snd = snd;
          improved = true;
          break;
        }
        ctx.shift(scratch.vals, b, -delta);
      }
    }
    if (!improved) break;
  }
  return cand;
}

// Odometer enumeration of [-c,c]^dim with the last coefficient fastest; the
// value vector is updated incrementally on each step.
Candidate run_exhaustive_chunk(const FastContext& ctx, int coeff_range,
                               std::int64_t leading, std::uint64_t chunk_offset,
                               Scratch& scratch, std::uint64_t& evaluations) {
  const int c = coeff_range;
  const int dim = ctx.dim;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(dim), -c);
  coeffs[0] = leading;
  int nonzero = 0;
  for (auto v : coeffs) nonzero += v != 0;
  ctx.combine(coeffs, scratch.vals);

  Candidate best;
  std::uint64_t ordinal = chunk_offset;
  while (true) {
    if (nonzero != 0) {
      const std::int64_t snd = ctx.snd(scratch.vals, scratch.visited, scratch.stack);
      ++evaluations;
      Candidate cand{snd, ordinal, coeffs};
      if (cand.better_than(best)) best = std::move(cand);
    }
    ++ordinal;
    int pos = dim - 1;
    while (pos >= 1 && coeffs[static_cast<std::size_t>(pos)] == c) {
      // Carry c -> -c; both ends are nonzero since c >= 1.
      ctx.shift(scratch.vals, pos, -2 * c);
      coeffs[static_cast<std::size_t>(pos)] = -c;
      --pos;
    }
    if (pos < 1) break;  // the leading coefficient is fixed per chunk
    auto& v = coeffs[static_cast<std::size_t>(pos)];
    nonzero -= v != 0;
    ++v;
    nonzero += v != 0;
    ctx.shift(scratch.vals, pos, 1);
  }
  return best;
}

std::uint64_t grid_size(int coeff_range, int dim, bool* overflow) {
  const auto base = static_cast<std::uint64_t>(2 * coeff_range + 1);
  std::uint64_t total = 1;
  *overflow = false;
  for (int b = 0; b < dim; ++b) {
    if (total > (std::uint64_t{1} << 62) / base) {
      *overflow = true;
      return 0;
    }
    total *= base;
  }
  return total;
}

void check_certificate(const FastContext& ctx, const SearchTarget& target,
                       const Candidate& best, const GridFunction& f,
                       std::int64_t exact_snd) {
  const Rational lambda(eigenvalue(ctx.params, target.i));
  if (!is_eigenfunction(f, lambda)) {
    throw std::logic_error("search certificate failed the exact eigenfunction check");
  }
  if (exact_snd != best.snd) {
    throw std::logic_error("fast SND disagrees with the exact recount");
  }
}

}  // namespace

std::pair<GridFunction, std::int64_t> evaluate(std::span<const std::int64_t> coefficients,
                                               const SearchTarget& target) {
  GraphParams params(target.n, target.q);
  const std::vector<GridFunction> basis = eigenspace_basis(params, target.i);
  if (coefficients.size() != basis.size()) {
    throw LengthMismatch("expected " + std::to_string(basis.size()) +
                         " coefficients, got " + std::to_string(coefficients.size()));
  }
  if (std::all_of(coefficients.begin(), coefficients.end(),
                  [](std::int64_t c) { return c == 0; })) {
    throw ZeroVector("the zero coefficient vector does not define an eigenfunction");
  }
  GridFunction f = GridFunction::zero(params);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coefficients[b] == 0) continue;
    f = f + basis[b].scaled(Rational(coefficients[b]));
  }
  return {f, count_strong_domains(f)};
}

SearchResult search(const SearchConfig& config) {
  const FastContext ctx(config.target);
  if (ctx.dim == 0) throw ZeroDimension("eigenspace has dimension zero");
  const int jobs = std::max(1, config.jobs);

  Candidate best;
  std::uint64_t evaluations = 0;
  bool grid_exact = false;
  std::string method;

  if (const auto* mode = std::get_if<ExhaustiveMode>(&config.mode)) {
    const int c = mode->coeff_range;
    if (c < 1) throw Error("coefficient range must be at least 1");
    bool overflow = false;
    const std::uint64_t total = grid_size(c, ctx.dim, &overflow);
    if (overflow || total > 100'000'000ull) {
      throw BudgetExceeded("exhaustive grid (2c+1)^dim exceeds 10^8 vectors");
    }
    const std::uint64_t chunk_size = total / static_cast<std::uint64_t>(2 * c + 1);
    const int chunk_count = 2 * c + 1;

    std::vector<Candidate> chunk_best(static_cast<std::size_t>(chunk_count));
    std::vector<std::uint64_t> chunk_evals(static_cast<std::size_t>(chunk_count), 0);
    std::atomic<int> next_chunk{0};
    auto worker = [&]() {
      Scratch scratch(ctx);
      while (true) {
        const int idx = next_chunk.fetch_add(1);
        if (idx >= chunk_count) break;
        chunk_best[static_cast<std::size_t>(idx)] = run_exhaustive_chunk(
            ctx, c, idx - c, static_cast<std::uint64_t>(idx) * chunk_size, scratch,
            chunk_evals[static_cast<std::size_t>(idx)]);
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (int idx = 0; idx < chunk_count; ++idx) {
      evaluations += chunk_evals[static_cast<std::size_t>(idx)];
      if (chunk_best[static_cast<std::size_t>(idx)].snd >= 0 &&
          chunk_best[static_cast<std::size_t>(idx)].better_than(best)) {
        best = std::move(chunk_best[static_cast<std::size_t>(idx)]);
      }
    }
    grid_exact = true;
    method = "exhaustive integer-grid minimization over [-" + std::to_string(c) +
             "," + std::to_string(c) + "]^" + std::to_string(ctx.dim) +
             " (grid-exact)";
  } else {
    const auto& random = std::get<RandomizedMode>(config.mode);
    if (random.coeff_range < 1) throw Error("coefficient range must be at least 1");
    if (random.samples == 0) throw Error("sample count must be positive");

    std::vector<Candidate> worker_best(static_cast<std::size_t>(jobs));
    std::vector<std::uint64_t> worker_evals(static_cast<std::size_t>(jobs), 0);
    std::atomic<std::uint64_t> next_sample{0};
    auto worker = [&](int slot) {
      Scratch scratch(ctx);
      auto& local = worker_best[static_cast<std::size_t>(slot)];
      auto& evals = worker_evals[static_cast<std::size_t>(slot)];
      while (true) {
        const std::uint64_t ordinal = next_sample.fetch_add(1);
        if (ordinal >= random.samples) break;
        Candidate cand = run_sample(ctx, random, config.seed, ordinal, scratch, evals);
        if (cand.better_than(local)) local = std::move(cand);
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
      for (auto& t : pool) t.join();
    }
    for (int j = 0; j < jobs; ++j) {
      evaluations += worker_evals[static_cast<std::size_t>(j)];
      if (worker_best[static_cast<std::size_t>(j)].snd >= 0 &&
          worker_best[static_cast<std::size_t>(j)].better_than(best)) {
        best = std::move(worker_best[static_cast<std::size_t>(j)]);
      }
    }
    method = "randomized integer sampling (" + std::to_string(random.samples) +
             " samples, " + std::to_string(random.local_steps) +
             " hill-climbing rounds, coefficients in [-" +
             std::to_string(random.coeff_range) + "," +
             std::to_string(random.coeff_range) + "]^" + std::to_string(ctx.dim) +
             "); evidence only";
  }

  if (best.snd < 0) throw std::logic_error("search evaluated no candidate");

  auto [certificate, exact_snd] = evaluate(best.coeffs, config.target);
  check_certificate(ctx, config.target, best, certificate, exact_snd);

  SearchResult result{best.snd,   std::move(certificate), std::move(best.coeffs),
                      evaluations, config.seed,           grid_exact,
                      std::move(method)};
  return result;
}

SearchConfig conjecture_search_config(int n, std::uint64_t seed) {
  if (n < 1 || n > 4) {
    throw IndexOutOfRange("conjecture evidence runs at desk scale n in [1,4]");
  }
  SearchConfig config;
  config.target = {n, 3, n};
  config.seed = seed;
  switch (n) {
    case 1: config.mode = ExhaustiveMode{2}; break;
    case 2: config.mode = ExhaustiveMode{4}; break;
    case 3: config.mode = RandomizedMode{2000, 100, 6}; break;
    default: config.mode = RandomizedMode{60000, 200, 8}; break;
  }
  return config;
}

std::vector<ConjectureRow> verify_conjecture_evidence(int n_max, std::uint64_t seed) {
  if (n_max < 1 || n_max > 4) {
    throw IndexOutOfRange("conjecture evidence runs at desk scale n_max in [1,4]");
  }
  std::vector<ConjectureRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const SearchResult result = search(conjecture_search_config(n, seed));
    rows.push_back({n, result.best_snd, n + 1, result.best_snd == n + 1});
  }
  return rows;
}

}  // namespace hamnodal
