#ifndef HAMNODAL_MINIMIZER_HPP
#define HAMNODAL_MINIMIZER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hamnodal/core.hpp"

namespace hamnodal {

struct SearchTarget {
  int n;
  int q;
  int i;
};

// Enumerates every coefficient vector in [-c,c]^dim except zero; refuses when
// the grid exceeds 10^8 vectors. The reported minimum is grid-exact.
struct ExhaustiveMode {
  int coeff_range;
};

// Draws `samples` vectors uniformly from [-c,c]^dim (zero rejected), each
// refined by up to `local_steps` rounds of single-coefficient +-1 hill
// climbing on SND with first-improvement acceptance. Climbing stays inside
// the [-c,c] box. Evidence only, never a proof of a minimum.
struct RandomizedMode {
  std::uint64_t samples;
  int local_steps;
  int coeff_range;
};

struct SearchConfig {
  SearchTarget target;
  std::variant<ExhaustiveMode, RandomizedMode> mode;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct SearchResult {
  std::int64_t best_snd = 0;
  GridFunction certificate;
  std::vector<std::int64_t> coefficients;  // over eigenspace_basis order
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  bool grid_exact = false;
  std::string method;
};

// f = sum of coefficients[b] * basis[b], exactly, together with SND(f).
std::pair<GridFunction, std::int64_t> evaluate(std::span<const std::int64_t> coefficients,
                                               const SearchTarget& target);

// Deterministic given (config, seed) regardless of the worker count.
SearchResult search(const SearchConfig& config);

struct ConjectureRow {
  int n;
  std::int64_t best_snd_found;
  int conjectured_min;  // n + 1
  bool matches;
};

// Runs the pinned search per n on (n, 3, n) and compares the best found SND
// against n+1. Upper-bound evidence only.
std::vector<ConjectureRow> verify_conjecture_evidence(int n_max, std::uint64_t seed);

// The pinned per-n search configuration used by verify_conjecture_evidence:
// exhaustive for n <= 2, randomized for n in {3,4}.
SearchConfig conjecture_search_config(int n, std::uint64_t seed);

}  // namespace hamnodal

#endif
