#include <chrono>
#include <cstdio>
#include "hamnodal/json_io.hpp"
#include "hamnodal/minimizer.hpp"
#include "hamnodal/nodal.hpp"
using namespace hamnodal;

static double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

int main(int argc, char** argv) {
  int c = argc > 1 ? std::atoi(argv[1]) : 2;
  double t0 = now_s();
  SearchConfig cfg{{3, 3, 3}, ExhaustiveMode{c}, 0, 1};
  auto r = search(cfg);
  std::printf("exh(3,3,3,c=%d): best=%lld evals=%llu dt=%.1fs\ncoeffs:", c,
              (long long)r.best_snd, (unsigned long long)r.evaluations, now_s() - t0);
  for (auto v : r.coefficients) std::printf(" %lld", (long long)v);
  std::printf("\n%s\n", grid_function_to_json(r.certificate).dump().c_str());
  return 0;
}
