#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamnodal/catalog.hpp"
#include "hamnodal/equitable.hpp"
#include "hamnodal/json_io.hpp"
#include "hamnodal/minimizer.hpp"
#include "hamnodal/nodal.hpp"
#include "hamnodal/spectra.hpp"

namespace {

using namespace hamnodal;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnsupported = 2;

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

json function_report(const GridFunction& f, std::optional<int> i) {
  json out = grid_function_to_json(f);
  const NodalReport rep = nodal_report(f);
  out["snd"] = rep.snd;
  out["wnd"] = rep.wnd;
  if (i.has_value()) {
    out["lambda"] = eigenvalue(f.params(), *i);
    out["courant"] = courant_to_json(check_courant(f, *i));
  }
  return out;
}

struct ConstructArgs {
  int n = 0, q = 0, i = 0;
  std::string out;
  bool verbose = false;
};

int run_construct(const ConstructArgs& args) {
  const ConstructOutcome outcome = construct_snd2(args.n, args.q, args.i);
  if (!outcome.supported()) {
    emit(json{{"i", args.i},
              {"n", args.n},
              {"provenance", json{{"requested", json{{"i", args.i}, {"n", args.n}, {"q", args.q}}}}},
              {"q", args.q},
              {"reason", outcome.unsupported_reason},
              {"status", "unsupported"}});
    return kExitUnsupported;
  }
  const CertifiedFunction& cert = *outcome.value;
  const CourantReport courant = check_courant(cert.f, args.i);
  json payload{{"courant", courant_to_json(courant)},
               {"eigenvalue", eigenvalue(cert.f.params(), args.i)},
               {"i", args.i},
               {"n", args.n},
               {"provenance", json{{"recipe", recipe_to_json(cert.recipe)}}},
               {"q", args.q},
               {"route", cert.recipe.to_string()},
               {"snd", cert.snd},
               {"status", "ok"},
               {"wnd", cert.wnd}};
  if (!args.out.empty()) {
    save_grid_function(cert.f, args.out);
    payload["out"] = args.out;
  }
  if (args.verbose) {
    std::cerr << "route: " << cert.recipe.to_string() << "\n"
              << "eigenvalue: " << eigenvalue(cert.f.params(), args.i)
              << "  snd: " << cert.snd << "  wnd: " << cert.wnd
              << "  courant slack (snd,wnd): " << courant.snd_slack << ","
              << courant.wnd_slack << "\n";
  }
  emit(payload);
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::string lambda;
  bool verbose = false;
};

int run_verify(const VerifyArgs& args) {
  const GridFunction f = load_grid_function(args.in);
  const Rational lambda = parse_rational(args.lambda);
  const bool ok = is_eigenfunction(f, lambda);
  json payload{{"is_eigenfunction", ok},
               {"lambda", rational_to_string(lambda)},
               {"n", f.params().n()},
               {"provenance", json{{"input", args.in}, {"lambda", rational_to_string(lambda)}}},
               {"q", f.params().q()},
               {"status", "ok"}};
  if (f.is_zero()) {
    payload["snd"] = nullptr;
    payload["wnd"] = nullptr;
    payload["courant"] = nullptr;
  } else {
    const NodalReport rep = nodal_report(f);
    payload["snd"] = rep.snd;
    payload["wnd"] = rep.wnd;
    payload["courant"] = nullptr;
    if (ok) {
      const Rational index = lambda / f.params().q();
      if (denominator(index) == 1 && index >= 0 && index <= f.params().n()) {
        payload["courant"] =
            courant_to_json(check_courant(f, static_cast<int>(numerator(index))));
      }
    }
  }
  if (args.verbose) {
    std::cerr << args.in << ": is_eigenfunction(" << rational_to_string(lambda)
              << ") = " << (ok ? "true" : "false") << "\n";
  }
  emit(payload);
  return kExitOk;
}

struct CountArgs {
  std::string in;
  bool verbose = false;
};

int run_count(const CountArgs& args, bool strong) {
  const GridFunction f = load_grid_function(args.in);
  const NodalReport rep = strong ? strong_domains(f) : weak_domains(f);
  json payload{{"components",
                json{{"negative", nodal_components_to_json(strong ? rep.negative_strong
                                                                  : rep.negative_weak)},
                     {"positive", nodal_components_to_json(strong ? rep.positive_strong
                                                                  : rep.positive_weak)}}},
               {"n", f.params().n()},
               {"provenance", json{{"input", args.in}}},
               {"q", f.params().q()},
               {"status", "ok"}};
  payload[strong ? "snd" : "wnd"] = strong ? rep.snd : rep.wnd;
  if (args.verbose) {
    const auto& pos = strong ? rep.positive_strong : rep.positive_weak;
    const auto& neg = strong ? rep.negative_strong : rep.negative_weak;
    std::cerr << (strong ? "strong" : "weak") << " nodal domains: "
              << (strong ? rep.snd : rep.wnd) << " (" << pos.size() << " positive, "
              << neg.size() << " negative)\n";
    for (const auto& comp : pos) {
      std::cerr << "  +";
      comp.for_each([&](VertexIndex x) { std::cerr << " " << x; });
      std::cerr << "\n";
    }
    for (const auto& comp : neg) {
      std::cerr << "  -";
      comp.for_each([&](VertexIndex x) { std::cerr << " " << x; });
      std::cerr << "\n";
    }
  }
  emit(payload);
  return kExitOk;
}

struct PartitionArgs {
  std::string type;
  int n = 0, q = 0, k = 1;
  int translate = 0;
  bool verbose = false;
};

int run_partition(const PartitionArgs& args) {
  std::optional<EquitablePartition2> partition;
  if (args.type == "a") {
    if (args.k < 1) throw Error("type a requires --k >= 1");
    if (args.n != 0 && args.n != 3 * args.k) {
      throw Error("type a lives on H(3k,2); --n must equal 3k when given");
    }
    if (args.q != 0 && args.q != 2) throw Error("type a requires q=2");
    partition = type_a_partition(args.k);
  } else if (args.type == "b") {
    if (args.n < 1 || args.q < 2) throw Error("type b requires --n and --q");
    partition = type_b_partition(GraphParams(args.n, args.q));
  } else if (args.type == "band") {
    if (args.n < 1 || args.q < 2) throw Error("type band requires --n and --q");
    partition = level_band_partition(GraphParams(args.n, args.q));
  } else {
    throw Error("unknown partition type '" + args.type + "'");
  }
  if (args.translate != 0) partition = translate_partition(*partition, args.translate);

  json payload = partition_to_json(*partition);
  payload["provenance"] = json{{"k", args.type == "a" ? json(args.k) : json(nullptr)},
                               {"translate", args.translate ? json(args.translate) : json(nullptr)},
                               {"type", args.type}};
  payload["status"] = "ok";
  if (args.verbose) {
    const auto& s = partition->quotient();
    std::cerr << "quotient: [" << s[0][0] << " " << s[0][1] << "; " << s[1][0] << " "
              << s[1][1] << "]  |C1|=" << partition->c1().size()
              << " |C2|=" << partition->c2().size() << "\n";
  }
  emit(payload);
  return kExitOk;
}

struct BasisArgs {
  int n = 0, q = 0, i = 0;
  bool verbose = false;
};

int run_basis(const BasisArgs& args) {
  GraphParams params(args.n, args.q);
  const auto basis = eigenspace_basis(params, args.i);
  json functions = json::array();
  for (const auto& f : basis) functions.push_back(grid_function_to_json(f));
  json payload{{"basis", std::move(functions)},
               {"count", basis.size()},
               {"i", args.i},
               {"lambda", eigenvalue(params, args.i)},
               {"n", args.n},
               {"provenance", json{{"order", "colex coordinate subsets, then lexicographic assignments"}}},
               {"q", args.q},
               {"status", "ok"}};
  if (args.verbose) {
    std::cerr << "basis of the lambda=" << eigenvalue(params, args.i)
              << " eigenspace: " << basis.size() << " functions\n";
  }
  emit(payload);
  return kExitOk;
}

struct SearchArgs {
  int n = 0, q = 0, i = 0;
  std::string mode = "exhaustive";
  int range = 2;
  std::uint64_t samples = 1000;
  int local_steps = 50;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out;
  bool verbose = false;
};

int run_search(const SearchArgs& args) {
  SearchConfig config;
  config.target = {args.n, args.q, args.i};
  config.seed = args.seed;
  config.jobs = args.jobs;
  if (args.mode == "exhaustive") {
    config.mode = ExhaustiveMode{args.range};
  } else if (args.mode == "random") {
    config.mode = RandomizedMode{args.samples, args.local_steps, args.range};
  } else {
    throw Error("unknown search mode '" + args.mode + "'");
  }
  const SearchResult result = search(config);
  json payload = search_result_to_json(result);
  payload["i"] = args.i;
  payload["n"] = args.n;
  payload["q"] = args.q;
  payload["status"] = "ok";
  json mode_echo{{"mode", args.mode}, {"range", args.range}};
  if (args.mode == "random") {
    mode_echo["samples"] = args.samples;
    mode_echo["local_steps"] = args.local_steps;
  }
  payload["provenance"] = json{{"config", std::move(mode_echo)},
                               {"jobs", args.jobs},
                               {"seed", args.seed}};
  if (!args.out.empty()) {
    save_grid_function(result.certificate, args.out);
    payload["out"] = args.out;
  }
  if (args.verbose) {
    std::cerr << result.method << "\nbest snd: " << result.best_snd << " after "
              << result.evaluations << " evaluations\n";
  }
  emit(payload);
  return kExitOk;
}

int run_figure5(bool verbose) {
  const auto [f23, f33] = figure5_functions();
  json payload{{"functions", json::array({function_report(f23, 2), function_report(f33, 3)})},
               {"provenance", json{{"source", "built-in catalog"}}},
               {"status", "ok"}};
  if (verbose) {
    std::cerr << "H(2,3) function: snd=" << count_strong_domains(f23)
              << ", H(3,3) function: snd=" << count_strong_domains(f33) << "\n";
  }
  emit(payload);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenfunctions of Hamming graphs: constructions, nodal domain counts, "
               "equitable partitions, eigenspace search"};
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "Build a certified SND=2 eigenfunction for (n, q, i)");
  construct->add_option("--n", construct_args.n, "number of coordinates")->required();
  construct->add_option("--q", construct_args.q, "alphabet size")->required();
  construct->add_option("--i", construct_args.i, "eigenvalue index (lambda = q*i)")->required();
  construct->add_option("--out", construct_args.out, "write the function as JSON");
  construct->add_flag("-v,--verbose", construct_args.verbose);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the eigenfunction equation for a stored function");
  verify->add_option("--in", verify_args.in, "GridFunction JSON file")->required();
  verify->add_option("--lambda", verify_args.lambda, "eigenvalue (integer or rational)")->required();
  verify->add_flag("-v,--verbose", verify_args.verbose);

  CountArgs snd_args;
  auto* snd = app.add_subcommand("snd", "Strong nodal domain count of a stored function");
  snd->add_option("--in", snd_args.in)->required();
  snd->add_flag("-v,--verbose", snd_args.verbose);

  CountArgs wnd_args;
  auto* wnd = app.add_subcommand("wnd", "Weak nodal domain count of a stored function");
  wnd->add_option("--in", wnd_args.in)->required();
  wnd->add_flag("-v,--verbose", wnd_args.verbose);

  PartitionArgs partition_args;
  auto* partition = app.add_subcommand("partition", "Emit an equitable 2-partition");
  partition->add_option("--type", partition_args.type, "a, b or band")->required();
  partition->add_option("--n", partition_args.n);
  partition->add_option("--q", partition_args.q);
  partition->add_option("--k", partition_args.k, "block size for type a");
  partition->add_option("--translate", partition_args.translate, "translate by e_t");
  partition->add_flag("-v,--verbose", partition_args.verbose);

  BasisArgs basis_args;
  auto* basis = app.add_subcommand("basis", "Emit the integer basis of one eigenspace");
  basis->add_option("--n", basis_args.n)->required();
  basis->add_option("--q", basis_args.q)->required();
  basis->add_option("--i", basis_args.i)->required();
  basis->add_flag("-v,--verbose", basis_args.verbose);

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Minimize SND over one eigenspace");
  search_cmd->add_option("--n", search_args.n)->required();
  search_cmd->add_option("--q", search_args.q)->required();
  search_cmd->add_option("--i", search_args.i)->required();
  search_cmd->add_option("--mode", search_args.mode, "exhaustive or random");
  search_cmd->add_option("--range", search_args.range, "coefficient box half-width c");
  search_cmd->add_option("--samples", search_args.samples, "random starts");
  search_cmd->add_option("--local-steps", search_args.local_steps, "hill-climbing rounds");
  search_cmd->add_option("--seed", search_args.seed);
  search_cmd->add_option("--jobs", search_args.jobs, "worker threads");
  search_cmd->add_option("--out", search_args.out, "write the certificate as JSON");
  search_cmd->add_flag("-v,--verbose", search_args.verbose);

  bool figure5_verbose = false;
  auto* figure5 = app.add_subcommand(
      "figure5", "Emit the two reference functions with 3 and 4 strong domains");
  figure5->add_flag("-v,--verbose", figure5_verbose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (snd->parsed()) return run_count(snd_args, true);
    if (wnd->parsed()) return run_count(wnd_args, false);
    if (partition->parsed()) return run_partition(partition_args);
    if (basis->parsed()) return run_basis(basis_args);
    if (search_cmd->parsed()) return run_search(search_args);
    if (figure5->parsed()) return run_figure5(figure5_verbose);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
