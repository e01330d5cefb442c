#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "hamnodal/catalog.hpp"
#include "hamnodal/equitable.hpp"
#include "hamnodal/json_io.hpp"
#include "hamnodal/minimizer.hpp"
#include "hamnodal/nodal.hpp"
#include "hamnodal/spectra.hpp"

namespace py = pybind11;
using namespace hamnodal;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    json out = json::object();
    for (const auto& item : obj.cast<py::dict>()) {
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return out;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    json out = json::array();
    for (const auto& item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw py::type_error("unsupported value in function object");
}

GridFunction function_in(const py::dict& obj) {
  return grid_function_from_json(py_to_json(obj));
}

py::object function_out(const GridFunction& f) {
  return json_to_py(grid_function_to_json(f));
}

Rational lambda_in(const py::handle& value) {
  if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
  return parse_rational(value.cast<std::string>());
}

EquitablePartition2 partition_in(const py::dict& obj) {
  const json j = py_to_json(obj);
  GraphParams params(j.at("n").get<int>(), j.at("q").get<int>());
  VertexSet c1(params);
  for (const auto& idx : j.at("c1")) c1.set(idx.get<VertexIndex>());
  return verify_equitable(params, c1, c1.complement());
}

py::object partition_out(const EquitablePartition2& p) {
  return json_to_py(partition_to_json(p));
}

SearchConfig config_in(int n, int q, int i, const std::string& mode, int range,
                       std::uint64_t samples, int local_steps, std::uint64_t seed,
                       int jobs) {
  SearchConfig config;
  config.target = {n, q, i};
  config.seed = seed;
  config.jobs = jobs;
  if (mode == "exhaustive") {
    config.mode = ExhaustiveMode{range};
  } else if (mode == "random") {
    config.mode = RandomizedMode{samples, local_steps, range};
  } else {
    throw Error("unknown search mode '" + mode + "'");
  }
  return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact eigenfunctions of Hamming graphs H(n,q): constructions with two "
            "strong nodal domains, nodal domain counting, equitable 2-partitions and "
            "eigenspace search. Functions travel as {'n', 'q', 'values'} dicts with "
            "exact rational strings.";

  py::register_exception<Error>(m, "HamnodalError", PyExc_ValueError);

  m.def("eigenvalue",
        [](int n, int q, int i) { return eigenvalue(GraphParams(n, q), i); },
        py::arg("n"), py::arg("q"), py::arg("i"));
  m.def("multiplicity",
        [](int n, int q, int i) { return multiplicity(GraphParams(n, q), i); },
        py::arg("n"), py::arg("q"), py::arg("i"));
  m.def("courant_position",
        [](int n, int q, int i) {
          const auto pos = courant_position(GraphParams(n, q), i);
          return py::make_tuple(pos.k, pos.r);
        },
        py::arg("n"), py::arg("q"), py::arg("i"),
        "1-based rank k of eigenvalue q*i in the sorted spectrum plus its multiplicity r");

  m.def("laplacian_apply",
        [](const py::dict& f) { return function_out(laplacian_apply(function_in(f))); },
        py::arg("f"));
  m.def("is_eigenfunction",
        [](const py::dict& f, const py::handle& lam) {
          return is_eigenfunction(function_in(f), lambda_in(lam));
        },
        py::arg("f"), py::arg("lam"));
  m.def("translate_function",
        [](const py::dict& f, int t) {
          return function_out(translate_function(function_in(f), t));
        },
        py::arg("f"), py::arg("t"));
  m.def("tensor_product",
        [](const py::dict& f1, const py::dict& f2) {
          return function_out(tensor_product(function_in(f1), function_in(f2)));
        },
        py::arg("f1"), py::arg("f2"));
  m.def("extend_by_constant",
        [](const py::dict& f, int extra) {
          return function_out(extend_by_constant(function_in(f), extra));
        },
        py::arg("f"), py::arg("extra"));
  m.def("eigenspace_basis",
        [](int n, int q, int i) {
          py::list out;
          for (const auto& f : eigenspace_basis(GraphParams(n, q), i)) {
            out.append(function_out(f));
          }
          return out;
        },
        py::arg("n"), py::arg("q"), py::arg("i"));

  m.def("snd",
        [](const py::dict& f) { return count_strong_domains(function_in(f)); },
        py::arg("f"));
  m.def("wnd",
        [](const py::dict& f) { return count_weak_domains(function_in(f)); },
        py::arg("f"));
  m.def("nodal_report",
        [](const py::dict& f) {
          const NodalReport rep = nodal_report(function_in(f));
          json out{{"snd", rep.snd},
                   {"wnd", rep.wnd},
                   {"positive_strong", nodal_components_to_json(rep.positive_strong)},
                   {"negative_strong", nodal_components_to_json(rep.negative_strong)},
                   {"positive_weak", nodal_components_to_json(rep.positive_weak)},
                   {"negative_weak", nodal_components_to_json(rep.negative_weak)}};
          return json_to_py(out);
        },
        py::arg("f"));
  m.def("check_courant",
        [](const py::dict& f, int i) {
          return json_to_py(courant_to_json(check_courant(function_in(f), i)));
        },
        py::arg("f"), py::arg("i"));

  m.def("type_a_partition", [](int k) { return partition_out(type_a_partition(k)); },
        py::arg("k"));
  m.def("type_b_partition",
        [](int n, int q) { return partition_out(type_b_partition(GraphParams(n, q))); },
        py::arg("n"), py::arg("q"));
  m.def("level_band_partition",
        [](int n, int q) {
          return partition_out(level_band_partition(GraphParams(n, q)));
        },
        py::arg("n"), py::arg("q"));
  m.def("translate_partition",
        [](const py::dict& p, int t) {
          return partition_out(translate_partition(partition_in(p), t));
        },
        py::arg("p"), py::arg("t"));
  m.def("verify_equitable",
        [](int n, int q, const std::vector<VertexIndex>& c1_indices) {
          GraphParams params(n, q);
          VertexSet c1(params);
          for (auto idx : c1_indices) c1.set(idx);
          return partition_out(verify_equitable(params, c1, c1.complement()));
        },
        py::arg("n"), py::arg("q"), py::arg("c1"),
        "Verifies that (c1, complement) is an equitable 2-partition");
  m.def("associated_function",
        [](const py::dict& p) { return function_out(associated_function(partition_in(p))); },
        py::arg("p"));

  m.def("phi", [](int j) { return function_out(phi(j)); }, py::arg("j"));
  m.def("psi", [](int j) { return function_out(psi(j)); }, py::arg("j"));
  m.def("u2_33", []() { return function_out(u2_33()); });
  m.def("lambda1_snd2",
        [](int n, int q) { return function_out(lambda1_snd2(GraphParams(n, q))); },
        py::arg("n"), py::arg("q"));
  m.def("construct_q2_odd", [](int k) { return function_out(construct_q2_odd(k)); },
        py::arg("k"));
  m.def("construct_q2_even", [](int k) { return function_out(construct_q2_even(k)); },
        py::arg("k"));
  m.def("construct_q3", [](int mm) { return function_out(construct_q3(mm)); },
        py::arg("m"));
  m.def("construct_q_ge4",
        [](int n, int q) { return function_out(construct_q_ge4(GraphParams(n, q))); },
        py::arg("n"), py::arg("q"));
  m.def("figure5_functions", []() {
    const auto [f23, f33] = figure5_functions();
    return py::make_tuple(function_out(f23), function_out(f33));
  });

  m.def("construct_snd2",
        [](int n, int q, int i) {
          const ConstructOutcome outcome = construct_snd2(n, q, i);
          json out{{"n", n}, {"q", q}, {"i", i}, {"supported", outcome.supported()}};
          if (outcome.supported()) {
            out["function"] = grid_function_to_json(outcome.value->f);
            out["snd"] = outcome.value->snd;
            out["wnd"] = outcome.value->wnd;
            out["eigenvalue"] = eigenvalue(outcome.value->f.params(), i);
            out["route"] = recipe_to_json(outcome.value->recipe)["route"];
          } else {
            out["reason"] = outcome.unsupported_reason;
          }
          return json_to_py(out);
        },
        py::arg("n"), py::arg("q"), py::arg("i"));

  m.def("evaluate",
        [](const std::vector<std::int64_t>& coefficients, int n, int q, int i) {
          const auto [f, snd] = evaluate(coefficients, SearchTarget{n, q, i});
          return py::make_tuple(function_out(f), snd);
        },
        py::arg("coefficients"), py::arg("n"), py::arg("q"), py::arg("i"));

  m.def("search",
        [](int n, int q, int i, const std::string& mode, int range,
           std::uint64_t samples, int local_steps, std::uint64_t seed, int jobs) {
          const SearchResult result =
              search(config_in(n, q, i, mode, range, samples, local_steps, seed, jobs));
          return json_to_py(search_result_to_json(result));
        },
        py::arg("n"), py::arg("q"), py::arg("i"), py::arg("mode") = "exhaustive",
        py::arg("range") = 2, py::arg("samples") = 1000, py::arg("local_steps") = 50,
        py::arg("seed") = 0, py::arg("jobs") = 1);

  m.def("verify_conjecture_evidence",
        [](int n_max, std::uint64_t seed) {
          py::list out;
          for (const auto& row : verify_conjecture_evidence(n_max, seed)) {
            json j{{"n", row.n},
                   {"best_snd_found", row.best_snd_found},
                   {"conjectured_min", row.conjectured_min},
                   {"matches", row.matches}};
            out.append(json_to_py(j));
          }
          return out;
        },
        py::arg("n_max"), py::arg("seed") = 0,
        "Best SND found by the pinned searches on (n, 3, n) versus n+1; "
        "upper-bound evidence only");
}
