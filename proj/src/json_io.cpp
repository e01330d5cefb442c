#include "hamnodal/json_io.hpp"

#include <fstream>

namespace hamnodal {

using nlohmann::json;

json grid_function_to_json(const GridFunction& f) {
  json values = json::array();
  for (VertexIndex x = 0; x < f.size(); ++x) {
    values.push_back(rational_to_string(f.at(x)));
  }
  return json{{"n", f.params().n()}, {"q", f.params().q()}, {"values", std::move(values)}};
}

GridFunction grid_function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("q") || !j.contains("values")) {
    throw Error("grid function JSON must be an object with fields n, q, values");
  }
  GraphParams params(j.at("n").get<int>(), j.at("q").get<int>());
  const auto& values = j.at("values");
  if (!values.is_array() || values.size() != params.vertex_count()) {
    throw LengthMismatch("values must hold exactly q^n entries");
  }
  std::vector<Rational> parsed;
  parsed.reserve(values.size());
  for (const auto& v : values) {
    if (v.is_number_integer()) {
      parsed.emplace_back(v.get<std::int64_t>());
    } else if (v.is_string()) {
      parsed.push_back(parse_rational(v.get<std::string>()));
    } else {
      throw Error("values entries must be rational strings");
    }
  }
  return GridFunction(params, std::move(parsed));
}

GridFunction load_grid_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("cannot parse '" + path + "': " + e.what());
  }
  try {
    return grid_function_from_json(j);
  } catch (const Error& e) {
    throw Error("'" + path + "': " + e.what());
  }
}

void save_grid_function(const GridFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << grid_function_to_json(f).dump(2) << "\n";
}

json partition_to_json(const EquitablePartition2& p) {
  const auto& s = p.quotient();
  return json{{"c1", p.c1().to_indices()},
              {"n", p.params().n()},
              {"q", p.params().q()},
              {"quotient", json::array({json::array({s[0][0], s[0][1]}),
                                        json::array({s[1][0], s[1][1]})})}};
}

json nodal_components_to_json(const std::vector<VertexSet>& components) {
  json out = json::array();
  for (const auto& comp : components) out.push_back(comp.to_indices());
  return out;
}

json courant_to_json(const CourantReport& report) {
  return json{{"k", report.k},
              {"r", report.r},
              {"snd", report.snd},
              {"snd_bound_ok", report.snd_bound_ok},
              {"snd_slack", report.snd_slack},
              {"wnd", report.wnd},
              {"wnd_bound_ok", report.wnd_bound_ok},
              {"wnd_slack", report.wnd_slack}};
}

json recipe_to_json(const ConstructionRecipe& recipe) {
  json route = json::array();
  for (const auto& step : recipe.route) route.push_back(step.to_string());
  return json{{"i", recipe.i}, {"n", recipe.n}, {"q", recipe.q}, {"route", std::move(route)}};
}

json search_result_to_json(const SearchResult& result) {
  return json{{"best_snd", result.best_snd},
              {"certificate", grid_function_to_json(result.certificate)},
              {"coefficients", result.coefficients},
              {"evaluations", result.evaluations},
              {"grid_exact", result.grid_exact},
              {"method", result.method},
              {"seed", result.seed}};
}

}  // namespace hamnodal
