#ifndef HAMNODAL_JSON_IO_HPP
#define HAMNODAL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hamnodal/catalog.hpp"
#include "hamnodal/core.hpp"
#include "hamnodal/equitable.hpp"
#include "hamnodal/minimizer.hpp"
#include "hamnodal/nodal.hpp"

namespace hamnodal {

// GridFunction file format: {"n": int, "q": int, "values": [str, ...]} with
// q^n exact rationals "p" or "p/q" in index order. Integers are serialized
// without a denominator.
nlohmann::json grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const nlohmann::json& j);

GridFunction load_grid_function(const std::string& path);
void save_grid_function(const GridFunction& f, const std::string& path);

nlohmann::json partition_to_json(const EquitablePartition2& p);
nlohmann::json nodal_components_to_json(const std::vector<VertexSet>& components);
nlohmann::json courant_to_json(const CourantReport& report);
nlohmann::json recipe_to_json(const ConstructionRecipe& recipe);
nlohmann::json search_result_to_json(const SearchResult& result);

}  // namespace hamnodal

#endif
