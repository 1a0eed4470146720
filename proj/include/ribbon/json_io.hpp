#ifndef RIBBON_JSON_IO_HPP
#define RIBBON_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ribbon/rotor.hpp"
#include "ribbon/sandpile.hpp"
#include "ribbon/spanning_tree.hpp"

namespace ribbon {

/// {"vertices":[...],"edges":[{"id":..,"ends":[..,..]}],"rotation":{v:[edge ids]}}
/// Syntax errors are reported with line and column.
RibbonGraph parse_graph_json(std::string_view text);
RibbonGraph load_graph_file(const std::string& path);
nlohmann::ordered_json graph_to_json(const RibbonGraph& g);

/// {"a": 1, "b": -1}; absent vertices are 0.
Divisor parse_divisor_json(const RibbonGraph& g, std::string_view text);
nlohmann::ordered_json divisor_to_json(const RibbonGraph& g, const Divisor& d);

SpanningTree parse_tree(const RibbonGraph& g, const std::vector<std::string>& edge_ids);
/// Sorted edge-id array.
nlohmann::ordered_json tree_to_json(const RibbonGraph& g, SpanningTree t);

nlohmann::ordered_json path_to_json(const RibbonGraph& g, const DirectedPath& p);
nlohmann::ordered_json cycle_to_json(const RibbonGraph& g, const DirectedCycle& c);

/// Splits "a,b,c" (empty string gives an empty list).
std::vector<std::string> split_list(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace ribbon

#endif  // RIBBON_JSON_IO_HPP
