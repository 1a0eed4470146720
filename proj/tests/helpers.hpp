#ifndef RIBBON_TESTS_HELPERS_HPP
#define RIBBON_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "ribbon/json_io.hpp"
#include "ribbon/ribbon_graph.hpp"
#include "ribbon/spanning_tree.hpp"

namespace fixtures {

inline ribbon::RibbonGraph b3_planar() {
  return ribbon::RibbonGraph::build({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}},
                                    {{"a", {"e1", "e2", "e3"}}, {"b", {"e3", "e2", "e1"}}});
}

inline ribbon::RibbonGraph b3_toroidal() {
  return ribbon::RibbonGraph::build({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}},
                                    {{"a", {"e1", "e2", "e3"}}, {"b", {"e1", "e2", "e3"}}});
}

inline ribbon::RibbonGraph b2() {
  return ribbon::RibbonGraph::build({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}},
                                    {{"a", {"e1", "e2"}}, {"b", {"e2", "e1"}}});
}

inline ribbon::SpanningTree tree(const ribbon::RibbonGraph& g, const std::vector<std::string>& ids) {
  return ribbon::parse_tree(g, ids);
}

inline std::vector<std::string> names(const ribbon::RibbonGraph& g, ribbon::SpanningTree t) {
  return ribbon::tree_to_json(g, t).get<std::vector<std::string>>();
}

inline ribbon::DartId dart(const ribbon::RibbonGraph& g, const std::string& name) {
  return g.parse_dart(name);
}

}  // namespace fixtures

#endif  // RIBBON_TESTS_HELPERS_HPP
