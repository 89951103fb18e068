#pragma once

#include "cosma/reach/reach_graph.hpp"

#include <string>

namespace cosma
{

// Graphviz text in BFS order. Node label: state tuple and outputs; edge label:
// the guard; the initial node is double-circled.
std::string to_dot( const reach_graph& rg );

// {"system", "env", "nodes": [{"id","states","outputs"}], "edges": [{"src","dst","guard"}]}
std::string to_json( const reach_graph& rg, int indent = 2 );

} // namespace cosma
