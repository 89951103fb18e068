#include "cosma/reach/export.hpp"

#include "cosma/model/semantics.hpp"

#include <json.hpp>

#include <sstream>

namespace cosma
{

namespace
{

std::string dot_string( const std::string& s )
{
    std::string out = "\"";
    for ( char c : s )
    {
        if ( c == '\n' )
        {
            out += "\\n";
            continue;
        }
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_dot( const reach_graph& rg )
{
    const auto& sys = rg.model();
    std::ostringstream out;
    out << "digraph " << dot_string( sys.name ) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=ellipse];\n";
    for ( std::size_t n = 0; n < rg.node_count(); ++n )
    {
        auto label = format_state( sys, rg.node( n ) );
        if ( !rg.outputs( n ).empty() )
            label += "\n" + to_string( rg.outputs( n ), sys.symbols, " " );
        out << "  n" << n << " [label=" << dot_string( label );
        if ( n == 0 )
            out << ", shape=doublecircle";
        out << "];\n";
    }
    for ( const auto& e : rg.edges() )
        out << "  n" << e.source << " -> n" << e.target << " [label=" << dot_string( to_string( e.guard, sys.symbols ) )
            << "];\n";
    out << "}\n";
    return out.str();
}

std::string to_json( const reach_graph& rg, int indent )
{
    const auto& sys = rg.model();
    nlohmann::ordered_json doc;
    doc["system"] = sys.name;
    doc["env"] = nlohmann::ordered_json::array();
    for ( auto s : rg.env() )
        doc["env"].push_back( sys.symbols.name( s ) );

    auto nodes = nlohmann::ordered_json::array();
    for ( std::size_t n = 0; n < rg.node_count(); ++n )
    {
        nlohmann::ordered_json node;
        node["id"] = n;
        auto states = nlohmann::ordered_json::array();
        const auto& g = rg.node( n );
        for ( std::size_t k = 0; k < g.size(); ++k )
            states.push_back( sys.machines[k].states[g[k]].name );
        node["states"] = std::move( states );
        auto outputs = nlohmann::ordered_json::array();
        for ( auto s : rg.outputs( n ) )
            outputs.push_back( sys.symbols.name( s ) );
        node["outputs"] = std::move( outputs );
        nodes.push_back( std::move( node ) );
    }
    doc["nodes"] = std::move( nodes );

    auto edges = nlohmann::ordered_json::array();
    for ( const auto& e : rg.edges() )
        edges.push_back( { { "src", e.source }, { "dst", e.target }, { "guard", to_string( e.guard, sys.symbols ) } } );
    doc["edges"] = std::move( edges );
    return doc.dump( indent );
}

} // namespace cosma
