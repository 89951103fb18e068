#include "cosma/frontend/parser.hpp"

#include <algorithm>
#include <sstream>

namespace cosma
{

std::string print_system( const system& sys )
{
    std::ostringstream out;
    out << "system " << sys.name << " {\n";
    for ( const auto& m : sys.machines )
    {
        out << "  machine " << m.name << " {\n";
        out << "    init " << m.initial << ";\n";
        for ( std::size_t si = 0; si < m.states.size(); ++si )
        {
            const auto& s = m.states[si];
            out << "    state " << s.name << " {\n";
            if ( !s.outputs.empty() )
                out << "      out " << to_string( s.outputs, sys.symbols ) << ";\n";
            for ( const auto& a : m.arcs )
                if ( a.source == s.name )
                    out << "      -> " << a.target << " when " << to_string( a.guard, sys.symbols ) << ";\n";
            out << "    }\n";
        }
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

std::string print_queries( const query_set& queries )
{
    std::ostringstream out;
    for ( const auto& item : queries.items )
    {
        if ( const auto* q = std::get_if<implication_query>( &item.body ) )
            out << item.name << ": always (" << to_string( q->antecedent, queries.symbols ) << " => "
                << to_string( q->mode ) << " " << to_string( q->consequent, queries.symbols ) << ");\n";
        else
            out << "ctl " << item.name << ": " << to_string( std::get<ctl_formula>( item.body ), queries.symbols ) << ";\n";
    }
    return out.str();
}

namespace
{

std::vector<std::string> names_of( const symbol_set& set, const symbol_table& table )
{
    std::vector<std::string> out;
    for ( auto s : set )
        out.push_back( table.name( s ) );
    std::sort( out.begin(), out.end() );
    return out;
}

} // namespace

bool structurally_equal( const system& a, const system& b )
{
    if ( a.name != b.name || a.machines.size() != b.machines.size() )
        return false;
    for ( std::size_t k = 0; k < a.machines.size(); ++k )
    {
        const auto& ma = a.machines[k];
        const auto& mb = b.machines[k];
        if ( ma.name != mb.name || ma.initial != mb.initial || ma.states.size() != mb.states.size() ||
             ma.arcs.size() != mb.arcs.size() )
            return false;
        for ( std::size_t i = 0; i < ma.states.size(); ++i )
            if ( ma.states[i].name != mb.states[i].name ||
                 names_of( ma.states[i].outputs, a.symbols ) != names_of( mb.states[i].outputs, b.symbols ) )
                return false;
        for ( std::size_t i = 0; i < ma.arcs.size(); ++i )
            if ( ma.arcs[i].source != mb.arcs[i].source || ma.arcs[i].target != mb.arcs[i].target ||
                 to_string( ma.arcs[i].guard, a.symbols ) != to_string( mb.arcs[i].guard, b.symbols ) )
                return false;
    }
    return true;
}

} // namespace cosma
