#include "cosma/vhdl/generate.hpp"

#include "cosma/error.hpp"
#include "cosma/formula/satisfiable.hpp"
#include "cosma/model/semantics.hpp"
#include "cosma/reach/symbolic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace cosma::vhdl
{

namespace
{

constexpr std::array<std::string_view, 97> reserved = {
    "abs",       "access",    "after",     "alias",    "all",        "and",           "architecture",
    "array",     "assert",    "attribute", "begin",    "block",      "body",          "buffer",
    "bus",       "case",      "component", "configuration", "constant", "disconnect", "downto",
    "else",      "elsif",     "end",       "entity",   "exit",       "file",          "for",
    "function",  "generate",  "generic",   "group",    "guarded",    "if",            "impure",
    "in",        "inertial",  "inout",     "is",       "label",      "library",       "linkage",
    "literal",   "loop",      "map",       "mod",      "nand",       "new",           "next",
    "nor",       "not",       "null",      "of",       "on",         "open",          "or",
    "others",    "out",       "package",   "port",     "postponed",  "procedure",     "process",
    "pure",      "range",     "record",    "register", "reject",     "rem",           "report",
    "return",    "rol",       "ror",       "select",   "severity",   "signal",        "shared",
    "sla",       "sll",       "sra",       "srl",      "subtype",    "then",          "to",
    "transport", "type",      "unaffected", "units",   "until",      "use",           "variable",
    "wait",      "when",      "while",     "with",     "xnor",       "xor",
};

std::string lower( std::string_view s )
{
    std::string out( s );
    for ( auto& c : out )
        c = static_cast<char>( std::tolower( static_cast<unsigned char>( c ) ) );
    return out;
}

std::string to_binary( std::size_t value, std::size_t width )
{
    std::string out( width, '0' );
    for ( std::size_t i = 0; i < width; ++i )
        if ( ( value >> i ) & 1u )
            out[width - 1 - i] = '1';
    return out;
}

struct layout
{
    symbol_set env;
    symbol_set produced;
    std::vector<symbol_set> produced_by; // per machine
    std::map<symbol, std::size_t> producer;
};

layout analyse( const system& sys )
{
    layout l;
    l.env = env_alphabet( sys );
    l.produced = produced_symbols( sys );
    for ( std::size_t k = 0; k < sys.machines.size(); ++k )
    {
        symbol_set mine;
        for ( const auto& s : sys.machines[k].states )
            mine = mine.united( s.outputs );
        for ( auto s : mine )
        {
            auto [it, fresh] = l.producer.emplace( s, k );
            if ( !fresh )
                throw validation_error( "symbol '" + sys.symbols.name( s ) + "' is produced by machines '" +
                                        sys.machines[it->second].name + "' and '" + sys.machines[k].name +
                                        "'; a VHDL signal can have only one driving process" );
        }
        l.produced_by.push_back( std::move( mine ) );
    }
    return l;
}

std::string signal_of( symbol s, const layout& l, const symbol_table& table )
{
    // Out ports cannot be read in VHDL-93, so guards read the internal copy.
    return l.env.contains( s ) ? table.name( s ) : table.name( s ) + "_r";
}

// Guard text: `*` -> and, `+` -> or, `~` -> not, atom -> (Sym='1'). VHDL does
// not rank `and` against `or`, so mixed operators are always parenthesised.
std::string guard_text( const expr& e, const layout& l, const symbol_table& table, expr_kind parent )
{
    switch ( e.kind() )
    {
    case expr_kind::constant_false: return "false";
    case expr_kind::constant_true: return "true";
    case expr_kind::atom: return "(" + signal_of( e.atom_symbol(), l, table ) + "='1')";
    case expr_kind::negation:
        if ( e.lhs().kind() == expr_kind::negation )
            return "not (" + guard_text( e.lhs(), l, table, expr_kind::atom ) + ")";
        return "not " + guard_text( e.lhs(), l, table, expr_kind::negation );
    case expr_kind::conjunction:
    case expr_kind::disjunction:
    {
        auto op = e.kind() == expr_kind::conjunction ? " and " : " or ";
        auto body = guard_text( e.lhs(), l, table, e.kind() ) + op + guard_text( e.rhs(), l, table, e.kind() );
        if ( parent == e.kind() || parent == expr_kind::atom )
            return body;
        return "(" + body + ")";
    }
    }
    return "false";
}

void check_names( const system& sys, const layout& l, const std::string& entity, const codegen_options& opts )
{
    std::map<std::string, std::string> taken; // lower-case name -> what it is
    auto claim = [&]( const std::string& name, const std::string& what ) {
        if ( !is_legal_identifier( name ) )
            throw validation_error( what + " '" + name + "' is not a legal VHDL identifier; rename it, e.g. to '" +
                                    suggest_identifier( name ) + "'" );
        auto [it, fresh] = taken.emplace( lower( name ), what + " '" + name + "'" );
        if ( !fresh )
            throw validation_error( what + " '" + name + "' clashes with " + it->second +
                                    " (VHDL identifiers ignore case); rename one of them, e.g. to '" +
                                    suggest_identifier( name + "_1" ) + "'" );
    };

    claim( entity, "entity name" );
    if ( opts.clock )
        claim( "clk", "clock port" );
    for ( auto s : l.env )
        claim( sys.symbols.name( s ), "symbol" );
    for ( auto s : l.produced )
    {
        claim( sys.symbols.name( s ), "symbol" );
        claim( sys.symbols.name( s ) + "_r", "internal signal for symbol" );
    }
    for ( const auto& m : sys.machines )
    {
        claim( m.name + "_state", "state signal of machine" );
        claim( m.name + "_proc", "process of machine" );
    }
    // Process-local names must not hide any port or signal.
    for ( auto s : l.produced )
        claim( "new" + sys.symbols.name( s ), "prepared variable for symbol" );
    claim( "current_state", "state variable" );
    claim( "newstate", "state variable" );
}

bool overlapping( const expr& a, const expr& b )
{
    return satisfiable( a && b, atoms( a ).united( atoms( b ) ) );
}

} // namespace

bool is_reserved_word( std::string_view word )
{
    auto w = lower( word );
    return std::find( reserved.begin(), reserved.end(), w ) != reserved.end();
}

bool is_legal_identifier( std::string_view name )
{
    if ( name.empty() || !std::isalpha( static_cast<unsigned char>( name.front() ) ) || name.back() == '_' )
        return false;
    for ( std::size_t i = 0; i < name.size(); ++i )
    {
        auto c = static_cast<unsigned char>( name[i] );
        if ( !std::isalnum( c ) && c != '_' )
            return false;
        if ( c == '_' && i > 0 && name[i - 1] == '_' )
            return false;
    }
    return !is_reserved_word( name );
}

std::string suggest_identifier( std::string_view name )
{
    std::string out;
    for ( char c : name )
    {
        bool ok = std::isalnum( static_cast<unsigned char>( c ) );
        if ( ok )
            out += c;
        else if ( !out.empty() && out.back() != '_' )
            out += '_';
    }
    while ( !out.empty() && out.back() == '_' )
        out.pop_back();
    if ( out.empty() || !std::isalpha( static_cast<unsigned char>( out.front() ) ) )
        out = "S_" + out;
    while ( !is_legal_identifier( out ) )
        out += "_s";
    return out;
}

codegen_options parse_encoding( std::string_view text, codegen_options base )
{
    if ( text == "binary" )
        base.encoding = encoding_kind::binary;
    else if ( text == "onehot" )
        base.encoding = encoding_kind::onehot;
    else if ( text.substr( 0, 6 ) == "width:" )
    {
        auto digits = text.substr( 6 );
        std::size_t width = 0;
        auto [ptr, ec] = std::from_chars( digits.data(), digits.data() + digits.size(), width );
        if ( ec != std::errc{} || ptr != digits.data() + digits.size() || width == 0 || width > 64 )
            throw validation_error( "bad state width in '" + std::string( text ) + "'; expected width:N with 1 <= N <= 64" );
        base.encoding = encoding_kind::explicit_width;
        base.width = width;
    }
    else
        throw validation_error( "unknown state encoding '" + std::string( text ) +
                                "'; expected binary, onehot or width:N" );
    return base;
}

std::vector<std::string> state_codes( const machine& m, const codegen_options& opts )
{
    auto n = m.states.size();
    std::vector<std::string> out;
    switch ( opts.encoding )
    {
    case encoding_kind::binary:
    {
        auto width = std::max<std::size_t>( 1, bits_for( n ) );
        for ( std::size_t i = 0; i < n; ++i )
            out.push_back( to_binary( i, width ) );
        break;
    }
    case encoding_kind::onehot:
        for ( std::size_t i = 0; i < n; ++i )
            out.push_back( to_binary( std::size_t{ 1 } << i, n ) );
        break;
    case encoding_kind::explicit_width:
        if ( opts.width < 64 && ( std::size_t{ 1 } << opts.width ) < n )
            throw validation_error( "machine '" + m.name + "' has " + std::to_string( n ) + " states, which do not fit in " +
                                    std::to_string( opts.width ) + " bits" );
        for ( std::size_t i = 0; i < n; ++i )
            out.push_back( to_binary( i, opts.width ) );
        break;
    }
    return out;
}

std::string generate( const system& sys, const codegen_options& opts )
{
    auto l = analyse( sys );
    auto entity = opts.entity.empty() ? sys.name : opts.entity;
    check_names( sys, l, entity, opts );
    const auto& table = sys.symbols;

    auto initial_outputs = output_valuation( sys, initial_state( sys ) );
    auto bit = []( bool b ) { return b ? std::string( "'1'" ) : std::string( "'0'" ); };

    std::ostringstream out;
    out << "-- Generated by cosma from system " << sys.name << ".\n";
    out << "-- One process per machine; outputs are latched at the end of each cycle.\n\n";

    out << "entity " << entity << " is\n  port (\n";
    std::vector<std::string> ports;
    if ( opts.clock )
        ports.push_back( "clk : in BIT" );
    for ( auto s : l.env )
        ports.push_back( table.name( s ) + " : in BIT" );
    for ( auto s : l.produced )
        ports.push_back( table.name( s ) + " : out BIT" );
    for ( std::size_t i = 0; i < ports.size(); ++i )
        out << "    " << ports[i] << ( i + 1 < ports.size() ? ";" : "" ) << "\n";
    out << "  );\nend " << entity << ";\n\n";

    out << "architecture " << entity << " of " << entity << " is\n";
    std::vector<std::vector<std::string>> codes;
    for ( const auto& m : sys.machines )
    {
        codes.push_back( state_codes( m, opts ) );
        const auto& c = codes.back();
        out << "  signal " << m.name << "_state : BIT_VECTOR (" << c[0].size() - 1 << " downto 0) :=\""
            << c[m.initial_index] << "\";\n";
    }
    for ( auto s : l.produced )
        out << "  signal " << table.name( s ) << "_r : BIT :=" << bit( initial_outputs.contains( s ) ) << ";\n";
    out << "begin\n";
    for ( auto s : l.produced )
        out << "  " << table.name( s ) << " <= " << table.name( s ) << "_r;\n";

    for ( std::size_t k = 0; k < sys.machines.size(); ++k )
    {
        const auto& m = sys.machines[k];
        const auto& c = codes[k];
        const auto& mine = l.produced_by[k];
        auto width = c[0].size();
        auto vec = "BIT_VECTOR (" + std::to_string( width - 1 ) + " downto 0)";
        const auto& init = c[m.initial_index];

        auto assign = [&]( std::ostringstream& o, std::size_t target, const std::string& pad ) {
            o << pad << "newstate := \"" << c[target] << "\";\n";
            for ( auto s : mine )
                o << pad << "new" << table.name( s ) << " := " << bit( m.states[target].outputs.contains( s ) )
                  << ";\n";
        };

        out << "\n  -- machine " << m.name << "\n";
        out << "  " << m.name << "_proc : process\n";
        out << "    variable current_state : " << vec << " :=\"" << init << "\";\n";
        out << "    variable newstate : " << vec << " :=\"" << init << "\";\n";
        for ( auto s : mine )
            out << "    variable new" << table.name( s ) << " : BIT :="
                << bit( m.states[m.initial_index].outputs.contains( s ) ) << ";\n";
        out << "  begin\n";
        out << "    loop\n";
        out << "      case current_state is\n";
        for ( std::size_t si = 0; si < m.states.size(); ++si )
        {
            const auto& arcs = m.outgoing[si];
            out << "        when \"" << c[si] << "\" =>  -- " << m.states[si].name << "\n";
            bool overlap = false;
            for ( std::size_t i = 0; i < arcs.size() && !overlap; ++i )
                for ( std::size_t j = i + 1; j < arcs.size() && !overlap; ++j )
                    overlap = m.arcs[arcs[i]].to != m.arcs[arcs[j]].to &&
                              overlapping( m.arcs[arcs[i]].guard, m.arcs[arcs[j]].guard );
            if ( overlap )
                out << "          -- guards overlap here: the first listed arc wins\n";

            if ( arcs.empty() )
            {
                assign( out, si, "          " );
                continue;
            }
            if ( arcs.size() == 1 && m.arcs[arcs[0]].guard.is_true() )
            {
                assign( out, m.arcs[arcs[0]].to, "          " );
                continue;
            }
            for ( std::size_t i = 0; i < arcs.size(); ++i )
            {
                const auto& a = m.arcs[arcs[i]];
                out << "          " << ( i == 0 ? "if " : "elsif " )
                    << guard_text( a.guard, l, table, expr_kind::atom ) << " then\n";
                assign( out, a.to, "            " );
            }
            // The implicit stay only needs a branch when the guards leave a gap.
            expr any = expr::falsity();
            symbol_set used;
            for ( auto ai : arcs )
            {
                any = any || m.arcs[ai].guard;
                used = used.united( atoms( m.arcs[ai].guard ) );
            }
            if ( !tautology( any, used ) )
            {
                out << "          else\n";
                assign( out, si, "            " );
            }
            out << "          end if;\n";
        }
        out << "        when others =>\n          null;\n";
        out << "      end case;\n";
        out << "      current_state := newstate;\n";
        out << "      " << m.name << "_state <= newstate;\n";
        for ( auto s : mine )
            out << "      " << table.name( s ) << "_r <= new" << table.name( s ) << ";\n";
        if ( opts.clock )
            out << "      wait until clk'event and clk = '1';\n";
        else
            out << "      wait for " << opts.delay_ns << " ns;\n";
        out << "    end loop;\n";
        out << "  end process " << m.name << "_proc;\n";
    }
    out << "end " << entity << ";\n";
    return out.str();
}

} // namespace cosma::vhdl
