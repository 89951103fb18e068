#include "cosma/vhdl/generate.hpp"

#include "cosma/model/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cosma::vhdl
{

namespace
{

struct token
{
    std::string text; // words lower-cased; strings keep their quotes
    std::size_t line;
};

std::vector<token> tokenize( std::string_view text )
{
    std::vector<token> out;
    std::size_t line = 1;
    for ( std::size_t i = 0; i < text.size(); )
    {
        char c = text[i];
        if ( c == '\n' )
        {
            ++line;
            ++i;
        }
        else if ( text.substr( i, 2 ) == "--" )
        {
            while ( i < text.size() && text[i] != '\n' )
                ++i;
        }
        else if ( std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' )
        {
            auto start = i;
            while ( i < text.size() && ( std::isalnum( static_cast<unsigned char>( text[i] ) ) || text[i] == '_' ) )
                ++i;
            std::string word( text.substr( start, i - start ) );
            for ( auto& ch : word )
                ch = static_cast<char>( std::tolower( static_cast<unsigned char>( ch ) ) );
            out.push_back( { word, line } );
        }
        else if ( c == '"' )
        {
            auto end = text.find( '"', i + 1 );
            if ( end == std::string_view::npos )
                end = text.size() - 1;
            out.push_back( { std::string( text.substr( i, end - i + 1 ) ), line } );
            i = end + 1;
        }
        else if ( std::isspace( static_cast<unsigned char>( c ) ) )
            ++i;
        else
        {
            out.push_back( { std::string( 1, c ), line } );
            ++i;
        }
    }
    return out;
}

std::string lower( std::string s )
{
    for ( auto& c : s )
        c = static_cast<char>( std::tolower( static_cast<unsigned char>( c ) ) );
    return s;
}

} // namespace

audit_report structural_audit( std::string_view text, const system& sys, const codegen_options& opts )
{
    audit_report report;
    auto tokens = tokenize( text );
    auto word = [&]( std::size_t i ) -> const std::string& {
        static const std::string none;
        return i < tokens.size() ? tokens[i].text : none;
    };

    // Ports: between `port (` and the matching `)`.
    std::map<std::string, std::size_t> ports;
    for ( std::size_t i = 0; i + 1 < tokens.size(); ++i )
    {
        if ( word( i ) != "port" || word( i + 1 ) != "(" )
            continue;
        int depth = 0;
        for ( std::size_t j = i + 1; j < tokens.size(); ++j )
        {
            if ( word( j ) == "(" )
                ++depth;
            else if ( word( j ) == ")" && --depth == 0 )
                break;
            else if ( word( j ) == ":" && j > 0 && ( word( j + 1 ) == "in" || word( j + 1 ) == "out" ) )
                ++ports[word( j - 1 )];
        }
        break;
    }
    std::vector<std::string> expected;
    for ( auto s : env_alphabet( sys ).united( produced_symbols( sys ) ) )
        expected.push_back( lower( sys.symbols.name( s ) ) );
    if ( opts.clock )
        expected.push_back( "clk" );
    for ( const auto& name : expected )
    {
        auto it = ports.find( name );
        auto n = it == ports.end() ? 0 : it->second;
        if ( n != 1 )
            report.issues.push_back( "symbol '" + name + "' is declared as a port " + std::to_string( n ) + " times" );
    }
    for ( const auto& [name, n] : ports )
        if ( std::find( expected.begin(), expected.end(), name ) == expected.end() )
            report.issues.push_back( "unexpected port '" + name + "'" );

    // Block balance and the `when` codes of each process.
    struct open_block
    {
        std::string kind;
        std::size_t line;
    };
    std::vector<open_block> stack;
    std::map<std::string, std::map<std::string, std::size_t>> when_codes; // process label -> code -> count
    std::map<std::string, std::size_t> process_count;
    std::string current_process;

    for ( std::size_t i = 0; i < tokens.size(); ++i )
    {
        const auto& w = word( i );
        bool after_end = i > 0 && word( i - 1 ) == "end";
        if ( w == "end" && ( word( i + 1 ) == "if" || word( i + 1 ) == "case" || word( i + 1 ) == "loop" ||
                             word( i + 1 ) == "process" ) )
        {
            const auto& kind = word( i + 1 );
            if ( stack.empty() || stack.back().kind != kind )
                report.issues.push_back( "line " + std::to_string( tokens[i].line ) + ": 'end " + kind +
                                         "' without a matching '" + kind + "'" +
                                         ( stack.empty() ? "" : " (innermost open block is '" + stack.back().kind + "')" ) );
            else
                stack.pop_back();
            if ( kind == "process" )
                current_process.clear();
            continue;
        }
        if ( after_end )
            continue;
        if ( w == "if" || w == "case" || w == "loop" )
            stack.push_back( { w, tokens[i].line } );
        else if ( w == "process" )
        {
            stack.push_back( { w, tokens[i].line } );
            current_process = i >= 2 && word( i - 1 ) == ":" ? word( i - 2 ) : "";
            ++process_count[current_process];
            ++report.processes;
        }
        else if ( w == "when" && !current_process.empty() && word( i + 1 ).size() >= 2 && word( i + 1 ).front() == '"' )
            ++when_codes[current_process][word( i + 1 ).substr( 1, word( i + 1 ).size() - 2 )];
    }
    for ( const auto& b : stack )
        report.issues.push_back( "line " + std::to_string( b.line ) + ": '" + b.kind + "' is never closed" );

    if ( report.processes != sys.machines.size() )
        report.issues.push_back( std::to_string( report.processes ) + " processes for " +
                                 std::to_string( sys.machines.size() ) + " machines" );
    for ( const auto& m : sys.machines )
    {
        auto label = lower( m.name + "_proc" );
        if ( process_count[label] != 1 )
        {
            report.issues.push_back( "machine '" + m.name + "' has " + std::to_string( process_count[label] ) +
                                     " processes" );
            continue;
        }
        auto codes = state_codes( m, opts );
        for ( std::size_t s = 0; s < m.states.size(); ++s )
        {
            auto n = when_codes[label][codes[s]];
            if ( n != 1 )
                report.issues.push_back( "machine '" + m.name + "', state '" + m.states[s].name + "': code \"" +
                                         codes[s] + "\" appears in " + std::to_string( n ) + " 'when' branches" );
        }
    }
    return report;
}

} // namespace cosma::vhdl
