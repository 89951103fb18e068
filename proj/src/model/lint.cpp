#include "cosma/model/lint.hpp"

#include "cosma/formula/satisfiable.hpp"
#include "cosma/model/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace cosma
{

std::size_t lint_report::count( severity s ) const
{
    return static_cast<std::size_t>(
        std::count_if( items.begin(), items.end(), [s]( const diagnostic& d ) { return d.severity == s; } ) );
}

namespace
{

std::size_t edit_distance( std::string_view a, std::string_view b )
{
    std::vector<std::size_t> row( b.size() + 1 );
    for ( std::size_t j = 0; j <= b.size(); ++j )
        row[j] = j;
    for ( std::size_t i = 1; i <= a.size(); ++i )
    {
        std::size_t diag = row[0];
        row[0] = i;
        for ( std::size_t j = 1; j <= b.size(); ++j )
        {
            std::size_t up = row[j];
            row[j] = std::min( { row[j] + 1, row[j - 1] + 1, diag + ( a[i - 1] == b[j - 1] ? 0 : 1 ) } );
            diag = up;
        }
    }
    return row[b.size()];
}

bool iequals( std::string_view a, std::string_view b )
{
    return a.size() == b.size() && std::equal( a.begin(), a.end(), b.begin(), []( char x, char y ) {
               return std::tolower( static_cast<unsigned char>( x ) ) == std::tolower( static_cast<unsigned char>( y ) );
           } );
}

class linter
{
public:
    explicit linter( const system& sys ) : _sys( sys ) {}

    lint_report run()
    {
        if ( _sys.machines.empty() )
            error( "system '" + _sys.name + "' has no machines", _sys.span );

        std::set<std::string> machine_names;
        for ( const auto& m : _sys.machines )
        {
            if ( !machine_names.insert( m.name ).second )
                error( "duplicate machine name '" + m.name + "'", m.span );
            check_machine( m );
        }
        check_shared_outputs();
        check_env_symbols();
        return std::move( _report );
    }

private:
    void error( std::string message, const source_span& span ) { add( severity::error, std::move( message ), span ); }
    void warning( std::string message, const source_span& span ) { add( severity::warning, std::move( message ), span ); }

    void add( severity level, std::string message, const source_span& span )
    {
        _report.items.push_back( diagnostic{ level, std::move( message ), span } );
    }

    std::string where( const machine& m, const state& s ) const { return "state '" + s.name + "' of machine '" + m.name + "'"; }

    void check_machine( const machine& m )
    {
        const std::size_t errors_before = _report.count( severity::error );

        if ( m.states.empty() )
            error( "machine '" + m.name + "' has no states", m.span );

        std::set<std::string> state_names;
        for ( const auto& s : m.states )
        {
            if ( !state_names.insert( s.name ).second )
                error( "duplicate state name '" + s.name + "' in machine '" + m.name + "'", s.span );
            for ( auto sym : s.outputs )
                if ( !_sys.symbols.contains( sym ) )
                    error( "output of " + where( m, s ) + " is not a registered symbol", s.span );
        }

        if ( m.initial.empty() )
            error( "machine '" + m.name + "' has no initial state", m.span );
        else if ( m.initial_index == no_index )
            error( "initial state '" + m.initial + "' of machine '" + m.name + "' does not exist", m.span );

        for ( const auto& a : m.arcs )
        {
            if ( a.from == no_index )
                error( "arc source '" + a.source + "' is not a state of machine '" + m.name + "'", a.span );
            if ( a.to == no_index )
                error( "arc target '" + a.target + "' is not a state of machine '" + m.name + "'", a.span );
            for ( auto sym : atoms( a.guard ) )
                if ( !_sys.symbols.contains( sym ) )
                    error( "guard refers to an unregistered symbol id " + std::to_string( sym.id ), a.span );
        }

        if ( _report.count( severity::error ) == errors_before && m.outgoing.size() == m.states.size() )
            check_guards( m );
    }

    void check_guards( const machine& m )
    {
        for ( std::size_t si = 0; si < m.states.size(); ++si )
        {
            const auto& s = m.states[si];
            const auto& out = m.outgoing[si];
            if ( out.empty() )
            {
                warning( where( m, s ) + " has no outgoing arcs; the machine stays there forever", s.span );
                continue;
            }

            expr cover = expr::falsity();
            symbol_set alphabet;
            for ( auto i : out )
            {
                cover = cover || m.arcs[i].guard;
                alphabet = alphabet.united( atoms( m.arcs[i].guard ) );
            }
            if ( !tautology( cover, alphabet ) )
                warning( where( m, s ) + ": outgoing guards do not cover every valuation; the machine stays put when none holds",
                         s.span );

            for ( std::size_t x = 0; x < out.size(); ++x )
                for ( std::size_t y = x + 1; y < out.size(); ++y )
                {
                    const auto& a = m.arcs[out[x]];
                    const auto& b = m.arcs[out[y]];
                    if ( a.to == b.to )
                        continue;
                    auto both = a.guard && b.guard;
                    if ( satisfiable( both, atoms( a.guard ).united( atoms( b.guard ) ) ) )
                        warning( where( m, s ) + ": guards of arcs to '" + a.target + "' and '" + b.target +
                                     "' overlap (nondeterministic choice)",
                                 b.span );
                }
        }
    }

    void check_shared_outputs()
    {
        std::map<symbol, std::size_t> producer;
        for ( std::size_t k = 0; k < _sys.machines.size(); ++k )
        {
            const auto& m = _sys.machines[k];
            for ( const auto& s : m.states )
                for ( auto sym : s.outputs )
                {
                    auto [it, fresh] = producer.emplace( sym, k );
                    if ( !fresh && it->second != k && _sys.symbols.contains( sym ) )
                    {
                        warning( "symbol '" + _sys.symbols.name( sym ) + "' is produced by machines '" +
                                     _sys.machines[it->second].name + "' and '" + m.name + "'",
                                 s.span );
                        it->second = k;
                    }
                }
        }
    }

    void check_env_symbols()
    {
        auto produced = produced_symbols( _sys );
        for ( auto sym : env_alphabet( _sys ) )
        {
            if ( !_sys.symbols.contains( sym ) )
                continue;
            const auto& name = _sys.symbols.name( sym );
            auto span = first_use( sym );
            add( severity::note, "symbol '" + name + "' is never produced; treated as an environment input", span );
            for ( auto p : produced )
            {
                if ( !_sys.symbols.contains( p ) )
                    continue;
                const auto& candidate = _sys.symbols.name( p );
                if ( iequals( name, candidate ) || edit_distance( name, candidate ) <= 1 )
                {
                    warning( "environment symbol '" + name + "' is never produced; did you mean '" + candidate + "'?",
                             span );
                    break;
                }
            }
        }
    }

    source_span first_use( symbol sym ) const
    {
        for ( const auto& m : _sys.machines )
            for ( const auto& a : m.arcs )
                if ( atoms( a.guard ).contains( sym ) )
                    return a.span;
        return _sys.span;
    }

    const system& _sys;
    lint_report _report;
};

} // namespace

lint_report validate( const system& sys )
{
    return linter( sys ).run();
}

} // namespace cosma
