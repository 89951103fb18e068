#include "random_system.hpp"

namespace cosma::testing
{

namespace
{

std::size_t pick( std::mt19937& rng, std::size_t lo, std::size_t hi )
{
    return std::uniform_int_distribution<std::size_t>( lo, hi )( rng );
}

} // namespace

expr random_expr( std::mt19937& rng, const std::vector<symbol>& pool, std::size_t depth )
{
    auto roll = pick( rng, 0, 9 );
    if ( depth == 0 || roll < 3 )
    {
        if ( pool.empty() || roll == 0 )
            return expr::constant( pick( rng, 0, 1 ) == 1 );
        return expr::atom( pool[pick( rng, 0, pool.size() - 1 )] );
    }
    if ( roll < 5 )
        return make_not( random_expr( rng, pool, depth - 1 ) );
    auto lhs = random_expr( rng, pool, depth - 1 );
    auto rhs = random_expr( rng, pool, depth - 1 );
    return roll < 8 ? make_and( lhs, rhs ) : make_or( lhs, rhs );
}

system random_system( std::mt19937& rng, const random_system_limits& limits )
{
    system sys;
    sys.name = "R";
    std::vector<symbol> pool;
    for ( std::size_t i = 0, n = pick( rng, 0, limits.max_env ); i < n; ++i )
        pool.push_back( sys.symbols.intern( "e" + std::to_string( i ) ) );

    auto machines = pick( rng, 1, limits.max_machines );
    std::vector<std::vector<symbol>> owned( machines );
    for ( std::size_t k = 0; k < machines; ++k )
        for ( std::size_t j = 0, n = pick( rng, 0, limits.max_outputs ); j < n; ++j )
        {
            owned[k].push_back( sys.symbols.intern( "m" + std::to_string( k ) + "o" + std::to_string( j ) ) );
            pool.push_back( owned[k].back() );
        }

    for ( std::size_t k = 0; k < machines; ++k )
    {
        machine m;
        m.name = "M" + std::to_string( k );
        auto states = pick( rng, 1, limits.max_states );
        for ( std::size_t s = 0; s < states; ++s )
        {
            symbol_set outputs;
            for ( auto o : owned[k] )
                if ( pick( rng, 0, 1 ) )
                    outputs.insert( o );
            m.add_state( "s" + std::to_string( s ), outputs );
        }
        m.initial = "s0";
        for ( std::size_t s = 0; s < states; ++s )
            for ( std::size_t a = 0, n = pick( rng, 0, limits.max_arcs ); a < n; ++a )
                m.add_arc( "s" + std::to_string( s ), "s" + std::to_string( pick( rng, 0, states - 1 ) ),
                           random_expr( rng, pool, limits.guard_depth ) );
        sys.machines.push_back( std::move( m ) );
    }
    sys.link();
    return sys;
}

} // namespace cosma::testing
