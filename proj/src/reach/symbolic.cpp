#include "cosma/reach/symbolic.hpp"

#include "cosma/bdd/from_expr.hpp"
#include "cosma/error.hpp"
#include "cosma/model/semantics.hpp"

namespace cosma
{

std::size_t bits_for( std::size_t states )
{
    std::size_t bits = 0;
    while ( ( std::size_t{ 1 } << bits ) < states )
        ++bits;
    return bits;
}

namespace
{

bdd::ref code_of( bdd::manager& m, const std::vector<bdd::var_id>& bits, std::size_t value )
{
    auto f = m.top();
    for ( std::size_t i = 0; i < bits.size(); ++i )
    {
        bool bit = ( value >> ( bits.size() - 1 - i ) ) & 1u;
        f = m.conj( f, bit ? m.var( bits[i] ) : m.nvar( bits[i] ) );
    }
    return f;
}

} // namespace

std::vector<bdd::var_id> symbolic_reachability::all_current_bits() const
{
    std::vector<bdd::var_id> out;
    for ( const auto& bits : current_bits )
        out.insert( out.end(), bits.begin(), bits.end() );
    return out;
}

bdd::ref symbolic_reachability::encode( const global_state& g ) const
{
    auto f = mgr->top();
    for ( std::size_t k = 0; k < current_bits.size(); ++k )
        f = mgr->conj( f, code_of( *mgr, current_bits[k], g.at( k ) ) );
    return f;
}

bool symbolic_reachability::contains( const global_state& g ) const
{
    return !mgr->is_false( mgr->conj( reachable, encode( g ) ) );
}

std::vector<global_state> symbolic_reachability::states( const system& sys ) const
{
    std::vector<global_state> out;
    global_state g( sys.machines.size(), 0 );
    std::vector<bool> values( mgr->var_count(), false );
    for ( ;; )
    {
        for ( std::size_t k = 0; k < g.size(); ++k )
        {
            const auto& bits = current_bits[k];
            for ( std::size_t i = 0; i < bits.size(); ++i )
                values[bits[i]] = ( g[k] >> ( bits.size() - 1 - i ) ) & 1u;
        }
        if ( mgr->eval( reachable, values ) )
            out.push_back( g );

        std::size_t k = g.size();
        while ( k > 0 && ++g[k - 1] == sys.machines[k - 1].states.size() )
            g[--k] = 0;
        if ( k == 0 )
            break;
    }
    return out;
}

symbolic_reachability build_rg_symbolic( const system& sys )
{
    symbolic_reachability r;
    r.mgr = std::make_unique<bdd::manager>();
    auto& m = *r.mgr;

    auto env = env_alphabet( sys );
    auto naming = bdd::declare_symbols( m, env, sys.symbols );
    for ( auto s : env )
        r.env_vars.push_back( *naming( s ) );

    for ( const auto& mc : sys.machines )
    {
        std::vector<bdd::var_id> cur, nxt;
        for ( std::size_t b = 0; b < bits_for( mc.states.size() ); ++b )
        {
            auto base = mc.name + "." + std::to_string( b );
            cur.push_back( m.declare( base ) );
            nxt.push_back( m.declare( base + "'" ) );
        }
        r.current_bits.push_back( std::move( cur ) );
        r.next_bits.push_back( std::move( nxt ) );
    }

    // in_state[k][s]: machine k is in state s (current bits).
    std::vector<std::vector<bdd::ref>> in_state( sys.machines.size() );
    r.valid = m.top();
    for ( std::size_t k = 0; k < sys.machines.size(); ++k )
    {
        auto any = m.bottom();
        for ( std::size_t s = 0; s < sys.machines[k].states.size(); ++s )
        {
            in_state[k].push_back( code_of( m, r.current_bits[k], s ) );
            any = m.disj( any, in_state[k].back() );
        }
        r.valid = m.conj( r.valid, any );
    }

    // A produced symbol is true iff some machine sits in a state emitting it.
    auto subst = [&]( symbol s ) -> bdd::ref {
        if ( env.contains( s ) )
            return m.var( *naming( s ) );
        auto f = m.bottom();
        for ( std::size_t k = 0; k < sys.machines.size(); ++k )
            for ( std::size_t st = 0; st < sys.machines[k].states.size(); ++st )
                if ( sys.machines[k].states[st].outputs.contains( s ) )
                    f = m.disj( f, in_state[k][st] );
        return f;
    };

    r.transition = r.valid;
    for ( std::size_t k = 0; k < sys.machines.size(); ++k )
    {
        const auto& mc = sys.machines[k];
        auto rel = m.bottom();
        for ( std::size_t s = 0; s < mc.states.size(); ++s )
        {
            auto covered = m.bottom();
            for ( auto ai : mc.outgoing[s] )
            {
                const auto& a = mc.arcs[ai];
                auto g = bdd::substitute_expr( m, a.guard, subst );
                covered = m.disj( covered, g );
                rel = m.disj( rel, m.conj( in_state[k][s], m.conj( g, code_of( m, r.next_bits[k], a.to ) ) ) );
            }
            auto stay = m.conj( in_state[k][s], m.conj( m.negate( covered ), code_of( m, r.next_bits[k], s ) ) );
            rel = m.disj( rel, stay );
        }
        r.transition = m.conj( r.transition, rel );
    }

    std::vector<bdd::var_id> quantified = r.env_vars;
    std::vector<std::pair<bdd::var_id, bdd::var_id>> unprime;
    for ( std::size_t k = 0; k < sys.machines.size(); ++k )
    {
        quantified.insert( quantified.end(), r.current_bits[k].begin(), r.current_bits[k].end() );
        for ( std::size_t b = 0; b < r.next_bits[k].size(); ++b )
            unprime.emplace_back( r.next_bits[k][b], r.current_bits[k][b] );
    }

    r.initial = r.encode( initial_state( sys ) );
    r.reachable = r.initial;
    for ( ;; )
    {
        ++r.iterations;
        auto image = m.rename( m.exists( quantified, m.conj( r.reachable, r.transition ) ), unprime );
        auto next = m.disj( r.reachable, image );
        if ( next == r.reachable )
            break;
        r.reachable = next;
    }

    auto masked = m.conj( r.reachable, r.valid );
    if ( !( masked == r.reachable ) )
        throw invariant_violation( "symbolic reachable set contains an invalid state code" );
    r.count = m.sat_count( masked, r.all_current_bits() );
    return r;
}

} // namespace cosma
