#include "cosma/reach/reach_graph.hpp"

#include "cosma/bdd/from_expr.hpp"
#include "cosma/error.hpp"
#include "cosma/model/semantics.hpp"

#include <deque>
#include <map>

namespace cosma
{

namespace
{

struct move
{
    std::uint32_t target;
    expr guard;
    bdd::ref fn;
};

} // namespace

reach_graph build_rg_explicit( const system& sys )
{
    auto env = env_alphabet( sys );
    reach_graph rg( sys, env );

    bdd::manager mgr;
    auto naming = bdd::declare_symbols( mgr, env, sys.symbols );

    std::deque<std::size_t> frontier;
    frontier.push_back( rg.add_node( initial_state( sys ), std::nullopt ) );

    while ( !frontier.empty() )
    {
        auto n = frontier.front();
        frontier.pop_front();
        auto g = rg.node( n );
        const auto& outputs = rg.outputs( n );
        fixer fix = [&]( symbol s ) -> std::optional<bool> {
            if ( env.contains( s ) )
                return std::nullopt;
            return outputs.contains( s );
        };

        std::vector<std::vector<move>> per_machine;
        for ( std::size_t k = 0; k < sys.machines.size(); ++k )
        {
            const auto& m = sys.machines[k];
            std::vector<move> moves;
            auto covered = mgr.bottom();
            for ( auto ai : m.outgoing[g[k]] )
            {
                const auto& a = m.arcs[ai];
                auto r = residual( a.guard, fix );
                auto fn = bdd::from_expr( mgr, r, naming );
                covered = mgr.disj( covered, fn );
                if ( !mgr.is_false( fn ) )
                    moves.push_back( { static_cast<std::uint32_t>( a.to ), r, fn } );
            }
            if ( !mgr.is_true( covered ) )
            {
                // Implicit stay: the negation of every residual arc guard.
                expr stay = expr::truth();
                for ( const auto& mv : moves )
                    stay = stay && !mv.guard;
                moves.push_back( { g[k], stay, mgr.negate( covered ) } );
            }
            per_machine.push_back( std::move( moves ) );
        }

        // Enumerate one move per machine (odometer, first machine slowest).
        std::map<std::size_t, std::size_t> edge_to; // target node -> edge id
        std::map<std::size_t, bdd::ref> edge_fn;
        std::vector<std::size_t> pick( per_machine.size(), 0 );
        for ( ;; )
        {
            global_state next( g.size() );
            expr guard = expr::truth();
            auto fn = mgr.top();
            for ( std::size_t k = 0; k < pick.size() && !mgr.is_false( fn ); ++k )
            {
                const auto& mv = per_machine[k][pick[k]];
                next[k] = mv.target;
                guard = guard && mv.guard;
                fn = mgr.conj( fn, mv.fn );
            }
            if ( !mgr.is_false( fn ) )
            {
                auto target = rg.find( next );
                std::optional<std::size_t> fresh;
                if ( !target )
                {
                    // Edge id is known before the node is added.
                    target = rg.add_node( next, rg.edge_count() );
                    fresh = *target;
                }
                if ( auto it = edge_to.find( *target ); it != edge_to.end() )
                {
                    auto& merged = edge_fn.at( *target );
                    merged = mgr.disj( merged, fn );
                    rg.set_edge_guard( it->second, rg.edge( it->second ).guard || guard );
                }
                else
                {
                    auto e = rg.add_edge( n, *target, guard );
                    edge_to.emplace( *target, e );
                    edge_fn.emplace( *target, fn );
                }
                if ( fresh )
                    frontier.push_back( *fresh );
            }

            std::size_t k = pick.size();
            while ( k > 0 )
            {
                --k;
                if ( ++pick[k] < per_machine[k].size() )
                    break;
                pick[k] = 0;
                if ( k == 0 )
                {
                    k = no_index;
                    break;
                }
            }
            if ( k == no_index || pick.empty() )
                break;
        }
        if ( rg.out_edges( n ).empty() )
            throw invariant_violation( "reachable state " + format_state( sys, g ) + " has no successor" );
    }
    return rg;
}

} // namespace cosma
