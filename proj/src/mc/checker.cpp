#include "cosma/mc/checker.hpp"

#include "cosma/bdd/from_expr.hpp"
#include "cosma/error.hpp"
#include "cosma/model/semantics.hpp"

#include <json.hpp>

#include <deque>
#include <sstream>
#include <unordered_map>

namespace cosma
{

namespace
{

// Decides environment conditions and produces concrete valuations for traces.
class env_solver
{
public:
    env_solver( const symbol_set& vars, const symbol_table& table )
    {
        for ( auto s : vars )
        {
            auto v = _mgr.declare( table.name( s ) );
            _vars.emplace( s, v );
            _symbols.push_back( s );
        }
    }

    bdd::ref fn( const expr& e )
    {
        return bdd::from_expr( _mgr, e, [this]( symbol s ) -> std::optional<bdd::var_id> {
            if ( auto it = _vars.find( s ); it != _vars.end() )
                return it->second;
            return std::nullopt;
        } );
    }

    bdd::manager& mgr() { return _mgr; }

    // Smallest satisfying valuation (unmentioned inputs absent).
    symbol_set model( bdd::ref f ) const
    {
        symbol_set out;
        if ( auto a = _mgr.any_sat( f ) )
            for ( auto [v, value] : *a )
                if ( value )
                    out.insert( _symbols.at( v ) );
        return out;
    }

private:
    bdd::manager _mgr;
    std::unordered_map<symbol, bdd::var_id> _vars;
    std::vector<symbol> _symbols;
};

void flatten( const expr& e, std::vector<expr>& out )
{
    if ( e.kind() == expr_kind::conjunction )
    {
        flatten( e.lhs(), out );
        flatten( e.rhs(), out );
    }
    else
        out.push_back( e );
}

simd::node_set ex( const reach_graph& rg, const simd::node_set& target )
{
    simd::node_set out( rg.node_count() );
    for ( const auto& e : rg.edges() )
        if ( target.contains( e.target ) )
            out.insert( e.source );
    return out;
}

simd::node_set eu( const reach_graph& rg, const simd::node_set& a, const simd::node_set& b )
{
    auto z = b;
    for ( ;; )
    {
        auto next = z | ( a & ex( rg, z ) );
        if ( next == z )
            return z;
        z = std::move( next );
    }
}

simd::node_set eg( const reach_graph& rg, const simd::node_set& a )
{
    auto z = a;
    for ( ;; )
    {
        auto next = a & ex( rg, z );
        if ( next == z )
            return z;
        z = std::move( next );
    }
}

simd::node_set satisfying( const reach_graph& rg, const expr& e )
{
    simd::node_set out( rg.node_count() );
    for ( std::size_t n = 0; n < rg.node_count(); ++n )
        if ( eval( e, rg.outputs( n ) ) )
            out.insert( n );
    return out;
}

trace edges_to_trace( const reach_graph& rg, const std::vector<std::size_t>& edge_ids, std::size_t start,
                      env_solver& solver )
{
    trace t;
    t.nodes.push_back( start );
    for ( auto id : edge_ids )
    {
        const auto& e = rg.edge( id );
        t.inputs.push_back( solver.model( solver.fn( e.guard ) ) );
        t.nodes.push_back( e.target );
    }
    return t;
}

trace lead_in_to( const reach_graph& rg, std::size_t node, env_solver& solver )
{
    return edges_to_trace( rg, rg.path_from_initial( node ), 0, solver );
}

// Shortest path (edge ids) from `from` to a member of `goal`.
std::optional<std::vector<std::size_t>> shortest_path( const reach_graph& rg, std::size_t from,
                                                       const simd::node_set& goal )
{
    std::vector<std::optional<std::size_t>> via( rg.node_count() );
    std::vector<bool> seen( rg.node_count(), false );
    std::deque<std::size_t> queue{ from };
    seen[from] = true;
    while ( !queue.empty() )
    {
        auto n = queue.front();
        queue.pop_front();
        if ( goal.contains( n ) )
        {
            std::vector<std::size_t> path;
            while ( via[n] )
            {
                path.push_back( *via[n] );
                n = rg.edge( *via[n] ).source;
            }
            return std::vector<std::size_t>( path.rbegin(), path.rend() );
        }
        for ( auto e : rg.out_edges( n ) )
        {
            auto t = rg.edge( e ).target;
            if ( !seen[t] )
            {
                seen[t] = true;
                via[t] = e;
                queue.push_back( t );
            }
        }
    }
    return std::nullopt;
}

// Lasso inside `stay`, which must be closed under "has a successor in stay".
void extend_lasso( const reach_graph& rg, trace& t, const simd::node_set& stay, env_solver& solver )
{
    std::unordered_map<std::size_t, std::size_t> position;
    for ( std::size_t i = 0; i < t.nodes.size(); ++i )
        position.emplace( t.nodes[i], i );
    for ( ;; )
    {
        auto n = t.nodes.back();
        std::optional<std::size_t> step;
        for ( auto e : rg.out_edges( n ) )
            if ( stay.contains( rg.edge( e ).target ) )
            {
                step = e;
                break;
            }
        if ( !step )
            throw invariant_violation( "EG set is not closed under successors" );
        const auto& e = rg.edge( *step );
        t.inputs.push_back( solver.model( solver.fn( e.guard ) ) );
        t.nodes.push_back( e.target );
        if ( auto it = position.find( e.target ); it != position.end() )
        {
            t.loop_start = it->second;
            return;
        }
        position.emplace( e.target, t.nodes.size() - 1 );
    }
}

symbol_set solver_vars( const reach_graph& rg, const expr& extra )
{
    return rg.env().united( atoms( extra ) );
}

} // namespace

antecedent_parts split_antecedent( const expr& antecedent, const symbol_set& state_symbols )
{
    std::vector<expr> conjuncts;
    flatten( antecedent, conjuncts );
    antecedent_parts parts{ expr::truth(), expr::truth() };
    for ( const auto& c : conjuncts )
    {
        auto used = atoms( c );
        bool has_state = false, has_env = false;
        for ( auto s : used )
            ( state_symbols.contains( s ) ? has_state : has_env ) = true;
        if ( has_state && has_env )
            throw validation_error( "antecedent conjunct mixes state and environment symbols" );
        if ( has_env )
            parts.env_part = parts.env_part && c;
        else
            parts.state_part = parts.state_part && c;
    }
    return parts;
}

verdict check_query( const reach_graph& rg, const implication_query& q, const symbol_table& table )
{
    auto state_symbols = produced_symbols( rg.model() );
    for ( auto s : atoms( q.consequent ) )
        if ( !state_symbols.contains( s ) )
            throw validation_error( "consequent refers to '" + table.name( s ) + "', which is not a state output" );
    auto parts = split_antecedent( q.antecedent, state_symbols );

    env_solver solver( solver_vars( rg, parts.env_part ), table );
    auto& mgr = solver.mgr();
    auto condition = solver.fn( parts.env_part );

    auto goal = satisfying( rg, q.consequent );
    simd::node_set bad( rg.node_count() );
    simd::node_set good( rg.node_count() );
    if ( q.mode == query_mode::eventually )
        bad = eg( rg, goal.complement() );
    else if ( q.mode == query_mode::exists_eventually )
        good = eu( rg, simd::node_set( rg.node_count(), true ), goal );

    verdict v;
    v.holds = true;
    for ( std::size_t s = 0; s < rg.node_count(); ++s )
    {
        if ( !eval( parts.state_part, rg.outputs( s ) ) )
            continue;
        ++v.matched;
        if ( !v.holds )
            continue;

        std::optional<trace> failure;
        bool any_edge = false, any_good = false;
        for ( auto e : rg.out_edges( s ) )
        {
            const auto& edge = rg.edge( e );
            auto f = mgr.conj( solver.fn( edge.guard ), condition );
            if ( mgr.is_false( f ) )
                continue;
            any_edge = true;
            auto t = edge.target;
            bool violated = false;
            switch ( q.mode )
            {
            case query_mode::next: violated = !goal.contains( t ); break;
            case query_mode::eventually: violated = bad.contains( t ); break;
            case query_mode::exists_eventually: any_good = any_good || good.contains( t ); break;
            }
            if ( violated )
            {
                trace w;
                w.nodes = { s, t };
                w.inputs = { solver.model( f ) };
                if ( q.mode == query_mode::eventually )
                    extend_lasso( rg, w, bad, solver );
                failure = std::move( w );
                break;
            }
        }
        if ( !any_edge || ( q.mode == query_mode::exists_eventually && !any_good ) )
            failure = trace{ { s }, {}, std::nullopt };
        if ( failure )
        {
            v.holds = false;
            v.witness = std::move( *failure );
            v.lead_in = lead_in_to( rg, s, solver );
        }
    }
    v.vacuous = v.matched == 0;
    return v;
}

simd::node_set label( const reach_graph& rg, const ctl_formula& f )
{
    auto n = rg.node_count();
    simd::node_set all( n, true );
    switch ( f.kind() )
    {
    case ctl_kind::constant_false: return simd::node_set( n );
    case ctl_kind::constant_true: return all;
    case ctl_kind::atom:
    {
        simd::node_set out( n );
        for ( std::size_t i = 0; i < n; ++i )
            if ( rg.outputs( i ).contains( f.atom_symbol() ) )
                out.insert( i );
        return out;
    }
    case ctl_kind::negation: return label( rg, f.lhs() ).complement();
    case ctl_kind::conjunction: return label( rg, f.lhs() ) & label( rg, f.rhs() );
    case ctl_kind::disjunction: return label( rg, f.lhs() ) | label( rg, f.rhs() );
    case ctl_kind::implication: return label( rg, f.lhs() ).complement() | label( rg, f.rhs() );
    case ctl_kind::ex: return ex( rg, label( rg, f.lhs() ) );
    case ctl_kind::ax: return ex( rg, label( rg, f.lhs() ).complement() ).complement();
    case ctl_kind::ef: return eu( rg, all, label( rg, f.lhs() ) );
    case ctl_kind::af: return eg( rg, label( rg, f.lhs() ).complement() ).complement();
    case ctl_kind::eg: return eg( rg, label( rg, f.lhs() ) );
    case ctl_kind::ag: return eu( rg, all, label( rg, f.lhs() ).complement() ).complement();
    case ctl_kind::eu: return eu( rg, label( rg, f.lhs() ), label( rg, f.rhs() ) );
    case ctl_kind::au:
    {
        // A[a U b] = ~(E[~b U (~a * ~b)] + EG ~b)
        auto na = label( rg, f.lhs() ).complement();
        auto nb = label( rg, f.rhs() ).complement();
        return ( eu( rg, nb, na & nb ) | eg( rg, nb ) ).complement();
    }
    }
    throw invariant_violation( "unknown CTL operator" );
}

verdict check_ctl( const reach_graph& rg, const ctl_formula& f )
{
    verdict v;
    v.holds = label( rg, f ).contains( 0 );
    env_solver solver( rg.env(), rg.symbols() );

    // Paths for the two shapes where one is meaningful: a reachable violation
    // of AG, and a reachable witness of EF.
    std::optional<simd::node_set> target;
    if ( f.kind() == ctl_kind::ag && !v.holds )
        target = label( rg, f.lhs() ).complement();
    else if ( f.kind() == ctl_kind::ef && v.holds )
        target = label( rg, f.lhs() );
    if ( target )
        if ( auto path = shortest_path( rg, 0, *target ) )
            v.witness = edges_to_trace( rg, *path, 0, solver );
    return v;
}

std::vector<suite_entry> check_suite( const reach_graph& rg, const query_set& queries )
{
    std::vector<suite_entry> out;
    for ( const auto& item : queries.items )
    {
        suite_entry entry{ item.name, {}, {} };
        if ( const auto* q = std::get_if<implication_query>( &item.body ) )
        {
            entry.text = "always (" + to_string( q->antecedent, queries.symbols ) + " => " +
                         std::string( to_string( q->mode ) ) + " " + to_string( q->consequent, queries.symbols ) + ")";
            entry.result = check_query( rg, *q, queries.symbols );
        }
        else
        {
            const auto& f = std::get<ctl_formula>( item.body );
            entry.text = to_string( f, queries.symbols );
            entry.result = check_ctl( rg, f );
        }
        out.push_back( std::move( entry ) );
    }
    return out;
}

std::string format_trace( const reach_graph& rg, const trace& t, const symbol_table& table, std::string_view indent )
{
    std::ostringstream out;
    for ( std::size_t i = 0; i < t.nodes.size(); ++i )
    {
        auto n = t.nodes[i];
        out << indent << i << ": n" << n << " " << format_state( rg.model(), rg.node( n ) ) << " {"
            << to_string( rg.outputs( n ), table ) << "}";
        if ( t.loop_start && i + 1 == t.nodes.size() )
            out << "  (back to step " << *t.loop_start << ")";
        out << "\n";
        if ( i < t.inputs.size() )
            out << indent << "   inputs {" << to_string( t.inputs[i], table ) << "}\n";
    }
    return out.str();
}

std::string suite_report( const reach_graph& rg, const query_set& queries, const std::vector<suite_entry>& results )
{
    std::ostringstream out;
    std::size_t width = 0, passed = 0;
    for ( const auto& r : results )
        width = std::max( width, r.name.size() );
    for ( const auto& r : results )
    {
        out << r.name << std::string( width - r.name.size() + 2, ' ' ) << ( r.result.holds ? "true " : "false" ) << "  "
            << r.text;
        if ( r.result.vacuous )
            out << "  (vacuous)";
        out << "\n";
        if ( r.result.holds )
        {
            ++passed;
            continue;
        }
        if ( !r.result.lead_in.empty() && r.result.lead_in.nodes.size() > 1 )
        {
            out << "  reached by:\n" << format_trace( rg, r.result.lead_in, queries.symbols, "    " );
        }
        if ( !r.result.witness.empty() )
            out << "  counterexample:\n" << format_trace( rg, r.result.witness, queries.symbols, "    " );
    }
    out << passed << "/" << results.size() << " requirements hold\n";
    return out.str();
}

namespace
{

nlohmann::ordered_json trace_json( const reach_graph& rg, const trace& t, const symbol_table& table )
{
    auto steps = nlohmann::ordered_json::array();
    for ( std::size_t i = 0; i < t.nodes.size(); ++i )
    {
        auto n = t.nodes[i];
        nlohmann::ordered_json step;
        step["node"] = n;
        auto states = nlohmann::ordered_json::array();
        const auto& g = rg.node( n );
        for ( std::size_t k = 0; k < g.size(); ++k )
            states.push_back( rg.model().machines[k].states[g[k]].name );
        step["states"] = std::move( states );
        auto inputs = nlohmann::ordered_json::array();
        if ( i < t.inputs.size() )
            for ( auto s : t.inputs[i] )
                inputs.push_back( table.name( s ) );
        step["inputs"] = std::move( inputs );
        steps.push_back( std::move( step ) );
    }
    nlohmann::ordered_json out;
    out["steps"] = std::move( steps );
    out["loop_start"] = t.loop_start ? nlohmann::ordered_json( *t.loop_start ) : nlohmann::ordered_json();
    return out;
}

} // namespace

std::string suite_json( const reach_graph& rg, const query_set& queries, const std::vector<suite_entry>& results,
                        int indent )
{
    nlohmann::ordered_json doc;
    doc["system"] = rg.model().name;
    doc["reachable_states"] = rg.node_count();
    auto items = nlohmann::ordered_json::array();
    std::size_t passed = 0;
    for ( const auto& r : results )
    {
        nlohmann::ordered_json item;
        item["name"] = r.name;
        item["query"] = r.text;
        item["holds"] = r.result.holds;
        item["vacuous"] = r.result.vacuous;
        item["matched_states"] = r.result.matched;
        if ( r.result.witness.empty() )
            item["trace"] = nullptr;
        else
        {
            item["trace"] = trace_json( rg, r.result.witness, queries.symbols );
            item["trace"]["lead_in"] = trace_json( rg, r.result.lead_in, queries.symbols )["steps"];
        }
        passed += r.result.holds;
        items.push_back( std::move( item ) );
    }
    doc["results"] = std::move( items );
    doc["summary"] = { { "total", results.size() }, { "holding", passed }, { "failing", results.size() - passed } };
    return doc.dump( indent );
}

} // namespace cosma
