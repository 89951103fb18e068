#include "cosma/error.hpp"
#include "cosma/mc/checker.hpp"
#include "cosma/model/semantics.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_system.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace cosma;

namespace
{

// Lead-in followed by the witness, as global states and inputs.
bool trace_replays( const reach_graph& rg, const verdict& v )
{
    std::vector<global_state> states;
    std::vector<symbol_set> inputs;
    for ( auto n : v.lead_in.nodes )
        states.push_back( rg.node( n ) );
    inputs = v.lead_in.inputs;
    if ( !v.lead_in.empty() && !v.witness.empty() )
    {
        if ( v.lead_in.nodes.back() != v.witness.nodes.front() )
            return false;
        states.pop_back();
    }
    for ( auto n : v.witness.nodes )
        states.push_back( rg.node( n ) );
    inputs.insert( inputs.end(), v.witness.inputs.begin(), v.witness.inputs.end() );
    return cosma::testing::replays( rg.model(), states, inputs );
}

implication_query query( const cosma::system& sys, query_set& qs, const std::string& text )
{
    qs = cosma::testing::queries_or_throw( text, sys );
    return std::get<implication_query>( qs.items.at( 0 ).body );
}

} // namespace

TEST( CheckSuite, TlcAllTrue )
{
    for ( auto sys : { cosma::testing::tlc(), cosma::testing::tlc_car() } )
    {
        auto rg = build_rg_explicit( sys );
        auto qs = cosma::testing::queries_or_throw( cosma::testing::asset( "tlc_queries.tq" ), sys );
        auto results = check_suite( rg, qs );
        ASSERT_EQ( results.size(), 10u );
        for ( const auto& r : results )
            EXPECT_TRUE( r.result.holds ) << sys.name << " " << r.name;
    }
}

TEST( CheckQuery, SwappedConsequentFails )
{
    auto sys = cosma::testing::tlc();
    auto rg = build_rg_explicit( sys );
    query_set qs;
    auto q = query( sys, qs, "always (HG => next FG);" );
    auto v = check_query( rg, q, qs.symbols );
    EXPECT_FALSE( v.holds );
    ASSERT_EQ( v.witness.nodes.size(), 2u );
    // The violation is a step on which the controller stays in sHG.
    EXPECT_EQ( rg.node( v.witness.nodes[0] )[0], 0u );
    EXPECT_EQ( rg.node( v.witness.nodes[1] )[0], 0u );
    EXPECT_TRUE( trace_replays( rg, v ) );
}

// q2 and q7 are the next and eventually forms of "HY * TimTS => HR * FG".
TEST( CheckQuery, DeletedArcBreaksTheHyToFgQueries )
{
    auto sys = cosma::testing::tlc_without_hy_to_fg();
    auto rg = build_rg_explicit( sys );
    auto qs = cosma::testing::queries_or_throw( cosma::testing::asset( "tlc_queries.tq" ), sys );
    auto results = check_suite( rg, qs );
    for ( const auto& r : results )
    {
        bool broken = r.name == "q2" || r.name == "q7";
        EXPECT_EQ( r.result.holds, !broken ) << r.name;
        if ( broken )
        {
            EXPECT_TRUE( trace_replays( rg, r.result ) ) << r.name;
        }
    }
    // The eventually counterexample ends in a cycle.
    const auto& q7 = results[6].result;
    ASSERT_TRUE( q7.witness.loop_start );
    EXPECT_EQ( q7.witness.nodes.back(), q7.witness.nodes[*q7.witness.loop_start] );
}

TEST( CheckQuery, VacuousTruthIsFlagged )
{
    auto sys = cosma::testing::tlc();
    auto rg = build_rg_explicit( sys );
    query_set qs;
    auto v = check_query( rg, query( sys, qs, "always (HG * HR => next FY);" ), qs.symbols );
    EXPECT_TRUE( v.holds );
    EXPECT_TRUE( v.vacuous );
    auto trivial = check_query( rg, query( sys, qs, "always (1 => next 1);" ), qs.symbols );
    EXPECT_TRUE( trivial.holds );
    EXPECT_FALSE( trivial.vacuous );
    EXPECT_EQ( trivial.matched, 13u );
}

TEST( CheckQuery, EnvInConsequentIsRejected )
{
    auto sys = cosma::testing::tlc();
    auto rg = build_rg_explicit( sys );
    implication_query q{ expr::truth(), query_mode::next, expr::atom( *sys.symbols.find( "Car" ) ) };
    EXPECT_THROW( check_query( rg, q, sys.symbols ), validation_error );
}

TEST( CheckQuery, UnknownEnvironmentSymbol )
{
    // Truck appears nowhere in the system; it conditions no edge, so q1's
    // shape still holds with Car replaced by a free input.
    auto sys = cosma::testing::tlc();
    auto rg = build_rg_explicit( sys );
    query_set qs;
    auto v = check_query( rg, query( sys, qs, "always (HG * Truck * TimTL => next HY);" ), qs.symbols );
    EXPECT_FALSE( v.holds );
    EXPECT_TRUE( trace_replays( rg, v ) );
}

TEST( CheckQuery, ExistsEventually )
{
    auto sys = cosma::testing::tlc();
    auto rg = build_rg_explicit( sys );
    query_set qs;
    EXPECT_TRUE( check_query( rg, query( sys, qs, "always (HG => exists eventually FG);" ), qs.symbols ).holds );
    EXPECT_FALSE( check_query( rg, query( sys, qs, "always (HG => exists eventually 0);" ), qs.symbols ).holds );
}

// Environment atoms by edge conditioning on TLC agree with making Car a state
// output of the CAR automaton.
TEST( CheckQuery, EdgeConditioningMatchesCarAutomaton )
{
    auto plain = cosma::testing::tlc();
    auto with_car = cosma::testing::tlc_car();
    auto rg1 = build_rg_explicit( plain );
    auto rg2 = build_rg_explicit( with_car );
    query_set qs1, qs2;
    auto v1 = check_query( rg1, query( plain, qs1, "always (HG * Car * TimTL => next HY);" ), qs1.symbols );
    auto v2 = check_query( rg2, query( with_car, qs2, "always (HG * Car * TimTL => next HY);" ), qs2.symbols );
    EXPECT_TRUE( v1.holds );
    EXPECT_TRUE( v2.holds );
    EXPECT_EQ( v1.vacuous, v2.vacuous );
}

TEST( CheckQuery, NextAgreesWithBruteForceOracle )
{
    std::mt19937 rng( 99 );
    for ( int i = 0; i < 60; ++i )
    {
        auto sys = cosma::testing::random_system( rng );
        auto produced = produced_symbols( sys );
        auto env = env_alphabet( sys );
        std::vector<symbol> state_pool( produced.begin(), produced.end() );
        std::vector<symbol> env_pool( env.begin(), env.end() );
        auto rg = build_rg_explicit( sys );
        for ( int j = 0; j < 6; ++j )
        {
            auto state_part = cosma::testing::random_expr( rng, state_pool, 2 );
            auto env_part = cosma::testing::random_expr( rng, env_pool, 1 );
            implication_query q{ state_part && env_part, query_mode::next,
                                 cosma::testing::random_expr( rng, state_pool, 2 ) };
            auto v = check_query( rg, q, sys.symbols );
            ASSERT_EQ( v.holds, cosma::testing::next_oracle( sys, q, sys.symbols ) ) << print_system( sys );
            if ( !v.holds )
            {
                ASSERT_TRUE( trace_replays( rg, v ) );
            }
        }
    }
}

TEST( CheckQuery, EventuallyAgreesWithBoundedPaths )
{
    std::mt19937 rng( 7 );
    int checked = 0;
    while ( checked < 40 )
    {
        auto sys = cosma::testing::random_system( rng );
        auto rg = build_rg_explicit( sys );
        if ( rg.node_count() > 8 )
            continue;
        ++checked;
        auto produced = produced_symbols( sys );
        auto env = env_alphabet( sys );
        std::vector<symbol> state_pool( produced.begin(), produced.end() );
        std::vector<symbol> env_pool( env.begin(), env.end() );
        for ( int j = 0; j < 6; ++j )
        {
            implication_query q{ cosma::testing::random_expr( rng, state_pool, 1 ) && cosma::testing::random_expr( rng, env_pool, 1 ),
                                 query_mode::eventually, cosma::testing::random_expr( rng, state_pool, 2 ) };
            auto v = check_query( rg, q, sys.symbols );
            ASSERT_EQ( v.holds, cosma::testing::eventually_oracle( sys, q, sys.symbols, rg.node_count() + 1 ) )
                << print_system( sys );
            if ( !v.holds )
            {
                ASSERT_TRUE( trace_replays( rg, v ) );
            }
        }
    }
}

TEST( Ctl, TlcExamples )
{
    auto sys = cosma::testing::tlc();
    auto rg = build_rg_explicit( sys );
    auto qs = cosma::testing::queries_or_throw( "ctl a: AG (HG + HY + HR);\nctl b: AG ~FY;\nctl c: EF FY;\n", sys );
    auto a = check_ctl( rg, std::get<ctl_formula>( qs.items[0].body ) );
    auto b = check_ctl( rg, std::get<ctl_formula>( qs.items[1].body ) );
    auto c = check_ctl( rg, std::get<ctl_formula>( qs.items[2].body ) );
    EXPECT_TRUE( a.holds );
    EXPECT_FALSE( b.holds );
    EXPECT_TRUE( c.holds );
    // The AG counterexample and the EF witness both end in a FY state.
    auto fy = *sys.symbols.find( "FY" );
    ASSERT_FALSE( b.witness.empty() );
    EXPECT_TRUE( rg.outputs( b.witness.nodes.back() ).contains( fy ) );
    EXPECT_TRUE( rg.outputs( c.witness.nodes.back() ).contains( fy ) );
    EXPECT_TRUE( trace_replays( rg, b ) );
}

TEST( Ctl, EfOnSingleNode )
{
    // State b, the only one emitting x, is unreachable.
    auto rg = build_rg_explicit( cosma::testing::parse_or_throw(
        "system S { machine M { init a; state a { out y; } state b { out x; -> a when 1; } } }" ) );
    ASSERT_EQ( rg.node_count(), 1u );
    auto x = *rg.symbols().find( "x" );
    auto v = check_ctl( rg, ctl_formula::unary( ctl_kind::ef, ctl_formula::atom( x ) ) );
    EXPECT_FALSE( v.holds );
    EXPECT_TRUE( v.witness.empty() );
}

TEST( Ctl, DualitiesOnRandomGraphs )
{
    std::mt19937 rng( 42 );
    for ( int i = 0; i < 40; ++i )
    {
        auto sys = cosma::testing::random_system( rng );
        auto rg = build_rg_explicit( sys );
        auto produced = produced_symbols( sys );
        if ( produced.empty() )
            continue;
        std::vector<symbol> pool( produced.begin(), produced.end() );
        auto p = ctl_formula::atom( pool[rng() % pool.size()] );
        auto q = ctl_formula::atom( pool[rng() % pool.size()] );
        auto neg = []( ctl_formula f ) { return ctl_formula::unary( ctl_kind::negation, std::move( f ) ); };
        auto un = []( ctl_kind k, ctl_formula f ) { return ctl_formula::unary( k, std::move( f ) ); };

        EXPECT_EQ( label( rg, un( ctl_kind::af, p ) ), label( rg, neg( un( ctl_kind::eg, neg( p ) ) ) ) );
        EXPECT_EQ( label( rg, un( ctl_kind::ax, p ) ), label( rg, neg( un( ctl_kind::ex, neg( p ) ) ) ) );
        EXPECT_EQ( label( rg, un( ctl_kind::ag, p ) ), label( rg, neg( un( ctl_kind::ef, neg( p ) ) ) ) );
        EXPECT_EQ( label( rg, un( ctl_kind::ef, p ) ),
                   label( rg, ctl_formula::binary( ctl_kind::eu, ctl_formula::constant( true ), p ) ) );
        EXPECT_EQ( label( rg, un( ctl_kind::af, p ) ),
                   label( rg, ctl_formula::binary( ctl_kind::au, ctl_formula::constant( true ), p ) ) );
        // A[p U q] implies E[p U q].
        auto au = label( rg, ctl_formula::binary( ctl_kind::au, p, q ) );
        auto eu = label( rg, ctl_formula::binary( ctl_kind::eu, p, q ) );
        EXPECT_EQ( au & eu, au );
    }
}

TEST( Report, TextAndJson )
{
    auto sys = cosma::testing::tlc();
    auto rg = build_rg_explicit( sys );
    auto qs = cosma::testing::queries_or_throw( cosma::testing::asset( "tlc_queries.tq" ) + "bad: always (HG => next FG);\n", sys );
    auto results = check_suite( rg, qs );
    auto text = suite_report( rg, qs, results );
    EXPECT_NE( text.find( "10/11 requirements hold" ), std::string::npos );
    EXPECT_NE( text.find( "counterexample:" ), std::string::npos );
    auto doc = nlohmann::json::parse( suite_json( rg, qs, results ) );
    ASSERT_EQ( doc["results"].size(), 11u );
    EXPECT_EQ( doc["results"][0]["name"], "q1" );
    EXPECT_EQ( doc["results"][0]["holds"], true );
    EXPECT_EQ( doc["results"][0]["vacuous"], false );
    EXPECT_TRUE( doc["results"][0]["trace"].is_null() );
    EXPECT_EQ( doc["results"][10]["holds"], false );
    EXPECT_EQ( doc["results"][10]["trace"]["steps"][0]["states"][0], "sHG" );
    EXPECT_EQ( doc["summary"]["failing"], 1 );
}
