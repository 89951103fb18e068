#include "cosma/frontend/parser.hpp"
#include "cosma/model/semantics.hpp"

#include "fixtures.hpp"
#include "random_system.hpp"

#include <gtest/gtest.h>

using namespace cosma;

namespace
{

const diagnostic* first_error( const std::vector<diagnostic>& ds )
{
    for ( const auto& d : ds )
        if ( d.severity == severity::error )
            return &d;
    return nullptr;
}

} // namespace

TEST( ParseSystem, BundledTlc )
{
    auto sys = cosma::testing::tlc();
    EXPECT_EQ( sys.name, "TLC" );
    ASSERT_EQ( sys.machines.size(), 3u );
    EXPECT_EQ( sys.machines[0].states.size(), 4u );
    EXPECT_EQ( sys.machines[1].states.size(), 3u );
    EXPECT_EQ( sys.machines[2].states.size(), 3u );
    EXPECT_EQ( sys.machines[0].initial, "sHG" );
}

TEST( ParseSystem, EmptyInput )
{
    auto r = parse_system( "", "empty.csm" );
    EXPECT_FALSE( r.ok() );
    auto* e = first_error( r.diagnostics );
    ASSERT_NE( e, nullptr );
    EXPECT_EQ( e->message, "expected 'system'" );
    EXPECT_EQ( e->span.file, "empty.csm" );
    EXPECT_EQ( e->span.line, 1u );
}

TEST( ParseSystem, SyntaxErrorsCarryPositions )
{
    auto r = parse_system( "system S {\n  machine M {\n    init a;\n    state a { -> a when x * ; }\n  }\n}\n", "f.csm" );
    EXPECT_FALSE( r.ok() );
    auto* e = first_error( r.diagnostics );
    ASSERT_NE( e, nullptr );
    EXPECT_EQ( e->span.line, 4u );
    EXPECT_EQ( e->span.column, 29u );
    EXPECT_EQ( format( *e ).substr( 0, 12 ), "f.csm:4:29: " );
}

TEST( ParseSystem, ValidationErrorsSuppressTheValue )
{
    auto r = parse_system( "system S { machine M { init a; state a { -> b when 1; } } }" );
    EXPECT_FALSE( r.ok() );
    auto* e = first_error( r.diagnostics );
    ASSERT_NE( e, nullptr );
    EXPECT_NE( e->message.find( "'b'" ), std::string::npos );
    EXPECT_TRUE( e->span.known() );

    // Syntax-only parsing still returns the system.
    EXPECT_TRUE( parse_system_syntax( "system S { machine M { init a; state a { -> b when 1; } } }" ).ok() );
}

TEST( ParseSystem, CommentsBomAndOperators )
{
    auto sys = cosma::testing::parse_or_throw( "\xEF\xBB\xBF// header\nsystem S { // trailing\n"
                                        "machine M { init a; state a { out o; -> a when !x + ~(y * 0) + 1; } } }" );
    const auto& g = sys.machines[0].arcs[0].guard;
    EXPECT_EQ( to_string( g, sys.symbols ), "~x + ~(y * 0) + 1" );
}

TEST( ParseSystem, RoundTripBundledAssets )
{
    for ( auto name : { "tlc.csm", "tlc_car.csm" } )
    {
        auto sys = cosma::testing::parse_or_throw( cosma::testing::asset( name ) );
        auto printed = print_system( sys );
        auto again = cosma::testing::parse_or_throw( printed );
        EXPECT_TRUE( structurally_equal( sys, again ) ) << name;
        EXPECT_EQ( print_system( again ), printed );
    }
}

TEST( ParseSystem, RoundTripRandomSystems )
{
    std::mt19937 rng( 21 );
    for ( int i = 0; i < 50; ++i )
    {
        auto sys = cosma::testing::random_system( rng );
        auto printed = print_system( sys );
        auto again = parse_system_syntax( printed );
        ASSERT_TRUE( again.ok() ) << printed;
        ASSERT_TRUE( structurally_equal( sys, *again.value ) ) << printed;
    }
}

TEST( ParseQueries, ImplicationFormsWithoutAlways )
{
    auto sys = cosma::testing::tlc();
    auto qs = cosma::testing::queries_or_throw( "q1: always (HG * Car * TimTL => next HY);\n"
                                         "q6: always (HY * TimTS => eventually (HR * FG));\n"
                                         "((FG * (!Car)) \xE2\x87\x92 (\xE2\x97\x8B FY));\n"
                                         "\xE2\x96\xA1 (FG * TimTL => \xE2\x97\x87 FY);\n"
                                         "always (1 => next 1);\n"
                                         "qe: always (HG => exists eventually FG);\n",
                                         sys );
    ASSERT_EQ( qs.items.size(), 6u );
    const auto& q1 = std::get<implication_query>( qs.items[0].body );
    EXPECT_EQ( qs.items[0].name, "q1" );
    EXPECT_EQ( q1.mode, query_mode::next );
    EXPECT_EQ( to_string( q1.antecedent, qs.symbols ), "HG * Car * TimTL" );
    EXPECT_EQ( to_string( q1.consequent, qs.symbols ), "HY" );
    EXPECT_EQ( std::get<implication_query>( qs.items[1].body ).mode, query_mode::eventually );
    EXPECT_EQ( qs.items[2].name, "query_3" );
    EXPECT_EQ( std::get<implication_query>( qs.items[2].body ).mode, query_mode::next );
    EXPECT_EQ( std::get<implication_query>( qs.items[3].body ).mode, query_mode::eventually );
    EXPECT_EQ( std::get<implication_query>( qs.items[5].body ).mode, query_mode::exists_eventually );
}

TEST( ParseQueries, BundledSuite )
{
    auto sys = cosma::testing::tlc();
    auto qs = cosma::testing::queries_or_throw( cosma::testing::asset( "tlc_queries.tq" ), sys );
    ASSERT_EQ( qs.items.size(), 10u );
    for ( std::size_t i = 0; i < 10; ++i )
        EXPECT_EQ( std::get<implication_query>( qs.items[i].body ).mode,
                   i < 5 ? query_mode::next : query_mode::eventually );
    // The printed suite parses back to the same text.
    auto again = cosma::testing::queries_or_throw( print_queries( qs ), sys );
    EXPECT_EQ( print_queries( again ), print_queries( qs ) );
}

TEST( ParseQueries, UnknownSymbolIsAWarning )
{
    auto sys = cosma::testing::tlc();
    auto r = parse_queries( "q: always (HG * Truck => next HY);", sys );
    ASSERT_TRUE( r.ok() );
    ASSERT_EQ( r.diagnostics.size(), 1u );
    EXPECT_EQ( r.diagnostics[0].severity, severity::warning );
    EXPECT_NE( r.diagnostics[0].message.find( "Truck" ), std::string::npos );
}

TEST( ParseQueries, Errors )
{
    auto sys = cosma::testing::tlc();
    auto env_consequent = parse_queries( "q: always (HG => next Car);", sys );
    EXPECT_FALSE( env_consequent.ok() );
    auto mixed = parse_queries( "q: always (HG + Car => next HY);", sys );
    EXPECT_FALSE( mixed.ok() );
    auto duplicate = parse_queries( "q: always (1 => next 1); q: always (1 => next 1);", sys );
    EXPECT_FALSE( duplicate.ok() );
    auto syntax = parse_queries( "q: always (HG => soon HY);", sys );
    ASSERT_FALSE( syntax.ok() );
    EXPECT_EQ( first_error( syntax.diagnostics )->span.column, 18u );
}

TEST( ParseQueries, CtlForms )
{
    auto sys = cosma::testing::tlc();
    auto qs = cosma::testing::queries_or_throw( "ctl a: AG (HG + HY + HR);\n"
                                         "ctl b: E[FR U HR];\n"
                                         "ctl c: AU(FR, HR) => EX ~HG;\n"
                                         "ctl d: A[1 U AF FY];\n",
                                         sys );
    ASSERT_EQ( qs.items.size(), 4u );
    EXPECT_EQ( std::get<ctl_formula>( qs.items[0].body ).kind(), ctl_kind::ag );
    EXPECT_EQ( std::get<ctl_formula>( qs.items[1].body ).kind(), ctl_kind::eu );
    EXPECT_EQ( std::get<ctl_formula>( qs.items[2].body ).kind(), ctl_kind::implication );
    EXPECT_EQ( std::get<ctl_formula>( qs.items[3].body ).kind(), ctl_kind::au );
    auto again = cosma::testing::queries_or_throw( print_queries( qs ), sys );
    EXPECT_EQ( print_queries( again ), print_queries( qs ) );
    EXPECT_FALSE( parse_queries( "ctl e: AG Car;", sys ).ok() );
}
