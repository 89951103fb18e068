#include "cosma/bdd/manager.hpp"

#include "cosma/error.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>

namespace cosma::bdd
{

namespace
{

enum cache_tag : std::uint32_t
{
    tag_conj = 0,
    tag_disj = 1,
    tag_xor = 2,
    tag_not = 3,
    tag_ite = 4,
    tag_exists = 5,
};

std::uint32_t next_manager_id()
{
    static std::atomic<std::uint32_t> counter{ 1 };
    return counter.fetch_add( 1 );
}

std::uint64_t pow2( std::size_t n )
{
    if ( n >= 64 )
        throw validation_error( "sat_count supports at most 63 variables" );
    return std::uint64_t{ 1 } << n;
}

} // namespace

std::size_t manager::key_hash::operator()( const key& k ) const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for ( std::uint32_t part : { k.a, k.b, k.c, k.d } )
    {
        h ^= part + 0x9e3779b9 + ( h << 6 ) + ( h >> 2 );
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>( h ^ ( h >> 33 ) );
}

manager::manager() : _id( next_manager_id() )
{
    _nodes.push_back( node{ terminal_var, 0, 0 } );
    _nodes.push_back( node{ terminal_var, 1, 1 } );
}

manager::manager( const std::vector<std::string>& order ) : manager()
{
    for ( const auto& name : order )
        declare( name );
}

var_id manager::declare( std::string_view name )
{
    if ( auto v = find_var( name ) )
        return *v;
    auto v = static_cast<var_id>( _names.size() );
    _names.emplace_back( name );
    _var_ids.emplace( _names.back(), v );
    return v;
}

std::optional<var_id> manager::find_var( std::string_view name ) const
{
    if ( auto it = _var_ids.find( std::string( name ) ); it != _var_ids.end() )
        return it->second;
    return std::nullopt;
}

const std::string& manager::var_name( var_id v ) const
{
    if ( v >= _names.size() )
        throw validation_error( "unknown BDD variable " + std::to_string( v ) );
    return _names[v];
}

const ref& manager::check( const ref& f ) const
{
    if ( f.owner != _id )
        throw validation_error( "BDD handle belongs to a different manager" );
    if ( f.index >= _nodes.size() )
        throw validation_error( "dangling BDD handle" );
    return f;
}

std::uint32_t manager::make( var_id v, std::uint32_t low, std::uint32_t high )
{
    if ( low == high )
        return low;
    key k{ v, low, high, 0 };
    if ( auto it = _unique.find( k ); it != _unique.end() )
        return it->second;
    auto index = static_cast<std::uint32_t>( _nodes.size() );
    _nodes.push_back( node{ v, low, high } );
    _unique.emplace( k, index );
    return index;
}

ref manager::mk_var( std::string_view name )
{
    return var( declare( name ) );
}

ref manager::var( var_id v )
{
    if ( v >= _names.size() )
        throw validation_error( "unknown BDD variable " + std::to_string( v ) );
    return ref{ make( v, 0, 1 ), _id };
}

ref manager::nvar( var_id v )
{
    if ( v >= _names.size() )
        throw validation_error( "unknown BDD variable " + std::to_string( v ) );
    return ref{ make( v, 1, 0 ), _id };
}

ref manager::apply( binary_op op, ref f, ref g )
{
    check( f );
    check( g );
    return ref{ apply_rec( op, f.index, g.index ), _id };
}

ref manager::negate( ref f )
{
    check( f );
    return ref{ not_rec( f.index ), _id };
}

ref manager::ite( ref f, ref g, ref h )
{
    check( f );
    check( g );
    check( h );
    return ref{ ite_rec( f.index, g.index, h.index ), _id };
}

std::uint32_t manager::apply_rec( binary_op op, std::uint32_t f, std::uint32_t g )
{
    switch ( op )
    {
    case binary_op::conj:
        if ( f == 0 || g == 0 )
            return 0;
        if ( f == 1 )
            return g;
        if ( g == 1 || f == g )
            return f;
        break;
    case binary_op::disj:
        if ( f == 1 || g == 1 )
            return 1;
        if ( f == 0 )
            return g;
        if ( g == 0 || f == g )
            return f;
        break;
    case binary_op::exclusive_or:
        if ( f == g )
            return 0;
        if ( f == 0 )
            return g;
        if ( g == 0 )
            return f;
        if ( f == 1 )
            return not_rec( g );
        if ( g == 1 )
            return not_rec( f );
        break;
    }
    // All three operators are commutative.
    if ( f > g )
        std::swap( f, g );

    key k{ static_cast<std::uint32_t>( op ), f, g, 0 };
    if ( auto it = _cache.find( k ); it != _cache.end() )
        return it->second;

    var_id top = std::min( level( f ), level( g ) );
    auto f0 = level( f ) == top ? _nodes[f].low : f;
    auto f1 = level( f ) == top ? _nodes[f].high : f;
    auto g0 = level( g ) == top ? _nodes[g].low : g;
    auto g1 = level( g ) == top ? _nodes[g].high : g;

    auto low = apply_rec( op, f0, g0 );
    auto high = apply_rec( op, f1, g1 );
    auto result = make( top, low, high );
    _cache.emplace( k, result );
    return result;
}

std::uint32_t manager::not_rec( std::uint32_t f )
{
    if ( f < 2 )
        return 1 - f;
    key k{ tag_not, f, 0, 0 };
    if ( auto it = _cache.find( k ); it != _cache.end() )
        return it->second;
    auto low = not_rec( _nodes[f].low );
    auto high = not_rec( _nodes[f].high );
    auto result = make( _nodes[f].var, low, high );
    _cache.emplace( k, result );
    return result;
}

std::uint32_t manager::ite_rec( std::uint32_t f, std::uint32_t g, std::uint32_t h )
{
    if ( f == 1 )
        return g;
    if ( f == 0 )
        return h;
    if ( g == h )
        return g;
    if ( g == 1 && h == 0 )
        return f;
    if ( g == 0 && h == 1 )
        return not_rec( f );

    key k{ tag_ite, f, g, h };
    if ( auto it = _cache.find( k ); it != _cache.end() )
        return it->second;

    var_id top = std::min( { level( f ), level( g ), level( h ) } );
    auto split = [&]( std::uint32_t n, bool branch ) {
        if ( level( n ) != top )
            return n;
        return branch ? _nodes[n].high : _nodes[n].low;
    };
    auto low = ite_rec( split( f, false ), split( g, false ), split( h, false ) );
    auto high = ite_rec( split( f, true ), split( g, true ), split( h, true ) );
    auto result = make( top, low, high );
    _cache.emplace( k, result );
    return result;
}

std::uint32_t manager::cube_of( const std::vector<var_id>& vars )
{
    std::vector<var_id> sorted( vars );
    std::sort( sorted.begin(), sorted.end() );
    sorted.erase( std::unique( sorted.begin(), sorted.end() ), sorted.end() );
    std::uint32_t cube = 1;
    for ( auto it = sorted.rbegin(); it != sorted.rend(); ++it )
    {
        if ( *it >= _names.size() )
            throw validation_error( "unknown BDD variable " + std::to_string( *it ) );
        cube = make( *it, 0, cube );
    }
    return cube;
}

std::uint32_t manager::exists_rec( std::uint32_t f, std::uint32_t cube )
{
    if ( f < 2 || cube == 1 )
        return f;
    while ( cube != 1 && level( cube ) < level( f ) )
        cube = _nodes[cube].high;
    if ( cube == 1 )
        return f;

    key k{ tag_exists, f, cube, 0 };
    if ( auto it = _cache.find( k ); it != _cache.end() )
        return it->second;

    std::uint32_t result;
    if ( level( cube ) == level( f ) )
    {
        auto rest = _nodes[cube].high;
        auto low = exists_rec( _nodes[f].low, rest );
        if ( low == 1 )
            result = 1;
        else
            result = apply_rec( binary_op::disj, low, exists_rec( _nodes[f].high, rest ) );
    }
    else
    {
        auto low = exists_rec( _nodes[f].low, cube );
        auto high = exists_rec( _nodes[f].high, cube );
        result = make( _nodes[f].var, low, high );
    }
    _cache.emplace( k, result );
    return result;
}

ref manager::exists( const std::vector<var_id>& vars, ref f )
{
    check( f );
    auto cube = cube_of( vars );
    return ref{ exists_rec( f.index, cube ), _id };
}

ref manager::forall( const std::vector<var_id>& vars, ref f )
{
    return negate( exists( vars, negate( f ) ) );
}

std::uint32_t manager::cofactor_rec( std::uint32_t f, var_id v, bool value,
                                     std::unordered_map<std::uint32_t, std::uint32_t>& memo )
{
    if ( f < 2 || level( f ) > v )
        return f;
    if ( level( f ) == v )
        return value ? _nodes[f].high : _nodes[f].low;
    if ( auto it = memo.find( f ); it != memo.end() )
        return it->second;
    auto low = cofactor_rec( _nodes[f].low, v, value, memo );
    auto high = cofactor_rec( _nodes[f].high, v, value, memo );
    auto result = make( _nodes[f].var, low, high );
    memo.emplace( f, result );
    return result;
}

ref manager::cofactor( ref f, var_id v, bool value )
{
    check( f );
    std::unordered_map<std::uint32_t, std::uint32_t> memo;
    return ref{ cofactor_rec( f.index, v, value, memo ), _id };
}

ref manager::rename( ref f, const std::vector<std::pair<var_id, var_id>>& mapping )
{
    check( f );
    std::unordered_map<var_id, var_id> target( mapping.begin(), mapping.end() );
    for ( auto [from, to] : mapping )
        if ( from >= _names.size() || to >= _names.size() )
            throw validation_error( "rename refers to an unknown BDD variable" );

    std::unordered_map<std::uint32_t, std::uint32_t> memo;
    std::function<std::uint32_t( std::uint32_t )> walk = [&]( std::uint32_t n ) -> std::uint32_t {
        if ( n < 2 )
            return n;
        if ( auto it = memo.find( n ); it != memo.end() )
            return it->second;
        auto v = _nodes[n].var;
        if ( auto it = target.find( v ); it != target.end() )
            v = it->second;
        auto low = walk( _nodes[n].low );
        auto high = walk( _nodes[n].high );
        auto result = ite_rec( make( v, 0, 1 ), high, low );
        memo.emplace( n, result );
        return result;
    };
    return ref{ walk( f.index ), _id };
}

std::uint64_t manager::sat_count( ref f, std::size_t nvars ) const
{
    std::vector<var_id> vars( nvars );
    for ( std::size_t i = 0; i < nvars; ++i )
        vars[i] = static_cast<var_id>( i );
    return sat_count( f, vars );
}

std::uint64_t manager::sat_count( ref f, const std::vector<var_id>& vars ) const
{
    check( f );
    std::vector<var_id> sorted( vars );
    std::sort( sorted.begin(), sorted.end() );
    sorted.erase( std::unique( sorted.begin(), sorted.end() ), sorted.end() );
    const std::size_t n = sorted.size();
    pow2( n );

    auto position = [&]( std::uint32_t node ) -> std::size_t {
        if ( node < 2 )
            return n;
        auto it = std::lower_bound( sorted.begin(), sorted.end(), _nodes[node].var );
        if ( it == sorted.end() || *it != _nodes[node].var )
            throw validation_error( "sat_count: BDD depends on variable '" + _names[_nodes[node].var] +
                                    "' outside the counted set" );
        return static_cast<std::size_t>( it - sorted.begin() );
    };

    // Models of the sub-function rooted at `node` over the variables at and
    // below its position.
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    std::function<std::uint64_t( std::uint32_t )> count = [&]( std::uint32_t node ) -> std::uint64_t {
        if ( node < 2 )
            return node;
        if ( auto it = memo.find( node ); it != memo.end() )
            return it->second;
        auto here = position( node );
        const auto& nd = _nodes[node];
        auto low = count( nd.low ) * pow2( position( nd.low ) - here - 1 );
        auto high = count( nd.high ) * pow2( position( nd.high ) - here - 1 );
        memo.emplace( node, low + high );
        return low + high;
    };
    return count( f.index ) * pow2( position( f.index ) );
}

bool manager::eval( ref f, const std::vector<bool>& values ) const
{
    check( f );
    auto n = f.index;
    while ( n >= 2 )
    {
        auto v = _nodes[n].var;
        bool bit = v < values.size() && values[v];
        n = bit ? _nodes[n].high : _nodes[n].low;
    }
    return n == 1;
}

std::optional<assignment> manager::any_sat( ref f ) const
{
    check( f );
    if ( f.index == 0 )
        return std::nullopt;
    assignment path;
    auto n = f.index;
    while ( n >= 2 )
    {
        const auto& nd = _nodes[n];
        if ( nd.low != 0 )
        {
            path.emplace_back( nd.var, false );
            n = nd.low;
        }
        else
        {
            path.emplace_back( nd.var, true );
            n = nd.high;
        }
    }
    return path;
}

std::vector<var_id> manager::support( ref f ) const
{
    check( f );
    std::set<var_id> vars;
    std::vector<std::uint32_t> stack{ f.index };
    std::vector<bool> seen( _nodes.size(), false );
    while ( !stack.empty() )
    {
        auto n = stack.back();
        stack.pop_back();
        if ( n < 2 || seen[n] )
            continue;
        seen[n] = true;
        vars.insert( _nodes[n].var );
        stack.push_back( _nodes[n].low );
        stack.push_back( _nodes[n].high );
    }
    return { vars.begin(), vars.end() };
}

var_id manager::top_var( ref f ) const
{
    check( f );
    if ( f.index < 2 )
        throw validation_error( "terminal BDD node has no variable" );
    return _nodes[f.index].var;
}

ref manager::low( ref f ) const
{
    check( f );
    return ref{ _nodes[f.index].low, _id };
}

ref manager::high( ref f ) const
{
    check( f );
    return ref{ _nodes[f.index].high, _id };
}

audit_report manager::audit() const
{
    audit_report report;
    report.nodes = _nodes.size();
    std::set<std::tuple<var_id, std::uint32_t, std::uint32_t>> triples;
    for ( std::size_t i = 2; i < _nodes.size(); ++i )
    {
        const auto& nd = _nodes[i];
        if ( nd.low == nd.high )
            ++report.redundant_nodes;
        if ( level( nd.low ) <= nd.var || level( nd.high ) <= nd.var )
            ++report.order_violations;
        if ( !triples.emplace( nd.var, nd.low, nd.high ).second )
            ++report.duplicate_nodes;
    }
    return report;
}

} // namespace cosma::bdd
