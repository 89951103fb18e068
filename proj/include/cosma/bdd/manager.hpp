#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cosma::bdd
{

// Handle to a node of one manager. Two handles of the same manager are equal
// iff they denote the same Boolean function.
struct ref
{
    std::uint32_t index = 0;
    std::uint32_t owner = 0;

    friend bool operator==( const ref&, const ref& ) = default;
};

enum class binary_op : std::uint8_t
{
    conj,
    disj,
    exclusive_or,
};

using var_id = std::uint32_t;
using assignment = std::vector<std::pair<var_id, bool>>;

struct audit_report
{
    std::size_t nodes = 0;
    std::size_t redundant_nodes = 0;  // low == high
    std::size_t order_violations = 0; // child not strictly below parent
    std::size_t duplicate_nodes = 0;  // same (var, low, high) stored twice

    bool ok() const { return redundant_nodes == 0 && order_violations == 0 && duplicate_nodes == 0; }
};

// Reduced ordered BDD store. The variable order is the declaration order and
// never changes; nodes are never collected, so handles stay valid for the
// lifetime of the manager. Not thread-safe: one owner at a time.
class manager
{
public:
    manager();
    explicit manager( const std::vector<std::string>& order );

    manager( const manager& ) = delete;
    manager& operator=( const manager& ) = delete;
    manager( manager&& ) noexcept = default;
    manager& operator=( manager&& ) noexcept = default;

    // Appends the variable at the end of the order on first use.
    var_id declare( std::string_view name );
    std::optional<var_id> find_var( std::string_view name ) const;
    const std::string& var_name( var_id v ) const;
    std::size_t var_count() const { return _names.size(); }

    ref bottom() const { return ref{ 0, _id }; }
    ref top() const { return ref{ 1, _id }; }
    ref constant( bool value ) const { return value ? top() : bottom(); }

    ref mk_var( std::string_view name );
    ref var( var_id v );
    ref nvar( var_id v );

    ref apply( binary_op op, ref f, ref g );
    ref conj( ref f, ref g ) { return apply( binary_op::conj, f, g ); }
    ref disj( ref f, ref g ) { return apply( binary_op::disj, f, g ); }
    ref exclusive_or( ref f, ref g ) { return apply( binary_op::exclusive_or, f, g ); }
    ref negate( ref f );
    ref ite( ref f, ref g, ref h );

    ref exists( const std::vector<var_id>& vars, ref f );
    ref forall( const std::vector<var_id>& vars, ref f );
    ref cofactor( ref f, var_id v, bool value );
    // Simultaneous variable substitution: each `from` variable is replaced by
    // the `to` variable. Works for any mapping, order preserving or not.
    ref rename( ref f, const std::vector<std::pair<var_id, var_id>>& mapping );

    // Number of assignments to variables 0..nvars-1 that satisfy f.
    std::uint64_t sat_count( ref f, std::size_t nvars ) const;
    // Number of assignments to exactly the given variables that satisfy f.
    // The support of f must lie within `vars`.
    std::uint64_t sat_count( ref f, const std::vector<var_id>& vars ) const;

    bool eval( ref f, const std::vector<bool>& values ) const;
    // Lexicographically smallest path to TRUE (low branch first); variables not
    // on the path are left out.
    std::optional<assignment> any_sat( ref f ) const;
    std::vector<var_id> support( ref f ) const;

    bool is_true( ref f ) const { return check( f ).index == 1; }
    bool is_false( ref f ) const { return check( f ).index == 0; }
    bool is_terminal( ref f ) const { return check( f ).index < 2; }
    var_id top_var( ref f ) const;
    ref low( ref f ) const;
    ref high( ref f ) const;

    std::size_t node_count() const { return _nodes.size(); }
    audit_report audit() const;

private:
    struct node
    {
        var_id var;
        std::uint32_t low;
        std::uint32_t high;
    };

    struct key
    {
        std::uint32_t a, b, c, d;
        friend bool operator==( const key&, const key& ) = default;
    };

    struct key_hash
    {
        std::size_t operator()( const key& k ) const noexcept;
    };

    static constexpr var_id terminal_var = 0xffffffffu;

    const ref& check( const ref& f ) const;
    std::uint32_t make( var_id v, std::uint32_t low, std::uint32_t high );
    var_id level( std::uint32_t n ) const { return _nodes[n].var; }

    std::uint32_t apply_rec( binary_op op, std::uint32_t f, std::uint32_t g );
    std::uint32_t not_rec( std::uint32_t f );
    std::uint32_t ite_rec( std::uint32_t f, std::uint32_t g, std::uint32_t h );
    std::uint32_t exists_rec( std::uint32_t f, std::uint32_t cube );
    std::uint32_t cofactor_rec( std::uint32_t f, var_id v, bool value,
                                std::unordered_map<std::uint32_t, std::uint32_t>& memo );
    std::uint32_t cube_of( const std::vector<var_id>& vars );

    std::uint32_t _id;
    std::vector<std::string> _names;
    std::unordered_map<std::string, var_id> _var_ids;
    std::vector<node> _nodes;
    std::unordered_map<key, std::uint32_t, key_hash> _unique;
    std::unordered_map<key, std::uint32_t, key_hash> _cache;
};

} // namespace cosma::bdd
