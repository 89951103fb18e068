#include "cosma/cli.hpp"

#include "cosma/assets.hpp"
#include "cosma/error.hpp"
#include "cosma/frontend/parser.hpp"
#include "cosma/mc/checker.hpp"
#include "cosma/model/semantics.hpp"
#include "cosma/reach/export.hpp"
#include "cosma/reach/symbolic.hpp"
#include "cosma/vhdl/generate.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cosma
{

namespace
{

// Thrown to leave a command with a given status after reporting.
struct command_exit
{
    int status;
};

class console
{
public:
    console( std::ostream& out, std::ostream& err ) : out( out ), err( err )
    {
        const char* v = std::getenv( "COSMA_COLOR" );
        _color = v && std::string_view( v ) == "1";
    }

    std::string paint( std::string_view text, std::string_view code ) const
    {
        if ( !_color )
            return std::string( text );
        return "\033[" + std::string( code ) + "m" + std::string( text ) + "\033[0m";
    }

    void report( const diagnostic& d )
    {
        auto line = format( d );
        if ( _color )
        {
            auto word = std::string( to_string( d.severity ) ) + ":";
            if ( auto at = line.find( word ); at != std::string::npos )
                line.replace( at, word.size(),
                              paint( word, d.severity == severity::error     ? "1;31"
                                           : d.severity == severity::warning ? "1;33"
                                                                             : "1;36" ) );
        }
        err << line << "\n";
    }

    void report( const std::vector<diagnostic>& ds )
    {
        for ( const auto& d : ds )
            report( d );
    }

    [[noreturn]] void fail( int status, const std::string& message, source_span span = {} )
    {
        report( diagnostic{ severity::error, message, std::move( span ) } );
        throw command_exit{ status };
    }

    std::ostream& out;
    std::ostream& err;

private:
    bool _color = false;
};

std::string read_file( console& io, const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        io.fail( exit_input_error, "cannot read '" + path + "'", source_span{ path, 0, 0, 0 } );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file( console& io, const std::string& path, const std::string& text )
{
    std::ofstream f( path, std::ios::binary );
    if ( !f || !( f << text ) )
        io.fail( exit_input_error, "cannot write '" + path + "'", source_span{ path, 0, 0, 0 } );
}

// Notes (which symbols are environment inputs) are only shown by `lint`.
system load_system( console& io, const std::string& path, std::size_t* warnings = nullptr )
{
    auto parsed = parse_system( read_file( io, path ), path );
    for ( const auto& d : parsed.diagnostics )
    {
        if ( d.severity == severity::note && !warnings )
            continue;
        io.report( d );
        if ( warnings && d.severity == severity::warning )
            ++*warnings;
    }
    if ( !parsed.ok() )
        throw command_exit{ exit_input_error };
    return std::move( *parsed.value );
}

std::string plural( std::size_t n, std::string_view word )
{
    std::string suffix = n == 1 ? "" : word.ends_with( 's' ) ? "es" : "s";
    return std::to_string( n ) + " " + std::string( word ) + suffix;
}

int cmd_lint( console& io, const std::string& model )
{
    std::size_t warnings = 0;
    auto sys = load_system( io, model, &warnings );
    io.out << model << ": system " << sys.name << ", " << plural( sys.machines.size(), "machine" ) << ", "
           << plural( env_alphabet( sys ).size(), "environment input" ) << "; 0 errors, "
           << plural( warnings, "warning" ) << "\n";
    return exit_ok;
}

struct rg_options
{
    std::string engine = "explicit";
    std::string dot;
    std::string json;
};

int cmd_rg( console& io, const std::string& model, const rg_options& opts )
{
    auto sys = load_system( io, model );
    io.out << "system " << sys.name << ": " << plural( sys.machines.size(), "machine" ) << ", product of "
           << plural( product_size( sys ), "state" ) << "\n";

    std::optional<reach_graph> rg;
    std::optional<std::uint64_t> symbolic_count;
    if ( opts.engine == "explicit" || opts.engine == "both" || !opts.dot.empty() || !opts.json.empty() )
    {
        rg = build_rg_explicit( sys );
        if ( opts.engine != "bdd" )
            io.out << "explicit: " << plural( rg->node_count(), "reachable state" ) << ", "
                   << plural( rg->edge_count(), "edge" ) << "\n";
    }
    if ( opts.engine == "bdd" || opts.engine == "both" )
    {
        auto sym = build_rg_symbolic( sys );
        symbolic_count = sym.count;
        io.out << "symbolic: " << plural( sym.count, "reachable state" ) << " after "
               << plural( sym.iterations, "iteration" ) << "\n";
    }
    if ( opts.engine == "both" && rg->node_count() != *symbolic_count )
    {
        io.err << "error: engines disagree: explicit " << rg->node_count() << ", symbolic " << *symbolic_count << "\n";
        return exit_internal_error;
    }
    auto count = opts.engine == "bdd" ? *symbolic_count : rg->node_count();
    io.out << plural( count, "reachable state" ) << "\n";
    if ( rg )
    {
        auto quiet = rg->quiescent_nodes();
        io.out << "quiescent states: " << ( quiet.empty() ? "none" : "" );
        for ( std::size_t i = 0; i < quiet.size(); ++i )
            io.out << ( i ? ", " : "" ) << format_state( sys, rg->node( quiet[i] ) );
        io.out << "\n";
    }
    if ( !opts.dot.empty() )
        write_file( io, opts.dot, to_dot( *rg ) );
    if ( !opts.json.empty() )
        write_file( io, opts.json, to_json( *rg ) + "\n" );
    return exit_ok;
}

int cmd_check( console& io, const std::string& model, const std::string& queries_path, bool json )
{
    auto sys = load_system( io, model );
    auto parsed = parse_queries( read_file( io, queries_path ), sys, queries_path );
    io.report( parsed.diagnostics );
    if ( !parsed.ok() )
        return exit_input_error;
    auto rg = build_rg_explicit( sys );
    auto results = check_suite( rg, *parsed.value );
    if ( json )
        io.out << suite_json( rg, *parsed.value, results ) << "\n";
    else
    {
        auto text = suite_report( rg, *parsed.value, results );
        // Colour only the verdict column.
        std::istringstream lines( text );
        std::string line;
        while ( std::getline( lines, line ) )
        {
            for ( const auto& r : results )
                if ( line.rfind( r.name + " ", 0 ) == 0 )
                {
                    auto word = r.result.holds ? std::string( "true " ) : std::string( "false" );
                    if ( auto at = line.find( word, r.name.size() ); at != std::string::npos )
                        line.replace( at, word.size(), io.paint( word, r.result.holds ? "32" : "1;31" ) );
                    break;
                }
            io.out << line << "\n";
        }
    }
    for ( const auto& r : results )
        if ( !r.result.holds )
            return exit_query_false;
    return exit_ok;
}

struct vhdl_options
{
    std::string output;
    std::string encoding = "binary";
    unsigned delay_ns = 10;
    bool clock = false;
    std::string entity;
};

int cmd_vhdl( console& io, const std::string& model, const vhdl_options& opts )
{
    auto sys = load_system( io, model );
    vhdl::codegen_options cg;
    std::string text;
    try
    {
        cg = vhdl::parse_encoding( opts.encoding );
        cg.delay_ns = opts.delay_ns;
        cg.clock = opts.clock;
        cg.entity = opts.entity;
        text = vhdl::generate( sys, cg );
    }
    catch ( const validation_error& e )
    {
        io.fail( exit_input_error, e.what(), sys.span );
    }
    auto audit = vhdl::structural_audit( text, sys, cg );
    if ( !audit.ok() )
    {
        for ( const auto& issue : audit.issues )
            io.err << "error: VHDL audit: " << issue << "\n";
        return exit_internal_error;
    }
    if ( opts.output.empty() )
        io.out << text;
    else
    {
        write_file( io, opts.output, text );
        io.out << "wrote " << opts.output << ": " << plural( audit.processes, "process" ) << ", audit passed\n";
    }
    return exit_ok;
}

int cmd_examples( console& io, const std::string& dir )
{
    std::error_code ec;
    std::filesystem::create_directories( dir, ec );
    if ( ec )
        io.fail( exit_input_error, "cannot create directory '" + dir + "': " + ec.message() );
    for ( const auto& a : bundled_assets() )
    {
        auto path = ( std::filesystem::path( dir ) / a.name ).string();
        write_file( io, path, std::string( a.text ) );
        io.out << "wrote " << path << "\n";
    }
    return exit_ok;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    console io( out, err );

    CLI::App app{ "cosma: concurrent state machine analysis", "cosma" };
    app.require_subcommand( 1 );

    std::string model;
    auto* lint = app.add_subcommand( "lint", "Parse and validate a model" );
    lint->add_option( "model", model, "System file (.csm)" )->required();

    rg_options rgo;
    auto* rg = app.add_subcommand( "rg", "Build the reachability graph" );
    rg->add_option( "model", model, "System file (.csm)" )->required();
    rg->add_option( "--engine", rgo.engine, "explicit, bdd or both" )
        ->check( CLI::IsMember( { "explicit", "bdd", "both" } ) );
    rg->add_option( "--dot", rgo.dot, "Write the graph as Graphviz DOT" );
    rg->add_option( "--json", rgo.json, "Write the graph as JSON" );

    std::string queries;
    bool json = false;
    auto* check = app.add_subcommand( "check", "Check temporal requirements" );
    check->add_option( "model", model, "System file (.csm)" )->required();
    check->add_option( "--queries", queries, "Query file (.tq)" )->required();
    check->add_flag( "--json", json, "Print results as JSON" );

    vhdl_options vo;
    auto* vhdl_cmd = app.add_subcommand( "vhdl", "Generate VHDL" );
    vhdl_cmd->add_option( "model", model, "System file (.csm)" )->required();
    vhdl_cmd->add_option( "-o,--output", vo.output, "Output file (default: standard output)" );
    vhdl_cmd->add_option( "--state-encoding", vo.encoding, "binary, onehot or width:N" );
    vhdl_cmd->add_option( "--delay-ns", vo.delay_ns, "Delay at the end of each cycle" );
    vhdl_cmd->add_flag( "--clock", vo.clock, "Add a clk port and wait for its rising edge" );
    vhdl_cmd->add_option( "--entity", vo.entity, "Entity name (default: the system name)" );

    std::string emit;
    auto* examples = app.add_subcommand( "examples", "Write the bundled TLC benchmark files" );
    examples->add_option( "--emit", emit, "Target directory" )->required();

    try
    {
        std::vector<std::string> reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::ParseError& e )
    {
        auto code = app.exit( e, out, err );
        return code == 0 ? exit_ok : exit_input_error;
    }

    try
    {
        if ( *lint )
            return cmd_lint( io, model );
        if ( *rg )
            return cmd_rg( io, model, rgo );
        if ( *check )
            return cmd_check( io, model, queries, json );
        if ( *vhdl_cmd )
            return cmd_vhdl( io, model, vo );
        if ( *examples )
            return cmd_examples( io, emit );
    }
    catch ( const command_exit& e )
    {
        return e.status;
    }
    catch ( const validation_error& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    catch ( const std::exception& e )
    {
        err << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    }
    return exit_internal_error;
}

} // namespace cosma
