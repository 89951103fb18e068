#include "cosma/frontend/parser.hpp"

#include "cosma/model/lint.hpp"
#include "cosma/model/semantics.hpp"
#include "lexer.hpp"

#include <functional>
#include <set>

namespace cosma
{

namespace
{

using frontend::token;
using frontend::token_kind;

struct syntax_error
{
    diagnostic diag;
};

class token_stream
{
public:
    explicit token_stream( std::vector<token> tokens ) : _tokens( std::move( tokens ) ) {}

    const token& peek( std::size_t ahead = 0 ) const
    {
        auto i = std::min( _pos + ahead, _tokens.size() - 1 );
        return _tokens[i];
    }

    token next()
    {
        token t = peek();
        if ( _pos + 1 < _tokens.size() )
            ++_pos;
        return t;
    }

    bool at( token_kind kind ) const { return peek().kind == kind; }
    bool at_word( std::string_view word ) const { return at( token_kind::identifier ) && peek().text == word; }

    bool accept( token_kind kind )
    {
        if ( !at( kind ) )
            return false;
        next();
        return true;
    }

    bool accept_word( std::string_view word )
    {
        if ( !at_word( word ) )
            return false;
        next();
        return true;
    }

    [[noreturn]] void fail( const std::string& expected ) const
    {
        const auto& t = peek();
        if ( t.kind == token_kind::invalid )
            throw syntax_error{ diagnostic{ severity::error, "unexpected character " + frontend::describe( t ), t.span } };
        throw syntax_error{ diagnostic{ severity::error, "expected " + expected + ", found " + frontend::describe( t ),
                                        t.span } };
    }

    token expect( token_kind kind, const std::string& what )
    {
        if ( !at( kind ) )
            fail( what );
        return next();
    }

    token expect_word( std::string_view word )
    {
        if ( !at_word( word ) )
            fail( "'" + std::string( word ) + "'" );
        return next();
    }

    token expect_identifier( const std::string& what ) { return expect( token_kind::identifier, what ); }

private:
    std::vector<token> _tokens;
    std::size_t _pos = 0;
};

source_span cover( const source_span& from, const source_span& to )
{
    source_span s = from;
    if ( to.line == from.line && to.column >= from.column )
        s.length = to.column + to.length - from.column;
    return s;
}

// Recursive descent over the shared Boolean syntax:
//   formula := and ("+" and)* ; and := unary ("*" unary)*
//   unary := ("!"|"~") unary | "(" formula ")" | IDENT | "1" | "0"
class formula_parser
{
public:
    using resolver = std::function<expr( const token& )>;

    formula_parser( token_stream& in, resolver resolve, bool not_keyword )
        : _in( in ), _resolve( std::move( resolve ) ), _not_keyword( not_keyword )
    {
    }

    expr parse_or()
    {
        expr lhs = parse_and();
        while ( _in.accept( token_kind::plus ) )
            lhs = make_or( lhs, parse_and() );
        return lhs;
    }

    bool starts_formula() const
    {
        switch ( _in.peek().kind )
        {
        case token_kind::bang:
        case token_kind::tilde:
        case token_kind::lparen:
        case token_kind::identifier:
        case token_kind::number:
            return true;
        default:
            return false;
        }
    }

private:
    expr parse_and()
    {
        expr lhs = parse_unary();
        while ( _in.accept( token_kind::star ) )
            lhs = make_and( lhs, parse_unary() );
        return lhs;
    }

    expr parse_unary()
    {
        if ( _in.accept( token_kind::bang ) || _in.accept( token_kind::tilde ) ||
             ( _not_keyword && _in.accept_word( "not" ) ) )
            return make_not( parse_unary() );
        if ( _in.accept( token_kind::lparen ) )
        {
            expr inner = parse_or();
            _in.expect( token_kind::rparen, "')'" );
            return inner;
        }
        if ( _in.at( token_kind::number ) )
        {
            const auto& t = _in.peek();
            if ( t.text != "0" && t.text != "1" )
                throw syntax_error{ diagnostic{ severity::error, "only the constants 0 and 1 are allowed, found '" + t.text + "'",
                                                t.span } };
            _in.next();
            return expr::constant( t.text == "1" );
        }
        if ( _in.at( token_kind::identifier ) )
            return _resolve( _in.next() );
        _in.fail( "a formula" );
    }

    token_stream& _in;
    resolver _resolve;
    bool _not_keyword;
};

// system := "system" IDENT "{" machine+ "}"
class system_parser
{
public:
    system_parser( std::string_view text, const std::string& file ) : _in( frontend::tokenize( text, file ) ) {}

    system parse()
    {
        system sys;
        auto head = _in.peek();
        if ( !_in.at_word( "system" ) )
            throw syntax_error{ diagnostic{ severity::error, "expected 'system'", head.span } };
        _in.next();
        auto name = _in.expect_identifier( "a system name" );
        sys.name = name.text;
        sys.span = cover( head.span, name.span );
        _in.expect( token_kind::lbrace, "'{'" );
        if ( !_in.at_word( "machine" ) )
            _in.fail( "'machine'" );
        while ( _in.at_word( "machine" ) )
            sys.machines.push_back( parse_machine( sys ) );
        _in.expect( token_kind::rbrace, "'machine' or '}'" );
        if ( !_in.at( token_kind::end ) )
            _in.fail( "end of input after the system block" );
        sys.link();
        return sys;
    }

private:
    // machine := "machine" IDENT "{" "init" IDENT ";" state+ "}"
    machine parse_machine( system& sys )
    {
        machine m;
        auto head = _in.expect_word( "machine" );
        auto name = _in.expect_identifier( "a machine name" );
        m.name = name.text;
        m.span = cover( head.span, name.span );
        _in.expect( token_kind::lbrace, "'{'" );
        _in.expect_word( "init" );
        m.initial = _in.expect_identifier( "the initial state name" ).text;
        _in.expect( token_kind::semicolon, "';'" );
        if ( !_in.at_word( "state" ) )
            _in.fail( "'state'" );
        while ( _in.at_word( "state" ) )
            parse_state( sys, m );
        _in.expect( token_kind::rbrace, "'state' or '}'" );
        return m;
    }

    // state := "state" IDENT "{" ("out" symlist ";")? arc* "}"
    void parse_state( system& sys, machine& m )
    {
        auto head = _in.expect_word( "state" );
        auto name = _in.expect_identifier( "a state name" );
        auto& s = m.add_state( name.text );
        s.span = cover( head.span, name.span );
        _in.expect( token_kind::lbrace, "'{'" );
        if ( _in.accept_word( "out" ) )
        {
            do
                s.outputs.insert( sys.symbols.intern( _in.expect_identifier( "an output symbol" ).text ) );
            while ( _in.accept( token_kind::comma ) );
            _in.expect( token_kind::semicolon, "',' or ';'" );
        }
        // `s` may be invalidated by later add_state calls; keep the index.
        const auto state_index = m.states.size() - 1;
        while ( _in.at( token_kind::arrow ) )
            parse_arc( sys, m, state_index );
        _in.expect( token_kind::rbrace, "'->' or '}'" );
    }

    // arc := "->" IDENT "when" formula ";"
    void parse_arc( system& sys, machine& m, std::size_t state_index )
    {
        auto head = _in.expect( token_kind::arrow, "'->'" );
        auto target = _in.expect_identifier( "a target state name" );
        _in.expect_word( "when" );
        formula_parser formulas( _in, [&sys]( const token& t ) { return expr::atom( sys.symbols.intern( t.text ) ); },
                                 false );
        expr guard = formulas.parse_or();
        auto end = _in.expect( token_kind::semicolon, "';'" );
        auto& a = m.add_arc( m.states[state_index].name, target.text, guard );
        a.span = cover( head.span, end.span );
    }

    token_stream _in;
};

void flatten_conjunction( const expr& e, std::vector<expr>& out )
{
    if ( e.kind() == expr_kind::conjunction )
    {
        flatten_conjunction( e.lhs(), out );
        flatten_conjunction( e.rhs(), out );
        return;
    }
    out.push_back( e );
}

// query := [IDENT ":"] ["always" | "□"] "(" formula "=>" consequent ")" ";"
//        | "ctl" IDENT ":" ctl ";"
// consequent := mode formula | "(" mode formula ")"
// mode := "next" | "○" | "eventually" | "◇" | "exists" ("eventually" | "◇")
class query_parser
{
public:
    query_parser( std::string_view text, const system& sys, const std::string& file )
        : _in( frontend::tokenize( text, file ) ), _sys( sys )
    {
        _result.symbols = sys.symbols;
        _state_symbols = produced_symbols( sys );
    }

    query_set parse( std::vector<diagnostic>& diags )
    {
        _diags = &diags;
        std::size_t index = 0;
        std::set<std::string> names;
        while ( !_in.at( token_kind::end ) )
        {
            ++index;
            auto item = _in.at_word( "ctl" ) && _in.peek( 1 ).kind == token_kind::identifier ? parse_ctl_item()
                                                                                            : parse_query_item( index );
            if ( !names.insert( item.name ).second )
                diags.push_back( diagnostic{ severity::error, "duplicate query name '" + item.name + "'", item.span } );
            _result.items.push_back( std::move( item ) );
        }
        return std::move( _result );
    }

private:
    expr resolve( const token& t )
    {
        auto known = _sys.symbols.find( t.text );
        if ( !known && !_warned.count( t.text ) )
        {
            _warned.insert( t.text );
            _diags->push_back( diagnostic{ severity::warning,
                                           "symbol '" + t.text + "' does not occur in system '" + _sys.name +
                                               "'; treated as an environment input",
                                           t.span } );
        }
        auto s = _result.symbols.intern( t.text );
        _spans.emplace( s.id, t.span );
        return expr::atom( s );
    }

    bool is_state_symbol( symbol s ) const { return _state_symbols.contains( s ); }

    void require_state_atoms( const symbol_set& used, const std::string& where )
    {
        for ( auto s : used )
            if ( !is_state_symbol( s ) )
            {
                auto span = _spans.count( s.id ) ? _spans.at( s.id ) : source_span{};
                _diags->push_back( diagnostic{ severity::error,
                                               where + " refers to '" + _result.symbols.name( s ) +
                                                   "', which no machine produces; only state outputs are observable",
                                               span } );
            }
    }

    requirement parse_query_item( std::size_t index )
    {
        requirement item;
        auto first = _in.peek();
        if ( _in.at( token_kind::identifier ) && _in.peek( 1 ).kind == token_kind::colon )
        {
            item.name = _in.next().text;
            _in.next();
        }
        else
        {
            item.name = "query_" + std::to_string( index );
        }
        if ( !_in.accept_word( "always" ) )
            _in.accept( token_kind::always_glyph );

        formula_parser formulas( _in, [this]( const token& t ) { return resolve( t ); }, true );
        _in.expect( token_kind::lparen, "'('" );
        implication_query q;
        q.antecedent = formulas.parse_or();
        _in.expect( token_kind::implies, "'=>'" );
        bool wrapped = false;
        if ( _in.at( token_kind::lparen ) && starts_mode( 1 ) )
        {
            _in.next();
            wrapped = true;
        }
        q.mode = parse_mode();
        q.consequent = formulas.parse_or();
        if ( wrapped )
            _in.expect( token_kind::rparen, "')'" );
        _in.expect( token_kind::rparen, "')'" );
        auto end = _in.expect( token_kind::semicolon, "';'" );
        item.span = cover( first.span, end.span );

        require_state_atoms( atoms( q.consequent ), "consequent of '" + item.name + "'" );
        std::vector<expr> conjuncts;
        flatten_conjunction( q.antecedent, conjuncts );
        for ( const auto& c : conjuncts )
        {
            auto used = atoms( c );
            bool has_state = false, has_env = false;
            for ( auto s : used )
                ( is_state_symbol( s ) ? has_state : has_env ) = true;
            if ( has_state && has_env )
                _diags->push_back( diagnostic{ severity::error,
                                               "antecedent of '" + item.name + "' mixes state and environment symbols in '" +
                                                   to_string( c, _result.symbols ) + "'; split it into separate conjuncts",
                                               item.span } );
        }
        item.body = std::move( q );
        return item;
    }

    bool starts_mode( std::size_t ahead ) const
    {
        const auto& t = _in.peek( ahead );
        if ( t.kind == token_kind::next_glyph || t.kind == token_kind::eventually_glyph )
            return true;
        return t.kind == token_kind::identifier && ( t.text == "next" || t.text == "eventually" || t.text == "exists" );
    }

    query_mode parse_mode()
    {
        if ( _in.accept_word( "next" ) || _in.accept( token_kind::next_glyph ) )
            return query_mode::next;
        if ( _in.accept_word( "eventually" ) || _in.accept( token_kind::eventually_glyph ) )
            return query_mode::eventually;
        if ( _in.accept_word( "exists" ) )
        {
            if ( _in.accept_word( "eventually" ) || _in.accept( token_kind::eventually_glyph ) )
                return query_mode::exists_eventually;
            _in.fail( "'eventually' after 'exists'" );
        }
        _in.fail( "'next' or 'eventually'" );
    }

    requirement parse_ctl_item()
    {
        requirement item;
        auto head = _in.expect_word( "ctl" );
        item.name = _in.expect_identifier( "a query name" ).text;
        _in.expect( token_kind::colon, "':'" );
        auto f = parse_ctl();
        auto end = _in.expect( token_kind::semicolon, "';'" );
        item.span = cover( head.span, end.span );
        require_state_atoms( atoms( f ), "CTL formula '" + item.name + "'" );
        item.body = std::move( f );
        return item;
    }

    // ctl := or (("=>"|"->") ctl)?
    ctl_formula parse_ctl()
    {
        auto lhs = parse_ctl_or();
        if ( _in.accept( token_kind::implies ) || _in.accept( token_kind::arrow ) )
            return ctl_formula::binary( ctl_kind::implication, lhs, parse_ctl() );
        return lhs;
    }

    ctl_formula parse_ctl_or()
    {
        auto lhs = parse_ctl_and();
        while ( _in.accept( token_kind::plus ) )
            lhs = ctl_formula::binary( ctl_kind::disjunction, lhs, parse_ctl_and() );
        return lhs;
    }

    ctl_formula parse_ctl_and()
    {
        auto lhs = parse_ctl_unary();
        while ( _in.accept( token_kind::star ) )
            lhs = ctl_formula::binary( ctl_kind::conjunction, lhs, parse_ctl_unary() );
        return lhs;
    }

    ctl_formula parse_ctl_unary()
    {
        if ( _in.accept( token_kind::bang ) || _in.accept( token_kind::tilde ) || _in.accept_word( "not" ) )
            return ctl_formula::unary( ctl_kind::negation, parse_ctl_unary() );
        if ( _in.accept( token_kind::lparen ) )
        {
            auto inner = parse_ctl();
            _in.expect( token_kind::rparen, "')'" );
            return inner;
        }
        if ( _in.at( token_kind::number ) )
        {
            auto t = _in.next();
            if ( t.text != "0" && t.text != "1" )
                throw syntax_error{ diagnostic{ severity::error, "only the constants 0 and 1 are allowed", t.span } };
            return ctl_formula::constant( t.text == "1" );
        }
        if ( !_in.at( token_kind::identifier ) )
            _in.fail( "a CTL formula" );

        const auto& word = _in.peek().text;
        static const std::pair<std::string_view, ctl_kind> temporal[] = {
            { "AX", ctl_kind::ax }, { "EX", ctl_kind::ex }, { "AF", ctl_kind::af },
            { "EF", ctl_kind::ef }, { "AG", ctl_kind::ag }, { "EG", ctl_kind::eg },
        };
        for ( auto [text, kind] : temporal )
            if ( word == text )
            {
                _in.next();
                return ctl_formula::unary( kind, parse_ctl_unary() );
            }
        // A[f U g], E[f U g], AU(f, g), EU(f, g)
        if ( ( word == "A" || word == "E" ) && _in.peek( 1 ).kind == token_kind::lbracket )
        {
            auto kind = word == "A" ? ctl_kind::au : ctl_kind::eu;
            _in.next();
            _in.next();
            auto lhs = parse_ctl();
            _in.expect_word( "U" );
            auto rhs = parse_ctl();
            _in.expect( token_kind::rbracket, "']'" );
            return ctl_formula::binary( kind, lhs, rhs );
        }
        if ( ( word == "AU" || word == "EU" ) && _in.peek( 1 ).kind == token_kind::lparen )
        {
            auto kind = word == "AU" ? ctl_kind::au : ctl_kind::eu;
            _in.next();
            _in.next();
            auto lhs = parse_ctl();
            _in.expect( token_kind::comma, "','" );
            auto rhs = parse_ctl();
            _in.expect( token_kind::rparen, "')'" );
            return ctl_formula::binary( kind, lhs, rhs );
        }
        auto atom = resolve( _in.next() );
        return ctl_formula::atom( atom.atom_symbol() );
    }

    token_stream _in;
    const system& _sys;
    query_set _result;
    symbol_set _state_symbols;
    std::set<std::string> _warned;
    std::map<std::uint32_t, source_span> _spans;
    std::vector<diagnostic>* _diags = nullptr;
};

} // namespace

parse_result<system> parse_system_syntax( std::string_view text, const std::string& file )
{
    parse_result<system> result;
    try
    {
        result.value = system_parser( text, file ).parse();
    }
    catch ( const syntax_error& e )
    {
        result.diagnostics.push_back( e.diag );
    }
    return result;
}

parse_result<system> parse_system( std::string_view text, const std::string& file )
{
    auto result = parse_system_syntax( text, file );
    if ( !result.value )
        return result;
    auto report = validate( *result.value );
    for ( auto& d : report.items )
    {
        if ( d.span.file.empty() )
            d.span.file = file;
        result.diagnostics.push_back( std::move( d ) );
    }
    if ( has_errors( result.diagnostics ) )
        result.value.reset();
    return result;
}

parse_result<query_set> parse_queries( std::string_view text, const system& sys, const std::string& file )
{
    parse_result<query_set> result;
    try
    {
        auto queries = query_parser( text, sys, file ).parse( result.diagnostics );
        if ( !has_errors( result.diagnostics ) )
            result.value = std::move( queries );
    }
    catch ( const syntax_error& e )
    {
        result.diagnostics.push_back( e.diag );
    }
    return result;
}

} // namespace cosma
