#include "lexer.hpp"

#include <cctype>

namespace cosma::frontend
{

namespace
{

struct glyph
{
    std::string_view bytes;
    token_kind kind;
};

constexpr glyph glyphs[] = {
    { "\xE2\x97\x8B", token_kind::next_glyph },       // ○
    { "\xE2\x97\x87", token_kind::eventually_glyph }, // ◇
    { "\xE2\x96\xA1", token_kind::always_glyph },     // □
    { "\xE2\x87\x92", token_kind::implies },          // ⇒
};

bool ident_start( char c )
{
    return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_';
}

bool ident_char( char c )
{
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
}

} // namespace

std::vector<token> tokenize( std::string_view text, const std::string& file )
{
    std::vector<token> out;
    std::size_t pos = 0, line = 1, column = 1;

    auto advance = [&]( std::size_t bytes ) {
        for ( std::size_t i = 0; i < bytes && pos < text.size(); ++i, ++pos )
        {
            unsigned char c = static_cast<unsigned char>( text[pos] );
            if ( c == '\n' )
            {
                ++line;
                column = 1;
            }
            else if ( ( c & 0xC0 ) != 0x80 )
            {
                ++column;
            }
        }
    };
    auto emit = [&]( token_kind kind, std::size_t bytes, std::size_t width ) {
        token t{ kind, std::string( text.substr( pos, bytes ) ), source_span{ file, line, column, width } };
        out.push_back( std::move( t ) );
        advance( bytes );
    };

    // Skip a UTF-8 byte order mark.
    if ( text.substr( 0, 3 ) == "\xEF\xBB\xBF" )
        pos = 3;

    while ( pos < text.size() )
    {
        char c = text[pos];
        if ( std::isspace( static_cast<unsigned char>( c ) ) )
        {
            advance( 1 );
            continue;
        }
        if ( text.substr( pos, 2 ) == "//" )
        {
            while ( pos < text.size() && text[pos] != '\n' )
                advance( 1 );
            continue;
        }
        if ( ident_start( c ) )
        {
            std::size_t end = pos;
            while ( end < text.size() && ident_char( text[end] ) )
                ++end;
            emit( token_kind::identifier, end - pos, end - pos );
            continue;
        }
        if ( std::isdigit( static_cast<unsigned char>( c ) ) )
        {
            std::size_t end = pos;
            while ( end < text.size() && std::isdigit( static_cast<unsigned char>( text[end] ) ) )
                ++end;
            emit( token_kind::number, end - pos, end - pos );
            continue;
        }
        if ( text.substr( pos, 2 ) == "->" )
        {
            emit( token_kind::arrow, 2, 2 );
            continue;
        }
        if ( text.substr( pos, 2 ) == "=>" )
        {
            emit( token_kind::implies, 2, 2 );
            continue;
        }

        bool matched = false;
        for ( const auto& g : glyphs )
            if ( text.substr( pos, g.bytes.size() ) == g.bytes )
            {
                emit( g.kind, g.bytes.size(), 1 );
                matched = true;
                break;
            }
        if ( matched )
            continue;

        token_kind kind = token_kind::invalid;
        switch ( c )
        {
        case '{': kind = token_kind::lbrace; break;
        case '}': kind = token_kind::rbrace; break;
        case '(': kind = token_kind::lparen; break;
        case ')': kind = token_kind::rparen; break;
        case '[': kind = token_kind::lbracket; break;
        case ']': kind = token_kind::rbracket; break;
        case ';': kind = token_kind::semicolon; break;
        case ',': kind = token_kind::comma; break;
        case ':': kind = token_kind::colon; break;
        case '*': kind = token_kind::star; break;
        case '+': kind = token_kind::plus; break;
        case '!': kind = token_kind::bang; break;
        case '~': kind = token_kind::tilde; break;
        default: break;
        }
        if ( kind == token_kind::invalid )
        {
            // Swallow a whole multi-byte sequence so the message shows the character.
            std::size_t bytes = 1;
            while ( pos + bytes < text.size() && ( static_cast<unsigned char>( text[pos + bytes] ) & 0xC0 ) == 0x80 )
                ++bytes;
            emit( token_kind::invalid, bytes, 1 );
            continue;
        }
        emit( kind, 1, 1 );
    }
    out.push_back( token{ token_kind::end, "", source_span{ file, line, column, 0 } } );
    return out;
}

std::string describe( const token& t )
{
    switch ( t.kind )
    {
    case token_kind::end:
        return "end of input";
    case token_kind::identifier:
        return "identifier '" + t.text + "'";
    case token_kind::number:
        return "number '" + t.text + "'";
    default:
        return "'" + t.text + "'";
    }
}

} // namespace cosma::frontend
