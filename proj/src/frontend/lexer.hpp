#pragma once

#include "cosma/source.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cosma::frontend
{

enum class token_kind
{
    identifier,
    number,
    lbrace,
    rbrace,
    lparen,
    rparen,
    lbracket,
    rbracket,
    semicolon,
    comma,
    colon,
    arrow,     // ->
    implies,   // => or U+21D2
    star,
    plus,
    bang,
    tilde,
    next_glyph,       // U+25CB
    eventually_glyph, // U+25C7
    always_glyph,     // U+25A1
    end,
    invalid,
};

struct token
{
    token_kind kind = token_kind::end;
    std::string text;
    source_span span;
};

// Splits the whole input up front. `//` comments and whitespace are dropped.
// Columns count code points, not bytes.
std::vector<token> tokenize( std::string_view text, const std::string& file );

std::string describe( const token& t );

} // namespace cosma::frontend
