#ifndef KMM_LA_LEXER_HPP
#define KMM_LA_LEXER_HPP

#include <string>
#include <vector>

#include "kmm/la/ast.hpp"

namespace kmm::la {

enum class Tok {
    Number,   // digits, optionally suffixed _index or _ring
    Ident,    // variable name
    Keyword,  // lambda cond div rem e r c Sigma forall exists not and or inv
    LParen, RParen, Langle, Rangle, Comma, Dot,
    Plus, Minus, Star,
    Le, Eq, Arrow, DArrow,  // <=  =  ->  <->
    End,
};

struct Token {
    Tok kind;
    std::string text;
    long long number = 0;
    std::optional<Sort> suffix;  // for numbers
    SourcePos pos;
};

std::vector<Token> lex(const std::string& text);
bool is_reserved(std::string_view word);

} // namespace kmm::la

#endif
