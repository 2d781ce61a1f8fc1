#include "la/lexer.hpp"

#include <array>
#include <cctype>

#include "kmm/la/parser.hpp"

namespace kmm::la {

namespace {
constexpr std::array<std::string_view, 14> kReserved = {
    "lambda", "cond", "div", "rem", "e", "r", "c", "Sigma",
    "forall", "exists", "not", "and", "or", "inv",
};
}

bool is_reserved(std::string_view word) {
    for (auto w : kReserved)
        if (w == word) return true;
    return false;
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;

    auto pos = [&] { return SourcePos{line, col}; };
    auto advance = [&](std::size_t k) {
        for (std::size_t s = 0; s < k; ++s, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto push = [&](Tok k, std::string t, SourcePos p) {
        Token tok;
        tok.kind = k;
        tok.text = std::move(t);
        tok.pos = p;
        out.push_back(std::move(tok));
    };

    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        SourcePos p = pos();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            Token tok;
            tok.kind = Tok::Number;
            tok.text = text.substr(i, j - i);
            tok.number = std::stoll(tok.text);
            tok.pos = p;
            advance(j - i);
            if (i < text.size() && text[i] == '_') {
                std::size_t k = i + 1;
                while (k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]))) ++k;
                std::string suffix = text.substr(i + 1, k - i - 1);
                if (suffix == "index")
                    tok.suffix = Sort::Index;
                else if (suffix == "ring")
                    tok.suffix = Sort::Ring;
                else
                    throw parse_error("unknown numeral suffix '_" + suffix + "'", p);
                advance(k - i);
            }
            out.push_back(std::move(tok));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_' || text[j] == '\''))
                ++j;
            std::string word = text.substr(i, j - i);
            advance(j - i);
            Tok kind = is_reserved(word) ? Tok::Keyword : Tok::Ident;
            push(kind, std::move(word), p);
            continue;
        }
        switch (ch) {
            case '(': push(Tok::LParen, "(", p); advance(1); continue;
            case ')': push(Tok::RParen, ")", p); advance(1); continue;
            case ',': push(Tok::Comma, ",", p); advance(1); continue;
            case '.': push(Tok::Dot, ".", p); advance(1); continue;
            case '+': push(Tok::Plus, "+", p); advance(1); continue;
            case '*': push(Tok::Star, "*", p); advance(1); continue;
            case '>': push(Tok::Rangle, ">", p); advance(1); continue;
            case '=': push(Tok::Eq, "=", p); advance(1); continue;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    push(Tok::Arrow, "->", p);
                    advance(2);
                } else {
                    push(Tok::Minus, "-", p);
                    advance(1);
                }
                continue;
            case '<':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    push(Tok::Le, "<=", p);
                    advance(2);
                } else if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
                    push(Tok::DArrow, "<->", p);
                    advance(3);
                } else {
                    push(Tok::Langle, "<", p);
                    advance(1);
                }
                continue;
            default:
                throw parse_error(std::string("unexpected character '") + ch + "'", p);
        }
    }
    Token end;
    end.kind = Tok::End;
    end.pos = pos();
    out.push_back(std::move(end));
    return out;
}

} // namespace kmm::la
