#include "kmm/la/parser.hpp"

#include "la/lexer.hpp"

namespace kmm::la {

parse_error::parse_error(const std::string& message, SourcePos p)
    : std::invalid_argument(message + " at " + std::to_string(p.line) + ":" +
                            std::to_string(p.column)),
      pos(p) {}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    TermPtr term_only() {
        TermPtr t = parse_term();
        expect(Tok::End, "end of input");
        return t;
    }

    FormulaPtr formula_only() {
        FormulaPtr f = parse_formula();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    const Token& cur() const { return toks_[at_]; }
    const Token& next() { return toks_[at_++]; }
    bool peek(Tok k) const { return cur().kind == k; }
    bool peek_kw(std::string_view w) const {
        return cur().kind == Tok::Keyword && cur().text == w;
    }
    bool accept(Tok k) {
        if (!peek(k)) return false;
        ++at_;
        return true;
    }
    bool accept_kw(std::string_view w) {
        if (!peek_kw(w)) return false;
        ++at_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k))
            throw parse_error("expected " + std::string(what) + ", found '" + cur().text + "'",
                              cur().pos);
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, cur().pos); }

    // ---- formulas ----

    FormulaPtr parse_formula() { return parse_iff(); }

    FormulaPtr parse_iff() {
        FormulaPtr f = parse_implies();
        while (peek(Tok::DArrow)) {
            SourcePos p = next().pos;
            auto g = iff(f, parse_implies());
            const_cast<Formula*>(g.get())->pos = p;
            f = g;
        }
        return f;
    }

    FormulaPtr parse_implies() {
        FormulaPtr f = parse_or();
        if (peek(Tok::Arrow)) {
            SourcePos p = next().pos;
            auto g = implies(f, parse_implies());  // right-assoc
            const_cast<Formula*>(g.get())->pos = p;
            return g;
        }
        return f;
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (peek_kw("or")) {
            SourcePos p = next().pos;
            auto g = lor(f, parse_and());
            const_cast<Formula*>(g.get())->pos = p;
            f = g;
        }
        return f;
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_unary_formula();
        while (peek_kw("and")) {
            SourcePos p = next().pos;
            auto g = land(f, parse_unary_formula());
            const_cast<Formula*>(g.get())->pos = p;
            f = g;
        }
        return f;
    }

    FormulaPtr parse_unary_formula() {
        if (peek_kw("not")) {
            SourcePos p = next().pos;
            auto f = lnot(parse_unary_formula());
            const_cast<Formula*>(f.get())->pos = p;
            return f;
        }
        if (peek_kw("forall") || peek_kw("exists")) return parse_quantifier();
        // Either "( formula )" or an atom starting with a (possibly
        // parenthesized) term; resolve by trying the term route first.
        if (peek(Tok::LParen)) {
            std::size_t mark = at_;
            try {
                return parse_atom();
            } catch (const parse_error&) {
                at_ = mark;
            }
            expect(Tok::LParen, "'('");
            FormulaPtr f = parse_formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        return parse_atom();
    }

    FormulaPtr parse_quantifier() {
        const Token& q = next();
        bool universal = q.text == "forall";
        if (!peek(Tok::Ident)) fail("expected a variable after '" + q.text + "'");
        Token v = next();
        auto vsort = variable_sort(v.text);
        if (!vsort) throw parse_error("cannot assign a sort to '" + v.text + "'", v.pos);
        if (*vsort == Sort::Ring)
            throw parse_error("only index and matrix variables can be quantified", v.pos);
        expect(Tok::Le, "'<=' (quantifiers must be bounded)");
        TermPtr bound = parse_term();
        expect(Tok::Dot, "'.' after the quantifier bound");
        FormulaPtr body = parse_formula();
        FormulaPtr f;
        if (*vsort == Sort::Index)
            f = universal ? forall_index(v.text, bound, body) : exists_index(v.text, bound, body);
        else
            f = universal ? forall_matrix(v.text, bound, body)
                          : exists_matrix(v.text, bound, body);
        const_cast<Formula*>(f.get())->pos = q.pos;
        return f;
    }

    FormulaPtr parse_atom() {
        TermPtr lhs = parse_term();
        if (accept(Tok::Le)) {
            auto f = le(lhs, parse_term());
            return f;
        }
        if (accept(Tok::Eq)) {
            auto f = eq(lhs, parse_term());
            return f;
        }
        fail("expected '=' or '<=' in atomic formula");
    }

    // ---- terms ----

    TermPtr parse_term() { return parse_additive(); }

    TermPtr parse_additive() {
        TermPtr t = parse_multiplicative();
        while (peek(Tok::Plus) || peek(Tok::Minus)) {
            bool plus = next().kind == Tok::Plus;
            TermPtr rhs = parse_multiplicative();
            t = plus ? add(t, rhs) : sub(t, rhs);
        }
        return t;
    }

    TermPtr parse_multiplicative() {
        TermPtr t = parse_unary_term();
        while (accept(Tok::Star)) t = mul(t, parse_unary_term());
        return t;
    }

    TermPtr parse_unary_term() {
        if (accept(Tok::Minus)) return neg(parse_unary_term());
        return parse_primary();
    }

    TermPtr parse_primary() {
        const Token& tok = cur();
        switch (tok.kind) {
            case Tok::Number: {
                next();
                TermPtr t = tok.suffix ? lit_sorted(tok.number, *tok.suffix) : lit(tok.number);
                const_cast<Term*>(t.get())->pos = tok.pos;
                return t;
            }
            case Tok::LParen: {
                next();
                TermPtr t = parse_term();
                expect(Tok::RParen, "')'");
                return t;
            }
            case Tok::Ident: {
                next();
                if (!variable_sort(tok.text))
                    throw parse_error("cannot assign a sort to '" + tok.text + "'", tok.pos);
                TermPtr t = var(tok.text);
                const_cast<Term*>(t.get())->pos = tok.pos;
                return t;
            }
            case Tok::Keyword: return parse_keyword_term();
            default: fail("expected a term");
        }
    }

    TermPtr parse_keyword_term() {
        const Token kw = next();
        if (kw.text == "lambda") {
            if (!peek(Tok::Ident)) fail("expected first lambda binder");
            Token bi = next();
            if (!peek(Tok::Ident)) fail("expected second lambda binder");
            Token bj = next();
            if (bi.text == bj.text)
                throw parse_error("lambda binders must be distinct", bj.pos);
            for (const Token* b : {&bi, &bj})
                if (variable_sort(b->text) != Sort::Index)
                    throw parse_error("lambda binders must be index variables", b->pos);
            expect(Tok::Langle, "'<'");
            TermPtr m = parse_term();
            expect(Tok::Comma, "','");
            TermPtr n = parse_term();
            expect(Tok::Comma, "','");
            TermPtr body = parse_term();
            expect(Tok::Rangle, "'>'");
            TermPtr t = lam(bi.text, bj.text, m, n, body);
            const_cast<Term*>(t.get())->pos = kw.pos;
            return t;
        }
        if (kw.text == "cond") {
            expect(Tok::LParen, "'('");
            FormulaPtr g = parse_formula();
            expect(Tok::Comma, "','");
            TermPtr a = parse_term();
            expect(Tok::Comma, "','");
            TermPtr b = parse_term();
            expect(Tok::RParen, "')'");
            TermPtr t = cond(g, a, b);
            const_cast<Term*>(t.get())->pos = kw.pos;
            return t;
        }
        auto unary_fn = [&](TermPtr (*make)(TermPtr)) {
            expect(Tok::LParen, "'('");
            TermPtr a = parse_term();
            expect(Tok::RParen, "')'");
            TermPtr t = make(a);
            const_cast<Term*>(t.get())->pos = kw.pos;
            return t;
        };
        auto binary_fn = [&](TermPtr (*make)(TermPtr, TermPtr)) {
            expect(Tok::LParen, "'('");
            TermPtr a = parse_term();
            expect(Tok::Comma, "','");
            TermPtr b = parse_term();
            expect(Tok::RParen, "')'");
            TermPtr t = make(a, b);
            const_cast<Term*>(t.get())->pos = kw.pos;
            return t;
        };
        if (kw.text == "r") return unary_fn(rows);
        if (kw.text == "c") return unary_fn(cols);
        if (kw.text == "Sigma") return unary_fn(sum_term);
        if (kw.text == "inv") return unary_fn(inv);
        if (kw.text == "div") return binary_fn(div_term);
        if (kw.text == "rem") return binary_fn(rem_term);
        if (kw.text == "e") {
            expect(Tok::LParen, "'('");
            TermPtr m = parse_term();
            expect(Tok::Comma, "','");
            TermPtr i = parse_term();
            expect(Tok::Comma, "','");
            TermPtr j = parse_term();
            expect(Tok::RParen, "')'");
            TermPtr t = entry(m, i, j);
            const_cast<Term*>(t.get())->pos = kw.pos;
            return t;
        }
        throw parse_error("'" + kw.text + "' cannot start a term", kw.pos);
    }
};

} // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).term_only(); }
FormulaPtr parse_formula(const std::string& text) { return Parser(text).formula_only(); }

std::variant<TermPtr, FormulaPtr> parse_any(const std::string& text) {
    try {
        return parse_formula(text);
    } catch (const parse_error&) {
        return parse_term(text);
    }
}

} // namespace kmm::la
