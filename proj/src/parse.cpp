#include "puiseux/parse.hpp"

#include <cctype>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

struct Lexer {
    std::string src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }
    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw SyntaxError("expected integer", pos);
        return Integer(src.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                    src[pos] == '_'))
            ++pos;
        if (start == pos) throw SyntaxError("expected identifier", pos);
        return src.substr(start, pos - start);
    }
};

struct ExprParser {
    Lexer lex;
    const std::vector<std::string>* vars;

    PuiseuxPoly parse() {
        PuiseuxPoly p = expr();
        if (!lex.eof()) throw SyntaxError("trailing input", lex.pos);
        return p;
    }

    int arity() const { return static_cast<int>(vars->size()); }

    PuiseuxPoly expr() {
        PuiseuxPoly p = lex.accept('-') ? -term() : term();
        while (true) {
            if (lex.accept('+'))
                p += term();
            else if (lex.accept('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    PuiseuxPoly term() {
        PuiseuxPoly p = power();
        while (true) {
            if (lex.accept('*')) {
                p = p * power();
            } else if (lex.accept('/')) {
                std::size_t at = lex.pos;
                PuiseuxPoly d = power();
                if (!d.is_constant() || d.is_zero())
                    throw SyntaxError("division only by nonzero constants", at);
                p = p.scaled(Rational(1) / d.coeff(ExpVec(static_cast<std::size_t>(arity()))));
            } else {
                break;
            }
        }
        return p;
    }

    Rational exponent() {
        if (lex.accept('(')) {
            bool neg = lex.accept('-');
            Integer num = lex.integer();
            Integer den(1);
            if (lex.accept('/')) den = lex.integer();
            lex.expect(')');
            Rational r{num, den};
            return neg ? -r : r;
        }
        bool neg = lex.accept('-');
        Rational r{lex.integer()};
        return neg ? -r : r;
    }

    PuiseuxPoly power() {
        PuiseuxPoly base = atom();
        if (!lex.accept('^')) return base;
        std::size_t at = lex.pos;
        Rational e = exponent();
        // Monomial bases admit rational exponents; general bases need a
        // non-negative integer.
        if (base.term_count() == 1) {
            auto [be, bc] = *base.terms().begin();
            if (bc == Rational(1)) return PuiseuxPoly::monomial(be.scaled(e), Rational(1));
            if (e.is_integer() && e.sign() >= 0)
                return base.pow(static_cast<unsigned>(e.num().get_ui()));
            throw SyntaxError("rational exponent on non-monomial base", at);
        }
        if (!e.is_integer() || e.sign() < 0)
            throw SyntaxError("exponent of a compound base must be a non-negative integer", at);
        return base.pow(static_cast<unsigned>(e.num().get_ui()));
    }

    PuiseuxPoly atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            PuiseuxPoly p = expr();
            lex.expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return PuiseuxPoly::constant(arity(), Rational(lex.integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = lex.pos;
            std::string name = lex.ident();
            for (std::size_t i = 0; i < vars->size(); ++i)
                if ((*vars)[i] == name) return PuiseuxPoly::variable(arity(), static_cast<int>(i));
            throw UnknownVariable("unknown variable '" + name + "' at position " +
                                  std::to_string(at));
        }
        throw SyntaxError("expected term", lex.pos);
    }
};

QuadExt parse_quad_entry(Lexer& lex) {
    // entry := part (('+'|'-') part)*   part := rat | rat '*' sqrt | sqrt | rat '/' sqrt
    auto parse_part = [&](bool negated) -> QuadExt {
        bool neg = negated;
        if (lex.accept('-')) neg = !neg;
        Rational value(1);
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            Integer num = lex.integer();
            Integer den(1);
            std::size_t save = lex.pos;
            if (lex.accept('/')) {
                if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
                    den = lex.integer();
                } else {
                    lex.pos = save;  // "1/sqrt(2)"
                }
            }
            value = Rational(num, den);
            have_number = true;
        }
        bool root = false;
        long d = 0;
        bool inverse_root = false;
        std::size_t save = lex.pos;
        if (have_number && (lex.accept('*') || lex.accept('/'))) {
            inverse_root = lex.src[lex.pos - 1] == '/';
            if (lex.peek() != 's') {
                lex.pos = save;
            } else {
                std::string id = lex.ident();
                if (id != "sqrt") throw SyntaxError("expected sqrt", save);
                lex.expect('(');
                d = lex.integer().get_si();
                lex.expect(')');
                root = true;
            }
        } else if (lex.peek() == 's') {
            std::string id = lex.ident();
            if (id != "sqrt") throw SyntaxError("expected sqrt", save);
            lex.expect('(');
            d = lex.integer().get_si();
            lex.expect(')');
            root = true;
        }
        Rational signed_value = neg ? -value : value;
        if (!root) return QuadExt(signed_value);
        if (inverse_root) {
            // a / sqrt(d) = (a/d) * sqrt(d)
            return QuadExt(Rational(0), signed_value / Rational(d), d);
        }
        return QuadExt(Rational(0), signed_value, d);
    };

    QuadExt total = parse_part(false);
    while (true) {
        char c = lex.peek();
        if (c == '+') {
            lex.expect('+');
            total += parse_part(false);
        } else if (c == '-') {
            lex.expect('-');
            total += parse_part(true);
        } else {
            break;
        }
    }
    return total;
}

}  // namespace

PuiseuxPoly parse_puiseux(const std::string& src, const std::vector<std::string>& vars) {
    ExprParser p{Lexer{src}, &vars};
    return p.parse();
}

YPoly parse_expression(const std::string& src, const std::vector<std::string>& vars,
                       const std::string& unknown) {
    for (const auto& v : vars)
        if (v == unknown) throw UnknownVariable("unknown '" + unknown + "' clashes with a variable");
    std::vector<std::string> all = vars;
    all.push_back(unknown);
    return YPoly::from_flat(parse_puiseux(src, all));
}

OrderSpec parse_order(const std::string& src) {
    Lexer lex{src};
    std::vector<std::vector<QuadExt>> rows;
    do {
        std::vector<QuadExt> row;
        if (lex.accept('(')) {
            do {
                row.push_back(parse_quad_entry(lex));
            } while (lex.accept(','));
            lex.expect(')');
        } else {
            row.push_back(parse_quad_entry(lex));
        }
        rows.push_back(std::move(row));
    } while (lex.accept(';'));
    if (!lex.eof()) throw SyntaxError("trailing input in order spec", lex.pos);
    if (rows.size() == 1) return OrderSpec::from_row(std::move(rows.front()));
    return OrderSpec(std::move(rows));
}

}  // namespace puiseux
