#include "frieze/parser.hpp"

#include <cctype>

#include "frieze/errors.hpp"

namespace frieze {

/*
 * expr     := term (('+' | '-') term)*
 * term     := factor (('*' | '/') factor)*
 * factor   := ('+' | '-')* power
 * power    := primary ('^' exponent)?
 * primary  := INTEGER | 'x' INTEGER | '(' expr ')'
 * exponent := '-'? INTEGER | '(' '-'? INTEGER ')'
 */
namespace {

class Parser {
public:
    Parser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

    RationalFunction run() {
        RationalFunction value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    long exponent() {
        bool parens = consume('(');
        skip_space();
        bool negative = consume('-');
        skip_space();
        std::string d = digits();
        if (d.size() > 9) fail("exponent too large");
        long e = std::stol(d);
        if (parens && !consume(')')) fail("expected ')' after exponent");
        return negative ? -e : e;
    }

    RationalFunction primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            std::string d = digits();
            if (d.size() > 6) fail("variable index too large");
            int index = std::stoi(d);
            if (index < 1 || index > nvars_)
                throw InvalidInput("variable x" + d + " out of range 1..x" +
                                   std::to_string(nvars_));
            return RationalFunction::variable(nvars_, index);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RationalFunction::constant(nvars_, Rational(mpz_class(digits())));
        }
        fail("expected a number, a variable or '('");
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (consume('^')) return base.pow(exponent());
        return base;
    }

    RationalFunction factor() {
        bool negative = false;
        for (;;) {
            char c = peek();
            if (c == '-') {
                negative = !negative;
                ++pos_;
            } else if (c == '+') {
                ++pos_;
            } else {
                break;
            }
        }
        RationalFunction value = power();
        return negative ? -value : value;
    }

    RationalFunction term() {
        RationalFunction value = factor();
        for (;;) {
            if (consume('*')) {
                value = value * factor();
            } else if (consume('/')) {
                value = value / factor();
            } else {
                return value;
            }
        }
    }

    RationalFunction expr() {
        RationalFunction value = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                value = value + term();
            } else if (c == '-') {
                ++pos_;
                value = value - term();
            } else {
                return value;
            }
        }
    }

    const std::string& text_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text, int nvars) {
    if (nvars < 1) throw InvalidInput("variable count must be at least 1");
    return Parser(text, nvars).run();
}

}  // namespace frieze
