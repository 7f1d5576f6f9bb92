#ifndef DUALVAR_PARSER_HPP
#define DUALVAR_PARSER_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace dualvar {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' uint]
//   base   := integer ['/' integer] | variable | '(' expr ')'
// '*' is required between factors; '^' binds tightest.
namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, VarSetPtr vars) : text_(text), vars_(std::move(vars)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool neg = consume('-');
        Polynomial p = term();
        if (neg)
            p = -p;
        for (;;) {
            skip_ws();
            if (consume('+'))
                p = p + term();
            else if (consume('-'))
                p = p - term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_ws();
            if (!consume('*'))
                return p;
            p = p * factor();
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            unsigned long e = read_uint();
            return b.pow(static_cast<unsigned int>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (consume('(')) {
            Polynomial p = expr();
            skip_ws();
            if (!consume(')'))
                throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_int();
            skip_ws();
            if (consume('/')) {
                skip_ws();
                std::size_t dpos = pos_;
                Int den = read_int();
                if (den == 0)
                    throw ParseError("zero denominator", dpos);
                return Polynomial::constant(vars_, make_rat(num, den));
            }
            return Polynomial::constant(vars_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = vars_->index_of(name);
            if (!idx)
                throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(vars_, *idx);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Int read_int() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected integer", pos_);
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned long read_uint() {
        Int v = read_int();
        if (!v.fits_ulong_p())
            throw ParseError("exponent too large", pos_);
        return v.get_ui();
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    VarSetPtr vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, VarSetPtr vars) {
    return detail::PolyParser(text, std::move(vars)).run();
}

} // namespace dualvar

#endif
