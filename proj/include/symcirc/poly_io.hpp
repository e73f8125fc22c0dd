#ifndef SYMCIRC_POLY_IO_HPP
#define SYMCIRC_POLY_IO_HPP

#include "poly.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace symcirc {

// Textual polynomial format: `3*R1*C1*s^2 - 1/2`, with `sqrt2` (generally
// `sqrt<d>`) as the quadratic-extension literal. Parser and printer
// round-trip exactly.

class PolyParser {
public:
    explicit PolyParser(std::string text) : s_(std::move(text)) {}

    EPoly parse() {
        EPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial syntax error at offset " +
                                    std::to_string(pos_) + ": " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    EPoly expr() {
        EPoly acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = neg ? -term() : term();
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    EPoly term() {
        EPoly acc = factor();
        while (true) {
            if (eat('*')) acc *= factor();
            else if (eat('/')) {
                EPoly d = factor();
                if (!d.is_constant() || d.is_zero())
                    fail("division only by nonzero constants");
                acc = acc * EPoly(QuadExt(1) / d.constant_value());
            } else break;
        }
        return acc;
    }

    EPoly factor() {
        EPoly base = atom();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stol(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    EPoly atom() {
        skip_ws();
        if (eat('(')) {
            EPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (eat('-')) return -factor();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("expected number, symbol, or '('");
    }

    EPoly number() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        // exponent part of a decimal literal
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            } else {
                pos_ = save;
            }
        }
        return EPoly(QuadExt(rat_from_decimal(s_.substr(start, pos_ - start))));
    }

    EPoly identifier() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name.size() > 4 && name.rfind("sqrt", 0) == 0 &&
            std::all_of(name.begin() + 4, name.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            long d = std::stol(name.substr(4));
            return EPoly(QuadExt(Rat(0), Rat(1), d));
        }
        return EPoly::variable(sym(name));
    }

    std::string s_;
    size_t pos_ = 0;
};

inline EPoly parse_epoly(const std::string& text) { return PolyParser(text).parse(); }

inline QPoly parse_qpoly(const std::string& text) {
    EPoly p = parse_epoly(text);
    QPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_rational())
            throw std::invalid_argument("sqrt literal in a rational-coefficient context");
        r.add_term(m, c.a);
    }
    return r;
}

// --- printing -------------------------------------------------------------

inline std::string coeff_to_string(const Rat& c) { return c.get_str(); }

inline std::string coeff_to_string(const QuadExt& c) {
    if (c.is_rational()) return c.a.get_str();
    std::string root = "sqrt" + std::to_string(c.d);
    std::ostringstream out;
    out << "(";
    if (sgn(c.a) != 0) out << c.a.get_str() << (sgn(c.b) < 0 ? " - " : " + ");
    else if (sgn(c.b) < 0) out << "-";
    Rat babs = rat_abs(c.b);
    if (babs != 1) out << babs.get_str() << "*";
    out << root << ")";
    return out.str();
}

inline std::string monomial_to_string(const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, e] : m.entries()) {
        if (!first) out << "*";
        first = false;
        out << sym_name(s);
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

template <class C>
std::string poly_to_string(const Poly<C>& p, const MonomialOrder& ord = {}) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms(ord)) {
        bool neg = sgn(c) < 0;
        C cabs = neg ? C(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        std::string cs = coeff_to_string(cabs);
        if (m.is_one()) out << cs;
        else if (cs == "1") out << monomial_to_string(m);
        else out << cs << "*" << monomial_to_string(m);
    }
    return out.str();
}

} // namespace symcirc

#endif
