/*
   Copyright 2026 The qtele Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <vector>

#include "proper.hpp"

namespace qtele {

// Canonical text format: terms in decreasing exponent order (graded for
// bivariate values), coefficients as reduced integer-coefficient fractions in
// q, explicit '*' and '^'.  Printing is deterministic; the parser accepts any
// rational expression in q, x, y, so print/parse round-trips are bit-exact.

namespace textio {

struct STerm {
    bool neg;
    std::string mag;
};

inline std::string join_terms(const std::vector<STerm>& ts) {
    if (ts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i == 0)
            out += ts[i].neg ? "-" : "";
        else
            out += ts[i].neg ? "-" : "+";
        out += ts[i].mag;
    }
    return out;
}

inline std::string var_power(const char* var, long e) {
    if (e == 0) return "";
    std::string s = var;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

inline void intpoly_terms(const IntPoly& p, const char* var, std::vector<STerm>& out) {
    for (int e = p.degree(); e >= 0; --e) {
        const Int& c = p.coeff(e);
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Int m = neg ? Int(-c) : c;
        std::string s;
        if (m == 1 && e > 0)
            s = var_power(var, e);
        else {
            s = m.get_str();
            if (e > 0) s += "*" + var_power(var, e);
        }
        out.push_back({neg, s});
    }
}

inline std::string intpoly_str(const IntPoly& p, const char* var) {
    std::vector<STerm> ts;
    intpoly_terms(p, var, ts);
    return join_terms(ts);
}

inline bool intpoly_is_mono(const IntPoly& p) {
    return !p.is_zero() && p.degree() == p.low_degree();
}

// Coefficient rendering for a sign-extracted (positive-leading) QRat: a bare
// monomial when possible, otherwise parenthesized.
inline std::string qrat_coeff_str(const QRat& m) {
    if (m.is_integer_poly()) {
        if (intpoly_is_mono(m.num())) return intpoly_str(m.num(), "q");
        return "(" + intpoly_str(m.num(), "q") + ")";
    }
    return "(" + intpoly_str(m.num(), "q") + ")/(" + intpoly_str(m.den(), "q") + ")";
}

inline void xpoly_terms(const XPoly& p, const char* var, std::vector<STerm>& out) {
    for (int e = p.degree(); e >= 0; --e) {
        const QRat& c = p.coeff(e);
        if (c.is_zero()) continue;
        if (e == 0 && c.is_integer_poly()) {
            intpoly_terms(c.num(), "q", out);
            continue;
        }
        bool neg = c.negative_leading();
        QRat m = neg ? -c : c;
        std::string s;
        if (m.is_one() && e > 0)
            s = var_power(var, e);
        else {
            s = qrat_coeff_str(m);
            if (e > 0) s += "*" + var_power(var, e);
        }
        out.push_back({neg, s});
    }
}

inline std::string xpoly_str(const XPoly& p, const char* var) {
    std::vector<STerm> ts;
    xpoly_terms(p, var, ts);
    return join_terms(ts);
}

inline bool xrat_negative_leading(const XRat& c) {
    return !c.is_zero() && c.num().lc().negative_leading();
}

inline bool xpoly_is_simple_mono(const XPoly& p) {
    if (p.is_zero() || p.degree() != p.low_degree()) return false;
    const QRat& c = p.lc();
    return c.is_integer_poly() && intpoly_is_mono(c.num());
}

inline std::string xrat_coeff_str(const XRat& m, const char* var) {
    if (m.is_polynomial()) {
        if (xpoly_is_simple_mono(m.num())) {
            const QRat& c = m.num().lc();
            std::string s;
            if (!c.is_one() || m.num().degree() == 0) s = qrat_coeff_str(c);
            std::string v = var_power(var, m.num().degree());
            if (!v.empty()) s += (s.empty() ? "" : "*") + v;
            return s;
        }
        return "(" + xpoly_str(m.num(), var) + ")";
    }
    return "(" + xpoly_str(m.num(), var) + ")/(" + xpoly_str(m.den(), var) + ")";
}

inline void ypoly_terms(const YPoly& p, std::vector<STerm>& out) {
    for (int e = p.degree(); e >= 0; --e) {
        const XRat& c = p.coeff(e);
        if (c.is_zero()) continue;
        if (e == 0 && c.is_polynomial()) {
            xpoly_terms(c.num(), "x", out);
            continue;
        }
        bool neg = xrat_negative_leading(c);
        XRat m = neg ? -c : c;
        std::string s;
        if (m.is_one() && e > 0)
            s = var_power("y", e);
        else {
            s = xrat_coeff_str(m, "x");
            if (e > 0) s += "*" + var_power("y", e);
        }
        out.push_back({neg, s});
    }
}

inline std::string ypoly_str(const YPoly& p) {
    std::vector<STerm> ts;
    ypoly_terms(p, ts);
    return join_terms(ts);
}

inline void bipoly_terms(const BiPoly& f, std::vector<STerm>& out) {
    std::vector<BiPoly::Key> keys;
    keys.reserve(f.terms().size());
    for (const auto& [k, v] : f.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const BiPoly::Key& a, const BiPoly::Key& b) {
        long ta = a.first + a.second, tb = b.first + b.second;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    for (const auto& k : keys) {
        QRat c = f.coeff(k.first, k.second);
        if (k == BiPoly::Key{0, 0} && c.is_integer_poly()) {
            intpoly_terms(c.num(), "q", out);
            continue;
        }
        bool neg = c.negative_leading();
        QRat m = neg ? -c : c;
        std::string vars = var_power("x", k.first);
        std::string yp = var_power("y", k.second);
        if (!yp.empty()) vars += (vars.empty() ? "" : "*") + yp;
        std::string s;
        if (m.is_one() && !vars.empty())
            s = vars;
        else {
            s = qrat_coeff_str(m);
            if (!vars.empty()) s += "*" + vars;
        }
        out.push_back({neg, s});
    }
}

inline std::string bipoly_str(const BiPoly& f) {
    std::vector<STerm> ts;
    bipoly_terms(f, ts);
    return join_terms(ts);
}

}  // namespace textio

inline std::string to_text(const Int& n) { return n.get_str(); }
inline std::string to_text(const Rational& r) { return r.get_str(); }
inline std::string to_text(const IntPoly& p) { return textio::intpoly_str(p, "q"); }
inline std::string to_text(const QRat& e) {
    if (e.is_integer_poly()) return textio::intpoly_str(e.num(), "q");
    return "(" + textio::intpoly_str(e.num(), "q") + ")/(" +
           textio::intpoly_str(e.den(), "q") + ")";
}
inline std::string to_text(const XPoly& p) { return textio::xpoly_str(p, "x"); }
inline std::string to_text(const XRat& e) {
    if (e.is_polynomial()) return textio::xpoly_str(e.num(), "x");
    return "(" + textio::xpoly_str(e.num(), "x") + ")/(" +
           textio::xpoly_str(e.den(), "x") + ")";
}
inline std::string to_text(const YPoly& p) { return textio::ypoly_str(p); }
inline std::string to_text(const BiPoly& f) { return textio::bipoly_str(f); }
inline std::string to_text(const BiRat& r) {
    if (r.is_polynomial()) return textio::bipoly_str(r.num());
    return "(" + textio::bipoly_str(r.num()) + ")/(" + textio::bipoly_str(r.den()) + ")";
}
inline std::string to_text(const YRat& r) { return to_text(yrat_to_birat(r)); }

inline std::ostream& operator<<(std::ostream& os, const QRat& e) { return os << to_text(e); }
inline std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << to_text(f); }
inline std::ostream& operator<<(std::ostream& os, const BiRat& f) { return os << to_text(f); }
inline std::ostream& operator<<(std::ostream& os, const XRat& f) { return os << to_text(f); }
inline std::ostream& operator<<(std::ostream& os, const YRat& f) { return os << to_text(f); }
inline std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const YPoly& p) { return os << to_text(p); }

// ---------------------------------------------------------------------------
// Parsing: rational expressions in q, x, y with integer constants.
// ---------------------------------------------------------------------------

namespace textio {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected identifier", pos);
        return s.substr(start, pos - start);
    }
    Int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number", pos);
        return Int(s.substr(start, pos - start));
    }
    long integer_literal() {
        skip_ws();
        bool neg = accept('-');
        Int n = number();
        if (!n.fits_slong_p()) throw ParseError("integer literal out of range", pos);
        long v = n.get_si();
        return neg ? -v : v;
    }
};

// Generic recursive-descent evaluator.  Atom handles integers, parentheses
// and identifiers via a callback, allowing reuse by the term DSL parser.
template <class V, class AtomFn>
struct ExprParser {
    Lexer& lx;
    AtomFn atom_fn;

    V parse() {
        V v = sum();
        if (!lx.eof()) throw ParseError("unexpected trailing input", lx.pos);
        return v;
    }

    V sum() {
        V acc = product();
        while (true) {
            if (lx.accept('+'))
                acc = acc + product();
            else if (lx.accept('-'))
                acc = acc - product();
            else
                return acc;
        }
    }

    V product() {
        V acc = unary();
        while (true) {
            if (lx.accept('*'))
                acc = acc * unary();
            else if (lx.accept('/'))
                acc = acc / unary();
            else
                return acc;
        }
    }

    V unary() {
        if (lx.accept('-')) return -unary();
        if (lx.accept('+')) return unary();
        return power();
    }

    V power() {
        V base = atom();
        if (lx.accept('^')) {
            long e = lx.integer_literal();
            return atom_fn.pow(base, e);
        }
        return base;
    }

    V atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.expect('(');
            V v = sum();
            lx.expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return atom_fn.from_int(lx.number());
        if (lx.ident_start(c)) return atom_fn.from_ident(lx.ident(), lx);
        throw ParseError("unexpected character", lx.pos);
    }
};

struct BiRatAtoms {
    BiRat from_int(const Int& n) const { return BiRat(BiPoly(QRat(n))); }
    BiRat from_ident(const std::string& id, Lexer& lx) const {
        if (id == "q") return BiRat(BiPoly(QRat::q()));
        if (id == "x") return BiRat(BiPoly::var_x());
        if (id == "y") return BiRat(BiPoly::var_y());
        throw ParseError("unknown symbol '" + id + "'", lx.pos);
    }
    BiRat pow(const BiRat& b, long e) const { return pow_birat(b, e); }
};

}  // namespace textio

inline BiRat parse_birat(const std::string& text) {
    textio::Lexer lx(text);
    textio::ExprParser<BiRat, textio::BiRatAtoms> p{lx, {}};
    return p.parse();
}

inline BiPoly birat_to_bipoly(const BiRat& r) {
    if (!r.den().is_constant())
        throw ParseError("expected a polynomial, got a denominator", 0);
    QRat d = r.den().coeff(0, 0);
    return mul_scalar(r.num(), d.inv());
}

inline QRat birat_to_qrat(const BiRat& r) {
    if (!r.num().is_constant() || !r.den().is_constant())
        throw ParseError("expected a constant in q", 0);
    if (r.den().is_zero()) throw DivisionByZero();
    if (r.num().is_zero()) return QRat();
    return r.num().coeff(0, 0) / r.den().coeff(0, 0);
}

inline XPoly bipoly_to_xpoly(const BiPoly& f) {
    if (f.deg_y() != 0) throw ParseError("unexpected variable y", 0);
    std::vector<QRat> cs(static_cast<std::size_t>(f.deg_x()) + 1, QRat());
    for (const auto& [k, v] : f.terms()) cs[static_cast<std::size_t>(k.first)] = v;
    return XPoly::from_coeffs(std::move(cs));
}

inline XRat birat_to_xrat(const BiRat& r) {
    return XRat(bipoly_to_xpoly(r.num()), bipoly_to_xpoly(r.den()));
}

inline BiPoly parse_bipoly(const std::string& text) { return birat_to_bipoly(parse_birat(text)); }
inline QRat parse_qrat(const std::string& text) { return birat_to_qrat(parse_birat(text)); }
inline XRat parse_xrat(const std::string& text) { return birat_to_xrat(parse_birat(text)); }
inline XPoly parse_xpoly(const std::string& text) {
    return bipoly_to_xpoly(parse_bipoly(text));
}
inline YRat parse_yrat(const std::string& text) { return birat_to_yrat(parse_birat(text)); }
inline YPoly parse_ypoly(const std::string& text) {
    return bipoly_to_ypoly(parse_bipoly(text));
}

}  // namespace qtele
