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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "textio.hpp"

namespace qtele {

// Integer-linear form a*n + b*k + c.
struct LinForm {
    long n = 0, k = 0, c = 0;

    long eval(long nv, long kv) const { return n * nv + k * kv + c; }
    bool is_zero() const { return n == 0 && k == 0 && c == 0; }

    friend LinForm operator+(const LinForm& a, const LinForm& b) {
        return {a.n + b.n, a.k + b.k, a.c + b.c};
    }
    friend LinForm operator-(const LinForm& a, const LinForm& b) {
        return {a.n - b.n, a.k - b.k, a.c - b.c};
    }
    LinForm operator-() const { return {-n, -k, -c}; }
    LinForm scaled(long m) const { return {n * m, k * m, c * m}; }
    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.n == b.n && a.k == b.k && a.c == b.c;
    }
};

inline std::string to_text(const LinForm& l) {
    std::vector<textio::STerm> ts;
    auto push = [&](long v, const char* var) {
        if (v == 0) return;
        bool neg = v < 0;
        long m = neg ? -v : v;
        std::string s;
        if (var[0] == '\0')
            s = std::to_string(m);
        else if (m == 1)
            s = var;
        else
            s = std::to_string(m) + "*" + var;
        ts.push_back({neg, s});
    };
    push(l.n, "n");
    push(l.k, "k");
    push(l.c, "");
    return textio::join_terms(ts);
}

// Parsed bivariate q-hypergeometric term.  The AST is kept canonical: a
// left-associated product of at most one RatPoly (or Const), one QPow and a
// sorted run of QPoch factors, negative powers via IntPow.
class TermExpr;
using TermPtr = std::shared_ptr<const TermExpr>;

class TermExpr {
  public:
    enum class Kind { Const, RatPoly, QPow, QPoch, Mul, Div, IntPow };

    Kind kind;
    QRat cval;          // Const
    BiPoly rnum, rden;  // RatPoly: P(q^n, q^k) / Q(q^n, q^k), vars (x, y)
    LinForm lin;        // QPow, QPoch
    QRat base;          // QPoch: prod_{j=0}^{lin-1} (1 - base * q^j)
    TermPtr lhs, rhs;   // Mul (both), Div (both), IntPow (lhs)
    long exp = 0;       // IntPow

    static TermPtr make_const(QRat c) {
        auto t = std::make_shared<TermExpr>();
        t->kind = Kind::Const;
        t->cval = std::move(c);
        return t;
    }
    static TermPtr make_ratpoly(BiPoly n, BiPoly d) {
        auto t = std::make_shared<TermExpr>();
        t->kind = Kind::RatPoly;
        t->rnum = std::move(n);
        t->rden = std::move(d);
        return t;
    }
    static TermPtr make_qpow(LinForm l) {
        auto t = std::make_shared<TermExpr>();
        t->kind = Kind::QPow;
        t->lin = l;
        return t;
    }
    static TermPtr make_qpoch(QRat base, LinForm l) {
        auto t = std::make_shared<TermExpr>();
        t->kind = Kind::QPoch;
        t->base = std::move(base);
        t->lin = l;
        return t;
    }
    static TermPtr make_mul(TermPtr a, TermPtr b) {
        auto t = std::make_shared<TermExpr>();
        t->kind = Kind::Mul;
        t->lhs = std::move(a);
        t->rhs = std::move(b);
        return t;
    }
    static TermPtr make_div(TermPtr a, TermPtr b) {
        auto t = std::make_shared<TermExpr>();
        t->kind = Kind::Div;
        t->lhs = std::move(a);
        t->rhs = std::move(b);
        return t;
    }
    static TermPtr make_intpow(TermPtr a, long e) {
        auto t = std::make_shared<TermExpr>();
        t->kind = Kind::IntPow;
        t->lhs = std::move(a);
        t->exp = e;
        return t;
    }
};

inline bool term_equal(const TermExpr& a, const TermExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case TermExpr::Kind::Const:
            return a.cval == b.cval;
        case TermExpr::Kind::RatPoly:
            return a.rnum == b.rnum && a.rden == b.rden;
        case TermExpr::Kind::QPow:
            return a.lin == b.lin;
        case TermExpr::Kind::QPoch:
            return a.base == b.base && a.lin == b.lin;
        case TermExpr::Kind::Mul:
        case TermExpr::Kind::Div:
            return term_equal(*a.lhs, *b.lhs) && term_equal(*a.rhs, *b.rhs);
        case TermExpr::Kind::IntPow:
            return a.exp == b.exp && term_equal(*a.lhs, *b.lhs);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Flattened product view used by all semantic operations.
// ---------------------------------------------------------------------------

struct PochFactor {
    QRat base;  // monomial constant rho * q^m
    LinForm lin;
    long exp = 1;

    friend bool operator==(const PochFactor& a, const PochFactor& b) {
        return a.base == b.base && a.lin == b.lin && a.exp == b.exp;
    }
};

struct TermParts {
    BiRat scalar = BiRat::one();
    LinForm qpow;
    std::vector<PochFactor> pochs;
};

namespace detail {

inline void require_monomial_base(const QRat& c) {
    if (c.is_zero()) return;  // the factor collapses to 1 and is dropped
    bool ok = textio::intpoly_is_mono(c.num()) && textio::intpoly_is_mono(c.den());
    if (!ok)
        throw Error("qpoch base must be a monomial constant rho*q^m, got " + to_text(c));
}

inline void sort_and_merge(TermParts& p) {
    auto key = [](const PochFactor& f) {
        return std::tuple<std::string, long, long, long>(to_text(f.base), f.lin.n, f.lin.k,
                                                         f.lin.c);
    };
    std::sort(p.pochs.begin(), p.pochs.end(),
              [&](const PochFactor& a, const PochFactor& b) { return key(a) < key(b); });
    std::vector<PochFactor> out;
    for (auto& f : p.pochs) {
        if (f.base.is_zero() || f.exp == 0) continue;  // empty factor
        if (!out.empty() && out.back().base == f.base && out.back().lin == f.lin)
            out.back().exp += f.exp;
        else
            out.push_back(f);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const PochFactor& f) { return f.exp == 0; }),
              out.end());
    p.pochs = std::move(out);
}

inline void mul_into(TermParts& a, const TermParts& b, long e = 1) {
    a.scalar = a.scalar * pow_birat(b.scalar, e);
    a.qpow = a.qpow + b.qpow.scaled(e);
    for (auto f : b.pochs) {
        f.exp *= e;
        a.pochs.push_back(f);
    }
}

}  // namespace detail

inline TermParts to_parts(const TermExpr& t) {
    TermParts p;
    switch (t.kind) {
        case TermExpr::Kind::Const:
            p.scalar = BiRat(BiPoly(t.cval));
            break;
        case TermExpr::Kind::RatPoly:
            p.scalar = BiRat(t.rnum, t.rden);
            break;
        case TermExpr::Kind::QPow:
            p.qpow = t.lin;
            break;
        case TermExpr::Kind::QPoch:
            detail::require_monomial_base(t.base);
            p.pochs.push_back({t.base, t.lin, 1});
            break;
        case TermExpr::Kind::Mul: {
            p = to_parts(*t.lhs);
            detail::mul_into(p, to_parts(*t.rhs));
            break;
        }
        case TermExpr::Kind::Div: {
            p = to_parts(*t.lhs);
            detail::mul_into(p, to_parts(*t.rhs), -1);
            break;
        }
        case TermExpr::Kind::IntPow: {
            TermParts inner = to_parts(*t.lhs);
            detail::mul_into(p, inner, t.exp);
            break;
        }
    }
    detail::sort_and_merge(p);
    if (p.scalar.is_zero()) throw Error("term is identically zero");
    return p;
}

inline TermPtr canonical_term(const TermParts& parts) {
    std::vector<TermPtr> factors;
    const BiRat& s = parts.scalar;
    bool scalar_is_one = s == BiRat::one();
    if (!scalar_is_one || (parts.qpow.is_zero() && parts.pochs.empty())) {
        if (s.num().is_constant() && s.is_polynomial())
            factors.push_back(TermExpr::make_const(s.num().coeff(0, 0)));
        else
            factors.push_back(TermExpr::make_ratpoly(s.num(), s.den()));
    }
    if (!parts.qpow.is_zero()) factors.push_back(TermExpr::make_qpow(parts.qpow));
    for (const auto& f : parts.pochs) {
        TermPtr n = TermExpr::make_qpoch(f.base, f.lin);
        if (f.exp != 1) n = TermExpr::make_intpow(n, f.exp);
        factors.push_back(n);
    }
    TermPtr acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = TermExpr::make_mul(acc, factors[i]);
    return acc;
}

// ---------------------------------------------------------------------------
// Printing (canonical) and parsing.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string bipoly_str_nk(const BiPoly& f) {
    // Same canonical layout as to_text(BiPoly), with x, y spelled qn, qk.
    std::string s = to_text(f);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'x')
            out += "qn";
        else if (s[i] == 'y')
            out += "qk";
        else
            out += s[i];
    }
    return out;
}

}  // namespace detail

inline std::string print_term(const TermExpr& t) {
    TermParts p = to_parts(t);
    std::vector<std::string> fs;
    const BiRat& s = p.scalar;
    if (!(s == BiRat::one()) || (p.qpow.is_zero() && p.pochs.empty())) {
        std::string n = "(" + detail::bipoly_str_nk(s.num()) + ")";
        if (s.is_polynomial())
            fs.push_back(n);
        else
            fs.push_back(n + "/(" + detail::bipoly_str_nk(s.den()) + ")");
    }
    if (!p.qpow.is_zero()) fs.push_back("qpow(" + to_text(p.qpow) + ")");
    for (const auto& f : p.pochs) {
        std::string one = "qpoch(" + to_text(f.base) + "; " + to_text(f.lin) + ")";
        if (f.exp != 1) one += "^" + std::to_string(f.exp);
        fs.push_back(one);
    }
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += " * ";
        out += fs[i];
    }
    return out;
}

namespace detail {

// Value for DSL expression evaluation: a product form in which rational
// content, q-power and Pochhammer factors stay separated.  Sums are only
// defined for pure rational content.
struct TVal {
    TermParts p;

    friend TVal operator*(const TVal& a, const TVal& b) {
        TVal r = a;
        mul_into(r.p, b.p);
        return r;
    }
    friend TVal operator/(const TVal& a, const TVal& b) {
        TVal r = a;
        mul_into(r.p, b.p, -1);
        return r;
    }
    friend TVal operator+(const TVal& a, const TVal& b) {
        require_rational(a);
        require_rational(b);
        TVal r;
        r.p.scalar = a.p.scalar + b.p.scalar;
        return r;
    }
    friend TVal operator-(const TVal& a, const TVal& b) {
        require_rational(a);
        require_rational(b);
        TVal r;
        r.p.scalar = a.p.scalar - b.p.scalar;
        return r;
    }
    TVal operator-() const {
        TVal r = *this;
        r.p.scalar = -r.p.scalar;
        return r;
    }

    static void require_rational(const TVal& v) {
        if (!v.p.qpow.is_zero() || !v.p.pochs.empty())
            throw Error(
                "sums are only supported between rational functions of qn, qk "
                "(qpow/qpoch factors cannot be added)");
    }
};

// LinForm lacks * and /; give the parser a wrapper enforcing linearity.
struct LVal {
    LinForm l;
    bool is_const() const { return l.n == 0 && l.k == 0; }
    friend LVal operator+(const LVal& a, const LVal& b) { return {a.l + b.l}; }
    friend LVal operator-(const LVal& a, const LVal& b) { return {a.l - b.l}; }
    LVal operator-() const { return {-l}; }
    friend LVal operator*(const LVal& a, const LVal& b) {
        if (a.is_const()) return {b.l.scaled(a.l.c)};
        if (b.is_const()) return {a.l.scaled(b.l.c)};
        throw Error("linear forms must stay linear in n and k");
    }
    friend LVal operator/(const LVal& a, const LVal& b) {
        if (!b.is_const() || b.l.c == 0) throw Error("division inside a linear form");
        if (a.l.n % b.l.c || a.l.k % b.l.c || a.l.c % b.l.c)
            throw Error("non-integer coefficient in linear form");
        return {LinForm{a.l.n / b.l.c, a.l.k / b.l.c, a.l.c / b.l.c}};
    }
};

struct LValAtoms {
    LVal from_int(const Int& n) const {
        if (!n.fits_slong_p()) throw Error("linear-form constant out of range");
        return {LinForm{0, 0, n.get_si()}};
    }
    LVal from_ident(const std::string& id, textio::Lexer& lx) const {
        if (id == "n") return {LinForm{1, 0, 0}};
        if (id == "k") return {LinForm{0, 1, 0}};
        throw ParseError("linear form may only use n and k, got '" + id + "'", lx.pos);
    }
    LVal pow(const LVal&, long) const {
        throw Error("powers are not allowed inside linear forms");
    }
};

struct TermAtoms;

LinForm parse_linform(textio::Lexer& lx);

struct TermAtoms {
    TVal from_int(const Int& n) const {
        TVal v;
        v.p.scalar = BiRat(BiPoly(QRat(n)));
        return v;
    }
    TVal from_ident(const std::string& id, textio::Lexer& lx) const {
        TVal v;
        if (id == "q") {
            v.p.scalar = BiRat(BiPoly(QRat::q()));
            return v;
        }
        if (id == "qn") {
            v.p.scalar = BiRat(BiPoly::var_x());
            return v;
        }
        if (id == "qk") {
            v.p.scalar = BiRat(BiPoly::var_y());
            return v;
        }
        if (id == "qpow") {
            lx.expect('(');
            LinForm l = parse_linform(lx);
            lx.expect(')');
            v.p.qpow = l;
            return v;
        }
        if (id == "qfac") {
            lx.expect('(');
            LinForm l = parse_linform(lx);
            lx.expect(')');
            v.p.pochs.push_back({QRat::q(), l, 1});
            return v;
        }
        if (id == "qpoch") {
            lx.expect('(');
            // base: a constant expression in q up to the ';'
            std::size_t start = lx.pos;
            int depth = 0;
            while (lx.pos < lx.s.size() && !(depth == 0 && lx.s[lx.pos] == ';')) {
                if (lx.s[lx.pos] == '(') ++depth;
                if (lx.s[lx.pos] == ')') {
                    if (depth == 0) break;
                    --depth;
                }
                ++lx.pos;
            }
            if (lx.pos >= lx.s.size() || lx.s[lx.pos] != ';')
                throw ParseError("qpoch expects 'qpoch(base; linear)'", lx.pos);
            std::string base_text = lx.s.substr(start, lx.pos - start);
            ++lx.pos;  // consume ';'
            QRat base = parse_qrat(base_text);
            require_monomial_base(base);
            LinForm l = parse_linform(lx);
            lx.expect(')');
            if (!base.is_zero()) v.p.pochs.push_back({base, l, 1});
            return v;
        }
        throw ParseError("unknown symbol '" + id + "'", lx.pos);
    }
    TVal pow(const TVal& b, long e) const {
        TVal v;
        mul_into(v.p, b.p, e);
        return v;
    }
};

inline LinForm parse_linform(textio::Lexer& lx) {
    textio::ExprParser<LVal, LValAtoms> p{lx, {}};
    LVal v = p.sum();
    return v.l;
}

}  // namespace detail

// Parses the term DSL into a canonical AST.
inline TermPtr parse_term(const std::string& text) {
    textio::Lexer lx(text);
    textio::ExprParser<detail::TVal, detail::TermAtoms> p{lx, {}};
    detail::TVal v = p.parse();
    detail::sort_and_merge(v.p);
    if (v.p.scalar.is_zero()) throw Error("term is identically zero");
    return canonical_term(v.p);
}

// ---------------------------------------------------------------------------
// Shift quotients, evaluation and domain validation.
// ---------------------------------------------------------------------------

enum class Direction { n, k };

namespace detail {

// One Pochhammer quotient factor: 1 - base * q^{gamma} x^alpha y^beta as a
// reduced bivariate rational function (negative alpha/beta allowed).
inline BiRat poch_quotient_factor(const QRat& base, long alpha, long beta, long gamma) {
    BiPoly mono_num = BiPoly::monomial(base * QRat::q_power(gamma), std::max(alpha, 0l),
                                       std::max(beta, 0l));
    BiPoly mono_den = BiPoly::monomial(QRat(1), std::max(-alpha, 0l), std::max(-beta, 0l));
    return BiRat(mono_den - mono_num, mono_den);
}

}  // namespace detail

// Exact shift quotient T(.+1)/T(.) in the chosen direction, as a reduced
// rational function of (x, y) = (q^n, q^k).
inline YRat shift_quotient(const TermParts& p, Direction dir) {
    BiRat acc = BiRat::one();
    // Rational content P/Q contributes sigma(P) Q / (P sigma(Q)).
    long sa = dir == Direction::n ? 1 : 0;
    long sb = dir == Direction::n ? 0 : 1;
    if (!(p.scalar == BiRat::one())) {
        BiRat shifted(p.scalar.num().sigma(sa, sb), p.scalar.den().sigma(sa, sb));
        acc = acc * shifted / p.scalar;
    }
    // q^{a n + b k + c} contributes q^a resp. q^b.
    long step_q = dir == Direction::n ? p.qpow.n : p.qpow.k;
    if (step_q != 0) acc = acc * BiRat(BiPoly(QRat::q_power(step_q)));
    // qpoch(base; L): the quotient is prod_{i=0}^{s-1} (1 - base q^{L+i}) for
    // step s >= 0 and the reciprocal over the shifted window for s < 0, with
    // q^{L} = q^{c} x^{a} y^{b}.
    for (const auto& f : p.pochs) {
        long s = dir == Direction::n ? f.lin.n : f.lin.k;
        if (s == 0) continue;
        BiRat fac = BiRat::one();
        if (s > 0) {
            for (long i = 0; i < s; ++i)
                fac = fac * detail::poch_quotient_factor(f.base, f.lin.n, f.lin.k,
                                                         f.lin.c + i);
        } else {
            for (long i = 0; i < -s; ++i)
                fac = fac / detail::poch_quotient_factor(f.base, f.lin.n, f.lin.k,
                                                         f.lin.c + s + i);
        }
        acc = acc * pow_birat(fac, f.exp);
    }
    return birat_to_yrat(acc);
}

inline YRat shift_quotient(const TermExpr& t, Direction dir) {
    return shift_quotient(to_parts(t), dir);
}

// Exact evaluation of the term at integer (n, k) with q specialized to a
// rational value.
inline Rational eval_term(const TermParts& p, long n, long k, const Rational& qv) {
    if (sgn(qv) == 0 || qv == Rational(1) || qv == Rational(-1))
        throw BadQValue("q must avoid 0, 1, -1");
    Rational xv = rational_pow(qv, n);
    Rational yv = rational_pow(qv, k);
    Rational acc = p.scalar.eval(qv, xv, yv);
    acc *= rational_pow(qv, p.qpow.eval(n, k));
    for (const auto& f : p.pochs) {
        long L = f.lin.eval(n, k);
        Rational b = f.base.eval(qv);
        Rational prod(1);
        if (L >= 0) {
            for (long j = 0; j < L; ++j) prod *= Rational(1) - b * rational_pow(qv, j);
            if (f.exp < 0 && sgn(prod) == 0)
                throw PoleAtPoint("qpoch factor vanishes at evaluation point");
        } else {
            Rational inv(1);
            for (long j = L; j < 0; ++j) inv *= Rational(1) - b * rational_pow(qv, j);
            if (sgn(inv) == 0) throw PoleAtPoint("qpoch factor vanishes at evaluation point");
            prod = Rational(1) / inv;
        }
        acc *= rational_pow(prod, f.exp);
    }
    return acc;
}

inline Rational eval_term(const TermExpr& t, long n, long k, const Rational& qv) {
    return eval_term(to_parts(t), n, k, qv);
}

// ---------------------------------------------------------------------------
// Domain validation: R1, R2 must have neither zeros nor poles on n, k >= 0.
// ---------------------------------------------------------------------------

struct DomainWarning {
    std::string message;
    bool fatal = false;
};

namespace detail {

// Does a*n + b*k = t have a solution with n, k >= 0?
inline bool solvable_nonneg(long a, long b, long t) {
    if (a == 0 && b == 0) return t == 0;
    if (a == 0) return t % b == 0 && t / b >= 0;
    if (b == 0) return t % a == 0 && t / a >= 0;
    if (a < 0 && b < 0) {
        a = -a;
        b = -b;
        t = -t;
    }
    if (a > 0 && b > 0) {
        if (t < 0) return false;
        for (long n = 0; a * n <= t; ++n)
            if ((t - a * n) % b == 0) return true;
        return false;
    }
    // Mixed signs: solvable iff gcd divides t.
    long g = std::gcd(std::abs(a), std::abs(b));
    return t % g == 0;
}

// Exact vanishing test for a one- or two-term bivariate polynomial at points
// (q^n, q^k), n, k >= 0.  Returns a description when it vanishes somewhere.
inline std::optional<std::string> binomial_vanishes(const BiPoly& f) {
    if (f.terms().size() == 1) return std::nullopt;  // monomials never vanish
    auto it = f.terms().begin();
    auto [k1, c1] = *it;
    ++it;
    auto [k2, c2] = *it;
    // c1 x^{i1} y^{j1} + c2 x^{i2} y^{j2} = 0  at (q^n, q^k)
    // <=> (-c1/c2) = q^{(i2-i1) n + (j2-j1) k}
    QRat ratio = -(c1 / c2);
    auto mu = ratio.as_q_power();
    if (!mu) return std::nullopt;
    long di = k2.first - k1.first, dj = k2.second - k1.second;
    if (solvable_nonneg(di, dj, *mu)) {
        return "factor " + to_text(f) + " vanishes at some (q^n, q^k) with n, k >= 0";
    }
    return std::nullopt;
}

struct StructFactor {
    BiPoly poly;
    long exp;
};

inline void collect_factors(const TermParts& p, Direction dir,
                            std::vector<StructFactor>& out) {
    long sa = dir == Direction::n ? 1 : 0;
    long sb = dir == Direction::n ? 0 : 1;
    if (!p.scalar.num().is_constant() || !p.scalar.den().is_constant()) {
        out.push_back({p.scalar.num().sigma(sa, sb), 1});
        out.push_back({p.scalar.den(), 1});
        out.push_back({p.scalar.num(), -1});
        out.push_back({p.scalar.den().sigma(sa, sb), -1});
    }
    for (const auto& f : p.pochs) {
        long s = dir == Direction::n ? f.lin.n : f.lin.k;
        if (s == 0) continue;
        auto add = [&](long gamma, long e) {
            BiRat fac = poch_quotient_factor(f.base, f.lin.n, f.lin.k, gamma);
            out.push_back({fac.num(), e});
        };
        if (s > 0)
            for (long i = 0; i < s; ++i) add(f.lin.c + i, f.exp);
        else
            for (long i = 0; i < -s; ++i) add(f.lin.c + s + i, -f.exp);
    }
}

}  // namespace detail

// Best-effort but never silent: recognized factor shapes (monomials and
// binomials) are decided exactly; anything else is sampled on a grid with q
// specialized.  A detected zero or pole of R1/R2 on the lattice is fatal.
inline std::vector<DomainWarning> validate_domain(const TermParts& p,
                                                  const Rational& q_check = Rational(2),
                                                  long grid = 12) {
    std::vector<DomainWarning> out;
    std::vector<detail::StructFactor> factors;
    detail::collect_factors(p, Direction::n, factors);
    detail::collect_factors(p, Direction::k, factors);
    std::vector<std::string> seen;
    for (const auto& sf : factors) {
        if (sf.poly.is_constant()) {
            if (sf.poly.is_zero()) out.push_back({"zero factor in shift quotient", true});
            continue;
        }
        std::string key = to_text(sf.poly);
        bool dup = false;
        for (const auto& s : seen)
            if (s == key) dup = true;
        if (dup) continue;
        seen.push_back(key);
        if (sf.poly.terms().size() <= 2) {
            auto bad = detail::binomial_vanishes(sf.poly);
            if (bad) out.push_back({*bad, true});
        } else {
            bool hit = false;
            for (long n = 0; n <= grid && !hit; ++n) {
                for (long k = 0; k <= grid && !hit; ++k) {
                    Rational v = sf.poly.eval(q_check, rational_pow(q_check, n),
                                              rational_pow(q_check, k));
                    if (sgn(v) == 0) {
                        out.push_back({"factor " + key + " vanishes at (n, k) = (" +
                                           std::to_string(n) + ", " + std::to_string(k) +
                                           ") with q = " + q_check.get_str(),
                                       true});
                        hit = true;
                    }
                }
            }
        }
    }
    return out;
}

inline std::vector<DomainWarning> validate_domain(const TermExpr& t,
                                                  const Rational& q_check = Rational(2),
                                                  long grid = 12) {
    return validate_domain(to_parts(t), q_check, grid);
}

}  // namespace qtele
