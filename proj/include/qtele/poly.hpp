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

#include <algorithm>
#include <concepts>
#include <utility>
#include <vector>

#include "numbers.hpp"

namespace qtele {

// Dense univariate polynomial over an exact coefficient type C.  The variable
// is contextual (q, x or y depending on the tower level); values never store
// trailing zero coefficients, and the zero polynomial has degree -1.
template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(const C& c0) {
        c_.push_back(c0);
        trim();
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(CoeffOps<C>::one()); }

    static Poly from_coeffs(std::vector<C> cs) {
        Poly p;
        p.c_ = std::move(cs);
        p.trim();
        return p;
    }

    static Poly monomial(const C& c, int e) {
        Poly p;
        if (!CoeffOps<C>::is_zero(c)) {
            p.c_.assign(static_cast<std::size_t>(e) + 1, CoeffOps<C>::zero());
            p.c_[static_cast<std::size_t>(e)] = c;
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == CoeffOps<C>::one(); }

    const std::vector<C>& coeffs() const { return c_; }

    const C& coeff(int i) const {
        static const C kZero = CoeffOps<C>::zero();
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<std::size_t>(i)];
    }

    const C& lc() const {
        if (is_zero()) throw ZeroInput("leading coefficient of zero polynomial");
        return c_.back();
    }

    // Lowest nonzero exponent; 0 for the zero polynomial.
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!CoeffOps<C>::is_zero(c_[i])) return static_cast<int>(i);
        return 0;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> out(std::max(a.c_.size(), b.c_.size()), CoeffOps<C>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return from_coeffs(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<C> out(std::max(a.c_.size(), b.c_.size()), CoeffOps<C>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] - b.c_[i];
        return from_coeffs(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> out(a.c_.size() + b.c_.size() - 1, CoeffOps<C>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (CoeffOps<C>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Horner evaluation at a point of the coefficient type.
    C eval(const C& x) const {
        C acc = CoeffOps<C>::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

  private:
    std::vector<C> c_;

    void trim() {
        while (!c_.empty() && CoeffOps<C>::is_zero(c_.back())) c_.pop_back();
    }
};

template <class C>
Poly<C> mul_scalar(const Poly<C>& p, const C& s) {
    if (CoeffOps<C>::is_zero(s)) return Poly<C>();
    std::vector<C> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c * s);
    return Poly<C>::from_coeffs(std::move(out));
}

// p * s * var^e
template <class C>
Poly<C> mul_monomial(const Poly<C>& p, const C& s, int e) {
    if (p.is_zero() || CoeffOps<C>::is_zero(s)) return Poly<C>();
    std::vector<C> out(p.coeffs().size() + static_cast<std::size_t>(e), CoeffOps<C>::zero());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out[i + static_cast<std::size_t>(e)] = p.coeffs()[i] * s;
    return Poly<C>::from_coeffs(std::move(out));
}

// p * var^e
template <class C>
Poly<C> shift_exponent(const Poly<C>& p, long e) {
    return mul_monomial(p, CoeffOps<C>::one(), static_cast<int>(e));
}

// Splits off the largest var^k factor: p = var^k * rest with rest(0) != 0.
template <class C>
std::pair<int, Poly<C>> strip_var_power(const Poly<C>& p) {
    if (p.is_zero()) return {0, p};
    int v = p.low_degree();
    if (v == 0) return {0, p};
    std::vector<C> out(p.coeffs().begin() + v, p.coeffs().end());
    return {v, Poly<C>::from_coeffs(std::move(out))};
}

// ---------------------------------------------------------------------------
// Field-coefficient operations.
// ---------------------------------------------------------------------------

template <class F>
    requires(CoeffOps<F>::is_field)
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                     CoeffOps<F>::zero());
    Poly<F> r = a;
    const F lb = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        F t = r.lc() / lb;
        int e = r.degree() - b.degree();
        q[static_cast<std::size_t>(e)] = t;
        r = r - mul_monomial(b, t, e);
    }
    return {Poly<F>::from_coeffs(std::move(q)), r};
}

template <class F>
    requires(CoeffOps<F>::is_field)
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).first;
}

template <class F>
    requires(CoeffOps<F>::is_field)
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

// Exact quotient; throws NotDivisible on a nonzero remainder.
template <class F>
    requires(CoeffOps<F>::is_field)
Poly<F> divexact_field(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotDivisible("polynomial division not exact");
    return q;
}

template <class F>
    requires(CoeffOps<F>::is_field)
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    const F& l = p.lc();
    if (l == CoeffOps<F>::one()) return p;
    return mul_scalar(p, CoeffOps<F>::one() / l);
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class F>
    requires(CoeffOps<F>::is_field)
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::one(), s1 = Poly<F>::zero();
    Poly<F> t0 = Poly<F>::zero(), t1 = Poly<F>::one();
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = std::exchange(r1, r2);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::exchange(s1, s2);
        Poly<F> t2 = t0 - q * t1;
        t0 = std::exchange(t1, t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F u = CoeffOps<F>::one() / r0.lc();
    return {mul_scalar(r0, u), mul_scalar(s0, u), mul_scalar(t0, u)};
}

// ---------------------------------------------------------------------------
// Gcd-domain operations for Poly<C> where C is itself a gcd domain.  These
// back the fraction-free gcd path: coefficients of field polynomials are
// cleared to nested integer-coefficient polynomials and the work happens here.
// ---------------------------------------------------------------------------

template <class C>
struct CoeffOps<Poly<C>> {
    static constexpr bool is_field = false;
    using P = Poly<C>;

    static P zero() { return P(); }
    static P one() { return P::one(); }
    static bool is_zero(const P& p) { return p.is_zero(); }

    static C content(const P& p) {
        C g = CoeffOps<C>::zero();
        for (const auto& c : p.coeffs()) {
            if (CoeffOps<C>::is_zero(c)) continue;
            g = CoeffOps<C>::gcd(g, c);
        }
        return g;
    }

    static P divexact_scalar(const P& p, const C& s) {
        std::vector<C> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) out.push_back(CoeffOps<C>::divexact(c, s));
        return P::from_coeffs(std::move(out));
    }

    static P primitive_part(const P& p) {
        if (p.is_zero()) return p;
        return divexact_scalar(p, content(p));
    }

    // Unit (degree-zero) u such that p/u has a canonically oriented leading
    // coefficient; lifts the coefficient domain's convention.
    static P canonical_unit(const P& p) {
        if (p.is_zero()) return one();
        return P(CoeffOps<C>::canonical_unit(p.lc()));
    }

    static P canonicalize(const P& p) {
        if (p.is_zero()) return p;
        C u = CoeffOps<C>::canonical_unit(p.lc());
        if (u == CoeffOps<C>::one()) return p;
        return divexact_scalar(p, u);
    }

    // Exact pseudo-remainder prem(a, b) = lc(b)^{deg a - deg b + 1} a mod b.
    static P prem(P a, const P& b) {
        const int db = b.degree();
        const C& lb = b.lc();
        int scale = a.degree() - db + 1;
        while (!a.is_zero() && a.degree() >= db) {
            C la = a.lc();
            int e = a.degree() - db;
            a = mul_scalar(a, lb) - mul_monomial(b, la, e);
            --scale;
        }
        for (; scale > 0; --scale) a = mul_scalar(a, lb);
        return a;
    }

    static C pow_coeff(C base, int e) {
        C acc = CoeffOps<C>::one();
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Full gcd: content gcd times the primitive part of a subresultant PRS,
    // canonically normalized.  The subresultant divisors avoid per-step
    // content computations, which dominate for nested coefficient domains.
    static P gcd(const P& f, const P& g) {
        if (f.is_zero()) return canonicalize(g);
        if (g.is_zero()) return canonicalize(f);
        // Monomial fast path: every divisor of a monomial is a monomial.
        if (f.degree() == f.low_degree() || g.degree() == g.low_degree()) {
            C cc = CoeffOps<C>::gcd(content(f), content(g));
            int e = std::min(f.low_degree(), g.low_degree());
            return P::monomial(CoeffOps<C>::divexact(cc, CoeffOps<C>::canonical_unit(cc)), e);
        }
        C cf = content(f), cg = content(g);
        C cc = CoeffOps<C>::gcd(cf, cg);
        P a = divexact_scalar(f, cf);
        P b = divexact_scalar(g, cg);
        if (a.degree() < b.degree()) std::swap(a, b);
        C gprev = CoeffOps<C>::one();
        C hprev = CoeffOps<C>::one();
        P pp_gcd;
        while (true) {
            if (b.degree() == 0) {
                pp_gcd = one();
                break;
            }
            int delta = a.degree() - b.degree();
            P r = prem(a, b);
            if (r.is_zero()) {
                pp_gcd = canonicalize(primitive_part(b));
                break;
            }
            C divisor = gprev * pow_coeff(hprev, delta);
            a = std::exchange(b, divexact_scalar(r, divisor));
            gprev = a.lc();
            // h_new = h^{1-delta} g^{delta}
            if (delta == 0) {
                // h unchanged
            } else if (delta == 1) {
                hprev = gprev;
            } else {
                hprev = CoeffOps<C>::divexact(pow_coeff(gprev, delta),
                                              pow_coeff(hprev, delta - 1));
            }
        }
        return canonicalize(mul_scalar(pp_gcd, cc));
    }

    // Checked exact division over the domain.
    static P divexact(const P& f, const P& g) {
        if (g.is_zero()) throw DivisionByZero("polynomial divexact by zero");
        if (f.is_zero()) return zero();
        if (f.degree() < g.degree()) throw NotDivisible("degree too small");
        std::vector<C> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1,
                         CoeffOps<C>::zero());
        P r = f;
        while (!r.is_zero() && r.degree() >= g.degree()) {
            C t = CoeffOps<C>::divexact(r.lc(), g.lc());
            int e = r.degree() - g.degree();
            q[static_cast<std::size_t>(e)] = t;
            r = r - mul_monomial(g, t, e);
        }
        if (!r.is_zero()) throw NotDivisible("polynomial division not exact");
        return P::from_coeffs(std::move(q));
    }
};

// ---------------------------------------------------------------------------
// Clearing field-coefficient polynomials into nested integer domains.
// ---------------------------------------------------------------------------

template <class D>
D lcm_domain(const D& a, const D& b) {
    using Ops = CoeffOps<D>;
    if (Ops::is_zero(a)) return b;
    if (Ops::is_zero(b)) return a;
    return Ops::divexact(a * b, Ops::gcd(a, b));
}

// Writes p = (cleared polynomial) / (scalar denominator in the cleared domain).
template <class F>
    requires(CoeffOps<F>::is_field)
std::pair<Poly<typename CoeffOps<F>::Cleared>, typename CoeffOps<F>::Cleared>
clear_poly_den(const Poly<F>& p) {
    using D = typename CoeffOps<F>::Cleared;
    using DOps = CoeffOps<D>;
    std::vector<std::pair<D, D>> parts;
    parts.reserve(p.coeffs().size());
    D den = DOps::one();
    for (const auto& c : p.coeffs()) {
        D n, d;
        CoeffOps<F>::clear_fraction(c, n, d);
        parts.emplace_back(std::move(n), std::move(d));
        if (!DOps::is_zero(parts.back().first)) den = lcm_domain(den, parts.back().second);
    }
    std::vector<D> out;
    out.reserve(parts.size());
    for (auto& [n, d] : parts) {
        if (DOps::is_zero(n))
            out.push_back(DOps::zero());
        else
            out.push_back(n * DOps::divexact(den, d));
    }
    return {Poly<D>::from_coeffs(std::move(out)), den};
}

template <class F>
    requires(CoeffOps<F>::is_field)
Poly<typename CoeffOps<F>::Cleared> clear_poly(const Poly<F>& p) {
    return clear_poly_den(p).first;
}

template <class F>
Poly<F> poly_from_cleared(const Poly<typename CoeffOps<F>::Cleared>& p) {
    std::vector<F> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(CoeffOps<F>::from_cleared(c));
    return Poly<F>::from_coeffs(std::move(out));
}

// ---------------------------------------------------------------------------
// One-sided coprimality certificates.  The Sylvester determinant of the
// rational specialization at a fixed point equals the specialized resultant,
// so a nonzero value proves gcd(f, g) = 1 outright; a zero is inconclusive.
// ---------------------------------------------------------------------------

namespace detail {

inline Rational rational_det(std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(m[piv][k]) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rational inv = Rational(1) / m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m[i][k]) == 0) continue;
            Rational fac = m[i][k] * inv;
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= fac * m[k][j];
        }
    }
    return det;
}

inline const SpecPoint* certificate_points() {
    static const SpecPoint pts[2] = {
        {Rational(17, 5), Rational(23, 7)},
        {Rational(-29, 11), Rational(31, 13)},
    };
    return pts;
}

}  // namespace detail

template <class F>
concept SpecEvaluable = requires(const F& c, const SpecPoint& p) {
    { CoeffOps<F>::spec_eval(c, p) } -> std::convertible_to<Rational>;
};

// Proves gcd(f, g) = 1 cheaply when possible; false means inconclusive.
template <class F>
bool surely_coprime(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() || g.is_zero()) return false;
    if (f.degree() == 0 || g.degree() == 0) return true;
    if constexpr (SpecEvaluable<F>) {
        const int m = f.degree(), n = g.degree();
        for (int pi = 0; pi < 2; ++pi) {
            const SpecPoint& p = detail::certificate_points()[pi];
            try {
                std::vector<Rational> fc, gc;
                fc.reserve(static_cast<std::size_t>(m) + 1);
                gc.reserve(static_cast<std::size_t>(n) + 1);
                for (const auto& c : f.coeffs()) fc.push_back(CoeffOps<F>::spec_eval(c, p));
                for (const auto& c : g.coeffs()) gc.push_back(CoeffOps<F>::spec_eval(c, p));
                // Sylvester matrix, f rows first.
                const int N = m + n;
                std::vector<std::vector<Rational>> M(
                    static_cast<std::size_t>(N),
                    std::vector<Rational>(static_cast<std::size_t>(N), Rational(0)));
                for (int r = 0; r < n; ++r)
                    for (int j = 0; j <= m; ++j)
                        M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                            fc[static_cast<std::size_t>(m - j)];
                for (int r = 0; r < m; ++r)
                    for (int j = 0; j <= n; ++j)
                        M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] =
                            gc[static_cast<std::size_t>(n - j)];
                if (sgn(detail::rational_det(M)) != 0) return true;
            } catch (const PoleAtPoint&) {
                continue;
            }
        }
    }
    return false;
}

// Monic gcd over a coefficient field, computed fraction-free on the cleared
// integer-coefficient polynomials.  gcd(f, 0) = monic f, gcd(0, 0) = 0.
template <class F>
    requires(CoeffOps<F>::is_field)
Poly<F> poly_gcd(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() && g.is_zero()) return Poly<F>();
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    if (f.degree() == 0 || g.degree() == 0) return Poly<F>::one();
    // Shared var powers short-circuit the cleared-domain work.
    int vf = f.low_degree(), vg = g.low_degree();
    if (vf == f.degree() || vg == g.degree())
        return Poly<F>::monomial(CoeffOps<F>::one(), std::min(vf, vg));
    if (surely_coprime(f, g)) return Poly<F>::one();
    auto cf = clear_poly(f);
    auto cg = clear_poly(g);
    auto d = CoeffOps<decltype(cf)>::gcd(cf, cg);
    return monic(poly_from_cleared<F>(d));
}

// Exact coprimality: the fast certificate first, the cleared gcd as fallback.
template <class F>
    requires(CoeffOps<F>::is_field)
bool coprime(const Poly<F>& f, const Poly<F>& g) {
    if (surely_coprime(f, g)) return true;
    return poly_gcd(f, g).degree() <= 0;
}

template <class F>
    requires(CoeffOps<F>::is_field)
Poly<F> lcm_poly(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return monic(a * divexact_field(b, poly_gcd(a, b)));
}

// ---------------------------------------------------------------------------
// Partial fractions.  Given den(U) | st * u2 with gcd(st, u2) = 1, writes
// U = a/u2 + b/st with deg b < deg st; any polynomial part goes to the a side.
// Inputs are the numerator/denominator of U directly to avoid a dependency on
// RatFun; see ratfun.hpp for the wrapper taking a rational function.
// ---------------------------------------------------------------------------

template <class F>
    requires(CoeffOps<F>::is_field)
std::pair<Poly<F>, Poly<F>> partial_split_nd(const Poly<F>& unum, const Poly<F>& uden,
                                             const Poly<F>& st, const Poly<F>& u2) {
    if (unum.is_zero()) return {Poly<F>(), Poly<F>()};
    if (st.is_zero() || u2.is_zero()) throw ZeroInput("partial_split with zero modulus");
    if (poly_gcd(st, u2).degree() > 0) throw NotCoprime("partial_split moduli share a factor");
    Poly<F> prod = st * u2;
    auto [mult, rem] = divmod(prod, uden);
    if (!rem.is_zero()) throw DenominatorMismatch("denominator does not divide st*u2");
    Poly<F> A = unum * mult;  // U = A / (st * u2)
    if (st.degree() == 0) {
        // b/st is a constant slot; everything belongs to the a side.
        return {mul_scalar(A, CoeffOps<F>::one() / st.coeff(0)), Poly<F>()};
    }
    auto [g, s, t] = ext_gcd(st, u2);
    if (g.degree() != 0) throw NotCoprime("partial_split moduli share a factor");
    // s*st + t*u2 = 1, so A = (A*t)*u2 mod st gives the b residue.
    Poly<F> b = divmod(A * t, st).second;
    Poly<F> a = divexact_field(A - b * u2, st);
    return {a, b};
}

}  // namespace qtele
