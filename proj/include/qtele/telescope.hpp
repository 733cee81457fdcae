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

#include <optional>
#include <vector>

#include "decide.hpp"

namespace qtele {

// A telescoping certificate: L = sum a_i(q^n) N^i with not all a_i zero, and
// the cofactor C with G = C*T, satisfying L T = (K-1) G.
struct QZPair {
    std::vector<XPoly> coeffs;  // a_0 .. a_I, polynomials in x over Q(q)
    YRat cert;                  // C(x, y)
};

// rho_i = T(n+i,k)/T(n,k) = prod_{l=0}^{i-1} eps_x^l(R1).
inline YRat rho(const YRat& R1, long i) {
    if (R1.is_zero()) throw ZeroInput("rho of zero shift quotient");
    YRat acc = YRat::one();
    for (long l = 0; l < i; ++l) acc = acc * qshift_x(R1, l);
    return acc;
}

// The defining identity of a qZ-pair, checked as an identity of reduced
// rational functions: sum_i a_i(x) rho_i = eps_y(C) R2 - C.
inline bool verify_qzpair(const TermParts& parts, const QZPair& pair) {
    bool all_zero = true;
    for (const auto& a : pair.coeffs)
        if (!a.is_zero()) all_zero = false;
    if (all_zero) return false;

    YRat R1 = shift_quotient(parts, Direction::n);
    YRat R2 = shift_quotient(parts, Direction::k);
    YRat lhs = YRat::zero();
    YRat r = YRat::one();
    for (std::size_t i = 0; i < pair.coeffs.size(); ++i) {
        if (i > 0) r = r * qshift_x(R1, static_cast<long>(i) - 1);
        if (!pair.coeffs[i].is_zero())
            lhs = lhs + YRat(YPoly(XRat(pair.coeffs[i]))) * r;
    }
    YRat rhs = qshift(pair.cert, 1) * R2 - pair.cert;
    return lhs == rhs;
}

inline bool verify_qzpair(const TermExpr& t, const QZPair& pair) {
    return verify_qzpair(to_parts(t), pair);
}

struct SearchOptions {
    long max_order = 2;
    long degree_cap = 8;
    long budget = 50'000'000;  // elimination-step limit
};

namespace detail {

inline bool field_is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool field_is_zero(const XRat& a) { return a.is_zero(); }
inline Rational field_inv(const Rational& a) { return Rational(1) / a; }
inline XRat field_inv(const XRat& a) { return a.inv(); }
inline Rational field_one(const Rational&) { return Rational(1); }
inline XRat field_one(const XRat&) { return CoeffOps<XRat>::one(); }

// Gauss-Jordan nullspace over an exact field; basis vectors ordered by their
// free column (deterministic).  Rows with the fewest nonzero entries are
// preferred as pivots to limit coefficient growth.
template <class K>
std::vector<std::vector<K>> solve_nullspace(std::vector<std::vector<K>> m, std::size_t ncols,
                                            long& budget) {
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> col_is_pivot(ncols, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = m.size();
        std::size_t best_score = 0;
        for (std::size_t i = row; i < m.size(); ++i) {
            if (field_is_zero(m[i][col])) continue;
            std::size_t score = 0;
            for (std::size_t j = col; j < ncols; ++j)
                if (!field_is_zero(m[i][j])) ++score;
            if (sel == m.size() || score < best_score) {
                sel = i;
                best_score = score;
            }
        }
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        K inv = field_inv(m[row][col]);
        for (std::size_t j = col; j < ncols; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || field_is_zero(m[i][col])) continue;
            K f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                m[i][j] = m[i][j] - f * m[row][j];
                if (--budget < 0) throw BudgetExceeded("qZ-pair search budget exhausted");
            }
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[col] = true;
        ++row;
    }
    std::vector<std::vector<K>> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (col_is_pivot[fc]) continue;
        std::vector<K> sol(ncols, K());
        sol[fc] = field_one(K());
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            sol[pivot_col_of_row[r]] = -m[r][fc];
        basis.push_back(std::move(sol));
    }
    return basis;
}

// Screen: does the system, specialized at fixed rational points, admit a
// nullspace vector with a nonzero a-part?  If not at any point, skip the
// exact solve for this order.  One-sided: the search stays sound (returned
// pairs are post-verified); a miss costs only completeness, which the
// bounded search does not promise anyway.
inline bool screen_admits_telescoper(const std::vector<std::vector<XRat>>& m,
                                     std::size_t ncols, std::size_t nx, long& budget) {
    bool any_point_ok = false;
    for (int pi = 0; pi < 2; ++pi) {
        const SpecPoint& p = qtele::detail::certificate_points()[pi];
        std::vector<std::vector<Rational>> spec(m.size(),
                                                std::vector<Rational>(ncols, Rational(0)));
        bool ok = true;
        for (std::size_t i = 0; i < m.size() && ok; ++i) {
            for (std::size_t j = 0; j < ncols; ++j) {
                if (m[i][j].is_zero()) continue;
                try {
                    spec[i][j] = CoeffOps<XRat>::spec_eval(m[i][j], p);
                } catch (const PoleAtPoint&) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        any_point_ok = true;
        auto basis = solve_nullspace(std::move(spec), ncols, budget);
        for (const auto& sol : basis)
            for (std::size_t j = nx; j < ncols; ++j)
                if (sgn(sol[j]) != 0) return true;
    }
    // If every specialization point was degenerate, fall through to the
    // exact solve rather than silently skipping.
    return !any_point_ok;
}

}  // namespace detail

// Bounded-order qZ-pair search: a parametrized q-Gosper ansatz.  For each
// order I the equation eps_y(C) R2 - C = sum a_i rho_i is reduced, via the
// q-Gosper form of R2 * s/eps(s) with s the common rho denominator, to the
// polynomial equation
//     z a eps(X) - eps^{-1}(b) X = c * sum a_i p_i
// in a Laurent ansatz X = sum_{m=-d}^{d} X_m y^m (y-powers are units under
// the q-shift, so certificate denominators may carry them).  The linear
// system over Q(q)(x) in the X_m and the a_i is solved once per order at the
// full degree cap; returned pairs are always post-verified.  Soundness is
// guaranteed, completeness is not (degree caps).
inline std::optional<QZPair> search_qzpair(const TermParts& parts,
                                           const SearchOptions& opt = {}) {
    YRat R1 = shift_quotient(parts, Direction::n);
    YRat R2 = shift_quotient(parts, Direction::k);
    long budget = opt.budget;

    for (long order = 0; order <= opt.max_order; ++order) {
        // rho_i and their common denominator.
        std::vector<YRat> rhos;
        rhos.push_back(YRat::one());
        for (long i = 1; i <= order; ++i)
            rhos.push_back(rhos.back() * qshift_x(R1, i - 1));
        YPoly sden = YPoly::one();
        for (const auto& r : rhos) sden = lcm_poly(sden, r.den());
        std::vector<YPoly> pvec;
        pvec.reserve(rhos.size());
        for (const auto& r : rhos)
            pvec.push_back(r.num() * divexact_field(sden, r.den()));

        YRat rhat = R2 * YRat(sden) / YRat(qshift(sden, 1));
        QGosperForm<XRat> gf = qgosper_form(rhat);
        YPoly bm1 = qshift(gf.b, -1);

        const long d = opt.degree_cap;
        const long nx = 2 * d + 1;          // X_{-d} .. X_{d}
        const long na = order + 1;          // a_0 .. a_I
        const std::size_t ncols = static_cast<std::size_t>(nx + na);

        // Column polynomials, everything premultiplied by y^d.
        std::vector<YPoly> cols;
        cols.reserve(ncols);
        long max_deg = 0;
        for (long m = -d; m <= d; ++m) {
            YPoly t = mul_scalar(gf.a, gf.z * CoeffOps<XRat>::q_power(m)) - bm1;
            YPoly shifted = shift_exponent(t, m + d);
            max_deg = std::max<long>(max_deg, shifted.degree());
            cols.push_back(shifted);
        }
        for (long i = 0; i < na; ++i) {
            YPoly t = shift_exponent(gf.c * pvec[static_cast<std::size_t>(i)], d);
            t = -t;
            max_deg = std::max<long>(max_deg, t.degree());
            cols.push_back(t);
        }

        std::vector<std::vector<XRat>> M(static_cast<std::size_t>(max_deg) + 1,
                                         std::vector<XRat>(ncols, XRat()));
        for (std::size_t cidx = 0; cidx < ncols; ++cidx)
            for (long e = 0; e <= cols[cidx].degree(); ++e)
                M[static_cast<std::size_t>(e)][cidx] = cols[cidx].coeff(static_cast<int>(e));

        if (!detail::screen_admits_telescoper(M, ncols, static_cast<std::size_t>(nx), budget))
            continue;

        auto basis = detail::solve_nullspace(std::move(M), ncols, budget);
        for (const auto& sol : basis) {
            bool a_nonzero = false;
            for (long i = 0; i < na; ++i)
                if (!sol[static_cast<std::size_t>(nx + i)].is_zero()) a_nonzero = true;
            if (!a_nonzero) continue;

            // Clear x-denominators so the a_i become polynomials; the pair is
            // scale-invariant, so scale the whole solution.
            XPoly L = XPoly::one();
            for (long i = 0; i < na; ++i) {
                const XRat& a = sol[static_cast<std::size_t>(nx + i)];
                if (!a.is_zero()) L = lcm_domain_field(L, a.den());
            }
            XRat scale = XRat(L);
            QZPair pair;
            pair.coeffs.reserve(static_cast<std::size_t>(na));
            for (long i = 0; i < na; ++i) {
                XRat a = sol[static_cast<std::size_t>(nx + i)] * scale;
                if (!a.is_polynomial())
                    throw InternalCheckFailure("denominator clearing failed in search");
                pair.coeffs.push_back(a.num());
            }
            YPoly X = YPoly::zero();
            for (long m = -d; m <= d; ++m) {
                const XRat& xm = sol[static_cast<std::size_t>(m + d)];
                if (!xm.is_zero()) X = X + shift_exponent(YPoly(xm * scale), m + d);
            }
            YPoly den = shift_exponent(gf.c * sden, d);
            QZPair candidate = pair;
            candidate.cert = YRat(bm1 * X, den);
            if (verify_qzpair(parts, candidate)) return candidate;
        }
    }
    return std::nullopt;
}

inline std::optional<QZPair> search_qzpair(const TermExpr& t, const SearchOptions& opt = {}) {
    return search_qzpair(to_parts(t), opt);
}

}  // namespace qtele
