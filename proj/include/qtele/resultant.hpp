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

#include <vector>

#include "ratfun.hpp"

namespace qtele {

// Exact division between determinant entries.  Bareiss only ever divides by
// previous pivots, which divide exactly over any integral domain.
inline Int entry_divexact(const Int& a, const Int& b) {
    return CoeffOps<Int>::divexact(a, b);
}
inline Rational entry_divexact(const Rational& a, const Rational& b) { return a / b; }
inline QRat entry_divexact(const QRat& a, const QRat& b) { return a / b; }
template <class F>
RatFun<F> entry_divexact(const RatFun<F>& a, const RatFun<F>& b) {
    return a / b;
}
template <class C>
Poly<C> entry_divexact(const Poly<C>& a, const Poly<C>& b) {
    if constexpr (CoeffOps<C>::is_field)
        return divexact_field(a, b);
    else
        return CoeffOps<Poly<C>>::divexact(a, b);
}

inline bool entry_is_zero(const Int& a) { return sgn(a) == 0; }
inline bool entry_is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool entry_is_zero(const QRat& a) { return a.is_zero(); }
template <class F>
bool entry_is_zero(const RatFun<F>& a) {
    return a.is_zero();
}
template <class C>
bool entry_is_zero(const Poly<C>& a) {
    return a.is_zero();
}

inline Int negate_entry(const Int& a) { return -a; }
inline Rational negate_entry(const Rational& a) { return Rational(-a); }
inline QRat negate_entry(const QRat& a) { return -a; }
template <class F>
RatFun<F> negate_entry(const RatFun<F>& a) {
    return -a;
}
template <class C>
Poly<C> negate_entry(const Poly<C>& a) {
    return -a;
}

// Fraction-free determinant (Bareiss).  Consumes the matrix.
template <class E>
E bareiss_det(std::vector<std::vector<E>>& m, const E& one_entry) {
    const std::size_t n = m.size();
    if (n == 0) return one_entry;
    E prev = one_entry;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && entry_is_zero(m[piv][k])) ++piv;
        if (piv == n) return m[0][0] - m[0][0];  // singular: determinant is zero
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                E t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = entry_divexact(t, prev);
            }
        }
        prev = m[k][k];
    }
    return negate ? negate_entry(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Sylvester matrix of f (degree m) and g (degree n) with the f rows first;
// the determinant is the resultant under the convention used throughout:
// Res(f, g) = lc(f)^n * prod over roots of f of g(root).
template <class E>
std::vector<std::vector<E>> sylvester_matrix(const std::vector<E>& f,
                                             const std::vector<E>& g, const E& zero_entry) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    const int N = m + n;
    std::vector<std::vector<E>> M(static_cast<std::size_t>(N),
                                  std::vector<E>(static_cast<std::size_t>(N), zero_entry));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = f[static_cast<std::size_t>(m - j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = g[static_cast<std::size_t>(n - j)];
    return M;
}

template <class E>
E sylvester_resultant(const std::vector<E>& f, const std::vector<E>& g, const E& zero_entry,
                      const E& one_entry) {
    if (f.size() <= 1 || g.size() <= 1) {
        // Res with a constant argument: lc^deg of the other side.
        if (f.size() == 1 && g.size() >= 1) {
            E acc = one_entry;
            for (std::size_t i = 1; i < g.size(); ++i) acc = acc * f[0];
            return acc;
        }
        if (g.size() == 1 && f.size() >= 1) {
            E acc = one_entry;
            for (std::size_t i = 1; i < f.size(); ++i) acc = acc * g[0];
            return acc;
        }
        return one_entry;
    }
    auto M = sylvester_matrix(f, g, zero_entry);
    return bareiss_det(M, one_entry);
}

// Resultant of two nonzero polynomials over a coefficient field, with respect
// to their (shared) main variable.
template <class F>
    requires(CoeffOps<F>::is_field)
F poly_resultant(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroInput("resultant of zero polynomial");
    std::vector<F> fc = f.coeffs();
    std::vector<F> gc = g.coeffs();
    if (fc.size() == 1 && gc.size() == 1) return CoeffOps<F>::one();
    F r = sylvester_resultant(fc, gc, CoeffOps<F>::zero(), CoeffOps<F>::one());
    return r;
}

}  // namespace qtele
