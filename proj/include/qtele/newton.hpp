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
#include <numeric>
#include <set>
#include <vector>

#include "bipoly.hpp"

namespace qtele {

// Convex hull of the exponent support of a bivariate polynomial.  Edge
// directions bound the possible collinear-factor directions; they are stored
// as primitive vectors normalized to b > 0, or (a > 0, b = 0).
struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices;        // CCW hull
    std::set<std::pair<long, long>> edge_directions;    // primitive, normalized
};

inline std::pair<long, long> normalize_direction(long a, long b) {
    long g = std::gcd(std::abs(a), std::abs(b));
    if (g != 0) {
        a /= g;
        b /= g;
    }
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

inline NewtonPolygon newton_polygon(const BiPoly& f) {
    if (f.is_zero()) throw ZeroInput("Newton polygon of zero polynomial");
    std::vector<std::pair<long, long>> pts;
    pts.reserve(f.terms().size());
    for (const auto& [k, v] : f.terms()) pts.push_back(k);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    NewtonPolygon np;
    if (pts.size() == 1) {
        np.vertices = pts;
        return np;
    }

    // Monotone chain.
    auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a,
                    const std::pair<long, long>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long, long>> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    std::size_t lower = k + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    np.vertices = hull;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (a == b) continue;
        np.edge_directions.insert(normalize_direction(b.first - a.first, b.second - a.second));
    }
    return np;
}

}  // namespace qtele
