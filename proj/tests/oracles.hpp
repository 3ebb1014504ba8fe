#pragma once

// Test-only reference computations. They deliberately avoid the library's
// canonicalization and elimination code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "thetadiv/basis.hpp"
#include "thetadiv/rational.hpp"
#include "thetadiv/test_curves.hpp"

namespace oracle {

using thetadiv::Rational;

/// A boundary class as the unordered pair of its two representatives,
/// each written as (h, sorted marking list).
using Rep = std::pair<int, std::vector<int>>;
using ClassOrbit = std::set<Rep>;

inline std::vector<int> complement(const std::vector<int>& P, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (std::find(P.begin(), P.end(), i) == P.end()) out.push_back(i);
    }
    return out;
}

inline std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i) {
            if (bits & (1u << (i - 1))) s.push_back(i);
        }
        out.push_back(s);
    }
    return out;
}

inline bool stable_rep(int h, const std::vector<int>& P, int g, int n) {
    const int m = static_cast<int>(P.size());
    return (h > 0 || m >= 2) && (g - h > 0 || n - m >= 2);
}

/// Brute force: every stable (h, P), grouped with its mirror.
inline std::set<ClassOrbit> boundary_orbits(int g, int n) {
    std::set<ClassOrbit> out;
    for (int h = 0; h <= g; ++h) {
        for (const auto& P : all_subsets(n)) {
            if (!stable_rep(h, P, g, n)) continue;
            out.insert(ClassOrbit{{h, P}, {g - h, complement(P, n)}});
        }
    }
    return out;
}

/// Plain Gauss-Jordan over Q with row pivoting on the first nonzero entry.
/// Returns nullopt when the square part is singular or an extra row is
/// inconsistent.
inline std::optional<std::vector<Rational>> gauss_jordan(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t m = a.size();
    const std::size_t c = m == 0 ? 0 : a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < c; ++col) {
        std::size_t p = row;
        while (p < m && a[p][col].is_zero()) ++p;
        if (p == m) return std::nullopt;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < c; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        ++row;
    }
    for (std::size_t i = row; i < m; ++i) {
        if (!b[i].is_zero()) return std::nullopt;
    }
    return std::vector<Rational>(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(c));
}

/// Rank by the same elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
    const std::size_t m = a.size();
    const std::size_t c = m == 0 ? 0 : a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = row + 1; i < m; ++i) {
            if (a[i][col].is_zero()) continue;
            const Rational f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < c; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    return row;
}

/// Determinant by cofactor-free elimination with sign tracking.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            const Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

/// Two representatives name the same boundary divisor.
inline bool same_class(int h, const std::vector<int>& P, int l, const std::vector<int>& Q, int g, int n) {
    return (h == l && P == Q) || (h == g - l && P == complement(Q, n));
}

/// The intersection table written out case by case,
/// with class equality tested on raw representatives.
inline Rational table(const thetadiv::TestCurve& c, const thetadiv::DivGenerator& x, int g, int n) {
    using CK = thetadiv::TestCurve::Kind;
    using GK = thetadiv::DivGenerator::Kind;
    const auto Q = x.kind() == GK::Delta ? x.boundary().P.elements() : std::vector<int>{};
    const int l = x.kind() == GK::Delta ? x.boundary().h : -1;
    switch (c.kind()) {
        case CK::Zi: {
            const int i = c.index();
            if (x.kind() == GK::K) return x.index() == i ? Rational(2 * g - 2) : Rational(0);
            if (x.kind() != GK::Delta) return Rational(0);
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                std::vector<int> ij{std::min(i, j), std::max(i, j)};
                if (same_class(0, ij, l, Q, g, n)) return Rational(1);
            }
            return Rational(0);
        }
        case CK::ZhP: {
            const int h = c.boundary().h;
            const auto P = c.boundary().P.elements();
            const auto Pc = complement(P, n);
            if (x.kind() == GK::K) {
                const bool in = std::find(P.begin(), P.end(), x.index()) != P.end();
                if (h == 0 && in) return Rational(2 * g - 2);
                if (h > 0 && !in) return Rational(1);
                return Rational(0);
            }
            if (x.kind() != GK::Delta) return Rational(0);
            Rational v(0);
            if (same_class(h, P, l, Q, g, n)) v += Rational(2 - 2 * (g - h) - static_cast<int>(Pc.size()));
            for (int j : Pc) {
                auto Pj = P;
                Pj.push_back(j);
                std::sort(Pj.begin(), Pj.end());
                if (same_class(h, Pj, l, Q, g, n)) v += Rational(1);
            }
            return v;
        }
        case CK::E:
            if (x.kind() == GK::Lambda1) return Rational(1, 24);
            if (x.kind() == GK::DeltaIrr) return Rational(1, 2);
            if (x.kind() == GK::Delta && same_class(1, {}, l, Q, g, n)) return Rational(-1, 24);
            return Rational(0);
        case CK::Zirr:
            if (x.kind() == GK::DeltaIrr) return Rational(-1);
            if (x.kind() == GK::Delta && same_class(1, {}, l, Q, g, n)) return Rational(1);
            return Rational(0);
    }
    return Rational(0);
}

/// Coefficient map of a closed-form class, keyed by generator label.
/// kind: 0 = T, 1 = Theta, 2 = D (direct formula with the given P_+).
/// Boundary coefficients are computed on the h = 0 representative when the
/// class has one, otherwise on the canonical one.
inline std::map<std::string, Rational> closed_form(int kind, int g, int n, const std::vector<std::int64_t>& d,
                                                   const std::vector<int>& plus = {}) {
    std::map<std::string, Rational> out;
    auto sum = [&](const std::vector<int>& P) {
        Rational s(0);
        for (int i : P) s += Rational(d[static_cast<std::size_t>(i - 1)]);
        return s;
    };
    auto sq = [&](const std::vector<int>& P) {
        Rational s(0);
        for (int i : P) s += Rational(d[static_cast<std::size_t>(i - 1)] * d[static_cast<std::size_t>(i - 1)]);
        return s;
    };
    out["lambda1"] = Rational(kind == 0 ? 0 : -1);
    out["delta_irr"] = Rational(kind == 1 ? Rational(1, 8) : Rational(0));
    for (int i = 1; i <= n; ++i) {
        const Rational di(d[static_cast<std::size_t>(i - 1)]);
        out["K" + std::to_string(i)] = kind == 0 ? di * di / Rational(2) : di * (di + Rational(1)) / Rational(2);
    }
    for (const auto& b : thetadiv::enumerate_boundary(g, n)) {
        const auto label = thetadiv::DivGenerator::delta(b).label();
        std::vector<int> P = b.P.elements();
        int h = b.h;
        if (h == g) {
            h = 0;
            P = complement(P, n);
        }
        const Rational dP = sum(P);
        Rational c;
        if (h == 0) {
            c = -(dP * dP - sq(P)) / Rational(2);
        } else if (kind == 0) {
            c = -dP * dP / Rational(2);
        } else {
            const Rational t = dP - Rational(h);
            c = -t * (t + Rational(1)) / Rational(2);
        }
        if (kind == 2) {
            // Both representatives of the class, checked against P_+.
            const std::pair<int, std::vector<int>> reps[2] = {{b.h, b.P.elements()},
                                                              {g - b.h, complement(b.P.elements(), n)}};
            for (const auto& [rh, rP] : reps) {
                bool inside = true;
                for (int i : rP) inside = inside && std::find(plus.begin(), plus.end(), i) != plus.end();
                if (inside && Rational(rh) > sum(rP)) c -= Rational(rh) - sum(rP);
            }
        }
        out[label] = c;
    }
    return out;
}

}  // namespace oracle
