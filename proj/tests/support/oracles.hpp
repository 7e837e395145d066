#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's reduction, solver or lattice code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "regchoice/diagram.hpp"
#include "regchoice/integer.hpp"

namespace oracle_support {

using regchoice::Integer;
using regchoice::IntMatrix;
using regchoice::IntVector;
using regchoice::Rational;

// Determinant by rational Gaussian elimination.
inline Integer rational_det(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det.get_num();
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// Smith invariant factors from determinantal divisors: d_k = gcd of all
// k x k minors, factor_k = d_k / d_(k-1). Only for small matrices.
inline std::vector<Integer> smith_invariants(const IntMatrix& a) {
    std::vector<Integer> out;
    Integer previous = 1;
    const std::size_t top = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= top; ++k) {
        Integer g = 0;
        subsets(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
            subsets(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
                IntMatrix minor(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(rows[i], cols[j]);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(rational_det(minor))).get_mpz_t());
            });
        });
        if (g == 0) break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

// Integer combination (x, y) with x*k1 + y*k2 = w, or nothing.
inline std::optional<std::pair<Integer, Integer>> combination(const IntVector& k1, const IntVector& k2,
                                                              const IntVector& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            const Integer det = k1[i] * k2[j] - k2[i] * k1[j];
            if (det == 0) continue;
            const Integer xn = w[i] * k2[j] - k2[i] * w[j];
            const Integer yn = k1[i] * w[j] - w[i] * k1[j];
            if (!mpz_divisible_p(xn.get_mpz_t(), det.get_mpz_t()) ||
                !mpz_divisible_p(yn.get_mpz_t(), det.get_mpz_t()))
                return std::nullopt;
            const Integer x = xn / det, y = yn / det;
            for (std::size_t t = 0; t < w.size(); ++t)
                if (x * k1[t] + y * k2[t] != w[t]) return std::nullopt;
            return std::make_pair(x, y);
        }
    return std::nullopt;
}

// Two bases span the same lattice.
inline bool same_lattice(const IntVector& a1, const IntVector& a2, const IntVector& b1, const IntVector& b2) {
    const auto p = combination(b1, b2, a1), q = combination(b1, b2, a2);
    if (!p || !q) return false;
    const Integer det = p->first * q->second - p->second * q->first;
    return abs(det) == 1;
}

inline IntVector dot_rows(const IntMatrix& a, const IntVector& u) {
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * u[j];
    return out;
}

// Every vector in [-r, r]^m with A u = target, by plain enumeration.
inline std::vector<IntVector> enumerate_box(const IntMatrix& a, const IntVector& target, int r) {
    std::vector<IntVector> found;
    IntVector u(a.cols(), Integer(-r));
    for (;;) {
        if (dot_rows(a, u) == target) found.push_back(u);
        std::size_t j = u.size();
        while (j > 0 && u[j - 1] == r) u[--j] = -r;
        if (j == 0) break;
        ++u[j - 1];
    }
    return found;
}

// Face partition from the rotation system: cycles of d -> rot^-1(mate(d)).
// Returned as sorted dart sets so the comparison ignores numbering.
inline std::set<std::set<std::size_t>> face_partition(const regchoice::FlatDiagram& d) {
    const std::size_t darts = 4 * d.crossing_count();
    std::multimap<int, std::size_t> by_label;
    for (std::size_t x = 0; x < darts; ++x) by_label.emplace(d.crossings()[x / 4][x % 4], x);
    std::vector<std::size_t> mate(darts);
    for (auto it = by_label.begin(); it != by_label.end(); std::advance(it, 2)) {
        const auto next = std::next(it);
        mate[it->second] = next->second;
        mate[next->second] = it->second;
    }
    std::vector<bool> seen(darts, false);
    std::set<std::set<std::size_t>> faces;
    for (std::size_t s = 0; s < darts; ++s) {
        if (seen[s]) continue;
        std::set<std::size_t> face;
        for (std::size_t x = s; !seen[x];) {
            seen[x] = true;
            face.insert(x);
            const std::size_t m = mate[x];
            x = 4 * (m / 4) + (m % 4 + 3) % 4;
        }
        faces.insert(face);
    }
    return faces;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    IntVector v(n);
    for (auto& x : v) x = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    return v;
}

inline IntVector e(std::size_t n, std::size_t i) {
    IntVector v(n);
    v[i] = 1;
    return v;
}

} // namespace oracle_support
