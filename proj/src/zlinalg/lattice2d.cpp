#include <algorithm>
#include <utility>

#include "regchoice/errors.hpp"
#include "regchoice/zlinalg.hpp"

namespace regchoice {

namespace {

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Nearest integer to num/den (den > 0), halves rounded down.
Integer round_div(const Integer& num, const Integer& den) {
    Integer twice = 2 * num + den;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
    return q;
}

Integer round_rational(const Rational& r) {
    return round_div(r.get_num(), r.get_den());
}

// (norm value, vector) ordering used for the minimisation.
struct Candidate {
    Integer norm;
    IntVector u;

    bool better_than(const Candidate& other) const {
        if (norm != other.norm) return norm < other.norm;
        return std::lexicographical_compare(u.begin(), u.end(), other.u.begin(), other.u.end());
    }
};

Integer norm_of(std::span<const Integer> u, Norm norm) {
    Integer r = 0;
    for (const auto& x : u) {
        if (norm == Norm::l2) {
            r += x * x;
        } else {
            Integer a = abs(x);
            if (a > r) r = a;
        }
    }
    return r;
}

} // namespace

KernelBasis gauss_reduce(const IntVector& k1, const IntVector& k2) {
    IntVector a = k1, b = k2;
    if (a.size() != b.size()) throw DimensionMismatch("basis vectors differ in length");
    if (is_zero(a) || is_zero(b)) return {a, b};
    for (;;) {
        if (dot(a, a) > dot(b, b)) std::swap(a, b);
        Integer mu = round_div(dot(a, b), dot(a, a));
        if (sgn(mu) == 0) break;
        for (std::size_t i = 0; i < b.size(); ++i) b[i] -= mu * a[i];
    }
    return {a, b};
}

IntVector minimize_in_family(const SolutionFamily& family, Norm norm) {
    const auto [r1, r2] = gauss_reduce(family.k1, family.k2);
    const IntVector& u0 = family.particular;

    // Least-squares optimum of |u0 + x r1 + y r2|_2 over the reals (exact).
    const Integer g11 = dot(r1, r1), g12 = dot(r1, r2), g22 = dot(r2, r2);
    const Integer h1 = -dot(u0, r1), h2 = -dot(u0, r2);
    const Integer det = g11 * g22 - g12 * g12;
    Integer cx = 0, cy = 0;
    if (sgn(det) != 0) {
        cx = round_rational(Rational(h1 * g22 - g12 * h2, det));
        cy = round_rational(Rational(g11 * h2 - g12 * h1, det));
    }

    auto evaluate = [&](const Integer& x, const Integer& y) {
        IntVector u = u0;
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += x * r1[i] + y * r2[i];
        Integer v = norm_of(u, norm);
        return std::pair{Candidate{std::move(v), std::move(u)}, std::pair{x, y}};
    };

    constexpr int window = 3;
    auto [best, at] = evaluate(cx, cy);
    for (int dx = -window; dx <= window; ++dx)
        for (int dy = -window; dy <= window; ++dy) {
            auto [c, p] = evaluate(cx + dx, cy + dy);
            if (c.better_than(best)) {
                best = std::move(c);
                at = p;
            }
        }
    // Descend from the window optimum over the 8-neighbourhood. Each step
    // strictly improves, so it terminates; cap the steps regardless.
    for (int step = 0; step < 10000; ++step) {
        bool moved = false;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (!dx && !dy) continue;
                auto [c, p] = evaluate(at.first + dx, at.second + dy);
                if (c.better_than(best)) {
                    best = std::move(c);
                    at = p;
                    moved = true;
                }
            }
        if (!moved) break;
    }
    return best.u;
}

} // namespace regchoice
