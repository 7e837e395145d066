#include "regchoice/errors.hpp"
#include "regchoice/zlinalg.hpp"

namespace regchoice {

IntVector SolutionFamily::member(const Integer& alpha, const Integer& beta) const {
    IntVector u = particular;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += alpha * k1[i] + beta * k2[i];
    return u;
}

SolutionFamily solve_integral(const E00Decomposition& dec, std::span<const Integer> b) {
    if (!dec.is_e00)
        throw NotE00Error("matrix is not Z-equivalent to (I | 0 0); solvability is not certified");
    const std::size_t n = dec.P.rows();
    const std::size_t m = dec.Q.rows();
    if (b.size() != n)
        throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) +
                                " entries, expected " + std::to_string(n));
    IntVector y = negate(multiply(dec.P, b));
    y.resize(m, Integer(0));
    return SolutionFamily{multiply(dec.Q, y), dec.Q.column(n), dec.Q.column(n + 1)};
}

SolutionFamily solve_integral(const IntMatrix& a, std::span<const Integer> b) {
    return solve_integral(reduce_to_e00(a), b);
}

KernelBasis kernel_basis(const IntMatrix& a) {
    const auto dec = reduce_to_e00(a);
    if (!dec.is_e00)
        throw NotE00Error("matrix is not Z-equivalent to (I | 0 0); kernel rank is not 2");
    return {dec.Q.column(a.rows()), dec.Q.column(a.rows() + 1)};
}

std::optional<LatticeSolution> solve_diophantine(const IntMatrix& a,
                                                 std::span<const Integer> rhs) {
    if (rhs.size() != a.rows()) throw DimensionMismatch("right-hand side length differs");
    const std::size_t m = a.cols();
    if (a.rows() == 0) {
        LatticeSolution sol{IntVector(m), {}};
        for (std::size_t j = 0; j < m; ++j) {
            IntVector e(m);
            e[j] = 1;
            sol.kernel.push_back(std::move(e));
        }
        return sol;
    }
    if (m == 0) {
        if (!is_zero(rhs)) return std::nullopt;
        return LatticeSolution{};
    }

    const auto dec = reduce_to_e00(a);
    IntVector c = multiply(dec.P, rhs);
    IntVector y(m);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < dec.rank) {
            const Integer& d = dec.S(i, i);
            if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            y[i] = c[i] / d;
        } else if (sgn(c[i]) != 0) {
            return std::nullopt;
        }
    }
    LatticeSolution sol{multiply(dec.Q, y), {}};
    for (std::size_t j = dec.rank; j < m; ++j) sol.kernel.push_back(dec.Q.column(j));
    return sol;
}

} // namespace regchoice
