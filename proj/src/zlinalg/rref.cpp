#include <sstream>
#include <utility>

#include "regchoice/zlinalg.hpp"

namespace regchoice {

RationalEchelon rref_rational(const IntMatrix& a) {
    const std::size_t n = a.rows(), m = a.cols();
    // Working matrix [A | I_n].
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(m + n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) w[i][j] = a(i, j);
        w[i][m + i] = 1;
    }

    RationalEchelon e;
    e.unknowns = m;
    e.equations = n;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && sgn(w[p][c]) == 0) ++p;
        if (p == n) continue;
        std::swap(w[p], w[r]);
        const Rational inv = 1 / w[r][c];
        for (auto& x : w[r]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || sgn(w[i][c]) == 0) continue;
            const Rational f = w[i][c];
            for (std::size_t j = 0; j < m + n; ++j) w[i][j] -= f * w[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }

    for (auto& row : w) {
        e.coeff.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m));
        e.rhs.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
    }
    return e;
}

std::optional<std::vector<Rational>> RationalEchelon::evaluate(std::span<const Integer> b) const {
    if (b.size() != equations) return std::nullopt;
    auto form = [&](std::size_t i) {
        Rational s = 0;
        for (std::size_t k = 0; k < equations; ++k) s += rhs[i][k] * Rational(b[k]);
        return s;
    };
    for (std::size_t i = rank(); i < equations; ++i)
        if (sgn(form(i)) != 0) return std::nullopt;
    std::vector<Rational> u(unknowns, Rational(0));
    for (std::size_t i = 0; i < rank(); ++i) u[pivots[i]] = form(i);
    return u;
}

std::string render_linear_form(std::span<const Rational> coeffs, std::string_view symbol) {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (sgn(c) < 0) out += '-';
        else if (!out.empty()) out += '+';
        if (mag != 1) {
            if (mag.get_den() == 1) out += mag.get_num().get_str();
            else out += "(" + mag.get_str() + ")";
        }
        out += std::string(symbol) + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

std::string RationalEchelon::render() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < equations; ++i) {
        os << '(';
        for (std::size_t j = 0; j < unknowns; ++j) os << (j ? " " : "") << coeff[i][j].get_str();
        os << " | " << render_linear_form(rhs[i], "b") << ")\n";
    }
    return os.str();
}

} // namespace regchoice
