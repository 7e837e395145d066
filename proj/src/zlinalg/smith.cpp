#include <stdexcept>
#include <utility>

#include "regchoice/errors.hpp"
#include "regchoice/zlinalg.hpp"

namespace regchoice {

std::string_view op_kind_name(OpKind kind) noexcept {
    switch (kind) {
    case OpKind::swap_rows: return "swap_rows";
    case OpKind::swap_cols: return "swap_cols";
    case OpKind::negate_row: return "negate_row";
    case OpKind::negate_col: return "negate_col";
    case OpKind::add_row: return "add_row";
    case OpKind::add_col: return "add_col";
    }
    return "?";
}

std::optional<OpKind> parse_op_kind(std::string_view name) noexcept {
    for (OpKind k : {OpKind::swap_rows, OpKind::swap_cols, OpKind::negate_row,
                     OpKind::negate_col, OpKind::add_row, OpKind::add_col})
        if (op_kind_name(k) == name) return k;
    return std::nullopt;
}

namespace {

void apply_op(IntMatrix& m, const ElementaryOp& op) {
    const std::size_t t = op.target, s = op.source;
    switch (op.kind) {
    case OpKind::swap_rows:
        for (std::size_t j = 0; j < m.cols(); ++j) swap(m(t, j), m(s, j));
        break;
    case OpKind::swap_cols:
        for (std::size_t i = 0; i < m.rows(); ++i) swap(m(i, t), m(i, s));
        break;
    case OpKind::negate_row:
        for (std::size_t j = 0; j < m.cols(); ++j) m(t, j) = -m(t, j);
        break;
    case OpKind::negate_col:
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, t) = -m(i, t);
        break;
    case OpKind::add_row:
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(s, j)) != 0) m(t, j) += op.multiplier * m(s, j);
        break;
    case OpKind::add_col:
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (sgn(m(i, s)) != 0) m(i, t) += op.multiplier * m(i, s);
        break;
    }
}

bool is_row_op(OpKind k) {
    return k == OpKind::swap_rows || k == OpKind::negate_row || k == OpKind::add_row;
}

// Applies each operation to S and to whichever of P (rows) or Q (columns)
// accumulates it, so P * A * Q == S holds after every step.
class Reducer {
public:
    explicit Reducer(const IntMatrix& a)
        : s_(a), p_(IntMatrix::identity(a.rows())), q_(IntMatrix::identity(a.cols())) {}

    void op(OpKind kind, std::size_t target, std::size_t source = 0, Integer mult = 0) {
        ElementaryOp e{kind, target, source, std::move(mult)};
        apply_op(s_, e);
        apply_op(is_row_op(kind) ? p_ : q_, e);
        log_.push_back(std::move(e));
    }

    E00Decomposition run() {
        const std::size_t n = s_.rows(), m = s_.cols();
        std::size_t t = 0;
        for (; t < std::min(n, m); ++t) {
            if (!place_pivot(t)) break;
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < n; ++i) {
                    if (sgn(s_(i, t)) == 0) continue;
                    Integer q = s_(i, t) / s_(t, t);  // truncating
                    if (sgn(q) != 0) op(OpKind::add_row, i, t, -q);
                    if (sgn(s_(i, t)) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < m; ++j) {
                    if (sgn(s_(t, j)) == 0) continue;
                    Integer q = s_(t, j) / s_(t, t);
                    if (sgn(q) != 0) op(OpKind::add_col, j, t, -q);
                    if (sgn(s_(t, j)) != 0) clean = false;
                }
                if (!clean) {
                    place_pivot(t);
                    continue;
                }
                // Divisibility: every later entry must be a multiple of the pivot.
                auto bad = find_non_multiple(t);
                if (!bad) break;
                op(OpKind::add_row, t, *bad, Integer(1));
            }
            if (sgn(s_(t, t)) < 0) op(OpKind::negate_row, t);
        }

        E00Decomposition dec;
        dec.rank = t;
        dec.is_e00 = (m == n + 2) && (t == n);
        for (std::size_t i = 0; i < t && dec.is_e00; ++i)
            if (s_(i, i) != 1) dec.is_e00 = false;
        dec.S = std::move(s_);
        dec.P = std::move(p_);
        dec.Q = std::move(q_);
        dec.log = std::move(log_);
        return dec;
    }

private:
    // Moves the smallest nonzero |entry| of the trailing block to (t, t).
    bool place_pivot(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        for (std::size_t i = t; i < s_.rows(); ++i)
            for (std::size_t j = t; j < s_.cols(); ++j) {
                if (sgn(s_(i, j)) == 0) continue;
                if (!found || mpz_cmpabs(s_(i, j).get_mpz_t(), s_(bi, bj).get_mpz_t()) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        if (!found) return false;
        if (bi != t) op(OpKind::swap_rows, t, bi);
        if (bj != t) op(OpKind::swap_cols, t, bj);
        return true;
    }

    std::optional<std::size_t> find_non_multiple(std::size_t t) const {
        for (std::size_t i = t + 1; i < s_.rows(); ++i)
            for (std::size_t j = t + 1; j < s_.cols(); ++j)
                if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) return i;
        return std::nullopt;
    }

    IntMatrix s_, p_, q_;
    std::vector<ElementaryOp> log_;
};

} // namespace

IntMatrix replay(const IntMatrix& a, std::span<const ElementaryOp> ops) {
    IntMatrix m = a;
    for (const auto& op : ops) {
        const bool row = is_row_op(op.kind);
        const std::size_t bound = row ? m.rows() : m.cols();
        if (op.target >= bound || op.source >= bound)
            throw std::out_of_range("elementary operation index out of range");
        apply_op(m, op);
    }
    return m;
}

std::vector<Integer> E00Decomposition::diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
}

E00Decomposition reduce_to_e00(const IntMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0)
        throw std::invalid_argument("reduce_to_e00: matrix has a zero dimension");
    return Reducer(a).run();
}

} // namespace regchoice
