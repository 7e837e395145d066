#pragma once

// Exact integer linear algebra: unimodular reduction to Smith form (E00 for
// region choice matrices), integral solving, kernel lattices, 2-D lattice
// minimisation and rational echelon forms.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regchoice/integer.hpp"

namespace regchoice {

enum class OpKind { swap_rows, swap_cols, negate_row, negate_col, add_row, add_col };

std::string_view op_kind_name(OpKind kind) noexcept;
std::optional<OpKind> parse_op_kind(std::string_view name) noexcept;

/// One elementary unimodular operation.
///   swap_*:   exchange lines `target` and `source`
///   negate_*: multiply line `target` by -1
///   add_*:    line[target] += multiplier * line[source]
struct ElementaryOp {
    OpKind kind;
    std::size_t target = 0;
    std::size_t source = 0;
    Integer multiplier = 0;

    friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

/// Apply `ops` in order to a copy of `a`.
IntMatrix replay(const IntMatrix& a, std::span<const ElementaryOp> ops);

/// P * A * Q = S with P, Q unimodular and S in Smith normal form.
struct E00Decomposition {
    IntMatrix P;
    IntMatrix Q;
    IntMatrix S;
    std::vector<ElementaryOp> log;
    std::size_t rank = 0;
    /// S == (I_n | 0 0): every row has a unit pivot and there are exactly
    /// two trailing zero columns.
    bool is_e00 = false;

    std::vector<Integer> diagonal() const;
};

/// Smallest-|pivot| Euclidean reduction to Smith normal form with a full
/// operation log. Throws std::invalid_argument on a 0-row or 0-column input.
E00Decomposition reduce_to_e00(const IntMatrix& a);

/// All integral solutions of A u + b = 0 for an E00 matrix:
/// u = particular + alpha * k1 + beta * k2.
struct SolutionFamily {
    IntVector particular;
    IntVector k1;
    IntVector k2;

    IntVector member(const Integer& alpha, const Integer& beta) const;
};

/// Throws NotE00Error when reduce_to_e00(a).is_e00 is false and
/// DimensionMismatch when b has the wrong length.
SolutionFamily solve_integral(const IntMatrix& a, std::span<const Integer> b);
SolutionFamily solve_integral(const E00Decomposition& dec, std::span<const Integer> b);

struct KernelBasis {
    IntVector k1;
    IntVector k2;
};
KernelBasis kernel_basis(const IntMatrix& a);

/// General integral solve of A x = rhs from a Smith decomposition: a
/// particular solution and a basis of the integer kernel (cols - rank
/// vectors), or nullopt when no integral solution exists.
struct LatticeSolution {
    IntVector particular;
    std::vector<IntVector> kernel;
};
std::optional<LatticeSolution> solve_diophantine(const IntMatrix& a,
                                                 std::span<const Integer> rhs);

enum class Norm { linf, l2 };

/// Lagrange-Gauss reduction of a 2-D lattice basis (Euclidean norm).
KernelBasis gauss_reduce(const IntVector& k1, const IntVector& k2);

/// Member of the family minimising `norm`. Reduces the kernel basis, starts
/// from the rounded least-squares optimum and searches a bounded window of
/// (alpha, beta) around it. Ties break lexicographically on the vector.
IntVector minimize_in_family(const SolutionFamily& family, Norm norm);

/// Reduced row echelon form of [A | I_n] over Q. Row i of the result reads
/// sum_j coeff[i][j] u_j = sum_k rhs[i][k] b_k, the affine dependence of the
/// solution of A u = b on the symbolic right-hand side b.
struct RationalEchelon {
    std::size_t unknowns = 0;   // columns of A
    std::size_t equations = 0;  // rows of A
    std::vector<std::vector<Rational>> coeff;
    std::vector<std::vector<Rational>> rhs;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row

    std::size_t rank() const noexcept { return pivots.size(); }
    /// "(1 0 0 1 2 | -b1+b2+b3)" per line.
    std::string render() const;
    /// Solution with all free unknowns set to zero, or nullopt if a zero row
    /// carries a nonzero right-hand side.
    std::optional<std::vector<Rational>> evaluate(std::span<const Integer> b) const;
};
RationalEchelon rref_rational(const IntMatrix& a);

std::string render_linear_form(std::span<const Rational> coeffs, std::string_view symbol);

} // namespace regchoice
