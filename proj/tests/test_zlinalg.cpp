#include <doctest.h>

#include <random>
#include <stdexcept>

#include "regchoice/catalog.hpp"
#include "regchoice/errors.hpp"
#include "regchoice/incidence.hpp"
#include "regchoice/zlinalg.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

using namespace regchoice;
namespace os = oracle_support;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
    return m;
}

void check_decomposition(const IntMatrix& a) {
    const auto dec = reduce_to_e00(a);
    CHECK(dec.P * a * dec.Q == dec.S);
    CHECK(abs(determinant(dec.P)) == 1);
    CHECK(abs(determinant(dec.Q)) == 1);
    CHECK(replay(a, dec.log) == dec.S);
    for (std::size_t i = 0; i < dec.S.rows(); ++i)
        for (std::size_t j = 0; j < dec.S.cols(); ++j)
            if (i != j) REQUIRE(dec.S(i, j) == 0);
    const auto diag = dec.diagonal();
    std::vector<Integer> nonzero;
    for (const auto& d : diag) {
        CHECK(d >= 0);
        if (d != 0) nonzero.push_back(d);
    }
    CHECK(nonzero.size() == dec.rank);
    CHECK(nonzero == os::smith_invariants(a));
    for (std::size_t k = 1; k < nonzero.size(); ++k)
        CHECK(mpz_divisible_p(nonzero[k].get_mpz_t(), nonzero[k - 1].get_mpz_t()));
}

IntMatrix single(const char* name) { return build_matrix(catalog(name), CountingRule::single).entries; }

} // namespace

TEST_CASE("operation names round-trip") {
    for (auto kind : {OpKind::swap_rows, OpKind::swap_cols, OpKind::negate_row, OpKind::negate_col,
                      OpKind::add_row, OpKind::add_col})
        CHECK(parse_op_kind(op_kind_name(kind)) == kind);
    CHECK_FALSE(parse_op_kind("transpose"));
}

TEST_CASE("reduce_to_e00 on the smallest kink") {
    const IntMatrix a{{2, 1, 1}};
    const auto dec = reduce_to_e00(a);
    CHECK(dec.S == IntMatrix{{1, 0, 0}});
    CHECK(dec.is_e00);
    check_decomposition(a);
}

TEST_CASE("reduce_to_e00 on the trefoil single-rule matrix") {
    const auto dec = reduce_to_e00(tables::single_rule().at("3_1"));
    CHECK(dec.S == IntMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
    CHECK(dec.is_e00);
    CHECK(os::smith_invariants(tables::single_rule().at("3_1")) == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("non region-choice input keeps its Smith form") {
    const auto dec = reduce_to_e00(IntMatrix{{2, 0, 0}});
    CHECK(dec.S == IntMatrix{{2, 0, 0}});
    CHECK_FALSE(dec.is_e00);
    CHECK_THROWS_AS(solve_integral(IntMatrix{{2, 0, 0}}, make_vector({1})), NotE00Error);
    CHECK_FALSE(reduce_to_e00(IntMatrix{{1, 0}}).is_e00);  // one trailing zero column, not two
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(reduce_to_e00(IntMatrix(0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(reduce_to_e00(IntMatrix(2, 0)), std::invalid_argument);
}

TEST_CASE("random matrices: P A Q = S, unimodular P and Q, replayable log, Smith invariants") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
        IntMatrix a = random_matrix(rng, rows, cols, trial < 30 ? 3 : 40);
        if (trial % 7 == 0 && rows > 1)  // force a dependent row
            for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = 2 * a(0, j);
        CAPTURE(a);
        check_decomposition(a);
    }
}

TEST_CASE("catalog matrices of both rules are E00") {
    for (auto name : catalog_names())
        for (auto rule : {CountingRule::single, CountingRule::twice}) {
            CAPTURE(name);
            const auto a = build_matrix(catalog(name), rule).entries;
            CHECK(reduce_to_e00(a).is_e00);
            check_decomposition(a);
        }
}

TEST_CASE("solve_integral examples") {
    SUBCASE("trefoil, single rule") {
        const auto a = single("3_1");
        const auto b = make_vector({-1, 0, 0});
        const auto family = solve_integral(a, b);
        CHECK(is_zero(add(multiply(a, family.particular), b)));
        const auto offset = subtract(make_vector({-1, 1, 1, 0, 0}), family.particular);
        CHECK(os::combination(family.k1, family.k2, offset));
    }
    SUBCASE("kink, double rule") {
        const IntMatrix a{{2, 1, 1}};
        const auto family = solve_integral(a, make_vector({-4}));
        CHECK(os::combination(family.k1, family.k2, subtract(make_vector({1, 1, 1}), family.particular)));
    }
    SUBCASE("homogeneous right-hand side") {
        const auto family = solve_integral(single("4_1"), IntVector(4));
        CHECK(is_zero(family.particular));
    }
    SUBCASE("wrong length") {
        CHECK_THROWS_AS(solve_integral(single("3_1"), make_vector({1, 2})), DimensionMismatch);
    }
}

TEST_CASE("every family member solves the system") {
    std::mt19937_64 rng(8);
    for (auto name : {"3_1", "4_1", "5_2", "6_3", "example2_4"}) {
        const auto a = single(name);
        for (int trial = 0; trial < 20; ++trial) {
            const auto b = os::random_vector(rng, a.rows(), -99, 99);
            const auto family = solve_integral(a, b);
            const Integer alpha = static_cast<long>(rng() % 201) - 100, beta = static_cast<long>(rng() % 201) - 100;
            CHECK(is_zero(add(multiply(a, family.member(alpha, beta)), b)));
        }
    }
}

TEST_CASE("kernel_basis") {
    SUBCASE("trefoil lattice") {
        const auto k = kernel_basis(single("3_1"));
        CHECK(os::same_lattice(k.k1, k.k2, make_vector({-1, 0, 0, 1, 0}), make_vector({-2, 1, 1, 0, 1})));
    }
    SUBCASE("kernel solution of the kinked trefoil") {
        const auto k = kernel_basis(single("example2_4"));
        CHECK(os::combination(k.k1, k.k2, make_vector({1, -2, 1, 1, 0, 1})));
    }
    SUBCASE("small kernel vectors found by enumeration are integer combinations") {
        for (auto name : {"3_1", "4_1"}) {
            const auto a = single(name);
            const auto k = kernel_basis(a);
            const auto all = os::enumerate_box(a, IntVector(a.rows()), 1);
            CHECK(all.size() > 1);
            for (const auto& w : all) CHECK(os::combination(k.k1, k.k2, w));
        }
    }
    SUBCASE("random combinations stay in the kernel") {
        std::mt19937_64 rng(4);
        const auto a = build_matrix(catalog("6_2"), CountingRule::twice).entries;
        const auto k = kernel_basis(a);
        for (int t = 0; t < 20; ++t) {
            const Integer x = static_cast<long>(rng() % 2001) - 1000, y = static_cast<long>(rng() % 2001) - 1000;
            CHECK(is_zero(multiply(a, add(scale(x, k.k1), scale(y, k.k2)))));
        }
    }
}

TEST_CASE("solve_diophantine against enumeration") {
    CHECK_FALSE(solve_diophantine(IntMatrix{{2}}, make_vector({1})));
    const auto sol = solve_diophantine(IntMatrix{{2, 4}}, make_vector({6}));
    REQUIRE(sol);
    CHECK(multiply(IntMatrix{{2, 4}}, sol->particular) == make_vector({6}));
    CHECK(sol->kernel.size() == 1);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 2, cols = 2 + rng() % 2;
        const auto a = random_matrix(rng, rows, cols, 3);
        const auto target = os::random_vector(rng, rows, -4, 4);
        const auto brute = os::enumerate_box(a, target, 4);
        const auto found = solve_diophantine(a, target);
        if (!brute.empty()) CHECK(found);
        if (!found) continue;
        CHECK(multiply(a, found->particular) == target);
        for (const auto& k : found->kernel) CHECK(is_zero(multiply(a, k)));
    }
}

TEST_CASE("gauss_reduce keeps the lattice and reduces the basis") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        IntVector a = os::random_vector(rng, 5, -9, 9), b = os::random_vector(rng, 5, -9, 9);
        // skew the basis
        const Integer t = static_cast<long>(rng() % 41) - 20;
        b = add(b, scale(t, a));
        if (!os::combination(a, b, a)) continue;  // dependent pair
        const auto r = gauss_reduce(a, b);
        CHECK(os::same_lattice(r.k1, r.k2, a, b));
        Integer n1 = 0, n2 = 0, dot = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            n1 += r.k1[i] * r.k1[i];
            n2 += r.k2[i] * r.k2[i];
            dot += r.k1[i] * r.k2[i];
        }
        CHECK(n1 <= n2);
        CHECK(2 * abs(dot) <= n1);
    }
}

TEST_CASE("minimize_in_family") {
    SUBCASE("trefoil, L-infinity") {
        const auto a = single("3_1");
        const auto family = solve_integral(a, make_vector({-1, 0, 0}));
        const auto u = minimize_in_family(family, Norm::linf);
        CHECK(is_zero(add(multiply(a, u), make_vector({-1, 0, 0}))));
        // Oracle: search alpha, beta over [-3, 3] on the generating pair.
        Integer best = -1;
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) {
                const auto w = add(make_vector({-1, 1, 1, 0, 0}),
                                   add(scale(Integer(x), make_vector({-1, 0, 0, 1, 0})),
                                       scale(Integer(y), make_vector({-2, 1, 1, 0, 1}))));
                Integer n = 0;
                for (const auto& v : w) n = std::max(n, Integer(abs(v)));
                if (best < 0 || n < best) best = n;
            }
        Integer got = 0;
        for (const auto& v : u) got = std::max(got, Integer(abs(v)));
        CHECK(best == 1);
        CHECK(got == best);
    }
    SUBCASE("homogeneous family minimises to zero") {
        const auto family = solve_integral(single("5_1"), IntVector(5));
        CHECK(is_zero(minimize_in_family(family, Norm::l2)));
        CHECK(is_zero(minimize_in_family(family, Norm::linf)));
    }
    SUBCASE("deterministic and not worse than the particular solution") {
        const auto family = solve_integral(single("6_1"), make_vector({7, -3, 12, 0, 5, -8}));
        const auto u = minimize_in_family(family, Norm::l2);
        CHECK(u == minimize_in_family(family, Norm::l2));
        Integer nu = 0, np = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            nu += u[i] * u[i];
            np += family.particular[i] * family.particular[i];
        }
        CHECK(nu <= np);
    }
    SUBCASE("exhaustive box search confirms optimality") {
        std::mt19937_64 rng(23);
        for (auto name : {"d0", "3_1", "4_1"})
            for (auto rule : {CountingRule::single, CountingRule::twice})
                for (int trial = 0; trial < 3; ++trial) {
                    const auto a = build_matrix(catalog(name), rule).entries;
                    const auto b = os::random_vector(rng, a.rows(), -3, 3);
                    const auto family = solve_integral(a, b);
                    const auto target = negate(b);

                    const auto linf = minimize_in_family(family, Norm::linf);
                    long radius = 0;
                    for (const auto& v : linf) radius = std::max(radius, Integer(abs(v)).get_si());
                    if (radius > 0) CHECK(os::enumerate_box(a, target, static_cast<int>(radius - 1)).empty());

                    const auto l2 = minimize_in_family(family, Norm::l2);
                    Integer sq = 0;
                    for (const auto& v : l2) sq += v * v;
                    const int box = static_cast<int>(Integer(sqrt(sq)).get_si());
                    for (const auto& w : os::enumerate_box(a, target, box)) {
                        Integer s = 0;
                        for (const auto& v : w) s += v * v;
                        CHECK(s >= sq);
                    }
                }
    }
}

TEST_CASE("render_linear_form") {
    CHECK(render_linear_form(std::vector<Rational>{-1, 1, 1}, "b") == "-b1+b2+b3");
    CHECK(render_linear_form(std::vector<Rational>{2, 0}, "b") == "2b1");
    CHECK(render_linear_form(std::vector<Rational>{Rational(1, 2)}, "b") == "(1/2)b1");
    CHECK(render_linear_form(std::vector<Rational>{0, 0}, "b") == "0");
}

TEST_CASE("rational echelon forms reproduce the printed tables") {
    for (const auto& [name, rows] : tables::echelons()) {
        CAPTURE(name);
        const auto echelon = rref_rational(tables::single_rule().at(name));
        CHECK(echelon.render() == tables::joined(rows));
        CHECK(echelon.rank() == echelon.equations);
    }
}

TEST_CASE("rational echelon evaluation solves A u = b") {
    std::mt19937_64 rng(50);
    for (const auto& [name, a] : tables::single_rule()) {
        const auto echelon = rref_rational(a);
        for (int trial = 0; trial < 10; ++trial) {
            const auto b = os::random_vector(rng, a.rows(), -99, 99);
            const auto u = echelon.evaluate(b);
            REQUIRE(u);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                Rational sum = 0;
                for (std::size_t j = 0; j < a.cols(); ++j) sum += Rational(a(i, j)) * (*u)[j];
                CHECK(sum == Rational(b[i]));
            }
        }
    }
}

TEST_CASE("rational echelon edge cases") {
    const auto id = rref_rational(IntMatrix{{1, 0}, {0, 1}});
    CHECK(id.render() == "(1 0 | b1)\n(0 1 | b2)\n");
    const auto evaluated = id.evaluate(make_vector({0, 0}));
    REQUIRE(evaluated);
    CHECK(*evaluated == std::vector<Rational>{0, 0});

    const auto dependent = rref_rational(IntMatrix{{1}, {1}});
    CHECK(dependent.rank() == 1);
    CHECK_FALSE(dependent.evaluate(make_vector({1, 0})));
    CHECK(dependent.evaluate(make_vector({3, 3})));

    const auto halves = rref_rational(IntMatrix{{2, 0}});
    CHECK(halves.render() == "(1 0 | (1/2)b1)\n");
}
