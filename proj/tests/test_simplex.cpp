#include <catch2/catch_amalgamated.hpp>

#include "bplab/instance.hpp"
#include "bplab/rng.hpp"
#include "bplab/simplex.hpp"
#include "oracles.hpp"

using namespace bplab;

namespace {

Instance tiny_15_instance() {
    Instance inst;
    inst.dims = {1, 1, 1};
    inst.c0 = {1.0};
    inst.c = {{1.0}};
    inst.A0 = {{1.0}};
    inst.A = {{{1.0}}};
    inst.beta = {{0.75}};  // b = 1.5
    return inst;
}

LpProblem random_lp(Rng& rng, int nvars, int nrows, bool neg_obj = false) {
    LpProblem p;
    p.num_vars = nvars;
    p.objective.resize(nvars);
    for (auto& v : p.objective)
        v = neg_obj ? rng.uniform() * 2.0 - 1.0 : rng.uniform();
    p.lower.assign(nvars, 0.0);
    p.upper.assign(nvars, 1.0);
    for (int r = 0; r < nrows; ++r) {
        std::vector<double> row(nvars);
        for (auto& v : row) v = rng.uniform();
        p.add_row(std::move(row), 0.2 + rng.uniform() * nvars * 0.5);
    }
    return p;
}

void check_optimal_invariants(const LpProblem& p, const LpSolution& sol,
                              double tol = 1e-7) {
    REQUIRE(sol.status == LpStatus::Optimal);
    // primal feasibility
    for (int j = 0; j < p.num_vars; ++j) {
        REQUIRE(sol.x[j] >= p.lower[j] - tol);
        REQUIRE(sol.x[j] <= p.upper[j] + tol);
    }
    for (int r = 0; r < p.num_rows; ++r) {
        double lhs = 0.0;
        for (int j = 0; j < p.num_vars; ++j) lhs += p.rows[r][j] * sol.x[j];
        REQUIRE(lhs <= p.rhs[r] + tol);
        REQUIRE(sol.mu[r] >= -tol);
        // complementary slackness on rows
        REQUIRE(sol.mu[r] * (p.rhs[r] - lhs) <= 1e-6);
    }
    // strong duality
    REQUIRE(std::abs(sol.value - sol.dual_value) <=
            1e-7 * (1.0 + std::abs(sol.value)));
    // reduced-cost sign structure on variables
    for (int j = 0; j < p.num_vars; ++j) {
        double red = p.objective[j];
        for (int r = 0; r < p.num_rows; ++r) red -= sol.mu[r] * p.rows[r][j];
        if (red > tol) REQUIRE(sol.x[j] >= p.upper[j] - tol);
        if (red < -tol) REQUIRE(sol.x[j] <= p.lower[j] + tol);
    }
}

}  // namespace

TEST_CASE("hand-checkable single-block relaxation") {
    Instance inst = tiny_15_instance();
    LpProblem p = build_relaxation(inst);
    LpSolution sol = solve(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    REQUIRE(sol.value == Catch::Approx(1.5).margin(1e-9));
    REQUIRE(sol.x[0] == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(sol.x[1] == Catch::Approx(0.5).margin(1e-9));
    REQUIRE(sol.mu[0] == Catch::Approx(1.0).margin(1e-9));
    check_optimal_invariants(p, sol);

    auto frac = count_fractional_per_block(sol, inst.dims);
    REQUIRE(frac == std::vector<int>{0, 1});
}

TEST_CASE("zero objective solves to zero") {
    Instance inst = generate({4, 2, 2}, BetaSpec::fixed(0.3), 11);
    for (auto& v : inst.c0) v = 0.0;
    for (auto& ci : inst.c)
        for (auto& v : ci) v = 0.0;
    LpSolution sol = solve(build_relaxation(inst));
    REQUIRE(sol.status == LpStatus::Optimal);
    REQUIRE(sol.value == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("build_relaxation wiring") {
    Instance inst = generate({3, 2, 2}, BetaSpec::fixed(0.45), 17);
    LpProblem p0 = build_relaxation(inst);
    REQUIRE(p0.rhs[0] == Catch::Approx(inst.rhs(0, 0)).margin(0));
    REQUIRE(p0.num_rows == inst.dims.m * inst.dims.s);
    REQUIRE(p0.num_vars == inst.dims.n * (inst.dims.s + 1));

    LpProblem p1 = build_relaxation(inst, 0.25);
    for (int i = 0; i < inst.dims.s; ++i)
        for (int r = 0; r < inst.dims.m; ++r)
            REQUIRE(p1.rhs[i * inst.dims.m + r] ==
                    Catch::Approx(inst.rhs(i, r) - 0.25).margin(1e-15));

    LpProblem p2 = build_relaxation(inst, 0.0, {{1, 1}});
    REQUIRE(p2.lower[1] == 1.0);
    REQUIRE(p2.upper[1] == 1.0);

    // objective layout: s*c0 then per-scenario costs
    REQUIRE(p0.objective[0] == Catch::Approx(inst.dims.s * inst.c0[0]));
    REQUIRE(p0.objective[inst.dims.n] == Catch::Approx(inst.c[0][0]));
}

TEST_CASE("negative rhs is flagged and may be infeasible") {
    Instance inst = tiny_15_instance();
    LpProblem p = build_relaxation(inst, 2.0);  // rhs = -0.5
    REQUIRE_FALSE(p.rhs_nonneg);
    LpSolution sol = solve(p);
    REQUIRE(sol.status == LpStatus::Infeasible);
}

TEST_CASE("matches vertex enumeration on random small LPs") {
    Rng rng(42);
    int solved = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int nvars = 2 + static_cast<int>(rng.below(5));  // up to 6
        int nrows = 1 + static_cast<int>(rng.below(4));
        LpProblem p = random_lp(rng, nvars, nrows, trial % 2 == 1);
        LpSolution sol = solve(p);
        auto expect = oracle::lp_vertex_max(p);
        REQUIRE(expect.has_value());
        REQUIRE(sol.status == LpStatus::Optimal);
        REQUIRE(sol.value == Catch::Approx(*expect).margin(1e-7));
        check_optimal_invariants(p, sol);
        ++solved;
    }
    REQUIRE(solved == 120);
}

TEST_CASE("handles fixed variables and negative rhs rows") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int nvars = 3 + static_cast<int>(rng.below(3));
        LpProblem p = random_lp(rng, nvars, 2, true);
        // fix one variable at 1 and add an >=-style row encoded as <=
        p.lower[0] = 1.0;
        p.upper[0] = 1.0;
        std::vector<double> row(nvars, 0.0);
        for (auto& v : row) v = -rng.uniform();
        p.add_row(std::move(row), -0.1);  // forces some mass away from zero
        LpSolution sol = solve(p);
        auto expect = oracle::lp_vertex_max(p);
        if (expect.has_value()) {
            REQUIRE(sol.status == LpStatus::Optimal);
            REQUIRE(sol.value == Catch::Approx(*expect).margin(1e-7));
            REQUIRE(sol.x[0] == Catch::Approx(1.0).margin(1e-9));
        } else {
            REQUIRE(sol.status == LpStatus::Infeasible);
        }
    }
}

TEST_CASE("value is monotone in the rhs") {
    Rng rng(2025);
    for (int trial = 0; trial < 40; ++trial) {
        Dims d{3 + static_cast<int>(rng.below(4)), 2, 2};
        Instance inst = generate(d, BetaSpec::fixed(0.45), rng.next_u64());
        double shift = 0.1 + rng.uniform();
        LpSolution at_b = solve(build_relaxation(inst));
        LpSolution shifted = solve(build_relaxation(inst, shift));
        REQUIRE(at_b.status == LpStatus::Optimal);
        REQUIRE(shifted.status == LpStatus::Optimal);
        REQUIRE(shifted.value <= at_b.value + 1e-7);
    }
}

TEST_CASE("per-block fractional count is at most m on random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        Dims d{4 + static_cast<int>(rng.below(8)), 2,
               1 + static_cast<int>(rng.below(3))};
        Instance inst = generate(d, BetaSpec::uniform(), rng.next_u64());
        LpSolution sol = solve(build_relaxation(inst));
        REQUIRE(sol.status == LpStatus::Optimal);
        auto counts = count_fractional_per_block(sol, d);
        for (int c : counts) REQUIRE(c <= d.m);
        check_optimal_invariants(build_relaxation(inst), sol);
    }
}

TEST_CASE("count_fractional_per_block rejects non-basic input") {
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.basic = false;
    REQUIRE_THROWS_AS(count_fractional_per_block(sol, {1, 1, 1}),
                      ContractError);
}

TEST_CASE("integral solutions count zero fractionals") {
    Instance inst = tiny_15_instance();
    inst.beta = {{0.45}};  // b = 0.9 < 1: only x0 or x1 fits
    LpSolution sol = solve(build_relaxation(inst));
    REQUIRE(sol.status == LpStatus::Optimal);
    // x0 = 0.9 fractional? value max at x0 + x1 subject to x0 + x1 <= 0.9
    // either way the split is a single fractional in one block
    auto counts = count_fractional_per_block(sol, inst.dims);
    int total = counts[0] + counts[1];
    REQUIRE(total <= 1);
}
