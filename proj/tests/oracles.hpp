#pragma once

// Brute-force reference implementations used only by the test suites. They
// deliberately avoid the library's solver code paths.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "bplab/instance.hpp"
#include "bplab/simplex.hpp"

namespace oracle {

inline double naive_objective(const bplab::Instance& inst,
                              const bplab::BinarySolution& sol) {
    double v = 0.0;
    for (size_t j = 0; j < sol.x0.size(); ++j)
        for (int i = 0; i < inst.dims.s; ++i) v += inst.c0[j] * sol.x0[j];
    for (int i = 0; i < inst.dims.s; ++i)
        for (int j = 0; j < inst.dims.n; ++j)
            if (sol.x[i][j]) v += inst.c[i][j];
    return v;
}

inline bool naive_feasible(const bplab::Instance& inst,
                           const bplab::BinarySolution& sol, double tol) {
    for (int i = 0; i < inst.dims.s; ++i)
        for (int r = 0; r < inst.dims.m; ++r) {
            double lhs = 0.0;
            for (int j = 0; j < inst.dims.n; ++j)
                lhs += inst.A0[r][j] * sol.x0[j] + inst.A[i][r][j] * sol.x[i][j];
            if (lhs > 2.0 * inst.dims.n * inst.beta[i][r] + tol) return false;
        }
    return true;
}

// Solves a small square system by Gaussian elimination; returns false if
// near-singular.
inline bool solve_square(std::vector<std::vector<double>> M,
                         std::vector<double> rhs, std::vector<double>& out) {
    const int k = static_cast<int>(rhs.size());
    for (int c = 0; c < k; ++c) {
        int p = -1;
        double best = 1e-9;
        for (int r = c; r < k; ++r)
            if (std::abs(M[r][c]) > best) {
                best = std::abs(M[r][c]);
                p = r;
            }
        if (p < 0) return false;
        std::swap(M[c], M[p]);
        std::swap(rhs[c], rhs[p]);
        for (int r = 0; r < k; ++r) {
            if (r == c) continue;
            double f = M[r][c] / M[c][c];
            if (f == 0.0) continue;
            for (int j = c; j < k; ++j) M[r][j] -= f * M[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    out.resize(k);
    for (int c = 0; c < k; ++c) out[c] = rhs[c] / M[c][c];
    return true;
}

// Exhaustive vertex enumeration for tiny LPs (num_vars <= ~8): every choice
// of free variables, binding rows, and bound assignment for the rest.
inline std::optional<double> lp_vertex_max(const bplab::LpProblem& p,
                                           double tol = 1e-9) {
    const int n = p.num_vars, m = p.num_rows;
    double best = -std::numeric_limits<double>::infinity();
    bool found = false;

    auto feasible = [&](const std::vector<double>& x) {
        for (int j = 0; j < n; ++j)
            if (x[j] < p.lower[j] - tol || x[j] > p.upper[j] + tol) return false;
        for (int r = 0; r < m; ++r) {
            double lhs = 0.0;
            for (int j = 0; j < n; ++j) lhs += p.rows[r][j] * x[j];
            if (lhs > p.rhs[r] + tol) return false;
        }
        return true;
    };
    auto consider = [&](const std::vector<double>& x) {
        if (!feasible(x)) return;
        double v = 0.0;
        for (int j = 0; j < n; ++j) v += p.objective[j] * x[j];
        if (!found || v > best) best = v;
        found = true;
    };

    // iterate over subsets S of free variables
    for (int smask = 0; smask < (1 << n); ++smask) {
        std::vector<int> free_vars;
        for (int j = 0; j < n; ++j)
            if (smask & (1 << j)) free_vars.push_back(j);
        const int k = static_cast<int>(free_vars.size());
        if (k > m) continue;

        // choose k binding rows
        std::vector<int> rows_idx(k);
        std::vector<int> choose(k);
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == k) {
                // iterate over bound assignments of the non-free variables
                const int nb = n - k;
                std::vector<int> fixed;
                for (int j = 0; j < n; ++j)
                    if (!(smask & (1 << j))) fixed.push_back(j);
                for (int bmask = 0; bmask < (1 << nb); ++bmask) {
                    std::vector<double> x(n, 0.0);
                    for (int t = 0; t < nb; ++t)
                        x[fixed[t]] = (bmask & (1 << t)) ? p.upper[fixed[t]]
                                                         : p.lower[fixed[t]];
                    if (k == 0) {
                        consider(x);
                        continue;
                    }
                    std::vector<std::vector<double>> M(k,
                                                       std::vector<double>(k));
                    std::vector<double> rhs(k);
                    for (int a = 0; a < k; ++a) {
                        int r = choose[a];
                        double b = p.rhs[r];
                        for (int t = 0; t < nb; ++t)
                            b -= p.rows[r][fixed[t]] * x[fixed[t]];
                        rhs[a] = b;
                        for (int bcol = 0; bcol < k; ++bcol)
                            M[a][bcol] = p.rows[r][free_vars[bcol]];
                    }
                    std::vector<double> xs;
                    if (!solve_square(M, rhs, xs)) continue;
                    for (int a = 0; a < k; ++a) x[free_vars[a]] = xs[a];
                    consider(x);
                }
                return;
            }
            for (int r = start; r < m; ++r) {
                choose[pos] = r;
                self(self, pos + 1, r + 1);
            }
        };
        rec(rec, 0, 0);
    }
    if (!found) return std::nullopt;
    return best;
}

}  // namespace oracle
