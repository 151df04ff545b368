#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bplab/common.hpp"
#include "bplab/instance.hpp"
#include "bplab/simplex.hpp"

namespace bplab {

// One scenario's integer subproblem: maximize a linear objective over binary
// (y0, yi) subject to A0 y0 + Ai yi <= b_i and A0 y0 <= b_min, with optional
// 0/1 fixings on y0. Objective coefficients may be negative (pricing).
struct ScenarioProblem {
    int n = 0, m = 0;
    std::vector<double> objective_y0;  // n
    std::vector<double> objective_yi;  // n
    Matrix A0;                          // m x n
    Matrix Ai;                          // m x n
    std::vector<double> b_i;            // m
    std::vector<double> b_min;          // m
    std::map<int, int> fixings;         // on y0
    double constant = 0.0;              // added to the reported value
};

enum class IlpStatus { Optimal, Infeasible };

struct ScenarioSolution {
    IlpStatus status = IlpStatus::Infeasible;
    std::vector<int> y0, yi;
    double value = 0.0;
    long nodes = 0;
};

// Component-wise minimum of the cross-scenario RHS family: A0 y0 <= b(j) for
// every j collapses to A0 y0 <= min_j b(j).
inline std::vector<double> reduce_cross_constraints(
    const std::vector<std::vector<double>>& b_all) {
    require(!b_all.empty(), "reduce_cross_constraints: need s >= 1");
    std::vector<double> b_min = b_all[0];
    for (const auto& b : b_all)
        for (size_t r = 0; r < b_min.size(); ++r)
            b_min[r] = std::min(b_min[r], b[r]);
    return b_min;
}

inline ScenarioProblem make_scenario_problem(const Instance& inst, int i,
                                             const std::map<int, int>& fixings = {}) {
    ScenarioProblem p;
    p.n = inst.dims.n;
    p.m = inst.dims.m;
    p.objective_y0 = inst.c0;
    p.objective_yi = inst.c[i];
    p.A0 = inst.A0;
    p.Ai = inst.A[i];
    p.b_i = inst.rhs_row(i);
    std::vector<std::vector<double>> all;
    for (int j = 0; j < inst.dims.s; ++j) all.push_back(inst.rhs_row(j));
    p.b_min = reduce_cross_constraints(all);
    p.fixings = fixings;
    return p;
}

namespace detail {

// Depth-first branch and bound over the 2n binaries with LP bounds.
// Branches on the most fractional variable (ties lowest index), explores the
// 1-branch first. Among equal-value optima the lexicographically largest
// (y0, yi) wins; subtrees that cannot improve the value nor the lexicographic
// rank of the incumbent are pruned.
class ScenarioBnb {
public:
    ScenarioBnb(const ScenarioProblem& p, double tol, double prune_threshold)
        : p_(p), tol_(tol) {
        nv_ = 2 * p.n;
        lower_.assign(nv_, 0.0);
        upper_.assign(nv_, 1.0);
        for (const auto& [j, v] : p.fixings) {
            require(j >= 0 && j < p.n, "scenario fixing index out of range");
            require(v == 0 || v == 1, "scenario fixing value must be 0/1");
            lower_[j] = v;
            upper_[j] = v;
        }
        base_lp_.num_vars = nv_;
        base_lp_.objective.resize(nv_);
        for (int j = 0; j < p.n; ++j) {
            base_lp_.objective[j] = p.objective_y0[j];
            base_lp_.objective[p.n + j] = p.objective_yi[j];
        }
        for (int r = 0; r < p.m; ++r) {
            std::vector<double> row(nv_, 0.0);
            for (int j = 0; j < p.n; ++j) {
                row[j] = p.A0[r][j];
                row[p.n + j] = p.Ai[r][j];
            }
            base_lp_.add_row(std::move(row), p.b_i[r]);
        }
        for (int r = 0; r < p.m; ++r) {
            std::vector<double> row(nv_, 0.0);
            for (int j = 0; j < p.n; ++j) row[j] = p.A0[r][j];
            base_lp_.add_row(std::move(row), p.b_min[r]);
        }
        if (prune_threshold > -kInf) threshold_ = prune_threshold - p.constant;
    }

    ScenarioSolution run() {
        lb_ = lower_;
        ub_ = upper_;
        dive();
        ScenarioSolution sol;
        sol.nodes = nodes_;
        if (!has_incumbent_) {
            sol.status = IlpStatus::Infeasible;
            return sol;
        }
        sol.status = IlpStatus::Optimal;
        sol.value = best_value_ + p_.constant;
        sol.y0.assign(best_.begin(), best_.begin() + p_.n);
        sol.yi.assign(best_.begin() + p_.n, best_.end());
        return sol;
    }

private:
    // Lexicographic comparison of candidate vs incumbent, restricted to the
    // hypothetical best completion (free variables at 1).
    bool lex_possible_improvement() const {
        if (!has_incumbent_) return true;
        for (int j = 0; j < nv_; ++j) {
            int hi = ub_[j] >= 0.5 ? 1 : 0;  // best value j can still take
            if (hi > best_[j]) return true;
            if (lb_[j] >= 0.5 && best_[j] == 0) return true;
            // when forced below the incumbent at j, no lex win is possible
            if (hi < best_[j]) return false;
            if (lb_[j] >= 0.5 && best_[j] == 1) continue;
            if (hi == best_[j] && hi == 0) continue;
            // j still free while incumbent has 1: equality is achievable,
            // keep scanning
        }
        return false;
    }

    bool candidate_lex_larger(const std::vector<int>& cand) const {
        for (int j = 0; j < nv_; ++j) {
            if (cand[j] != best_[j]) return cand[j] > best_[j];
        }
        return false;
    }

    void offer(const std::vector<int>& cand, double value) {
        if (!has_incumbent_ || value > best_value_ + tie_tol_) {
            best_ = cand;
            best_value_ = value;
            has_incumbent_ = true;
        } else if (value >= best_value_ - tie_tol_ && candidate_lex_larger(cand)) {
            best_ = cand;
            best_value_ = std::max(best_value_, value);
        }
    }

    void dive() {
        ++nodes_;
        LpProblem lp = base_lp_;
        lp.lower = lb_;
        lp.upper = ub_;
        LpSolution rel = solve(lp, tols::feasibility);
        if (rel.status == LpStatus::Infeasible) return;
        contract(rel.status == LpStatus::Optimal,
                 "scenario LP relaxation must solve");
        if (has_incumbent_ && rel.value < best_value_ - tie_tol_) return;
        if (has_incumbent_ && rel.value <= best_value_ + tie_tol_ &&
            !lex_possible_improvement())
            return;

        // integral?
        int branch_var = -1;
        double most_frac = 0.0;
        for (int j = 0; j < nv_; ++j) {
            double v = rel.x[j];
            double frac = std::min(v, 1.0 - v);
            if (frac > int_tol_ && frac > most_frac + 1e-12) {
                most_frac = frac;
                branch_var = j;
            }
        }
        if (branch_var < 0) {
            std::vector<int> cand(nv_);
            double value = 0.0;
            for (int j = 0; j < nv_; ++j) {
                cand[j] = rel.x[j] >= 0.5 ? 1 : 0;
                value += base_lp_.objective[j] * cand[j];
            }
            offer(cand, value);
            // equal-value lexicographic improvements may hide elsewhere in
            // this node; branch on the first free variable to keep searching
            for (int j = 0; j < nv_; ++j)
                if (ub_[j] - lb_[j] > 0.5) {
                    branch_var = j;
                    break;
                }
            if (branch_var < 0) return;
            if (!lex_possible_improvement() &&
                rel.value <= best_value_ + tie_tol_)
                return;
        }

        // 1-branch first
        double save_l = lb_[branch_var], save_u = ub_[branch_var];
        lb_[branch_var] = 1.0;
        ub_[branch_var] = 1.0;
        dive();
        lb_[branch_var] = 0.0;
        ub_[branch_var] = 0.0;
        dive();
        lb_[branch_var] = save_l;
        ub_[branch_var] = save_u;
    }

    const ScenarioProblem& p_;
    double tol_;
    double tie_tol_ = 1e-9;
    double int_tol_ = 1e-7;
    int nv_ = 0;
    LpProblem base_lp_;
    std::vector<double> lower_, upper_, lb_, ub_;
    std::vector<int> best_;
    double best_value_ = -kInf;
    bool has_incumbent_ = false;
    long nodes_ = 0;
};

}  // namespace detail

// Exact solve. `prune_threshold`, when finite, discards any solution with
// value <= threshold and reports Infeasible instead; the pricing loop uses it
// to certify that no column beats the current duals without a full search.
inline ScenarioSolution solve_scenario(const ScenarioProblem& p,
                                       double tol = tols::feasibility,
                                       double prune_threshold = -kInf) {
    detail::ScenarioBnb bnb(p, tol, prune_threshold);
    return bnb.run();
}

}  // namespace bplab
