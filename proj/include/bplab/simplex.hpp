#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <vector>

#include "bplab/common.hpp"
#include "bplab/instance.hpp"

namespace bplab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };

inline const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "Optimal";
        case LpStatus::Infeasible: return "Infeasible";
        case LpStatus::Unbounded: return "Unbounded";
        case LpStatus::IterLimit: return "IterLimit";
    }
    return "?";
}

// Maximization over box-bounded variables subject to "<=" rows.
struct LpProblem {
    int num_vars = 0;
    int num_rows = 0;
    std::vector<double> objective;          // num_vars
    std::vector<std::vector<double>> rows;  // num_rows x num_vars
    std::vector<double> rhs;                // num_rows
    std::vector<double> lower, upper;       // num_vars
    bool rhs_nonneg = true;                 // informational flag

    void add_row(std::vector<double> coeffs, double b) {
        rows.push_back(std::move(coeffs));
        rhs.push_back(b);
        if (b < 0.0) rhs_nonneg = false;
        num_rows = static_cast<int>(rows.size());
    }

    void check() const {
        require(num_vars >= 1, "LpProblem: no variables");
        require(static_cast<int>(objective.size()) == num_vars &&
                    static_cast<int>(lower.size()) == num_vars &&
                    static_cast<int>(upper.size()) == num_vars,
                "LpProblem: inconsistent vector sizes");
        for (int j = 0; j < num_vars; ++j)
            require(lower[j] <= upper[j] + 1e-12, "LpProblem: lower > upper");
        for (const auto& r : rows)
            require(static_cast<int>(r.size()) == num_vars,
                    "LpProblem: row width mismatch");
    }
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    double dual_value = 0.0;
    std::vector<double> x;    // num_vars
    std::vector<double> mu;   // num_rows, >= 0 at Optimal
    std::vector<int> basis;   // basic variable indices (slack j = num_vars + j)
    bool basic = false;
    long pivots = 0;
    int degenerate_basics = 0;  // basic variables sitting on a bound
};

// Dense tableau primal simplex for bounded variables. Dantzig pricing with a
// switch to Bland's rule after 3*(rows+vars) pivots; pivot tolerance 1e-10;
// ratio-test ties broken by lowest variable index. Supports appending
// columns and re-solving from the current basis, which is what the column
// generation loop needs.
class SimplexSolver {
public:
    explicit SimplexSolver(double feas_tol = tols::feasibility)
        : feas_tol_(feas_tol) {}

    void load(const LpProblem& p) {
        p.check();
        nv_ = p.num_vars;
        nr_ = p.num_rows;
        obj_ = p.objective;
        rhs_ = p.rhs;
        ncols_ = nv_ + nr_;
        lb_ = p.lower;
        ub_ = p.upper;
        lb_.resize(ncols_, 0.0);
        ub_.resize(ncols_, kInf);
        raw_.assign(static_cast<size_t>(nr_) * ncols_, 0.0);
        for (int r = 0; r < nr_; ++r) {
            double* row = raw_row(r);
            for (int j = 0; j < nv_; ++j) row[j] = p.rows[r][j];
            row[nv_ + r] = 1.0;
        }
        nart_ = 0;
        loaded_ = true;
        solved_ = false;
    }

    LpStatus solve(long iter_limit = 0) {
        contract(loaded_, "SimplexSolver: no problem loaded");
        start_from_scratch();
        return run(iter_limit);
    }

    // Appends columns (objective coefficient, dense row entries, bounds) and
    // re-optimizes from the current basis. Only valid after an Optimal solve.
    LpStatus add_columns_and_resolve(const std::vector<double>& cols_obj,
                                     const std::vector<std::vector<double>>& cols,
                                     long iter_limit = 0) {
        contract(solved_ && status_ == LpStatus::Optimal,
                 "add_columns_and_resolve requires a previous Optimal solve");
        int added = static_cast<int>(cols.size());
        if (added == 0) return status_;
        int old_ncols = ncols_;
        int new_nv = nv_ + added;
        int new_ncols = ncols_ + added;

        // Rebuild the raw matrix with the new structural columns inserted
        // before the slack/artificial block so variable indices stay
        // var-then-slack ordered.
        std::vector<double> raw2(static_cast<size_t>(nr_) * new_ncols, 0.0);
        for (int r = 0; r < nr_; ++r) {
            const double* src = raw_row(r);
            double* dst = &raw2[static_cast<size_t>(r) * new_ncols];
            std::copy(src, src + nv_, dst);
            for (int k = 0; k < added; ++k) dst[nv_ + k] = cols[k][r];
            std::copy(src + nv_, src + ncols_, dst + nv_ + added);
        }
        auto shift = [&](int j) { return j < nv_ ? j : j + added; };
        for (int r = 0; r < nr_; ++r) basis_[r] = shift(basis_[r]);

        std::vector<State> st2(new_ncols, State::AtLower);
        std::vector<double> lb2(new_ncols), ub2(new_ncols), obj2(new_ncols, 0.0);
        for (int j = 0; j < old_ncols; ++j) {
            st2[shift(j)] = state_[j];
            lb2[shift(j)] = lb_[j];
            ub2[shift(j)] = ub_[j];
        }
        for (int k = 0; k < added; ++k) {
            lb2[nv_ + k] = 0.0;
            ub2[nv_ + k] = kInf;
            st2[nv_ + k] = State::AtLower;
        }
        for (int j = 0; j < nv_; ++j) obj2[j] = obj_[j];
        for (int k = 0; k < added; ++k) obj2[nv_ + k] = cols_obj[k];

        raw_.swap(raw2);
        state_.swap(st2);
        lb_.swap(lb2);
        ub_.swap(ub2);
        nv_ = new_nv;
        ncols_ = new_ncols;
        obj_.assign(obj2.begin(), obj2.begin() + nv_);
        nart_ = 0;  // artificials were dropped when the matrix was rebuilt

        rebuild_tableau();
        phase_ = 2;
        final_checked_ = false;
        set_phase_costs();
        return run(iter_limit);
    }

    // Extracts the public solution. `problem` must be the problem that was
    // loaded (plus any appended columns).
    LpSolution extract(int num_vars, int num_rows) const {
        LpSolution sol;
        sol.status = status_;
        sol.pivots = total_pivots_;
        if (status_ != LpStatus::Optimal && status_ != LpStatus::IterLimit)
            return sol;
        sol.x.assign(num_vars, 0.0);
        for (int j = 0; j < num_vars && j < nv_; ++j) sol.x[j] = var_value(j);
        sol.mu.assign(num_rows, 0.0);
        for (int r = 0; r < num_rows; ++r) {
            double m = -dual_[nv_ + r];
            sol.mu[r] = (m > -1e-13 && m < 0.0) ? 0.0 : m;
        }
        sol.basis.assign(basis_.begin(), basis_.end());
        sol.basic = true;
        double v = 0.0;
        for (int j = 0; j < num_vars && j < nv_; ++j) v += obj_[j] * sol.x[j];
        sol.value = v;
        // Dual objective: mu.b plus bound contributions of the reduced costs.
        double dv = 0.0;
        for (int r = 0; r < num_rows; ++r) dv += sol.mu[r] * rhs_[r];
        for (int j = 0; j < num_vars && j < nv_; ++j) {
            double d = dual_[j];
            if (state_[j] == State::Basic) continue;
            if (d > 0.0)
                dv += d * ub_[j];
            else
                dv += d * lb_[j];
        }
        sol.dual_value = dv;
        for (int r = 0; r < nr_; ++r) {
            int b = basis_[r];
            if (xb_[r] <= lb_[b] + feas_tol_ ||
                (ub_[b] < kInf && xb_[r] >= ub_[b] - feas_tol_))
                ++sol.degenerate_basics;
        }
        return sol;
    }

    double var_value(int j) const {
        if (state_[j] == State::Basic) {
            for (int r = 0; r < nr_; ++r)
                if (basis_[r] == j) return xb_[r];
            return 0.0;
        }
        return state_[j] == State::AtUpper ? ub_[j] : lb_[j];
    }

    double objective_value() const {
        double v = 0.0;
        for (int j = 0; j < nv_; ++j) v += obj_[j] * var_value(j);
        return v;
    }

    LpStatus status() const { return status_; }

private:
    enum class State : unsigned char { AtLower, AtUpper, Basic };

    double* raw_row(int r) { return &raw_[static_cast<size_t>(r) * ncols_]; }
    const double* raw_row(int r) const {
        return &raw_[static_cast<size_t>(r) * ncols_];
    }
    double* tab_row(int r) { return &tab_[static_cast<size_t>(r) * ncols_]; }
    const double* tab_row(int r) const {
        return &tab_[static_cast<size_t>(r) * ncols_];
    }

    void start_from_scratch() {
        state_.assign(ncols_, State::AtLower);
        basis_.resize(nr_);
        xb_.assign(nr_, 0.0);
        // Nonbasic structurals start at their lower bound, slacks basic.
        for (int r = 0; r < nr_; ++r) basis_[r] = nv_ + r;
        for (int r = 0; r < nr_; ++r) {
            state_[nv_ + r] = State::Basic;
            double v = rhs_[r];
            const double* row = raw_row(r);
            for (int j = 0; j < nv_; ++j) v -= row[j] * lb_[j];
            xb_[r] = v;
        }
        tab_ = raw_;
        nart_ = 0;

        // Rows whose slack starts negative get an artificial variable; the
        // row is negated so the basis stays an identity.
        std::vector<int> bad;
        for (int r = 0; r < nr_; ++r)
            if (xb_[r] < -feas_tol_) bad.push_back(r);
        if (!bad.empty()) {
            nart_ = static_cast<int>(bad.size());
            int total = ncols_ + nart_;
            std::vector<double> raw2(static_cast<size_t>(nr_) * total, 0.0);
            std::vector<double> tab2(static_cast<size_t>(nr_) * total, 0.0);
            for (int r = 0; r < nr_; ++r) {
                std::copy(raw_row(r), raw_row(r) + ncols_,
                          &raw2[static_cast<size_t>(r) * total]);
                std::copy(tab_row(r), tab_row(r) + ncols_,
                          &tab2[static_cast<size_t>(r) * total]);
            }
            for (int k = 0; k < nart_; ++k) {
                int r = bad[k];
                raw2[static_cast<size_t>(r) * total + ncols_ + k] = -1.0;
                for (int j = 0; j < total; ++j)
                    tab2[static_cast<size_t>(r) * total + j] =
                        -raw2[static_cast<size_t>(r) * total + j];
                // after negation the artificial column is +e_r
            }
            int old_ncols = ncols_;
            ncols_ = total;
            raw_.swap(raw2);
            tab_.swap(tab2);
            lb_.resize(ncols_, 0.0);
            ub_.resize(ncols_, kInf);
            state_.resize(ncols_, State::AtLower);
            for (int k = 0; k < nart_; ++k) {
                int r = bad[k];
                int aj = old_ncols + k;
                state_[nv_ + r] = State::AtLower;  // slack leaves the basis
                state_[aj] = State::Basic;
                basis_[r] = aj;
                xb_[r] = -xb_[r];
            }
            phase_ = 1;
        } else {
            phase_ = 2;
        }
        set_phase_costs();
        total_pivots_ = 0;
        solved_ = false;
        final_checked_ = false;
    }

    void set_phase_costs() {
        cost_.assign(ncols_, 0.0);
        if (phase_ == 1) {
            for (int k = 0; k < nart_; ++k) cost_[ncols_ - nart_ + k] = -1.0;
        } else {
            for (int j = 0; j < nv_; ++j) cost_[j] = obj_[j];
        }
        rebuild_duals();
    }

    // Reduced costs d_j = c_j - y.A_j from the current tableau: eliminate the
    // basic entries of the cost row.
    void rebuild_duals() {
        dual_ = cost_;
        for (int r = 0; r < nr_; ++r) {
            double cb = cost_[basis_[r]];
            if (cb == 0.0) continue;
            const double* row = tab_row(r);
            for (int j = 0; j < ncols_; ++j) dual_[j] -= cb * row[j];
        }
        for (int r = 0; r < nr_; ++r) dual_[basis_[r]] = 0.0;
    }

    // Rebuilds tableau rows from the raw matrix by Gauss-Jordan on the basic
    // columns, then refreshes basic values and reduced costs. Used for warm
    // starts and periodic accuracy refreshes. The row hosting each basic
    // variable may be reassigned here; basis_ is updated to match.
    void rebuild_tableau() {
        tab_ = raw_;
        const std::vector<int> vars = basis_;
        std::vector<char> row_used(nr_, 0);
        std::vector<int> new_basis(nr_, -1);
        for (int k = 0; k < nr_; ++k) {
            int bj = vars[k];
            int pr = -1;
            double best = 0.0;
            for (int i = 0; i < nr_; ++i) {
                if (row_used[i]) continue;
                double v = std::abs(tab_row(i)[bj]);
                if (v > best) {
                    best = v;
                    pr = i;
                }
            }
            contract(pr >= 0 && best > 1e-12, "rebuild_tableau: singular basis");
            double inv = 1.0 / tab_row(pr)[bj];
            double* prow = tab_row(pr);
            for (int j = 0; j < ncols_; ++j) prow[j] *= inv;
            prow[bj] = 1.0;
            for (int i = 0; i < nr_; ++i) {
                if (i == pr) continue;
                double f = tab_row(i)[bj];
                if (f == 0.0) continue;
                double* irow = tab_row(i);
                for (int j = 0; j < ncols_; ++j) irow[j] -= f * prow[j];
                irow[bj] = 0.0;
            }
            row_used[pr] = 1;
            new_basis[pr] = bj;
        }
        basis_ = new_basis;
        refresh_basic_values();
        rebuild_duals();
    }

    // xb solves B xb = b - (nonbasic bound contributions), recomputed from
    // the raw data for accuracy.
    void refresh_basic_values() {
        std::vector<double> rb(nr_);
        for (int r = 0; r < nr_; ++r) {
            double v = rhs_[r];
            const double* row = raw_row(r);
            for (int j = 0; j < ncols_; ++j) {
                if (state_[j] == State::Basic) continue;
                double xv = state_[j] == State::AtUpper ? ub_[j] : lb_[j];
                if (xv != 0.0) v -= row[j] * xv;
            }
            rb[r] = v;
        }
        solve_basis_system(rb);
    }

    // Solves B * xb = rb with a fresh dense LU of the basis columns.
    void solve_basis_system(const std::vector<double>& rb) {
        int n = nr_;
        std::vector<double> B(static_cast<size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                B[static_cast<size_t>(r) * n + c] = raw_row(r)[basis_[c]];
        std::vector<int> perm(n);
        std::vector<double> w = rb;
        // LU with partial pivoting, in place
        for (int k = 0; k < n; ++k) {
            int p = k;
            double best = std::abs(B[static_cast<size_t>(k) * n + k]);
            for (int i = k + 1; i < n; ++i) {
                double v = std::abs(B[static_cast<size_t>(i) * n + k]);
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            contract(best > 1e-13, "solve_basis_system: singular basis");
            if (p != k) {
                for (int j = 0; j < n; ++j)
                    std::swap(B[static_cast<size_t>(k) * n + j],
                              B[static_cast<size_t>(p) * n + j]);
                std::swap(w[k], w[p]);
            }
            double inv = 1.0 / B[static_cast<size_t>(k) * n + k];
            for (int i = k + 1; i < n; ++i) {
                double f = B[static_cast<size_t>(i) * n + k] * inv;
                if (f == 0.0) continue;
                B[static_cast<size_t>(i) * n + k] = f;
                for (int j = k + 1; j < n; ++j)
                    B[static_cast<size_t>(i) * n + j] -=
                        f * B[static_cast<size_t>(k) * n + j];
                w[i] -= f * w[k];
            }
        }
        for (int i = n - 1; i >= 0; --i) {
            double v = w[i];
            for (int j = i + 1; j < n; ++j)
                v -= B[static_cast<size_t>(i) * n + j] * xb_[j];
            xb_[i] = v / B[static_cast<size_t>(i) * n + i];
        }
    }

    bool entering_eligible(int j, double& score, int& dir) const {
        if (state_[j] == State::Basic) return false;
        if (ub_[j] - lb_[j] < 1e-14) return false;  // fixed variables
        double d = dual_[j];
        if (state_[j] == State::AtLower && d > opt_tol_) {
            score = d;
            dir = +1;
            return true;
        }
        if (state_[j] == State::AtUpper && d < -opt_tol_) {
            score = -d;
            dir = -1;
            return true;
        }
        return false;
    }

    LpStatus run(long iter_limit) {
        if (iter_limit <= 0)
            iter_limit = 20000 + 200L * (nr_ + ncols_);
        long bland_after = 3L * (nr_ + nv_);
        long pivots_this_run = 0;
        long since_refresh = 0;

        while (true) {
            bool bland = pivots_this_run > bland_after;
            int enter = -1, dir = 0;
            double best_score = 0.0;
            for (int j = 0; j < ncols_; ++j) {
                double score;
                int d;
                if (!entering_eligible(j, score, d)) continue;
                if (bland) {
                    enter = j;
                    dir = d;
                    break;
                }
                if (score > best_score + 1e-15) {
                    best_score = score;
                    enter = j;
                    dir = d;
                }
            }
            if (enter < 0) {
                // Claimed optimal for the current phase: refresh the tableau
                // from the raw data and re-verify once before accepting.
                if (!final_checked_) {
                    rebuild_tableau();
                    final_checked_ = true;
                    continue;
                }
                final_checked_ = false;
                if (phase_ == 1) {
                    double infeas = -phase1_value();
                    if (infeas > feas_tol_ * 10.0) {
                        status_ = LpStatus::Infeasible;
                        solved_ = true;
                        return status_;
                    }
                    freeze_artificials();
                    phase_ = 2;
                    set_phase_costs();
                    continue;
                }
                status_ = LpStatus::Optimal;
                solved_ = true;
                return status_;
            }
            final_checked_ = false;

            if (!pivot(enter, dir)) {
                if (phase_ == 1) {
                    // Phase-1 objective is bounded; an unbounded ray here can
                    // only be numerical noise.
                    status_ = LpStatus::Infeasible;
                } else {
                    status_ = LpStatus::Unbounded;
                }
                solved_ = true;
                return status_;
            }
            ++pivots_this_run;
            ++total_pivots_;
            ++since_refresh;
            if (since_refresh >= 500) {
                rebuild_tableau();
                since_refresh = 0;
            }
            if (pivots_this_run > iter_limit) {
                status_ = LpStatus::IterLimit;
                solved_ = true;
                return status_;
            }
        }
    }

    double phase1_value() const {
        double v = 0.0;
        for (int r = 0; r < nr_; ++r)
            if (basis_[r] >= ncols_ - nart_ && cost_[basis_[r]] != 0.0)
                v -= xb_[r];
        // nonbasic artificials sit at 0
        return v;
    }

    void freeze_artificials() {
        for (int k = 0; k < nart_; ++k) {
            int j = ncols_ - nart_ + k;
            ub_[j] = 0.0;
            // basic artificials stuck at ~0 are harmless; clamp their value
            for (int r = 0; r < nr_; ++r)
                if (basis_[r] == j && std::abs(xb_[r]) <= feas_tol_) xb_[r] = 0.0;
        }
    }

    // One ratio-test + pivot step. Returns false on an unbounded direction.
    bool pivot(int enter, int dir) {
        // t is how far the entering variable moves from its current bound.
        double t_flip = ub_[enter] - lb_[enter];
        double best_t = t_flip;
        int leave_row = -1;
        int leave_var = -1;
        int leave_to = 0;  // -1 lower, +1 upper
        for (int r = 0; r < nr_; ++r) {
            double w = tab_row(r)[enter] * dir;
            int b = basis_[r];
            if (w > tols::pivot) {
                double room = xb_[r] - lb_[b];
                double t = room <= 0.0 ? 0.0 : room / w;
                if (t < best_t - 1e-12 ||
                    (t < best_t + 1e-12 &&
                     (leave_row < 0 || b < leave_var))) {
                    best_t = std::max(t, 0.0);
                    leave_row = r;
                    leave_var = b;
                    leave_to = -1;
                }
            } else if (w < -tols::pivot && ub_[b] < kInf) {
                double room = ub_[b] - xb_[r];
                double t = room <= 0.0 ? 0.0 : room / (-w);
                if (t < best_t - 1e-12 ||
                    (t < best_t + 1e-12 &&
                     (leave_row < 0 || b < leave_var))) {
                    best_t = std::max(t, 0.0);
                    leave_row = r;
                    leave_var = b;
                    leave_to = +1;
                }
            }
        }
        if (leave_row < 0 && !(t_flip < kInf)) return false;  // unbounded

        double t = best_t;
        // Update basic values.
        if (t != 0.0)
            for (int r = 0; r < nr_; ++r)
                xb_[r] -= dir * t * tab_row(r)[enter];

        if (leave_row < 0) {
            // bound flip, no basis change
            state_[enter] =
                state_[enter] == State::AtLower ? State::AtUpper : State::AtLower;
            return true;
        }

        int lv = basis_[leave_row];
        // entering value
        double enter_val =
            (state_[enter] == State::AtUpper ? ub_[enter] : lb_[enter]) + dir * t;
        state_[lv] = leave_to < 0 ? State::AtLower : State::AtUpper;
        xb_[leave_row] = enter_val;
        basis_[leave_row] = enter;
        state_[enter] = State::Basic;

        // Gauss-Jordan update of the tableau and the reduced-cost row.
        double piv = tab_row(leave_row)[enter];
        double inv = 1.0 / piv;
        double* prow = tab_row(leave_row);
        for (int j = 0; j < ncols_; ++j) prow[j] *= inv;
        prow[enter] = 1.0;
        for (int r = 0; r < nr_; ++r) {
            if (r == leave_row) continue;
            double f = tab_row(r)[enter];
            if (f == 0.0) continue;
            double* row = tab_row(r);
            for (int j = 0; j < ncols_; ++j) row[j] -= f * prow[j];
            row[enter] = 0.0;
        }
        double fd = dual_[enter];
        if (fd != 0.0) {
            for (int j = 0; j < ncols_; ++j) dual_[j] -= fd * prow[j];
            dual_[enter] = 0.0;
        }
        // snap the leaving variable's bound exactly
        return true;
    }

    double feas_tol_;
    double opt_tol_ = 1e-9;
    int nv_ = 0, nr_ = 0, ncols_ = 0, nart_ = 0;
    int phase_ = 2;
    bool loaded_ = false, solved_ = false, final_checked_ = false;
    LpStatus status_ = LpStatus::Infeasible;
    long total_pivots_ = 0;
    std::vector<double> raw_, tab_;
    std::vector<double> obj_, cost_, rhs_, lb_, ub_, dual_, xb_;
    std::vector<State> state_;
    std::vector<int> basis_;
};

inline LpSolution solve(const LpProblem& p, double tol = tols::feasibility) {
    SimplexSolver solver(tol);
    solver.load(p);
    solver.solve();
    return solver.extract(p.num_vars, p.num_rows);
}

// LP relaxation of an instance with an optional uniform RHS shift and 0/1
// fixings on the first-stage block. Variables are ordered x0 then x(1)..x(s);
// rows come in scenario blocks of m.
inline LpProblem build_relaxation(const Instance& inst, double rhs_shift = 0.0,
                                  const std::map<int, int>& fixings = {}) {
    require(rhs_shift >= 0.0, "build_relaxation: rhs_shift must be >= 0");
    const int n = inst.dims.n, m = inst.dims.m, s = inst.dims.s;
    for (const auto& [j, v] : fixings) {
        require(j >= 0 && j < n, "build_relaxation: fixing index out of range");
        require(v == 0 || v == 1, "build_relaxation: fixing value must be 0/1");
    }
    LpProblem p;
    p.num_vars = n * (s + 1);
    p.objective.assign(p.num_vars, 0.0);
    for (int j = 0; j < n; ++j) p.objective[j] = s * inst.c0[j];
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j) p.objective[n * (1 + i) + j] = inst.c[i][j];
    p.lower.assign(p.num_vars, 0.0);
    p.upper.assign(p.num_vars, 1.0);
    for (const auto& [j, v] : fixings) {
        p.lower[j] = v;
        p.upper[j] = v;
    }
    for (int i = 0; i < s; ++i) {
        for (int r = 0; r < m; ++r) {
            std::vector<double> row(p.num_vars, 0.0);
            for (int j = 0; j < n; ++j) {
                row[j] = inst.A0[r][j];
                row[n * (1 + i) + j] = inst.A[i][r][j];
            }
            p.add_row(std::move(row), inst.rhs(i, r) - rhs_shift);
        }
    }
    return p;
}

// Per-block fractional entry counts of a basic LP solution; entry 0 is the
// first-stage block.
inline std::vector<int> count_fractional_per_block(const LpSolution& sol,
                                                   const Dims& dims,
                                                   double tol = 1e-7) {
    if (!sol.basic || sol.status != LpStatus::Optimal)
        throw ContractError(
            "count_fractional_per_block needs an Optimal basic solution");
    std::vector<int> counts(dims.s + 1, 0);
    for (int b = 0; b <= dims.s; ++b)
        for (int j = 0; j < dims.n; ++j) {
            double v = sol.x[b * dims.n + j];
            if (v > tol && v < 1.0 - tol) ++counts[b];
        }
    return counts;
}

}  // namespace bplab
