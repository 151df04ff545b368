#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bplab/common.hpp"
#include "bplab/rng.hpp"

namespace bplab {

struct Dims {
    int n = 0;  // decision dimension per block
    int m = 0;  // constraints per scenario
    int s = 0;  // number of scenarios

    bool valid() const { return n >= 1 && m >= 1 && s >= 1; }
};

using Matrix = std::vector<std::vector<double>>;  // row-major

// Either a fixed beta in (1/4, 1/2) or i.i.d. uniform draws over (1/4, 1/2).
struct BetaSpec {
    enum class Kind { Fixed, Uniform } kind = Kind::Fixed;
    double value = 0.45;

    static BetaSpec fixed(double v) { return {Kind::Fixed, v}; }
    static BetaSpec uniform() { return {Kind::Uniform, 0.0}; }

    std::string to_string() const;
    static BetaSpec parse(const std::string& text);
};

// Full problem data. The right-hand side is never stored: b[i][r] is always
// recomputed as beta[i][r] * 2n.
struct Instance {
    Dims dims;
    std::vector<double> c0;     // n
    std::vector<std::vector<double>> c;  // s x n
    Matrix A0;                  // m x n
    std::vector<Matrix> A;      // s matrices, each m x n
    Matrix beta;                // s x m
    std::uint64_t seed = 0;
    bool model_conformant = true;

    double rhs(int i, int r) const { return beta[i][r] * 2.0 * dims.n; }

    std::vector<double> rhs_row(int i) const {
        std::vector<double> b(dims.m);
        for (int r = 0; r < dims.m; ++r) b[r] = rhs(i, r);
        return b;
    }

    double beta_min() const {
        double bm = beta[0][0];
        for (const auto& row : beta)
            for (double v : row) bm = std::min(bm, v);
        return bm;
    }

    // Recomputes the conformance flag from the stored data.
    bool check_model_conformant() const {
        auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
        for (double v : c0)
            if (!in01(v)) return false;
        for (const auto& row : A0)
            for (double v : row)
                if (!in01(v)) return false;
        for (const auto& ci : c)
            for (double v : ci)
                if (!in01(v)) return false;
        for (const auto& Ai : A)
            for (const auto& row : Ai)
                for (double v : row)
                    if (!in01(v)) return false;
        for (const auto& row : beta)
            for (double v : row)
                if (!(v > 0.25 && v < 0.5)) return false;
        return true;
    }
};

struct BinarySolution {
    std::vector<int> x0;                // n, entries 0/1
    std::vector<std::vector<int>> x;    // s x n, entries 0/1

    static BinarySolution zeros(const Dims& d) {
        BinarySolution sol;
        sol.x0.assign(d.n, 0);
        sol.x.assign(d.s, std::vector<int>(d.n, 0));
        return sol;
    }
};

inline std::string BetaSpec::to_string() const {
    if (kind == Kind::Uniform) return "uniform";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

inline BetaSpec BetaSpec::parse(const std::string& text) {
    if (text == "uniform") return uniform();
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw ParamError("bad beta spec: " + text);
        return fixed(v);
    } catch (const std::invalid_argument&) {
        throw ParamError("bad beta spec: " + text);
    }
}

// Draw order (fixed for reproducibility): c0, then A0 row-major, then for
// each scenario i ascending: c[i], A[i] row-major, then beta[i][.] when the
// spec is "uniform".
inline Instance generate(const Dims& dims, const BetaSpec& beta_spec,
                         std::uint64_t seed) {
    require(dims.valid(), "generate: dims must satisfy n,m,s >= 1");
    if (beta_spec.kind == BetaSpec::Kind::Fixed)
        require(beta_spec.value > 0.25 && beta_spec.value < 0.5,
                "generate: fixed beta must lie strictly in (1/4, 1/2)");

    Rng rng(seed);
    auto draw_vec = [&](int len) {
        std::vector<double> v(len);
        for (double& x : v) x = rng.uniform();
        return v;
    };
    auto draw_mat = [&](int rows, int cols) {
        Matrix M(rows);
        for (auto& row : M) row = draw_vec(cols);
        return M;
    };

    Instance inst;
    inst.dims = dims;
    inst.seed = seed;
    inst.c0 = draw_vec(dims.n);
    inst.A0 = draw_mat(dims.m, dims.n);
    inst.c.resize(dims.s);
    inst.A.resize(dims.s);
    inst.beta.assign(dims.s, std::vector<double>(dims.m, beta_spec.value));
    for (int i = 0; i < dims.s; ++i) {
        inst.c[i] = draw_vec(dims.n);
        inst.A[i] = draw_mat(dims.m, dims.n);
        if (beta_spec.kind == BetaSpec::Kind::Uniform)
            for (int r = 0; r < dims.m; ++r)
                inst.beta[i][r] = rng.uniform_open(0.25, 0.5);
    }
    inst.model_conformant = true;
    return inst;
}

inline void check_dims_match(const Instance& inst, const BinarySolution& sol) {
    bool ok = static_cast<int>(sol.x0.size()) == inst.dims.n &&
              static_cast<int>(sol.x.size()) == inst.dims.s;
    for (const auto& xi : sol.x)
        ok = ok && static_cast<int>(xi.size()) == inst.dims.n;
    require(ok, "solution dimensions do not match instance");
}

inline double objective(const Instance& inst, const BinarySolution& sol) {
    check_dims_match(inst, sol);
    double first = 0.0;
    for (int j = 0; j < inst.dims.n; ++j) first += inst.c0[j] * sol.x0[j];
    double val = inst.dims.s * first;
    for (int i = 0; i < inst.dims.s; ++i)
        for (int j = 0; j < inst.dims.n; ++j)
            val += inst.c[i][j] * sol.x[i][j];
    return val;
}

inline bool is_feasible(const Instance& inst, const BinarySolution& sol,
                        double tol = tols::feasibility) {
    check_dims_match(inst, sol);
    require(tol >= 0.0, "is_feasible: tol must be nonnegative");
    for (int i = 0; i < inst.dims.s; ++i) {
        for (int r = 0; r < inst.dims.m; ++r) {
            double lhs = 0.0;
            for (int j = 0; j < inst.dims.n; ++j) {
                lhs += inst.A0[r][j] * sol.x0[j];
                lhs += inst.A[i][r][j] * sol.x[i][j];
            }
            if (lhs > inst.rhs(i, r) + tol) return false;
        }
    }
    return true;
}

// JSON (optionally gzipped) serialization lives in instance_io.hpp.

}  // namespace bplab
