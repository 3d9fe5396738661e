#include "ekr/lp.hpp"

#include <stdexcept>

namespace ekr {

namespace {

struct Tableau {
    std::size_t m = 0;       // constraint rows
    std::size_t total = 0;   // structural + surplus + artificial columns
    std::size_t art_start = 0;
    std::vector<std::vector<Rat>> A;  // m x total
    std::vector<Rat> b;               // >= 0 throughout
    std::vector<Rat> z;               // phase-1 reduced-cost row (enter when > 0)
    Rat obj;                          // current sum of artificials
    std::vector<std::size_t> basis;
    std::vector<char> in_basis;

    void pivot(std::size_t leave, std::size_t enter) {
        auto& Al = A[leave];
        Rat inv = 1 / Al[enter];
        for (auto& x : Al) x *= inv;
        b[leave] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            Rat f = A[i][enter];
            if (f == 0) continue;
            auto& Ai = A[i];
            for (std::size_t j = 0; j < total; ++j)
                if (Al[j] != 0) Ai[j] -= f * Al[j];
            b[i] -= f * b[leave];
        }
        Rat f = z[enter];
        if (f != 0) {
            for (std::size_t j = 0; j < total; ++j)
                if (Al[j] != 0) z[j] -= f * Al[j];
            obj -= f * b[leave];
        }
        in_basis[basis[leave]] = 0;
        in_basis[enter] = 1;
        basis[leave] = enter;
    }
};

}  // namespace

LpResult phase1_feasible(const std::vector<LinearConstraint>& rows, std::size_t num_vars,
                         std::int64_t max_iterations) {
    const std::size_t m = rows.size();
    std::size_t nsur = 0;
    for (const auto& r : rows)
        if (r.rel == LinearConstraint::Rel::ge) ++nsur;
    Tableau t;
    t.m = m;
    t.art_start = 2 * num_vars + nsur;
    t.total = t.art_start + m;
    t.A.assign(m, std::vector<Rat>(t.total));
    t.b.assign(m, Rat(0));
    std::size_t si = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& r = rows[i];
        if (r.coeffs.size() != num_vars)
            throw std::invalid_argument("phase1_feasible: row width mismatch");
        bool flip = r.rhs < 0;
        for (std::size_t j = 0; j < num_vars; ++j) {
            Rat c = flip ? -r.coeffs[j] : r.coeffs[j];
            t.A[i][j] = c;
            t.A[i][num_vars + j] = -c;
        }
        if (r.rel == LinearConstraint::Rel::ge) {
            t.A[i][2 * num_vars + si] = flip ? Rat(1) : Rat(-1);
            ++si;
        }
        t.b[i] = flip ? -r.rhs : r.rhs;
        t.A[i][t.art_start + i] = 1;
    }
    t.basis.resize(m);
    t.in_basis.assign(t.total, 0);
    for (std::size_t i = 0; i < m; ++i) {
        t.basis[i] = t.art_start + i;
        t.in_basis[t.art_start + i] = 1;
    }
    // Reduced costs for min sum(artificials): z_j = sum_i A[i][j] - c_j.
    t.z.assign(t.total, Rat(0));
    t.obj = 0;
    for (std::size_t j = 0; j < t.total; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t.A[i][j];
        t.z[j] = s - (j >= t.art_start ? 1 : 0);
    }
    for (std::size_t i = 0; i < m; ++i) t.obj += t.b[i];

    LpResult res;
    std::int64_t it = 0;
    for (;;) {
        if (++it > max_iterations) {
            res.status = LpResult::Status::iteration_limit;
            res.iterations = it - 1;
            return res;
        }
        // Bland: smallest-index improving column.
        std::size_t enter = t.total;
        for (std::size_t j = 0; j < t.total; ++j) {
            if (!t.in_basis[j] && t.z[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == t.total) break;  // optimal
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.A[i][enter] > 0) {
                Rat ratio = t.b[i] / t.A[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && t.basis[i] < t.basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m)
            throw std::logic_error("phase1_feasible: unbounded phase-1 objective");
        t.pivot(leave, enter);
    }
    res.iterations = it - 1;
    res.phase1_objective = t.obj;
    if (t.obj > 0) {
        res.status = LpResult::Status::infeasible;
        return res;
    }
    res.status = LpResult::Status::feasible;
    res.solution.assign(num_vars, Rat(0));
    std::vector<Rat> x(t.total, Rat(0));
    for (std::size_t i = 0; i < m; ++i) x[t.basis[i]] = t.b[i];
    for (std::size_t j = 0; j < num_vars; ++j) res.solution[j] = x[j] - x[num_vars + j];
    return res;
}

}  // namespace ekr
