#include "ekr/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ekr/characters.hpp"
#include "ekr/lp.hpp"

namespace ekr {

namespace {

Partition shape_of(int first, std::initializer_list<int> rest) {
    std::vector<int> parts{first};
    parts.insert(parts.end(), rest.begin(), rest.end());
    return Partition(std::move(parts));
}

Rat poly(int n, std::initializer_list<Rat> coeffs) {
    // coeffs highest degree first
    Rat acc = 0;
    for (const Rat& c : coeffs) acc = acc * n + c;
    return acc;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

WeightScheme finalize(int n, int k, std::vector<std::pair<Partition, Rat>> entries,
                      const std::vector<Rat>& poly_form) {
    WeightScheme scheme{n, k, {}};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (poly_form.size() == entries.size() && entries[i].second != poly_form[i])
            throw std::logic_error("closed-form weights: symbol and polynomial forms disagree at " +
                                   entries[i].first.to_string());
        if (entries[i].second != 0)
            scheme.entries.push_back({entries[i].first, entries[i].second});
    }
    scheme.validate();
    return scheme;
}

// The displayed systems are overdetermined; re-derive the weights by
// elimination and insist the displayed forms match.
void cross_check_against_system(const WeightScheme& scheme, int k, bool even_case) {
    ConstraintSystem sys = build_closed_form_system(scheme.n, k, even_case);
    WeightScheme solved = solve_constraint_system(sys);
    auto find = [&](const Partition& cls) -> Rat {
        for (const auto& e : solved.entries)
            if (e.cycle_type == cls) return e.omega;
        return Rat(0);
    };
    for (const auto& e : scheme.entries)
        if (find(e.cycle_type) != e.omega)
            throw std::logic_error("closed-form weights disagree with the defining system at " +
                                   e.cycle_type.to_string());
}

}  // namespace

SymbolTable SymbolTable::make(int n, int k) {
    SymbolTable s;
    s.n = n;
    s.k = k;
    s.alpha = binomial(n, k) - 1;
    s.beta = n - 1;
    s.gamma = binomial(n, 2) - n;
    s.delta = binomial(n, 3) - binomial(n, 2);
    s.epsilon = binomial(n, 4) - binomial(n, 3);
    s.iota = binomial(n, 5) - binomial(n, 4);
    s.eta = binomial(n - 1, 2);
    s.zeta = Int(n) * (n - 2) * (n - 4) / 3;
    s.theta = Int(n) * (n - 1) * (n - 4) * (n - 5) / 12;
    s.nu = Int(n) * (n - 1) * (n - 3) * (n - 6) / 8;
    s.tau = binomial(n - 1, 4);
    s.kappa = Int(n) * (n - 2) * (n - 3) * (n - 5) / 8;
    s.mu = binomial(n - 1, 3);
    return s;
}

WeightScheme scheme_k3_odd(int n) {
    require(n % 2 == 1 && n >= 27, "scheme_k3_odd: need n odd, n >= 27");
    auto s = SymbolTable::make(n, 3);
    Rat w1 = Rat(s.beta + s.delta);
    Rat w2 = Rat(s.delta);
    Rat w4 = Rat(s.gamma - s.delta);
    // s0 = gamma - delta = beta + gamma - C(n-1,3)
    if (s.gamma - s.delta != s.beta + s.gamma - binomial(n - 1, 3))
        throw std::logic_error("scheme_k3_odd: s0 identity failed");
    return finalize(n, 3,
                    {{shape_of(n, {}), w1},
                     {shape_of(n - 2, {1, 1}), w2},
                     {shape_of(n - 5, {4, 1}), w4}},
                    {});
}

WeightScheme scheme_k3_even(int n) {
    require(n % 2 == 0 && n >= 20, "scheme_k3_even: need n even, n >= 20");
    auto s = SymbolTable::make(n, 3);
    Rat a(s.alpha), b(s.beta), g(s.gamma);
    return finalize(n, 3,
                    {{shape_of(n - 5, {5}), a / 3 + 2 * b / 3 + g / 3},
                     {shape_of(n - 6, {2, 2, 2}), (a - b) / 6 - g / 3},
                     {shape_of(n - 6, {4, 1, 1}), (a - b) / 2}},
                    {});
}

WeightScheme scheme_k4_even(int n) {
    require(n % 2 == 0 && n >= 22, "scheme_k4_even: need n even, n >= 22");
    auto s = SymbolTable::make(n, 4);
    Rat a(s.alpha), b(s.beta), g(s.gamma), d(s.delta), z(s.zeta);
    std::vector<Rat> greek = {
        a - b - g - d - z,
        (b + d) / 2,
        (a - d + z) / 3,
        (2 * a - 3 * b - 3 * g - 2 * d - z) / 3,
        (-2 * a + 3 * b + 4 * g + 3 * d + 2 * z) / 2,
    };
    std::vector<Rat> in_n = {
        poly(n, {Rat(1, 24), Rat(-3, 4), Rat(71, 24), Rat(-13, 4), Rat(0)}),
        poly(n, {Rat(1, 12), Rat(-1, 2), Rat(11, 12), Rat(-1, 2)}),
        poly(n, {Rat(1, 72), Rat(-1, 36), Rat(-13, 72), Rat(19, 36), Rat(-1, 3)}),
        poly(n, {Rat(1, 36), Rat(-7, 18), Rat(41, 36), Rat(-10, 9), Rat(1, 3)}),
        poly(n, {Rat(-1, 24), Rat(5, 6), Rat(-71, 24), Rat(8, 3), Rat(-1, 2)}),
    };
    WeightScheme scheme = finalize(n, 4,
                                   {{shape_of(n - 1, {1}), greek[0]},
                                    {shape_of(n - 2, {2}), greek[1]},
                                    {shape_of(n - 3, {3}), greek[2]},
                                    {shape_of(n - 3, {1, 1, 1}), greek[3]},
                                    {shape_of(n - 7, {5, 1, 1}), greek[4]}},
                                   in_n);
    cross_check_against_system(scheme, 4, true);
    return scheme;
}

WeightScheme scheme_k4_odd(int n) {
    require(n % 2 == 1 && n >= 23, "scheme_k4_odd: need n odd, n >= 23");
    auto s = SymbolTable::make(n, 4);
    Rat a(s.alpha), b(s.beta), g(s.gamma), d(s.delta), z(s.zeta), e(s.eta);
    std::vector<Rat> greek = {
        (a + 5 * b + 4 * d + z) / 6,
        b + g + d + z + e,
        (a - g + e) / 2,
        (a - b - 2 * d + z) / 6,
        -(b + d + z + e),
        (a - 4 * b - 3 * g - 2 * d - 2 * z - 3 * e) / 6,
    };
    std::vector<Rat> in_n = {
        poly(n, {Rat(1, 144), Rat(1, 8), Rat(-133, 144), Rat(43, 24), Rat(-1)}),
        poly(n, {Rat(1, 2), Rat(-2), Rat(3, 2), Rat(0)}),
        poly(n, {Rat(1, 48), Rat(-1, 8), Rat(11, 48), Rat(-1, 8), Rat(0)}),
        poly(n, {Rat(1, 144), Rat(-1, 24), Rat(11, 144), Rat(-1, 24), Rat(0)}),
        poly(n, {Rat(-1, 2), Rat(5, 2), Rat(-3), Rat(0)}),
        poly(n, {Rat(1, 144), Rat(-5, 24), Rat(83, 144), Rat(-3, 8), Rat(0)}),
    };
    WeightScheme scheme = finalize(n, 4,
                                   {{shape_of(n, {}), greek[0]},
                                    {shape_of(n - 2, {1, 1}), greek[1]},
                                    {shape_of(n - 3, {2, 1}), greek[2]},
                                    {shape_of(n - 6, {3, 3}), greek[3]},
                                    {shape_of(n - 7, {6, 1}), greek[4]},
                                    {shape_of(n - 9, {6, 1, 1, 1}), greek[5]}},
                                   in_n);
    cross_check_against_system(scheme, 4, false);
    return scheme;
}

WeightScheme scheme_k5_even(int n) {
    require(n % 2 == 0 && n >= 32, "scheme_k5_even: need n even, n >= 32");
    auto s = SymbolTable::make(n, 5);
    Rat a(s.alpha), b(s.beta), g(s.gamma), d(s.delta), e(s.epsilon), h(s.eta), z(s.zeta),
        th(s.theta), ka(s.kappa), m(s.mu);
    std::vector<Rat> greek = {
        a / 6 - b - d / 6 - e + z / 6 + th + ka + 5 * m / 6,
        a / 8 + 3 * b / 8 + g / 8 + 3 * d / 8 + e / 4 + h / 8 + th / 4 - ka / 4 - 3 * m / 8,
        -b - e + z + th + ka + m,
        a / 4 - 3 * b / 4 - g / 4 - d / 4 - e - h / 4 + th / 2 + m / 4,
        a / 4 - b / 4 - g / 4 - d / 4 + h / 4 + m / 4,
        -a / 24 + 25 * b / 24 + g / 8 + d / 24 + 13 * e / 12 - h / 24 - 11 * th / 12 - ka / 12 -
            m / 24,
        a / 24 - b / 24 - g / 8 - d / 24 - e / 12 + h / 24 - th / 12 + ka / 12 + m / 24,
        a / 6 - d / 6 + z / 6 - m / 6,
        3 * b / 2 + g / 2 + d / 2 + 3 * e / 2 - z - 3 * th / 2 - 3 * ka / 2 - 3 * m / 2,
        a / 24 + b / 8 - g / 8 - d / 24 + e / 4 - h / 8 - z / 3 - th / 4 - ka / 4 - 7 * m / 24,
    };
    std::vector<Rat> in_n = {
        poly(n, {Rat(1, 720), Rat(11, 72), Rat(-209, 144), Rat(307, 72), Rat(-119, 30), Rat(0)}),
        poly(n, {Rat(1, 960), Rat(-1, 96), Rat(7, 192), Rat(-5, 96), Rat(1, 40), Rat(0)}),
        poly(n, {Rat(1, 6), Rat(-7, 6), Rat(7, 3), Rat(-4, 3), Rat(0)}),
        poly(n, {Rat(1, 480), Rat(-1, 48), Rat(7, 96), Rat(-5, 48), Rat(1, 20), Rat(0)}),
        poly(n, {Rat(1, 480), Rat(-1, 48), Rat(7, 96), Rat(-5, 48), Rat(1, 20), Rat(0)}),
        poly(n, {Rat(-1, 2880), Rat(-11, 288), Rat(233, 576), Rat(-415, 288), Rat(83, 40), Rat(-1)}),
        poly(n, {Rat(1, 2880), Rat(-1, 288), Rat(7, 576), Rat(-5, 288), Rat(1, 120), Rat(0)}),
        poly(n, {Rat(1, 720), Rat(-1, 72), Rat(7, 144), Rat(-5, 72), Rat(1, 30), Rat(0)}),
        poly(n, {Rat(-1, 4), Rat(2), Rat(-19, 4), Rat(3), Rat(0)}),
        poly(n, {Rat(1, 2880), Rat(-13, 288), Rat(151, 576), Rat(-137, 288), Rat(31, 120), Rat(0)}),
    };
    WeightScheme scheme = finalize(n, 5,
                                   {{shape_of(n - 1, {1}), greek[0]},
                                    {shape_of(n - 2, {2}), greek[1]},
                                    {shape_of(n - 3, {1, 1, 1}), greek[2]},
                                    {shape_of(n - 4, {4}), greek[3]},
                                    {shape_of(n - 4, {2, 1, 1}), greek[4]},
                                    {shape_of(n - 6, {6}), greek[5]},
                                    {shape_of(n - 6, {2, 2, 2}), greek[6]},
                                    {shape_of(n - 7, {3, 3, 1}), greek[7]},
                                    {shape_of(n - 8, {6, 1, 1}), greek[8]},
                                    {shape_of(n - 10, {6, 1, 1, 1, 1}), greek[9]}},
                                   in_n);
    cross_check_against_system(scheme, 5, true);
    return scheme;
}

WeightScheme scheme_k5_odd(int n) {
    require(n % 2 == 1 && n >= 31, "scheme_k5_odd: need n odd, n >= 31");
    // The printed symbol-form solution for this system does not solve it; the
    // polynomial display below does (and is what elimination returns), so the
    // polynomials are authoritative here.  cross_check_against_system keeps
    // the display honest at every construction.
    std::vector<Rat> in_n = {
        poly(n, {Rat(1, 960), Rat(-5, 96), Rat(29, 64), Rat(-145, 96), Rat(253, 120), Rat(-1)}),
        poly(n, {Rat(1, 240), Rat(-7, 24), Rat(103, 48), Rat(-119, 24), Rat(31, 10), Rat(0)}),
        poly(n, {Rat(1, 480), Rat(-1, 48), Rat(7, 96), Rat(-5, 48), Rat(1, 20), Rat(0)}),
        poly(n, {Rat(1, 960), Rat(-1, 96), Rat(7, 192), Rat(-5, 96), Rat(1, 40), Rat(0)}),
        poly(n, {Rat(1, 960), Rat(-5, 96), Rat(55, 192), Rat(-49, 96), Rat(11, 40), Rat(0)}),
        poly(n, {Rat(1, 240), Rat(-1, 24), Rat(7, 48), Rat(-5, 24), Rat(1, 10), Rat(0)}),
        poly(n, {Rat(-1, 240), Rat(5, 24), Rat(-79, 48), Rat(109, 24), Rat(-41, 10), Rat(0)}),
        poly(n, {Rat(1, 960), Rat(-1, 96), Rat(7, 192), Rat(-5, 96), Rat(1, 40), Rat(0)}),
        poly(n, {Rat(-1, 480), Rat(3, 16), Rat(-119, 96), Rat(39, 16), Rat(-83, 60), Rat(0)}),
    };
    WeightScheme scheme = finalize(n, 5,
                                   {{shape_of(n, {}), in_n[0]},
                                    {shape_of(n - 2, {1, 1}), in_n[1]},
                                    {shape_of(n - 3, {2, 1}), in_n[2]},
                                    {shape_of(n - 4, {2, 2}), in_n[3]},
                                    {shape_of(n - 4, {1, 1, 1, 1}), in_n[4]},
                                    {shape_of(n - 4, {3, 1}), in_n[5]},
                                    {shape_of(n - 7, {6, 1}), in_n[6]},
                                    {shape_of(n - 8, {4, 4}), in_n[7]},
                                    {shape_of(n - 9, {6, 1, 1, 1}), in_n[8]}},
                                   {});
    cross_check_against_system(scheme, 5, false);
    return scheme;
}

ConstraintSystem build_closed_form_system(int n, int k, bool even_case) {
    ConstraintSystem sys;
    sys.n = n;
    sys.k = k;
    auto alpha = Rat(binomial(n, k) - 1);
    auto add = [&](const Partition& shape, const Rat& target) {
        sys.rows.push_back({shape, target});
    };
    if (k == 4 && even_case) {
        sys.classes = {shape_of(n - 1, {1}), shape_of(n - 2, {2}), shape_of(n - 3, {3}),
                       shape_of(n - 3, {1, 1, 1}), shape_of(n - 7, {5, 1, 1})};
        add(shape_of(n, {}), alpha);
        for (int i = 1; i <= 4; ++i) add(shape_of(n - i, {i}), Rat(-1));
        add(shape_of(n - 3, {2, 1}), Rat(-1));
    } else if (k == 4 && !even_case) {
        sys.classes = {shape_of(n, {}),          shape_of(n - 2, {1, 1}),
                       shape_of(n - 3, {2, 1}),  shape_of(n - 6, {3, 3}),
                       shape_of(n - 7, {6, 1}),  shape_of(n - 9, {6, 1, 1, 1})};
        add(shape_of(n, {}), alpha);
        for (int i = 1; i <= 4; ++i) add(shape_of(n - i, {i}), Rat(-1));
        add(shape_of(n - 3, {2, 1}), Rat(-1));
        add(shape_of(n - 2, {1, 1}), Rat(-1));
        add(shape_of(n - 3, {1, 1, 1}), Rat(-1));
    } else if (k == 5 && even_case) {
        sys.classes = {shape_of(n - 1, {1}),          shape_of(n - 2, {2}),
                       shape_of(n - 3, {1, 1, 1}),    shape_of(n - 4, {4}),
                       shape_of(n - 4, {2, 1, 1}),    shape_of(n - 6, {6}),
                       shape_of(n - 6, {2, 2, 2}),    shape_of(n - 7, {3, 3, 1}),
                       shape_of(n - 8, {6, 1, 1}),    shape_of(n - 10, {6, 1, 1, 1, 1})};
        add(shape_of(n, {}), alpha);
        for (int i = 1; i <= 5; ++i) add(shape_of(n - i, {i}), Rat(-1));
        add(shape_of(n - 2, {1, 1}), Rat(-1));
        add(shape_of(n - 3, {2, 1}), Rat(-1));
        add(shape_of(n - 4, {3, 1}), Rat(-1));
        add(shape_of(n - 4, {2, 2}), Rat(-1));
        add(shape_of(n - 4, {2, 1, 1}), Rat(-1));
        add(shape_of(n - 4, {1, 1, 1, 1}), Rat(-1));
        add(shape_of(n - 3, {1, 1, 1}), Rat(-1));
    } else if (k == 5 && !even_case) {
        sys.classes = {shape_of(n, {}),            shape_of(n - 2, {1, 1}),
                       shape_of(n - 3, {2, 1}),    shape_of(n - 4, {2, 2}),
                       shape_of(n - 4, {1, 1, 1, 1}), shape_of(n - 4, {3, 1}),
                       shape_of(n - 7, {6, 1}),    shape_of(n - 8, {4, 4}),
                       shape_of(n - 9, {6, 1, 1, 1})};
        add(shape_of(n, {}), alpha);
        for (int i = 1; i <= 5; ++i) add(shape_of(n - i, {i}), Rat(-1));
        add(shape_of(n - 2, {1, 1}), Rat(-1));
        add(shape_of(n - 3, {2, 1}), Rat(-1));
        add(shape_of(n - 4, {3, 1}), Rat(-1));
        add(shape_of(n - 4, {2, 2}), Rat(-1));
        add(shape_of(n - 4, {2, 1, 1}), Rat(-1));
        add(shape_of(n - 4, {1, 1, 1, 1}), Rat(-1));
    } else {
        throw std::invalid_argument("build_closed_form_system: k must be 4 or 5");
    }
    return sys;
}

WeightScheme solve_constraint_system(const ConstraintSystem& sys) {
    const std::size_t m = sys.rows.size();
    const std::size_t nv = sys.classes.size();
    // Augmented matrix: chi-values | target * dimension.
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(nv + 1));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = sys.rows[i];
        for (std::size_t j = 0; j < nv; ++j)
            A[i][j] = Rat(mn_character(row.shape, sys.classes[j]));
        A[i][nv] = row.target * Rat(dimension(row.shape));
    }
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < nv && r < m; ++c) {
        std::size_t p = r;
        while (p < m && A[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(A[p], A[r]);
        std::swap(order[p], order[r]);
        Rat inv = 1 / A[r][c];
        for (auto& x : A[r]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (std::size_t j = c; j <= nv; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < nv)
        throw std::runtime_error("solve_constraint_system: solution not unique (rank " +
                                 std::to_string(r) + " < " + std::to_string(nv) + ")");
    for (std::size_t i = r; i < m; ++i) {
        if (A[i][nv] != 0) {
            throw std::runtime_error("solve_constraint_system: inconsistent row for shape " +
                                     sys.rows[order[i]].shape.to_string());
        }
    }
    WeightScheme scheme{sys.n, sys.k, {}};
    std::vector<Rat> w(nv);
    for (std::size_t t = 0; t < r; ++t) w[pivot_col[t]] = A[t][nv];
    for (std::size_t j = 0; j < nv; ++j)
        if (w[j] != 0) scheme.entries.push_back({sys.classes[j], w[j]});
    scheme.validate();
    return scheme;
}

namespace {

struct Halfspace {
    std::string label;
    bool holds;
};

std::vector<Halfspace> polytope_halfspaces(int n, bool even_case, const Rat& x, const Rat& y) {
    auto s = SymbolTable::make(n, 3);
    Rat bg = Rat(s.beta + s.gamma);
    if (even_case) {
        return {
            {"2x+2y <= C(n,3)", 2 * x + 2 * y <= Rat(binomial(n, 3))},
            {"x-y >= 0", x - y >= 0},
            {"beta+gamma-C(n-1,2) <= x", Rat(s.beta + s.gamma - binomial(n - 1, 2)) <= x},
            {"x <= beta+gamma+C(n-1,2)", x <= Rat(s.beta + s.gamma + binomial(n - 1, 2))},
            {"y >= 0", y >= 0},
        };
    }
    return {
        {"3x+y < beta+gamma", 3 * x + y < bg},
        {"-n(n-2)(n-4)/3 < y-x", Rat(-s.zeta) < y - x},
        {"y-x <= beta+gamma-C(n-1,3)", y - x <= Rat(s.beta + s.gamma - binomial(n - 1, 3))},
        {"beta+gamma-C(n-1,3) <= x+y", Rat(s.beta + s.gamma - binomial(n - 1, 3)) <= x + y},
        {"x+y < beta+gamma", x + y < bg},
    };
}

}  // namespace

PolytopeReport polytope_report_k3(int n, bool even_case, const Rat& t, const Rat& s) {
    PolytopeReport rep;
    auto pinned = polytope_halfspaces(n, even_case, t, s);   // x=t, y=s
    auto swapped = polytope_halfspaces(n, even_case, s, t);  // x=s, y=t
    rep.pinned = true;
    for (const auto& h : pinned) {
        if (!h.holds) {
            rep.pinned = false;
            rep.failed_halfspaces.push_back(h.label);
        }
    }
    rep.swapped = true;
    for (const auto& h : swapped) rep.swapped = rep.swapped && h.holds;
    return rep;
}

bool polytope_check_k3(int n, bool even_case, const Rat& t, const Rat& s) {
    return polytope_report_k3(n, even_case, t, s).pinned;
}

std::vector<Partition> derangement_classes(int n, int k, bool even_only) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n)) {
        if (!is_k_derangement(p, k)) continue;
        if (even_only && parity(p) == Parity::odd) continue;
        out.push_back(p);
    }
    // Largest first part first: enumeration order already is, but make the
    // intent explicit and stable.
    std::stable_sort(out.begin(), out.end(),
                     [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

FeasibilityResult feasibility_search(int n, int k, const FeasibilityOptions& opt) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("feasibility_search: need 2k <= n");
    FeasibilityResult res;
    if (partition_count(n) > opt.max_partitions) {
        res.status = FeasibilityResult::Status::undecided;
        res.note = "partition count exceeds cap";
        return res;
    }
    const std::vector<Partition> classes = derangement_classes(n, k, opt.even_only);
    if (classes.empty()) {
        res.status = FeasibilityResult::Status::infeasible;
        res.note = "no candidate classes";
        return res;
    }
    const Rat alpha = Rat(binomial(n, k) - 1);
    std::vector<Partition> eq_shapes{Partition(std::vector<int>{n})};
    for (int i = 1; i <= k; ++i) eq_shapes.push_back(shape_of(n - i, {i}));

    const auto all_shapes = enumerate_partitions(n);
    // Working constraint set: start from the shapes of low dimension (the
    // plausibly binding ones) and grow with whatever the spectrum violates.
    std::set<Partition> working(eq_shapes.begin(), eq_shapes.end());
    working.insert(Partition::unchecked(std::vector<int>(static_cast<std::size_t>(n), 1)));
    Int low_bound = n >= 13 ? 2 * binomial(n, 6) : Int(0);
    for (const auto& lam : all_shapes)
        if (low_bound == 0 || dimension(lam) < low_bound) working.insert(lam);

    for (;;) {
        ++res.rounds;
        std::vector<LinearConstraint> rows;
        for (const auto& shape : eq_shapes) {
            LinearConstraint row;
            row.rel = LinearConstraint::Rel::eq;
            row.coeffs.reserve(classes.size());
            for (const auto& c : classes) row.coeffs.emplace_back(mn_character(shape, c));
            row.rhs = shape.num_parts() == 1 ? alpha : Rat(-dimension(shape));
            rows.push_back(std::move(row));
        }
        for (const auto& shape : all_shapes) {  // enumeration order keeps runs reproducible
            if (!working.count(shape)) continue;
            if (std::find(eq_shapes.begin(), eq_shapes.end(), shape) != eq_shapes.end()) continue;
            LinearConstraint row;
            row.rel = LinearConstraint::Rel::ge;
            row.coeffs.reserve(classes.size());
            for (const auto& c : classes) row.coeffs.emplace_back(mn_character(shape, c));
            row.rhs = Rat(-dimension(shape));
            rows.push_back(std::move(row));
        }
        LpResult lp = phase1_feasible(rows, classes.size(), opt.max_iterations);
        res.simplex_iterations += lp.iterations;
        if (lp.status == LpResult::Status::iteration_limit) {
            res.status = FeasibilityResult::Status::undecided;
            res.note = "simplex iteration cap reached";
            return res;
        }
        if (lp.status == LpResult::Status::infeasible) {
            // The working rows are a subset of the full system, so this is a
            // certificate of infeasibility for the full system too.
            res.status = FeasibilityResult::Status::infeasible;
            res.note = "phase-1 objective " + rat_to_string(lp.phase1_objective);
            return res;
        }
        WeightScheme scheme{n, k, {}};
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (lp.solution[j] != 0) scheme.entries.push_back({classes[j], lp.solution[j]});
        Spectrum sp = full_spectrum(scheme, opt.threads);
        std::vector<Partition> violated;
        for (std::size_t i = 0; i < sp.shapes.size(); ++i)
            if (sp.values[i] < -1) violated.push_back(sp.shapes[i]);
        if (violated.empty()) {
            res.status = FeasibilityResult::Status::feasible;
            res.scheme = std::move(scheme);
            return res;
        }
        for (auto& v : violated) working.insert(std::move(v));
    }
}

}  // namespace ekr
