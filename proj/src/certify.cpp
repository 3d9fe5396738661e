#include "ekr/certify.hpp"

#include <algorithm>
#include <sstream>

#include "ekr/characters.hpp"

namespace ekr {

namespace {

Partition shape_of(int first, std::initializer_list<int> rest) {
    std::vector<int> parts{first};
    parts.insert(parts.end(), rest.begin(), rest.end());
    return Partition(std::move(parts));
}

Rat poly(int n, std::initializer_list<Rat> coeffs) {
    Rat acc = 0;
    for (const Rat& c : coeffs) acc = acc * n + c;
    return acc;
}

}  // namespace

bool closed_form_in_range(int n, int k) {
    bool even = n % 2 == 0;
    switch (k) {
        case 3: return even ? n >= 20 : n >= 27;
        case 4: return even ? n >= 22 : n >= 28;
        case 5: return even ? n >= 32 : n >= 31;
        default: return false;
    }
}

std::string closed_form_section(int n, int k) {
    return "closed-form:k" + std::to_string(k) + (n % 2 == 0 ? "-even" : "-odd");
}

Int tail_threshold_for(int n, int k) {
    switch (k) {
        case 3: return binomial(n, 4);
        case 4: return binomial(n, 5);
        case 5: return 2 * binomial(n, 6);
        default: throw std::invalid_argument("tail_threshold_for: k must be 3, 4 or 5");
    }
}

TailReport verify_tail(const Spectrum& spectrum, const Int& dim_threshold) {
    TailReport rep;
    rep.threshold = dim_threshold;
    rep.max_abs = 0;
    for (std::size_t i = 0; i < spectrum.shapes.size(); ++i) {
        if (dimension(spectrum.shapes[i]) <= dim_threshold) continue;
        Rat a = spectrum.values[i] < 0 ? -spectrum.values[i] : spectrum.values[i];
        if (a > rep.max_abs) rep.max_abs = a;
        if (a >= 1 && rep.ok) {
            rep.ok = false;
            rep.counterexample = spectrum.shapes[i];
        }
    }
    return rep;
}

namespace {

struct ClaimSpec {
    Partition shape;
    std::string text;
    std::optional<Rat> expected;  // exact value when the section displays one
    int sign_floor;               // -2: none, -1: "> -1", 0: "> 0"
};

std::vector<ClaimSpec> claims_for(int n, int k) {
    const bool even = n % 2 == 0;
    const Rat alpha = Rat(binomial(n, k) - 1);
    std::vector<ClaimSpec> cs;
    auto add_eq = [&](Partition p, Rat v, std::string text) {
        cs.push_back({std::move(p), std::move(text), v, -2});
    };
    auto add_formula = [&](Partition p, Rat v, int floor) {
        cs.push_back({std::move(p), std::string(floor == 0 ? "> 0" : "> -1") + " (= " +
                                        rat_to_string(v) + ")",
                      v, floor});
    };
    Partition ones = Partition::unchecked(std::vector<int>(static_cast<std::size_t>(n), 1));
    add_eq(shape_of(n, {}), alpha, "= alpha");
    for (int i = 1; i <= k; ++i) add_eq(shape_of(n - i, {i}), Rat(-1), "= -1");
    if (!even) add_eq(ones, alpha, "= alpha");

    if (k == 3 && even) {
        add_formula(shape_of(n - 2, {1, 1}), Rat(binomial(n, 2) - 1) / Rat(binomial(n - 1, 2)), 0);
        add_eq(shape_of(n - 3, {2, 1}), Rat(0), "= 0");
        add_formula(shape_of(n - 3, {1, 1, 1}), Rat(1 - binomial(n, 2)) / Rat(binomial(n - 1, 3)), -1);
        add_formula(shape_of(n - 4, {4}),
                    Rat(binomial(n, 3) - binomial(n, 2)) / Rat(binomial(n, 4) - binomial(n, 3)), 0);
        add_formula(shape_of(n - 4, {1, 1, 1, 1}), Rat(n - 1) / Rat(binomial(n - 1, 4)), 0);
    } else if (k == 4 && even) {
        add_eq(shape_of(n - 3, {2, 1}), Rat(-1), "= -1");
        add_formula(shape_of(n - 2, {1, 1}),
                    Rat(binomial(n, 4) - binomial(n, 3)) / Rat(binomial(n - 1, 2)), 0);
        add_eq(shape_of(n - 3, {1, 1, 1}), Rat(0), "= 0");
        add_eq(shape_of(n - 4, {1, 1, 1, 1}), Rat(0), "= 0");
        add_formula(shape_of(n - 4, {3, 1}),
                    -poly(n, {Rat(1), Rat(-22), Rat(83), Rat(-86), Rat(24)}) /
                        (3 * poly(n, {Rat(1), Rat(-10), Rat(27), Rat(-18), Rat(0)})),
                    -1);
        Int gz = (binomial(n, 2) - n) + Int(n) * (n - 2) * (n - 4) / 3;
        add_formula(shape_of(n - 4, {2, 2}),
                    Rat(12 * gz) / Rat(Int(n) * (n - 1) * (n - 4) * (n - 5)), 0);
        add_formula(shape_of(n - 4, {2, 1, 1}),
                    -poly(n, {Rat(1), Rat(-18), Rat(71), Rat(-78), Rat(0)}) /
                        (3 * poly(n, {Rat(1), Rat(-10), Rat(31), Rat(-30), Rat(0)})),
                    -1);
        Rat tail5 = -5 * poly(n, {Rat(1), Rat(-20), Rat(71), Rat(-64), Rat(12)});
        add_formula(shape_of(n - 5, {5}),
                    tail5 / poly(n, {Rat(1), Rat(-15), Rat(65), Rat(-105), Rat(54), Rat(0)}), -1);
        add_formula(shape_of(n - 5, {1, 1, 1, 1, 1}),
                    tail5 / poly(n, {Rat(1), Rat(-15), Rat(85), Rat(-225), Rat(274), Rat(-120)}),
                    -1);
    } else if (k == 4 && !even) {
        add_eq(shape_of(n - 2, {1, 1}), Rat(-1), "= -1");
        add_eq(shape_of(n - 3, {2, 1}), Rat(-1), "= -1");
        add_eq(shape_of(n - 3, {1, 1, 1}), Rat(-1), "= -1");
        Rat cubic = 4 * poly(n, {Rat(1), Rat(-6), Rat(11), Rat(-6)});
        add_formula(shape_of(n - 4, {1, 1, 1, 1}),
                    cubic / poly(n, {Rat(1), Rat(-10), Rat(35), Rat(-50), Rat(24)}), 0);
        add_formula(shape_of(n - 4, {3, 1}),
                    4 * poly(n, {Rat(1), Rat(-4), Rat(3), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-10), Rat(27), Rat(-18), Rat(0)}),
                    0);
        add_formula(shape_of(n - 4, {2, 2}),
                    2 * poly(n, {Rat(2), Rat(-9), Rat(7), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-10), Rat(29), Rat(-20), Rat(0)}),
                    0);
        add_formula(shape_of(n - 4, {2, 1, 1}),
                    4 * poly(n, {Rat(1), Rat(-5), Rat(6), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-10), Rat(31), Rat(-30), Rat(0)}),
                    0);
        add_eq(shape_of(n - 5, {5}), Rat(0), "= 0");
        add_formula(shape_of(n - 5, {1, 1, 1, 1, 1}),
                    -5 * cubic / poly(n, {Rat(1), Rat(-15), Rat(85), Rat(-225), Rat(274), Rat(-120)}),
                    -1);
    } else if (k == 5 && even) {
        for (auto p : {shape_of(n - 2, {1, 1}), shape_of(n - 3, {2, 1}),
                       shape_of(n - 3, {1, 1, 1}), shape_of(n - 4, {1, 1, 1, 1}),
                       shape_of(n - 4, {3, 1}), shape_of(n - 4, {2, 2}),
                       shape_of(n - 4, {2, 1, 1})})
            add_eq(p, Rat(-1), "= -1");
        add_formula(shape_of(n - 5, {1, 1, 1, 1, 1}),
                    5 * poly(n, {Rat(1), Rat(-10), Rat(35), Rat(-50), Rat(24)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(85), Rat(-225), Rat(274), Rat(-120)}),
                    0);
        add_formula(shape_of(n - 5, {4, 1}),
                    5 * poly(n, {Rat(1), Rat(-7), Rat(14), Rat(-8), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(70), Rat(-120), Rat(64), Rat(0)}),
                    -1);
        add_formula(shape_of(n - 5, {3, 1, 1}),
                    5 * poly(n, {Rat(1), Rat(-8), Rat(19), Rat(-12), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(75), Rat(-145), Rat(84), Rat(0)}),
                    -1);
        add_formula(shape_of(n - 5, {3, 2}),
                    poly(n, {Rat(5), Rat(-38), Rat(79), Rat(-46), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(73), Rat(-129), Rat(70), Rat(0)}),
                    -1);
        add_formula(shape_of(n - 5, {2, 2, 1}),
                    poly(n, {Rat(5), Rat(-42), Rat(103), Rat(-66), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(77), Rat(-153), Rat(90), Rat(0)}),
                    -1);
        add_formula(shape_of(n - 5, {2, 1, 1, 1}),
                    5 * poly(n, {Rat(1), Rat(-9), Rat(26), Rat(-24), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(80), Rat(-180), Rat(144), Rat(0)}),
                    -1);
        add_formula(shape_of(n - 6, {1, 1, 1, 1, 1, 1}),
                    3 * poly(n, {Rat(1), Rat(270), Rat(-2125), Rat(4950), Rat(-3096), Rat(0)}) /
                        (4 * poly(n, {Rat(1), Rat(-21), Rat(175), Rat(-735), Rat(1624),
                                      Rat(-1764), Rat(720)})),
                    -1);
        add_formula(shape_of(n - 6, {6}),
                    5 * poly(n, {Rat(1), Rat(-202), Rat(1571), Rat(-3890), Rat(3096), Rat(-576)}) /
                        (4 * poly(n, {Rat(1), Rat(-21), Rat(145), Rat(-435), Rat(574),
                                      Rat(-264), Rat(0)})),
                    -1);
    } else if (k == 5 && !even) {
        for (auto p : {shape_of(n - 2, {1, 1}), shape_of(n - 3, {2, 1}),
                       shape_of(n - 4, {1, 1, 1, 1}), shape_of(n - 4, {3, 1}),
                       shape_of(n - 4, {2, 2}), shape_of(n - 4, {2, 1, 1})})
            add_eq(p, Rat(-1), "= -1");
        add_formula(shape_of(n - 3, {1, 1, 1}),
                    poly(n, {Rat(1), Rat(-10), Rat(-5), Rat(190), Rat(-416), Rat(240)}) /
                        (40 * poly(n, {Rat(1), Rat(-6), Rat(11), Rat(-6)})),
                    -1);
        add_formula(shape_of(n - 5, {1, 1, 1, 1, 1}),
                    5 * poly(n, {Rat(1), Rat(-10), Rat(35), Rat(-50), Rat(24)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(85), Rat(-225), Rat(274), Rat(-120)}),
                    0);
        add_formula(shape_of(n - 5, {4, 1}),
                    5 * poly(n, {Rat(1), Rat(-7), Rat(14), Rat(-8), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(70), Rat(-120), Rat(64), Rat(0)}),
                    0);
        add_formula(shape_of(n - 5, {3, 2}),
                    poly(n, {Rat(5), Rat(-38), Rat(79), Rat(-46), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(73), Rat(-129), Rat(70), Rat(0)}),
                    0);
        add_formula(shape_of(n - 5, {3, 1, 1}),
                    -poly(n, {Rat(1), Rat(-70), Rat(515), Rat(-1190), Rat(744), Rat(0)}) /
                        (12 * poly(n, {Rat(1), Rat(-15), Rat(75), Rat(-145), Rat(84), Rat(0)})),
                    -1);
        add_formula(shape_of(n - 5, {2, 2, 1}),
                    poly(n, {Rat(5), Rat(-42), Rat(103), Rat(-66), Rat(0)}) /
                        poly(n, {Rat(1), Rat(-15), Rat(77), Rat(-153), Rat(90), Rat(0)}),
                    0);
        add_formula(shape_of(n - 5, {2, 1, 1, 1}),
                    -poly(n, {Rat(1), Rat(-50), Rat(395), Rat(-1090), Rat(984), Rat(0)}) /
                        (8 * poly(n, {Rat(1), Rat(-15), Rat(80), Rat(-180), Rat(144), Rat(0)})),
                    -1);
        add_formula(shape_of(n - 6, {6}),
                    -3 * poly(n, {Rat(3), Rat(-190), Rat(1385), Rat(-3350), Rat(2632), Rat(0)}) /
                        (2 * poly(n, {Rat(1), Rat(-21), Rat(145), Rat(-435), Rat(574),
                                      Rat(-264), Rat(0)})),
                    -1);
        add_formula(shape_of(n - 6, {1, 1, 1, 1, 1, 1}),
                    3 * poly(n, {Rat(3), Rat(-210), Rat(1585), Rat(-4050), Rat(3632), Rat(-480)}) /
                        (2 * poly(n, {Rat(1), Rat(-21), Rat(175), Rat(-735), Rat(1624),
                                      Rat(-1764), Rat(720)})),
                    -1);
    }
    return cs;
}

}  // namespace

std::vector<EigenClaim> low_dim_eigen_report(const Spectrum& spectrum, int k) {
    std::vector<EigenClaim> out;
    for (const auto& spec : claims_for(spectrum.scheme.n, k)) {
        EigenClaim c;
        c.shape = spec.shape;
        c.value = spectrum.value_of(spec.shape);
        c.claim = spec.text;
        c.ok = true;
        if (spec.expected && c.value != *spec.expected) c.ok = false;
        if (spec.sign_floor == 0 && !(c.value > 0)) c.ok = false;
        if (spec.sign_floor == -1 && !(c.value > -1)) c.ok = false;
        out.push_back(std::move(c));
    }
    return out;
}

Certificate certify(int n, int k, const CertifyOptions& opt) {
    if (k < 3 || k > 5) throw UnsupportedError("certify: k must be 3, 4 or 5");
    if (n < 2 * k + 1) throw UnsupportedError("certify: need n >= 2k+1");

    Certificate cert;
    cert.n = n;
    cert.k = k;

    if (closed_form_in_range(n, k)) {
        cert.provenance = closed_form_section(n, k);
        bool even = n % 2 == 0;
        switch (k) {
            case 3: cert.scheme = even ? scheme_k3_even(n) : scheme_k3_odd(n); break;
            case 4: cert.scheme = even ? scheme_k4_even(n) : scheme_k4_odd(n); break;
            default: cert.scheme = even ? scheme_k5_even(n) : scheme_k5_odd(n); break;
        }
    } else {
        cert.provenance = "lp-search";
        cert.from_lp = true;
        FeasibilityOptions fopt;
        fopt.even_only = true;  // the two-component argument needs even classes
        fopt.max_partitions = opt.max_partitions;
        fopt.threads = opt.threads;
        FeasibilityResult fr = feasibility_search(n, k, fopt);
        cert.lp_iterations = fr.simplex_iterations;
        if (fr.status == FeasibilityResult::Status::undecided)
            throw UndecidedError("certify: weight search undecided: " + fr.note);
        if (fr.status == FeasibilityResult::Status::infeasible)
            throw UndecidedError("certify: no feasible even-class weighting: " + fr.note);
        cert.scheme = std::move(fr.scheme);
    }

    Spectrum sp = full_spectrum(cert.scheme, opt.threads);
    const Rat alpha = Rat(binomial(n, k) - 1);
    const Partition top = Partition(std::vector<int>{n});
    const Partition ones = Partition::unchecked(std::vector<int>(static_cast<std::size_t>(n), 1));

    cert.max_eig = sp.max_value;
    cert.min_eig = sp.min_value;
    cert.max_attained_at = sp.argmax;
    cert.min_attained_at = sp.argmin;

    auto violation = [&](const std::string& msg) { cert.violations.push_back(msg); };

    if (sp.max_value != alpha)
        violation("largest eigenvalue " + rat_to_string(sp.max_value) + " != C(n,k)-1");
    if (sp.min_value != -1)
        violation("least eigenvalue " + rat_to_string(sp.min_value) + " != -1");

    // Multiplicity, three ways: class parities, sign-character eigenvalue,
    // and the attainment set of the maximum.
    bool all_even = cert.scheme.all_even();
    int mult_parity = max_multiplicity(cert.scheme);
    bool ones_attains = std::find(sp.argmax.begin(), sp.argmax.end(), ones) != sp.argmax.end();
    cert.multiplicity = mult_parity;
    if ((mult_parity == 2) != all_even) violation("multiplicity disagrees with class parity");
    if ((mult_parity == 2) != ones_attains)
        violation("multiplicity disagrees with the sign-character attainment");
    std::size_t expected_attain = mult_parity == 2 ? 2 : 1;
    if (sp.argmax.size() != expected_attain)
        violation("largest eigenvalue attained " + std::to_string(sp.argmax.size()) +
                  " times, expected " + std::to_string(expected_attain));
    if (std::find(sp.argmax.begin(), sp.argmax.end(), top) == sp.argmax.end())
        violation("largest eigenvalue not afforded by the trivial character");

    for (int i = 1; i <= k; ++i) {
        Partition p = shape_of(n - i, {i});
        if (sp.value_of(p) != -1)
            violation("eigenvalue at " + p.to_string() + " is " + rat_to_string(sp.value_of(p)) +
                      ", not -1");
    }

    if (all_even && !transpose_pairing_check(cert.scheme, opt.threads))
        violation("conjugate shapes received different eigenvalues");

    cert.tail_threshold = tail_threshold_for(n, k);
    TailReport tail = verify_tail(sp, cert.tail_threshold);
    cert.tail_max_abs = tail.max_abs;
    cert.tail_within_unit = tail.ok;
    if (!cert.from_lp && !tail.ok)
        violation("tail eigenvalue at " + tail.counterexample->to_string() +
                  " has |xi| >= 1");

    if (!cert.from_lp) {
        for (const auto& claim : low_dim_eigen_report(sp, k))
            if (!claim.ok)
                violation("claim " + claim.claim + " fails at " + claim.shape.to_string() +
                          " (value " + rat_to_string(claim.value) + ")");
    }

    for (std::size_t i = 0; i < sp.shapes.size(); ++i)
        if (sp.values[i] <= 0) cert.low_eigenvalues.emplace_back(sp.shapes[i], sp.values[i]);

    cert.certified = cert.violations.empty();
    if (cert.certified) {
        Rat bound = ratio_bound(factorial(n), cert.max_eig, cert.min_eig);
        Int expected = factorial(k) * factorial(n - k);
        if (bound != Rat(expected)) {
            violation("ratio bound " + rat_to_string(bound) + " != k!(n-k)!");
            cert.certified = false;
        } else {
            cert.sym_bound = expected;
            cert.sym_density_one = true;
            if (cert.multiplicity == 2) {
                cert.alt_bound = expected / 2;
                cert.alt_density_one = true;
            }
        }
    }
    return cert;
}

}  // namespace ekr
