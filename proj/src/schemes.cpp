#include "ekr/schemes.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "ekr/characters.hpp"

namespace ekr {

void WeightScheme::validate() const {
    if (n < 1 || k < 1 || k >= n) throw std::invalid_argument("scheme: need 1 <= k < n");
    std::set<Partition> seen;
    for (const auto& e : entries) {
        if (e.cycle_type.n() != n)
            throw std::invalid_argument("scheme: class " + e.cycle_type.to_string() +
                                        " is not a partition of n");
        if (!is_k_derangement(e.cycle_type, k))
            throw std::invalid_argument("scheme: class " + e.cycle_type.to_string() +
                                        " is not a " + std::to_string(k) + "-derangement");
        if (!seen.insert(e.cycle_type).second)
            throw std::invalid_argument("scheme: duplicate class " + e.cycle_type.to_string());
    }
}

WeightScheme WeightScheme::without_zeros() const {
    WeightScheme out{n, k, {}};
    for (const auto& e : entries)
        if (e.omega != 0) out.entries.push_back(e);
    return out;
}

Rat WeightScheme::weight_sum() const {
    Rat s = 0;
    for (const auto& e : entries) s += e.omega;
    return s;
}

bool WeightScheme::all_even() const {
    for (const auto& e : entries)
        if (e.omega != 0 && parity(e.cycle_type) == Parity::odd) return false;
    return true;
}

Rat eigenvalue(const WeightScheme& scheme, const Partition& shape) {
    if (shape.n() != scheme.n)
        throw std::invalid_argument("eigenvalue: shape must partition scheme.n");
    Rat acc = 0;
    for (const auto& e : scheme.entries) {
        if (e.omega == 0) continue;
        acc += e.omega * Rat(mn_character(shape, e.cycle_type));
    }
    return acc / Rat(dimension(shape));
}

const Rat& Spectrum::value_of(const Partition& shape) const {
    auto it = std::lower_bound(shapes.begin(), shapes.end(), shape,
                               [](const Partition& a, const Partition& b) { return b < a; });
    if (it == shapes.end() || !(*it == shape))
        throw std::invalid_argument("spectrum: unknown shape " + shape.to_string());
    return values[static_cast<std::size_t>(it - shapes.begin())];
}

Spectrum full_spectrum(const WeightScheme& scheme, int threads) {
    scheme.validate();
    Spectrum sp;
    sp.scheme = scheme.without_zeros();
    sp.shapes = enumerate_partitions(scheme.n);
    sp.values.resize(sp.shapes.size());
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(sp.shapes.size()));

    // Warm the character cache single-threaded on the largest shape so the
    // deepest interior states are present before workers fan out.
    if (!sp.shapes.empty()) (void)eigenvalue(sp.scheme, sp.shapes.back());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= sp.shapes.size()) return;
            sp.values[i] = eigenvalue(sp.scheme, sp.shapes[i]);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    sp.max_value = sp.values[0];
    sp.min_value = sp.values[0];
    for (const auto& v : sp.values) {
        if (v > sp.max_value) sp.max_value = v;
        if (v < sp.min_value) sp.min_value = v;
    }
    for (std::size_t i = 0; i < sp.shapes.size(); ++i) {
        if (sp.values[i] == sp.max_value) sp.argmax.push_back(sp.shapes[i]);
        if (sp.values[i] == sp.min_value) sp.argmin.push_back(sp.shapes[i]);
    }
    return sp;
}

int max_multiplicity(const WeightScheme& scheme) {
    WeightScheme nz = scheme.without_zeros();
    nz.validate();
    if (nz.entries.empty())
        throw std::invalid_argument("max_multiplicity: empty scheme");
    bool even = nz.all_even();
    // Independent check: the sign character sees the same row sum exactly when
    // every weighted class is even.
    Partition sign_shape = Partition::unchecked(std::vector<int>(static_cast<std::size_t>(nz.n), 1));
    bool sign_agrees = eigenvalue(nz, sign_shape) == nz.weight_sum();
    if (even != sign_agrees)
        throw std::logic_error("max_multiplicity: parity and sign-character disagree");
    return even ? 2 : 1;
}

Rat ratio_bound(const Int& num_vertices, const Rat& degree, const Rat& tau) {
    if (!(tau < 0) || !(degree > 0))
        throw std::domain_error("ratio_bound: need tau < 0 < degree");
    return Rat(num_vertices) / (1 - degree / tau);
}

Rat clique_coclique_bound(const Int& group_order, const Int& clique_or_coclique) {
    if (group_order <= 0 || clique_or_coclique <= 0)
        throw std::domain_error("clique_coclique_bound: inputs must be positive");
    return Rat(group_order) / Rat(clique_or_coclique);
}

bool transpose_pairing_check(const WeightScheme& scheme, int threads) {
    WeightScheme nz = scheme.without_zeros();
    if (!nz.all_even())
        throw std::invalid_argument("transpose_pairing_check: scheme carries an odd class");
    Spectrum sp = full_spectrum(nz, threads);
    for (std::size_t i = 0; i < sp.shapes.size(); ++i)
        if (sp.value_of(conjugate(sp.shapes[i])) != sp.values[i]) return false;
    return true;
}

}  // namespace ekr
