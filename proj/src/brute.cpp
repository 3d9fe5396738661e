#include "ekr/brute.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ekr/characters.hpp"

namespace ekr {

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<int> lens;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition::unchecked(std::move(lens));
}

int perm_sign(const Perm& p) {
    return sign(cycle_type(p));
}

std::string perm_to_string(const Perm& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << static_cast<int>(p[i]) + 1;
    }
    os << ']';
    return os.str();
}

DerangementGraph::DerangementGraph(Group group, int n, int k, std::size_t cap)
    : group_(group), n_(n), k_(k) {
    if (k < 1 || k >= n) throw std::invalid_argument("derangement graph: need 1 <= k < n");
    Int order = factorial(n);
    if (group == Group::alt) order /= 2;
    if (order > Int(cap))
        throw std::invalid_argument("derangement graph: group order exceeds cap " +
                                    std::to_string(cap));
    Perm p = identity_perm(n);
    do {
        if (group == Group::sym || perm_sign(p) == 1) vertices_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& t : enumerate_partitions(n))
        if (is_k_derangement(t, k)) derangement_types_.push_back(t);
    finish_adjacency();
}

void DerangementGraph::finish_adjacency() {
    const std::size_t v = vertices_.size();
    blocks_ = (v + 63) / 64;
    rows_.assign(v * blocks_, 0);
    std::set<Partition> dset(derangement_types_.begin(), derangement_types_.end());
    std::vector<Perm> inverses(v);
    for (std::size_t i = 0; i < v; ++i) inverses[i] = inverse(vertices_[i]);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            if (dset.count(cycle_type(compose(vertices_[j], inverses[i])))) {
                rows_[i * blocks_ + j / 64] |= 1ull << (j % 64);
                rows_[j * blocks_ + i / 64] |= 1ull << (i % 64);
            }
        }
    }
    degree_ = 0;
    for (std::size_t b = 0; b < blocks_; ++b)
        degree_ += static_cast<std::size_t>(__builtin_popcountll(rows_[b]));
}

DerangementGraph DerangementGraph::translated(const Perm& x) const {
    DerangementGraph g;
    g.group_ = group_;
    g.n_ = n_;
    g.k_ = k_;
    g.derangement_types_ = derangement_types_;
    g.vertices_.reserve(vertices_.size());
    for (const auto& v : vertices_) g.vertices_.push_back(compose(v, x));
    std::sort(g.vertices_.begin(), g.vertices_.end());
    g.finish_adjacency();
    return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

int first_bit(const Bits& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(b[i])));
    return -1;
}

// Greedy clique cover of the candidate set: a coclique meets each clique at
// most once, so the number of cliques bounds the coclique size from above.
std::size_t clique_cover_bound(const DerangementGraph& g, Bits cand) {
    std::size_t cliques = 0;
    const std::size_t blocks = g.blocks_per_row();
    while (true) {
        int v = first_bit(cand);
        if (v < 0) break;
        cand[static_cast<std::size_t>(v) / 64] &= ~(1ull << (v % 64));
        Bits avail(blocks);
        const std::uint64_t* row = g.row(static_cast<std::size_t>(v));
        for (std::size_t b = 0; b < blocks; ++b) avail[b] = cand[b] & row[b];
        while (true) {
            int u = first_bit(avail);
            if (u < 0) break;
            cand[static_cast<std::size_t>(u) / 64] &= ~(1ull << (u % 64));
            const std::uint64_t* urow = g.row(static_cast<std::size_t>(u));
            avail[static_cast<std::size_t>(u) / 64] &= ~(1ull << (u % 64));
            for (std::size_t b = 0; b < blocks; ++b) avail[b] &= urow[b];
        }
        ++cliques;
    }
    return cliques;
}

struct MisSearch {
    const DerangementGraph& g;
    std::vector<int> best;
    std::vector<int> chosen;
    bool collect_all = false;
    std::size_t target = 0;                 // for collect_all
    std::vector<std::vector<int>> optima;   // cocliques of size target

    void run(Bits cand) {
        if (collect_all) {
            if (chosen.size() + popcount(cand) < target) return;
        } else if (chosen.size() + popcount(cand) <= best.size()) {
            return;
        }
        int v = first_bit(cand);
        if (v < 0) {
            if (collect_all) {
                if (chosen.size() == target) optima.push_back(chosen);
            } else if (chosen.size() > best.size()) {
                best = chosen;
            }
            return;
        }
        if (!collect_all &&
            chosen.size() + clique_cover_bound(g, cand) <= best.size())
            return;
        // Branch on the lexicographically first candidate: include, then exclude.
        Bits incl = cand;
        incl[static_cast<std::size_t>(v) / 64] &= ~(1ull << (v % 64));
        const std::uint64_t* row = g.row(static_cast<std::size_t>(v));
        for (std::size_t b = 0; b < incl.size(); ++b) incl[b] &= ~row[b];
        chosen.push_back(v);
        run(incl);
        chosen.pop_back();
        cand[static_cast<std::size_t>(v) / 64] &= ~(1ull << (v % 64));
        run(cand);
    }
};

// Vertex set of the stabilizer coclique of the k-subset {0..k-1}.
std::vector<int> canonical_members(const DerangementGraph& g) {
    std::vector<int> out;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        const Perm& p = g.vertices()[i];
        bool stab = true;
        for (int x = 0; x < g.k(); ++x) stab = stab && p[static_cast<std::size_t>(x)] < g.k();
        if (stab) out.push_back(static_cast<int>(i));
    }
    return out;
}

Bits non_neighbours_of_identity(const DerangementGraph& g) {
    const std::size_t v = g.num_vertices();
    Bits cand((v + 63) / 64, 0);
    for (std::size_t i = 1; i < v; ++i)
        if (!g.adjacent(0, i)) cand[i / 64] |= 1ull << (i % 64);
    return cand;
}

}  // namespace

CocliqueWitness max_coclique(const DerangementGraph& graph) {
    // Vertex-transitivity: some maximum coclique contains the identity, which
    // is vertex 0 in lexicographic order.
    MisSearch search{graph};
    search.best = canonical_members(graph);  // warm start with the canonical coclique
    search.chosen = {0};
    search.run(non_neighbours_of_identity(graph));

    CocliqueWitness w;
    std::vector<int> ids = search.best;
    std::sort(ids.begin(), ids.end());
    for (int i : ids) w.members.push_back(graph.vertices()[static_cast<std::size_t>(i)]);
    w.size = w.members.size();
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (graph.adjacent(static_cast<std::size_t>(ids[a]), static_cast<std::size_t>(ids[b])))
                throw std::logic_error("max_coclique: witness is not a coclique");

    // The witness contains the identity, so "canonical" means: equal to the
    // full setwise stabilizer of some k-subset.
    const int n = graph.n(), k = graph.k();
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        std::vector<char> in_s(static_cast<std::size_t>(n), 0);
        for (int x : subset) in_s[static_cast<std::size_t>(x)] = 1;
        bool all_stab = true;
        for (const auto& m : w.members) {
            for (int x : subset)
                if (!in_s[m[static_cast<std::size_t>(x)]]) {
                    all_stab = false;
                    break;
                }
            if (!all_stab) break;
        }
        if (all_stab) {
            std::size_t stab_size = 0;
            for (const auto& vtx : graph.vertices()) {
                bool s = true;
                for (int x : subset) s = s && in_s[vtx[static_cast<std::size_t>(x)]];
                stab_size += s;
            }
            if (stab_size == w.size) {
                w.is_canonical = true;
                break;
            }
        }
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return w;
}

Rat intersection_density(Group group, int n, int k, std::size_t cap) {
    DerangementGraph g(group, n, k, cap);
    CocliqueWitness w = max_coclique(g);
    Int order = factorial(n);
    if (group == Group::alt) order /= 2;
    Rat stab = Rat(order) * Rat(factorial(k) * factorial(n - k)) / Rat(factorial(n));
    return Rat(Int(w.size)) / stab;
}

bool canonical_max_check(Group group, int n, int k) {
    DerangementGraph g(group, n, k, 720);
    CocliqueWitness w = max_coclique(g);

    MisSearch search{g};
    search.collect_all = true;
    search.target = w.size;
    search.chosen = {0};
    search.run(non_neighbours_of_identity(g));

    // Stabilizer vertex sets of every k-subset of [n].
    std::set<std::vector<int>> stabs;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    auto collect = [&](const std::vector<int>& s) {
        std::vector<char> in_s(static_cast<std::size_t>(n), 0);
        for (int x : s) in_s[static_cast<std::size_t>(x)] = 1;
        std::vector<int> members;
        for (std::size_t i = 0; i < g.num_vertices(); ++i) {
            const Perm& p = g.vertices()[i];
            bool stab = true;
            for (int x : s) stab = stab && in_s[p[static_cast<std::size_t>(x)]];
            if (stab) members.push_back(static_cast<int>(i));
        }
        stabs.insert(std::move(members));
    };
    // enumerate k-subsets
    for (;;) {
        collect(subset);
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    for (auto sol : search.optima) {
        std::sort(sol.begin(), sol.end());
        if (!stabs.count(sol)) return false;
    }
    return true;
}

MomentReport matrix_moment_oracle(const WeightScheme& scheme) {
    if (scheme.n > 6)
        throw std::invalid_argument("matrix_moment_oracle: n <= 6 so the matrix fits");
    WeightScheme nz = scheme.without_zeros();
    nz.validate();

    // Explicit n! x n! matrix; entries index the weighted classes.
    Perm p = identity_perm(scheme.n);
    std::vector<Perm> verts;
    do {
        verts.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t v = verts.size();
    std::vector<Perm> inv(v);
    for (std::size_t i = 0; i < v; ++i) inv[i] = inverse(verts[i]);

    const int S = static_cast<int>(nz.entries.size());
    std::map<Partition, int> class_index;
    for (int c = 0; c < S; ++c) class_index[nz.entries[static_cast<std::size_t>(c)].cycle_type] = c;
    std::vector<Rat> w(static_cast<std::size_t>(S));
    for (int c = 0; c < S; ++c) {
        const auto& e = nz.entries[static_cast<std::size_t>(c)];
        w[static_cast<std::size_t>(c)] = e.omega / Rat(class_size(e.cycle_type));
    }
    constexpr std::uint8_t kNone = 255;
    std::vector<std::uint8_t> M(v * v, kNone);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (i == j) continue;
            auto it = class_index.find(cycle_type(compose(verts[j], inv[i])));
            if (it != class_index.end()) M[i * v + j] = static_cast<std::uint8_t>(it->second);
        }
    }

    // trace(A), trace(A^2), trace(A^3) by counting entries per class tuple.
    std::vector<std::int64_t> pair_count(static_cast<std::size_t>(S) * S, 0);
    std::vector<std::int64_t> triple_count(static_cast<std::size_t>(S) * S * S, 0);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            std::uint8_t c1 = M[i * v + j];
            if (c1 == kNone) continue;
            std::uint8_t c2 = M[j * v + i];
            if (c2 != kNone) ++pair_count[static_cast<std::size_t>(c1) * S + c2];
            for (std::size_t t = 0; t < v; ++t) {
                std::uint8_t d2 = M[j * v + t];
                if (d2 == kNone) continue;
                std::uint8_t d3 = M[t * v + i];
                if (d3 != kNone)
                    ++triple_count[(static_cast<std::size_t>(c1) * S + d2) * S + d3];
            }
        }
    }
    Rat tr1 = 0;  // zero diagonal: derangement classes never contain the identity
    Rat tr2 = 0, tr3 = 0;
    for (int a = 0; a < S; ++a)
        for (int b = 0; b < S; ++b) {
            auto cnt = pair_count[static_cast<std::size_t>(a) * S + b];
            if (cnt)
                tr2 += Rat(cnt) * w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)];
            for (int c = 0; c < S; ++c) {
                auto t3 = triple_count[(static_cast<std::size_t>(a) * S + b) * S + c];
                if (t3)
                    tr3 += Rat(t3) * w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)] *
                           w[static_cast<std::size_t>(c)];
            }
        }

    // Character side: trace(A^m) = sum_lambda (f^lambda)^2 xi_lambda^m.
    MomentReport rep;
    Rat chr[4] = {Rat(0), Rat(0), Rat(0), Rat(0)};
    for (const auto& lam : enumerate_partitions(scheme.n)) {
        Rat xi = nz.entries.empty() ? Rat(0) : eigenvalue(nz, lam);
        Rat f2 = Rat(dimension(lam) * dimension(lam));
        Rat pow = f2;
        for (int m = 1; m <= 3; ++m) {
            pow *= xi;
            chr[m] += pow;
        }
    }
    const Rat mat[4] = {Rat(0), tr1, tr2, tr3};
    for (int m = 1; m <= 3; ++m) {
        if (mat[m] != chr[m]) {
            rep.ok = false;
            rep.bad_moment = m;
            rep.matrix_side = mat[m];
            rep.character_side = chr[m];
            return rep;
        }
    }
    return rep;
}

}  // namespace ekr
