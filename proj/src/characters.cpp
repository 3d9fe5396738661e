#include "ekr/characters.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ekr {

Int dimension(const Partition& shape) {
    const int n = shape.n();
    if (n == 0) return 1;
    Partition conj = conjugate(shape);
    Int hooks = 1;
    for (std::size_t i = 0; i < shape.num_parts(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            int arm = shape[i] - j - 1;
            int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    Int fact = factorial(n);
    Int f = fact / hooks;
    if (f * hooks != fact) throw std::logic_error("hook product does not divide n!");
    return f;
}

namespace {

// Memo key: shape parts, 0 separator, remaining cycle-type parts.
struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

constexpr int kCacheShards = 64;

struct CacheShard {
    std::shared_mutex mu;
    std::unordered_map<std::vector<int>, Int, KeyHash> map;
};

std::array<CacheShard, kCacheShards>& cache_shards() {
    static std::array<CacheShard, kCacheShards> shards;
    return shards;
}

std::vector<int> make_key(const std::vector<int>& shape, const std::vector<int>& mu,
                          std::size_t idx) {
    std::vector<int> key;
    key.reserve(shape.size() + 1 + mu.size() - idx);
    key.insert(key.end(), shape.begin(), shape.end());
    key.push_back(0);
    key.insert(key.end(), mu.begin() + static_cast<std::ptrdiff_t>(idx), mu.end());
    return key;
}

// Rim-hook recursion on beta-numbers: removing a hook of length L from the
// shape with beta set B means replacing some b in B (b >= L, b-L not in B) by
// b-L; the height is the number of betas strictly between b-L and b.
Int mn_rec(const std::vector<int>& shape, const std::vector<int>& mu, std::size_t idx) {
    if (shape.empty()) return 1;
    const bool interior = idx > 0;
    std::vector<int> key;
    if (interior) {
        key = make_key(shape, mu, idx);
        auto& shard = cache_shards()[KeyHash{}(key) % kCacheShards];
        std::shared_lock lock(shard.mu);
        auto it = shard.map.find(key);
        if (it != shard.map.end()) return it->second;
    }
    const int L = mu[idx];
    const int m = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < m; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (m - 1 - i);
    Int total = 0;
    for (int i = 0; i < m; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        if (b < L) break;  // beta is strictly decreasing
        int target = b - L;
        bool clash = false;
        int height = 0;
        for (int j = i + 1; j < m; ++j) {
            int bj = beta[static_cast<std::size_t>(j)];
            if (bj == target) {
                clash = true;
                break;
            }
            if (bj > target) ++height;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = target;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nshape;
        nshape.reserve(nbeta.size());
        for (int t = 0; t < m; ++t) {
            int part = nbeta[static_cast<std::size_t>(t)] - (m - 1 - t);
            if (part > 0) nshape.push_back(part);
        }
        Int sub = mn_rec(nshape, mu, idx + 1);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    if (interior) {
        auto& shard = cache_shards()[KeyHash{}(key) % kCacheShards];
        std::unique_lock lock(shard.mu);
        shard.map.emplace(std::move(key), total);
    }
    return total;
}

}  // namespace

Int mn_character(const Partition& shape, const Partition& cycle_type) {
    if (shape.n() != cycle_type.n())
        throw std::invalid_argument("mn_character: shape and cycle type must partition the same n");
    if (shape.n() == 0) return 1;
    return mn_rec(shape.parts(), cycle_type.parts(), 0);
}

void clear_character_cache() {
    for (auto& shard : cache_shards()) {
        std::unique_lock lock(shard.mu);
        shard.map.clear();
    }
}

void load_character_cache(const std::string& dir) {
    if (dir.empty()) return;
    std::ifstream in(std::filesystem::path(dir) / "mn-cache-v1.txt");
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> key;
        std::string tok;
        Int value;
        bool ok = true;
        while (ls >> tok) {
            if (tok == "=") {
                std::string v;
                if (!(ls >> v)) { ok = false; break; }
                value = Int(v);
                break;
            }
            try {
                key.push_back(std::stoi(tok));
            } catch (...) { ok = false; break; }
        }
        if (!ok || key.empty()) continue;
        auto& shard = cache_shards()[KeyHash{}(key) % kCacheShards];
        std::unique_lock lock(shard.mu);
        shard.map.emplace(std::move(key), value);
    }
}

void save_character_cache(const std::string& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(std::filesystem::path(dir) / "mn-cache-v1.txt", std::ios::trunc);
    if (!out) return;
    for (auto& shard : cache_shards()) {
        std::shared_lock lock(shard.mu);
        for (const auto& [key, value] : shard.map) {
            for (std::size_t i = 0; i < key.size(); ++i) out << key[i] << ' ';
            out << "= " << value.str() << '\n';
        }
    }
}

std::vector<Partition> low_dim_partitions(int n, const Int& bound) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n))
        if (dimension(p) < bound) out.push_back(p);
    return out;
}

std::vector<Partition> branch_restriction(const Partition& shape) {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < shape.num_parts(); ++i) {
        bool corner = (i + 1 == shape.num_parts()) || shape[i] > shape[i + 1];
        if (!corner) continue;
        std::vector<int> parts = shape.parts();
        parts[i] -= 1;
        if (parts[i] == 0) parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(Partition::unchecked(std::move(parts)));
    }
    return out;
}

Int fixed_k_subsets(const Partition& cycle_type, int k) {
    if (k < 0 || k > cycle_type.n())
        throw std::invalid_argument("fixed_k_subsets: need 0 <= k <= n");
    std::vector<Int> dp(static_cast<std::size_t>(k) + 1);
    dp[0] = 1;
    std::size_t i = 0;
    while (i < cycle_type.num_parts()) {
        std::size_t j = i;
        while (j < cycle_type.num_parts() && cycle_type[j] == cycle_type[i]) ++j;
        int v = cycle_type[i];
        int mult = static_cast<int>(j - i);
        if (v <= k) {
            // choose how many of the `mult` cycles of length v to include
            std::vector<Int> next(dp.size());
            for (int s = 0; s <= k; ++s) {
                if (dp[static_cast<std::size_t>(s)] == 0) continue;
                Int choose = 1;
                for (int c = 0; c <= mult && s + c * v <= k; ++c) {
                    next[static_cast<std::size_t>(s + c * v)] += dp[static_cast<std::size_t>(s)] * choose;
                    choose = choose * (mult - c) / (c + 1);
                }
            }
            dp.swap(next);
        }
        i = j;
    }
    return dp[static_cast<std::size_t>(k)];
}

PermCharDecomposition perm_char_decompose(int n, int k) {
    if (k < 0 || 2 * k > n)
        throw std::invalid_argument("perm_char_decompose: need 0 <= k <= n/2");
    PermCharDecomposition out;
    out.n = n;
    out.k = k;
    const Int fact = factorial(n);
    const auto all = enumerate_partitions(n);
    std::vector<Int> sizes, fixes;
    sizes.reserve(all.size());
    fixes.reserve(all.size());
    for (const auto& mu : all) {
        sizes.push_back(class_size(mu));
        fixes.push_back(fixed_k_subsets(mu, k));
    }
    for (const auto& lam : all) {
        Int inner = 0;
        for (std::size_t j = 0; j < all.size(); ++j)
            inner += sizes[j] * fixes[j] * mn_character(lam, all[j]);
        Int mult = inner / fact;
        if (mult * fact != inner)
            throw std::logic_error("perm_char_decompose: non-integer multiplicity at " +
                                   lam.to_string());
        if (mult != 0) out.multiplicities.emplace(lam, mult);
    }
    // The decomposition must be sum_{i=0..k} chi^{[n-i,i]}.
    for (const auto& [lam, mult] : out.multiplicities) {
        bool hook2 = lam.num_parts() <= 2 && (lam.num_parts() < 2 || lam[1] <= k);
        if (!hook2 || mult != 1)
            throw std::logic_error("perm_char_decompose: unexpected constituent " +
                                   lam.to_string());
    }
    if (out.multiplicities.size() != static_cast<std::size_t>(k) + 1)
        throw std::logic_error("perm_char_decompose: wrong number of constituents");
    return out;
}

namespace {

Partition shape_of(int first, std::initializer_list<int> rest) {
    std::vector<int> parts{first};
    parts.insert(parts.end(), rest.begin(), rest.end());
    return Partition(std::move(parts));
}

struct ExceptionRow {
    const char* label;
    std::function<Partition(int)> shape;    // partition of n+1
    std::function<Rat(int)> excess;         // dimension - reference binomial
};

// Excess rows over C(n+1,4), from the k=4 exception table (n >= 15).
const std::vector<ExceptionRow>& k4_rows() {
    static const std::vector<ExceptionRow> rows = {
        {"[n-3,3,1]", [](int n) { return shape_of(n - 3, {3, 1}); },
         [](int n) { return Rat((n - 7)) * (n - 2) * n * (n + 1) / 12; }},
        {"[n-3,2^2]", [](int n) { return shape_of(n - 3, {2, 2}); },
         [](int n) { return Rat(n) * (n + 1) * (Rat(n) * n - 11 * n + 22) / 24; }},
        {"[n-3,2,1^2]", [](int n) { return shape_of(n - 3, {2, 1, 1}); },
         [](int n) { return Rat(n - 6) * (n - 2) * (n - 1) * (n + 1) / 12; }},
        {"[n-4,5]", [](int n) { return shape_of(n - 4, {5}); },
         [](int n) { return Rat(n - 13) * (n - 2) * (n - 1) * n * (n + 1) / 120; }},
        {"[n-4,4,1]", [](int n) { return shape_of(n - 4, {4, 1}); },
         [](int n) {
             return Rat(n - 1) * n * (n + 1) * (Rat(n) * n - Rat(45, 4) * n + Rat(47, 2)) / 30;
         }},
        {"[n-4,2,1^3]", [](int n) { return shape_of(n - 4, {2, 1, 1, 1}); },
         [](int n) {
             return Rat(n - 2) * (n - 1) * (n + 1) * (Rat(n) * n - Rat(37, 4) * n + 15) / 30;
         }},
        {"[n-4,1^5]", [](int n) { return shape_of(n - 4, {1, 1, 1, 1, 1}); },
         [](int n) { return Rat(n - 2) * (n - 1) * n * (Rat(n) * n - 12 * n + 7) / 120; }},
    };
    return rows;
}

// Excess rows over C(n+1,5), from the k=5 exception table (n >= 19).
const std::vector<ExceptionRow>& k5_rows() {
    static const std::vector<ExceptionRow> rows = {
        {"[n-4,4,1]", [](int n) { return shape_of(n - 4, {4, 1}); },
         [](int n) { return (Rat(n) - Rat(26, 3)) * (n - 3) * (n - 1) * n * (n + 1) / 40; }},
        {"[n-4,2,1^3]", [](int n) { return shape_of(n - 4, {2, 1, 1, 1}); },
         [](int n) { return (Rat(n) - Rat(20, 3)) * (n - 3) * (n - 2) * (n - 1) * (n + 1) / 40; }},
        {"[n-4,3,2]", [](int n) { return shape_of(n - 4, {3, 2}); },
         [](int n) {
             return Rat(n - 1) * n * (n + 1) * (Rat(n) * n - Rat(45, 4) * n + Rat(57, 2)) / 30;
         }},
        {"[n-4,3,1^2]", [](int n) { return shape_of(n - 4, {3, 1, 1}); },
         [](int n) { return Rat(n - 7) * (n - 3) * (n - 2) * n * (n + 1) / 24; }},
        {"[n-4,2^2,1]", [](int n) { return shape_of(n - 4, {2, 2, 1}); },
         [](int n) {
             return Rat(n - 2) * n * (n + 1) * (Rat(n) * n - Rat(41, 4) * n + Rat(97, 4)) / 30;
         }},
        {"[n-5,6]", [](int n) { return shape_of(n - 5, {6}); },
         [](int n) { return Rat(n - 16) * (n - 3) * (n - 2) * (n - 1) * n * (n + 1) / 720; }},
        {"[n-5,5,1]", [](int n) { return shape_of(n - 5, {5, 1}); },
         [](int n) {
             return Rat(n - 2) * (n - 1) * n * (n + 1) *
                    (Rat(n) * n - Rat(71, 5) * n + Rat(198, 5)) / 144;
         }},
        {"[n-5,2,1^4]", [](int n) { return shape_of(n - 5, {2, 1, 1, 1, 1}); },
         [](int n) {
             return Rat(n - 3) * (n - 2) * (n - 1) * (n + 1) *
                    (Rat(n) * n - Rat(56, 5) * n + 24) / 144;
         }},
        {"[n-5,1^6]", [](int n) { return shape_of(n - 5, {1, 1, 1, 1, 1, 1}); },
         [](int n) { return Rat(n - 14) * (n - 3) * (n - 2) * n * (n - 1) * (n - 1) / 720; }},
    };
    return rows;
}

// Excess rows over 2*C(n+1,6), from the k=6 exception table (n >= 27).
const std::vector<ExceptionRow>& k6_rows() {
    static const std::vector<ExceptionRow> rows = {
        {"[n-5,5,1]", [](int n) { return shape_of(n - 5, {5, 1}); },
         [](int n) { return Rat(n - 13) * (n - 4) * (n - 2) * (n - 1) * n * (n + 1) / 240; }},
        {"[n-5,2,1^4]", [](int n) { return shape_of(n - 5, {2, 1, 1, 1, 1}); },
         [](int n) { return Rat(n - 10) * (n - 4) * (n - 3) * (n - 2) * (n - 1) * (n + 1) / 240; }},
        {"[n-5,4,2]", [](int n) { return shape_of(n - 5, {4, 2}); },
         [](int n) {
             return Rat(n - 2) * (n - 1) * n * (n + 1) * (7 * Rat(n) * n - 103 * n + 336) / 720;
         }},
        {"[n-5,4,1^2]", [](int n) { return shape_of(n - 5, {4, 1, 1}); },
         [](int n) {
             return (Rat(n) - Rat(19, 2)) * (n - 4) * (n - 3) * (n - 1) * n * (n + 1) / 90;
         }},
        {"[n-5,3^2]", [](int n) { return shape_of(n - 5, {3, 3}); },
         [](int n) {
             return Rat(n - 2) * (n - 1) * n * (n + 1) * (Rat(n) * n - 17 * n + 62) / 240;
         }},
        {"[n-5,3,2,1]", [](int n) { return shape_of(n - 5, {3, 2, 1}); },
         [](int n) {
             return Rat(n - 8) * (7 * Rat(n) - 34) * (n - 3) * (n - 1) * n * (n + 1) / 360;
         }},
        {"[n-5,3,1^3]", [](int n) { return shape_of(n - 5, {3, 1, 1, 1}); },
         [](int n) {
             return (Rat(n) - Rat(17, 2)) * (n - 4) * (n - 3) * (n - 2) * n * (n + 1) / 90;
         }},
        {"[n-5,2^3]", [](int n) { return shape_of(n - 5, {2, 2, 2}); },
         [](int n) {
             return Rat(n - 4) * (n - 1) * n * (n + 1) * (Rat(n) * n - 15 * n + 46) / 240;
         }},
        {"[n-5,2^2,1^2]", [](int n) { return shape_of(n - 5, {2, 2, 1, 1}); },
         [](int n) {
             return Rat(n - 3) * (n - 2) * n * (n + 1) *
                    (7 * Rat(n) * n - 89 * n + 262) / 720;
         }},
        {"[n-6,7]", [](int n) { return shape_of(n - 6, {7}); },
         [](int n) {
             return Rat(n - 26) * (n - 4) * (n - 3) * (n - 2) * (n - 1) * n * (n + 1) / 5040;
         }},
        {"[n-6,6,1]", [](int n) { return shape_of(n - 6, {6, 1}); },
         [](int n) {
             return Rat(n - 3) * (n - 2) * (n - 1) * n * (n + 1) *
                    (Rat(n) * n - Rat(55, 3) * n + Rat(193, 3)) / 840;
         }},
        {"[n-6,2,1^5]", [](int n) { return shape_of(n - 6, {2, 1, 1, 1, 1, 1}); },
         [](int n) {
             return Rat(n - 4) * (n - 3) * (n - 2) * (n - 1) * (n + 1) *
                    (Rat(n) * n - Rat(43, 3) * n + 35) / 840;
         }},
        {"[n-6,1^7]", [](int n) { return shape_of(n - 6, {1, 1, 1, 1, 1, 1, 1}); },
         [](int n) {
             return Rat(n - 4) * (n - 3) * (n - 2) * (n - 1) * n *
                    (Rat(n) * n - 25 * n + 16) / 5040;
         }},
    };
    return rows;
}

}  // namespace

GoldenReport exception_table_check(int n, int k_case) {
    const std::vector<ExceptionRow>* rows = nullptr;
    Int ref;
    int min_n = 0;
    switch (k_case) {
        case 4: rows = &k4_rows(); ref = binomial(n + 1, 4); min_n = 15; break;
        case 5: rows = &k5_rows(); ref = binomial(n + 1, 5); min_n = 19; break;
        case 6: rows = &k6_rows(); ref = 2 * binomial(n + 1, 6); min_n = 27; break;
        default: throw std::invalid_argument("exception_table_check: k_case must be 4, 5 or 6");
    }
    if (n < min_n)
        throw std::invalid_argument("exception_table_check: n below the table's range");
    GoldenReport report;
    for (const auto& row : *rows) {
        Partition shape = row.shape(n);
        Int dim = dimension(shape);
        Rat excess = row.excess(n);
        Rat actual = Rat(dim - ref);
        if (actual != excess || actual <= 0) {
            report.ok = false;
            report.failures.push_back(std::string(row.label) + " at n=" + std::to_string(n) +
                                      ": dimension excess " + rat_to_string(actual) +
                                      " vs table " + rat_to_string(excess));
        }
    }
    return report;
}

namespace {

std::vector<Partition> grid_shapes(int n, int count) {
    // Paper row order; count = 9 (k=3), 14 (k=4) or 21 (k=5).
    std::vector<Partition> s;
    s.push_back(shape_of(n, {}));
    s.push_back(shape_of(n - 1, {1}));
    s.push_back(shape_of(n - 2, {2}));
    s.push_back(shape_of(n - 2, {1, 1}));
    s.push_back(shape_of(n - 3, {3}));
    s.push_back(shape_of(n - 3, {2, 1}));
    s.push_back(shape_of(n - 3, {1, 1, 1}));
    s.push_back(shape_of(n - 4, {4}));
    s.push_back(shape_of(n - 4, {1, 1, 1, 1}));
    if (count > 9) {
        s.push_back(shape_of(n - 4, {3, 1}));
        s.push_back(shape_of(n - 4, {2, 2}));
        s.push_back(shape_of(n - 4, {2, 1, 1}));
        s.push_back(shape_of(n - 5, {5}));
        s.push_back(shape_of(n - 5, {1, 1, 1, 1, 1}));
    }
    if (count > 14) {
        s.push_back(shape_of(n - 5, {4, 1}));
        s.push_back(shape_of(n - 5, {3, 2}));
        s.push_back(shape_of(n - 5, {3, 1, 1}));
        s.push_back(shape_of(n - 5, {2, 2, 1}));
        s.push_back(shape_of(n - 5, {2, 1, 1, 1}));
        s.push_back(shape_of(n - 6, {6}));
        s.push_back(shape_of(n - 6, {1, 1, 1, 1, 1, 1}));
    }
    return s;
}

}  // namespace

CharGrid character_grid(const std::string& case_name, int n) {
    CharGrid grid;
    grid.case_name = case_name;
    grid.n = n;
    if (case_name == "k3-even") {
        grid.shapes = grid_shapes(n, 9);
        grid.classes = {shape_of(n - 5, {5}), shape_of(n - 6, {2, 2, 2}),
                        shape_of(n - 6, {4, 1, 1})};
    } else if (case_name == "k3-odd") {
        grid.shapes = grid_shapes(n, 9);
        grid.classes = {shape_of(n, {}), shape_of(n - 2, {1, 1}), shape_of(n - 2, {2}),
                        shape_of(n - 5, {4, 1}), shape_of(n - 1, {1})};
    } else if (case_name == "k4-even") {
        grid.shapes = grid_shapes(n, 14);
        grid.classes = {shape_of(n - 1, {1}), shape_of(n - 2, {2}), shape_of(n - 3, {3}),
                        shape_of(n - 3, {1, 1, 1}), shape_of(n - 7, {5, 1, 1})};
    } else if (case_name == "k4-odd") {
        grid.shapes = grid_shapes(n, 14);
        grid.classes = {shape_of(n, {}),          shape_of(n - 2, {1, 1}),
                        shape_of(n - 3, {2, 1}),  shape_of(n - 6, {3, 3}),
                        shape_of(n - 7, {6, 1}),  shape_of(n - 9, {6, 1, 1, 1})};
    } else if (case_name == "k5-even") {
        grid.shapes = grid_shapes(n, 21);
        grid.classes = {shape_of(n - 1, {1}),        shape_of(n - 2, {2}),
                        shape_of(n - 3, {1, 1, 1}),  shape_of(n - 4, {4}),
                        shape_of(n - 4, {2, 1, 1}),  shape_of(n - 6, {6}),
                        shape_of(n - 6, {2, 2, 2}),  shape_of(n - 7, {3, 3, 1}),
                        shape_of(n - 8, {6, 1, 1}),  shape_of(n - 10, {6, 1, 1, 1, 1})};
    } else if (case_name == "k5-odd") {
        grid.shapes = grid_shapes(n, 21);
        grid.classes = {shape_of(n, {}),            shape_of(n - 2, {1, 1}),
                        shape_of(n - 3, {2, 1}),    shape_of(n - 4, {2, 2}),
                        shape_of(n - 4, {1, 1, 1, 1}), shape_of(n - 4, {3, 1}),
                        shape_of(n - 7, {6, 1}),    shape_of(n - 8, {4, 4}),
                        shape_of(n - 9, {6, 1, 1, 1})};
    } else {
        throw std::invalid_argument("character_grid: unknown case " + case_name);
    }
    grid.values.resize(grid.shapes.size());
    for (std::size_t r = 0; r < grid.shapes.size(); ++r) {
        grid.values[r].reserve(grid.classes.size());
        for (const auto& cls : grid.classes)
            grid.values[r].push_back(mn_character(grid.shapes[r], cls));
    }
    return grid;
}

std::vector<Partition> lemma_set_S(int n) {
    return grid_shapes(n, 9);
}

std::vector<Partition> lemma_set_T(int n) {
    return {shape_of(n - 4, {3, 1}), shape_of(n - 4, {2, 2}), shape_of(n - 4, {2, 1, 1}),
            shape_of(n - 5, {5}), shape_of(n - 5, {1, 1, 1, 1, 1})};
}

std::vector<Partition> lemma_set_U(int n) {
    return {shape_of(n - 5, {4, 1}),    shape_of(n - 5, {3, 2}),
            shape_of(n - 5, {3, 1, 1}), shape_of(n - 5, {2, 2, 1}),
            shape_of(n - 5, {2, 1, 1, 1}), shape_of(n - 6, {6}),
            shape_of(n - 6, {1, 1, 1, 1, 1, 1})};
}

}  // namespace ekr
