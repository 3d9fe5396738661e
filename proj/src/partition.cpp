#include "ekr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ekr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::unchecked(std::vector<int> parts) {
    Partition p;
    p.n_ = std::accumulate(parts.begin(), parts.end(), 0);
    p.parts_ = std::move(parts);
    return p;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Descending-lex successor: shrink the last part > 1, refill greedily.
    std::vector<int> cur{n};
    for (;;) {
        out.push_back(Partition::unchecked(cur));
        int i = static_cast<int>(cur.size()) - 1;
        int ones = 0;
        while (i >= 0 && cur[i] == 1) {
            ones += 1;
            --i;
        }
        if (i < 0) break;
        int head = cur[i] - 1;
        int rest = ones + 1;
        cur.resize(static_cast<std::size_t>(i));
        cur.push_back(head);
        while (rest > 0) {
            int next = std::min(head, rest);
            cur.push_back(next);
            rest -= next;
        }
    }
    return out;
}

Int partition_count(int n) {
    if (n < 0) return 0;
    std::vector<Int> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int acc = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > m && g2 > m) break;
            int s = (j % 2 == 1) ? 1 : -1;
            if (g1 <= m) acc += s * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) acc += s * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(p[0]));
    for (std::size_t j = 0; j < out.size(); ++j) {
        int cnt = 0;
        for (std::size_t i = 0; i < p.num_parts(); ++i)
            if (p[i] > static_cast<int>(j)) ++cnt;
        out[j] = cnt;
    }
    return Partition::unchecked(std::move(out));
}

Int class_size(const Partition& cycle_type) {
    Int den = 1;
    std::size_t i = 0;
    while (i < cycle_type.num_parts()) {
        std::size_t j = i;
        while (j < cycle_type.num_parts() && cycle_type[j] == cycle_type[i]) ++j;
        auto mult = static_cast<int>(j - i);
        for (int t = 1; t <= mult; ++t) den *= Int(cycle_type[i]) * t;
        i = j;
    }
    return factorial(cycle_type.n()) / den;
}

Parity parity(const Partition& cycle_type) {
    int transpositions = cycle_type.n() - static_cast<int>(cycle_type.num_parts());
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

bool has_subpartition_sum(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("has_subpartition_sum: k must be >= 1");
    // Reachable sums in 0..k as a bitmask.
    std::uint64_t reach = 1;
    const std::uint64_t mask = (k >= 63) ? ~0ull : ((1ull << (k + 1)) - 1);
    if (k < 63) {
        for (std::size_t i = 0; i < p.num_parts(); ++i) {
            if (p[i] <= k) reach = (reach | (reach << p[i])) & mask;
        }
        return (reach >> k) & 1;
    }
    std::vector<char> dp(static_cast<std::size_t>(k) + 1, 0);
    dp[0] = 1;
    for (std::size_t i = 0; i < p.num_parts(); ++i) {
        int v = p[i];
        if (v > k) continue;
        for (int s = k; s >= v; --s)
            if (dp[static_cast<std::size_t>(s - v)]) dp[static_cast<std::size_t>(s)] = 1;
    }
    return dp[static_cast<std::size_t>(k)];
}

ClassInfo class_info(const Partition& cycle_type) {
    return ClassInfo{cycle_type, class_size(cycle_type), parity(cycle_type)};
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            parts.push_back(std::stoi(tok));
        } else {
            int base = std::stoi(tok.substr(0, caret));
            int rep = std::stoi(tok.substr(caret + 1));
            if (rep < 0) throw std::invalid_argument("negative exponent in partition: " + tok);
            for (int r = 0; r < rep; ++r) parts.push_back(base);
        }
        tok.clear();
    };
    for (char c : text) {
        if (c == '[' || c == ']' || c == ' ' || c == '(' || c == ')') continue;
        if (c == ',') {
            flush();
        } else if ((c >= '0' && c <= '9') || c == '^' || c == '-') {
            tok += c;
        } else {
            throw std::invalid_argument("bad character in partition: " + text);
        }
    }
    flush();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace ekr
