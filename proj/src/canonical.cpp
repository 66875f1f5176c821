#include "permlab/canonical.hpp"

#include <algorithm>
#include <mutex>

#include <nlohmann/json.hpp>

namespace permlab {

namespace {

using Dec = CanonicalTree::Dec;

// Maximal +-components: cut points b where sigma([1,b]) = {1..b}.
std::vector<Permutation> plus_components(const Permutation& sigma) {
    std::vector<Permutation> parts;
    int start = 1, run_max = 0;
    for (int i = 1; i <= sigma.size(); ++i) {
        run_max = std::max(run_max, sigma(i));
        if (run_max == i) {
            std::vector<int> idx(static_cast<size_t>(i - start + 1));
            std::iota(idx.begin(), idx.end(), start);
            parts.push_back(pattern_at(sigma, idx));
            start = i + 1;
        }
    }
    return parts;
}

std::vector<Permutation> minus_components(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<Permutation> parts;
    int start = 1, run_min = n + 1;
    for (int i = 1; i <= n; ++i) {
        run_min = std::min(run_min, sigma(i));
        if (run_min == n - i + 1) {
            std::vector<int> idx(static_cast<size_t>(i - start + 1));
            std::iota(idx.begin(), idx.end(), start);
            parts.push_back(pattern_at(sigma, idx));
            start = i + 1;
        }
    }
    return parts;
}

// Longest proper block starting at position a (block = interval mapped onto
// an interval); 0 if none of length >= 2 exists.
int longest_proper_block_from(const Permutation& sigma, int a) {
    const int n = sigma.size();
    int lo = sigma(a), hi = sigma(a), best = 0;
    for (int b = a + 1; b <= n; ++b) {
        lo = std::min(lo, sigma(b));
        hi = std::max(hi, sigma(b));
        int len = b - a + 1;
        if (len == n && a == 1) break;
        if (hi - lo + 1 == len) best = len;
    }
    return best;
}

}  // namespace

CanonicalTree decompose(const Permutation& nu) {
    if (nu.empty()) throw std::invalid_argument("decompose: empty permutation");
    if (nu.size() == 1) return CanonicalTree{};
    CanonicalTree t;
    auto plus = plus_components(nu);
    if (plus.size() >= 2) {
        t.dec = Dec::Plus;
        for (const auto& p : plus) t.children.push_back(decompose(p));
        return t;
    }
    auto minus = minus_components(nu);
    if (minus.size() >= 2) {
        t.dec = Dec::Minus;
        for (const auto& p : minus) t.children.push_back(decompose(p));
        return t;
    }
    // simple skeleton: greedy maximal proper blocks left to right
    t.dec = Dec::Simple;
    std::vector<int> block_start, block_len;
    int a = 1;
    while (a <= nu.size()) {
        int len = std::max(1, longest_proper_block_from(nu, a));
        block_start.push_back(a);
        block_len.push_back(len);
        a += len;
    }
    std::vector<int> mins;
    for (size_t i = 0; i < block_start.size(); ++i) {
        int lo = nu(block_start[i]);
        for (int j = 1; j < block_len[i]; ++j) lo = std::min(lo, nu(block_start[i] + j));
        mins.push_back(lo);
        std::vector<int> idx(static_cast<size_t>(block_len[i]));
        std::iota(idx.begin(), idx.end(), block_start[i]);
        t.children.push_back(decompose(pattern_at(nu, idx)));
    }
    t.simple = standardize_ints(mins);
    if (!is_simple(t.simple))
        throw std::logic_error("decompose: quotient is not simple for " + nu.to_string());
    return t;
}

Permutation compose(const CanonicalTree& tree) {
    validate_canonical(tree);
    std::function<Permutation(const CanonicalTree&)> rec = [&rec](const CanonicalTree& t) -> Permutation {
        if (t.dec == Dec::Leaf) return Permutation::identity(1);
        std::vector<Permutation> blocks;
        blocks.reserve(t.children.size());
        for (const auto& c : t.children) blocks.push_back(rec(c));
        const int d = static_cast<int>(t.children.size());
        Permutation skeleton = t.dec == Dec::Plus    ? Permutation::identity(d)
                               : t.dec == Dec::Minus ? Permutation::decreasing(d)
                                                     : t.simple;
        return substitute(skeleton, blocks);
    };
    return rec(tree);
}

void validate_canonical(const CanonicalTree& tree) {
    std::function<void(const CanonicalTree&, Dec)> rec = [&rec](const CanonicalTree& t, Dec parent) {
        switch (t.dec) {
            case Dec::Leaf:
                if (!t.children.empty()) throw std::invalid_argument("canonical tree: decorated leaf");
                return;
            case Dec::Plus:
            case Dec::Minus:
                if (t.children.size() < 2) throw std::invalid_argument("canonical tree: monotone arity < 2");
                if (t.dec == parent) throw std::invalid_argument("canonical tree: adjacent equal monotone decorations");
                break;
            case Dec::Simple:
                if (t.simple.size() < 4 || !is_simple(t.simple))
                    throw std::invalid_argument("canonical tree: bad simple decoration");
                if (static_cast<int>(t.children.size()) != t.simple.size())
                    throw std::invalid_argument("canonical tree: decoration arity mismatch");
                break;
        }
        for (const auto& c : t.children) rec(c, t.dec);
    };
    rec(tree, Dec::Leaf);
}

std::string CanonicalTree::to_json() const {
    nlohmann::json j;
    std::function<nlohmann::json(const CanonicalTree&)> rec = [&rec](const CanonicalTree& t) -> nlohmann::json {
        nlohmann::json node = nlohmann::json::object();
        if (t.dec == Dec::Leaf) return node;
        node["dec"] = t.dec == Dec::Plus ? "+" : t.dec == Dec::Minus ? "-" : t.simple.to_string();
        auto& arr = node["children"] = nlohmann::json::array();
        for (const auto& c : t.children) arr.push_back(rec(c));
        return node;
    };
    j = rec(*this);
    return j.dump();
}

CanonicalTree CanonicalTree::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::function<CanonicalTree(const nlohmann::json&)> rec = [&rec](const nlohmann::json& node) -> CanonicalTree {
        CanonicalTree t;
        if (!node.contains("dec")) return t;
        std::string dec = node.at("dec").get<std::string>();
        if (dec == "+")
            t.dec = Dec::Plus;
        else if (dec == "-")
            t.dec = Dec::Minus;
        else {
            t.dec = Dec::Simple;
            t.simple = Permutation::parse(dec);
        }
        for (const auto& c : node.at("children")) t.children.push_back(rec(c));
        return t;
    };
    CanonicalTree t = rec(j);
    validate_canonical(t);
    return t;
}

namespace {

// p[n] = # +-indecomposable separable permutations of size n (equals the
// #- -indecomposable count by symmetry); g[r] = weighted compositions of r
// into >= 1 parts with weight prod p[part]. Cached once, grown on demand.
struct SeparableTables {
    std::vector<bigint> p{0, 1};  // p[0] unused
    std::vector<bigint> g{0};     // g[0] = 0 placeholder (unused)

    void grow(int n) {
        while (static_cast<int>(p.size()) <= n) {
            int m = static_cast<int>(p.size());
            // g[r] for r < m are final once p[1..r] are final
            while (static_cast<int>(g.size()) < m) {
                int r = static_cast<int>(g.size());
                bigint total = p[static_cast<size_t>(r)];
                for (int first = 1; first < r; ++first) total += p[static_cast<size_t>(first)] * g[static_cast<size_t>(r - first)];
                g.push_back(total);
            }
            bigint pm = 0;
            for (int first = 1; first < m; ++first) pm += p[static_cast<size_t>(first)] * g[static_cast<size_t>(m - first)];
            p.push_back(pm);
        }
        while (static_cast<int>(g.size()) <= n) {
            int r = static_cast<int>(g.size());
            bigint total = p[static_cast<size_t>(r)];
            for (int first = 1; first < r; ++first) total += p[static_cast<size_t>(first)] * g[static_cast<size_t>(r - first)];
            g.push_back(total);
        }
    }
};

SeparableTables& tables() {
    static SeparableTables t;
    return t;
}

std::mutex& tables_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

bigint separable_plus_indecomposable_count(int n) {
    if (n < 1) throw std::invalid_argument("separable counts: n >= 1");
    std::lock_guard<std::mutex> lock(tables_mutex());
    tables().grow(n);
    return tables().p[static_cast<size_t>(n)];
}

bigint separable_count(int n) {
    if (n == 1) return 1;
    return 2 * separable_plus_indecomposable_count(n);
}

bigint uniform_bigint_below(const bigint& bound, Rng& rng) {
    if (bound <= 0) throw std::invalid_argument("uniform_bigint_below: bound must be positive");
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    for (;;) {
        bigint r = 0;
        unsigned remaining = bits;
        while (remaining > 0) {
            unsigned chunk = std::min(remaining, 64u);
            r <<= chunk;
            uint64_t word = rng.next_u64();
            if (chunk < 64) word &= (chunk == 64) ? ~0ULL : ((1ULL << chunk) - 1);
            r += word;
            remaining -= chunk;
        }
        if (r < bound) return r;
    }
}

namespace {

// Sign = Plus means: build a uniform +-indecomposable separable permutation
// of size m (whose root, if m >= 2, is a - node), and symmetrically.
Permutation sample_indecomposable(int m, bool plus_indecomposable, Rng& rng) {
    if (m == 1) return Permutation::identity(1);
    // root decoration is the opposite sign; sample the composition of m into
    // parts weighted by p[part], at least two parts
    std::vector<Permutation> blocks;
    const auto& T = tables();
    int remaining = m;
    bool first_part = true;
    while (remaining > 0) {
        bigint total;
        if (first_part) {
            total = 0;
            for (int part = 1; part < remaining; ++part)
                total += T.p[static_cast<size_t>(part)] * T.g[static_cast<size_t>(remaining - part)];
        } else {
            total = T.g[static_cast<size_t>(remaining)];
        }
        bigint u = uniform_bigint_below(total, rng);
        int part = 0;
        if (!first_part) {
            // last part option: weight p[remaining]
            if (u < T.p[static_cast<size_t>(remaining)]) {
                part = remaining;
            } else {
                u -= T.p[static_cast<size_t>(remaining)];
            }
        }
        if (part == 0) {
            for (int cand = 1; cand < remaining; ++cand) {
                bigint w = T.p[static_cast<size_t>(cand)] * T.g[static_cast<size_t>(remaining - cand)];
                if (u < w) {
                    part = cand;
                    break;
                }
                u -= w;
            }
        }
        blocks.push_back(sample_indecomposable(part, !plus_indecomposable, rng));
        remaining -= part;
        first_part = false;
    }
    const int d = static_cast<int>(blocks.size());
    Permutation skeleton = plus_indecomposable ? Permutation::decreasing(d) : Permutation::identity(d);
    return substitute(skeleton, blocks);
}

}  // namespace

Permutation sample_separable(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_separable: n must be >= 1");
    if (n == 1) return Permutation::identity(1);
    {
        std::lock_guard<std::mutex> lock(tables_mutex());
        tables().grow(n);
    }
    // a separable of size >= 2 is +-rooted or --rooted, p_n of each; the
    // +-rooted ones are exactly the --indecomposable ones
    bool minus_rooted = rng.fair_coin();
    return sample_indecomposable(n, minus_rooted, rng);
}

}  // namespace permlab
