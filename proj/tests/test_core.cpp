#include <doctest.h>

#include <numeric>

#include <set>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

using namespace permlab;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

std::vector<Permutation> all_of_size(int n) {
    return enumerate_class(n, [](const Permutation&) { return true; });
}

}  // namespace

TEST_CASE("standardize") {
    CHECK(standardize({7, 3, 6}) == P("312"));
    CHECK(standardize({1, 2, 3, 4, 5}) == Permutation::identity(5));
    CHECK(standardize({2.5, -1, 7}) == P("213"));
    CHECK(standardize({}) == Permutation{});
    CHECK_THROWS_AS(standardize({1, 1}), std::invalid_argument);
}

TEST_CASE("pattern_at") {
    Permutation sigma = P("87532461");
    CHECK(pattern_at(sigma, {2, 4, 7}) == P("312"));
    CHECK(pattern_at(P("1532467"), {1, 2, 3, 5}) == P("1423"));
    std::vector<int> full(8);
    std::iota(full.begin(), full.end(), 1);
    CHECK(pattern_at(sigma, full) == sigma);
    CHECK_THROWS_AS(pattern_at(sigma, {0, 3}), std::out_of_range);
    CHECK_THROWS_AS(pattern_at(sigma, {3, 3}), std::invalid_argument);
}

TEST_CASE("pattern_at composes over nested index sets") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 6 + static_cast<int>(rng.below(5ULL));
        std::vector<int> vals(static_cast<size_t>(n));
        std::iota(vals.begin(), vals.end(), 1);
        for (int i = n - 1; i > 0; --i) std::swap(vals[static_cast<size_t>(i)], vals[static_cast<size_t>(rng.below_int(i + 1))]);
        Permutation sigma{vals};
        std::vector<int> I;
        for (int i = 1; i <= n; ++i)
            if (rng.fair_coin()) I.push_back(i);
        if (I.empty()) I.push_back(1);
        std::vector<int> J;
        for (int j = 1; j <= static_cast<int>(I.size()); ++j)
            if (rng.fair_coin()) J.push_back(j);
        if (J.empty()) J.push_back(1);
        std::vector<int> composed;
        for (int j : J) composed.push_back(I[static_cast<size_t>(j) - 1]);
        CHECK(pattern_at(pattern_at(sigma, I), J) == pattern_at(sigma, composed));
    }
}

TEST_CASE("pattern_counts on the spec examples") {
    auto r1 = pattern_counts(P("321"), P("1532467"));
    CHECK(r1.cocc == 1);

    auto r2 = pattern_counts(P("1"), P("52314"));
    CHECK(r2.occ == 5);
    CHECK(r2.cocc == 5);

    auto r3 = pattern_counts(P("12"), P("2413"));
    CHECK(r3.cocc == 2);

    // |pi| > |sigma| gives zero counts by convention
    auto r4 = pattern_counts(P("1234"), P("123"));
    CHECK(r4.occ == 0);
    CHECK(r4.cocc == 0);

    // the empty pattern has one occurrence
    auto r5 = pattern_counts(Permutation{}, P("123"));
    CHECK(r5.occ == 1);
    CHECK(r5.cocc == 1);
}

TEST_CASE("pattern sums over S_k") {
    // sum over pi in S_k of occ = C(n,k) and of cocc = n-k+1
    for (int n : {5, 6, 7}) {
        for (int k : {2, 3}) {
            for (const auto& sigma : {P("52314"), Permutation::identity(n), Permutation::decreasing(n)}) {
                if (sigma.size() != n) continue;
                unsigned long long occ_total = 0, cocc_total = 0;
                for (const auto& pi : all_of_size(k)) {
                    auto r = pattern_counts(pi, sigma);
                    occ_total += r.occ;
                    cocc_total += r.cocc;
                }
                CHECK(occ_total == binomial(n, k));
                CHECK(cocc_total == static_cast<unsigned long long>(n - k + 1));
            }
        }
    }
}

TEST_CASE("backtracking matcher agrees with subset enumeration for k = 5") {
    Rng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> vals(9);
        std::iota(vals.begin(), vals.end(), 1);
        for (int i = 8; i > 0; --i) std::swap(vals[static_cast<size_t>(i)], vals[static_cast<size_t>(rng.below_int(i + 1))]);
        Permutation sigma{vals};
        for (const auto& pi : {P("12345"), P("35142"), P("54321"), P("24153")}) {
            unsigned long long brute = 0;
            std::vector<int> idx(5);
            std::function<void(int, int)> rec = [&](int depth, int start) {
                if (depth == 5) {
                    brute += pattern_at(sigma, idx) == pi ? 1 : 0;
                    return;
                }
                for (int i = start; i <= 9 - (5 - depth - 1); ++i) {
                    idx[static_cast<size_t>(depth)] = i;
                    rec(depth + 1, i + 1);
                }
            };
            rec(0, 1);
            CHECK(count_occurrences(pi, sigma) == brute);
        }
    }
}

TEST_CASE("records and squares") {
    RecordSets r = records(P("12"));
    CHECK(r.lr_max == std::vector<Point>{{1, 1}, {2, 2}});
    CHECK(r.rl_max == std::vector<Point>{{2, 2}});

    for (int n = 0; n <= 4; ++n)
        for (const auto& sigma : all_of_size(n)) CHECK(is_square(sigma));

    // exactly sixteen permutations of size 5 have an internal point
    int with_internal = 0;
    for (const auto& sigma : all_of_size(5))
        if (!is_square(sigma)) {
            CHECK(internal_points(sigma).size() == 1);
            ++with_internal;
        }
    CHECK(with_internal == 16);

    // boundary membership: first point is always a left record of both kinds
    for (const auto& sigma : all_of_size(4)) {
        RecordSets rs = records(sigma);
        CHECK(std::find(rs.lr_max.begin(), rs.lr_max.end(), Point{1, sigma(1)}) != rs.lr_max.end());
        CHECK(std::find(rs.lr_min.begin(), rs.lr_min.end(), Point{1, sigma(1)}) != rs.lr_min.end());
    }
}

TEST_CASE("sums and substitution") {
    CHECK(direct_sum(P("1"), P("1")) == P("12"));
    CHECK(skew_sum(P("12"), P("1")) == P("231"));

    Permutation theta = P("2413");
    std::vector<Permutation> trivial(4, P("1"));
    CHECK(substitute(theta, trivial) == theta);

    CHECK(substitute(P("1"), {P("35142")}) == P("35142"));
    CHECK_THROWS_AS(substitute(P("12"), {P("1")}), std::invalid_argument);
    CHECK_THROWS_AS(substitute(P("12"), {P("1"), Permutation{}}), std::invalid_argument);

    // associativity of the direct sum
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        auto rand_perm = [&rng](int n) {
            std::vector<int> v(static_cast<size_t>(n));
            std::iota(v.begin(), v.end(), 1);
            for (int i = n - 1; i > 0; --i) std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(rng.below_int(i + 1))]);
            return Permutation{v};
        };
        Permutation a = rand_perm(3), b = rand_perm(4), c = rand_perm(2);
        CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
    }

    // substitution block structure example: 2413 with given blocks
    Permutation out = substitute(P("21"), {P("12"), P("1")});
    CHECK(out == P("231"));
}

TEST_CASE("simplicity") {
    CHECK(is_simple(P("2413")));
    CHECK(is_simple(P("3142")));
    CHECK_FALSE(is_simple(P("451326")));
    CHECK_FALSE(is_simple(P("12")));
    CHECK_FALSE(is_simple(P("21")));
    CHECK_FALSE(is_simple(P("1")));

    // no simple permutations of size 3; 2413 and 3142 are the smallest
    for (const auto& sigma : all_of_size(3)) CHECK_FALSE(is_simple(sigma));
    int count4 = 0;
    for (const auto& sigma : all_of_size(4))
        if (is_simple(sigma)) ++count4;
    CHECK(count4 == 2);

    // simple implies +- and --indecomposable
    for (int n = 4; n <= 6; ++n)
        for (const auto& sigma : all_of_size(n))
            if (is_simple(sigma)) {
                CHECK_FALSE(is_sum_decomposable(sigma));
                CHECK_FALSE(is_skew_decomposable(sigma));
            }
}

TEST_CASE("baxter predicate") {
    CHECK_FALSE(is_baxter(P("2413")));
    CHECK_FALSE(is_baxter(P("3142")));
    for (int n = 0; n <= 3; ++n)
        for (const auto& sigma : all_of_size(n)) CHECK(is_baxter(sigma));
    int count4 = 0;
    for (const auto& sigma : all_of_size(4))
        if (is_baxter(sigma)) ++count4;
    CHECK(count4 == 22);
}

TEST_CASE("enumerate_class") {
    auto av231 = enumerate_class(4, [](const Permutation& s) { return avoids(s, P("231")); });
    CHECK(av231.size() == 14);
    CHECK(all_of_size(3).size() == 6);
    auto sep5 = enumerate_class(5, [](const Permutation& s) { return avoids_all(s, {P("2413"), P("3142")}); });
    CHECK(sep5.size() == 90);

    // lexicographic order
    auto s3 = all_of_size(3);
    CHECK(s3.front() == P("123"));
    CHECK(s3.back() == P("321"));
    CHECK(std::is_sorted(s3.begin(), s3.end()));

    CHECK_THROWS_AS(enumerate_class(enumeration_cap() + 1, [](const Permutation&) { return true; }),
                    std::invalid_argument);
}

TEST_CASE("catalan avoidance counts at small sizes") {
    for (int n = 1; n <= 7; ++n) {
        auto a = enumerate_class(n, [](const Permutation& s) { return avoids(s, P("231")); });
        auto b = enumerate_class(n, [](const Permutation& s) { return avoids(s, P("321")); });
        CHECK(a.size() == catalan(n));
        CHECK(b.size() == catalan(n));
    }
}

TEST_CASE("parsing and serialization") {
    CHECK(P("2413") == Permutation({2, 4, 1, 3}));
    CHECK(Permutation::parse("2 4 1 3") == Permutation({2, 4, 1, 3}));
    CHECK(P("2413").to_string() == "2 4 1 3");
    CHECK(P("21").to_json() == "{\"n\": 2, \"values\": [2, 1]}");
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
}

TEST_CASE("symmetries") {
    Permutation s = P("2413");
    CHECK(s.inverse() == P("3142"));
    CHECK(s.reverse() == P("3142"));
    CHECK(s.complement() == P("3142"));
    CHECK(s.rotate_cw() == P("2413"));
    // rotate_cw sends point (i, s(i)) to (s(i), n+1-i)
    Permutation t = P("14523");
    Permutation rot = t.rotate_cw();
    for (int i = 1; i <= t.size(); ++i) CHECK(rot(t(i)) == t.size() + 1 - i);
}
