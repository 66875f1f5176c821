#include <doctest.h>

#include <map>
#include <set>

#include "permlab/gentree.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

using namespace permlab;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

const std::vector<Permutation> kAvoided = {P("1423"), P("4123")};

}  // namespace

TEST_CASE("count table matches the brute-force family counts") {
    CountTable table(SuccessionRule::av1423_4123(), 8);
    CHECK(table.total(1) == 1);
    CHECK(table.total(2) == 2);  // the root (2) has two children
    for (int n = 1; n <= 8; ++n) {
        auto cls = enumerate_class(n, [](const Permutation& s) { return avoids_all(s, kAvoided); });
        CHECK(table.total(n) == bigint(cls.size()));
    }
}

TEST_CASE("the paper path realizes 13254") {
    LabelPath path = {{2, 0}, {3, 'T'}, {3, 0}, {4, 'T'}, {4, 0}};
    CHECK(realize_1423_4123(path) == P("13254"));
}

TEST_CASE("trivial path") {
    CHECK(realize_1423_4123({{2, 0}}) == P("1"));
    CountTable table(SuccessionRule::av1423_4123(), 3);
    Rng rng(1);
    LabelPath p1 = sample_path(table, 1, rng);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].value == 2);
}

TEST_CASE("paths biject onto the family up to size 7") {
    CountTable table(SuccessionRule::av1423_4123(), 7);
    // enumerate all consistent paths by DFS and realize each
    for (int n = 1; n <= 7; ++n) {
        std::set<Permutation> images;
        long long paths = 0;
        std::function<void(LabelPath&)> rec = [&](LabelPath& acc) {
            if (static_cast<int>(acc.size()) == n) {
                ++paths;
                Permutation sigma = realize_1423_4123(acc);
                CHECK(sigma.size() == n);
                CHECK(avoids_all(sigma, kAvoided));
                images.insert(sigma);
                return;
            }
            for (const auto& child : table.rule().children(acc.back().value)) {
                acc.push_back(child);
                rec(acc);
                acc.pop_back();
            }
        };
        LabelPath acc = {{2, 0}};
        rec(acc);
        CHECK(bigint(paths) == table.total(n));
        CHECK(bigint(images.size()) == table.total(n));  // injective realizer
    }
}

TEST_CASE("active sites match the brute-force definition") {
    CountTable table(SuccessionRule::av1423_4123(), 8);
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + rng.below_int(7);
        LabelPath path = sample_path(table, n, rng);
        Permutation sigma = realize_1423_4123(path);
        auto sites = active_sites_brute(sigma, kAvoided);
        // labels track |AS|; sites 1, 2 and n+1 are always active
        CHECK(static_cast<int>(sites.size()) == path.back().value);
        CHECK(std::find(sites.begin(), sites.end(), 1) != sites.end());
        CHECK(std::find(sites.begin(), sites.end(), 2) != sites.end());
        CHECK(std::find(sites.begin(), sites.end(), n + 1) != sites.end());
    }
}

TEST_CASE("sampler is uniform over the level-4 family") {
    CountTable table(SuccessionRule::av1423_4123(), 4);
    auto cls = enumerate_class(4, [](const Permutation& s) { return avoids_all(s, kAvoided); });
    REQUIRE(cls.size() == 22);
    Rng rng(7);
    std::map<Permutation, int> freq;
    const int reps = 110000;
    for (int t = 0; t < reps; ++t) freq[realize_1423_4123(sample_path(table, 4, rng))]++;
    CHECK(freq.size() == 22);
    double expect = reps / 22.0;
    double sd = std::sqrt(reps * (1.0 / 22) * (21.0 / 22));
    for (const auto& [p, c] : freq) CHECK(std::abs(c - expect) < 4.5 * sd);
}

TEST_CASE("samples at moderate size stay in the family") {
    CountTable table(SuccessionRule::av1423_4123(), 500);
    Rng rng(11);
    Permutation sigma = realize_1423_4123(sample_path(table, 500, rng));
    CHECK(sigma.size() == 500);
    CHECK(avoids_all(sigma, kAvoided));
}

TEST_CASE("clt scan sanity") {
    // pi = 1: cocc = n exactly, variance 0
    auto rows = clt_scan(P("1"), {100, 200}, 5, 99);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].mean_cocc == doctest::Approx(100.0));
    CHECK(rows[0].var_cocc == doctest::Approx(0.0));
    CHECK(rows[1].mean_cocc == doctest::Approx(200.0));

    // pi = 12: mean/n stabilizes across sizes (loose self-consistency)
    auto rows12 = clt_scan(P("12"), {200, 400}, 40, 101);
    double m1 = rows12[0].mean_cocc / 200.0, m2 = rows12[1].mean_cocc / 400.0;
    CHECK(std::abs(m1 - m2) < 0.05);
}

TEST_CASE("large-size sampler agrees with the exact one in distribution") {
    // at n = 5 both samplers are available; compare class frequencies
    Rng rng(201);
    std::map<Permutation, int> freq_exact, freq_large;
    CountTable table(SuccessionRule::av1423_4123(), 5);
    const int reps = 30000;
    for (int t = 0; t < reps; ++t) {
        freq_exact[realize_1423_4123(sample_path(table, 5, rng))]++;
        freq_large[realize_1423_4123(sample_path_av1423_large(5, rng))]++;
    }
    CHECK(freq_exact.size() == freq_large.size());
    for (const auto& [p, c] : freq_exact) {
        double diff = std::abs(c - freq_large[p]) / static_cast<double>(reps);
        CHECK(diff < 0.02);
    }
    // the large sampler also stays in the family at size 1500
    Permutation big = realize_1423_4123(sample_path_av1423_large(1500, rng));
    CHECK(big.size() == 1500);
    CHECK(avoids_all(big, kAvoided));
}

TEST_CASE("rule json") {
    SuccessionRule builtin = SuccessionRule::from_json(R"({"root":2,"children":"builtin:av1423_4123"})");
    CHECK(builtin.root == 2);
    CHECK(builtin.children(2).size() == 2);
    CHECK(builtin.children(5).size() == 5);

    SuccessionRule inline_rule = SuccessionRule::from_json(
        R"({"root":1,"children":{"1":[[1,"a"],[1,"b"]]}})");
    CountTable table(inline_rule, 10, 1);
    CHECK(table.total(10) == bigint(1) << 9);  // binary paths
    CHECK_THROWS_AS(SuccessionRule::from_json(R"({"root":1,"children":"builtin:nope"})"),
                    std::invalid_argument);
}
