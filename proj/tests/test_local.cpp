#include <doctest.h>

#include <numeric>

#include <cmath>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"
#include "permlab/rooted.hpp"

using namespace permlab;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

Permutation random_perm(int n, Rng& rng) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(rng.below_int(i + 1))]);
    return Permutation{v};
}

}  // namespace

TEST_CASE("restrict_window") {
    RootedPermutation r = restrict_window(P("752934861"), 4, 2);
    CHECK(r.perm == P("41523"));
    CHECK(r.root == 3);

    Permutation s = P("4213");
    CHECK(restrict_window(s, 2, 10) == RootedPermutation{s, 2});
    CHECK(restrict_window(P("321"), 2, 1) == RootedPermutation{P("321"), 2});
    CHECK_THROWS_AS(restrict_window(s, 5, 1), std::out_of_range);
}

TEST_CASE("restriction consistency r_h' after r_h") {
    Rng rng(11);
    for (int t = 0; t < 25; ++t) {
        Permutation sigma = random_perm(9, rng);
        int i = 1 + rng.below_int(9);
        for (int h = 0; h <= 5; ++h) {
            for (int hp = 0; hp <= h; ++hp) {
                RootedPermutation once = restrict_window(sigma, i, hp);
                RootedPermutation twice = restrict_window(restrict_window(sigma, i, h), hp);
                CHECK(once == twice);
            }
        }
    }
}

TEST_CASE("local distance") {
    CHECK(local_distance({P("1"), 1}, {P("12"), 1}) == doctest::Approx(1.0));
    CHECK(local_distance({P("123"), 2}, {P("132"), 2}) == doctest::Approx(1.0));

    // identical centered windows of size 2h+1 sit at distance 2^{-h}
    for (int h = 1; h <= 4; ++h) {
        RootedPermutation x{Permutation::identity(2 * h + 1), h + 1};
        CHECK(local_distance(x, x) == doctest::Approx(std::ldexp(1.0, -h)));
    }

    // ultrametric inequality on all rooted permutations of size 4
    auto all4 = enumerate_class(4, [](const Permutation&) { return true; });
    std::vector<RootedPermutation> rooted;
    for (const auto& s : all4)
        for (int i = 1; i <= 4; ++i) rooted.push_back({s, i});
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto& a = rooted[rng.below(rooted.size())];
        const auto& b = rooted[rng.below(rooted.size())];
        const auto& c = rooted[rng.below(rooted.size())];
        CHECK(local_distance(a, c) <= std::max(local_distance(a, b), local_distance(b, c)) + 1e-15);
    }
}

TEST_CASE("restriction histogram") {
    auto h1 = restriction_histogram(Permutation::identity(5), 1);
    CHECK(h1[{P("123"), 2}] == 3);
    CHECK(h1[{P("12"), 1}] == 1);
    CHECK(h1[{P("12"), 2}] == 1);

    auto h2 = restriction_histogram(P("1"), 3);
    CHECK(h2[{P("1"), 1}] == 1);

    auto h3 = restriction_histogram(P("35142"), 0);
    CHECK(h3[{P("1"), 1}] == 5);
}

TEST_CASE("interior window mass equals cocc") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 10 + rng.below_int(30);
        Permutation sigma = random_perm(n, rng);
        for (int h = 1; h <= 2; ++h) {
            auto hist = restriction_histogram(sigma, h);
            long long interior = 0;
            for (const auto& [r, c] : hist)
                if (r.perm.size() == 2 * h + 1 && r.root == h + 1) {
                    CHECK(c == static_cast<long long>(count_consecutive(r.perm, sigma)));
                    interior += c;
                }
            CHECK(interior == n - 2 * h);
        }
    }
}

TEST_CASE("J map") {
    CHECK(square_order_index(0.3, 0.5) == 1);
    CHECK(square_order_index(0.5, 0.1) == 2);
    CHECK(square_order_index(0.4, 0.95) == 3);
    CHECK(square_order_index(0.8, 0.5) == 4);
}

TEST_CASE("av321 limit law") {
    // all "-" labels give the increasing window
    std::vector<bool> labels(5, false);
    CHECK(order_window(labels, 1) == RootedPermutation{Permutation::identity(5), 3});

    for (int h = 0; h <= 3; ++h) {
        WindowLaw law = limit_restriction_law(LimitVariant::Av321, h);
        const int k = 2 * h + 1;
        CHECK(law.denom == (1LL << k));
        long long total = 0;
        for (const auto& [r, w] : law.weight) {
            CHECK(r.root == h + 1);
            CHECK(r.perm.size() == k);
            CHECK(avoids(r.perm, P("321")));
            if (r.perm == Permutation::identity(k)) {
                CHECK(w == 2 * h + 2);
            } else {
                CHECK(count_consecutive(P("21"), r.perm.inverse()) == 1);
                CHECK(w == 1);
            }
            total += w;
        }
        CHECK(total == law.denom);
    }
}

TEST_CASE("square limit law normalizes") {
    for (int h = 0; h <= 2; ++h) {
        WindowLaw law = limit_restriction_law(LimitVariant::SquareMixed, h);
        CHECK(law.denom == 4LL << (2 * h + 1));
        long long total = 0;
        for (const auto& [r, w] : law.weight) total += w;
        CHECK(total == law.denom);
    }
    // each fixed order also normalizes and matches the sampler's support
    WindowLaw s2 = limit_restriction_law(LimitVariant::Square2, 1);
    long long total = 0;
    for (const auto& [r, w] : s2.weight) total += w;
    CHECK(total == s2.denom);
}

TEST_CASE("sampler matches enumerated law") {
    const int h = 1;
    WindowLaw law = limit_restriction_law(LimitVariant::SquareMixed, h);
    Rng rng(99);
    std::map<RootedPermutation, long long> freq;
    const int reps = 40000;
    for (int i = 0; i < reps; ++i) freq[limit_restriction_sampler(LimitVariant::SquareMixed, h, rng)]++;
    for (const auto& [r, w] : law.weight) {
        double expect = static_cast<double>(w) / static_cast<double>(law.denom);
        double got = static_cast<double>(freq[r]) / reps;
        double sd = std::sqrt(expect * (1 - expect) / reps);
        CHECK(std::abs(got - expect) < 5 * sd + 1e-3);
    }
}

TEST_CASE("concentration experiment on a degenerate sampler") {
    auto sampler = [](int n, Rng&) { return Permutation::identity(n); };
    auto rows = concentration_experiment("identity", sampler, {P("12"), P("21")}, 100, 5, 42);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].mean == doctest::Approx(99.0 / 100.0));
    CHECK(rows[0].variance == doctest::Approx(0.0));
    CHECK(rows[1].mean == doctest::Approx(0.0));
    std::string csv = concentration_csv(rows);
    CHECK(csv.find("family,pi,n,rep_count,mean,variance,seed") == 0);
    CHECK(csv.find("identity,1-2,100,5,") != std::string::npos);
    CHECK_THROWS_AS(concentration_experiment("x", sampler, {P("1")}, 5, 1, 0), std::invalid_argument);
}
