#include <doctest.h>

#include <random>

#include "kfd/perm.hpp"
#include "oracles.hpp"

using namespace kfd;

TEST_CASE("cycle type and index basics") {
    CHECK(Perm::identity(5).cycle_type() == CycleType({1, 1, 1, 1, 1}));
    CHECK(Perm::identity(5).index() == 0);

    Perm t = Perm::from_cycles(5, {{1, 2}});
    CHECK(t.cycle_type() == CycleType({2, 1, 1, 1}));
    CHECK(t.index() == 1);

    Perm c6 = parse_perm("(1 2 3 4 5 6)", 6);
    CHECK(c6.cycle_type() == CycleType({6}));
    CHECK(c6.index() == 5);
}

TEST_CASE("product_cycle_type small cases") {
    // brute force: (1 2) x (1 2 3) in the degree-6 product action equals a 6-cycle
    CHECK(product_cycle_type(CycleType({2}), CycleType({3})) == CycleType({6}));
    CHECK(product_cycle_type(CycleType({2, 2}), CycleType({2})) == CycleType({2, 2, 2, 2}));
    CycleType x({4, 2, 1});
    CHECK(product_cycle_type(x, CycleType({1})) == x);
}

TEST_CASE("power_cycle_type small cases") {
    CHECK(power_cycle_type(CycleType({6}), 2) == CycleType({3, 3}));
    CHECK(power_cycle_type(CycleType({4, 2}), 2) == CycleType({2, 2, 1, 1}));
    CycleType ct({5, 3, 1});
    CHECK(power_cycle_type(ct, 1) == ct);
}

namespace {

// the explicit product action of (p, q) on pairs, as a permutation
Perm product_action(const Perm& p, const Perm& q) {
    int m = p.degree(), n = q.degree();
    std::vector<int> img(m * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            img[(i - 1) * n + (j - 1)] = (p.apply(i) - 1) * n + q.apply(j);
    return Perm::from_images(img);
}

}  // namespace

TEST_CASE("cycle formula matches brute-force permutation arithmetic") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 1000; ++iter) {
        int m = 1 + static_cast<int>(rng() % 7);
        int n = 1 + static_cast<int>(rng() % 7);
        Perm p = oracle::random_perm(m, rng), q = oracle::random_perm(n, rng);
        CHECK(product_cycle_type(p.cycle_type(), q.cycle_type()) ==
              product_action(p, q).cycle_type());
    }
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 2 + static_cast<int>(rng() % 10);
        long long k = 1 + static_cast<long long>(rng() % 30);
        Perm p = oracle::random_perm(n, rng);
        CHECK(power_cycle_type(p.cycle_type(), k) == p.pow(k).cycle_type());
    }
}

TEST_CASE("perm parsing round trips") {
    Perm p = parse_perm("[2,1,4,5,3]");
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(3) == 4);
    CHECK(p.to_image_string() == "[2,1,4,5,3]");
    CHECK(parse_perm(p.to_cycle_string(), 5) == p);
    CHECK(parse_perm("(1 2)(3 4 5)", 5) == parse_perm("[2,1,4,5,3]"));
    CHECK_THROWS_AS(parse_perm("[2,2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("(1 2", 3), std::invalid_argument);
    CHECK(parse_perm("()", 4).is_identity());
}

TEST_CASE("perm arithmetic conventions") {
    Perm a = parse_perm("(1 2)", 3), b = parse_perm("(2 3)", 3);
    // left-to-right: 1 -> 2 under a, then 2 -> 3 under b
    CHECK((a * b).apply(1) == 3);
    CHECK((a * a).is_identity());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Perm p = oracle::random_perm(8, rng);
        CHECK((p * p.inverse()).is_identity());
        CHECK(p.pow(-1) == p.inverse());
        CHECK(p.pow(3) == p * p * p);
    }
}
