#include <doctest.h>

#include <rees/herzog.hpp>

using namespace rees;

TEST_CASE("herzog presentation of (17,503,169)") {
    auto g = herzog_generators({17, 503, 169});
    CHECK(g.s == 89);
    CHECK(g.t == 3);
    CHECK(g.u == 7);
    CHECK(g.s2 == 49);
    CHECK(g.s3 == 40);
    CHECK(g.t1 == 2);
    CHECK(g.t3 == 1);
    CHECK(g.u1 == 3);
    CHECK(g.u2 == 4);
    CHECK(verify_generators({17, 503, 169}, g));
}

TEST_CASE("herzog presentation of (3,4,5)") {
    auto g = herzog_generators({3, 4, 5});
    CHECK(g.s == 3);
    CHECK(g.t == 2);
    CHECK(g.u == 2);
    CHECK(g.s2 == 1);
    CHECK(g.s3 == 2);
    CHECK(g.t1 == 1);
    CHECK(g.t3 == 1);
    CHECK(g.u1 == 1);
    CHECK(g.u2 == 1);
    CHECK(verify_generators({3, 4, 5}, g));
}

TEST_CASE("complete intersections are rejected") {
    CHECK_THROWS_AS(herzog_generators({2, 3, 5}), CompleteIntersectionError);
    CHECK_THROWS_AS(herzog_generators({1, 2, 3}), CompleteIntersectionError);
    CHECK_THROWS_AS(herzog_generators({2, 3, 1}), CompleteIntersectionError);
}

TEST_CASE("invalid triples are rejected") {
    CHECK_THROWS_AS(herzog_generators({2, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(herzog_generators({0, 3, 5}), std::invalid_argument);
}

TEST_CASE("verify_generators rejects a broken degree relation") {
    auto g = herzog_generators({17, 503, 169});
    auto bad = g;
    bad.u2 = 5;
    CHECK_FALSE(verify_generators({17, 503, 169}, bad));
}

TEST_CASE("minimality of s, t, u by exhaustive search") {
    auto in_semigroup = [](const Int& target, const Int& p, const Int& q) {
        for (Int beta = 0; beta * p <= target; ++beta)
            if ((target - beta * p) % q == 0) return true;
        return false;
    };
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{17, 503, 169}, {3, 4, 5}, {53, 48, 529}, {5, 7, 9}}) {
        MonomialTriple tr{a, b, c};
        auto g = herzog_generators(tr);
        for (Int k = 1; k < g.s; ++k) CHECK_FALSE(in_semigroup(k * tr.a, tr.b, tr.c));
        for (Int k = 1; k < g.t; ++k) CHECK_FALSE(in_semigroup(k * tr.b, tr.a, tr.c));
        for (Int k = 1; k < g.u; ++k) CHECK_FALSE(in_semigroup(k * tr.c, tr.a, tr.b));
    }
}

TEST_CASE("swap symmetry: u is unchanged when a and b swap roles") {
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{17, 503, 169}, {3, 4, 5}, {53, 48, 529}, {7, 10, 9}}) {
        auto g1 = herzog_generators({a, b, c});
        auto g2 = herzog_generators({b, a, c});
        CHECK(g1.u == g2.u);
        CHECK(g1.u1 == g2.u2);
        CHECK(g1.s == g2.t);
        CHECK(g1.s2 == g2.t1);
        CHECK(g1.s3 == g2.t3);
    }
}
