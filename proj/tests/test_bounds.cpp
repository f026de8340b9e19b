#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"
#include "polysum/bounds.hpp"
#include "polysum/error.hpp"
#include "polysum/polytope.hpp"

using namespace polysum;

namespace {

// Closed forms for three 3-polytopes, k = 1..3 (vertices, edges, facets).
long closed3(long a, long b, long c, int k) {
    const long pairs = a * b + a * c + b * c, sum = a + b + c;
    if (k == 1) return pairs - sum + 2;
    if (k == 2) return 2 * pairs - sum - 6;
    return pairs - 6;
}

// Trivial bound by enumerating every (s_1, ..., s_r) directly.
ExactInteger phi(const std::vector<long>& n, long total) {
    ExactInteger sum = 0;
    std::vector<long> s(n.size(), 1);
    while (true) {
        long t = 0;
        for (long x : s) t += x;
        if (t == total) {
            ExactInteger p = 1;
            for (std::size_t i = 0; i < n.size(); ++i) p *= binom(n[i], s[i]);
            sum += p;
        }
        std::size_t i = 0;
        while (i < s.size() && ++s[i] > n[i]) s[i++] = 1;
        if (i == s.size()) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("cyclic polytope counts") {
    CHECK(cyclic_f(4, 6, 1) == 6);
    CHECK(cyclic_f(4, 6, 4) == 9);
    CHECK(cyclic_f(4, 6, 2) == 15);
    CHECK(cyclic_f(3, 6, 1) == 6);
    CHECK(cyclic_f(3, 6, 3) == 8);
    CHECK(cyclic_f(5, 8, 0) == 1);
    for (int D = 2; D <= 5; ++D)
        for (long n = D + 1; n <= D + 4; ++n) {
            auto brute = oracle::brute_f_vector(gen::moment_curve(D, [&] {
                std::vector<long> t;
                for (long i = 1; i <= n; ++i) t.push_back(i);
                return t;
            }()));
            for (int k = 0; k <= D; ++k) CHECK(cyclic_f(D, n, k) == brute[k]);
        }
    CHECK_THROWS_AS(cyclic_f(4, 4, 1), DomainError);
    CHECK_THROWS_AS(cyclic_f(4, 6, 5), DomainError);
}

TEST_CASE("trivial bound") {
    CHECK(trivial_upper_bound({4, 4}, 3, 0) == 16);
    CHECK(trivial_upper_bound({4, 4, 4}, 3, 0) == 64);
    CHECK(trivial_upper_bound({1, 1}, 3, 2) == 0);
    for (long a = 4; a <= 6; ++a)
        for (int k = 0; k <= 3; ++k) {
            CHECK(trivial_upper_bound({a, 5}, 4, k) == phi({a, 5}, k + 2));
            CHECK(trivial_upper_bound({a, 5, 6}, 4, k) == phi({a, 5, 6}, k + 3));
        }
    CHECK_THROWS_AS(trivial_upper_bound({4}, 3, 0), DomainError);
}

TEST_CASE("two summands") {
    CHECK(two_sum_bound(4, 4, 3, 1) == 16);
    CHECK(two_sum_bound(4, 4, 3, 3) == 18);
    for (long a = 4; a <= 10; ++a)
        for (long b = 4; b <= 10; ++b) {
            CHECK(two_sum_bound_general(a, b, 3, 1) == a * b);
            CHECK(two_sum_bound_general(a, b, 3, 2) == 2 * a * b + a + b - 8);
            CHECK(two_sum_bound_general(a, b, 3, 3) == a * b + a + b - 6);
        }
    for (long a = 3; a <= 8; ++a)
        for (int k = 1; k <= 2; ++k) CHECK(two_sum_bound(a, a + 2, 2, k) == 2 * a + 2);
    CHECK_THROWS_AS(two_sum_bound(3, 5, 3, 1), DomainError);
}

TEST_CASE("three summands, low dimensions") {
    CHECK(three_sum_bound(3, 4, 5, 2, 1) == 12);
    CHECK(three_sum_bound(3, 4, 5, 2, 2) == 12);
    CHECK(three_sum_bound(4, 4, 4, 3, 1) == 38);
    CHECK(three_sum_bound(4, 4, 4, 3, 2) == 78);
    CHECK(three_sum_bound(4, 4, 4, 3, 3) == 42);
    for (long a = 4; a <= 8; ++a)
        for (long b = 4; b <= 8; ++b)
            for (long c = 4; c <= 8; ++c)
                for (int k = 1; k <= 3; ++k) CHECK(three_sum_bound_general(a, b, c, 3, k) == closed3(a, b, c, k));
    for (long a = 3; a <= 7; ++a)
        for (long b = 3; b <= 7; ++b)
            for (int k = 1; k <= 2; ++k) CHECK(three_sum_bound(a, b, 3, 2, k) == a + b + 3);
    CHECK_THROWS_AS(three_sum_bound(4, 4, 4, 4, 1), DomainError);
    CHECK_THROWS_AS(three_sum_bound(5, 5, 5, 4, 5), DomainError);
}

TEST_CASE("three summands, monotone in each n_i and below the trivial bound") {
    for (int d = 4; d <= 6; ++d)
        for (long a = d + 1; a <= d + 4; ++a)
            for (int k = 1; k <= d; ++k) {
                auto base = three_sum_bound(a, d + 2, d + 3, d, k);
                CHECK(three_sum_bound(a + 1, d + 2, d + 3, d, k) >= base);
                CHECK(three_sum_bound(a, d + 3, d + 3, d, k) >= base);
                CHECK(base <= trivial_upper_bound({a, d + 2, d + 3}, d, k - 1));
            }
    // known tight values of the construction
    CHECK(three_sum_bound(5, 5, 5, 4, 1) == 125);
    CHECK(three_sum_bound(5, 5, 5, 4, 2) == 405);
    CHECK(three_sum_bound(5, 5, 5, 4, 3) == 450);
    CHECK(three_sum_bound(5, 5, 5, 4, 4) == 170);
}

TEST_CASE("inclusion-exclusion identity for three 3-polytopes") {
    std::mt19937_64 rng(51);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<Polytope> ps;
        for (int i = 0; i < 3; ++i) ps.push_back(convex_hull(gen::sphere_points(rng, 3, 4 + rep % 3)));
        std::vector<CountVector> singles, pairs;
        for (auto& p : ps) singles.push_back(f_vector(face_lattice(p)));
        pairs.push_back(f_vector(face_lattice(minkowski_sum_direct({ps[0], ps[1]}))));
        pairs.push_back(f_vector(face_lattice(minkowski_sum_direct({ps[0], ps[2]}))));
        pairs.push_back(f_vector(face_lattice(minkowski_sum_direct({ps[1], ps[2]}))));
        auto triple = f_vector(face_lattice(minkowski_sum_direct(ps)));
        for (int k = 0; k <= 2; ++k) CHECK(weibel_identity_3d(singles, pairs, triple, k));
        auto off = triple;
        off.values[1] += 1;
        CHECK_FALSE(weibel_identity_3d(singles, pairs, off, 0));
    }
}

TEST_CASE("bound reports") {
    auto rep = bound_report({5, 5, 5}, 4);
    CHECK(rep.per_k.size() == 4);
    CountVector f(3, -1, {1, 125, 405, 450, 170});
    attach_achieved(rep, f);
    CHECK(rep.consistent());
    for (auto& [k, row] : rep.per_k) CHECK(*row.tight);
    f.values[2] += 1;
    attach_achieved(rep, f);
    CHECK_FALSE(rep.consistent());
    CHECK(bound_report({4, 5}, 3).per_k.at(1).bound == 20);
    CHECK_THROWS_AS(bound_report({4}, 3), DomainError);
}
