#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "polysum/cayley.hpp"
#include "polysum/construction.hpp"
#include "polysum/error.hpp"
#include "polysum/hg_algebra.hpp"

using namespace polysum;

namespace {

CountVector fvec(int delta, std::vector<long> v) {
    std::vector<ExactInteger> z(v.begin(), v.end());
    return CountVector(delta, -1, z);
}

HVector hvec(std::vector<long> v) {
    HVector h;
    h.delta = static_cast<int>(v.size()) - 2;
    for (long x : v) h.values.emplace_back(x);
    return h;
}

std::vector<ExactScalar> q(std::vector<long> v) { return {v.begin(), v.end()}; }

// Defining sum for h, evaluated term by term with a locally computed binomial.
ExactScalar binom_local(long a, long b) {
    if (b < 0) return 0;
    ExactScalar r = 1;
    for (long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

std::vector<ExactScalar> h_by_definition(const CountVector& f, int delta) {
    std::vector<ExactScalar> h;
    for (int k = 0; k <= delta + 1; ++k) {
        ExactScalar s = 0;
        for (int i = 0; i <= delta + 1; ++i) {
            ExactScalar t = binom_local(delta + 1 - i, delta + 1 - k) * ExactScalar(f.at(i - 1));
            s += (k - i) % 2 ? -t : t;
        }
        h.push_back(s);
    }
    return h;
}

Polytope hull(std::vector<Point> p) { return convex_hull(p); }

CayleyInstance segments() { return cayley_embed({hull({{0}, {1}}), hull({{0}, {2}}), hull({{0}, {3}})}); }

CayleyInstance triangles() {
    return cayley_embed({hull({{0, 0}, {1, 0}, {0, 1}}), hull({{0, 0}, {2, 1}, {1, 3}}),
                         hull({{0, 0}, {-1, 3}, {-3, -1}})});
}

std::array<long, 3> sizes(const CayleyInstance& c) {
    return {static_cast<long>(c.summands[0].vertices.size()), static_cast<long>(c.summands[1].vertices.size()),
            static_cast<long>(c.summands[2].vertices.size())};
}

bool palindromic(const HVector& h) {
    const int top = static_cast<int>(h.values.size()) - 1;
    for (int k = 0; k <= top; ++k)
        if (h.at(k) != h.at(top - k)) return false;
    return true;
}

}  // namespace

TEST_CASE("h from f: simplex and polygons") {
    for (int d = 1; d <= 6; ++d) {
        auto P = convex_hull(gen::simplex(d));
        auto h = h_from_f(f_vector(face_lattice(P)), d - 1);
        CHECK(h.values == std::vector<ExactScalar>(d + 1, ExactScalar(1)));
    }
    for (long n = 3; n <= 9; ++n) CHECK(h_from_f(fvec(1, {1, n, n}), 1).values == q({1, n - 2, 1}));
}

TEST_CASE("h of F_[3] matches the defining sum") {
    for (auto c : {segments(), triangles()}) {
        auto fs = face_set_counts(c);
        const int delta = static_cast<int>(c.d) + 1;
        CHECK(h_from_f(fs.of(7), delta).values == h_by_definition(fs.of(7), delta));
    }
}

TEST_CASE("f-h round trip and Dehn-Sommerville on simplicial polytopes") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 8; ++rep) {
        const std::size_t D = 3 + rep % 3;
        auto P = convex_hull(gen::sphere_points(rng, D, D + 2 + rep % 3));
        auto f = f_vector(face_lattice(P));
        auto h = h_from_f(f, static_cast<int>(D) - 1);
        CHECK(palindromic(h));
        CHECK(h.integral());
        CHECK(f_from_h(h) == f);
    }
}

TEST_CASE("g vectors") {
    auto h = hvec({1, 2, 1});
    CHECK(g_order(h, 0).values == h.values);
    CHECK(g_order(h, 1).values == q({1, 1, -1, -1}));
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> e(-20, 20);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<long> v(6);
        for (auto& x : v) x = e(rng);
        auto hr = hvec(v);
        for (int m = 0; m <= 3; ++m) {
            auto g = g_order(hr, m);
            CHECK(g == g_order_recursive(hr, m));
            for (int k = 0; k < static_cast<int>(g.values.size()); ++k) {
                ExactScalar s = 0;
                for (int i = 0; i <= m; ++i) s += (i % 2 ? -1 : 1) * binom_local(m, i) * hr.at(k - i);
                CHECK(g.at(k) == s);
            }
        }
    }
    CHECK_THROWS_AS(g_order(h, -1), ContractError);
}

TEST_CASE("summation operator") {
    auto square = fvec(1, {1, 4, 4});
    auto hs = h_from_f(square, 1);
    for (int k = 0; k <= 2; ++k) CHECK(sum_operator(square, k, 1, 0) == hs.at(k));
    auto g1 = g_order(hs, 1);
    for (int k = 0; k <= 3; ++k) CHECK(sum_operator(square, k, 2, 0) == g1.at(k));

    // simplex boundary (delta = 2) shifted by one
    auto tet = fvec(2, {1, 4, 6, 4});
    auto ht = h_from_f(tet, 2);
    for (int D = 3; D <= 5; ++D) {
        auto g = g_order(ht, D - 2 - 1);
        for (int k = 0; k <= D + 1; ++k) CHECK(sum_operator(tet, k, D, 1) == g.at(k - 1));
    }
    CHECK_THROWS_AS(sum_operator(tet, 0, 1, 0), ContractError);
    CHECK_THROWS_AS(sum_operator(tet, 0, 2, 1), ContractError);
}

TEST_CASE("h(K_R) from the F_S, two paths") {
    for (auto c : {segments(), triangles()}) {
        auto fs = face_set_counts(c);
        for (ColorMask R = 1; R <= 7; ++R) {
            const int delta = static_cast<int>(c.d) + popcount(R) - 2;
            auto direct = h_from_f(closure_K(extract_F(c, R), c).f, delta);
            CHECK(h_K_from_F(fs, R) == direct);
            CHECK(h_from_f(f_K_from_F(fs, R), delta) == direct);
            if (popcount(R) == 1) CHECK(h_K_from_F(fs, R) == h_from_f(fs.of(R), delta));
        }
    }
}

TEST_CASE("boundary of Q, DSW and the recurrence on small instances") {
    for (auto c : {segments(), triangles()}) {
        auto fs = face_set_counts(c);
        auto hq = h_boundary_Q(fs);
        CHECK(hq.values.size() == c.d + 3);
        CHECK(palindromic(hq));
        CHECK(hq == h_boundary_Q_from_f(fs));
        CHECK(check_DSW(fs));
        CHECK(check_recurrence_r8(fs, sizes(c), static_cast<int>(c.d)));
        CHECK(check_h_bounds(fs, sizes(c), static_cast<int>(c.d)).all_hold());

        auto broken = fs;
        broken.f[7].values[2] += 1;
        CHECK_FALSE(check_DSW(broken));
    }
}

TEST_CASE("identities on random generic triples") {
    std::mt19937_64 rng(43);
    int tested = 0;
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t d = 2 + rep % 3;
        std::vector<Polytope> ps;
        for (int i = 0; i < 3; ++i) ps.push_back(convex_hull(gen::sphere_points(rng, d, d + 2 + rng() % 2)));
        auto c = cayley_embed(ps);
        if (!check_genericity(c)) continue;
        ++tested;
        auto fs = face_set_counts(c);
        CHECK(check_DSW(fs));
        CHECK(palindromic(h_boundary_Q(fs)));
        CHECK(check_recurrence_r8(fs, sizes(c), static_cast<int>(d)));
        CHECK(check_h_bounds(fs, sizes(c), static_cast<int>(d)).all_hold());
        for (ColorMask R = 1; R <= 7; ++R) assert_integral(h_K_from_F(fs, R), "random triple");
    }
    CHECK(tested >= 8);
}

TEST_CASE("equality pattern of the h and g bounds at a tight d=4 instance") {
    const int d = 4;
    const std::array<long, 3> n{5, 5, 5};
    auto inst = build_instance(ConstructionParams::standard(d, n, ExactScalar(1, 2)));
    auto fs = face_set_counts(inst.cayley);
    auto rep = check_h_bounds(fs, n, d);
    CHECK(rep.all_hold());
    for (auto& ck : rep.checks) {
        const int lim = ck.name == "hF3" ? (d + 2) / 2 : (d + 1) / 2;
        if (ck.k <= lim) CHECK_MESSAGE(ck.equal(), ck.name << " k=" << ck.k);
    }
    CHECK(check_recurrence_r8(fs, n, d));
}

TEST_CASE("integrality assertion") {
    HVector h;
    h.values = {1, ExactScalar(1, 2)};
    CHECK_THROWS_AS(assert_integral(h, "test"), InternalInconsistency);
}
