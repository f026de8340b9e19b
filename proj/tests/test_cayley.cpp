#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"
#include "polysum/cayley.hpp"
#include "polysum/error.hpp"

#include <map>
#include <set>

using namespace polysum;

namespace {

std::vector<long> longs(const CountVector& f) {
    std::vector<long> v;
    for (auto& x : f.values) v.push_back(x.get_si());
    return v;
}

Polytope hull(std::vector<Point> p) { return convex_hull(p); }

// Brute-force F_R counts: faces of the embedded point set with color support
// exactly R, minus the face spanned by all R-colored points.
std::map<ColorMask, std::vector<long>> brute_FR(const CayleyInstance& c) {
    const auto& pts = c.embedded;
    const std::size_t D = pts[0].size();
    auto faces = oracle::brute_faces(oracle::brute_facets(pts), pts.size());
    std::map<ColorMask, std::vector<long>> out;
    for (ColorMask R = 1; R <= c.all_colors(); ++R) {
        out[R] = std::vector<long>(D + 1, 0);
        out[R][0] = popcount(R) % 2 ? 1 : -1;
    }
    for (auto& F : faces) {
        if (F.empty()) continue;
        ColorMask R = 0;
        for (auto v : F) R |= 1u << c.color[v];
        std::size_t colored = 0;
        for (std::size_t v = 0; v < pts.size(); ++v) colored += (R >> c.color[v]) & 1;
        if (F.size() == colored) continue;  // trivial face C_R
        int k = oracle::affine_dim(pts, F);
        if (k < static_cast<int>(D)) ++out[R][k + 1];
    }
    return out;
}

std::vector<Polytope> random_triple(std::mt19937_64& rng, std::size_t d, std::size_t r) {
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < r; ++i) ps.push_back(hull(gen::sphere_points(rng, d, d + 1 + (rng() % 2))));
    return ps;
}

CountVector trimmed(const CountVector& f, int top) {
    CountVector out(top, -1, {});
    for (int k = -1; k <= top; ++k) out.values.push_back(f.at(k));
    return out;
}

}  // namespace

TEST_CASE("embedding dimensions") {
    auto c2 = cayley_embed({hull({{0}, {1}}), hull({{2}, {3}})});
    CHECK(c2.hull.ambient_dim == 2);
    CHECK(c2.hull.vertices.size() == 4);
    CHECK(c2.hull.facets.size() == 4);

    auto c3 = cayley_embed({hull({{0}, {1}}), hull({{0}, {2}}), hull({{0}, {3}})});
    CHECK(c3.hull.dim == 3);
    CHECK(c3.hull.vertices.size() == 6);

    auto t = cayley_embed({hull({{0, 0}, {1, 0}, {0, 1}}), hull({{0, 0}, {2, 1}, {1, 3}}),
                           hull({{0, 0}, {-1, 3}, {-3, -1}})});
    CHECK(t.hull.dim == 4);
    CHECK(t.hull.vertices.size() == 9);

    CHECK_THROWS_AS(cayley_embed({hull({{0}, {1}})}), DomainError);
    CHECK_THROWS_AS(cayley_embed({hull({{0}, {1}}), hull({{0, 0}, {1, 0}, {0, 1}})}), DimensionError);
}

TEST_CASE("F_R on segments") {
    auto c = cayley_embed({hull({{0}, {1}}), hull({{2}, {3}})});
    auto F12 = extract_F(c, 3);
    CHECK(F12.f.at(-1) == -1);
    CHECK(F12.f.at(1) == 2);
    CHECK(F12.f.at(0) == 0);
    for (ColorMask R : {1u, 2u}) {
        auto F = extract_F(c, R);
        CHECK(longs(F.f) == longs(f_vector(face_lattice(c.summands[R == 1 ? 0 : 1]))));
        CHECK(F.f.at(-1) == 1);
    }
    // K_{12}: two transversal edges, the four vertices, and the two singleton boundaries
    auto K = closure_K(F12, c);
    CHECK(K.f.at(0) == 4);
    CHECK(K.f.at(1) == 2);

    auto s3 = cayley_embed({hull({{0}, {1}}), hull({{0}, {2}}), hull({{0}, {3}})});
    auto F = extract_F(s3, 7);
    CHECK(F.f.at(2) == 2);
    CHECK(minkowski_counts_via_cayley(s3).at(0) == 2);
}

TEST_CASE("singleton F_R is the summand boundary and equals its closure") {
    std::mt19937_64 rng(31);
    auto ps = random_triple(rng, 3, 3);
    auto c = cayley_embed(ps);
    for (std::size_t i = 0; i < 3; ++i) {
        auto F = extract_F(c, 1u << i);
        CHECK(longs(F.f) == longs(f_vector(face_lattice(ps[i]))));
        CHECK(closure_K(F, c).f == F.f);
    }
}

TEST_CASE("F_R agrees with brute-force enumeration of the Cayley polytope") {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 6; ++rep) {
        const std::size_t d = rep < 3 ? 2 : 3;
        auto c = cayley_embed(random_triple(rng, d, 3));
        auto brute = brute_FR(c);
        for (ColorMask R = 1; R <= 7; ++R) {
            auto F = extract_F(c, R);
            auto b = brute[R];
            std::vector<long> mine(b.size());
            for (int k = -1; k + 1 < static_cast<int>(b.size()); ++k) mine[k + 1] = F.f.at(k).get_si();
            CHECK(mine == b);
            CHECK(F.dim == static_cast<int>(d) + popcount(R) - 2);
            CHECK(F.f.at(F.dim) > 0);
        }
        CHECK(check_partition(c));
    }
}

TEST_CASE("closure K_R: subset closure equals the sum over S") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 6; ++rep) {
        auto c = cayley_embed(random_triple(rng, 2 + rep % 2, 3));
        REQUIRE(check_genericity(c));
        auto counts = face_set_counts(c);
        for (ColorMask R = 1; R <= 7; ++R) {
            auto F = extract_F(c, R);
            // independent closure: every subset of every face of F_R
            std::set<std::vector<std::size_t>> closed;
            for (auto& level : F.faces_by_dim)
                for (auto& face : level) {
                    auto el = face.elements();
                    for (std::size_t m = 0; m < (std::size_t{1} << el.size()); ++m) {
                        std::vector<std::size_t> sub;
                        for (std::size_t b = 0; b < el.size(); ++b)
                            if (m >> b & 1) sub.push_back(el[b]);
                        closed.insert(sub);
                    }
                }
            std::vector<long> byk(F.dim + 2, 0);
            for (auto& s : closed) ++byk[s.size()];
            auto K = closure_K(F, c);
            for (int k = -1; k <= F.dim; ++k) {
                CHECK(K.f.at(k) == byk[k + 1]);
                ExactInteger sum = 0;
                for (ColorMask S = R; S; S = (S - 1) & R) sum += counts.of(S).at(k);
                if (k >= 0) CHECK(K.f.at(k) == sum);
            }
        }
    }
}

TEST_CASE("genericity") {
    auto sq = hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto sq2 = hull({{0, 0}, {2, 0}, {2, 3}, {0, 3}});
    CHECK_FALSE(check_genericity(cayley_embed({sq, sq2})));
    auto c = cayley_embed({sq, sq2});
    CHECK_THROWS_AS(closure_K(extract_F(c, 3), c), GenericityViolation);

    auto t1 = hull({{0, 0}, {1, 0}, {0, 1}});
    auto t2 = hull({{0, 0}, {2, 1}, {1, 3}});
    CHECK(check_genericity(cayley_embed({t1, t2})));
}

TEST_CASE("Cayley counts equal the direct Minkowski sum") {
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 9; ++rep) {
        const std::size_t d = 2 + rep % 3, r = 2 + rep % 2;
        auto ps = random_triple(rng, d, r);
        auto via = minkowski_counts_via_cayley(cayley_embed(ps));
        auto direct = f_vector(face_lattice(minkowski_sum_direct(ps)));
        CHECK(via == trimmed(direct, static_cast<int>(d) - 1));
    }
    // triangles: n_1 + n_2 + n_3 vertices
    auto c = cayley_embed({hull({{0, 0}, {1, 0}, {0, 1}}), hull({{0, 0}, {2, 1}, {1, 3}}),
                           hull({{0, 0}, {-1, 3}, {-3, -1}})});
    CHECK(minkowski_counts_via_cayley(c).at(0) == 9);
}

TEST_CASE("parallel edges: counts still agree, genericity fails") {
    auto sq = hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto sq2 = hull({{0, 0}, {2, 0}, {2, 3}, {0, 3}});
    auto via = minkowski_counts_via_cayley(cayley_embed({sq, sq2}));
    CHECK(longs(via) == std::vector<long>{1, 4, 4});
}
