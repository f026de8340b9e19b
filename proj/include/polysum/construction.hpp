#pragma once

#include "polysum/cayley.hpp"
#include "polysum/exact.hpp"
#include "polysum/polytope.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polysum {

struct ConstructionParams {
    int d = 0;
    std::array<long, 3> n{};
    std::array<std::vector<ExactScalar>, 3> x;  // x[i][j-1] = x_{i+1,j}
    ExactScalar epsilon;
    int M = 0;
    ExactScalar tau;

    // x_{i,j} = j, epsilon = 1/2, M = d(d+1).
    static ConstructionParams standard(int d, const std::array<long, 3>& n, const ExactScalar& tau);

    void validate() const;  // throws DomainError
    ExactScalar zeta() const;
    // Curve parameter t_{i,j} = x_{i,j} tau^{3-i}; i is 1-based, j is 1-based.
    ExactScalar t(int i, int j) const;
    // Shifted parameter (x_{i,j} + epsilon) tau^{3-i}.
    ExactScalar t_eps(int i, int j) const;
    int nu(int i) const { return 3 - i; }
};

ExactScalar power(const ExactScalar& base, long e);

// gamma_i(t) for i in {1,2,3}.
Point curve_point(int i, const ExactScalar& t, const ExactScalar& zeta, int d);

struct ConstructionInstance {
    std::array<Polytope, 3> P;
    CayleyInstance cayley;
};

ConstructionInstance build_instance(const ConstructionParams& p);

struct ConditionFailure {
    ColorMask colors;
    int l;
    ExactInteger expected;
    ExactInteger actual;
};

struct ConditionReport {
    bool satisfied = false;
    std::vector<ConditionFailure> failures;
};

// Exhaustive check of f_{l-1}(F_R) = sum_S (-1)^{|R|-|S|} C(n_S, l) on the face lattice.
ConditionReport verify_conditions(const CayleyInstance& c, const std::array<long, 3>& n, int d);

struct TauAttempt {
    int j;
    std::string outcome;  // "certified", "not-extreme", "non-generic", "conditions"
    std::vector<ConditionFailure> failures;
};

struct TauSearchResult {
    ExactScalar tau;
    int j = 0;
    ConstructionParams params;
    ConstructionInstance instance;
    ConditionReport report;
    std::vector<TauAttempt> attempts;
};

// tau = 2^{-j}, j = 1..j_max; first value passing verify_conditions wins.
TauSearchResult find_tight_tau(int d, const std::array<long, 3>& n,
                               const std::array<std::vector<ExactScalar>, 3>& x_grid, int M,
                               int j_max);

int default_j_max();  // 60, or POLYSUM_JMAX when set

// Chosen vertex indices (1-based j) per color; colors outside R must be empty.
struct HyperplaneQuery {
    ColorMask colors = 7;
    std::array<std::vector<int>, 3> chosen;
};

// Cayley image of gamma_i(t) in R^{d+2} (three colors) or R^{d+1} (two colors R).
Point cayley_point(const ConstructionParams& p, ColorMask R, int i, const ExactScalar& t);

// Sign of det H_U(v): the hyperplane through U and the epsilon partners, padded.
// Oriented so that the barycentre of the R-colored vertices is on the positive
// side; positive for every v outside U iff H_U strictly supports U.
int hyperplane_test(const HyperplaneQuery& U, const Point& v, const ConstructionParams& p);

// Every admissible U against every vertex outside U; true iff all signs are positive.
// Sufficient for the tight face counts, not necessary.
bool hyperplane_certificate(const ConstructionParams& p);

// Three convex polygons with vertices on the unit circle and no two edges of
// different polygons parallel. Deterministic in the seed.
std::array<Polytope, 3> polygon_triple(const std::array<long, 3>& n, std::uint64_t seed);

}  // namespace polysum
