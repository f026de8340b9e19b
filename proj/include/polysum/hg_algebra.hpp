#pragma once

#include "polysum/cayley.hpp"
#include "polysum/counts.hpp"

#include <array>
#include <string>
#include <vector>

namespace polysum {

HVector h_from_f(const CountVector& f, int delta);

// Inverse transform: f_{k-1} = sum_i C(delta+1-i, k-i) h_i.
CountVector f_from_h(const HVector& h);

GVector g_order(const HVector& h, int m);

// Same quantity by the recursive definition g^(m) = g^(m-1) - shift(g^(m-1)).
GVector g_order_recursive(const HVector& h, int m);

ExactScalar sum_operator(const CountVector& f, int k, int D, int nu);

// h(K_R) assembled from the g-vectors of the F_S, S a nonempty subset of R.
HVector h_K_from_F(const FaceSetCounts& fs, ColorMask R);

// f_k(K_R) = sum over S of f_k(F_S).
CountVector f_K_from_F(const FaceSetCounts& fs, ColorMask R);

// h of the boundary of Q, r = 3 only, built from the seven h-vectors of the F_R.
HVector h_boundary_Q(const FaceSetCounts& fs);

// Same h-vector via the face counts of the boundary of Q.
HVector h_boundary_Q_from_f(const FaceSetCounts& fs);

bool check_DSW(const FaceSetCounts& fs);

bool check_recurrence_r8(const FaceSetCounts& fs, const std::array<long, 3>& n, int d);

struct BoundCheck {
    std::string name;   // which inequality family
    ColorMask colors;   // 0 when not applicable
    int k;
    ExactScalar lhs;
    ExactScalar rhs;
    bool holds() const { return lhs <= rhs; }
    bool equal() const { return lhs == rhs; }
};

struct HBoundsReport {
    std::vector<BoundCheck> checks;
    bool all_hold() const;
};

HBoundsReport check_h_bounds(const FaceSetCounts& fs, const std::array<long, 3>& n, int d);

// Integral-valued sequence check used to assert h/g integrality.
void assert_integral(const HVector& h, const char* where);

}  // namespace polysum
