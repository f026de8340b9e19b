#pragma once

#include "polysum/counts.hpp"
#include "polysum/exact.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polysum {

// f_{k-1} of the cyclic D-polytope with n vertices, 0 <= k <= D.
ExactInteger cyclic_f(int D, long n, int k);

ExactInteger trivial_upper_bound(const std::vector<long>& n, int d, int k);

// Bounds on f_{k-1} of the sum, 1 <= k <= d. Both dispatch d = 2, 3 to the
// closed forms and throw InternalInconsistency if the general formula disagrees.
ExactInteger two_sum_bound(long n1, long n2, int d, int k);
ExactInteger three_sum_bound(long n1, long n2, long n3, int d, int k);

// The general formulas alone, without dispatch.
ExactInteger two_sum_bound_general(long n1, long n2, int d, int k);
ExactInteger three_sum_bound_general(long n1, long n2, long n3, int d, int k);

// Closed forms for d = 3, indexed by k = 1..3.
ExactInteger two_sum_bound_d3(long n1, long n2, int k);
ExactInteger three_sum_bound_d3(long n1, long n2, long n3, int k);

// f_k(P1+P2+P3) = alpha + sum_{i<j} f_k(Pi+Pj) - sum_i f_k(Pi), alpha = 2 iff k = 0.
// Tables are f-vectors (lowest index -1); index order of pairs: 12, 13, 23.
bool weibel_identity_3d(const std::vector<CountVector>& singles,
                        const std::vector<CountVector>& pairs,
                        const CountVector& triple, int k);

struct BoundRow {
    ExactInteger bound;
    std::optional<ExactInteger> achieved;
    std::optional<bool> tight;
};

struct BoundReport {
    int d = 0;
    std::vector<long> n;
    std::map<int, BoundRow> per_k;  // k = 1..d, row bounds f_{k-1} of the sum

    bool consistent() const;  // bound >= achieved wherever achieved is known
};

BoundReport bound_report(const std::vector<long>& n, int d);
void attach_achieved(BoundReport& rep, const CountVector& sum_f);

}  // namespace polysum
