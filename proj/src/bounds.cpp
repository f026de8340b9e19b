#include "polysum/bounds.hpp"

#include "polysum/error.hpp"

#include <bit>

namespace polysum {

ExactInteger cyclic_f(int D, long n, int k) {
    if (n <= D) throw DomainError("cyclic_f: need n > D");
    if (k < 0 || k > D) throw DomainError("cyclic_f: need 0 <= k <= D");
    // Sigma-star: the i = floor(D/2) term carries weight (1 + D - 2 floor(D/2)) / 2
    ExactScalar s = 0;
    const int top = D / 2;
    for (int i = 0; i <= top; ++i) {
        ExactScalar t((binom(D - i, k - i) + binom(i, k - D + i)) * binom(n - D - 1 + i, i));
        if (i == top) t *= ExactScalar(1 + D - 2 * top) / 2;
        s += t;
    }
    if (s.get_den() != 1) throw InternalInconsistency("cyclic_f: non-integral value");
    return s.get_num();
}

ExactInteger trivial_upper_bound(const std::vector<long>& n, int d, int k) {
    const int r = static_cast<int>(n.size());
    if (r < 2) throw DomainError("trivial_upper_bound: need at least two summands");
    if (d < 1 || k < 0 || k > d - 1) throw DomainError("trivial_upper_bound: need 0 <= k <= d-1");
    const long total = k + r;
    // sum over compositions s_1 + ... + s_r = total with 1 <= s_i <= n_i
    ExactInteger sum = 0;
    auto rec = [&](auto&& self, int i, long left, const ExactInteger& prod) -> void {
        if (i == r - 1) {
            if (left >= 1 && left <= n[i]) sum += prod * binom(n[i], left);
            return;
        }
        for (long v = 1; v <= n[i] && v <= left - (r - 1 - i); ++v) self(self, i + 1, left - v, prod * binom(n[i], v));
    };
    rec(rec, 0, total, ExactInteger(1));
    return sum;
}

namespace {

void check_n(std::initializer_list<long> ns, int d) {
    for (long n : ns)
        if (n <= d) throw DomainError("bound: every n_i must exceed d");
}

void check_k(int d, int k) {
    if (d < 2) throw DomainError("bound: need d >= 2");
    if (k < 1 || k > d) throw DomainError("bound: need 1 <= k <= d");
}

}  // namespace

ExactInteger two_sum_bound_general(long n1, long n2, int d, int k) {
    check_n({n1, n2}, d);
    check_k(d, k);
    ExactInteger b = cyclic_f(d + 1, n1 + n2, k + 1);
    for (int i = 0; i <= (d + 1) / 2; ++i)
        b -= binom(d + 1 - i, k + 1 - i) * (binom(n1 - d - 2 + i, i) + binom(n2 - d - 2 + i, i));
    return b;
}

ExactInteger two_sum_bound_d3(long n1, long n2, int k) {
    switch (k) {
        case 1: return ExactInteger(n1) * n2;
        case 2: return 2 * ExactInteger(n1) * n2 + n1 + n2 - 8;
        case 3: return ExactInteger(n1) * n2 + n1 + n2 - 6;
    }
    throw DomainError("two_sum_bound_d3: need 1 <= k <= 3");
}

ExactInteger two_sum_bound(long n1, long n2, int d, int k) {
    check_n({n1, n2}, d);
    check_k(d, k);
    ExactInteger general = two_sum_bound_general(n1, n2, d, k);
    if (d == 2 || d == 3) {
        ExactInteger special = d == 2 ? ExactInteger(n1 + n2) : two_sum_bound_d3(n1, n2, k);
        if (special != general) throw InternalInconsistency("two_sum_bound: closed form disagrees with general formula");
        return special;
    }
    return general;
}

ExactInteger three_sum_bound_general(long n1, long n2, long n3, int d, int k) {
    check_n({n1, n2, n3}, d);
    check_k(d, k);
    const long n[3] = {n1, n2, n3};
    auto n_of = [&](unsigned S) {
        long s = 0;
        for (int i = 0; i < 3; ++i)
            if (S >> i & 1) s += n[i];
        return s;
    };
    ExactInteger b = cyclic_f(d + 2, n1 + n2 + n3, k + 2);
    for (int i = 0; i <= (d + 2) / 2; ++i) {
        ExactInteger inner = 0;
        for (unsigned S = 1; S < 7; ++S) {
            ExactInteger t = binom(n_of(S) - d - 3 + i, i);
            if (std::popcount(S) % 2) inner -= t; else inner += t;
        }
        b -= binom(d + 2 - i, k + 2 - i) * inner;
    }
    const int h = d / 2;
    if (d % 2) {
        ExactInteger corr = 0;
        for (long ni : n) corr += binom(ni - h - 2, h + 1);
        b -= binom(h + 1, k - h) * corr;
    }
    return b;
}

ExactInteger three_sum_bound_d3(long n1, long n2, long n3, int k) {
    ExactInteger pairs = ExactInteger(n1) * n2 + ExactInteger(n1) * n3 + ExactInteger(n2) * n3;
    long singles = n1 + n2 + n3;
    switch (k) {
        case 1: return pairs - singles + 2;
        case 2: return 2 * pairs - singles - 6;
        case 3: return pairs - 6;
    }
    throw DomainError("three_sum_bound_d3: need 1 <= k <= 3");
}

ExactInteger three_sum_bound(long n1, long n2, long n3, int d, int k) {
    check_n({n1, n2, n3}, d);
    check_k(d, k);
    ExactInteger general = three_sum_bound_general(n1, n2, n3, d, k);
    if (d == 2 || d == 3) {
        ExactInteger special = d == 2 ? ExactInteger(n1 + n2 + n3) : three_sum_bound_d3(n1, n2, n3, k);
        if (special != general) throw InternalInconsistency("three_sum_bound: closed form disagrees with general formula");
        return special;
    }
    return general;
}

bool weibel_identity_3d(const std::vector<CountVector>& singles,
                        const std::vector<CountVector>& pairs,
                        const CountVector& triple, int k) {
    if (singles.size() != 3 || pairs.size() != 3) throw DomainError("weibel_identity_3d: need 3 singles and 3 pairs");
    ExactInteger rhs = k == 0 ? 2 : 0;
    for (auto& p : pairs) rhs += p.at(k);
    for (auto& s : singles) rhs -= s.at(k);
    return triple.at(k) == rhs;
}

bool BoundReport::consistent() const {
    for (auto& [k, row] : per_k)
        if (row.achieved && *row.achieved > row.bound) return false;
    return true;
}

BoundReport bound_report(const std::vector<long>& n, int d) {
    if (n.size() < 2 || n.size() > 3) throw DomainError("bound_report: need 2 or 3 summands");
    BoundReport rep;
    rep.d = d;
    rep.n = n;
    for (int k = 1; k <= d; ++k) {
        BoundRow row;
        row.bound = n.size() == 2 ? two_sum_bound(n[0], n[1], d, k) : three_sum_bound(n[0], n[1], n[2], d, k);
        rep.per_k[k] = row;
    }
    return rep;
}

void attach_achieved(BoundReport& rep, const CountVector& sum_f) {
    for (auto& [k, row] : rep.per_k) {
        row.achieved = sum_f.at(k - 1);
        row.tight = *row.achieved == row.bound;
    }
}

}  // namespace polysum
