#include "polysum/hg_algebra.hpp"

#include "polysum/error.hpp"

namespace polysum {

namespace {

HVector h_of(const FaceSetCounts& fs, ColorMask S) {
    return h_from_f(fs.of(S), fs.d + popcount(S) - 2);
}

ExactScalar q(const ExactInteger& z) { return ExactScalar(z); }

}  // namespace

void assert_integral(const HVector& h, const char* where) {
    if (!h.integral()) throw InternalInconsistency(std::string(where) + ": non-integral h-vector");
}

HVector h_from_f(const CountVector& f, int delta) {
    HVector h;
    h.delta = delta;
    h.values.resize(delta + 2);
    for (int k = 0; k <= delta + 1; ++k) {
        ExactInteger s = 0;
        for (int i = 0; i <= delta + 1; ++i) {
            ExactInteger t = binom(delta + 1 - i, delta + 1 - k) * f.at(i - 1);
            if ((k - i) % 2) s -= t; else s += t;
        }
        h.values[k] = q(s);
    }
    return h;
}

CountVector f_from_h(const HVector& h) {
    assert_integral(h, "f_from_h");
    const int delta = h.delta;
    CountVector f = CountVector::zeros(delta);
    for (int k = 0; k <= delta + 1; ++k) {
        ExactScalar s = 0;
        for (int i = 0; i <= delta + 1; ++i) s += q(binom(delta + 1 - i, k - i)) * h.at(i);
        f.set(k - 1, s.get_num());
    }
    return f;
}

GVector g_order(const HVector& h, int m) {
    if (m < 0) throw ContractError("g_order: negative order");
    GVector g;
    g.order = m;
    const int len = static_cast<int>(h.values.size()) + m;
    g.values.resize(len);
    for (int k = 0; k < len; ++k) {
        ExactScalar s = 0;
        for (int i = 0; i <= m; ++i) {
            ExactScalar t = q(binom(m, i)) * h.at(k - i);
            if (i % 2) s -= t; else s += t;
        }
        g.values[k] = s;
    }
    return g;
}

GVector g_order_recursive(const HVector& h, int m) {
    if (m < 0) throw ContractError("g_order: negative order");
    GVector g;
    g.order = 0;
    g.values = h.values;
    for (int step = 1; step <= m; ++step) {
        GVector next;
        next.order = step;
        next.values.resize(g.values.size() + 1);
        for (int k = 0; k < static_cast<int>(next.values.size()); ++k) next.values[k] = g.at(k) - g.at(k - 1);
        g = std::move(next);
    }
    return g;
}

ExactScalar sum_operator(const CountVector& f, int k, int D, int nu) {
    const int delta = f.delta;
    if (nu < 0 || delta > D || D - delta - nu < 0)
        throw ContractError("sum_operator: need nu >= 0, delta <= D, D - delta - nu >= 0");
    ExactInteger s = 0;
    for (int i = 0; i <= D + 1; ++i) {
        ExactInteger t = binom(D + 1 - i, D + 1 - k) * f.at(i - 1 - nu);
        if ((k - i) % 2) s -= t; else s += t;
    }
    return q(s);
}

HVector h_K_from_F(const FaceSetCounts& fs, ColorMask R) {
    const int r_size = popcount(R);
    HVector h;
    h.delta = fs.d + r_size - 2;
    h.values.assign(h.delta + 2, 0);
    for (ColorMask S = R; S; S = (S - 1) & R) {
        GVector g = g_order(h_of(fs, S), r_size - popcount(S));
        for (int k = 0; k <= h.delta + 1; ++k) h.values[k] += g.at(k);
    }
    assert_integral(h, "h_K_from_F");
    return h;
}

CountVector f_K_from_F(const FaceSetCounts& fs, ColorMask R) {
    const int delta = fs.d + popcount(R) - 2;
    CountVector f = CountVector::zeros(delta);
    for (int k = -1; k <= delta; ++k) {
        ExactInteger s = 0;
        for (ColorMask S = R; S; S = (S - 1) & R) s += fs.of(S).at(k);
        f.set(k, s);
    }
    return f;
}

HVector h_boundary_Q(const FaceSetCounts& fs) {
    if (fs.r != 3) throw ContractError("h_boundary_Q: needs three summands");
    HVector h;
    h.delta = fs.d + 1;
    h.values.assign(fs.d + 3, 0);
    for (ColorMask R = 1; R <= 7; ++R) {
        HVector hr = h_of(fs, R);
        for (int k = 0; k <= fs.d + 2; ++k) {
            h.values[k] += hr.at(k);
            if (popcount(R) == 1) h.values[k] += hr.at(k - 1);
        }
    }
    assert_integral(h, "h_boundary_Q");
    return h;
}

HVector h_boundary_Q_from_f(const FaceSetCounts& fs) {
    if (fs.r != 3) throw ContractError("h_boundary_Q_from_f: needs three summands");
    CountVector f = CountVector::zeros(fs.d + 1);
    for (int k = -1; k <= fs.d + 1; ++k) {
        ExactInteger s = 0;
        for (ColorMask R = 1; R <= 7; ++R) {
            const CountVector& fr = fs.of(R);
            switch (popcount(R)) {
                case 3: s += fr.at(k); break;
                case 2: s += fr.at(k) + fr.at(k - 1); break;
                default: s += fr.at(k) + 3 * fr.at(k - 1) + 2 * fr.at(k - 2); break;
            }
        }
        f.set(k, s);
    }
    return h_from_f(f, fs.d + 1);
}

bool check_DSW(const FaceSetCounts& fs) {
    if (fs.r != 3) throw ContractError("check_DSW: needs three summands");
    HVector hf = h_of(fs, 7);
    HVector hk;
    try {
        hk = h_K_from_F(fs, 7);
    } catch (const InternalInconsistency&) {
        return false;
    }
    for (int k = 0; k <= fs.d + 2; ++k)
        if (hf.at(fs.d + 2 - k) != hk.at(k)) return false;
    return true;
}

bool check_recurrence_r8(const FaceSetCounts& fs, const std::array<long, 3>& n, int d) {
    HVector h3 = h_of(fs, 7);
    GVector g[3];
    for (int i = 0; i < 3; ++i) g[i] = g_order(h_of(fs, 7 & ~(1u << i)), 1);
    const long n_all = n[0] + n[1] + n[2];
    for (int k = 0; k <= d + 1; ++k) {
        ExactScalar rhs = (ExactScalar(n_all - d - 2 + k) / (k + 1)) * h3.at(k);
        for (int i = 0; i < 3; ++i) rhs += (ExactScalar(n[i]) / (k + 1)) * g[i].at(k);
        if (h3.at(k + 1) > rhs) return false;
    }
    return true;
}

bool HBoundsReport::all_hold() const {
    for (auto& c : checks)
        if (!c.holds()) return false;
    return true;
}

HBoundsReport check_h_bounds(const FaceSetCounts& fs, const std::array<long, 3>& n, int d) {
    HBoundsReport rep;
    auto n_of = [&](ColorMask S) {
        long s = 0;
        for (int i = 0; i < 3; ++i)
            if (S >> i & 1) s += n[i];
        return s;
    };
    // g-vector bound for the three two-color sets
    for (ColorMask R : {3u, 5u, 6u}) {
        GVector g = g_order(h_of(fs, R), 1);
        for (int k = 0; k <= d + 2; ++k) {
            ExactInteger rhs = 0;
            for (ColorMask S = R; S; S = (S - 1) & R) {
                ExactInteger b = binom(n_of(S) - d - 3 + k, k);
                if (popcount(S) % 2) rhs -= b; else rhs += b;
            }
            rep.checks.push_back({"gF", R, k, g.at(k), q(rhs)});
        }
    }
    HVector h3 = h_of(fs, 7);
    for (int k = 0; k <= d + 2; ++k) {
        ExactInteger rhs = 0;
        for (ColorMask S = 1; S <= 7; ++S) {
            ExactInteger b = binom(n_of(S) - d - 3 + k, k);
            if ((3 - popcount(S)) % 2) rhs -= b; else rhs += b;
        }
        rep.checks.push_back({"hF3", 7, k, h3.at(k), q(rhs)});
    }
    HVector hk = h_K_from_F(fs, 7);
    const long n_all = n[0] + n[1] + n[2];
    for (int k = 0; k <= d + 2; ++k)
        rep.checks.push_back({"hK3", 7, k, hk.at(k), q(binom(n_all - d - 3 + k, k))});
    if (d >= 3 && d % 2 == 1) {
        const int h = d / 2;
        ExactInteger rhs = binom(n_all - h - 3, h + 1);
        for (int i = 0; i < 3; ++i) rhs -= binom(n[i] - h - 2, h + 1);
        rep.checks.push_back({"hK3mid", 7, h + 1, hk.at(h + 1), q(rhs)});
    }
    return rep;
}

}  // namespace polysum
