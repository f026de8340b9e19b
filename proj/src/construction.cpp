#include "polysum/construction.hpp"

#include "polysum/error.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

namespace polysum {

ExactScalar power(const ExactScalar& base, long e) {
    if (e < 0) return 1 / power(base, -e);
    ExactScalar r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

ConstructionParams ConstructionParams::standard(int d, const std::array<long, 3>& n, const ExactScalar& tau) {
    ConstructionParams p;
    p.d = d;
    p.n = n;
    for (int i = 0; i < 3; ++i)
        for (long j = 1; j <= n[i]; ++j) p.x[i].emplace_back(j);
    p.epsilon = ExactScalar(1, 2);
    p.M = d * (d + 1);
    p.tau = tau;
    return p;
}

void ConstructionParams::validate() const {
    if (d < 3) throw DomainError("construction: need d >= 3");
    if (M < d * (d + 1)) throw DomainError("construction: need M >= d(d+1)");
    if (tau <= 0) throw DomainError("construction: need tau > 0");
    if (epsilon <= 0) throw DomainError("construction: need epsilon > 0");
    for (int i = 0; i < 3; ++i) {
        if (n[i] <= d) throw DomainError("construction: need n_i > d");
        if (static_cast<long>(x[i].size()) != n[i]) throw DomainError("construction: grid size differs from n_i");
        for (long j = 0; j < n[i]; ++j) {
            if (x[i][j] <= 0) throw DomainError("construction: grid must be positive");
            if (j + 1 < n[i] && !(x[i][j] + epsilon < x[i][j + 1]))
                throw DomainError("construction: need x_{i,j} + epsilon < x_{i,j+1}");
        }
    }
}

ExactScalar ConstructionParams::zeta() const { return power(tau, M); }

ExactScalar ConstructionParams::t(int i, int j) const { return x.at(i - 1).at(j - 1) * power(tau, nu(i)); }

ExactScalar ConstructionParams::t_eps(int i, int j) const {
    return (x.at(i - 1).at(j - 1) + epsilon) * power(tau, nu(i));
}

Point curve_point(int i, const ExactScalar& t, const ExactScalar& zeta, int d) {
    if (i < 1 || i > 3) throw DomainError("curve_point: curve index must be 1, 2 or 3");
    if (d < 3) throw DomainError("curve_point: need d >= 3");
    Point q(d);
    ExactScalar tp = 1;
    for (int c = 1; c <= d; ++c) {
        tp *= t;
        // among the first three coordinates only the i-th is left unscaled
        q[c - 1] = (c <= 3 && c != i) ? ExactScalar(zeta * tp) : tp;
    }
    return q;
}

ConstructionInstance build_instance(const ConstructionParams& p) {
    p.validate();
    ConstructionInstance inst;
    const ExactScalar zeta = p.zeta();
    for (int i = 1; i <= 3; ++i) {
        std::vector<Point> pts;
        for (long j = 1; j <= p.n[i - 1]; ++j) pts.push_back(curve_point(i, p.t(i, j), zeta, p.d));
        inst.P[i - 1] = convex_hull(pts);
        if (static_cast<long>(inst.P[i - 1].vertices.size()) != p.n[i - 1])
            throw ConstructionFailure("build_instance: a curve point of P_" + std::to_string(i) + " is not extreme");
    }
    try {
        inst.cayley = cayley_embed({inst.P[0], inst.P[1], inst.P[2]});
    } catch (const InvalidInstance& e) {
        throw ConstructionFailure(std::string("build_instance: ") + e.what());
    }
    return inst;
}

ConditionReport verify_conditions(const CayleyInstance& c, const std::array<long, 3>& n, int d) {
    if (c.r != 3) throw DomainError("verify_conditions: needs three summands");
    if (!check_genericity(c)) throw GenericityViolation("verify_conditions: Cayley polytope is not generic");
    ConditionReport rep;
    auto fc = face_set_counts(c);
    for (ColorMask R = 1; R <= 7; ++R) {
        const int rs = popcount(R);
        for (int l = 0; l <= (d + rs - 1) / 2; ++l) {
            ExactInteger expected = 0;
            for (ColorMask S = R; S; S = (S - 1) & R) {
                long ns = 0;
                for (int i = 0; i < 3; ++i)
                    if (S >> i & 1) ns += n[i];
                ExactInteger b = binom(ns, l);
                if ((rs - popcount(S)) % 2) expected -= b; else expected += b;
            }
            ExactInteger actual = fc.of(R).at(l - 1);
            if (actual != expected) rep.failures.push_back({R, l, expected, actual});
        }
    }
    rep.satisfied = rep.failures.empty();
    return rep;
}

int default_j_max() {
    if (const char* s = std::getenv("POLYSUM_JMAX")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
        throw DomainError("POLYSUM_JMAX must be a positive integer");
    }
    return 60;
}

TauSearchResult find_tight_tau(int d, const std::array<long, 3>& n,
                               const std::array<std::vector<ExactScalar>, 3>& x_grid, int M,
                               int j_max) {
    if (d < 4) throw DomainError("find_tight_tau: need d >= 4");
    TauSearchResult res;
    for (int j = 1; j <= j_max; ++j) {
        ConstructionParams p = ConstructionParams::standard(d, n, ExactScalar(1) / power(ExactScalar(2), j));
        p.x = x_grid;
        p.M = M;
        TauAttempt at{j, "", {}};
        try {
            auto inst = build_instance(p);
            auto rep = verify_conditions(inst.cayley, n, d);
            if (rep.satisfied) {
                at.outcome = "certified";
                res.attempts.push_back(at);
                res.tau = p.tau;
                res.j = j;
                res.params = p;
                res.instance = std::move(inst);
                res.report = std::move(rep);
                return res;
            }
            at.outcome = "conditions";
            at.failures = rep.failures;
        } catch (const ConstructionFailure&) {
            at.outcome = "not-extreme";
        } catch (const GenericityViolation&) {
            at.outcome = "non-generic";
        }
        res.attempts.push_back(std::move(at));
    }
    std::string msg = "find_tight_tau: no certified tau for j <= " + std::to_string(j_max);
    if (!res.attempts.empty()) {
        const auto& last = res.attempts.back();
        msg += "; last attempt j=" + std::to_string(last.j) + " failed (" + last.outcome + ")";
        for (auto& f : last.failures)
            msg += "; R=" + std::to_string(f.colors) + " l=" + std::to_string(f.l) + " expected " +
                   f.expected.get_str() + " got " + f.actual.get_str();
    }
    throw SearchExhausted(msg);
}

Point cayley_point(const ConstructionParams& p, ColorMask R, int i, const ExactScalar& t) {
    if (!(R >> (i - 1) & 1)) throw DomainError("cayley_point: color not in R");
    Point g = curve_point(i, t, p.zeta(), p.d);
    Point q;
    if (popcount(R) == 3) {
        q = {i == 2 ? 1 : 0, i == 3 ? 1 : 0};
    } else if (popcount(R) == 2) {
        int lowest = 1;
        while (!(R >> (lowest - 1) & 1)) ++lowest;
        q = {i == lowest ? 0 : 1};
    } else {
        throw DomainError("cayley_point: R must have two or three colors");
    }
    q.insert(q.end(), g.begin(), g.end());
    return q;
}

int hyperplane_test(const HyperplaneQuery& U, const Point& v, const ConstructionParams& p) {
    const ColorMask R = U.colors;
    const int rs = popcount(R);
    if (rs < 2 || R > 7) throw DomainError("hyperplane_test: R must have two or three colors");
    int k = 0;
    for (int i = 0; i < 3; ++i) {
        const bool in = R >> i & 1;
        if (!in && !U.chosen[i].empty()) throw DomainError("hyperplane_test: vertex of a color outside R");
        if (in && U.chosen[i].empty()) throw DomainError("hyperplane_test: every color of R needs a vertex");
        for (std::size_t a = 0; a < U.chosen[i].size(); ++a) {
            int j = U.chosen[i][a];
            if (j < 1 || j > p.n[i] || (a && U.chosen[i][a - 1] >= j))
                throw DomainError("hyperplane_test: chosen indices must be increasing and in range");
        }
        k += static_cast<int>(U.chosen[i].size());
    }
    const int size = p.d + rs;  // matrix order: 1 + dimension of the Cayley space
    if (rs == 3 && (k < 3 || k > (p.d + 2) / 2)) throw DomainError("hyperplane_test: need 3 <= k <= floor((d+2)/2)");
    if (rs == 2 && k != (p.d + 1) / 2) throw DomainError("hyperplane_test: need k = floor((d+1)/2)");
    if (static_cast<int>(v.size()) != size - 1) throw DimensionError("hyperplane_test: v has the wrong dimension");

    int last = 3;
    while (!(R >> (last - 1) & 1)) --last;
    const int pad = size - 1 - 2 * k;
    std::vector<Point> cols;
    cols.push_back(v);
    for (int i = 1; i <= 3; ++i)
        for (int j : U.chosen[i - 1]) {
            cols.push_back(cayley_point(p, R, i, p.t(i, j)));
            cols.push_back(cayley_point(p, R, i, p.t_eps(i, j)));
        }
    const ExactScalar X = p.x[last - 1].back() + p.epsilon + 1;
    const ExactScalar T = X * power(p.tau, p.nu(last));
    for (int lam = 1; lam <= pad; ++lam) cols.push_back(cayley_point(p, R, last, lam * T));

    ExactMatrix m(size, size);
    for (int c = 0; c < size; ++c) {
        m(0, c) = 1;
        for (int r = 1; r < size; ++r) m(r, c) = cols[c][r - 1];
    }
    const int raw = sgn(det(m));

    // orientation: the barycentre of the R-colored vertices counts as positive
    Point bary(size - 1, ExactScalar(0));
    long count = 0;
    for (int i = 1; i <= 3; ++i) {
        if (!(R >> (i - 1) & 1)) continue;
        for (long j = 1; j <= p.n[i - 1]; ++j) {
            Point q = cayley_point(p, R, i, p.t(i, static_cast<int>(j)));
            for (int r = 0; r < size - 1; ++r) bary[r] += q[r];
            ++count;
        }
    }
    for (int r = 1; r < size; ++r) m(r, 0) = bary[r - 1] / count;
    const int ref = sgn(det(m));
    return ref < 0 ? -raw : raw;
}

namespace {

// all increasing k-subsets of {1..n}
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    if (k > n) return out;
    while (true) {
        out.push_back(c);
        int i = k;
        while (i > 0 && c[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (int j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

}  // namespace

bool hyperplane_certificate(const ConstructionParams& p) {
    p.validate();
    for (ColorMask R : {3u, 5u, 6u, 7u}) {
        const int rs = popcount(R);
        std::vector<int> ks;
        if (rs == 2) ks = {(p.d + 1) / 2};
        else
            for (int k = 3; k <= (p.d + 2) / 2; ++k) ks.push_back(k);
        std::vector<int> colors;
        for (int i = 1; i <= 3; ++i)
            if (R >> (i - 1) & 1) colors.push_back(i);
        for (int k : ks) {
            // compositions of k into positive parts, one per color of R
            std::vector<int> parts(colors.size(), 1);
            auto visit = [&](auto&& self, std::size_t idx, int left) -> bool {
                if (idx + 1 == colors.size()) {
                    if (left < 1) return true;
                    parts[idx] = left;
                    // cartesian product of the index subsets
                    std::vector<std::vector<std::vector<int>>> choices;
                    for (std::size_t a = 0; a < colors.size(); ++a)
                        choices.push_back(subsets(static_cast<int>(p.n[colors[a] - 1]), parts[a]));
                    std::vector<std::size_t> pos(colors.size(), 0);
                    for (auto& ch : choices)
                        if (ch.empty()) return true;
                    while (true) {
                        HyperplaneQuery U;
                        U.colors = R;
                        for (std::size_t a = 0; a < colors.size(); ++a) U.chosen[colors[a] - 1] = choices[a][pos[a]];
                        for (int i : colors)
                            for (int j = 1; j <= p.n[i - 1]; ++j) {
                                bool used = false;
                                for (int u : U.chosen[i - 1]) used |= u == j;
                                if (used) continue;
                                if (hyperplane_test(U, cayley_point(p, R, i, p.t(i, j)), p) <= 0) return false;
                            }
                        std::size_t a = 0;
                        while (a < pos.size() && ++pos[a] == choices[a].size()) pos[a++] = 0;
                        if (a == pos.size()) break;
                    }
                    return true;
                }
                for (int v = 1; v <= left - static_cast<int>(colors.size() - 1 - idx); ++v) {
                    parts[idx] = v;
                    if (!self(self, idx + 1, left - v)) return false;
                }
                return true;
            };
            if (!visit(visit, 0, k)) return false;
        }
    }
    return true;
}

std::array<Polytope, 3> polygon_triple(const std::array<long, 3>& n, std::uint64_t seed) {
    for (long ni : n)
        if (ni < 3) throw DomainError("polygon_triple: need n_i >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<std::vector<Point>, 3> pts;
        for (int i = 0; i < 3; ++i) {
            // jittered equal spacing keeps the polygon convex and nondegenerate
            const double offset = unit(rng) * 2 * std::numbers::pi;
            for (long j = 0; j < n[i]; ++j) {
                double theta = offset + (j + 0.15 + 0.7 * unit(rng)) * 2 * std::numbers::pi / n[i];
                double tt = std::tan(theta / 2);
                if (std::fabs(tt) > 50) tt = tt > 0 ? 50 : -50;
                ExactScalar t(static_cast<long>(std::llround(tt * 1024)), 1024);
                t.canonicalize();
                ExactScalar den = 1 + t * t;
                pts[i].push_back({(1 - t * t) / den, 2 * t / den});
            }
        }
        std::array<Polytope, 3> P;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            P[i] = convex_hull(pts[i]);
            ok = static_cast<long>(P[i].vertices.size()) == n[i];
        }
        if (!ok) continue;
        // edge directions as facet normals; parallel edges share a normal up to sign
        for (int a = 0; a < 3 && ok; ++a)
            for (int b = a + 1; b < 3 && ok; ++b)
                for (auto& fa : P[a].facets)
                    for (auto& fb : P[b].facets)
                        if (fa.normal[0] * fb.normal[1] == fa.normal[1] * fb.normal[0]) ok = false;
        if (ok) return P;
    }
    throw ConstructionFailure("polygon_triple: could not place polygons with distinct edge directions");
}

}  // namespace polysum
