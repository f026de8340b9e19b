#include "polysum/vandermonde.hpp"

#include "polysum/error.hpp"

#include <algorithm>
#include <numeric>

namespace polysum {

TauPolynomial TauPolynomial::monomial(const ExactScalar& c, long e) {
    TauPolynomial p;
    p.add_term(e, c);
    return p;
}

ExactScalar TauPolynomial::coefficient(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

void TauPolynomial::add_term(long e, const ExactScalar& c) {
    if (e < 0) throw DomainError("TauPolynomial: negative exponent");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TauPolynomial TauPolynomial::operator+(const TauPolynomial& o) const {
    TauPolynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TauPolynomial TauPolynomial::operator-(const TauPolynomial& o) const {
    TauPolynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

TauPolynomial TauPolynomial::operator*(const TauPolynomial& o) const {
    TauPolynomial r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

ExactScalar TauPolynomial::evaluate(const ExactScalar& tau) const {
    ExactScalar s = 0, pw = 1;
    long at = 0;
    for (auto& [e, c] : terms_) {
        while (at < e) {
            pw *= tau;
            ++at;
        }
        s += c * pw;
    }
    return s;
}

std::string TauPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*t^" + std::to_string(e);
    }
    return s;
}

std::pair<long, ExactScalar> leading_term(const TauPolynomial& p) {
    if (p.is_zero()) throw DomainError("leading_term: zero polynomial");
    auto it = p.terms().begin();
    return {it->first, it->second};
}

namespace {

// Dense integer polynomial c[0] + c[1] t + ... shifted by t^val.
struct IntPoly {
    long val = 0;
    std::vector<ExactInteger> c;

    bool zero() const { return c.empty(); }
    void trim() {
        std::size_t lo = 0;
        while (lo < c.size() && c[lo] == 0) ++lo;
        if (lo == c.size()) {
            c.clear();
            val = 0;
            return;
        }
        if (lo) {
            c.erase(c.begin(), c.begin() + lo);
            val += static_cast<long>(lo);
        }
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.zero() || b.zero()) return r;
    r.val = a.val + b.val;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    r.trim();
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    if (b.zero()) return a;
    IntPoly r;
    if (a.zero()) {
        r = b;
        for (auto& x : r.c) x = -x;
        return r;
    }
    r.val = std::min(a.val, b.val);
    long hi = std::max(a.val + static_cast<long>(a.c.size()), b.val + static_cast<long>(b.c.size()));
    r.c.assign(hi - r.val, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.val - r.val + i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[b.val - r.val + i] -= b.c[i];
    r.trim();
    return r;
}

// Exact quotient a / b in Z[t]; division proceeds from the lowest degree up.
IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (a.zero()) return a;
    IntPoly q;
    q.val = a.val - b.val;
    if (q.val < 0 || a.c.size() < b.c.size()) throw InternalInconsistency("det_tau: inexact division");
    const std::size_t qn = a.c.size() - b.c.size() + 1;
    q.c.assign(qn, 0);
    std::vector<ExactInteger> rem = a.c;
    ExactInteger t;
    for (std::size_t i = 0; i < qn; ++i) {
        if (rem[i] == 0) continue;
        mpz_divexact(q.c[i].get_mpz_t(), rem[i].get_mpz_t(), b.c[0].get_mpz_t());
        for (std::size_t j = 0; j < b.c.size(); ++j) mpz_submul(rem[i + j].get_mpz_t(), q.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    q.trim();
    return q;
}

IntPoly det_intpoly(std::vector<std::vector<IntPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0) return IntPoly{0, {1}};
    bool negate = false;
    IntPoly prev{0, {1}};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].zero()) ++p;
            if (p == n) return IntPoly{};
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = divexact(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
        }
        prev = a[k][k];
    }
    IntPoly r = a[n - 1][n - 1];
    if (negate)
        for (auto& x : r.c) x = -x;
    return r;
}

}  // namespace

TauPolynomial det_tau(const TauMatrix& m) {
    const std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw DimensionError("det_tau: matrix is not square");
    // clear denominators row by row
    ExactInteger scale = 1;
    std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        ExactInteger l = 1;
        for (auto& p : m[i])
            for (auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& t = m[i][j].terms();
            if (t.empty()) continue;
            IntPoly& q = a[i][j];
            q.val = t.begin()->first;
            q.c.assign(t.rbegin()->first - q.val + 1, 0);
            for (auto& [e, c] : t) q.c[e - q.val] = c.get_num() * (l / c.get_den());
        }
    }
    IntPoly d = det_intpoly(std::move(a));
    TauPolynomial out;
    for (std::size_t i = 0; i < d.c.size(); ++i) {
        ExactScalar c(d.c[i], scale);
        c.canonicalize();
        out.add_term(d.val + static_cast<long>(i), c);
    }
    return out;
}

ExactScalar gvd(const GvdSpec& s) {
    const std::size_t n = s.x.size();
    if (s.mu.size() != n || n == 0) throw DomainError("gvd: nodes and exponents differ in length");
    for (std::size_t i = 0; i < n; ++i) {
        if (s.x[i] <= 0 || (i && s.x[i - 1] >= s.x[i])) throw DomainError("gvd: nodes must be positive and increasing");
        if (s.mu[i] < 0 || (i && s.mu[i - 1] >= s.mu[i])) throw DomainError("gvd: exponents must be increasing");
    }
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ExactScalar v = 1;
            for (long e = 0; e < s.mu[i]; ++e) v *= s.x[j];
            m(i, j) = v;
        }
    return det(m);
}

ExactScalar laplace_expand(const ExactMatrix& m, const std::vector<std::size_t>& cols) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionError("laplace_expand: matrix is not square");
    const std::size_t k = cols.size();
    if (k == 0 || k >= n) throw DomainError("laplace_expand: need a nonempty proper column subset");
    std::vector<std::size_t> c = cols;
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end() || c.back() >= n)
        throw DomainError("laplace_expand: bad column subset");
    std::vector<std::size_t> cbar;
    for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(c.begin(), c.end(), j)) cbar.push_back(j);
    // 1-based index sums in the sign
    std::size_t csum = std::accumulate(c.begin(), c.end(), std::size_t(0)) + k;

    ExactScalar total = 0;
    std::vector<std::size_t> r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = i;
    while (true) {
        std::vector<std::size_t> rbar;
        for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(r.begin(), r.end(), i)) rbar.push_back(i);
        std::size_t rsum = std::accumulate(r.begin(), r.end(), std::size_t(0)) + k;
        ExactScalar term = det(m.minor(r, c)) * det(m.minor(rbar, cbar));
        if ((rsum + csum) % 2) total -= term; else total += term;
        std::size_t i = k;
        while (i > 0 && r[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++r[i - 1];
        for (std::size_t j = i; j < k; ++j) r[j] = r[j - 1] + 1;
    }
    return total;
}

namespace {

void check_increasing_positive(const std::vector<ExactScalar>& v, std::size_t len, const char* what) {
    if (v.size() != len) throw DomainError(std::string(what) + ": wrong number of nodes");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] <= 0 || (i && v[i - 1] >= v[i])) throw DomainError(std::string(what) + ": nodes must be positive and increasing");
}

long mu_sum(const std::vector<long>& mu) { return std::accumulate(mu.begin(), mu.end(), 0L); }

// coefficient c^e as a rational
ExactScalar pow_q(const ExactScalar& c, long e) {
    ExactScalar r = 1;
    for (long i = 0; i < e; ++i) r *= c;
    return r;
}

}  // namespace

void validate(const Det2Params& p) {
    if (p.n < 2 || p.m < 2 || p.n + p.m < 5) throw DomainError("det2: need n, m >= 2 and n + m >= 5");
    const std::size_t l = p.n + p.m;
    bool ij_ok = (p.I == 3 && p.J == 4) || (p.I == 3 && p.J == 5) || (p.I == 4 && p.J == 5);
    if (!ij_ok) throw DomainError("det2: (I,J) must be (3,4), (3,5) or (4,5)");
    if (p.J > p.n + 2) throw DomainError("det2: need J <= n + 2");
    if (p.mu.size() != l) throw DomainError("det2: mu must have n + m entries");
    if (!(0 <= p.mu[0] && p.mu[0] <= p.mu[1] && p.mu[1] < p.mu[2])) throw DomainError("det2: need 0 <= mu_1 <= mu_2 < mu_3");
    for (std::size_t i = 3; i < l; ++i)
        if (p.mu[i - 1] >= p.mu[i]) throw DomainError("det2: mu_3 < mu_4 < ... must increase");
    if (!(p.alpha > p.beta && p.beta >= 0)) throw DomainError("det2: need alpha > beta >= 0");
    if (p.M < p.alpha * mu_sum(p.mu)) throw DomainError("det2: need M >= alpha |mu|");
    check_increasing_positive(p.x, p.n, "det2 x");
    check_increasing_positive(p.y, p.m, "det2 y");
}

void validate(const Det3Params& p) {
    if (p.n < 2 || p.m < 2 || p.k < 2 || p.n + p.m + p.k < 7) throw DomainError("det3: need n, m, k >= 2 and n + m + k >= 7");
    const std::size_t l = p.n + p.m + p.k;
    if (p.mu.size() != l) throw DomainError("det3: mu must have n + m + k entries");
    if (!(0 <= p.mu[0] && p.mu[0] <= p.mu[1] && p.mu[1] <= p.mu[2] && p.mu[2] < p.mu[3]))
        throw DomainError("det3: need 0 <= mu_1 <= mu_2 <= mu_3 < mu_4");
    for (std::size_t i = 4; i < l; ++i)
        if (p.mu[i - 1] >= p.mu[i]) throw DomainError("det3: mu_4 < mu_5 < ... must increase");
    if (p.M < 2 * mu_sum(p.mu)) throw DomainError("det3: need M >= 2 |mu|");
    check_increasing_positive(p.x, p.n, "det3 x");
    check_increasing_positive(p.y, p.m, "det3 y");
    check_increasing_positive(p.z, p.k, "det3 z");
}

TauPolynomial det2_poly(const Det2Params& p) {
    validate(p);
    const int l = p.n + p.m;
    TauMatrix a(l, std::vector<TauPolynomial>(l));
    for (int row = 1; row <= l; ++row) {
        const long e = p.mu[row - 1];
        // extra tau^M on the x block (f) and the y block (g); the row outside
        // {I, J} among 3..5 is left unscaled on both blocks
        long fx = 0, gy = 0;
        if (row == p.J) fx = p.M;
        if (row == p.I) gy = p.M;
        for (int j = 0; j < p.n; ++j)
            if (row != 2) a[row - 1][j] = TauPolynomial::monomial(pow_q(p.x[j], e), p.alpha * e + fx);
        for (int j = 0; j < p.m; ++j)
            if (row != 1) a[row - 1][p.n + j] = TauPolynomial::monomial(pow_q(p.y[j], e), p.beta * e + gy);
    }
    TauPolynomial d = det_tau(a);
    if ((p.J + 1) % 2) d = TauPolynomial() - d;
    return d;
}

TauPolynomial det3_poly(const Det3Params& p) {
    validate(p);
    const int l = p.n + p.m + p.k;
    TauMatrix a(l, std::vector<TauPolynomial>(l));
    for (int row = 1; row <= l; ++row) {
        const long e = p.mu[row - 1];
        // rows 4, 5, 6 leave one block plain and scale the other two by tau^M
        long sx = 0, sy = 0, sz = 0;
        if (row == 4) sy = sz = p.M;
        if (row == 5) sx = sz = p.M;
        if (row == 6) sx = sy = p.M;
        bool bx = row != 2 && row != 3, by = row != 1 && row != 3, bz = row != 1 && row != 2;
        for (int j = 0; j < p.n && bx; ++j) a[row - 1][j] = TauPolynomial::monomial(pow_q(p.x[j], e), 2 * e + sx);
        for (int j = 0; j < p.m && by; ++j) a[row - 1][p.n + j] = TauPolynomial::monomial(pow_q(p.y[j], e), e + sy);
        for (int j = 0; j < p.k && bz; ++j) a[row - 1][p.n + p.m + j] = TauPolynomial::monomial(pow_q(p.z[j], e), sz);
    }
    return TauPolynomial() - det_tau(a);
}

long xi_det2(const Det2Params& p) {
    const int l = p.n + p.m;
    auto mu = [&](int i) { return p.mu[i - 1]; };
    long a = mu(1) + mu(3) - mu(p.J), b = mu(2) + mu(p.J);
    for (int i = 4; i <= p.n + 2; ++i) a += mu(i);
    for (int i = p.n + 3; i <= l; ++i) b += mu(i);
    return p.alpha * a + p.beta * b;
}

long xi_det3(const Det3Params& p) {
    auto mu = [&](int i) { return p.mu[i - 1]; };
    long a = mu(1) + mu(4), b = mu(2) + mu(5);
    for (int i = 7; i <= p.n + 4; ++i) a += mu(i);
    for (int i = p.n + 5; i <= p.n + p.m + 2; ++i) b += mu(i);
    return 2 * a + b;
}

namespace {

std::vector<ExactScalar> random_nodes(std::mt19937_64& rng, int count) {
    std::uniform_int_distribution<long> num(1, 5), den(1, 3);
    std::vector<ExactScalar> v;
    ExactScalar acc = 0;
    for (int i = 0; i < count; ++i) {
        ExactScalar step(num(rng), den(rng));
        step.canonicalize();
        acc += step;
        v.push_back(acc);
    }
    return v;
}

// `count` distinct sorted values from [lo, 8]
std::vector<long> random_increasing(std::mt19937_64& rng, int count, long lo) {
    std::vector<long> pool;
    for (long v = lo; v <= 8; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Det2Params random_det2(std::mt19937_64& rng) {
    Det2Params p;
    do {
        p.n = static_cast<int>(uniform(rng, 2, 4));
        p.m = static_cast<int>(uniform(rng, 2, 4));
    } while (p.n + p.m < 5);
    std::vector<std::pair<int, int>> ij = {{3, 4}, {3, 5}, {4, 5}};
    do {
        auto pick = ij[uniform(rng, 0, 2)];
        p.I = pick.first;
        p.J = pick.second;
    } while (p.J > p.n + 2);
    const int l = p.n + p.m;
    auto tail = random_increasing(rng, l - 2, 1);
    p.mu.assign(2, 0);
    p.mu.insert(p.mu.end(), tail.begin(), tail.end());
    p.mu[1] = uniform(rng, 0, p.mu[2] - 1);
    p.mu[0] = uniform(rng, 0, p.mu[1]);
    p.alpha = uniform(rng, 1, 3);
    p.beta = uniform(rng, 0, p.alpha - 1);
    p.M = p.alpha * mu_sum(p.mu) + uniform(rng, 0, 2);
    p.x = random_nodes(rng, p.n);
    p.y = random_nodes(rng, p.m);
    return p;
}

Det3Params random_det3(std::mt19937_64& rng) {
    Det3Params p;
    do {
        p.n = static_cast<int>(uniform(rng, 2, 4));
        p.m = static_cast<int>(uniform(rng, 2, 4));
        p.k = static_cast<int>(uniform(rng, 2, 4));
    } while (p.n + p.m + p.k < 7 || p.n + p.m + p.k > 11);
    const int l = p.n + p.m + p.k;
    auto tail = random_increasing(rng, l - 3, 1);
    p.mu.assign(3, 0);
    p.mu.insert(p.mu.end(), tail.begin(), tail.end());
    p.mu[2] = uniform(rng, 0, p.mu[3] - 1);
    p.mu[1] = uniform(rng, 0, p.mu[2]);
    p.mu[0] = uniform(rng, 0, p.mu[1]);
    p.M = 2 * mu_sum(p.mu) + uniform(rng, 0, 2);
    p.x = random_nodes(rng, p.n);
    p.y = random_nodes(rng, p.m);
    p.z = random_nodes(rng, p.k);
    return p;
}

AsymptoticCheck check_det2(const Det2Params& p) {
    auto poly = det2_poly(p);
    AsymptoticCheck c;
    c.xi_predicted = xi_det2(p);
    if (poly.is_zero()) return c;
    auto [e, coef] = leading_term(poly);
    c.xi_observed = e;
    c.leading_sign = sgn(coef);
    return c;
}

AsymptoticCheck check_det3(const Det3Params& p) {
    auto poly = det3_poly(p);
    AsymptoticCheck c;
    c.xi_predicted = xi_det3(p);
    if (poly.is_zero()) return c;
    auto [e, coef] = leading_term(poly);
    c.xi_observed = e;
    c.leading_sign = sgn(coef);
    return c;
}

}  // namespace polysum
