#include "polysum/exact.hpp"

#include "polysum/error.hpp"

#include <utility>

namespace polysum {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

ExactMatrix ExactMatrix::minor(const std::vector<std::size_t>& rs,
                               const std::vector<std::size_t>& cs) const {
    ExactMatrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
}

ExactInteger det_integer(std::vector<std::vector<ExactInteger>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    ExactInteger prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // a[i][j] = (a[k][k] a[i][j] - a[i][k] a[k][j]) / prev, exact
                a[i][j] *= a[k][k];
                a[i][j] -= a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    ExactInteger r = a[n - 1][n - 1];
    return sign < 0 ? ExactInteger(-r) : r;
}

std::size_t rank_integer(std::vector<std::vector<ExactInteger>>& a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    ExactInteger prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] *= a[r][c];
                a[i][j] -= a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

namespace {

// Scale each row by the lcm of its denominators; returns the product of scales.
std::vector<std::vector<ExactInteger>> integer_rows(const ExactMatrix& m, ExactInteger& scale) {
    std::vector<std::vector<ExactInteger>> a(m.rows(), std::vector<ExactInteger>(m.cols()));
    scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ExactInteger l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    return a;
}

}  // namespace

ExactScalar det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
    ExactInteger scale;
    auto a = integer_rows(m, scale);
    ExactScalar r(det_integer(a), scale);
    r.canonicalize();
    return r;
}

std::size_t affine_rank(const std::vector<Point>& points) {
    if (points.size() <= 1) return 0;
    const std::size_t dim = points[0].size();
    ExactMatrix m(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != dim) throw DimensionError("affine_rank: mixed dimensions");
        for (std::size_t j = 0; j < dim; ++j) m(i - 1, j) = points[i][j] - points[0][j];
    }
    ExactInteger scale;
    auto a = integer_rows(m, scale);
    return rank_integer(a);
}

ExactInteger binom(long a, long b) {
    if (b < 0) return 0;
    ExactInteger r;
    if (a >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    } else {
        mpz_class base(a);
        mpz_bin_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(b));
    }
    return r;
}

std::string to_string(const ExactScalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactScalar parse_rational(const std::string& text) {
    auto digits = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw DomainError("not a rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    ExactInteger p(num), q(den);
    if (q == 0) throw DomainError("zero denominator: '" + text + "'");
    ExactScalar r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace polysum
