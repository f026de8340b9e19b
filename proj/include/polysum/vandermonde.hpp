#pragma once

#include "polysum/exact.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace polysum {

// Polynomial in tau with rational coefficients; zero terms are never stored.
class TauPolynomial {
public:
    TauPolynomial() = default;
    static TauPolynomial monomial(const ExactScalar& c, long e);

    const std::map<long, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ExactScalar coefficient(long e) const;
    void add_term(long e, const ExactScalar& c);

    TauPolynomial operator+(const TauPolynomial& o) const;
    TauPolynomial operator-(const TauPolynomial& o) const;
    TauPolynomial operator*(const TauPolynomial& o) const;
    ExactScalar evaluate(const ExactScalar& tau) const;
    bool operator==(const TauPolynomial& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<long, ExactScalar> terms_;
};

// Minimal-exponent term; throws DomainError on the zero polynomial.
std::pair<long, ExactScalar> leading_term(const TauPolynomial& p);

using TauMatrix = std::vector<std::vector<TauPolynomial>>;

// Fraction-free elimination over Q[tau].
TauPolynomial det_tau(const TauMatrix& m);

struct GvdSpec {
    std::vector<ExactScalar> x;
    std::vector<long> mu;
};

ExactScalar gvd(const GvdSpec& s);

// Sum over row sets r of (-1)^{|r|+|c|} det S(r,c) det of the complementary minor.
ExactScalar laplace_expand(const ExactMatrix& m, const std::vector<std::size_t>& cols);

struct Det2Params {
    int n = 0, m = 0, I = 0, J = 0;
    std::vector<long> mu;
    long alpha = 0, beta = 0, M = 0;
    std::vector<ExactScalar> x, y;
};

struct Det3Params {
    int n = 0, m = 0, k = 0;
    std::vector<long> mu;
    long M = 0;
    std::vector<ExactScalar> x, y, z;
};

void validate(const Det2Params& p);  // throws DomainError
void validate(const Det3Params& p);

TauPolynomial det2_poly(const Det2Params& p);
TauPolynomial det3_poly(const Det3Params& p);

long xi_det2(const Det2Params& p);
long xi_det3(const Det3Params& p);

// Seeded admissible instances with n, m, k <= 4 and mu entries <= 8.
Det2Params random_det2(std::mt19937_64& rng);
Det3Params random_det3(std::mt19937_64& rng);

struct AsymptoticCheck {
    long xi_predicted = 0;
    long xi_observed = 0;
    int leading_sign = 0;
    bool pass() const { return xi_predicted == xi_observed && leading_sign > 0; }
};

AsymptoticCheck check_det2(const Det2Params& p);
AsymptoticCheck check_det3(const Det3Params& p);

}  // namespace polysum
