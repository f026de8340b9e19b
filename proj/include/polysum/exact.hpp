#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace polysum {

using ExactScalar = mpq_class;
using ExactInteger = mpz_class;

// A point is just its coordinate sequence; the ambient dimension is its size.
using Point = std::vector<ExactScalar>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<long>> init);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    ExactScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const ExactScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // Submatrix keeping the given rows and columns, in the given order.
    ExactMatrix minor(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExactScalar> data_;
};

ExactScalar det(const ExactMatrix& m);

// Bareiss on an integer matrix; the argument is consumed as scratch space.
ExactInteger det_integer(std::vector<std::vector<ExactInteger>>& a);

// Rank of an integer matrix by fraction-free elimination (scratch argument).
std::size_t rank_integer(std::vector<std::vector<ExactInteger>>& a);

std::size_t affine_rank(const std::vector<Point>& points);

// Generalized binomial coefficient: a(a-1)...(a-b+1)/b! for any integer a,
// zero for b < 0.
ExactInteger binom(long a, long b);

std::string to_string(const ExactScalar& q);
ExactScalar parse_rational(const std::string& text);  // throws DomainError

}  // namespace polysum
