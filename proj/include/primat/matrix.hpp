#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace primat {

using Int = mpz_class;
using Rat = mpq_class;

// Length-D vector of arbitrary-precision integers.
using IntegerVector = std::vector<Int>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible (or a square matrix was required).
class DimensionError : public Error {
public:
    using Error::Error;
};

// det = 0 where a nonsingular matrix is required.
class SingularError : public Error {
public:
    using Error::Error;
};

// The operands share a non-unimodular common left divisor.
class NotCoprimeError : public Error {
public:
    using Error::Error;
};

// Argument outside the operation's domain (non-prime lambda, coefficient
// out of range, zero or unit Gaussian operand, non-canonical input, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

// Dense row-major matrix of arbitrary-precision integers. All public-facing
// matrices are square D x D; rectangular D x k blocks occur internally as
// column concatenations (gcld, Bezout, kernel computations).
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    explicit IntegerMatrix(const std::vector<std::vector<Int>>& rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    // Side length of a square matrix; throws DimensionError otherwise.
    std::size_t dim() const;

    Int& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a);

IntegerVector operator+(const IntegerVector& a, const IntegerVector& b);
IntegerVector operator-(const IntegerVector& a, const IntegerVector& b);

// (a | b): columns of b appended to a.
IntegerMatrix concat_cols(const IntegerMatrix& a, const IntegerMatrix& b);
// Copy of the rows x cols window anchored at (r0, c0).
IntegerMatrix block(const IntegerMatrix& a, std::size_t r0, std::size_t c0,
                    std::size_t rows, std::size_t cols);

// Exact determinant by fraction-free Bareiss elimination.
Int determinant(const IntegerMatrix& a);

// |det| = 1.
bool is_unimodular(const IntegerMatrix& a);

// Exact rational solution of a * x = v; throws SingularError.
std::vector<Rat> solve_exact(const IntegerMatrix& a, const IntegerVector& v);

// True iff a^{-1} * m is an integer matrix (checked with exact rationals).
bool is_left_divisor(const IntegerMatrix& a, const IntegerMatrix& m);

std::string to_string(const IntegerMatrix& a);

}  // namespace primat
