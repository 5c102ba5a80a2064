#include "primat/matrix.hpp"

#include <sstream>
#include <utility>

namespace primat {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw DimensionError("matrix dimensions must be positive");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
        throw DimensionError("matrix dimensions must be positive");
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged initializer rows");
        for (long x : r) e_.emplace_back(x);
    }
}

IntegerMatrix::IntegerMatrix(const std::vector<std::vector<Int>>& rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.front().size() : 0;
    if (rows_ == 0 || cols_ == 0)
        throw DimensionError("matrix dimensions must be positive");
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged rows");
        for (const Int& x : r) e_.push_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Int>& d) {
    IntegerMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

std::size_t IntegerMatrix::dim() const {
    if (!is_square())
        throw DimensionError("square matrix required");
    return rows_;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions differ");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v) {
    if (a.cols() != v.size())
        throw DimensionError("matvec: dimensions differ");
    IntegerVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[i] += a(i, j) * v[j];
    return r;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix sum: shapes differ");
    IntegerMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix difference: shapes differ");
    IntegerMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

IntegerMatrix operator-(const IntegerMatrix& a) {
    IntegerMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = -a(i, j);
    return c;
}

IntegerVector operator+(const IntegerVector& a, const IntegerVector& b) {
    if (a.size() != b.size())
        throw DimensionError("vector sum: lengths differ");
    IntegerVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntegerVector operator-(const IntegerVector& a, const IntegerVector& b) {
    if (a.size() != b.size())
        throw DimensionError("vector difference: lengths differ");
    IntegerVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntegerMatrix concat_cols(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("concat_cols: row counts differ");
    IntegerMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

IntegerMatrix block(const IntegerMatrix& a, std::size_t r0, std::size_t c0,
                    std::size_t rows, std::size_t cols) {
    if (r0 + rows > a.rows() || c0 + cols > a.cols())
        throw DimensionError("block out of range");
    IntegerMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b(i, j) = a(r0 + i, c0 + j);
    return b;
}

Int determinant(const IntegerMatrix& a) {
    const std::size_t n = a.dim();
    IntegerMatrix w = a;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                // Exact by Sylvester's identity.
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w(k, k);
    }
    Int d = w(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

bool is_unimodular(const IntegerMatrix& a) {
    Int d = determinant(a);
    return d == 1 || d == -1;
}

namespace {

// Gauss-Jordan on the rational augmented system [a | rhs]; returns x with
// a * x = rhs, row-major a.dim() x rhs_cols.
std::vector<Rat> solve_rational(const IntegerMatrix& a, const IntegerMatrix& rhs) {
    const std::size_t n = a.dim();
    if (rhs.rows() != n)
        throw DimensionError("solve: right-hand side has wrong height");
    const std::size_t k = rhs.cols();
    const std::size_t w = n + k;
    std::vector<Rat> m(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * w + j] = Rat(a(i, j));
        for (std::size_t j = 0; j < k; ++j) m[i * w + n + j] = Rat(rhs(i, j));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv * w + c] == 0) ++piv;
        if (piv == n)
            throw SingularError("singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < w; ++j)
                std::swap(m[c * w + j], m[piv * w + j]);
        Rat inv = 1 / m[c * w + c];
        for (std::size_t j = c; j < w; ++j) m[c * w + j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i * w + c] == 0) continue;
            Rat f = m[i * w + c];
            for (std::size_t j = c; j < w; ++j)
                m[i * w + j] -= f * m[c * w + j];
        }
    }
    std::vector<Rat> x(n * k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            x[i * k + j] = m[i * w + n + j];
    return x;
}

}  // namespace

std::vector<Rat> solve_exact(const IntegerMatrix& a, const IntegerVector& v) {
    const std::size_t n = a.dim();
    if (v.size() != n)
        throw DimensionError("solve: vector length differs from dimension");
    IntegerMatrix rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = v[i];
    return solve_rational(a, rhs);
}

bool is_left_divisor(const IntegerMatrix& a, const IntegerMatrix& m) {
    if (a.dim() != m.dim())
        throw DimensionError("is_left_divisor: dimensions differ");
    std::vector<Rat> x = solve_rational(a, m);
    for (const Rat& q : x)
        if (q.get_den() != 1) return false;
    return true;
}

std::string to_string(const IntegerMatrix& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ' ';
            os << a(i, j).get_str();
        }
    }
    return os.str();
}

}  // namespace primat
