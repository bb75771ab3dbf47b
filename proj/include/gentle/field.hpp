#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that fails a grammar or well-formedness rule.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Valid input outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// A finiteness or window guard refused to continue.
class GuardError : public Error {
public:
    using Error::Error;
};

struct Field {
    std::uint32_t p = 2;

    static Field prime(std::uint32_t q)
    {
        if (q < 2 || q >= (1u << 16))
            throw DomainError("field characteristic must be a prime below 65536");
        for (std::uint32_t k = 2; k * k <= q; ++k)
            if (q % k == 0)
                throw DomainError(std::to_string(q) + " is not prime");
        return Field{q};
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t inv(std::uint32_t a) const
    {
        if (a % p == 0)
            throw DomainError("inverse of zero");
        std::uint32_t r = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t from_int(long long v) const
    {
        long long m = v % static_cast<long long>(p);
        return static_cast<std::uint32_t>(m < 0 ? m + p : m);
    }
    bool operator==(const Field&) const = default;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const
    {
        for (auto v : a_)
            if (v)
                return false;
        return true;
    }
    bool operator==(const Matrix&) const = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<std::uint32_t> a_;
};

inline Matrix multiply(const Field& F, const Matrix& A, const Matrix& B)
{
    if (A.cols() != B.rows())
        throw std::logic_error("matrix shape mismatch");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            auto a = A(i, k);
            if (!a)
                continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C(i, j) = F.add(C(i, j), F.mul(a, B(k, j)));
        }
    return C;
}

inline Matrix add(const Field& F, const Matrix& A, const Matrix& B)
{
    Matrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            C(i, j) = F.add(A(i, j), B(i, j));
    return C;
}

inline Matrix scale(const Field& F, std::uint32_t s, const Matrix& A)
{
    Matrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            C(i, j) = F.mul(s, A(i, j));
    return C;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(const Field& F, Matrix& A)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        std::size_t piv = row;
        while (piv < A.rows() && A(piv, col) == 0)
            ++piv;
        if (piv == A.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < A.cols(); ++j)
                std::swap(A(piv, j), A(row, j));
        auto s = F.inv(A(row, col));
        for (std::size_t j = 0; j < A.cols(); ++j)
            A(row, j) = F.mul(s, A(row, j));
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == row || A(i, col) == 0)
                continue;
            auto f = A(i, col);
            for (std::size_t j = col; j < A.cols(); ++j)
                A(i, j) = F.sub(A(i, j), F.mul(f, A(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(const Field& F, Matrix A)
{
    return row_reduce(F, A).size();
}

// Columns of the result span the right null space of A.
inline Matrix nullspace(const Field& F, Matrix A)
{
    auto pivots = row_reduce(F, A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix N(A.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        N(free[k], k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            N(pivots[r], k) = F.neg(A(r, free[k]));
    }
    return N;
}

// Columns of the result form a basis of the column space of A.
inline Matrix column_basis(const Field& F, const Matrix& A)
{
    Matrix R = A;
    auto pivots = row_reduce(F, R);
    Matrix B(A.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < A.rows(); ++i)
            B(i, k) = A(i, pivots[k]);
    return B;
}

inline Matrix transpose(const Matrix& A)
{
    Matrix T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            T(j, i) = A(i, j);
    return T;
}

inline Matrix hstack(const Matrix& A, const Matrix& B)
{
    Matrix C(A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            C(i, j) = A(i, j);
        for (std::size_t j = 0; j < B.cols(); ++j)
            C(i, A.cols() + j) = B(i, j);
    }
    return C;
}

// Solve A x = b for one x, if any.
inline bool solve(const Field& F, const Matrix& A, const std::vector<std::uint32_t>& b,
                  std::vector<std::uint32_t>& x)
{
    Matrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto pivots = row_reduce(F, aug);
    if (!pivots.empty() && pivots.back() == A.cols())
        return false;
    x.assign(A.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, A.cols());
    return true;
}

inline bool invertible(const Field& F, const Matrix& A)
{
    return A.rows() == A.cols() && rank(F, A) == A.rows();
}

} // namespace gentle
