#pragma once

#include "bouquet/scalar.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace bouquet {

/// Dense square matrix, row major.
template <class T>
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    std::size_t dim() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<T> data_;
};

/// Bareiss fraction-free elimination; every intermediate quotient is exact.
inline BigInt determinant(SquareMatrix<BigInt> m)
{
    const std::size_t n = m.dim();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m(swap_row, k)) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                m(i, j) = std::move(t);
            }
        }
        previous = m(k, k);
    }
    BigInt out = m(n - 1, n - 1);
    return sign < 0 ? BigInt(-out) : out;
}

/// Rows are scaled to integers, reduced with Bareiss, then unscaled.
inline Rational determinant(const SquareMatrix<Rational>& m)
{
    const std::size_t n = m.dim();
    SquareMatrix<BigInt> scaled(n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            scaled(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
        scale *= row_lcm;
    }
    Rational out(determinant(std::move(scaled)), scale);
    out.canonicalize();
    return out;
}

/// Gaussian elimination with partial pivoting.
inline double determinant(SquareMatrix<double> m)
{
    const std::size_t n = m.dim();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(pivot, k)))
                pivot = i;
        if (m(pivot, k) == 0.0)
            return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

} // namespace bouquet
