#include "carrychain/linalg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace carrychain {

Rational determinant(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);

    // Scale row i by the lcm of its denominators; det(A) = det(M) / prod(scale).
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) row_lcm = lcm(row_lcm, a(i, j).den());
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).num() * (row_lcm / a(i, j).den());
        scale *= row_lcm;
    }

    int sign = 1;
    mpz_class prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    return Rational(sign * m[n - 1][n - 1], scale);
}

Polynomial char_poly(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
    const std::size_t n = a.rows();
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        const Matrix am = a * next;
        Rational trace;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        c[n - k] = -trace / Rational(static_cast<long>(k));
        m = std::move(next);
    }
    return Polynomial(std::move(c));
}

}  // namespace carrychain
