#include "conering/exact_matrix.hpp"

#include <stdexcept>

namespace conering {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Int determinant(IntMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: the division is exact.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::domain_error("inverse_unimodular: not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse_unimodular: singular matrix");
        std::swap(a[k], a[pivot]);
        Rational lead = a[k][k];
        for (std::size_t j = k; j < 2 * n; ++j) a[k][j] /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k];
            for (std::size_t j = k; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    IntMatrix inv(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& r = a[i][n + j];
            if (boost::multiprecision::denominator(r) != 1)
                throw std::domain_error("inverse_unimodular: inverse is not integral");
            inv[i][j] = boost::multiprecision::numerator(r);
        }
    return inv;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    std::size_t n = m.size();
    std::vector<Int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != v.size()) throw std::domain_error("mat_vec: shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    }
    return out;
}

}  // namespace conering
