#pragma once

// Square exact matrices and their determinants.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "harada/bignum.hpp"
#include "harada/cyclotomic.hpp"

namespace harada {

template <typename T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t dim() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Top-left k x k block.
    ExactMatrix leading(std::size_t k) const {
        ExactMatrix m(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k)
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
        return c;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = ExactMatrix<BigInt>;
using RationalMatrix = ExactMatrix<BigRational>;

/// Fraction-free (Bareiss) elimination. Pivot: first nonzero entry at or
/// below the diagonal. Singular input yields 0.
inline BigInt det_integer(IntMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline BigRational det_rational(RationalMatrix m) {
    const std::size_t n = m.dim();
    BigRational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            BigRational f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Gaussian elimination over Q(zeta_m); entries are lifted to a common
/// conductor first.
inline Cyclotomic det_cyclotomic(ExactMatrix<Cyclotomic> m) {
    const std::size_t n = m.dim();
    unsigned cond = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cond = std::lcm(cond, m(i, j).conductor());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).lift(cond);
    Cyclotomic det(cond, BigRational(1));
    const Cyclotomic zero(cond, BigRational(0));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return zero;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        Cyclotomic inv = m(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            Cyclotomic f = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

inline bool is_hermitian(const ExactMatrix<Cyclotomic>& m) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            if (!(m(i, j) == m(j, i).conjugate())) return false;
    return true;
}

struct HermitianDet {
    Cyclotomic value;                   // det, real
    Cyclotomic abs;                     // |det|
    std::optional<BigRational> rational;  // |det| when it lies in Q
};

/// Relative guard for the floating sign test of non-rational determinants.
inline constexpr double kSignGuard = 1e-6;

/// Determinant of a Hermitian matrix over Q(zeta_m). The value is checked
/// to be fixed by conjugation exactly; its sign comes from the rational
/// part when the value is rational and from the embedding
/// zeta -> exp(2 pi i / m) otherwise, guarded relative to the product of
/// diagonal magnitudes.
inline HermitianDet det_hermitian_cyclotomic(const ExactMatrix<Cyclotomic>& m) {
    if (!is_hermitian(m)) throw invalid_input("matrix is not Hermitian");
    Cyclotomic d = det_cyclotomic(m);
    if (!(d.conjugate() == d)) throw anomaly("Hermitian determinant not fixed by conjugation");
    HermitianDet out{d, d, std::nullopt};
    if (auto q = d.as_rational()) {
        out.rational = *q < 0 ? BigRational(-*q) : *q;
        if (*q < 0) out.abs = -d;
        return out;
    }
    double scale = 1.0;
    for (std::size_t i = 0; i < m.dim(); ++i) scale *= std::max(1.0, std::abs(m(i, i).to_complex()));
    double v = d.to_complex().real();
    if (std::abs(v) < kSignGuard * scale) throw anomaly("sign of Hermitian determinant is inconclusive");
    if (v < 0) out.abs = -d;
    return out;
}

/// Exact positive-definiteness test for an integer matrix: every leading
/// principal minor is strictly positive.
inline bool leading_minors_positive(const IntMatrix& m) {
    for (std::size_t k = 1; k <= m.dim(); ++k)
        if (det_integer(m.leading(k)) <= 0) return false;
    return true;
}

}  // namespace harada
