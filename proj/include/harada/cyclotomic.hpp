#pragma once

// Exact arithmetic in Q(zeta_m), power basis modulo the m-th cyclotomic
// polynomial.

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "harada/bignum.hpp"

namespace harada {

/// Integer polynomial, coefficient i belongs to x^i.
using IntPoly = std::vector<BigInt>;

inline unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Quotient of num by a monic divisor; throws if the division is not exact.
inline IntPoly exact_divide_monic(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw anomaly("polynomial division degree mismatch");
    IntPoly q(num.size() - dn, 0);
    for (std::size_t d = num.size() - 1;; --d) {
        BigInt c = num[d];
        q[d - dn] = c;
        if (c != 0)
            for (std::size_t i = 0; i <= dn; ++i) num[d - dn + i] -= c * den[i];
        if (d == dn) break;
    }
    for (const auto& r : num)
        if (r != 0) throw anomaly("cyclotomic division left a remainder");
    return q;
}

}  // namespace detail

/// Phi_m, obtained from x^m - 1 by exact division by Phi_d for every proper
/// divisor d of m.
inline IntPoly cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw invalid_input("cyclotomic_polynomial requires m >= 1");
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) p = detail::exact_divide_monic(std::move(p), cyclotomic_polynomial(d));
    return p;
}

namespace detail {

struct CyclotomicField {
    unsigned m = 1;
    std::size_t degree = 1;
    IntPoly modulus;
    // x^e reduced modulo Phi_m, for 0 <= e < m.
    std::vector<std::vector<BigRational>> powers;
};

inline void reduce_in_place(std::vector<BigRational>& poly, const CyclotomicField& f) {
    const std::size_t n = f.degree;
    for (std::size_t d = poly.size(); d-- > n;) {
        if (poly[d] == 0) continue;
        BigRational c = poly[d];
        for (std::size_t i = 0; i <= n; ++i) poly[d - n + i] -= c * f.modulus[i];
    }
    poly.resize(n);
}

inline std::shared_ptr<const CyclotomicField> make_field(unsigned m) {
    auto f = std::make_shared<CyclotomicField>();
    f->m = m;
    f->modulus = cyclotomic_polynomial(m);
    f->degree = f->modulus.size() - 1;
    std::vector<BigRational> cur(f->degree, 0);
    cur[0] = 1;
    for (unsigned e = 0; e < m; ++e) {
        f->powers.push_back(cur);
        std::vector<BigRational> next(f->degree + 1, 0);
        for (std::size_t i = 0; i < f->degree; ++i) next[i + 1] = cur[i];
        reduce_in_place(next, *f);
        cur = std::move(next);
    }
    return f;
}

inline std::shared_ptr<const CyclotomicField> field(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
    if (m == 0) throw invalid_input("conductor must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto f = make_field(m);
    cache.emplace(m, f);
    return f;
}

}  // namespace detail

/// Element of Q(zeta_m). The conductor is the field the value lives in,
/// not necessarily the smallest one containing it; binary operations lift
/// both operands to the lcm of their conductors.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1, BigRational(0)) {}
    Cyclotomic(unsigned m, const BigRational& q) : field_(detail::field(m)), coeffs_(field_->degree, 0) {
        coeffs_[0] = q;
    }
    Cyclotomic(unsigned m, std::vector<BigRational> coeffs) : field_(detail::field(m)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != field_->degree)
            throw invalid_input("coefficient vector length must equal phi(m)");
    }

    static Cyclotomic root_of_unity(unsigned m, long k) {
        auto f = detail::field(m);
        long r = k % static_cast<long>(m);
        if (r < 0) r += m;
        Cyclotomic x;
        x.field_ = f;
        x.coeffs_ = f->powers[static_cast<std::size_t>(r)];
        return x;
    }

    unsigned conductor() const { return field_->m; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    std::optional<BigRational> as_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    /// Same value expressed in Q(zeta_target); target must be a multiple.
    Cyclotomic lift(unsigned target) const {
        const unsigned m = conductor();
        if (target == m) return *this;
        if (target % m != 0) throw invalid_input("can only lift to a multiple of the conductor");
        auto f = detail::field(target);
        const unsigned step = target / m;
        std::vector<BigRational> out(f->degree, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            const auto& p = f->powers[i * step];
            for (std::size_t j = 0; j < out.size(); ++j)
                if (p[j] != 0) out[j] += coeffs_[i] * p[j];
        }
        return Cyclotomic(target, std::move(out));
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conjugate() const {
        const unsigned m = conductor();
        std::vector<BigRational> out(coeffs_.size(), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            const auto& p = field_->powers[(m - i % m) % m];
            for (std::size_t j = 0; j < out.size(); ++j)
                if (p[j] != 0) out[j] += coeffs_[i] * p[j];
        }
        return Cyclotomic(m, std::move(out));
    }

    Cyclotomic inverse() const;

    std::complex<double> to_complex() const {
        const double m = conductor();
        std::complex<double> z = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
            z += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return z;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = common(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = common(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = common(a, b);
        const std::size_t n = x.coeffs_.size();
        std::vector<BigRational> prod(2 * n - 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (y.coeffs_[j] != 0) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        detail::reduce_in_place(prod, *x.field_);
        x.coeffs_ = std::move(prod);
        return x;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const BigRational& q) {
        Cyclotomic r = a;
        for (auto& c : r.coeffs_) c *= q;
        return r;
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
        auto [x, y] = common(a, b);
        return x.coeffs_ == y.coeffs_;
    }

    /// Rational values print as "p/q"; anything else as "cyc(m)[c0,...]".
    std::string to_string() const {
        if (auto q = as_rational()) return q->get_str();
        std::ostringstream os;
        os << "cyc(" << conductor() << ")[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
        os << "]";
        return os.str();
    }

private:
    static std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor() == b.conductor()) return {a, b};
        unsigned l = std::lcm(a.conductor(), b.conductor());
        return {a.lift(l), b.lift(l)};
    }

    std::shared_ptr<const detail::CyclotomicField> field_;
    std::vector<BigRational> coeffs_;
};

inline Cyclotomic Cyclotomic::inverse() const {
    // Solve (multiplication by *this) v = 1 over Q.
    const std::size_t n = coeffs_.size();
    const unsigned m = conductor();
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigRational> basis(n, 0);
        basis[j] = 1;
        Cyclotomic col = *this * Cyclotomic(m, basis);
        for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
    }
    a[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw invalid_input("inversion of zero");
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            BigRational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<BigRational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a[i][n] / a[i][i];
    return Cyclotomic(m, std::move(v));
}

/// Inverse of Cyclotomic::to_string.
inline Cyclotomic parse_cyclotomic(const std::string& s) {
    if (s.rfind("cyc(", 0) != 0) return Cyclotomic(1, parse_rational(s));
    auto close = s.find(')');
    auto open = s.find('[');
    if (close == std::string::npos || open == std::string::npos || s.back() != ']')
        throw invalid_input("malformed cyclotomic literal: " + s);
    unsigned m = static_cast<unsigned>(std::stoul(s.substr(4, close - 4)));
    std::vector<BigRational> coeffs;
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(parse_rational(tok));
    return Cyclotomic(m, std::move(coeffs));
}

}  // namespace harada
