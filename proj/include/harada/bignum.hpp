#pragma once

// Arbitrary precision scalars. Backed by GMP's C++ interface.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "harada/error.hpp"

namespace harada {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigRational pow(const BigRational& base, unsigned long exp) {
    BigRational r(pow(BigInt(base.get_num()), exp), pow(BigInt(base.get_den()), exp));
    r.canonicalize();
    return r;
}

/// Signed integer power; negative exponents invert.
inline BigRational pow(const BigRational& base, long exp) {
    if (exp >= 0) return pow(base, static_cast<unsigned long>(exp));
    if (base == 0) throw invalid_input("zero raised to a negative power");
    BigRational inv = 1 / base;
    return pow(inv, static_cast<unsigned long>(-exp));
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw invalid_input("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// Exact square root of a nonnegative rational, present only when both
/// numerator and denominator (in lowest terms) are perfect squares.
inline std::optional<BigRational> rational_sqrt(const BigRational& x) {
    if (x < 0) throw invalid_input("rational_sqrt of a negative value");
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rational(rn, rd);
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline BigRational parse_rational(const std::string& s) {
    BigRational q;
    if (q.set_str(s, 10) != 0) throw invalid_input("not a rational: " + s);
    if (q.get_den() == 0) throw invalid_input("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace harada
