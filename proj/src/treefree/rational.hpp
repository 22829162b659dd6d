#pragma once

#include <gmpxx.h>

#include <string>

namespace treefree {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt ceil_of(const Rational& r)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Rational pow_int(const Rational& base, unsigned exponent)
{
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

inline BigInt pow_int(long base, unsigned exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
    return out;
}

inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

inline Rational parse_rational(const std::string& text)
{
    Rational r(text);
    r.canonicalize();
    return r;
}

} // namespace treefree
