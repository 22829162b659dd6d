#include "treefree/guarantee.hpp"

#include "treefree/errors.hpp"

#include <mpfr.h>

#include <algorithm>

namespace treefree {

namespace {

class Real {
public:
    Real() { mpfr_init2(v_, guarantee_precision); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    Rational to_rational() const
    {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

// log2 d rounded in direction `rnd`.
void log2_of(Real& out, long d, mpfr_rnd_t rnd)
{
    mpfr_set_si(out.get(), d, MPFR_RNDN); // exact for |d| < 2^63
    mpfr_log2(out.get(), out.get(), rnd);
}

// (log2 d)^(num/q) rounded up; log2 d >= 1, so the power grows with both
// the base and the exponent.
void log2_power_up(Real& out, long d, long num, int q)
{
    Real base, expo;
    log2_of(base, d, MPFR_RNDU);
    mpfr_set_si(expo.get(), num, MPFR_RNDN);
    mpfr_div_si(expo.get(), expo.get(), q, MPFR_RNDU);
    mpfr_pow(out.get(), base.get(), expo.get(), MPFR_RNDU);
}

long floor_plus_one(const Real& x)
{
    Real f;
    mpfr_floor(f.get(), x.get());
    return mpfr_get_si(f.get(), MPFR_RNDN) + 1;
}

} // namespace

GuaranteeConstants guarantee_constants(const TreePattern& t, int k)
{
    if (k < 2)
        throw ContractViolation("guarantee constants need k >= 2");
    GuaranteeConstants out;
    out.k = k;
    out.r = std::max(t.radius(), 2);
    out.t = t.order();
    out.q = (out.r - 1) * (k - 1);
    out.c = BigInt(20) * out.q * out.r * out.t * pow_int(k, static_cast<unsigned>(out.t));
    return out;
}

SparseGuarantee sparse_guarantee(long n, long max_degree, const TreePattern& t, int k)
{
    SparseGuarantee out;
    out.constants = guarantee_constants(t, k);
    out.n = n;
    out.d = std::max(max_degree, 2L);

    BigInt four_c_squared = 4 * out.constants.c * out.constants.c;
    Real b;
    mpfr_set_z(b.get(), four_c_squared.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(b.get(), b.get(), MPFR_RNDU);
    out.b = b.to_rational();

    Real power, exponent;
    log2_power_up(power, out.d, out.constants.q - 1, out.constants.q);
    mpfr_mul(exponent.get(), b.get(), power.get(), MPFR_RNDU);
    out.exponent = exponent.to_rational();

    Real fraction;
    mpfr_neg(fraction.get(), exponent.get(), MPFR_RNDN);
    mpfr_exp2(fraction.get(), fraction.get(), MPFR_RNDD);
    out.fraction = fraction.to_rational();

    Real bound;
    mpfr_mul_si(bound.get(), fraction.get(), n, MPFR_RNDD);
    out.bound = bound.to_rational();
    return out;
}

bool greedy_branch_applies(long d, const GuaranteeConstants& constants)
{
    Real x, half_b;
    log2_power_up(x, std::max(d, 2L), 1, constants.q);
    BigInt four_c_squared = 4 * constants.c * constants.c;
    mpfr_set_z(half_b.get(), four_c_squared.get_mpz_t(), MPFR_RNDD);
    mpfr_log2(half_b.get(), half_b.get(), MPFR_RNDD);
    mpfr_div_2ui(half_b.get(), half_b.get(), 1, MPFR_RNDD);
    return mpfr_lessequal_p(x.get(), half_b.get()) != 0;
}

std::vector<Rational> default_y(long d, int q)
{
    std::vector<Rational> y;
    for (int i = 0; i <= q; ++i) {
        Real xi;
        log2_power_up(xi, std::max(d, 2L), i, q);
        mpfr_neg(xi.get(), xi.get(), MPFR_RNDN);
        mpfr_exp2(xi.get(), xi.get(), MPFR_RNDD);
        y.push_back(xi.to_rational());
    }
    return y;
}

std::vector<Rational> forced_y(const Rational& y0, int q, int t)
{
    std::vector<Rational> y{y0};
    for (int i = 1; i <= q; ++i)
        y.push_back(y.back() / (3 * t));
    return y;
}

long default_round_limit(long d, int q)
{
    Real x;
    log2_power_up(x, std::max(d, 2L), q - 1, q);
    return floor_plus_one(x);
}

long forced_round_limit(long d, const Rational& y1)
{
    if (y1 <= 0 || y1 >= 1)
        throw ContractViolation("forced_round_limit: y1 must lie in (0,1)");
    Real num, den, ratio;
    log2_of(num, std::max(d, 2L), MPFR_RNDU);
    Rational inv = 1 / y1;
    mpfr_set_q(den.get(), inv.get_mpq_t(), MPFR_RNDD);
    mpfr_log2(den.get(), den.get(), MPFR_RNDD);
    mpfr_div(ratio.get(), num.get(), den.get(), MPFR_RNDU);
    return floor_plus_one(ratio);
}

} // namespace treefree
