#pragma once

#include "treefree/rational.hpp"
#include "treefree/tree.hpp"

#include <vector>

namespace treefree {

// Working precision (bits) for every transcendental evaluation.
inline constexpr long guarantee_precision = 128;

struct GuaranteeConstants {
    int k = 2;
    int r = 2; // max(radius(T), 2)
    int t = 1;
    int q = 1; // (r-1)(k-1)
    BigInt c;  // 20 q r t k^t
};

GuaranteeConstants guarantee_constants(const TreePattern& t, int k);

// Lower bound 2^(-b (log2 d)^(1-1/q)) n with b = log2(4c^2) and
// d = max(max_degree, 2). Rounding is directed so `bound` never exceeds
// the true value: b and the exponent are rounded up, the power down.
struct SparseGuarantee {
    GuaranteeConstants constants;
    long n = 0;
    long d = 2;
    Rational b;        // upper approximation of log2(4c^2)
    Rational exponent; // upper approximation of b (log2 d)^(1-1/q)
    Rational fraction; // lower approximation of 2^-exponent
    Rational bound;    // lower approximation of fraction * n
};

SparseGuarantee sparse_guarantee(long n, long max_degree, const TreePattern& t, int k);

// True when x = (log2 d)^(1/q) is certainly at most b/2, so the greedy
// stable set already meets the bound.
bool greedy_branch_applies(long d, const GuaranteeConstants& constants);

// y_i = 2^(-x^i) for i = 0..q, each rounded down to a 128-bit dyadic.
std::vector<Rational> default_y(long d, int q);
// y_i = y0 / (3t)^i for i = 0..q.
std::vector<Rational> forced_y(const Rational& y0, int q, int t);

// floor(x^(q-1)) + 1 with x^(q-1) rounded up.
long default_round_limit(long d, int q);
// floor(log2 d / log2(1/y1)) + 1, rounded so the limit is never too small.
long forced_round_limit(long d, const Rational& y1);

} // namespace treefree
