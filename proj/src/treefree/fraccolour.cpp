#include "treefree/fraccolour.hpp"

#include "treefree/errors.hpp"
#include "treefree/multibroom.hpp"

#include <algorithm>
#include <cmath>

namespace treefree {

namespace {

Rational dyadic(int exponent)
{
    return Rational(1) / Rational(pow_int(2, static_cast<unsigned>(exponent)));
}

Rational potential_of(const std::vector<int>& cover)
{
    Rational sum = 0;
    for (int c : cover)
        sum += dyadic(c);
    return sum;
}

} // namespace

FracRun build_frac_colouring(const Graph& g, const MultibroomSpec& spec, int k, int rounds)
{
    if (rounds < 1)
        throw ContractViolation("build_frac_colouring needs at least one round");
    const int n = g.order();
    FracRun run;
    run.constant = multibroom_constant(spec, k);
    FracColouring fc;
    fc.cover.assign(static_cast<std::size_t>(n), 0);
    run.potential.push_back(potential_of(fc.cover));
    for (int round = 0; round < rounds; ++round) {
        Weighting w(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            w[static_cast<std::size_t>(v)] = dyadic(fc.cover[static_cast<std::size_t>(v)]);
        auto res = weighted_stable_multibroom(g, w, spec, k);
        if (auto* wit = std::get_if<TreeWitness>(&res.outcome)) {
            run.outcome = *wit;
            return run;
        }
        if (auto* viol = std::get_if<HypothesisViolation>(&res.outcome)) {
            run.outcome = *viol;
            return run;
        }
        const auto& s = std::get<StableSetCert>(res.outcome).set;
        for (int v : s)
            ++fc.cover[static_cast<std::size_t>(v)];
        fc.sets.push_back(s);
        Rational phi = potential_of(fc.cover);
        if (phi > run.potential.back() || (weight_of(w, s) > 0 && phi == run.potential.back()))
            throw InvariantViolation("potential failed to drop");
        run.potential.push_back(phi);
    }
    fc.a = static_cast<int>(fc.sets.size());
    fc.b = n == 0 ? 0 : *std::min_element(fc.cover.begin(), fc.cover.end());
    run.outcome = std::move(fc);
    return run;
}

FracCheck verify_frac_colouring(const Graph& g, const FracColouring& fc, const OracleLimits& limits)
{
    FracCheck check;
    auto fail = [&](std::string msg) {
        check.pass = false;
        check.failures.push_back(std::move(msg));
    };
    const int n = g.order();
    std::vector<int> cover(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < fc.sets.size(); ++i) {
        const auto& s = fc.sets[i];
        if (s.universe() != static_cast<std::size_t>(n)) {
            fail("set " + std::to_string(i) + " has the wrong vertex universe");
            continue;
        }
        if (!is_stable(g, s))
            fail("set " + std::to_string(i) + " is not stable");
        for (int v : s)
            ++cover[static_cast<std::size_t>(v)];
    }
    if (cover != fc.cover)
        fail("stored cover counts do not match the family");
    if (fc.a != static_cast<int>(fc.sets.size()))
        fail("a differs from the number of sets");
    int b = n == 0 ? 0 : *std::min_element(cover.begin(), cover.end());
    if (fc.b != b)
        fail("b differs from the minimum cover count");
    if (b < 1) {
        fail("some vertex is never covered");
        return check;
    }
    check.ratio = make_rational(fc.a, b);
    if (n <= limits.frac_max_n) {
        check.frac_chromatic = exact_frac_chromatic(g, limits).value;
        if (*check.ratio < *check.frac_chromatic)
            fail("a/b = " + check.ratio->get_str() + " beats the fractional chromatic number " +
                 check.frac_chromatic->get_str());
    }
    return check;
}

int suggest_rounds(int n, int b_target, double observed_contraction)
{
    if (observed_contraction <= 0 || observed_contraction >= 1)
        throw ContractViolation("suggest_rounds: contraction must lie in (0,1)");
    double log_n = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
    return static_cast<int>(std::ceil((b_target + log_n) * 2 * std::log(2.0) / observed_contraction));
}

} // namespace treefree
