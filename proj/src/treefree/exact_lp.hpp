#pragma once

#include "treefree/rational.hpp"

#include <vector>

namespace treefree {

// Dense exact linear program over x >= 0.
struct LinearProgram {
    enum class Sense { maximize, minimize };
    enum class Relation { less_equal, greater_equal, equal };

    struct Row {
        std::vector<Rational> coeffs;
        Relation relation = Relation::less_equal;
        Rational rhs;
    };

    Sense sense = Sense::maximize;
    std::vector<Rational> objective;
    std::vector<Row> rows;
};

struct LpSolution {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    Rational value;
    std::vector<Rational> x;
};

// Two-phase primal simplex in exact rationals with Bland's rule, so it
// terminates on degenerate programs.
LpSolution solve_lp(const LinearProgram& lp);

} // namespace treefree
