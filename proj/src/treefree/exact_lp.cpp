#include "treefree/exact_lp.hpp"

#include "treefree/errors.hpp"

#include <cstddef>

namespace treefree {

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : a_(rows, std::vector<Rational>(cols + 1)), basis_(rows, 0), obj_(cols + 1),
          allowed_(cols, true)
    {
    }

    Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    Rational& rhs(std::size_t i) { return a_[i].back(); }
    std::size_t& basis(std::size_t i) { return basis_[i]; }
    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return obj_.size() - 1; }
    void forbid(std::size_t j) { allowed_[j] = false; }

    // Maximize sum cost[j] x_j from the current basis.
    void set_objective(const std::vector<Rational>& cost)
    {
        for (std::size_t j = 0; j < cols(); ++j)
            obj_[j] = -cost[j];
        obj_.back() = 0;
        for (std::size_t i = 0; i < rows(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= cols(); ++j)
                obj_[j] += cb * a_[i][j];
        }
    }

    const Rational& value() const { return obj_.back(); }

    // false when unbounded.
    bool optimize()
    {
        for (;;) {
            std::size_t enter = cols();
            for (std::size_t j = 0; j < cols(); ++j)
                if (allowed_[j] && obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols())
                return true;
            std::size_t leave = rows();
            Rational best;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (a_[i][enter] <= 0)
                    continue;
                Rational ratio = a_[i].back() / a_[i][enter];
                if (leave == rows() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows())
                return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Rational p = a_[r][c];
        for (auto& e : a_[r])
            e /= p;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || a_[i][c] == 0)
                continue;
            Rational f = a_[i][c];
            for (std::size_t j = 0; j <= cols(); ++j)
                a_[i][j] -= f * a_[r][j];
        }
        if (obj_[c] != 0) {
            Rational f = obj_[c];
            for (std::size_t j = 0; j <= cols(); ++j)
                obj_[j] -= f * a_[r][j];
        }
        basis_[r] = c;
    }

    void drop_row(std::size_t r)
    {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> obj_;
    std::vector<bool> allowed_;
};

} // namespace

LpSolution solve_lp(const LinearProgram& lp)
{
    using Rel = LinearProgram::Relation;
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();
    for (const auto& row : lp.rows)
        if (row.coeffs.size() != n)
            throw ContractViolation("solve_lp: row width differs from objective width");

    // Normalise to rhs >= 0, then count slack and artificial columns.
    std::vector<LinearProgram::Row> rows = lp.rows;
    for (auto& row : rows)
        if (row.rhs < 0) {
            for (auto& c : row.coeffs)
                c = -c;
            row.rhs = -row.rhs;
            if (row.relation == Rel::less_equal)
                row.relation = Rel::greater_equal;
            else if (row.relation == Rel::greater_equal)
                row.relation = Rel::less_equal;
        }
    std::size_t slacks = 0, artificials = 0;
    for (const auto& row : rows) {
        if (row.relation != Rel::equal)
            ++slacks;
        if (row.relation != Rel::less_equal)
            ++artificials;
    }
    const std::size_t total = n + slacks + artificials;
    Tableau tab(m, total);
    std::size_t next_slack = n, next_art = n + slacks;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            tab.at(i, j) = rows[i].coeffs[j];
        tab.rhs(i) = rows[i].rhs;
        switch (rows[i].relation) {
        case Rel::less_equal:
            tab.at(i, next_slack) = 1;
            tab.basis(i) = next_slack++;
            break;
        case Rel::greater_equal:
            tab.at(i, next_slack++) = -1;
            tab.at(i, next_art) = 1;
            tab.basis(i) = next_art++;
            break;
        case Rel::equal:
            tab.at(i, next_art) = 1;
            tab.basis(i) = next_art++;
            break;
        }
    }

    LpSolution out;
    if (artificials > 0) {
        std::vector<Rational> phase1(total);
        for (std::size_t j = n + slacks; j < total; ++j)
            phase1[j] = -1;
        tab.set_objective(phase1);
        tab.optimize();
        if (tab.value() < 0) {
            out.status = LpSolution::Status::infeasible;
            return out;
        }
        // Pivot zero-valued artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < tab.rows();) {
            if (tab.basis(i) < n + slacks) {
                ++i;
                continue;
            }
            std::size_t col = total;
            for (std::size_t j = 0; j < n + slacks; ++j)
                if (tab.at(i, j) != 0) {
                    col = j;
                    break;
                }
            if (col == total) {
                tab.drop_row(i);
                continue;
            }
            tab.pivot(i, col);
            ++i;
        }
        for (std::size_t j = n + slacks; j < total; ++j)
            tab.forbid(j);
    }

    std::vector<Rational> cost(total);
    for (std::size_t j = 0; j < n; ++j)
        cost[j] = lp.sense == LinearProgram::Sense::maximize ? lp.objective[j] : -lp.objective[j];
    tab.set_objective(cost);
    if (!tab.optimize()) {
        out.status = LpSolution::Status::unbounded;
        return out;
    }
    out.status = LpSolution::Status::optimal;
    out.value = lp.sense == LinearProgram::Sense::maximize ? tab.value() : Rational(-tab.value());
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis(i) < n)
            out.x[tab.basis(i)] = tab.rhs(i);
    return out;
}

} // namespace treefree
