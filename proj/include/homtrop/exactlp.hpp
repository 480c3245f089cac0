#ifndef HOMTROP_EXACTLP_HPP
#define HOMTROP_EXACTLP_HPP

#include <homtrop/rat.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace homtrop::exactlp {

struct Row {
    std::string label;
    RatVector coeffs;
    Rat rhs;
};

// min objective . x  subject to  ge_rows (a.x >= rhs), eq_rows (a.x = rhs)
// and optional per-variable bounds. Bounds are handled as synthetic rows
// labelled "_lb:<var>" / "_ub:<var>", and their duals appear under those
// labels in outcomes.
struct LinearProgram {
    RatVector objective;
    std::vector<Row> ge_rows;
    std::vector<Row> eq_rows;
    std::vector<std::optional<Rat>> lower_bounds;
    std::vector<std::optional<Rat>> upper_bounds;

    std::size_t variables() const { return objective.size(); }
    void add_ge(std::string label, RatVector coeffs, Rat rhs);
    void add_eq(std::string label, RatVector coeffs, Rat rhs);
};

struct LpOptimal {
    RatVector x;
    Rat objective_value;
    std::map<std::string, Rat> dual; // dual value per row label
};

struct LpUnbounded {
    RatVector feasible_point;
    RatVector improving_ray;
};

struct LpInfeasible {
    std::map<std::string, Rat> farkas; // nonnegative on ge rows, signed on eq rows
};

using LpOutcome = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

// Deterministic exact solve: two-phase simplex with Bland's pivoting rule.
LpOutcome solve(const LinearProgram & lp);

// Re-checks every certificate identity of the outcome against the program
// with a fresh pass of exact arithmetic.
bool verify_outcome(const LinearProgram & lp, const LpOutcome & outcome);

std::string outcome_to_json(const LpOutcome & outcome);

}

#endif
