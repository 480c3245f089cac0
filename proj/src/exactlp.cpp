#include <homtrop/exactlp.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace homtrop::exactlp {

void LinearProgram::add_ge(std::string label, RatVector coeffs, Rat rhs)
{
    ge_rows.push_back({std::move(label), std::move(coeffs), std::move(rhs)});
}

void LinearProgram::add_eq(std::string label, RatVector coeffs, Rat rhs)
{
    eq_rows.push_back({std::move(label), std::move(coeffs), std::move(rhs)});
}

namespace {

    // ----- standard-form core: min cost.z  s.t.  M z = q, z >= 0 -----

    enum class StdStatus { Optimal, Unbounded, Infeasible };

    struct StdResult {
        StdStatus status;
        RatVector z;       // Optimal
        Rat value = 0;     // Optimal
        RatVector y;       // Optimal: row multipliers with cost_j - y.M_j >= 0
        RatVector ray;     // Unbounded: M ray = 0, ray >= 0, cost.ray < 0
        RatVector infeas_y; // Infeasible: y.M_j <= 0 for all j, y.q > 0
    };

    struct Tableau {
        std::size_t rows, real_cols;
        std::vector<RatVector> t; // rows x (real_cols + rows), artificial block appended
        RatVector rhs;
        RatVector obj; // reduced costs
        Rat objval = 0;
        std::vector<std::size_t> basis;
        std::vector<char> alive;

        std::size_t cols() const { return real_cols + rows; }

        void pivot(std::size_t pr, std::size_t pc)
        {
            Rat inv = 1 / t[pr][pc];
            for (auto & x : t[pr])
                x *= inv;
            rhs[pr] *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == pr || !alive[i] || t[i][pc] == 0)
                    continue;
                Rat f = t[i][pc];
                for (std::size_t j = 0; j < cols(); ++j)
                    t[i][j] -= f * t[pr][j];
                rhs[i] -= f * rhs[pr];
            }
            if (obj[pc] != 0) {
                Rat f = obj[pc];
                for (std::size_t j = 0; j < cols(); ++j)
                    obj[j] -= f * t[pr][j];
                objval += f * rhs[pr];
            }
            basis[pr] = pc;
        }

        // Bland: lowest-index entering column with negative reduced cost,
        // lowest-basic-index leaving row among minimum ratios.
        StdStatus iterate(std::size_t entering_limit)
        {
            while (true) {
                std::size_t enter = cols();
                for (std::size_t j = 0; j < entering_limit; ++j)
                    if (obj[j] < 0) {
                        enter = j;
                        break;
                    }
                if (enter == cols())
                    return StdStatus::Optimal;
                std::size_t leave = rows;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (!alive[i] || t[i][enter] <= 0)
                        continue;
                    if (leave == rows)
                        leave = i;
                    else {
                        Rat cur = rhs[i] / t[i][enter];
                        Rat best = rhs[leave] / t[leave][enter];
                        if (cur < best || (cur == best && basis[i] < basis[leave]))
                            leave = i;
                    }
                }
                if (leave == rows)
                    return StdStatus::Unbounded;
                pivot(leave, enter);
            }
        }
    };

    StdResult solve_standard(const std::vector<RatVector> & m_rows, const RatVector & q,
        const RatVector & cost)
    {
        std::size_t rows = m_rows.size();
        std::size_t real_cols = cost.size();
        Tableau tab;
        tab.rows = rows;
        tab.real_cols = real_cols;
        tab.t.assign(rows, RatVector(real_cols + rows, Rat(0)));
        tab.rhs.assign(rows, Rat(0));
        tab.basis.resize(rows);
        tab.alive.assign(rows, 1);
        RatVector flip(rows, Rat(1));
        for (std::size_t i = 0; i < rows; ++i) {
            Rat sign = (q[i] < 0) ? Rat(-1) : Rat(1);
            flip[i] = sign;
            for (std::size_t j = 0; j < real_cols; ++j)
                tab.t[i][j] = sign * m_rows[i][j];
            tab.t[i][real_cols + i] = 1;
            tab.rhs[i] = sign * q[i];
            tab.basis[i] = real_cols + i;
        }

        // phase 1: minimise the artificial sum
        tab.obj.assign(tab.cols(), Rat(0));
        tab.objval = 0;
        for (std::size_t j = 0; j < real_cols; ++j) {
            Rat s = 0;
            for (std::size_t i = 0; i < rows; ++i)
                s += tab.t[i][j];
            tab.obj[j] = -s;
        }
        for (std::size_t i = 0; i < rows; ++i)
            tab.objval += tab.rhs[i];
        tab.iterate(real_cols);

        StdResult out;
        if (tab.objval > 0) {
            out.status = StdStatus::Infeasible;
            out.infeas_y.resize(rows);
            for (std::size_t i = 0; i < rows; ++i)
                out.infeas_y[i] = flip[i] * (1 - tab.obj[real_cols + i]);
            return out;
        }

        // drive zero-level artificials out of the basis; rows that cannot be
        // cleared are redundant equations
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab.basis[i] < real_cols)
                continue;
            std::size_t pc = real_cols;
            for (std::size_t j = 0; j < real_cols; ++j)
                if (tab.t[i][j] != 0) {
                    pc = j;
                    break;
                }
            if (pc < real_cols)
                tab.pivot(i, pc);
            else
                tab.alive[i] = 0;
        }

        // phase 2
        tab.obj.assign(tab.cols(), Rat(0));
        tab.objval = 0;
        for (std::size_t j = 0; j < tab.cols(); ++j) {
            Rat red = (j < real_cols) ? cost[j] : Rat(0);
            for (std::size_t i = 0; i < rows; ++i)
                if (tab.alive[i] && tab.basis[i] < real_cols && tab.t[i][j] != 0)
                    red -= cost[tab.basis[i]] * tab.t[i][j];
            tab.obj[j] = red;
        }
        for (std::size_t i = 0; i < rows; ++i)
            if (tab.alive[i] && tab.basis[i] < real_cols)
                tab.objval += cost[tab.basis[i]] * tab.rhs[i];
        StdStatus st = tab.iterate(real_cols);

        if (st == StdStatus::Unbounded) {
            std::size_t enter = tab.cols();
            for (std::size_t j = 0; j < real_cols; ++j)
                if (tab.obj[j] < 0) {
                    enter = j;
                    break;
                }
            out.status = StdStatus::Unbounded;
            out.ray.assign(real_cols, Rat(0));
            out.ray[enter] = 1;
            for (std::size_t i = 0; i < rows; ++i)
                if (tab.alive[i] && tab.basis[i] < real_cols)
                    out.ray[tab.basis[i]] = -tab.t[i][enter];
            return out;
        }

        out.status = StdStatus::Optimal;
        out.z.assign(real_cols, Rat(0));
        for (std::size_t i = 0; i < rows; ++i)
            if (tab.alive[i] && tab.basis[i] < real_cols)
                out.z[tab.basis[i]] = tab.rhs[i];
        out.value = tab.objval;
        out.y.resize(rows);
        for (std::size_t i = 0; i < rows; ++i)
            out.y[i] = flip[i] * (-tab.obj[real_cols + i]);
        return out;
    }

    // ----- presolve: eliminate equalities, turn bounds into rows -----

    struct PivotRow {
        std::size_t var;
        RatVector coeffs;  // full x-space, coeffs[var] = 1, zero at other pivots
        Rat rhs;
        RatVector combo;   // combination of original eq rows producing this row
    };

    struct Reduced {
        RatVector coeffs; // full x-space with zeros at pivot vars
        Rat rhs;
        RatVector carried; // per original eq row
    };

    struct Presolved {
        std::size_t n = 0;
        std::vector<Row> ge;               // original ge rows plus bound rows
        std::vector<PivotRow> pivots;
        std::vector<std::size_t> free_vars;
        bool eq_inconsistent = false;
        RatVector inconsistency_combo;     // over original eq rows, combo.E = 0, combo.d > 0

        Reduced reduce(const RatVector & coeffs, const Rat & rhs) const
        {
            Reduced r{coeffs, rhs, RatVector(pivots.empty() ? 0 : pivots[0].combo.size(), Rat(0))};
            for (const auto & p : pivots) {
                Rat k = r.coeffs[p.var];
                if (k == 0)
                    continue;
                for (std::size_t j = 0; j < r.coeffs.size(); ++j)
                    r.coeffs[j] -= k * p.coeffs[j];
                r.rhs -= k * p.rhs;
                for (std::size_t j = 0; j < r.carried.size(); ++j)
                    r.carried[j] += k * p.combo[j];
            }
            return r;
        }

        RatVector restrict_free(const RatVector & full) const
        {
            RatVector out(free_vars.size());
            for (std::size_t j = 0; j < free_vars.size(); ++j)
                out[j] = full[free_vars[j]];
            return out;
        }

        RatVector lift_point(const RatVector & free_values) const
        {
            RatVector x(n, Rat(0));
            for (std::size_t j = 0; j < free_vars.size(); ++j)
                x[free_vars[j]] = free_values[j];
            for (const auto & p : pivots) {
                Rat v = p.rhs;
                for (std::size_t j = 0; j < free_vars.size(); ++j)
                    v -= p.coeffs[free_vars[j]] * free_values[j];
                x[p.var] = v;
            }
            return x;
        }

        RatVector lift_direction(const RatVector & free_values) const
        {
            RatVector x(n, Rat(0));
            for (std::size_t j = 0; j < free_vars.size(); ++j)
                x[free_vars[j]] = free_values[j];
            for (const auto & p : pivots) {
                Rat v = 0;
                for (std::size_t j = 0; j < free_vars.size(); ++j)
                    v -= p.coeffs[free_vars[j]] * free_values[j];
                x[p.var] = v;
            }
            return x;
        }
    };

    Presolved presolve(const LinearProgram & lp)
    {
        std::size_t n = lp.variables();
        Presolved out;
        out.n = n;

        out.ge = lp.ge_rows;
        for (std::size_t v = 0; v < lp.lower_bounds.size(); ++v)
            if (lp.lower_bounds[v]) {
                RatVector row(n, Rat(0));
                row[v] = 1;
                out.ge.push_back({"_lb:" + std::to_string(v), std::move(row), *lp.lower_bounds[v]});
            }
        for (std::size_t v = 0; v < lp.upper_bounds.size(); ++v)
            if (lp.upper_bounds[v]) {
                RatVector row(n, Rat(0));
                row[v] = -1;
                out.ge.push_back({"_ub:" + std::to_string(v), std::move(row), -*lp.upper_bounds[v]});
            }

        std::size_t eq_count = lp.eq_rows.size();
        for (std::size_t e = 0; e < eq_count; ++e) {
            RatVector coeffs = lp.eq_rows[e].coeffs;
            Rat rhs = lp.eq_rows[e].rhs;
            RatVector carried(eq_count, Rat(0));
            for (const auto & p : out.pivots) {
                Rat k = coeffs[p.var];
                if (k == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    coeffs[j] -= k * p.coeffs[j];
                rhs -= k * p.rhs;
                for (std::size_t j = 0; j < eq_count; ++j)
                    carried[j] += k * p.combo[j];
            }
            std::size_t pivot_var = n;
            for (std::size_t j = 0; j < n; ++j)
                if (coeffs[j] != 0) {
                    pivot_var = j;
                    break;
                }
            if (pivot_var == n) {
                if (rhs != 0) {
                    out.eq_inconsistent = true;
                    out.inconsistency_combo.assign(eq_count, Rat(0));
                    Rat sign = rhs > 0 ? Rat(1) : Rat(-1);
                    for (std::size_t j = 0; j < eq_count; ++j)
                        out.inconsistency_combo[j] = sign * -carried[j];
                    out.inconsistency_combo[e] += sign;
                    return out;
                }
                continue;
            }
            Rat lead = coeffs[pivot_var];
            for (auto & x : coeffs)
                x /= lead;
            rhs /= lead;
            for (auto & x : carried)
                x /= lead;
            RatVector combo(eq_count, Rat(0));
            for (std::size_t j = 0; j < eq_count; ++j)
                combo[j] = -carried[j];
            combo[e] += 1 / lead;
            // keep earlier pivot rows reduced against the new one
            for (auto & p : out.pivots) {
                Rat k = p.coeffs[pivot_var];
                if (k == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    p.coeffs[j] -= k * coeffs[j];
                p.rhs -= k * rhs;
                for (std::size_t j = 0; j < eq_count; ++j)
                    p.combo[j] -= k * combo[j];
            }
            out.pivots.push_back({pivot_var, std::move(coeffs), std::move(rhs), std::move(combo)});
        }

        std::vector<char> is_pivot(n, 0);
        for (const auto & p : out.pivots)
            is_pivot[p.var] = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_pivot[j])
                out.free_vars.push_back(j);
        return out;
    }

    // eq duals mu with sum_e mu_e E_e = residual, supported on pivot rows
    std::map<std::string, Rat> recover_eq_duals(const LinearProgram & lp, const Presolved & pre,
        const RatVector & residual)
    {
        std::map<std::string, Rat> mu;
        for (const auto & row : lp.eq_rows)
            mu[row.label] = 0;
        RatVector nu(pre.pivots.size());
        for (std::size_t j = 0; j < pre.pivots.size(); ++j)
            nu[j] = residual[pre.pivots[j].var];
        for (std::size_t j = 0; j < pre.pivots.size(); ++j)
            for (std::size_t e = 0; e < lp.eq_rows.size(); ++e)
                if (pre.pivots[j].combo[e] != 0)
                    mu[lp.eq_rows[e].label] += nu[j] * pre.pivots[j].combo[e];
        return mu;
    }

    void validate(const LinearProgram & lp)
    {
        std::set<std::string> labels;
        auto check_rows = [&](const std::vector<Row> & rows) {
            for (const auto & row : rows) {
                if (row.coeffs.size() != lp.variables())
                    throw std::invalid_argument("LinearProgram: row length mismatch on " + row.label);
                if (!labels.insert(row.label).second)
                    throw std::invalid_argument("LinearProgram: duplicate label " + row.label);
            }
        };
        check_rows(lp.ge_rows);
        check_rows(lp.eq_rows);
        if (lp.lower_bounds.size() > lp.variables() || lp.upper_bounds.size() > lp.variables())
            throw std::invalid_argument("LinearProgram: bound vector longer than variable count");
    }

}

LpOutcome solve(const LinearProgram & lp)
{
    validate(lp);
    Presolved pre = presolve(lp);
    std::size_t eq_count = lp.eq_rows.size();

    if (pre.eq_inconsistent) {
        LpInfeasible inf;
        for (const auto & row : lp.ge_rows)
            inf.farkas[row.label] = 0;
        for (std::size_t e = 0; e < eq_count; ++e)
            inf.farkas[lp.eq_rows[e].label] = pre.inconsistency_combo[e];
        return inf;
    }

    // reduce ge rows into free-variable space, dropping duplicates
    struct ReducedGe {
        RatVector coeffs; // over free vars
        Rat rhs;
        std::size_t source; // index into pre.ge
    };
    std::vector<ReducedGe> active;
    std::map<std::vector<std::string>, std::size_t> dedupe;
    std::vector<Reduced> reduced_rows;
    reduced_rows.reserve(pre.ge.size());
    for (std::size_t g = 0; g < pre.ge.size(); ++g) {
        Reduced red = pre.reduce(pre.ge[g].coeffs, pre.ge[g].rhs);
        reduced_rows.push_back(red);
        RatVector free_coeffs = pre.restrict_free(red.coeffs);
        if (is_zero(free_coeffs)) {
            if (red.rhs > 0) {
                LpInfeasible inf;
                for (const auto & row : lp.ge_rows)
                    inf.farkas[row.label] = 0;
                for (const auto & row : lp.eq_rows)
                    inf.farkas[row.label] = 0;
                inf.farkas[pre.ge[g].label] = 1;
                for (std::size_t e = 0; e < eq_count; ++e)
                    inf.farkas[lp.eq_rows[e].label] -= red.carried[e];
                return inf;
            }
            continue;
        }
        std::vector<std::string> key;
        key.reserve(free_coeffs.size() + 1);
        for (const auto & x : free_coeffs)
            key.push_back(rat_to_string(x));
        key.push_back(rat_to_string(red.rhs));
        if (dedupe.emplace(std::move(key), active.size()).second)
            active.push_back({std::move(free_coeffs), red.rhs, g});
    }

    Reduced obj_red = pre.reduce(lp.objective, Rat(0));
    RatVector obj_free = pre.restrict_free(obj_red.coeffs);
    std::size_t nf = pre.free_vars.size();
    std::size_t m = active.size();

    // dual system: columns of A^T are the reduced ge rows
    std::vector<RatVector> dual_m(nf, RatVector(m, Rat(0)));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < nf; ++i)
            dual_m[i][j] = active[j].coeffs[i];
    RatVector dual_cost(m);
    for (std::size_t j = 0; j < m; ++j)
        dual_cost[j] = -active[j].rhs;

    StdResult dres = solve_standard(dual_m, obj_free, dual_cost);

    auto assemble_farkas = [&](const RatVector & lambda) {
        LpInfeasible inf;
        for (const auto & row : lp.ge_rows)
            inf.farkas[row.label] = 0;
        RatVector residual(lp.variables(), Rat(0));
        for (std::size_t j = 0; j < m; ++j) {
            if (lambda[j] == 0)
                continue;
            const auto & src = pre.ge[active[j].source];
            inf.farkas[src.label] = lambda[j];
            for (std::size_t v = 0; v < lp.variables(); ++v)
                residual[v] -= lambda[j] * src.coeffs[v];
        }
        auto mu = recover_eq_duals(lp, pre, residual);
        for (const auto & [label, value] : mu)
            inf.farkas[label] = value;
        for (const auto & row : lp.eq_rows)
            if (!inf.farkas.count(row.label))
                inf.farkas[row.label] = 0;
        return inf;
    };

    if (dres.status == StdStatus::Optimal) {
        RatVector lambda = dres.z;
        RatVector x_free(nf);
        for (std::size_t i = 0; i < nf; ++i)
            x_free[i] = -dres.y[i];
        LpOptimal opt;
        opt.x = pre.lift_point(x_free);
        opt.objective_value = dot(lp.objective, opt.x);
        for (const auto & row : lp.ge_rows)
            opt.dual[row.label] = 0;
        RatVector residual = lp.objective;
        for (std::size_t j = 0; j < m; ++j) {
            if (lambda[j] == 0)
                continue;
            const auto & src = pre.ge[active[j].source];
            opt.dual[src.label] = lambda[j];
            for (std::size_t v = 0; v < lp.variables(); ++v)
                residual[v] -= lambda[j] * src.coeffs[v];
        }
        auto mu = recover_eq_duals(lp, pre, residual);
        for (const auto & [label, value] : mu)
            opt.dual[label] = value;
        return opt;
    }

    if (dres.status == StdStatus::Unbounded)
        return assemble_farkas(dres.ray);

    // dual infeasible: primal is unbounded or infeasible; infeas_y gives the
    // improving direction, a zero-objective solve decides feasibility
    RatVector ray_free(nf);
    for (std::size_t i = 0; i < nf; ++i)
        ray_free[i] = -dres.infeas_y[i];
    StdResult feas = solve_standard(dual_m, RatVector(nf, Rat(0)), dual_cost);
    if (feas.status == StdStatus::Unbounded)
        return assemble_farkas(feas.ray);
    if (feas.status != StdStatus::Optimal)
        throw std::logic_error("solve: zero-objective dual cannot be infeasible");
    RatVector x_free(nf);
    for (std::size_t i = 0; i < nf; ++i)
        x_free[i] = -feas.y[i];
    LpUnbounded unb;
    unb.feasible_point = pre.lift_point(x_free);
    unb.improving_ray = pre.lift_direction(ray_free);
    return unb;
}

namespace {

    bool verify_optimal(const LinearProgram & lp, const LpOptimal & opt)
    {
        std::size_t n = lp.variables();
        if (opt.x.size() != n)
            return false;
        if (dot(lp.objective, opt.x) != opt.objective_value)
            return false;

        std::vector<Row> all_ge = lp.ge_rows;
        for (std::size_t v = 0; v < lp.lower_bounds.size(); ++v)
            if (lp.lower_bounds[v]) {
                RatVector row(n, Rat(0));
                row[v] = 1;
                all_ge.push_back({"_lb:" + std::to_string(v), std::move(row), *lp.lower_bounds[v]});
            }
        for (std::size_t v = 0; v < lp.upper_bounds.size(); ++v)
            if (lp.upper_bounds[v]) {
                RatVector row(n, Rat(0));
                row[v] = -1;
                all_ge.push_back({"_ub:" + std::to_string(v), std::move(row), -*lp.upper_bounds[v]});
            }

        RatVector combo(n, Rat(0));
        Rat dual_value = 0;
        for (const auto & row : all_ge) {
            Rat slack = dot(row.coeffs, opt.x) - row.rhs;
            if (slack < 0)
                return false;
            auto it = opt.dual.find(row.label);
            Rat lambda = (it == opt.dual.end()) ? Rat(0) : it->second;
            if (lambda < 0)
                return false;
            if (lambda != 0 && slack != 0)
                return false; // complementary slackness
            for (std::size_t v = 0; v < n; ++v)
                combo[v] += lambda * row.coeffs[v];
            dual_value += lambda * row.rhs;
        }
        for (const auto & row : lp.eq_rows) {
            if (dot(row.coeffs, opt.x) != row.rhs)
                return false;
            auto it = opt.dual.find(row.label);
            Rat mu = (it == opt.dual.end()) ? Rat(0) : it->second;
            for (std::size_t v = 0; v < n; ++v)
                combo[v] += mu * row.coeffs[v];
            dual_value += mu * row.rhs;
        }
        if (combo != lp.objective)
            return false; // dual feasibility / stationarity
        return dual_value == opt.objective_value; // strong duality
    }

    bool verify_unbounded(const LinearProgram & lp, const LpUnbounded & unb)
    {
        std::size_t n = lp.variables();
        if (unb.feasible_point.size() != n || unb.improving_ray.size() != n)
            return false;
        if (dot(lp.objective, unb.improving_ray) >= 0)
            return false;
        for (const auto & row : lp.ge_rows) {
            if (dot(row.coeffs, unb.feasible_point) < row.rhs)
                return false;
            if (dot(row.coeffs, unb.improving_ray) < 0)
                return false;
        }
        for (const auto & row : lp.eq_rows) {
            if (dot(row.coeffs, unb.feasible_point) != row.rhs)
                return false;
            if (dot(row.coeffs, unb.improving_ray) != 0)
                return false;
        }
        for (std::size_t v = 0; v < lp.lower_bounds.size(); ++v)
            if (lp.lower_bounds[v]) {
                if (unb.feasible_point[v] < *lp.lower_bounds[v])
                    return false;
                if (unb.improving_ray[v] < 0)
                    return false;
            }
        for (std::size_t v = 0; v < lp.upper_bounds.size(); ++v)
            if (lp.upper_bounds[v]) {
                if (unb.feasible_point[v] > *lp.upper_bounds[v])
                    return false;
                if (unb.improving_ray[v] > 0)
                    return false;
            }
        return true;
    }

    bool verify_infeasible(const LinearProgram & lp, const LpInfeasible & inf)
    {
        std::size_t n = lp.variables();
        RatVector combo(n, Rat(0));
        Rat total = 0;
        bool bound_label_used = false;
        for (const auto & [label, value] : inf.farkas) {
            if (label.rfind("_lb:", 0) == 0 || label.rfind("_ub:", 0) == 0) {
                if (value < 0)
                    return false;
                bool lower = label.rfind("_lb:", 0) == 0;
                std::size_t var = std::stoul(label.substr(4));
                if (var >= n)
                    return false;
                const auto & bounds = lower ? lp.lower_bounds : lp.upper_bounds;
                if (var >= bounds.size() || !bounds[var])
                    return false;
                combo[var] += lower ? value : Rat(-value);
                total += value * (lower ? *bounds[var] : Rat(-*bounds[var]));
                bound_label_used = true;
                continue;
            }
            bool found = false;
            for (const auto & row : lp.ge_rows)
                if (row.label == label) {
                    if (value < 0)
                        return false;
                    for (std::size_t v = 0; v < n; ++v)
                        combo[v] += value * row.coeffs[v];
                    total += value * row.rhs;
                    found = true;
                    break;
                }
            if (!found)
                for (const auto & row : lp.eq_rows)
                    if (row.label == label) {
                        for (std::size_t v = 0; v < n; ++v)
                            combo[v] += value * row.coeffs[v];
                        total += value * row.rhs;
                        found = true;
                        break;
                    }
            if (!found)
                return false;
        }
        (void)bound_label_used;
        return is_zero(combo) && total > 0;
    }

}

bool verify_outcome(const LinearProgram & lp, const LpOutcome & outcome)
{
    try {
        if (const auto * opt = std::get_if<LpOptimal>(&outcome))
            return verify_optimal(lp, *opt);
        if (const auto * unb = std::get_if<LpUnbounded>(&outcome))
            return verify_unbounded(lp, *unb);
        return verify_infeasible(lp, std::get<LpInfeasible>(outcome));
    }
    catch (const std::exception &) {
        return false;
    }
}

std::string outcome_to_json(const LpOutcome & outcome)
{
    nlohmann::json j;
    auto vec = [](const RatVector & v) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto & x : v)
            out.push_back(rat_to_string(x));
        return out;
    };
    auto dual_map = [](const std::map<std::string, Rat> & m) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto & [label, value] : m)
            out[label] = rat_to_string(value);
        return out;
    };
    if (const auto * opt = std::get_if<LpOptimal>(&outcome)) {
        j["status"] = "optimal";
        j["x"] = vec(opt->x);
        j["objective_value"] = rat_to_string(opt->objective_value);
        j["dual"] = dual_map(opt->dual);
    }
    else if (const auto * unb = std::get_if<LpUnbounded>(&outcome)) {
        j["status"] = "unbounded";
        j["feasible_point"] = vec(unb->feasible_point);
        j["improving_ray"] = vec(unb->improving_ray);
    }
    else {
        j["status"] = "infeasible";
        j["farkas"] = dual_map(std::get<LpInfeasible>(outcome).farkas);
    }
    return j.dump();
}

}
