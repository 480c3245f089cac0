#ifndef HOMTROP_TESTS_ORACLES_HPP
#define HOMTROP_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library code paths they
// cross-check: plain nested-loop enumeration instead of pruned backtracking,
// vertex enumeration instead of simplex.

#include <homtrop/exactlp.hpp>
#include <homtrop/graphs.hpp>
#include <homtrop/rat.hpp>

#include <optional>
#include <vector>

namespace homtrop::test_oracles {

// Counts homomorphisms by trying every vertex map.
inline BigInt brute_force_hom(const graphs::Graph & pattern, const graphs::Graph & target)
{
    int k = pattern.vertex_count(), n = target.vertex_count();
    if (n == 0)
        return 0;
    BigInt count = 0;
    std::vector<int> map(k, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : pattern.edges())
            if (!target.has_edge(map[u], map[v])) {
                ok = false;
                break;
            }
        if (ok)
            count += 1;
        int pos = k - 1;
        while (pos >= 0 && map[pos] == n - 1)
            map[pos--] = 0;
        if (pos < 0)
            break;
        ++map[pos];
    }
    return count;
}

// Minimum of the objective over the feasible region by enumerating all basic
// points (every square subsystem set to equality). Only sound when the
// feasible region is a polytope, so callers must supply finite bounds on all
// variables. Returns nullopt when infeasible.
inline std::optional<Rat> vertex_enumeration_minimum(const exactlp::LinearProgram & lp)
{
    std::size_t n = lp.variables();
    struct Constraint {
        RatVector coeffs;
        Rat rhs;
        bool equality;
    };
    std::vector<Constraint> cs;
    for (const auto & row : lp.ge_rows)
        cs.push_back({row.coeffs, row.rhs, false});
    for (const auto & row : lp.eq_rows)
        cs.push_back({row.coeffs, row.rhs, true});
    for (std::size_t v = 0; v < lp.lower_bounds.size(); ++v)
        if (lp.lower_bounds[v]) {
            RatVector r(n, Rat(0));
            r[v] = 1;
            cs.push_back({r, *lp.lower_bounds[v], false});
        }
    for (std::size_t v = 0; v < lp.upper_bounds.size(); ++v)
        if (lp.upper_bounds[v]) {
            RatVector r(n, Rat(0));
            r[v] = -1;
            cs.push_back({r, -*lp.upper_bounds[v], false});
        }

    auto solve_square = [&](const std::vector<std::size_t> & idx) -> std::optional<RatVector> {
        RatMatrix m(n, RatVector(n + 1, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = cs[idx[i]].coeffs[j];
            m[i][n] = cs[idx[i]].rhs;
        }
        for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
            std::size_t piv = row;
            while (piv < n && m[piv][col] == 0)
                ++piv;
            if (piv == n)
                return std::nullopt; // singular: skip, another subset covers it
            std::swap(m[row], m[piv]);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == row || m[i][col] == 0)
                    continue;
                Rat f = m[i][col] / m[row][col];
                for (std::size_t j = col; j <= n; ++j)
                    m[i][j] -= f * m[row][j];
            }
            ++row;
        }
        RatVector x(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t lead = 0;
            while (lead < n && m[i][lead] == 0)
                ++lead;
            if (lead == n)
                return std::nullopt;
            x[lead] = m[i][n] / m[i][lead];
        }
        return x;
    };

    std::optional<Rat> best;
    auto feasible = [&](const RatVector & x) {
        for (const auto & c : cs) {
            Rat lhs = dot(c.coeffs, x);
            if (c.equality ? lhs != c.rhs : lhs < c.rhs)
                return false;
        }
        return true;
    };
    // enumerate all n-subsets of constraints
    std::vector<std::size_t> comb(n);
    for (std::size_t i = 0; i < n; ++i)
        comb[i] = i;
    if (cs.size() < n)
        return std::nullopt;
    while (true) {
        auto x = solve_square(comb);
        if (x && feasible(*x)) {
            Rat val = dot(lp.objective, *x);
            if (!best || val < *best)
                best = val;
        }
        // next combination
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (comb[i] != i + cs.size() - n) {
                ++comb[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0)
                return best;
        }
        if (n == 0)
            return best;
    }
}

}

#endif
