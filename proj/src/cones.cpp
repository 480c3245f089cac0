#include <homtrop/cones.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace homtrop::cones {

void ConeH::add_row(std::string label, RatVector coeffs)
{
    if (static_cast<int>(coeffs.size()) != dim)
        throw std::invalid_argument("ConeH::add_row: wrong length for " + label);
    rows.push_back({std::move(label), std::move(coeffs), Rat(0)});
}

namespace {

    bool lex_less(const RatVector & a, const RatVector & b)
    {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] < b[i])
                return true;
            if (a[i] > b[i])
                return false;
        }
        return a.size() < b.size();
    }

    struct DdState {
        int dim;
        std::vector<RatVector> lineality;            // current basis
        std::vector<RatVector> rays;
        std::vector<RatVector> processed;            // rows already inserted
        std::vector<std::vector<char>> tight;        // per ray, per processed row

        explicit DdState(int d) : dim(d)
        {
            for (int i = 0; i < d; ++i) {
                RatVector e(d, Rat(0));
                e[i] = 1;
                lineality.push_back(std::move(e));
            }
        }

        std::vector<char> tight_set(const RatVector & ray) const
        {
            std::vector<char> out(processed.size());
            for (std::size_t k = 0; k < processed.size(); ++k)
                out[k] = (dot(processed[k], ray) == 0) ? 1 : 0;
            return out;
        }

        bool adjacent(std::size_t p, std::size_t q) const
        {
            for (std::size_t w = 0; w < rays.size(); ++w) {
                if (w == p || w == q)
                    continue;
                bool covers = true;
                for (std::size_t k = 0; k < processed.size(); ++k)
                    if (tight[p][k] && tight[q][k] && !tight[w][k]) {
                        covers = false;
                        break;
                    }
                if (covers)
                    return false;
            }
            return true;
        }

        void insert(const RatVector & row)
        {
            if (is_zero(row))
                return;

            // a lineality vector not orthogonal to the row leaves the
            // lineality space and becomes a ray
            std::size_t b0 = lineality.size();
            for (std::size_t i = 0; i < lineality.size(); ++i)
                if (dot(row, lineality[i]) != 0) {
                    b0 = i;
                    break;
                }
            if (b0 < lineality.size()) {
                RatVector pivot = lineality[b0];
                Rat pv = dot(row, pivot);
                if (pv < 0) {
                    pivot = scale(-1, pivot);
                    pv = -pv;
                }
                std::vector<RatVector> new_lin;
                for (std::size_t i = 0; i < lineality.size(); ++i) {
                    if (i == b0)
                        continue;
                    Rat d = dot(row, lineality[i]);
                    new_lin.push_back(add(lineality[i], scale(-d / pv, pivot)));
                }
                lineality = std::move(new_lin);
                for (auto & r : rays) {
                    Rat d = dot(row, r);
                    if (d != 0)
                        r = primitive(add(r, scale(-d / pv, pivot)));
                }
                rays.push_back(primitive(pivot));
                processed.push_back(row);
                tight.clear();
                for (const auto & r : rays)
                    tight.push_back(tight_set(r));
                return;
            }

            std::vector<std::size_t> plus, zero, minus;
            for (std::size_t i = 0; i < rays.size(); ++i) {
                Rat d = dot(row, rays[i]);
                if (d > 0)
                    plus.push_back(i);
                else if (d < 0)
                    minus.push_back(i);
                else
                    zero.push_back(i);
            }
            if (minus.empty()) {
                processed.push_back(row);
                for (std::size_t i = 0; i < rays.size(); ++i)
                    tight[i].push_back(dot(row, rays[i]) == 0 ? 1 : 0);
                return;
            }

            std::vector<RatVector> next;
            for (std::size_t i : plus)
                next.push_back(rays[i]);
            for (std::size_t i : zero)
                next.push_back(rays[i]);
            for (std::size_t p : plus)
                for (std::size_t m : minus)
                    if (adjacent(p, m)) {
                        Rat dp = dot(row, rays[p]);
                        Rat dm = dot(row, rays[m]);
                        next.push_back(primitive(add(scale(dp, rays[m]), scale(-dm, rays[p]))));
                    }
            rays = std::move(next);
            processed.push_back(row);
            tight.clear();
            for (const auto & r : rays)
                tight.push_back(tight_set(r));
        }
    };

    RaySet run_dd(int dim, const std::vector<exactlp::Row> & rows)
    {
        DdState state(dim);
        for (const auto & row : rows)
            state.insert(row.coeffs);
        RaySet out;
        out.dim = dim;
        for (const auto & r : state.rays)
            out.rays.push_back(primitive(r));
        std::sort(out.rays.begin(), out.rays.end(), lex_less);
        out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
        for (const auto & l : state.lineality)
            out.lineality.push_back(primitive_signless(l));
        std::sort(out.lineality.begin(), out.lineality.end(), lex_less);
        return out;
    }

    // All generators of the cone, rays plus both signs of the lineality.
    std::vector<RatVector> generators(const RaySet & rays)
    {
        std::vector<RatVector> out = rays.rays;
        for (const auto & l : rays.lineality) {
            out.push_back(l);
            out.push_back(scale(-1, l));
        }
        return out;
    }

    // H-description of cone(generators) through the polar: the polar of the
    // generated cone is { z : g.z >= 0 }, whose extreme rays and lineality
    // give the rows (lineality directions become equality pairs).
    std::vector<RatVector> vrep_to_rows(int dim, const std::vector<RatVector> & gens)
    {
        std::vector<exactlp::Row> polar_rows;
        for (std::size_t i = 0; i < gens.size(); ++i)
            polar_rows.push_back({"g" + std::to_string(i), gens[i], Rat(0)});
        RaySet polar = run_dd(dim, polar_rows);
        std::vector<RatVector> rows = polar.rays;
        for (const auto & l : polar.lineality) {
            rows.push_back(l);
            rows.push_back(scale(-1, l));
        }
        return rows;
    }

}

RaySet extreme_rays(const ConeH & cone, int dim_limit)
{
    if (cone.dim > dim_limit)
        throw DimensionLimitError("extreme_rays: dimension exceeds bound");
    return run_dd(cone.dim, cone.rows);
}

RaySet dual_cone(const ConeH & cone, int dim_limit)
{
    if (cone.dim > dim_limit)
        throw DimensionLimitError("dual_cone: dimension exceeds bound");
    // dual = cone(rows); convert to an H-description, then enumerate
    std::vector<RatVector> gens;
    for (const auto & row : cone.rows)
        gens.push_back(row.coeffs);
    std::vector<exactlp::Row> rows;
    std::size_t k = 0;
    for (auto & r : vrep_to_rows(cone.dim, gens))
        rows.push_back({"h" + std::to_string(k++), std::move(r), Rat(0)});
    return run_dd(cone.dim, rows);
}

ConeH dual_cone_of_rays(const RaySet & rays)
{
    ConeH out;
    out.dim = rays.dim;
    std::size_t k = 0;
    for (const auto & r : rays.rays)
        out.add_row("ray" + std::to_string(k++), r);
    k = 0;
    for (const auto & l : rays.lineality) {
        out.add_row("lin+" + std::to_string(k), l);
        out.add_row("lin-" + std::to_string(k), scale(-1, l));
        ++k;
    }
    return out;
}

RatVector tropical_sum(const RatVector & x, const RatVector & y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("tropical_sum: length mismatch");
    RatVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = std::max(x[i], y[i]);
    return out;
}

namespace {

    void prune_redundant_rows(ConeH & cone)
    {
        for (std::size_t i = 0; i < cone.rows.size();) {
            RaySet others;
            others.dim = cone.dim;
            for (std::size_t j = 0; j < cone.rows.size(); ++j)
                if (j != i)
                    others.rays.push_back(cone.rows[j].coeffs);
            if (member_hull(others, cone.rows[i].coeffs))
                cone.rows.erase(cone.rows.begin() + i);
            else
                ++i;
        }
    }

}

ConeH max_closure(const RaySet & rays, int dim_limit)
{
    if (rays.dim > dim_limit)
        throw DimensionLimitError("max_closure: dimension exceeds bound");
    if (!rays.lineality.empty())
        throw std::invalid_argument("max_closure: generators must be rays in the nonnegative orthant");
    for (const auto & r : rays.rays)
        for (const auto & x : r)
            if (x < 0)
                throw std::invalid_argument("max_closure: ray with a negative coordinate");

    int s = rays.dim;
    std::vector<RatVector> all_rows;
    for (int i = 0; i < s; ++i) {
        std::vector<RatVector> gens = rays.rays;
        for (int j = 0; j < s; ++j) {
            RatVector e(s, Rat(0));
            e[j] = (j == i) ? -1 : 1;
            gens.push_back(std::move(e));
        }
        for (auto & r : vrep_to_rows(s, gens))
            all_rows.push_back(primitive(r));
    }
    std::sort(all_rows.begin(), all_rows.end(), lex_less);
    all_rows.erase(std::unique(all_rows.begin(), all_rows.end()), all_rows.end());

    ConeH out;
    out.dim = s;
    std::size_t k = 0;
    for (auto & r : all_rows)
        out.add_row("mc" + std::to_string(k++), std::move(r));
    prune_redundant_rows(out);
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        out.rows[i].label = "mc" + std::to_string(i);
    return out;
}

ConeH double_hull(const RaySet & rays, int dim_limit)
{
    return max_closure(rays, dim_limit);
}

bool cones_equal(const ConeH & a, const ConeH & b, int dim_limit)
{
    if (a.dim != b.dim)
        throw std::invalid_argument("cones_equal: dimension mismatch");
    RaySet ra = extreme_rays(a, dim_limit);
    RaySet rb = extreme_rays(b, dim_limit);
    auto inside = [](const RaySet & gens, const ConeH & cone) {
        for (const auto & g : generators(gens))
            if (!member(cone, g))
                return false;
        return true;
    };
    return inside(ra, b) && inside(rb, a);
}

bool member(const ConeH & cone, const RatVector & point)
{
    if (static_cast<int>(point.size()) != cone.dim)
        throw std::invalid_argument("member: dimension mismatch");
    for (const auto & row : cone.rows)
        if (dot(row.coeffs, point) < 0)
            return false;
    return true;
}

std::optional<HullMembership> member_hull(const RaySet & rays, const RatVector & point,
    RatVector * separating)
{
    if (static_cast<int>(point.size()) != rays.dim)
        throw std::invalid_argument("member_hull: dimension mismatch");
    std::size_t nr = rays.rays.size(), nl = rays.lineality.size();
    exactlp::LinearProgram lp;
    lp.objective.assign(nr + nl, Rat(0));
    lp.lower_bounds.assign(nr + nl, std::nullopt);
    for (std::size_t i = 0; i < nr; ++i)
        lp.lower_bounds[i] = Rat(0);
    for (int k = 0; k < rays.dim; ++k) {
        RatVector row(nr + nl, Rat(0));
        for (std::size_t i = 0; i < nr; ++i)
            row[i] = rays.rays[i][k];
        for (std::size_t j = 0; j < nl; ++j)
            row[nr + j] = rays.lineality[j][k];
        lp.add_eq("coord:" + std::to_string(k), std::move(row), point[k]);
    }
    auto outcome = exactlp::solve(lp);
    if (const auto * opt = std::get_if<exactlp::LpOptimal>(&outcome))
        return HullMembership{opt->x};
    const auto & inf = std::get<exactlp::LpInfeasible>(outcome);
    if (separating) {
        separating->assign(rays.dim, Rat(0));
        for (int k = 0; k < rays.dim; ++k) {
            auto it = inf.farkas.find("coord:" + std::to_string(k));
            if (it != inf.farkas.end())
                (*separating)[k] = -it->second;
        }
    }
    return std::nullopt;
}

ConeH project_cone(const ConeH & cone, int keep, std::size_t row_budget)
{
    if (keep < 0 || keep > cone.dim)
        throw std::invalid_argument("project_cone: bad target dimension");
    std::vector<RatVector> rows;
    for (const auto & row : cone.rows)
        rows.push_back(row.coeffs);
    for (int d = cone.dim; d > keep; --d) {
        std::size_t col = d - 1;
        std::vector<RatVector> kept, pos, neg;
        for (auto & r : rows) {
            if (r[col] == 0)
                kept.push_back(r);
            else if (r[col] > 0)
                pos.push_back(r);
            else
                neg.push_back(r);
        }
        for (const auto & p : pos)
            for (const auto & n : neg) {
                RatVector combo = add(scale(p[col], n), scale(-n[col], p));
                if (!is_zero(combo))
                    kept.push_back(primitive(combo));
            }
        if (kept.size() > row_budget)
            throw DimensionLimitError("project_cone: row budget exceeded");
        for (auto & r : kept)
            r.resize(col);
        std::sort(kept.begin(), kept.end(), lex_less);
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        rows = std::move(kept);
    }
    ConeH out;
    out.dim = keep;
    std::size_t k = 0;
    for (auto & r : rows)
        out.add_row("fm" + std::to_string(k++), std::move(r));
    prune_redundant_rows(out);
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        out.rows[i].label = "fm" + std::to_string(i);
    return out;
}

std::string cone_to_json(const ConeH & cone)
{
    nlohmann::json j;
    j["dim"] = cone.dim;
    j["rows"] = nlohmann::json::array();
    for (const auto & row : cone.rows) {
        nlohmann::json r;
        r["label"] = row.label;
        r["coeffs"] = nlohmann::json::array();
        for (const auto & x : row.coeffs)
            r["coeffs"].push_back(rat_to_string(x));
        j["rows"].push_back(std::move(r));
    }
    return j.dump();
}

std::string rayset_to_json(const RaySet & rays)
{
    nlohmann::json j;
    j["dim"] = rays.dim;
    auto render = [](const std::vector<RatVector> & vs) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto & v : vs) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto & x : v)
                row.push_back(rat_to_string(x));
            out.push_back(std::move(row));
        }
        return out;
    };
    j["rays"] = render(rays.rays);
    j["lineality"] = render(rays.lineality);
    return j.dump();
}

}
