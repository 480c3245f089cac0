#include <homtrop/pathprofile.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace homtrop::pathprofile {

void BinomialInequality::normalize()
{
    for (auto it = lhs.begin(); it != lhs.end();) {
        auto jt = rhs.find(it->first);
        if (jt != rhs.end()) {
            Rat common = std::min(it->second, jt->second);
            it->second -= common;
            jt->second -= common;
            if (jt->second == 0)
                rhs.erase(jt);
        }
        it = (it->second == 0) ? lhs.erase(it) : std::next(it);
    }
    for (auto it = rhs.begin(); it != rhs.end();)
        it = (it->second == 0) ? rhs.erase(it) : std::next(it);
}

int BinomialInequality::max_index() const
{
    int m = 0;
    for (const auto & [k, e] : lhs)
        m = std::max(m, k);
    for (const auto & [k, e] : rhs)
        m = std::max(m, k);
    return m;
}

namespace {

    char family_letter(IneqFamily family)
    {
        switch (family) {
        case IneqFamily::Paths: return 'P';
        case IneqFamily::EvenCycles:
        case IneqFamily::OddCycles: return 'C';
        case IneqFamily::Stars: return 'S';
        case IneqFamily::Cliques: return 'K';
        }
        return '?';
    }

    void validate_index(IneqFamily family, int k)
    {
        switch (family) {
        case IneqFamily::Paths:
            if (k < 0)
                throw ParseError("path index must be nonnegative");
            break;
        case IneqFamily::EvenCycles:
            if (k < 4 || k % 2 != 0)
                throw ParseError("even-cycle index must be an even number >= 4");
            break;
        case IneqFamily::OddCycles:
            if (k < 3 || k % 2 != 1)
                throw ParseError("odd-cycle index must be an odd number >= 3");
            break;
        case IneqFamily::Stars:
            if (k < 0)
                throw ParseError("star index must be nonnegative");
            break;
        case IneqFamily::Cliques:
            if (k < 1)
                throw ParseError("clique index must be at least 1");
            break;
        }
    }

    std::map<int, Rat> parse_side(const std::string & side, IneqFamily family)
    {
        std::map<int, Rat> out;
        std::size_t i = 0;
        char letter = family_letter(family);
        auto skip_ws = [&] {
            while (i < side.size() && (std::isspace(static_cast<unsigned char>(side[i])) || side[i] == '*'))
                ++i;
        };
        skip_ws();
        if (i == side.size())
            throw ParseError("empty side in inequality");
        while (i < side.size()) {
            if (std::toupper(static_cast<unsigned char>(side[i])) != letter)
                throw ParseError(std::string("expected term starting with '") + letter + "': " + side.substr(i));
            ++i;
            std::size_t start = i;
            while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i])))
                ++i;
            if (start == i)
                throw ParseError("term missing index: " + side.substr(start));
            int index = std::stoi(side.substr(start, i - start));
            validate_index(family, index);
            Rat exponent = 1;
            if (i < side.size() && side[i] == '^') {
                ++i;
                std::size_t estart = i;
                while (i < side.size() && (std::isdigit(static_cast<unsigned char>(side[i])) || side[i] == '/' || side[i] == '-'))
                    ++i;
                if (estart == i)
                    throw ParseError("missing exponent after ^");
                exponent = rat_from_string(side.substr(estart, i - estart));
                if (exponent < 0)
                    throw ParseError("negative exponent");
            }
            out[index] += exponent;
            skip_ws();
        }
        return out;
    }

}

BinomialInequality parse_inequality(const std::string & text, IneqFamily family)
{
    auto pos = text.find(">=");
    if (pos == std::string::npos)
        throw ParseError("inequality must contain '>='");
    BinomialInequality ineq;
    ineq.family = family;
    ineq.lhs = parse_side(text.substr(0, pos), family);
    ineq.rhs = parse_side(text.substr(pos + 2), family);
    ineq.normalize();
    return ineq;
}

std::string inequality_to_text(const BinomialInequality & ineq)
{
    char letter = family_letter(ineq.family);
    auto side = [&](const std::map<int, Rat> & terms) {
        if (terms.empty())
            return std::string("1");
        std::string out;
        for (const auto & [k, e] : terms) {
            if (!out.empty())
                out += "*";
            out += letter + std::to_string(k);
            if (e != 1)
                out += "^" + rat_to_string(e);
        }
        return out;
    };
    return side(ineq.lhs) + " >= " + side(ineq.rhs);
}

PathConeC build_cone_C(int n)
{
    if (n < 0)
        throw std::invalid_argument("build_cone_C: n must be nonnegative");
    int dim = 4 * n + 4;
    PathConeC out;
    out.n = n;
    out.cone.dim = dim;
    auto row = [&](std::initializer_list<std::pair<int, Rat>> entries) {
        RatVector r(dim, Rat(0));
        for (const auto & [idx, coeff] : entries)
            r[idx] += coeff;
        return r;
    };
    auto tag = [](const std::string & fam, std::initializer_list<std::pair<const char *, int>> args) {
        std::string label = fam;
        if (args.size() > 0) {
            label += "[";
            bool first = true;
            for (const auto & [name, value] : args) {
                if (!first)
                    label += ",";
                first = false;
                label += std::string(name) + "=" + std::to_string(value);
            }
            label += "]";
        }
        return label;
    };

    for (int u = 0; u <= 2 * n; ++u)
        out.cone.add_row(tag("5.1", {{"u", u}}),
            row({{2 * u, 1}, {2 * u + 1, -2}, {2 * u + 2, 1}}));
    for (int u = 0; u <= 2 * n - 1; ++u)
        out.cone.add_row(tag("5.2", {{"u", u}}),
            row({{2 * u, 1}, {2 * u + 2, -2}, {2 * u + 4, 1}}));
    for (int u = 1; u <= 2 * n + 1; ++u)
        out.cone.add_row(tag("5.3", {{"u", u}}),
            row({{2 * u, -1}, {2 * u + 1, 1}}));
    for (int u = 0; u <= 2 * n; ++u)
        for (int v = u; 2 * u + 2 * v + 3 <= 4 * n + 3; ++v)
            out.cone.add_row(tag("5.4", {{"u", u}, {"v", v}}),
                row({{2 * u + 1, 1}, {2 * v + 1, 1}, {2 * u + 2 * v + 3, -1}}));
    for (int v = 2; v <= 2 * n + 1; ++v)
        for (int u = 0; u < v - 1; ++u)
            out.cone.add_row(tag("5.5", {{"u", u}, {"v", v}}),
                row({{2 * u, 2}, {2 * v - 1, -(2 * v + 1 - 2 * u)}, {2 * v + 1, 2 * v - 1 - 2 * u}}));
    for (int u = 1; u <= 2 * n + 1; ++u)
        out.cone.add_row(tag("5.6", {{"u", u}}),
            row({{2 * u - 2, u + 1}, {2 * u, -(u + 1)}, {2 * u + 1, 1}}));
    if (4 <= 4 * n + 3)
        out.cone.add_row("5.7", row({{1, 1}, {2, -2}, {4, 1}}));
    for (int v = 2; v <= 2 * n + 1; ++v)
        out.cone.add_row(tag("5.8", {{"v", v}}),
            row({{1, 2}, {2 * v - 1, -(2 * v + 1)}, {2 * v + 1, 2 * v - 1}}));
    out.cone.add_row("5.9", row({{1, -1}, {2, 1}}));
    return out;
}

RatVector functional_vector(const BinomialInequality & ineq, int dim)
{
    RatVector c(dim, Rat(0));
    for (const auto & [k, e] : ineq.lhs) {
        if (k >= dim)
            throw std::invalid_argument("functional_vector: index out of range");
        c[k] += e;
    }
    for (const auto & [k, e] : ineq.rhs) {
        if (k >= dim)
            throw std::invalid_argument("functional_vector: index out of range");
        c[k] -= e;
    }
    return c;
}

namespace {

    std::vector<BigInt> path_counts_for(const graphs::Graph & g, int max_index)
    {
        return graphs::path_hom_vector(g, max_index).counts;
    }

    bool violates(const BinomialInequality & ineq, const graphs::Graph & g)
    {
        auto counts = path_counts_for(g, ineq.max_index());
        return counts_positive(ineq, counts) && evaluate_exact(ineq, counts) < 0;
    }

    // Stage order: two-clique unions (they realize the generic two-slope
    // violating directions), the whole small-graph corpus, a few named
    // 8-vertex graphs, then best-effort blow-up realization of the ray.
    std::optional<graphs::Graph> search_witness_graph(const BinomialInequality & ineq,
        const RatVector & ray)
    {
        using graphs::Family;
        using graphs::Graph;
        for (int total = 4; total <= 8; ++total)
            for (int a = 2; 2 * a <= total; ++a) {
                Graph g = graphs::disjoint_union(graphs::make_named(Family::Complete, {a}),
                    graphs::make_named(Family::Complete, {total - a}));
                if (violates(ineq, g))
                    return g;
            }
        for (int n = 1; n <= 7; ++n)
            for (const Graph & g : graphs::all_graphs(n, true))
                if (g.edge_count() > 0 || ineq.max_index() == 0)
                    if (violates(ineq, g))
                        return g;
        std::vector<Graph> extras;
        extras.push_back(graphs::make_named(Family::Complete, {8}));
        extras.push_back(graphs::make_named(Family::Cycle, {8}));
        extras.push_back(graphs::make_named(Family::Path, {7}));
        extras.push_back(graphs::make_named(Family::Star, {7}));
        extras.push_back(graphs::make_named(Family::CompleteBipartite, {4, 4}));
        extras.push_back(graphs::make_named(Family::CompleteBipartite, {2, 6}));
        extras.push_back(graphs::make_named(Family::Turan, {8, 3}));
        extras.push_back(graphs::make_named(Family::Turan, {8, 4}));
        for (const Graph & g : extras)
            if (violates(ineq, g))
                return g;

        // blow-up route: realize the violating ray's decomposition parts
        try {
            auto parts = decompose_ray(ray);
            for (long m : {2L, 3L, 4L, 8L}) {
                std::vector<Graph> built;
                for (const auto & part : parts) {
                    if (part.tag != "ray")
                        continue;
                    try {
                        blowup::BlowUpSpec spec = blowup::make_spec(part.spec.b, part.spec.s, part.spec.d);
                        built.push_back(blowup::build_blowup_graph(spec, m, 3000));
                    }
                    catch (const std::exception &) {
                        continue;
                    }
                }
                if (built.empty())
                    continue;
                Graph all = built[0];
                for (std::size_t i = 0; i < built.size(); ++i) {
                    if (violates(ineq, built[i]))
                        return built[i];
                    if (i > 0)
                        all = graphs::disjoint_union(all, built[i]);
                }
                if (all.vertex_count() <= 4000 && violates(ineq, all))
                    return all;
            }
        }
        catch (const std::exception &) {
            // the modified ray may fall outside the R* budget; stages above
            // remain the supported witness sources
        }
        return std::nullopt;
    }

}

CheckResult check_path_inequality(const BinomialInequality & input, bool search_witness)
{
    if (input.family != IneqFamily::Paths)
        throw std::invalid_argument("check_path_inequality: paths only");
    BinomialInequality ineq = input;
    ineq.normalize();

    int max_index = ineq.max_index();
    int n = (max_index <= 1) ? 0 : (max_index) / 2; // smallest n with 2n+1 >= max_index
    if (2 * n + 1 < max_index)
        ++n;

    CheckResult result;
    result.n = n;
    if (ineq.lhs.empty() && ineq.rhs.empty()) {
        result.valid = true;
        return result;
    }

    PathConeC pc = build_cone_C(n);
    exactlp::LinearProgram lp;
    lp.objective = functional_vector(ineq, pc.cone.dim);
    lp.ge_rows = pc.cone.rows;
    auto outcome = exactlp::solve(lp);

    if (const auto * opt = std::get_if<exactlp::LpOptimal>(&outcome)) {
        if (opt->objective_value != 0)
            throw std::logic_error("check_path_inequality: homogeneous optimum must be zero");
        result.valid = true;
        for (const auto & row : pc.cone.rows) {
            auto it = opt->dual.find(row.label);
            if (it != opt->dual.end() && it->second != 0)
                result.certificate.terms.emplace_back(row.label, it->second);
        }
        return result;
    }

    const auto & unb = std::get<exactlp::LpUnbounded>(outcome);
    result.valid = false;
    result.ray_lift = unb.improving_ray;
    result.ray.assign(unb.improving_ray.begin(), unb.improving_ray.begin() + 2 * n + 2);
    if (search_witness)
        result.witness = search_witness_graph(ineq, result.ray);
    return result;
}

bool verify_certificate(const BinomialInequality & input, const Certificate & cert)
{
    BinomialInequality ineq = input;
    ineq.normalize();
    int max_index = ineq.max_index();
    int n = (max_index <= 1) ? 0 : max_index / 2;
    if (2 * n + 1 < max_index)
        ++n;
    PathConeC pc = build_cone_C(n);
    std::map<std::string, const exactlp::Row *> by_label;
    for (const auto & row : pc.cone.rows)
        by_label[row.label] = &row;
    RatVector total(pc.cone.dim, Rat(0));
    for (const auto & [label, coeff] : cert.terms) {
        auto it = by_label.find(label);
        if (it == by_label.end())
            throw std::invalid_argument("verify_certificate: unknown generator " + label);
        if (coeff < 0)
            return false;
        for (int i = 0; i < pc.cone.dim; ++i)
            total[i] += coeff * it->second->coeffs[i];
    }
    return total == functional_vector(ineq, pc.cone.dim);
}

std::optional<RatVector> lift_membership(const RatVector & r)
{
    if (r.size() % 2 != 0 || r.empty())
        throw std::invalid_argument("lift_membership: length must be even and positive");
    int n = static_cast<int>(r.size()) / 2 - 1;
    PathConeC pc = build_cone_C(n);
    exactlp::LinearProgram lp;
    lp.objective.assign(pc.cone.dim, Rat(0));
    lp.ge_rows = pc.cone.rows;
    for (std::size_t i = 0; i < r.size(); ++i) {
        RatVector row(pc.cone.dim, Rat(0));
        row[i] = 1;
        lp.add_eq("pin:" + std::to_string(i), std::move(row), r[i]);
    }
    auto outcome = exactlp::solve(lp);
    if (const auto * opt = std::get_if<exactlp::LpOptimal>(&outcome))
        return opt->x;
    return std::nullopt;
}

std::vector<exactlp::Row> derived_inequality_rows(int n)
{
    if (n < 0)
        throw std::invalid_argument("derived_inequality_rows: n must be nonnegative");
    int dim = 2 * n + 2;
    std::vector<exactlp::Row> rows;
    auto row = [&](std::initializer_list<std::pair<int, Rat>> entries) {
        RatVector r(dim, Rat(0));
        for (const auto & [idx, coeff] : entries)
            r[idx] += coeff;
        return r;
    };

    for (int v = 1; v <= 2 * n + 1; ++v)
        for (int u = 0; 2 * u < v; ++u)
            rows.push_back({"L5.1[u=" + std::to_string(u) + ",v=" + std::to_string(v) + "]",
                row({{2 * u, v}, {v, -2 * u}}), Rat(0)});
    for (int v = 2; v <= 2 * n + 1; ++v)
        for (int u = 0; 2 * u + 1 < v; ++u)
            rows.push_back({"L5.2[u=" + std::to_string(u) + ",v=" + std::to_string(v) + "]",
                row({{2 * u, v - 2 * u - 1}, {2 * u + 1, -(v - 2 * u)}, {v, 1}}), Rat(0)});
    for (int v = 1; v <= 2 * n + 1; ++v)
        for (int t = 0; 2 * t <= v; ++t)
            for (int u = 0; 2 * u + 1 <= v; ++u) {
                if (v == 2 * t)
                    continue;
                RatVector r = row({{2 * u + 1, v - 2 * t}, {2 * t, 2 * (u + 1)}, {v, -2 * (u + 1)}});
                if (!is_zero(r))
                    rows.push_back({"L5.3[t=" + std::to_string(t) + ",u=" + std::to_string(u)
                            + ",v=" + std::to_string(v) + "]",
                        std::move(r), Rat(0)});
            }
    for (int v = 1; v <= n; ++v)
        for (int u = 0; u < v; ++u)
            rows.push_back({"L5.4[u=" + std::to_string(u) + ",v=" + std::to_string(v) + "]",
                row({{2 * u, 2 * v + 1}, {2 * v, -(2 * u + 1)}}), Rat(0)});
    for (int v = 1; v <= n; ++v)
        for (int u = 0; u < v; ++u)
            for (int l = 0; v + l <= n; ++l)
                rows.push_back({"L5.5[u=" + std::to_string(u) + ",v=" + std::to_string(v)
                        + ",l=" + std::to_string(l) + "]",
                    row({{2 * u, 2 * (l + 1)}, {2 * v - 1, -(2 * v + 2 * l + 1 - 2 * u)},
                        {2 * (v + l) + 1, 2 * v - 1 - 2 * u}}),
                    Rat(0)});
    return rows;
}

bool rfamily_check(const RFamilySpec & spec)
{
    if (spec.s < 0 || spec.b < 0)
        return false;
    if (spec.d.empty())
        return false;
    for (const auto & x : spec.d)
        if (x < 0)
            return false;
    const Rat & d0 = spec.d[0];
    if (d0 < spec.b - spec.s)
        return false;
    if (2 * d0 > 2 * spec.b - spec.s)
        return false;
    int n = static_cast<int>(spec.d.size()) - 1;
    RatVector prefix(n + 1);
    Rat acc = 0;
    for (int i = 0; i <= n; ++i) {
        acc += spec.d[i];
        prefix[i] = acc;
    }
    for (int v = 1; v <= n; ++v)
        for (int u = 0; u < v; ++u) {
            Rat right = prefix[v] - (v - u - 1 >= 0 ? prefix[v - u - 1] : Rat(0));
            if (prefix[u] < right)
                return false;
        }
    if (2 * (prefix[n] - d0) > spec.s)
        return false;
    return true;
}

RatVector rfamily_ray(const RFamilySpec & spec, int n)
{
    RatVector out(2 * n + 2);
    Rat prefix = 0;
    for (int i = 0; i <= n; ++i) {
        out[2 * i] = spec.b + i * spec.s;
        if (i < static_cast<int>(spec.d.size()))
            prefix += spec.d[i];
        out[2 * i + 1] = (i + 1) * spec.s + prefix;
    }
    return out;
}

RatVector part_ray(const DecompositionPart & part, int n)
{
    if (part.tag == "ray")
        return rfamily_ray(part.spec, n);
    RatVector out(2 * n + 2, Rat(0));
    if (part.tag == "spike") {
        out[0] = part.coefficient;
        return out;
    }
    if (part.tag == "all_ones") {
        for (auto & x : out)
            x = part.coefficient;
        return out;
    }
    throw std::invalid_argument("part_ray: unknown tag " + part.tag);
}

namespace {

    DecompositionPart odd_part(const RatVector & r, int i)
    {
        // l = 2i+1: maximal slope from an even point to (2i+1, r_{2i+1})
        Rat s_prime;
        int j_prime = 0;
        bool first = true;
        for (int j = 0; j <= i; ++j) {
            Rat slope = 2 * (r[2 * i + 1] - r[2 * j]) / (2 * i + 1 - 2 * j);
            if (first || slope > s_prime) {
                s_prime = slope;
                j_prime = j;
                first = false;
            }
        }
        RatVector d(r.size() / 2, Rat(0));
        Rat running_min;
        bool seeded = false;
        RatVector suffix_min(i + 1);
        for (int v = i; v >= 0; --v) {
            Rat value = r[2 * v + 1] - (v + 1) * s_prime;
            if (!seeded || value < running_min) {
                running_min = value;
                seeded = true;
            }
            suffix_min[v] = running_min;
        }
        d[0] = suffix_min[0];
        for (int v = 1; v <= i; ++v)
            d[v] = suffix_min[v] - suffix_min[v - 1];
        DecompositionPart part;
        part.tag = "ray";
        part.l = 2 * i + 1;
        part.spec = {s_prime, r[2 * j_prime] - j_prime * s_prime, std::move(d)};
        return part;
    }

    DecompositionPart even_part(const RatVector & r, int i)
    {
        Rat s_prime = 0;
        int j_prime = i;
        bool first = true;
        for (int j = 0; j < i; ++j) {
            Rat slope = (r[2 * i] - r[2 * j]) / (i - j);
            if (first || slope > s_prime) {
                s_prime = slope;
                j_prime = j;
                first = false;
            }
        }
        Rat b_prime = r[2 * j_prime] - j_prime * s_prime;
        RatVector d(r.size() / 2, Rat(0));
        if (b_prime > s_prime)
            d[0] = b_prime - s_prime;
        DecompositionPart part;
        part.tag = "ray";
        part.l = 2 * i;
        part.spec = {s_prime, b_prime, std::move(d)};
        return part;
    }

}

std::vector<DecompositionPart> decompose_ray(const RatVector & r)
{
    if (!lift_membership(r))
        throw std::invalid_argument("decompose_ray: input is not in proj(C)");
    int n = static_cast<int>(r.size()) / 2 - 1;

    std::vector<DecompositionPart> parts;
    RatVector work = r;
    if (r.size() >= 2 && r[1] < r[0]) {
        DecompositionPart spike;
        spike.tag = "spike";
        spike.coefficient = r[0] - r[1];
        parts.push_back(std::move(spike));
        DecompositionPart ones;
        ones.tag = "all_ones";
        ones.coefficient = r[1];
        parts.push_back(std::move(ones));
        work[0] = r[1];
    }

    for (int l = 0; l <= 2 * n + 1; ++l)
        parts.push_back(l % 2 == 1 ? odd_part(work, (l - 1) / 2) : even_part(work, l / 2));
    return parts;
}

RatVector recompose(const std::vector<DecompositionPart> & parts, int n)
{
    RatVector special(2 * n + 2, Rat(0));
    bool have_special = false;
    std::optional<RatVector> joined;
    for (const auto & part : parts) {
        if (part.tag == "ray") {
            RatVector ray = part_ray(part, n);
            joined = joined ? cones::tropical_sum(*joined, ray) : ray;
        }
        else {
            special = add(special, part_ray(part, n));
            have_special = true;
        }
    }
    if (!joined)
        return special;
    return have_special ? cones::tropical_sum(*joined, special) : *joined;
}

RatVector symmetrize_d(const RatVector & d)
{
    int size = static_cast<int>(d.size());
    int f = -1;
    Rat total = 0;
    for (int i = 0; i < size; ++i) {
        if (d[i] < 0)
            throw std::invalid_argument("symmetrize_d: negative entry");
        if (d[i] != 0)
            f = i;
        total += d[i];
    }
    // prefix dominance is the lemma's precondition
    for (int v = 1; v < size; ++v)
        for (int u = 0; u < v; ++u) {
            Rat left = 0, right = 0;
            for (int w = 0; w <= u; ++w)
                left += d[w];
            for (int w = v - u; w <= v; ++w)
                right += d[w];
            if (left < right)
                throw std::invalid_argument("symmetrize_d: prefix dominance fails");
        }
    if (f <= 0)
        return d;

    int t = 0;
    Rat prefix = 0;
    for (int i = 0; i <= f; ++i) {
        prefix += d[i];
        if (2 * prefix >= total) {
            t = i;
            break;
        }
    }
    if (2 * t > f)
        throw std::logic_error("symmetrize_d: pivot past the midpoint");

    RatVector out(size, Rat(0));
    Rat head = 0;
    for (int w = 0; w < t; ++w) {
        out[w] = d[w];
        out[f - w] = d[w];
        head += d[w];
    }
    Rat remainder = total - 2 * head;
    if (t == f - t)
        out[t] = remainder;
    else {
        out[t] = std::min(d[t], remainder);
        out[f - t] = remainder - out[t];
    }
    return out;
}

RatVector truncate_d(const RatVector & d)
{
    RatVector out = d;
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i)
        if (out[i] != 0) {
            out[i] = 0;
            break;
        }
    return out;
}

bool counts_positive(const BinomialInequality & ineq, const std::vector<BigInt> & path_counts)
{
    auto positive = [&](const std::map<int, Rat> & side) {
        for (const auto & [k, e] : side) {
            if (k >= static_cast<int>(path_counts.size()))
                throw std::invalid_argument("counts_positive: counts vector too short");
            if (path_counts[k] <= 0)
                return false;
        }
        return true;
    };
    return positive(ineq.lhs) && positive(ineq.rhs);
}

int evaluate_exact(const BinomialInequality & ineq, const std::vector<BigInt> & path_counts)
{
    if (!counts_positive(ineq, path_counts))
        throw std::invalid_argument("evaluate_exact: zero count involved");
    BigInt denominator_lcm = 1;
    for (const auto & side : {ineq.lhs, ineq.rhs})
        for (const auto & [k, e] : side)
            mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    auto product = [&](const std::map<int, Rat> & side) {
        BigInt out = 1;
        for (const auto & [k, e] : side) {
            BigInt scaled = e.get_num() * (denominator_lcm / e.get_den());
            out *= big_pow(path_counts[k], mpz_get_ui(scaled.get_mpz_t()));
        }
        return out;
    };
    BigInt left = product(ineq.lhs), right = product(ineq.rhs);
    return left < right ? -1 : (left == right ? 0 : 1);
}

bool row_holds_exactly(const RatVector & row, const std::vector<BigInt> & counts)
{
    BinomialInequality ineq;
    for (int i = 0; i < static_cast<int>(row.size()); ++i) {
        if (row[i] > 0)
            ineq.lhs[i] = row[i];
        else if (row[i] < 0)
            ineq.rhs[i] = -row[i];
    }
    if (ineq.lhs.empty() && ineq.rhs.empty())
        return true;
    return evaluate_exact(ineq, counts) >= 0;
}

std::string check_result_to_json(const CheckResult & result)
{
    nlohmann::json j;
    j["semantics"] = "positive-profile";
    j["n"] = result.n;
    if (result.valid) {
        j["status"] = "valid";
        j["certificate"] = nlohmann::json::array();
        for (const auto & [label, coeff] : result.certificate.terms) {
            nlohmann::json term;
            term["generator"] = label;
            term["coeff"] = rat_to_string(coeff);
            j["certificate"].push_back(std::move(term));
        }
    }
    else {
        j["status"] = "invalid";
        j["ray"] = nlohmann::json::array();
        for (const auto & x : result.ray)
            j["ray"].push_back(rat_to_string(x));
        if (result.witness) {
            nlohmann::json g;
            g["vertex_count"] = result.witness->vertex_count();
            g["edges"] = nlohmann::json::array();
            for (auto [u, v] : result.witness->edges())
                g["edges"].push_back(nlohmann::json::array({u, v}));
            j["witness_graph"] = std::move(g);
        }
        else
            j["witness_graph"] = nullptr;
    }
    return j.dump();
}

}
