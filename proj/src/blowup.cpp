#include <homtrop/blowup.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace homtrop::blowup {

namespace {

    Rat d_at(const RatVector & d, int i)
    {
        return (i >= 0 && i < static_cast<int>(d.size())) ? d[i] : Rat(0);
    }

    Rat prefix_sum(const RatVector & d, int upto)
    {
        Rat s = 0;
        for (int i = 0; i <= upto && i < static_cast<int>(d.size()); ++i)
            s += d[i];
        return s;
    }

}

int BlowUpSpec::pivot_index() const
{
    int t = 0;
    for (int i = 0; 2 * i <= f; ++i)
        if (d_at(d, i) > 0)
            t = i;
    return t;
}

void BlowUpSpec::validate() const
{
    if (f < 0)
        throw SpecError("blow-up spec: negative f");
    for (int i = f + 1; i < static_cast<int>(d.size()); ++i)
        if (d[i] != 0)
            throw SpecError("blow-up spec: d nonzero past f");
    for (const auto & x : d)
        if (x < 0)
            throw SpecError("blow-up spec: negative d entry");
    if (s < 0 || b < s)
        throw SpecError("blow-up spec: needs b >= s >= 0");
    if (d_at(d, 0) != b - s)
        throw SpecError("blow-up spec: d_0 must equal b - s");
    for (int v = 1; v <= f; ++v)
        for (int u = 0; u < v; ++u) {
            Rat left = prefix_sum(d, u);
            Rat right = 0;
            for (int w = v - u; w <= v; ++w)
                right += d_at(d, w);
            if (left < right)
                throw SpecError("blow-up spec: prefix dominance fails");
        }
    int t = pivot_index();
    for (int u = 0; u < t; ++u)
        if (d_at(d, u) != d_at(d, f - u))
            throw SpecError("blow-up spec: near-symmetry fails");
    for (int u = t + 1; u <= f - t - 1; ++u)
        if (d_at(d, u) != 0)
            throw SpecError("blow-up spec: middle of d must vanish");
    if (d_at(d, t) < d_at(d, f - t))
        throw SpecError("blow-up spec: d_t must dominate d_{f-t}");
    Rat tail = prefix_sum(d, f) - d_at(d, 0);
    if (2 * tail > s)
        throw SpecError("blow-up spec: 2 * sum of d past index 0 must stay below s");
    if (t == 0 && s < d_at(d, 0))
        throw SpecError("blow-up spec: s >= d_0 required when the pivot is 0");
}

BlowUpSpec make_spec(Rat b, Rat s, RatVector d)
{
    BlowUpSpec spec;
    spec.b = std::move(b);
    spec.s = std::move(s);
    spec.d = std::move(d);
    spec.f = 0;
    for (int i = 0; i < static_cast<int>(spec.d.size()); ++i)
        if (spec.d[i] != 0)
            spec.f = i;
    spec.validate();
    return spec;
}

BlowUpSpec parse_spec(const std::string & text)
{
    Rat b, s;
    RatVector d;
    bool got_b = false, got_s = false;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw SpecError("blow-up spec text: expected key=value, got " + tok);
        std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "b") {
            b = rat_from_string(value);
            got_b = true;
        }
        else if (key == "s") {
            s = rat_from_string(value);
            got_s = true;
        }
        else if (key == "d") {
            std::stringstream ds(value);
            std::string item;
            while (std::getline(ds, item, ','))
                d.push_back(rat_from_string(item));
        }
        else
            throw SpecError("blow-up spec text: unknown key " + key);
    }
    if (!got_b || !got_s || d.empty())
        throw SpecError("blow-up spec text: b, s and d are all required");
    return make_spec(b, s, d);
}

std::string spec_to_text(const BlowUpSpec & spec)
{
    std::stringstream out;
    out << "b=" << rat_to_string(spec.b) << " s=" << rat_to_string(spec.s) << " d=";
    for (int i = 0; i <= spec.f; ++i)
        out << (i ? "," : "") << rat_to_string(d_at(spec.d, i));
    return out.str();
}

WeightedPath weight_function(const BlowUpSpec & spec)
{
    spec.validate();
    int f = spec.f;
    const RatVector & d = spec.d;
    int t = spec.pivot_index();

    WeightedPath p;
    p.edge_count = 2 * f + 1;
    p.vertex_weights.assign(2 * f + 2, Rat(0));
    p.edge_weights.assign(2 * f + 1, Rat(0));

    // left half vertices, then mirrored; for f = 0 the p(1) = b - s rule
    // takes precedence over the mirror (the limit theorem depends on it)
    for (int v = 0; v <= f; ++v) {
        if (v == 0)
            p.vertex_weights[v] = spec.b;
        else if (v % 2 == 1)
            p.vertex_weights[v] = d_at(d, 0) + 2 * (prefix_sum(d, (v - 1) / 2) - d_at(d, 0));
        else
            p.vertex_weights[v] = spec.s - d_at(d, 0) - 2 * (prefix_sum(d, v / 2 - 1) - d_at(d, 0));
    }
    for (int v = 0; v <= f; ++v)
        p.vertex_weights[2 * f + 1 - v] = p.vertex_weights[v];
    if (f == 0)
        p.vertex_weights[1] = d_at(d, 0);

    // left-half edges: even left endpoints carry s + d, odd ones carry s
    for (int e = 0; e < f; ++e)
        p.edge_weights[e] = (e % 2 == 0) ? spec.s + d_at(d, e / 2) : spec.s;
    if (f % 2 == 0)
        p.edge_weights[f] = spec.s + d_at(d, f / 2) - d_at(d, t) + d_at(d, f - t);
    else
        p.edge_weights[f] = p.vertex_weights[f] + p.vertex_weights[f + 1] - d_at(d, t) + d_at(d, f - t);
    for (int e = f + 1; e <= 2 * f; ++e)
        p.edge_weights[e] = p.edge_weights[2 * f - e];

    for (const auto & w : p.vertex_weights)
        if (w < 0)
            throw SpecError("weight_function: negative vertex weight");
    for (int e = 0; e <= 2 * f; ++e) {
        Rat lo = std::max(p.vertex_weights[e], p.vertex_weights[e + 1]);
        Rat hi = p.vertex_weights[e] + p.vertex_weights[e + 1];
        if (p.edge_weights[e] < lo || p.edge_weights[e] > hi)
            throw SpecError("weight_function: edge weight outside admissible band");
    }
    return p;
}

Rat max_weight_hom(const WeightedPath & p, int i)
{
    if (i < 0)
        throw std::invalid_argument("max_weight_hom: negative path length");
    int verts = p.edge_count + 1;
    RatVector best = p.vertex_weights;
    for (int step = 0; step < i; ++step) {
        RatVector next(verts);
        for (int w = 0; w < verts; ++w) {
            bool seeded = false;
            Rat acc = 0;
            auto relax = [&](int from, int edge) {
                Rat cand = best[from] + p.edge_weights[edge] - p.vertex_weights[from];
                if (!seeded || cand > acc) {
                    acc = cand;
                    seeded = true;
                }
            };
            if (w > 0)
                relax(w - 1, w - 1);
            if (w < verts - 1)
                relax(w + 1, w);
            next[w] = acc;
        }
        best = std::move(next);
    }
    return *std::max_element(best.begin(), best.end());
}

RatVector limit_ray(const BlowUpSpec & spec, int n)
{
    spec.validate();
    if (n < 0)
        throw std::invalid_argument("limit_ray: negative n");
    RatVector out(2 * n + 2);
    for (int i = 0; i <= n; ++i) {
        out[2 * i] = spec.b + i * spec.s;
        out[2 * i + 1] = (i + 1) * spec.s + prefix_sum(spec.d, i);
    }
    return out;
}

namespace {

    long rounded_power(long m, const Rat & exponent)
    {
        if (exponent < 0)
            throw SpecError("build_blowup_graph: negative weight exponent");
        BigInt value = nearest_integer_power(BigInt(m), exponent.get_num(), exponent.get_den());
        if (!value.fits_slong_p())
            throw graphs::ResourceLimitError("build_blowup_graph: part size overflows");
        return value.get_si();
    }

}

graphs::Graph build_blowup_graph(const BlowUpSpec & spec, long m, long max_vertices)
{
    if (m < 2)
        throw std::invalid_argument("build_blowup_graph: m must be at least 2");
    WeightedPath p = weight_function(spec);
    int verts = p.edge_count + 1;
    std::vector<long> part_size(verts), part_offset(verts);
    long total = 0;
    for (int v = 0; v < verts; ++v) {
        part_size[v] = rounded_power(m, p.vertex_weights[v]);
        part_offset[v] = total;
        total += part_size[v];
        if (total > max_vertices)
            throw graphs::ResourceLimitError("build_blowup_graph: vertex budget exceeded");
    }

    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e <= p.edge_count - 1; ++e) {
        long a = part_size[e], b = part_size[e + 1];
        if (a == 0 || b == 0)
            continue;
        BigInt target = nearest_integer_power(BigInt(m), p.edge_weights[e].get_num(),
            p.edge_weights[e].get_den());
        long g = std::gcd(a, b);
        long lcm = a / g * b;
        // nearest multiple of lcm(a,b) within [0, a*b]; k rounds of an
        // L-cycle matching keep both sides regular and edges simple
        BigInt k_big = (target + lcm / 2) / lcm;
        long k = k_big.fits_slong_p() ? k_big.get_si() : g;
        k = std::min<long>(k, g);
        for (long r = 0; r < k; ++r)
            for (long t = 0; t < lcm; ++t)
                edges.emplace_back(static_cast<int>(part_offset[e] + t % a),
                    static_cast<int>(part_offset[e + 1] + (t + r) % b));
    }
    return graphs::Graph(static_cast<int>(total), std::move(edges));
}

}
