#include <homtrop/graphs.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace homtrop::graphs {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) :
    n_(vertex_count)
{
    if (n_ < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n_);
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("Graph: duplicate edge");
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
        matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto & nb : adj_)
        std::sort(nb.begin(), nb.end());
}

namespace {

    // Pattern vertices get placed in an order where each vertex touches an
    // already-placed one whenever its component allows, so candidate sets
    // stay small. The tail of pattern vertices whose neighbours are all
    // placed and which are pairwise nonadjacent is counted in bulk.
    struct HomSearch {
        const Graph & pattern;
        const Graph & target;
        std::vector<int> order;
        std::vector<std::vector<int>> placed_neighbours; // per order position
        std::vector<int> assignment;
        BigInt total = 0;

        HomSearch(const Graph & p, const Graph & t) : pattern(p), target(t)
        {
            int n = pattern.vertex_count();
            std::vector<char> used(n, 0);
            // prefer high-degree starts, then grow by adjacency
            std::vector<int> by_degree(n);
            std::iota(by_degree.begin(), by_degree.end(), 0);
            std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
                return pattern.degree(a) > pattern.degree(b);
            });
            for (int seed : by_degree) {
                if (used[seed])
                    continue;
                order.push_back(seed);
                used[seed] = 1;
                for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
                    // greedily append the unused vertex with most placed neighbours
                    while (true) {
                        int best = -1, best_links = 0;
                        for (int v = 0; v < n; ++v) {
                            if (used[v])
                                continue;
                            int links = 0;
                            for (int w : pattern.adjacency()[v])
                                if (used[w])
                                    ++links;
                            if (links > best_links || (links == best_links && links > 0 && best == -1)) {
                                best = v;
                                best_links = links;
                            }
                        }
                        if (best == -1 || best_links == 0)
                            break;
                        order.push_back(best);
                        used[best] = 1;
                    }
                    break;
                }
            }
            for (int v = 0; v < n; ++v)
                if (!used[v])
                    order.push_back(v);

            placed_neighbours.resize(n);
            std::vector<int> position(n, -1);
            for (int i = 0; i < n; ++i)
                position[order[i]] = i;
            for (int i = 0; i < n; ++i)
                for (int w : pattern.adjacency()[order[i]])
                    if (position[w] < i)
                        placed_neighbours[i].push_back(w);
            assignment.assign(n, -1);
        }

        // True if all pattern vertices from position i on are pairwise
        // nonadjacent and have every neighbour already placed.
        bool independent_tail(std::size_t i) const
        {
            for (std::size_t j = i; j < order.size(); ++j)
                if (placed_neighbours[j].size() != pattern.adjacency()[order[j]].size())
                    return false;
            return true;
        }

        BigInt count_candidates(std::size_t i) const
        {
            const auto & req = placed_neighbours[i];
            if (req.empty())
                return target.vertex_count();
            long cnt = 0;
            for (int cand : target.adjacency()[assignment[req[0]]]) {
                bool ok = true;
                for (std::size_t k = 1; k < req.size(); ++k)
                    if (!target.has_edge(cand, assignment[req[k]])) {
                        ok = false;
                        break;
                    }
                if (ok)
                    ++cnt;
            }
            return cnt;
        }

        void run(std::size_t i)
        {
            if (i == order.size()) {
                total += 1;
                return;
            }
            if (independent_tail(i)) {
                BigInt prod = 1;
                for (std::size_t j = i; j < order.size() && prod != 0; ++j)
                    prod *= count_candidates(j);
                total += prod;
                return;
            }
            const auto & req = placed_neighbours[i];
            if (req.empty()) {
                for (int cand = 0; cand < target.vertex_count(); ++cand) {
                    assignment[order[i]] = cand;
                    run(i + 1);
                }
            }
            else {
                for (int cand : target.adjacency()[assignment[req[0]]]) {
                    bool ok = true;
                    for (std::size_t k = 1; k < req.size(); ++k)
                        if (!target.has_edge(cand, assignment[req[k]])) {
                            ok = false;
                            break;
                        }
                    if (!ok)
                        continue;
                    assignment[order[i]] = cand;
                    run(i + 1);
                }
            }
            assignment[order[i]] = -1;
        }
    };

}

BigInt hom_count(const Graph & pattern, const Graph & target, int max_pattern_vertices)
{
    if (pattern.vertex_count() < 1)
        throw std::invalid_argument("hom_count: pattern must have at least one vertex");
    if (pattern.vertex_count() > max_pattern_vertices)
        throw ResourceLimitError("hom_count: pattern exceeds vertex bound");
    if (target.vertex_count() == 0)
        return 0;
    HomSearch search(pattern, target);
    search.run(0);
    return search.total;
}

HomCountVector path_hom_vector(const Graph & target, int max_len)
{
    if (max_len < 0)
        throw std::invalid_argument("path_hom_vector: negative length");
    HomCountVector out;
    out.counts.reserve(max_len + 1);
    std::vector<BigInt> vec(target.vertex_count(), 1);
    BigInt sum = target.vertex_count();
    out.counts.push_back(sum);
    for (int k = 1; k <= max_len; ++k) {
        std::vector<BigInt> next(target.vertex_count(), 0);
        for (auto [u, v] : target.edges()) {
            next[u] += vec[v];
            next[v] += vec[u];
        }
        sum = 0;
        for (const auto & x : next)
            sum += x;
        out.counts.push_back(sum);
        vec = std::move(next);
    }
    return out;
}

BigInt cycle_hom(const Graph & target, int k)
{
    if (k < 3)
        throw std::invalid_argument("cycle_hom: cycle length must be >= 3");
    BigInt trace = 0;
    int n = target.vertex_count();
    for (int s = 0; s < n; ++s) {
        std::vector<BigInt> vec(n, 0);
        vec[s] = 1;
        for (int step = 0; step < k; ++step) {
            std::vector<BigInt> next(n, 0);
            for (auto [u, v] : target.edges()) {
                next[u] += vec[v];
                next[v] += vec[u];
            }
            vec = std::move(next);
        }
        trace += vec[s];
    }
    return trace;
}

BigInt star_hom(const Graph & target, int k)
{
    if (k < 0)
        throw std::invalid_argument("star_hom: negative branch count");
    BigInt out = 0;
    for (int v = 0; v < target.vertex_count(); ++v)
        out += big_pow(target.degree(v), k); // 0^0 = 1
    return out;
}

namespace {

    void clique_extend(const Graph & g, std::vector<int> & clique, int depth, int p,
        const std::vector<int> & candidates, BigInt & unordered)
    {
        if (depth == p) {
            unordered += 1;
            return;
        }
        for (int v : candidates) {
            std::vector<int> next;
            for (int w : candidates)
                if (w > v && g.has_edge(v, w))
                    next.push_back(w);
            clique.push_back(v);
            clique_extend(g, clique, depth + 1, p, next, unordered);
            clique.pop_back();
        }
    }

}

BigInt clique_hom(const Graph & target, int p, int max_clique_size)
{
    if (p < 1)
        throw std::invalid_argument("clique_hom: p must be >= 1");
    if (p > max_clique_size)
        throw ResourceLimitError("clique_hom: clique size exceeds bound");
    if (p == 1)
        return target.vertex_count();
    std::vector<int> all(target.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    BigInt unordered = 0;
    std::vector<int> clique;
    clique_extend(target, clique, 0, p, all, unordered);
    BigInt factorial = 1;
    for (int i = 2; i <= p; ++i)
        factorial *= i;
    return unordered * factorial;
}

Graph tensor_product(const Graph & g1, const Graph & g2, int max_vertices)
{
    long long prod = static_cast<long long>(g1.vertex_count()) * g2.vertex_count();
    if (prod > max_vertices)
        throw ResourceLimitError("tensor_product: vertex count exceeds bound");
    int n2 = g2.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g1.edges())
        for (auto [c, d] : g2.edges()) {
            edges.emplace_back(a * n2 + c, b * n2 + d);
            edges.emplace_back(a * n2 + d, b * n2 + c);
        }
    return Graph(static_cast<int>(prod), std::move(edges));
}

Graph disjoint_union(const Graph & g1, const Graph & g2)
{
    int shift = g1.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph(shift + g2.vertex_count(), std::move(edges));
}

Graph make_named(Family family, const std::vector<int> & params)
{
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("make_named: wrong parameter count");
    };
    switch (family) {
    case Family::Complete: {
        need(1);
        int m = params[0];
        if (m < 1)
            throw std::invalid_argument("make_named: complete graph needs m >= 1");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                edges.emplace_back(u, v);
        return Graph(m, std::move(edges));
    }
    case Family::Cycle: {
        need(1);
        int k = params[0];
        if (k < 3)
            throw std::invalid_argument("make_named: cycle length must be >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < k; ++u)
            edges.emplace_back(u, (u + 1) % k);
        return Graph(k, std::move(edges));
    }
    case Family::Path: {
        need(1);
        int k = params[0];
        if (k < 0)
            throw std::invalid_argument("make_named: path length must be >= 0");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < k; ++u)
            edges.emplace_back(u, u + 1);
        return Graph(k + 1, std::move(edges));
    }
    case Family::Star: {
        need(1);
        int k = params[0];
        if (k < 0)
            throw std::invalid_argument("make_named: star branch count must be >= 0");
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= k; ++u)
            edges.emplace_back(0, u);
        return Graph(k + 1, std::move(edges));
    }
    case Family::CompleteBipartite: {
        need(2);
        int a = params[0], b = params[1];
        if (a < 1 || b < 1)
            throw std::invalid_argument("make_named: complete bipartite needs positive parts");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                edges.emplace_back(u, a + v);
        return Graph(a + b, std::move(edges));
    }
    case Family::Turan: {
        need(2);
        int n = params[0], parts = params[1];
        if (n < 1 || parts < 1 || parts > n)
            throw std::invalid_argument("make_named: bad Turan parameters");
        std::vector<int> part_of(n);
        for (int v = 0; v < n; ++v)
            part_of[v] = v % parts;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part_of[u] != part_of[v])
                    edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }
    }
    throw std::invalid_argument("make_named: unknown family");
}

Graph make_named(const std::string & selector)
{
    auto colon = selector.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("make_named: selector needs family:params");
    std::string name = selector.substr(0, colon);
    std::vector<int> params;
    std::stringstream ss(selector.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ','))
        params.push_back(std::stoi(tok));
    static const std::map<std::string, Family> names = {
        {"complete", Family::Complete}, {"cycle", Family::Cycle}, {"path", Family::Path},
        {"star", Family::Star}, {"complete_bipartite", Family::CompleteBipartite},
        {"turan", Family::Turan}};
    auto it = names.find(name);
    if (it == names.end())
        throw std::invalid_argument("make_named: unknown family " + name);
    return make_named(it->second, params);
}

Graph parse_graph(std::istream & in)
{
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::stringstream ss(line);
        if (n < 0) {
            if (ss >> n) {
                if (n < 0)
                    throw std::invalid_argument("parse_graph: negative vertex count");
                int extra;
                if (ss >> extra)
                    throw std::invalid_argument("parse_graph: trailing data on header line");
            }
            continue;
        }
        int u, v;
        if (!(ss >> u))
            continue;
        if (!(ss >> v))
            throw std::invalid_argument("parse_graph: edge line needs two endpoints");
        if (!(u < v))
            throw std::invalid_argument("parse_graph: edges must satisfy u < v");
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw std::invalid_argument("parse_graph: missing vertex count");
    return Graph(n, std::move(edges));
}

Graph parse_graph_text(const std::string & text)
{
    std::stringstream ss(text);
    return parse_graph(ss);
}

std::string graph_to_text(const Graph & g)
{
    std::stringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
    return out.str();
}

namespace {

    using EdgeMask = std::uint32_t;

    std::vector<std::pair<int, int>> edge_slots(int n)
    {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots.emplace_back(u, v);
        return slots;
    }

    EdgeMask apply_permutation(EdgeMask mask, const std::vector<int> & perm,
        const std::vector<std::pair<int, int>> & slots,
        const std::vector<std::vector<int>> & slot_index)
    {
        EdgeMask out = 0;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (!(mask & (EdgeMask(1) << s)))
                continue;
            int u = perm[slots[s].first], v = perm[slots[s].second];
            if (u > v)
                std::swap(u, v);
            out |= EdgeMask(1) << slot_index[u][v];
        }
        return out;
    }

    EdgeMask canonical_mask(EdgeMask mask, int n, const std::vector<std::pair<int, int>> & slots,
        const std::vector<std::vector<int>> & slot_index,
        const std::vector<std::vector<int>> & permutations)
    {
        EdgeMask best = mask;
        for (const auto & perm : permutations) {
            EdgeMask img = apply_permutation(mask, perm, slots, slot_index);
            if (img < best)
                best = img;
        }
        (void)n;
        return best;
    }

}

const std::vector<Graph> & all_graphs(int n, bool allow_large)
{
    if (n < 0 || n > 7 || (n == 7 && !allow_large))
        throw ResourceLimitError("all_graphs: vertex count out of supported range");
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty())
        cache.emplace(0, std::vector<Graph>{Graph(0, {})});
    if (auto it = cache.find(n); it != cache.end())
        return it->second;

    // Every n-vertex graph restricts to some (n-1)-vertex graph, so extending
    // each smaller graph by one vertex with every possible neighbourhood and
    // canonicalising covers all isomorphism classes.
    for (int k = 1; k <= n; ++k) {
        if (cache.count(k))
            continue;
        auto slots = edge_slots(k);
        std::vector<std::vector<int>> slot_index(k, std::vector<int>(k, -1));
        for (std::size_t s = 0; s < slots.size(); ++s)
            slot_index[slots[s].first][slots[s].second] = static_cast<int>(s);
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> permutations;
        do
            permutations.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::set<EdgeMask> canon;
        for (const Graph & base : cache.at(k - 1)) {
            EdgeMask base_mask = 0;
            for (auto [u, v] : base.edges())
                base_mask |= EdgeMask(1) << slot_index[u][v];
            for (EdgeMask nb = 0; nb < (EdgeMask(1) << (k - 1)); ++nb) {
                EdgeMask mask = base_mask;
                for (int u = 0; u < k - 1; ++u)
                    if (nb & (EdgeMask(1) << u))
                        mask |= EdgeMask(1) << slot_index[u][k - 1];
                canon.insert(canonical_mask(mask, k, slots, slot_index, permutations));
            }
        }
        std::vector<Graph> level;
        for (EdgeMask mask : canon) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask & (EdgeMask(1) << s))
                    edges.push_back(slots[s]);
            level.emplace_back(k, std::move(edges));
        }
        cache.emplace(k, std::move(level));
    }
    return cache.at(n);
}

bool connected(const Graph & g)
{
    if (g.vertex_count() == 0)
        return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : g.adjacency()[queue[head]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}
