#include "apud/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace apud {

Graph::Graph(int n)
{
    if (n < 0)
        throw RejectedInput("negative vertex count");
    _adj.resize(n);
}

auto Graph::from_edges(int n, const std::vector<Edge> & edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        if (! g.add_edge(u, v))
            throw RejectedInput("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    return g;
}

auto Graph::check_vertex(int v) const -> void
{
    if (v < 0 || v >= size())
        throw RejectedInput("vertex " + std::to_string(v) + " out of range [0," + std::to_string(size()) + ")");
}

auto Graph::add_vertex() -> int
{
    _adj.emplace_back();
    return size() - 1;
}

auto Graph::add_edge(int u, int v) -> bool
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw RejectedInput("self-loop at vertex " + std::to_string(u));
    auto & nu = _adj[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return false;
    nu.insert(it, v);
    auto & nv = _adj[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++_edge_count;
    return true;
}

auto Graph::adjacent(int u, int v) const -> bool
{
    const auto & nu = _adj.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_edge_count);
    for (int u = 0; u < size(); ++u)
        for (int v : _adj[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::induced(const std::vector<int> & keep) const -> Graph
{
    std::vector<int> position(size(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        check_vertex(keep[i]);
        position[keep[i]] = i;
    }
    Graph result(static_cast<int>(keep.size()));
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int w : _adj[keep[i]])
            if (position[w] > i)
                result.add_edge(i, position[w]);
    return result;
}

auto Graph::without(const std::vector<int> & drop) const -> Graph
{
    std::vector<bool> dropped(size(), false);
    for (int v : drop) {
        check_vertex(v);
        dropped[v] = true;
    }
    std::vector<int> keep;
    for (int v = 0; v < size(); ++v)
        if (! dropped[v])
            keep.push_back(v);
    return induced(keep);
}

auto Graph::disjoint_union(const Graph & other) const -> Graph
{
    Graph result = *this;
    int offset = size();
    for (int i = 0; i < other.size(); ++i)
        result.add_vertex();
    for (auto [u, v] : other.edges())
        result.add_edge(u + offset, v + offset);
    return result;
}

auto Graph::is_connected() const -> bool
{
    if (size() == 0)
        return true;
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{ 0 };
    seen[0] = true;
    int count = 1;
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : _adj[v])
            if (! seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == size();
}

auto PatternKind::name() const -> std::string
{
    switch (family) {
    case PatternFamily::Cycle: return "C" + std::to_string(size);
    case PatternFamily::Star: return "K1," + std::to_string(size);
    case PatternFamily::Sunlet: return "I" + std::to_string(size);
    case PatternFamily::Sun: return "S" + std::to_string(size);
    case PatternFamily::Claw: return "claw";
    case PatternFamily::Net: return "net";
    case PatternFamily::Diamond: return "diamond";
    }
    return "?";
}

auto parse_pattern_kind(const std::string & text) -> PatternKind
{
    std::string t;
    for (char c : text)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    if (t == "claw")
        return claw();
    if (t == "net")
        return net();
    if (t == "diamond")
        return diamond();

    auto number_after = [&](std::size_t prefix) -> int {
        auto rest = t.substr(prefix);
        if (rest.empty() || ! std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw RejectedInput("unknown pattern '" + text + "'");
        return std::stoi(rest);
    };

    if (t.rfind("k1,", 0) == 0)
        return star(number_after(3));
    if (t.rfind("star", 0) == 0)
        return star(number_after(4));
    if (t.rfind("cycle", 0) == 0)
        return cycle(number_after(5));
    if (t.rfind("sunlet", 0) == 0)
        return sunlet(number_after(6));
    if (t.rfind("sun", 0) == 0)
        return sun(number_after(3));
    if (t.rfind("c", 0) == 0)
        return cycle(number_after(1));
    if (t.rfind("s", 0) == 0)
        return sun(number_after(1));
    if (t.rfind("i", 0) == 0)
        return sunlet(number_after(1));
    throw RejectedInput("unknown pattern '" + text + "'");
}

auto make_pattern(PatternKind kind) -> Graph
{
    auto require = [&](int minimum) {
        if (kind.size < minimum)
            throw RejectedInput("pattern " + kind.name() + " needs size >= " + std::to_string(minimum));
    };

    const int m = kind.size;
    switch (kind.family) {
    case PatternFamily::Cycle: {
        require(3);
        Graph g(m);
        for (int i = 0; i < m; ++i)
            g.add_edge(i, (i + 1) % m);
        return g;
    }
    case PatternFamily::Star: {
        require(1);
        Graph g(m + 1);
        for (int i = 1; i <= m; ++i)
            g.add_edge(0, i);
        return g;
    }
    case PatternFamily::Sunlet: {
        require(3);
        Graph g(2 * m);
        for (int i = 0; i < m; ++i) {
            g.add_edge(i, (i + 1) % m);
            g.add_edge(i, m + i);
        }
        return g;
    }
    case PatternFamily::Sun: {
        require(3);
        Graph g(2 * m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                g.add_edge(i, j);
        for (int i = 0; i < m; ++i) {
            g.add_edge(m + i, i);
            g.add_edge(m + i, (i + 1) % m);
        }
        return g;
    }
    case PatternFamily::Claw:
        return make_pattern(star(3));
    case PatternFamily::Net:
        return make_pattern(sunlet(3));
    case PatternFamily::Diamond: {
        Graph g(4);
        for (int i = 0; i < 4; ++i)
            g.add_edge(i, (i + 1) % 4);
        g.add_edge(1, 3);
        return g;
    }
    }
    throw RejectedInput("unknown pattern family");
}

namespace {

    // Pattern vertices ordered so that, within each component, every vertex
    // after the first has an earlier neighbour. Components start at their
    // highest-degree vertex.
    auto search_order(const Graph & pattern) -> std::vector<int>
    {
        const int k = pattern.size();
        std::vector<int> order;
        std::vector<bool> taken(k, false);
        while (static_cast<int>(order.size()) < k) {
            int root = -1;
            for (int v = 0; v < k; ++v)
                if (! taken[v] && (root == -1 || pattern.degree(v) > pattern.degree(root)))
                    root = v;
            taken[root] = true;
            order.push_back(root);
            for (std::size_t head = order.size() - 1; head < order.size(); ++head)
                for (int w : pattern.neighbours(order[head]))
                    if (! taken[w]) {
                        taken[w] = true;
                        order.push_back(w);
                    }
        }
        return order;
    }

    struct EmbeddingSearch
    {
        const Graph & host;
        const Graph & pattern;
        const std::function<bool(const std::vector<int> &)> & visit;
        std::vector<int> order;
        std::vector<int> anchor; // earlier-mapped neighbour in `order`, or -1
        std::vector<int> mapping;
        std::vector<bool> used;

        EmbeddingSearch(const Graph & h, const Graph & p, const std::function<bool(const std::vector<int> &)> & f) :
            host(h), pattern(p), visit(f), order(search_order(p)), anchor(p.size(), -1), mapping(p.size(), -1), used(h.size(), false)
        {
            std::vector<int> pos(p.size());
            for (int i = 0; i < p.size(); ++i)
                pos[order[i]] = i;
            for (int i = 0; i < p.size(); ++i)
                for (int w : p.neighbours(order[i]))
                    if (pos[w] < i) {
                        anchor[order[i]] = w;
                        break;
                    }
        }

        auto consistent(int pv, int hv) const -> bool
        {
            if (used[hv] || host.degree(hv) < pattern.degree(pv))
                return false;
            for (int i = 0; i < pattern.size(); ++i) {
                int other = mapping[i];
                if (other < 0)
                    continue;
                if (pattern.adjacent(pv, i) != host.adjacent(hv, other))
                    return false;
            }
            return true;
        }

        auto run(std::size_t depth) -> bool
        {
            if (depth == order.size())
                return visit(mapping);
            int pv = order[depth];
            auto try_host = [&](int hv) -> bool {
                if (! consistent(pv, hv))
                    return true;
                mapping[pv] = hv;
                used[hv] = true;
                bool keep_going = run(depth + 1);
                used[hv] = false;
                mapping[pv] = -1;
                return keep_going;
            };
            if (anchor[pv] >= 0) {
                for (int hv : host.neighbours(mapping[anchor[pv]]))
                    if (! try_host(hv))
                        return false;
            }
            else {
                for (int hv = 0; hv < host.size(); ++hv)
                    if (! try_host(hv))
                        return false;
            }
            return true;
        }
    };

    auto automorphism_orbits(const Graph & pattern) -> std::vector<int>
    {
        std::vector<int> orbit(pattern.size());
        std::iota(orbit.begin(), orbit.end(), 0);
        auto find = [&](int v) {
            while (orbit[v] != v)
                v = orbit[v] = orbit[orbit[v]];
            return v;
        };
        for_each_induced_embedding(pattern, pattern, [&](const std::vector<int> & image) {
            for (int v = 0; v < pattern.size(); ++v) {
                int a = find(v), b = find(image[v]);
                if (a != b)
                    orbit[std::max(a, b)] = std::min(a, b);
            }
            return true;
        });
        for (int v = 0; v < pattern.size(); ++v)
            orbit[v] = find(v);
        return orbit;
    }

}

auto for_each_induced_embedding(const Graph & host, const Graph & pattern,
    const std::function<bool(const std::vector<int> &)> & visit) -> bool
{
    if (pattern.size() > host.size())
        return true;
    if (pattern.size() == 0)
        return visit({});
    EmbeddingSearch search(host, pattern, visit);
    return search.run(0);
}

auto find_induced(const Graph & host, const Graph & pattern, PatternKind kind) -> std::vector<Occurrence>
{
    auto orbit = automorphism_orbits(pattern);
    std::vector<int> orbit_ids = orbit;
    std::sort(orbit_ids.begin(), orbit_ids.end());
    orbit_ids.erase(std::unique(orbit_ids.begin(), orbit_ids.end()), orbit_ids.end());

    std::map<std::vector<std::vector<int>>, std::vector<int>> unique;
    for_each_induced_embedding(host, pattern, [&](const std::vector<int> & mapping) {
        std::vector<std::vector<int>> key;
        for (int id : orbit_ids) {
            std::vector<int> images;
            for (int v = 0; v < pattern.size(); ++v)
                if (orbit[v] == id)
                    images.push_back(mapping[v]);
            std::sort(images.begin(), images.end());
            key.push_back(std::move(images));
        }
        unique.try_emplace(std::move(key), mapping);
        return true;
    });

    std::vector<Occurrence> result;
    result.reserve(unique.size());
    for (auto & [key, mapping] : unique)
        result.push_back(Occurrence{ kind, mapping });
    std::sort(result.begin(), result.end(), [](const Occurrence & a, const Occurrence & b) { return a.vertices < b.vertices; });
    return result;
}

auto find_induced(const Graph & host, PatternKind kind) -> std::vector<Occurrence>
{
    return find_induced(host, make_pattern(kind), kind);
}

auto contains_induced(const Graph & host, const Graph & pattern) -> bool
{
    return ! for_each_induced_embedding(host, pattern, [](const std::vector<int> &) { return false; });
}

auto is_induced_free(const Graph & host, const std::vector<Graph> & patterns) -> bool
{
    return std::none_of(patterns.begin(), patterns.end(), [&](const Graph & p) { return contains_induced(host, p); });
}

auto biconnected_blocks(const Graph & g) -> std::vector<std::vector<int>>
{
    const int n = g.size();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    struct Frame
    {
        int v, parent;
        std::size_t next;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        disc[root] = low[root] = timer++;
        std::vector<Frame> stack{ { root, -1, 0 } };
        while (! stack.empty()) {
            auto & f = stack.back();
            const auto & nbrs = g.neighbours(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({ w, f.v, 0 });
                }
                else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty())
                break;
            auto & up = stack.back();
            low[up.v] = std::min(low[up.v], low[done.v]);
            if (low[done.v] >= disc[up.v]) {
                std::set<int> block;
                while (! edge_stack.empty()) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block.insert(e.first);
                    block.insert(e.second);
                    if (e == Edge{ up.v, done.v })
                        break;
                }
                blocks.emplace_back(block.begin(), block.end());
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

namespace {

    // Is there a simple cycle through `start` with more than `limit` vertices,
    // using only vertices > start inside `allowed`?
    auto long_cycle_from(const Graph & g, int start, int limit, const std::vector<bool> & allowed) -> bool
    {
        std::vector<bool> on_path(g.size(), false);
        on_path[start] = true;
        std::function<bool(int, int)> extend = [&](int v, int length) -> bool {
            if (length > limit && length >= 3 && g.adjacent(v, start))
                return true;
            for (int w : g.neighbours(v)) {
                if (w <= start || ! allowed[w] || on_path[w])
                    continue;
                on_path[w] = true;
                bool found = extend(w, length + 1);
                on_path[w] = false;
                if (found)
                    return true;
            }
            return false;
        };
        return extend(start, 1);
    }

}

auto longest_cycle_at_most(const Graph & g, int limit) -> bool
{
    std::vector<bool> allowed(g.size(), false);
    for (const auto & block : biconnected_blocks(g)) {
        if (static_cast<int>(block.size()) <= limit || block.size() < 3)
            continue;
        for (int v : block)
            allowed[v] = true;
        bool found = false;
        for (int v : block)
            if (long_cycle_from(g, v, limit, allowed)) {
                found = true;
                break;
            }
        for (int v : block)
            allowed[v] = false;
        if (found)
            return false;
    }
    return true;
}

}
