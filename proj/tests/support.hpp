#pragma once

// Small graph builders and brute-force oracles shared by the test binaries.

#include "apud/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace apud::test {

inline auto path_graph(int n) -> Graph
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline auto complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

// Every permutation of the pattern preserving adjacency.
inline auto brute_automorphisms(const Graph & p) -> std::vector<std::vector<int>>
{
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> result;
    do {
        bool ok = true;
        for (int u = 0; u < p.size() && ok; ++u)
            for (int v = u + 1; v < p.size() && ok; ++v)
                ok = p.adjacent(u, v) == p.adjacent(perm[u], perm[v]);
        if (ok)
            result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// Occurrence keys (sorted host images per automorphism orbit), found by
// trying every vertex subset and every bijection onto it.
inline auto brute_occurrence_keys(const Graph & host, const Graph & pattern) -> std::set<std::vector<std::vector<int>>>
{
    const int k = pattern.size(), n = host.size();
    // The automorphisms form a group, so the orbit of v is {a[v]}.
    std::vector<int> orbit(k);
    std::iota(orbit.begin(), orbit.end(), 0);
    for (const auto & a : brute_automorphisms(pattern))
        for (int v = 0; v < k; ++v)
            orbit[v] = std::min(orbit[v], a[v]);

    std::set<std::vector<std::vector<int>>> keys;
    if (k > n)
        return keys;
    std::vector<char> choose(n, 0);
    std::fill(choose.begin(), choose.begin() + k, 1);
    do {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (choose[i])
                subset.push_back(i);
        std::vector<int> image = subset;
        do {
            bool ok = true;
            for (int u = 0; u < k && ok; ++u)
                for (int v = u + 1; v < k && ok; ++v)
                    ok = pattern.adjacent(u, v) == host.adjacent(image[u], image[v]);
            if (! ok)
                continue;
            std::map<int, std::vector<int>> by_orbit;
            for (int v = 0; v < k; ++v)
                by_orbit[orbit[v]].push_back(image[v]);
            std::vector<std::vector<int>> key;
            for (auto & [id, images] : by_orbit) {
                std::sort(images.begin(), images.end());
                key.push_back(images);
            }
            keys.insert(key);
        } while (std::next_permutation(image.begin(), image.end()));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return keys;
}

// Canonical adjacency code: lexicographically largest upper-triangle bit
// string over all vertex orders.
inline auto canonical_code(const Graph & g) -> std::vector<bool>
{
    const int n = g.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Only orders sorted by degree need to be tried.
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i)
        cls[i] = g.degree(perm[i]);

    std::vector<bool> best;
    std::function<void(int)> permute_class = [&](int start) {
        if (start == n) {
            std::vector<bool> code;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    code.push_back(g.adjacent(perm[i], perm[j]));
            if (code > best)
                best = code;
            return;
        }
        int end = start;
        while (end < n && cls[end] == cls[start])
            ++end;
        std::sort(perm.begin() + start, perm.begin() + end);
        do
            permute_class(end);
        while (std::next_permutation(perm.begin() + start, perm.begin() + end));
    };
    permute_class(0);
    return best;
}

// Connected graphs on n vertices up to isomorphism. Each comes from one on
// n - 1 vertices plus a vertex joined to a non-empty subset, since deleting a
// non-cut vertex keeps a graph connected.
inline auto connected_graphs(int n) -> std::vector<Graph>
{
    if (n == 1)
        return { Graph(1) };
    std::map<std::vector<bool>, Graph> unique;
    for (const auto & smaller : connected_graphs(n - 1))
        for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
            Graph g = smaller;
            int v = g.add_vertex();
            for (int u = 0; u < n - 1; ++u)
                if (mask >> u & 1)
                    g.add_edge(u, v);
            unique.try_emplace(canonical_code(g), g);
        }
    std::vector<Graph> result;
    for (auto & [code, g] : unique)
        result.push_back(std::move(g));
    return result;
}

}
