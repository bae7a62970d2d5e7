#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apud {

/// Thrown when an operation receives input outside its documented domain.
class RejectedInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..size()-1.
///
/// Neighbour lists are kept sorted, so edges() and neighbours() are
/// deterministic and adjacency queries are a binary search.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an edge list. Self-loops, out-of-range endpoints and
    /// duplicate edges are rejected.
    static auto from_edges(int n, const std::vector<Edge> & edges) -> Graph;

    auto add_vertex() -> int;
    /// Returns false (and changes nothing) if the edge already exists.
    auto add_edge(int u, int v) -> bool;

    [[nodiscard]] auto size() const -> int { return static_cast<int>(_adj.size()); }
    [[nodiscard]] auto edge_count() const -> int { return _edge_count; }
    [[nodiscard]] auto adjacent(int u, int v) const -> bool;
    [[nodiscard]] auto degree(int v) const -> int { return static_cast<int>(_adj.at(v).size()); }
    [[nodiscard]] auto neighbours(int v) const -> const std::vector<int> & { return _adj.at(v); }

    /// All edges as (u, v) with u < v, in lexicographic order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    /// Subgraph induced by `keep` (in the given order); vertex i of the
    /// result is keep[i].
    [[nodiscard]] auto induced(const std::vector<int> & keep) const -> Graph;
    /// Subgraph induced by all vertices not in `drop`.
    [[nodiscard]] auto without(const std::vector<int> & drop) const -> Graph;

    /// Disjoint union; vertices of `other` are shifted by size().
    [[nodiscard]] auto disjoint_union(const Graph & other) const -> Graph;

    [[nodiscard]] auto is_connected() const -> bool;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    auto check_vertex(int v) const -> void;

    std::vector<std::vector<int>> _adj;
    int _edge_count = 0;
};

enum class PatternFamily
{
    Cycle,
    Star,
    Sunlet,
    Sun,
    Claw,
    Net,
    Diamond,
};

/// A named pattern graph. `size` is m for the parametric families and is
/// ignored (normalised) for Claw, Net and Diamond.
struct PatternKind
{
    PatternFamily family;
    int size = 0;

    [[nodiscard]] auto name() const -> std::string;
    friend auto operator==(const PatternKind &, const PatternKind &) -> bool = default;
};

inline auto cycle(int m) -> PatternKind { return { PatternFamily::Cycle, m }; }
inline auto star(int m) -> PatternKind { return { PatternFamily::Star, m }; }
inline auto sunlet(int m) -> PatternKind { return { PatternFamily::Sunlet, m }; }
inline auto sun(int m) -> PatternKind { return { PatternFamily::Sun, m }; }
inline auto claw() -> PatternKind { return { PatternFamily::Claw, 3 }; }
inline auto net() -> PatternKind { return { PatternFamily::Net, 3 }; }
inline auto diamond() -> PatternKind { return { PatternFamily::Diamond, 4 }; }

/// Parses names such as "C5", "K1,4", "star4", "S3", "sun3", "I4", "claw",
/// "net", "diamond". Throws RejectedInput on anything else.
auto parse_pattern_kind(const std::string & text) -> PatternKind;

/// Canonical pattern graph. Numbering: cycle (or clique, or star centre)
/// vertices come first, rays second.
///   Cycle(m):  i ~ i+1 mod m
///   Star(m):   0 is the centre, 1..m are rays
///   Sunlet(m): cycle 0..m-1, ray m+i ~ i
///   Sun(m):    clique 0..m-1, ray m+i ~ i and (i+1) mod m
///   Diamond:   cycle 0-1-2-3 with chord 1-3
auto make_pattern(PatternKind kind) -> Graph;

/// An induced copy of a pattern: vertices[i] is the host image of pattern
/// vertex i.
struct Occurrence
{
    PatternKind pattern;
    std::vector<int> vertices;
};

/// Every induced copy of `pattern` in `host`, one per (vertex set, role
/// partition) where roles are the orbits of the pattern's automorphism group.
/// Results are sorted by their vertex lists.
auto find_induced(const Graph & host, const Graph & pattern, PatternKind kind = { PatternFamily::Cycle, 0 })
    -> std::vector<Occurrence>;
auto find_induced(const Graph & host, PatternKind kind) -> std::vector<Occurrence>;

/// Visits induced embeddings of `pattern` (all of them, including automorphic
/// duplicates) until the visitor returns false. Returns false if stopped early.
auto for_each_induced_embedding(const Graph & host, const Graph & pattern,
    const std::function<bool(const std::vector<int> &)> & visit) -> bool;

auto contains_induced(const Graph & host, const Graph & pattern) -> bool;

/// True iff no pattern in the list occurs as an induced subgraph.
auto is_induced_free(const Graph & host, const std::vector<Graph> & patterns) -> bool;

/// True iff every simple cycle of g has at most `limit` vertices. Cycles are
/// searched per biconnected block, so graphs whose blocks are small are cheap
/// regardless of their total size.
auto longest_cycle_at_most(const Graph & g, int limit) -> bool;

/// Vertex sets of the biconnected blocks of g (bridges included as 2-sets).
auto biconnected_blocks(const Graph & g) -> std::vector<std::vector<int>>;

}
