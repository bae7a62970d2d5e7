#pragma once

#include "apud/geometry.hpp"
#include "apud/graph.hpp"
#include "apud/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace apud {

enum class Verdict
{
    NotInClass,
    Inconclusive,
    SufficientMember,
};

auto verdict_name(Verdict v) -> std::string;

struct ObstructionReport
{
    std::vector<Occurrence> found;
    Verdict verdict = Verdict::Inconclusive;
};

inline constexpr int max_recognition_vertices = 64;
inline constexpr int max_oracle_vertices = 9;
inline constexpr int max_grid_vertices = 12;

/// Vertex set of an induced claw, net, 3-sun or chordless cycle of length at
/// least 4, or nullopt if g is a unit interval graph.
auto find_uig_obstruction(const Graph & g) -> std::optional<std::vector<int>>;

/// Forbidden-subgraph test. Throws RejectedInput above 64 vertices.
auto is_unit_interval(const Graph & g) -> bool;

/// Searches vertex orderings with the umbrella property and solves the
/// resulting difference constraints exactly. Returns one coordinate per
/// vertex such that |x_u - x_v| <= 2 iff uv is an edge, or nullopt.
/// Throws RejectedInput above 9 vertices.
auto uig_oracle(const Graph & g) -> std::optional<std::vector<Rational>>;

/// Every induced C5, 4-sun and K1,5.
auto apud11_obstructions(const Graph & g) -> ObstructionReport;

/// The exceptional patterns allowed once per line crossing: C4, K1,4, S3, I3, I4.
auto exceptional_patterns() -> std::vector<PatternKind>;

/// SufficientMember iff g is unit interval, or becomes so after deleting the
/// vertices of one exceptional occurrence (reported in `found`).
auto apud11_sufficient(const Graph & g) -> ObstructionReport;

/// SufficientMember iff deleting the vertices of at most k*m pairwise disjoint
/// exceptional occurrences leaves a unit interval graph.
auto apud_gt2_sufficient(const Graph & g, int k, int m) -> ObstructionReport;

struct SearchBudget
{
    Rational step = Rational(1, 20);
    Rational window = 4;
    std::int64_t max_nodes = 200'000'000;

    auto validate() const -> void;
};

enum class SearchStatus
{
    Found,
    NotFound,
    Exhausted,
};

auto search_status_name(SearchStatus s) -> std::string;

struct SearchOutcome
{
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Placement> placement;
    std::int64_t nodes = 0;
    /// Number of placements handed to the visitor (enumeration only).
    std::int64_t visited = 0;
};

/// Grid search for a realization of g on `lines`. A centre on a horizontal
/// line y = h sits at (k * step, h), one on a vertical line at (v, k * step),
/// with |k * step| <= window. When all lines are parallel, the first vertex
/// is pinned to coordinate 0 along its line. When the line set is symmetric
/// under x -> -x (or y -> -y), the first vertex is restricted to x >= 0
/// (y >= 0), and when horizontals and verticals coincide, to a horizontal
/// line. A returned placement has passed verify_realization.
///
/// NotFound only says there is no realization on this grid.
auto solve_placement_grid(const Graph & g, const LineConfig & lines, const SearchBudget & budget, int jobs = 1)
    -> SearchOutcome;

/// Visits every grid realization (no symmetry or translation reduction) in
/// lexicographic search order until the visitor returns false.
auto enumerate_grid_placements(const Graph & g, const LineConfig & lines, const SearchBudget & budget,
    const std::function<bool(const Placement &)> & visit) -> SearchOutcome;

}
