#pragma once

#include "apud/graph.hpp"
#include "apud/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace apud {

/// Disk centre. 2D points leave z at 0.
struct Point
{
    Rational x;
    Rational y;
    Rational z = 0;

    friend auto operator==(const Point &, const Point &) -> bool = default;
};

enum class Axis
{
    Horizontal, // y = value
    Vertical,   // x = value
};

/// Reference into a LineConfig: the index-th horizontal or vertical line in
/// sorted order.
struct LineId
{
    Axis axis;
    int index;

    friend auto operator==(const LineId &, const LineId &) -> bool = default;
    friend auto operator<=>(const LineId &, const LineId &) = default;
};

/// The axis-parallel lines disks may be centred on: horizontals hold y-values,
/// verticals hold x-values. Both lists are sorted and duplicate free.
class LineConfig
{
public:
    LineConfig() = default;
    /// Sorts the inputs; throws RejectedInput on duplicates.
    LineConfig(std::vector<Rational> horizontals, std::vector<Rational> verticals);

    [[nodiscard]] auto horizontals() const -> const std::vector<Rational> & { return _horizontals; }
    [[nodiscard]] auto verticals() const -> const std::vector<Rational> & { return _verticals; }
    [[nodiscard]] auto line_count() const -> int { return static_cast<int>(_horizontals.size() + _verticals.size()); }

    [[nodiscard]] auto value(LineId id) const -> const Rational &;
    [[nodiscard]] auto contains(LineId id) const -> bool;
    [[nodiscard]] auto on_line(const Point & p, LineId id) const -> bool;

    [[nodiscard]] auto find_horizontal(const Rational & y) const -> std::optional<LineId>;
    [[nodiscard]] auto find_vertical(const Rational & x) const -> std::optional<LineId>;
    /// Like find_* but throws RejectedInput if the value is not a line.
    [[nodiscard]] auto horizontal(const Rational & y) const -> LineId;
    [[nodiscard]] auto vertical(const Rational & x) const -> LineId;

    friend auto operator==(const LineConfig &, const LineConfig &) -> bool = default;

private:
    std::vector<Rational> _horizontals;
    std::vector<Rational> _verticals;
};

/// A candidate realization: a centre and a line for each vertex.
struct Placement
{
    std::map<int, Point> points;
    std::map<int, LineId> assignment;

    auto place(int v, Point p, LineId line) -> void
    {
        points.insert_or_assign(v, std::move(p));
        assignment.insert_or_assign(v, line);
    }

    friend auto operator==(const Placement &, const Placement &) -> bool = default;
};

/// Squared Euclidean distance, exact.
auto distance_squared(const Point & p, const Point & q) -> Rational;

/// Unit disks (or balls) centred at p and q meet iff |pq| <= 2.
auto disks_intersect(const Point & p, const Point & q) -> bool;

/// Edge {i, j} iff the disks at points[i] and points[j] intersect.
auto intersection_graph(const std::vector<Point> & points) -> Graph;

struct LineViolation
{
    int vertex;
    std::string reason;
};

struct VerificationReport
{
    std::vector<LineViolation> line_violations;
    std::vector<Edge> missing_edges; // adjacent in g, disks disjoint
    std::vector<Edge> excess_edges;  // not adjacent in g, disks intersect

    [[nodiscard]] auto valid() const -> bool
    {
        return line_violations.empty() && missing_edges.empty() && excess_edges.empty();
    }
};

/// Checks that `placement` realizes g on `lines`: every centre lies on its
/// assigned line and the disk intersection pattern equals g's edge set.
/// Throws RejectedInput if some vertex of g has no point or no line.
auto verify_realization(const Graph & g, const LineConfig & lines, const Placement & placement) -> VerificationReport;

/// Same check without line membership, for 3D lifts where the carrier is a
/// plane rather than a line.
auto verify_intersection_pattern(const Graph & g, const std::vector<Point> & points) -> VerificationReport;

/// Disks A at (a,0), B at (b,0), C at (0,c) with 0 < |a| < |b|: returns
/// whether "C meets B implies C meets A" holds for this triple. Always true;
/// kept as an executable check of the blocking argument.
auto triangle_blocking(const Rational & a, const Rational & b, const Rational & c) -> bool;

/// Disks at (a,0), (b,0) with |a| = |b|, a != b, and C at (0,c): returns
/// whether C meets both or neither. Always true.
auto mirror_contact_agrees(const Rational & a, const Rational & b, const Rational & c) -> bool;

}
