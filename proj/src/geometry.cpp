#include "apud/geometry.hpp"

#include <algorithm>

namespace apud {

namespace {

    auto sorted_unique(std::vector<Rational> values, const char * what) -> std::vector<Rational>
    {
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end())
            throw RejectedInput(std::string("duplicate ") + what + " line value");
        return values;
    }

    auto find_in(const std::vector<Rational> & values, const Rational & v) -> std::optional<int>
    {
        auto it = std::lower_bound(values.begin(), values.end(), v);
        if (it == values.end() || *it != v)
            return std::nullopt;
        return static_cast<int>(it - values.begin());
    }

    const Rational two{ 2 };
    const Rational four{ 4 };

}

LineConfig::LineConfig(std::vector<Rational> horizontals, std::vector<Rational> verticals) :
    _horizontals(sorted_unique(std::move(horizontals), "horizontal")),
    _verticals(sorted_unique(std::move(verticals), "vertical"))
{
}

auto LineConfig::contains(LineId id) const -> bool
{
    const auto & list = id.axis == Axis::Horizontal ? _horizontals : _verticals;
    return id.index >= 0 && id.index < static_cast<int>(list.size());
}

auto LineConfig::value(LineId id) const -> const Rational &
{
    if (! contains(id))
        throw RejectedInput("line index " + std::to_string(id.index) + " out of range");
    return id.axis == Axis::Horizontal ? _horizontals[id.index] : _verticals[id.index];
}

auto LineConfig::on_line(const Point & p, LineId id) const -> bool
{
    if (! contains(id))
        return false;
    return id.axis == Axis::Horizontal ? p.y == value(id) : p.x == value(id);
}

auto LineConfig::find_horizontal(const Rational & y) const -> std::optional<LineId>
{
    if (auto i = find_in(_horizontals, y))
        return LineId{ Axis::Horizontal, *i };
    return std::nullopt;
}

auto LineConfig::find_vertical(const Rational & x) const -> std::optional<LineId>
{
    if (auto i = find_in(_verticals, x))
        return LineId{ Axis::Vertical, *i };
    return std::nullopt;
}

auto LineConfig::horizontal(const Rational & y) const -> LineId
{
    if (auto id = find_horizontal(y))
        return *id;
    throw RejectedInput("no horizontal line y=" + y.str());
}

auto LineConfig::vertical(const Rational & x) const -> LineId
{
    if (auto id = find_vertical(x))
        return *id;
    throw RejectedInput("no vertical line x=" + x.str());
}

auto distance_squared(const Point & p, const Point & q) -> Rational
{
    Rational dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
    return dx * dx + dy * dy + dz * dz;
}

auto disks_intersect(const Point & p, const Point & q) -> bool
{
    Rational dx = (p.x - q.x).abs(), dy = (p.y - q.y).abs(), dz = (p.z - q.z).abs();
    if (dx > two || dy > two || dz > two)
        return false;
    return dx * dx + dy * dy + dz * dz <= four;
}

auto intersection_graph(const std::vector<Point> & points) -> Graph
{
    const int n = static_cast<int>(points.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (disks_intersect(points[i], points[j]))
                g.add_edge(i, j);
    return g;
}

auto verify_intersection_pattern(const Graph & g, const std::vector<Point> & points) -> VerificationReport
{
    if (static_cast<int>(points.size()) != g.size())
        throw RejectedInput("point count does not match vertex count");
    VerificationReport report;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            bool meet = disks_intersect(points[u], points[v]);
            bool edge = g.adjacent(u, v);
            if (edge && ! meet)
                report.missing_edges.emplace_back(u, v);
            else if (! edge && meet)
                report.excess_edges.emplace_back(u, v);
        }
    return report;
}

auto verify_realization(const Graph & g, const LineConfig & lines, const Placement & placement) -> VerificationReport
{
    std::vector<Point> points;
    points.reserve(g.size());
    for (int v = 0; v < g.size(); ++v) {
        auto p = placement.points.find(v);
        if (p == placement.points.end())
            throw RejectedInput("vertex " + std::to_string(v) + " has no point");
        if (placement.assignment.find(v) == placement.assignment.end())
            throw RejectedInput("vertex " + std::to_string(v) + " has no line");
        points.push_back(p->second);
    }

    auto report = verify_intersection_pattern(g, points);
    for (int v = 0; v < g.size(); ++v) {
        const auto & p = points[v];
        LineId id = placement.assignment.at(v);
        if (! lines.contains(id))
            report.line_violations.push_back({ v, "assigned line does not exist" });
        else if (p.z != 0)
            report.line_violations.push_back({ v, "centre is not in the plane" });
        else if (! lines.on_line(p, id))
            report.line_violations.push_back({ v, "centre (" + p.x.str() + "," + p.y.str() + ") is off its line" });
    }
    return report;
}

auto triangle_blocking(const Rational & a, const Rational & b, const Rational & c) -> bool
{
    if (! (a.sign() != 0 && a.abs() < b.abs()))
        throw RejectedInput("triangle_blocking needs 0 < |a| < |b|");
    Point pa{ a, 0 }, pb{ b, 0 }, pc{ 0, c };
    return ! disks_intersect(pc, pb) || disks_intersect(pc, pa);
}

auto mirror_contact_agrees(const Rational & a, const Rational & b, const Rational & c) -> bool
{
    if (a.abs() != b.abs() || a == b)
        throw RejectedInput("mirror_contact_agrees needs |a| = |b| and a != b");
    Point pa{ a, 0 }, pb{ b, 0 }, pc{ 0, c };
    return disks_intersect(pc, pa) == disks_intersect(pc, pb);
}

}
