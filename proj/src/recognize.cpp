#include "apud/recognize.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace apud {

auto verdict_name(Verdict v) -> std::string
{
    switch (v) {
    case Verdict::NotInClass: return "NotInClass";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::SufficientMember: return "SufficientMember";
    }
    return "?";
}

auto search_status_name(SearchStatus s) -> std::string
{
    switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::NotFound: return "NotFound";
    case SearchStatus::Exhausted: return "Exhausted";
    }
    return "?";
}

namespace {

    auto guard(const Graph & g, int limit, const char * what) -> void
    {
        if (g.size() > limit)
            throw RejectedInput(std::string(what) + " accepts at most " + std::to_string(limit) + " vertices, got "
                + std::to_string(g.size()));
    }

    // Chordless cycle on at least four vertices, found by extending induced
    // paths whose vertices all exceed the start vertex.
    auto find_hole(const Graph & g) -> std::optional<std::vector<int>>
    {
        const int n = g.size();
        std::vector<int> path;
        std::vector<char> on_path(n, 0);
        std::optional<std::vector<int>> result;

        std::function<bool(int)> extend = [&](int start) -> bool {
            int last = path.back();
            for (int w : g.neighbours(last)) {
                if (w <= start || on_path[w])
                    continue;
                bool chord = false, closes = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (g.adjacent(w, path[i])) {
                        if (i == 0)
                            closes = true;
                        else {
                            chord = true;
                            break;
                        }
                    }
                if (chord)
                    continue;
                if (closes) {
                    if (path.size() >= 3) {
                        result = path;
                        result->push_back(w);
                        return true;
                    }
                    continue;
                }
                path.push_back(w);
                on_path[w] = 1;
                if (extend(start))
                    return true;
                on_path[w] = 0;
                path.pop_back();
            }
            return false;
        };

        for (int s = 0; s < n; ++s) {
            path = { s };
            on_path.assign(n, 0);
            on_path[s] = 1;
            if (extend(s))
                return result;
        }
        return std::nullopt;
    }

    auto first_occurrence(const Graph & g, PatternKind kind) -> std::optional<std::vector<int>>
    {
        std::optional<std::vector<int>> found;
        for_each_induced_embedding(g, make_pattern(kind), [&](const std::vector<int> & image) {
            found = image;
            return false;
        });
        return found;
    }

}

auto find_uig_obstruction(const Graph & g) -> std::optional<std::vector<int>>
{
    for (auto kind : { claw(), net(), sun(3) })
        if (auto occ = first_occurrence(g, kind))
            return occ;
    return find_hole(g);
}

auto is_unit_interval(const Graph & g) -> bool
{
    guard(g, max_recognition_vertices, "is_unit_interval");
    return ! find_uig_obstruction(g);
}

namespace {

    // Weight c - s * delta for an infinitesimal delta > 0.
    struct Weight
    {
        int c = 0;
        int s = 0;

        friend auto operator+(Weight a, Weight b) -> Weight { return { a.c + b.c, a.s + b.s }; }
        friend auto operator<(Weight a, Weight b) -> bool { return a.c != b.c ? a.c < b.c : a.s > b.s; }
    };

    struct Constraint
    {
        int from, to; // x_to - x_from <= weight
        Weight w;
    };

    auto ordering_constraints(const Graph & g, const std::vector<int> & order) -> std::vector<Constraint>
    {
        std::vector<Constraint> cs;
        const int n = static_cast<int>(order.size());
        for (int i = 0; i + 1 < n; ++i)
            cs.push_back({ order[i + 1], order[i], { 0, 0 } });
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int u = order[i], v = order[j];
                if (g.adjacent(u, v))
                    cs.push_back({ u, v, { 2, 0 } });
                else
                    cs.push_back({ v, u, { -2, 1 } });
            }
        return cs;
    }

    auto has_negative_cycle(int n, const std::vector<Constraint> & cs) -> bool
    {
        std::vector<Weight> dist(n);
        for (int round = 0; round < n; ++round) {
            bool changed = false;
            for (const auto & c : cs)
                if (dist[c.from] + c.w < dist[c.to]) {
                    dist[c.to] = dist[c.from] + c.w;
                    changed = true;
                }
            if (! changed)
                return false;
        }
        return true;
    }

    // Replaces each strict bound c - delta by the concrete value and takes
    // shortest-path potentials as coordinates.
    auto concrete_solution(int n, const std::vector<Constraint> & cs) -> std::vector<Rational>
    {
        Rational delta(1, 2 * n + 2);
        std::vector<Rational> dist(n, Rational(0));
        for (int round = 0; round < n; ++round)
            for (const auto & c : cs) {
                Rational w = Rational(c.w.c) - Rational(c.w.s) * delta;
                if (dist[c.from] + w < dist[c.to])
                    dist[c.to] = dist[c.from] + w;
            }
        Rational lowest = *std::min_element(dist.begin(), dist.end());
        for (auto & d : dist)
            d -= lowest;
        return dist;
    }

    auto realizes_on_line(const Graph & g, const std::vector<Rational> & xs) -> bool
    {
        std::vector<Point> points;
        for (const auto & x : xs)
            points.push_back(Point{ x, 0 });
        return verify_intersection_pattern(g, points).valid();
    }

}

auto uig_oracle(const Graph & g) -> std::optional<std::vector<Rational>>
{
    guard(g, max_oracle_vertices, "uig_oracle");
    const int n = g.size();
    if (n == 0)
        return std::vector<Rational>{};

    std::vector<int> order;
    std::vector<char> used(n, 0);
    std::optional<std::vector<Rational>> result;

    // Umbrella property: if u before v before w and uw is an edge, then uv
    // and vw are edges too.
    auto umbrella_ok = [&](int w) {
        const int p = static_cast<int>(order.size());
        for (int i = 0; i < p; ++i) {
            if (! g.adjacent(order[i], w))
                continue;
            for (int j = i + 1; j < p; ++j)
                if (! g.adjacent(order[i], order[j]) || ! g.adjacent(order[j], w))
                    return false;
        }
        return true;
    };

    std::function<bool()> place = [&]() -> bool {
        if (static_cast<int>(order.size()) == n) {
            auto cs = ordering_constraints(g, order);
            if (has_negative_cycle(n, cs))
                return false;
            auto xs = concrete_solution(n, cs);
            if (! realizes_on_line(g, xs))
                throw std::logic_error("uig_oracle: concrete solution fails verification");
            result = std::move(xs);
            return true;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || ! umbrella_ok(w))
                continue;
            used[w] = 1;
            order.push_back(w);
            if (place())
                return true;
            order.pop_back();
            used[w] = 0;
        }
        return false;
    };

    place();
    return result;
}

auto apud11_obstructions(const Graph & g) -> ObstructionReport
{
    ObstructionReport report;
    for (auto kind : { cycle(5), sun(4), star(5) })
        for (auto & occ : find_induced(g, kind))
            report.found.push_back(std::move(occ));
    report.verdict = report.found.empty() ? Verdict::Inconclusive : Verdict::NotInClass;
    return report;
}

auto exceptional_patterns() -> std::vector<PatternKind>
{
    return { cycle(4), star(4), sun(3), sunlet(3), sunlet(4) };
}

namespace {

    auto exceptional_occurrences(const Graph & g) -> std::vector<Occurrence>
    {
        std::vector<Occurrence> all;
        for (auto kind : exceptional_patterns())
            for (auto & occ : find_induced(g, kind))
                all.push_back(std::move(occ));
        return all;
    }

    auto sorted_set(std::vector<int> v) -> std::vector<int>
    {
        std::sort(v.begin(), v.end());
        return v;
    }

}

auto apud11_sufficient(const Graph & g) -> ObstructionReport
{
    guard(g, max_recognition_vertices, "apud11_sufficient");
    ObstructionReport report;
    if (is_unit_interval(g)) {
        report.verdict = Verdict::SufficientMember;
        return report;
    }
    for (auto & occ : exceptional_occurrences(g))
        if (is_unit_interval(g.without(occ.vertices))) {
            report.found.push_back(std::move(occ));
            report.verdict = Verdict::SufficientMember;
            return report;
        }
    report.verdict = Verdict::Inconclusive;
    return report;
}

auto apud_gt2_sufficient(const Graph & g, int k, int m) -> ObstructionReport
{
    guard(g, max_recognition_vertices, "apud_gt2_sufficient");
    if (k < 0 || m < 0)
        throw RejectedInput("line counts must be non-negative");
    const int crossings = k * m;

    std::vector<Occurrence> chosen;
    // Remaining vertex set -> fewest deletions it was explored with.
    std::map<std::vector<int>, int> tried;

    // Each step picks one obstruction and deletes an exceptional occurrence
    // that meets it; some such deletion is needed to destroy the obstruction.
    std::function<bool(const std::vector<int> &)> solve = [&](const std::vector<int> & alive) -> bool {
        Graph h = g.induced(alive);
        auto obstruction = find_uig_obstruction(h);
        if (! obstruction)
            return true;
        if (static_cast<int>(chosen.size()) == crossings)
            return false;
        std::vector<char> hit(h.size(), 0);
        for (int v : *obstruction)
            hit[v] = 1;
        for (auto & occ : exceptional_occurrences(h)) {
            if (std::none_of(occ.vertices.begin(), occ.vertices.end(), [&](int v) { return hit[v]; }))
                continue;
            std::vector<char> drop(h.size(), 0);
            for (int v : occ.vertices)
                drop[v] = 1;
            std::vector<int> rest;
            for (int i = 0; i < h.size(); ++i)
                if (! drop[i])
                    rest.push_back(alive[i]);
            // Deletion order does not matter; skip sets already explored
            // with at least as much budget left.
            int used = static_cast<int>(chosen.size()) + 1;
            auto [it, fresh] = tried.try_emplace(rest, used);
            if (! fresh) {
                if (it->second <= used)
                    continue;
                it->second = used;
            }
            for (auto & v : occ.vertices)
                v = alive[v];
            chosen.push_back(occ);
            if (solve(rest))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    ObstructionReport report;
    if (solve(all)) {
        report.found = chosen;
        std::sort(report.found.begin(), report.found.end(),
            [](const Occurrence & a, const Occurrence & b) { return sorted_set(a.vertices) < sorted_set(b.vertices); });
        report.verdict = Verdict::SufficientMember;
    }
    else
        report.verdict = Verdict::Inconclusive;
    return report;
}

auto SearchBudget::validate() const -> void
{
    if (step.sign() <= 0)
        throw RejectedInput("search step must be positive");
    if (window.sign() <= 0)
        throw RejectedInput("search window must be positive");
    if (max_nodes <= 0)
        throw RejectedInput("node budget must be positive");
}

namespace {

    using i64 = std::int64_t;
    using Word = std::uint64_t;

    struct Interval
    {
        i64 lo, hi;
    };

    auto isqrt(i64 v) -> i64
    {
        auto r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
        while (r * r > v)
            --r;
        while ((r + 1) * (r + 1) <= v)
            ++r;
        return r;
    }

    auto floor_div(i64 a, i64 b) -> i64
    {
        i64 q = a / b;
        return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
    }

    auto ceil_div(i64 a, i64 b) -> i64 { return -floor_div(-a, b); }

    auto to_i64(const mpz_class & z) -> i64
    {
        if (! z.fits_slong_p())
            throw RejectedInput("grid coordinates too large");
        return z.get_si();
    }

    // All coordinates scaled by a common denominator so that grid points and
    // line constants are integers.
    struct Grid
    {
        struct Line
        {
            LineId id;
            i64 constant;
        };

        std::vector<Line> lines;
        i64 scale = 1;
        i64 pitch = 1;  // step * scale
        i64 extent = 0; // max |k|
        i64 reach2 = 4; // (2 * scale)^2
        Rational step;

        Grid(const LineConfig & config, const SearchBudget & budget) :
            step(budget.step)
        {
            mpz_class l = budget.step.denominator();
            for (const auto & y : config.horizontals())
                l = lcm(l, y.denominator());
            for (const auto & x : config.verticals())
                l = lcm(l, x.denominator());
            const i64 bound = i64{ 1 } << 30;
            scale = to_i64(l);
            if (scale > bound)
                throw RejectedInput("grid too fine for exact 64-bit search");
            pitch = to_i64((budget.step * Rational(scale)).numerator());
            extent = to_i64(floor(budget.window / budget.step));
            if (extent > (i64{ 1 } << 20) || extent * pitch > bound)
                throw RejectedInput("search window holds too many grid points");
            for (int i = 0; i < static_cast<int>(config.horizontals().size()); ++i)
                lines.push_back({ { Axis::Horizontal, i }, to_i64((config.horizontals()[i] * Rational(scale)).numerator()) });
            for (int i = 0; i < static_cast<int>(config.verticals().size()); ++i)
                lines.push_back({ { Axis::Vertical, i }, to_i64((config.verticals()[i] * Rational(scale)).numerator()) });
            for (const auto & line : lines)
                if (std::abs(line.constant) > bound)
                    throw RejectedInput("line constant too large for exact 64-bit search");
            reach2 = 4 * scale * scale;
        }

        [[nodiscard]] auto point(int line, i64 k) const -> std::pair<i64, i64>
        {
            const auto & ln = lines[line];
            return ln.id.axis == Axis::Horizontal ? std::pair{ k * pitch, ln.constant } : std::pair{ ln.constant, k * pitch };
        }

        // Grid indices on `line` whose disk meets the disk at p (empty when
        // lo > hi).
        [[nodiscard]] auto reach(int line, std::pair<i64, i64> p) const -> Interval
        {
            const auto & ln = lines[line];
            i64 across = ln.id.axis == Axis::Horizontal ? ln.constant - p.second : ln.constant - p.first;
            i64 along = ln.id.axis == Axis::Horizontal ? p.first : p.second;
            i64 rest = reach2 - across * across;
            if (rest < 0)
                return { 1, 0 };
            i64 r = isqrt(rest);
            return { std::max(ceil_div(along - r, pitch), -extent), std::min(floor_div(along + r, pitch), extent) };
        }

        [[nodiscard]] auto exact_point(int line, i64 k) const -> Point
        {
            const auto & ln = lines[line];
            Rational along = step * Rational(k);
            Rational across = Rational(ln.constant) / Rational(scale);
            return ln.id.axis == Axis::Horizontal ? Point{ along, across } : Point{ across, along };
        }
    };

    struct Choice
    {
        int line = -1;
        i64 k = 0;

        friend auto operator<=>(const Choice &, const Choice &) = default;
    };

    struct Shared
    {
        std::atomic<i64> nodes{ 0 };
        std::atomic<bool> exhausted{ false };
        i64 max_nodes = 0;
    };

    // Bit i of a domain stands for grid index i - extent.
    class GridSearch
    {
    public:
        GridSearch(const Graph & g, const Grid & grid, Shared & shared, bool enumerate) :
            _g(g), _grid(grid), _shared(shared), _enumerate(enumerate), _n(g.size()),
            _lines(static_cast<int>(grid.lines.size())),
            _bits(2 * grid.extent + 1),
            _words((_bits + 63) / 64),
            _level(static_cast<std::size_t>(_n) * _lines * _words),
            _store((static_cast<std::size_t>(_n) + 1) * _level, 0),
            _choice(g.size())
        {
            if (_store.size() > (std::size_t{ 1 } << 27))
                throw RejectedInput("grid search state too large");
            for (int u = 0; u < _n; ++u)
                for (int l = 0; l < _lines; ++l)
                    fill(domain(0, u, l));
            if (! enumerate)
                find_twins();
        }

        std::function<bool(const std::vector<Choice> &)> on_complete;
        int first_vertex = -1;
        std::optional<Choice> first_only;

        // Smallest domain, then most placed neighbours, then highest degree,
        // then lowest index.
        auto pick(int depth) const -> int
        {
            int best = -1;
            std::tuple<i64, int, int> best_key{};
            for (int v = 0; v < _n; ++v) {
                if (_choice[v].line >= 0)
                    continue;
                i64 size = 0;
                for (int l = 0; l < _lines; ++l)
                    size += count(domain(depth, v, l));
                int placed = 0;
                for (int u : _g.neighbours(v))
                    placed += _choice[u].line >= 0;
                std::tuple<i64, int, int> key{ size, -placed, -_g.degree(v) };
                if (best < 0 || key < best_key) {
                    best = v;
                    best_key = key;
                }
            }
            return best;
        }

        auto run(int depth) -> bool
        {
            if (_shared.exhausted.load(std::memory_order_relaxed))
                return false;
            if (_shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > _shared.max_nodes) {
                _shared.exhausted = true;
                return false;
            }
            const int remaining = _n - depth;
            if (remaining == 0)
                return on_complete(_choice);

            int v = pick(depth);
            for (int l = 0; l < _lines; ++l) {
                const Word * d = domain(depth, v, l);
                for (int w = 0; w < _words; ++w)
                    for (Word bits = d[w]; bits; bits &= bits - 1) {
                        i64 k = static_cast<i64>(w) * 64 + std::countr_zero(bits) - _grid.extent;
                        Choice c{ l, k };
                        if (v == first_vertex && first_only && c != *first_only)
                            continue;
                        if (! twin_ok(v, c))
                            continue;
                        _choice[v] = c;
                        bool done = false;
                        if (remaining == 1 && ! _enumerate)
                            done = on_complete(_choice);
                        else if (propagate(depth, v, c))
                            done = run(depth + 1);
                        _choice[v] = {};
                        if (done || _shared.exhausted.load(std::memory_order_relaxed) || (remaining == 1 && ! _enumerate))
                            return done;
                    }
            }
            return false;
        }

        auto drop_twin_class_of(int v) -> void
        {
            if (v >= 0 && v < _n && _twin_class[v] >= 0) {
                int cls = _twin_class[v];
                for (int u : _twin_members[cls])
                    _twin_class[u] = -1;
            }
        }

    private:
        auto domain(int depth, int u, int l) -> Word * { return &_store[depth * _level + (static_cast<std::size_t>(u) * _lines + l) * _words]; }
        auto domain(int depth, int u, int l) const -> const Word * { return &_store[depth * _level + (static_cast<std::size_t>(u) * _lines + l) * _words]; }

        auto fill(Word * d) const -> void
        {
            for (int w = 0; w < _words; ++w)
                d[w] = ~Word{ 0 };
            if (_bits % 64)
                d[_words - 1] = (Word{ 1 } << (_bits % 64)) - 1;
        }

        auto count(const Word * d) const -> i64
        {
            i64 c = 0;
            for (int w = 0; w < _words; ++w)
                c += std::popcount(d[w]);
            return c;
        }

        // Keeps (keep = true) or clears the bits lo..hi, given as bit indices.
        auto mask(Word * d, i64 lo, i64 hi, bool keep) const -> bool
        {
            bool any = false;
            for (int w = 0; w < _words; ++w) {
                i64 base = static_cast<i64>(w) * 64;
                Word m = 0;
                if (hi >= base && lo < base + 64) {
                    i64 a = std::max(lo, base) - base, b = std::min(hi, base + 63) - base;
                    m = (b == 63 ? ~Word{ 0 } : (Word{ 1 } << (b + 1)) - 1) & ~((Word{ 1 } << a) - 1);
                }
                d[w] &= keep ? m : ~m;
                any = any || d[w] != 0;
            }
            return any;
        }

        auto twin_ok(int v, Choice c) const -> bool
        {
            if (_twin_class[v] < 0)
                return true;
            for (int u : _twin_members[_twin_class[v]]) {
                if (u == v || _choice[u].line < 0)
                    continue;
                if (u < v ? c < _choice[u] : _choice[u] < c)
                    return false;
            }
            return true;
        }

        // Copies level depth to depth + 1 and applies v := c to the other
        // unplaced vertices. False if one of them has no option left.
        auto propagate(int depth, int v, Choice c) -> bool
        {
            std::copy_n(&_store[depth * _level], _level, &_store[(depth + 1) * _level]);
            auto p = _grid.point(c.line, c.k);
            for (int u = 0; u < _n; ++u) {
                if (_choice[u].line >= 0)
                    continue;
                bool adjacent = _g.adjacent(u, v);
                bool any = false;
                for (int l = 0; l < _lines; ++l) {
                    Word * d = domain(depth + 1, u, l);
                    auto r = _grid.reach(l, p);
                    if (r.lo > r.hi) {
                        if (adjacent)
                            std::fill_n(d, _words, Word{ 0 });
                        else
                            any = any || count(d) > 0;
                        continue;
                    }
                    any = mask(d, r.lo + _grid.extent, r.hi + _grid.extent, adjacent) || any;
                }
                if (! any)
                    return false;
            }
            return true;
        }

        auto find_twins() -> void
        {
            for (int v = 0; v < _n; ++v) {
                if (_twin_class[v] >= 0)
                    continue;
                std::vector<int> members{ v };
                for (int u = v + 1; u < _n; ++u) {
                    if (_twin_class[u] >= 0)
                        continue;
                    auto nv = _g.neighbours(v), nu = _g.neighbours(u);
                    std::erase(nv, u);
                    std::erase(nu, v);
                    if (nv == nu)
                        members.push_back(u);
                }
                if (members.size() > 1) {
                    for (int u : members)
                        _twin_class[u] = static_cast<int>(_twin_members.size());
                    _twin_members.push_back(members);
                }
            }
        }

        const Graph & _g;
        const Grid & _grid;
        Shared & _shared;
        bool _enumerate;
        int _n;
        int _lines;
        i64 _bits;
        int _words;
        std::size_t _level;
        std::vector<Word> _store;
        std::vector<Choice> _choice;
        std::vector<int> _twin_class = std::vector<int>(_n, -1);
        std::vector<std::vector<int>> _twin_members;
    };

    auto to_placement(const Grid & grid, const std::vector<Choice> & choice) -> Placement
    {
        Placement p;
        for (int v = 0; v < static_cast<int>(choice.size()); ++v)
            p.place(v, grid.exact_point(choice[v].line, choice[v].k), grid.lines[choice[v].line].id);
        return p;
    }

    auto negation_closed(const std::vector<Rational> & values) -> bool
    {
        for (const auto & v : values)
            if (! std::binary_search(values.begin(), values.end(), -v))
                return false;
        return true;
    }

}

auto solve_placement_grid(const Graph & g, const LineConfig & lines, const SearchBudget & budget, int jobs) -> SearchOutcome
{
    guard(g, max_grid_vertices, "solve_placement_grid");
    budget.validate();
    SearchOutcome outcome;
    if (g.size() == 0) {
        outcome.status = SearchStatus::Found;
        outcome.placement = Placement{};
        return outcome;
    }
    if (lines.line_count() == 0)
        return outcome;

    Grid grid(lines, budget);
    Shared shared;
    shared.max_nodes = budget.max_nodes;

    const int root = GridSearch(g, grid, shared, false).pick(0);
    const bool parallel_only = lines.horizontals().empty() || lines.verticals().empty();
    const bool mirror_x = negation_closed(lines.verticals());
    const bool mirror_y = negation_closed(lines.horizontals());
    const bool swap_xy = lines.horizontals() == lines.verticals();

    // Root positions left after the translation and reflection reductions.
    std::vector<Choice> branches;
    for (int l = 0; l < static_cast<int>(grid.lines.size()); ++l)
        for (i64 k = -grid.extent; k <= grid.extent; ++k) {
            auto [x, y] = grid.point(l, k);
            if ((parallel_only && k != 0) || (mirror_x && x < 0) || (mirror_y && y < 0)
                || (swap_xy && grid.lines[l].id.axis == Axis::Vertical))
                continue;
            branches.push_back({ l, k });
        }

    // The answer is the solution in the lowest-numbered branch, whatever the
    // thread count.
    std::atomic<std::size_t> next_branch{ 0 };
    std::atomic<std::size_t> best_branch{ std::numeric_limits<std::size_t>::max() };
    std::mutex result_mutex;
    std::optional<Placement> best;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            GridSearch search(g, grid, shared, false);
            search.drop_twin_class_of(root);
            search.first_vertex = root;
            for (;;) {
                std::size_t b = next_branch.fetch_add(1);
                if (b >= branches.size() || b > best_branch.load() || shared.exhausted.load())
                    return;
                search.first_only = branches[b];
                search.on_complete = [&](const std::vector<Choice> & choice) {
                    auto placement = to_placement(grid, choice);
                    if (! verify_realization(g, lines, placement).valid())
                        throw std::logic_error("grid search produced an invalid placement");
                    std::lock_guard lock(result_mutex);
                    if (b < best_branch.load()) {
                        best_branch = b;
                        best = std::move(placement);
                    }
                    return true;
                };
                search.run(0);
            }
        }
        catch (...) {
            std::lock_guard lock(result_mutex);
            failure = std::current_exception();
            shared.exhausted = true;
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    outcome.nodes = shared.nodes.load();
    if (best) {
        outcome.status = SearchStatus::Found;
        outcome.placement = std::move(best);
    }
    else
        outcome.status = shared.exhausted.load() ? SearchStatus::Exhausted : SearchStatus::NotFound;
    return outcome;
}

auto enumerate_grid_placements(const Graph & g, const LineConfig & lines, const SearchBudget & budget,
    const std::function<bool(const Placement &)> & visit) -> SearchOutcome
{
    guard(g, max_grid_vertices, "enumerate_grid_placements");
    budget.validate();
    SearchOutcome outcome;
    if (lines.line_count() == 0 && g.size() > 0)
        return outcome;

    Grid grid(lines, budget);
    Shared shared;
    shared.max_nodes = budget.max_nodes;
    GridSearch search(g, grid, shared, true);
    search.on_complete = [&](const std::vector<Choice> & choice) {
        auto placement = to_placement(grid, choice);
        if (! verify_realization(g, lines, placement).valid())
            throw std::logic_error("grid enumeration produced an invalid placement");
        ++outcome.visited;
        if (! outcome.placement)
            outcome.placement = placement;
        return ! visit(placement);
    };
    search.run(0);
    outcome.nodes = shared.nodes.load();
    if (shared.exhausted.load())
        outcome.status = SearchStatus::Exhausted;
    else
        outcome.status = outcome.visited > 0 ? SearchStatus::Found : SearchStatus::NotFound;
    return outcome;
}

}
