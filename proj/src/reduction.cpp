#include "apud/reduction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace apud {

ParseError::ParseError(int line, const std::string & what) :
    std::runtime_error("line " + std::to_string(line) + ": " + what),
    _line(line)
{
}

auto NaeFormula::validate() const -> void
{
    if (variables < 0)
        throw RejectedInput("negative variable count");
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto & c = clauses[j];
        for (int v : c)
            if (v < 0 || v >= variables)
                throw RejectedInput("clause " + std::to_string(j + 1) + " names variable " + std::to_string(v + 1)
                    + " outside 1.." + std::to_string(variables));
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw RejectedInput("clause " + std::to_string(j + 1) + " repeats a variable");
    }
}

namespace {

    auto split_ws(const std::string & line) -> std::vector<std::string>
    {
        std::istringstream in(line);
        std::vector<std::string> tokens;
        for (std::string t; in >> t;)
            tokens.push_back(t);
        return tokens;
    }

    auto parse_int(const std::string & token, int line) -> long long
    {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        }
        catch (const std::exception &) {
            throw ParseError(line, "expected an integer, got '" + token + "'");
        }
        if (used != token.size())
            throw ParseError(line, "expected an integer, got '" + token + "'");
        return value;
    }

}

auto parse_nae3sat(const std::string & text) -> NaeFormula
{
    std::istringstream in(text);
    NaeFormula f;
    bool have_header = false;
    long long expected = 0;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == 'c')
            continue;
        if (! have_header) {
            if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "nae")
                throw ParseError(line_no, "expected header 'p nae <n> <m>'");
            long long n = parse_int(tokens[2], line_no);
            expected = parse_int(tokens[3], line_no);
            if (n < 0 || expected < 0 || n > 1'000'000 || expected > 1'000'000)
                throw ParseError(line_no, "header counts out of range");
            f.variables = static_cast<int>(n);
            have_header = true;
            continue;
        }
        if (tokens.size() != 3)
            throw ParseError(line_no, "clause must have exactly 3 literals, found " + std::to_string(tokens.size()));
        if (static_cast<long long>(f.clauses.size()) >= expected)
            throw ParseError(line_no, "more clauses than the header declares");
        std::array<int, 3> clause{};
        for (int k = 0; k < 3; ++k) {
            long long v = parse_int(tokens[k], line_no);
            if (v < 0)
                throw ParseError(line_no, "negated literal " + tokens[k] + " (only positive literals are allowed)");
            if (v == 0 || v > f.variables)
                throw ParseError(line_no, "variable " + tokens[k] + " outside 1.." + std::to_string(f.variables));
            clause[k] = static_cast<int>(v - 1);
        }
        if (clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2])
            throw ParseError(line_no, "clause repeats a variable");
        f.clauses.push_back(clause);
    }
    if (! have_header)
        throw ParseError(std::max(line_no, 1), "missing header 'p nae <n> <m>'");
    if (static_cast<long long>(f.clauses.size()) != expected)
        throw ParseError(line_no, "header declares " + std::to_string(expected) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

auto format_nae3sat(const NaeFormula & f) -> std::string
{
    std::ostringstream out;
    out << "p nae " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto & c : f.clauses)
        out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << '\n';
    return out.str();
}

auto first_violated_clause(const NaeFormula & f, const Assignment & a) -> std::optional<int>
{
    if (static_cast<int>(a.values.size()) != f.variables)
        throw RejectedInput("assignment has " + std::to_string(a.values.size()) + " values, formula has "
            + std::to_string(f.variables) + " variables");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto & c = f.clauses[j];
        bool first = a.values[c[0]];
        if (a.values[c[1]] == first && a.values[c[2]] == first)
            return static_cast<int>(j);
    }
    return std::nullopt;
}

auto is_nae_satisfying(const NaeFormula & f, const Assignment & a) -> bool
{
    return ! first_violated_clause(f, a).has_value();
}

auto solve_nae_bruteforce(const NaeFormula & f) -> std::optional<Assignment>
{
    f.validate();
    if (f.variables > max_bruteforce_variables)
        throw RejectedInput("brute force is limited to " + std::to_string(max_bruteforce_variables) + " variables");

    std::vector<std::uint32_t> masks;
    masks.reserve(f.clauses.size());
    for (const auto & c : f.clauses)
        masks.push_back((1u << c[0]) | (1u << c[1]) | (1u << c[2]));

    const std::uint64_t limit = std::uint64_t{ 1 } << f.variables;
    for (std::uint64_t code = 0; code < limit; ++code) {
        auto bits = static_cast<std::uint32_t>(code);
        bool ok = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) {
            auto on = bits & m;
            return on != 0 && on != m;
        });
        if (ok) {
            Assignment a;
            for (int i = 0; i < f.variables; ++i)
                a.values.push_back((bits >> i) & 1u);
            return a;
        }
    }
    return std::nullopt;
}

namespace {

    auto random_clause(std::mt19937_64 & rng, int variables) -> std::array<int, 3>
    {
        std::array<int, 3> c{};
        do {
            for (auto & x : c)
                x = static_cast<int>(rng() % static_cast<std::uint64_t>(variables));
        } while (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]);
        return c;
    }

}

auto random_nae_formula(int variables, int clauses, std::uint64_t seed) -> NaeFormula
{
    if (variables < 3 || clauses < 0)
        throw RejectedInput("random formulas need at least 3 variables");
    std::mt19937_64 rng(seed);
    NaeFormula f;
    f.variables = variables;
    for (int j = 0; j < clauses; ++j)
        f.clauses.push_back(random_clause(rng, variables));
    return f;
}

auto nae_corpus(int count, int max_variables, int max_clauses, std::uint64_t seed) -> std::vector<NaeFormula>
{
    if (max_variables < 3 || max_clauses < 1)
        throw RejectedInput("corpus needs max_variables >= 3 and max_clauses >= 1");
    std::mt19937_64 rng(seed);
    std::vector<NaeFormula> corpus;
    for (int i = 0; i < count; ++i) {
        NaeFormula f;
        f.variables = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_variables - 2));
        int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_clauses));
        for (int j = 0; j < m; ++j)
            f.clauses.push_back(random_clause(rng, f.variables));
        corpus.push_back(std::move(f));
    }
    return corpus;
}

auto LayoutProfile::for_epsilon(const Rational & epsilon) -> LayoutProfile
{
    LayoutProfile p;
    p.epsilon = epsilon;
    p.literal_pitch = Rational(4) - epsilon;
    p.clause_pitch = Rational(2) + epsilon;
    p.straddle = Rational(11, 20);
    p.side_straddle = Rational(3, 5) + epsilon;
    p.hub_offset = Rational(21, 20);
    p.first_clause = Rational(2) + epsilon + p.straddle;
    p.diamond_offset = Rational(3, 2);
    p.flag_offset = Rational(8, 5);
    p.end_gap = Rational(21, 20);
    p.cap_height = Rational(21, 20);
    p.end_pitch = Rational(2) + epsilon / Rational(4);
    return p;
}

auto end_levels_for(int literals, int clauses) -> int
{
    return literals == 2 * clauses ? 2 : 1;
}

auto clause_height(const LayoutProfile & profile, int clause) -> Rational
{
    return profile.first_clause + Rational(clause) * profile.clause_pitch;
}

namespace {

    auto literal_top(const LayoutProfile & profile, int clauses) -> Rational
    {
        return clause_height(profile, clauses - 1) + profile.clause_pitch - profile.straddle;
    }

    auto require_dimensions(int literals, int clauses) -> void
    {
        if (literals < 1 || clauses < 1)
            throw RejectedInput("need at least one literal and one clause (got n=" + std::to_string(literals)
                + ", m=" + std::to_string(clauses) + ")");
    }

    auto sign_of(Half h) -> int { return h == Half::Top ? 1 : -1; }

    auto opposite(Half h) -> Half { return h == Half::Top ? Half::Bottom : Half::Top; }

}

auto end_height(const LayoutProfile & profile, int clauses, int level) -> Rational
{
    return literal_top(profile, clauses) + profile.end_gap + Rational(level) * (profile.cap_height + profile.end_gap);
}

auto build_lines(int literals, int clauses, const LayoutProfile & profile) -> LineConfig
{
    require_dimensions(literals, clauses);
    std::vector<Rational> verticals;
    for (int i = 0; i <= literals + 1; ++i)
        verticals.push_back(Rational(i) * profile.literal_pitch);

    std::vector<Rational> horizontals{ Rational(0) };
    auto mirrored = [&](const Rational & y) {
        horizontals.push_back(y);
        horizontals.push_back(-y);
    };
    for (int j = 0; j < clauses; ++j)
        mirrored(clause_height(profile, j));
    for (int level = 0; level < end_levels_for(literals, clauses); ++level)
        mirrored(end_height(profile, clauses, level));
    return LineConfig(std::move(horizontals), std::move(verticals));
}

auto role_name(const Role & role) -> std::string
{
    auto side = [](Side s) { return s == Side::Left ? "L" : "R"; };
    auto half = [](Half h) { return h == Half::Top ? "top" : "bottom"; };
    return std::visit(
        [&](const auto & r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SidePathRole>)
                return std::string("path_") + side(r.side) + "[" + std::to_string(r.slot) + "]";
            else if constexpr (std::is_same_v<T, LiteralPathRole>)
                return "path_" + std::to_string(r.literal + 1) + "[" + std::to_string(r.slot) + "]";
            else if constexpr (std::is_same_v<T, AlphaLinkRole>)
                return "alpha_link[" + std::to_string(r.link) + "]";
            else if constexpr (std::is_same_v<T, DiamondTipRole>)
                return std::string("diamond_") + side(r.side) + "(" + std::to_string(r.clause + 1) + "," + half(r.half) + ","
                    + (r.outer ? "outer" : "inner") + ")";
            else if constexpr (std::is_same_v<T, EndCycleRole>)
                return "end_" + std::to_string(r.literal + 1) + "(" + half(r.half) + "," + std::to_string(r.level) + ","
                    + (r.part == EndPart::Left ? "left" : r.part == EndPart::Right ? "right" : "cap") + ")";
            else
                return "flag(" + std::to_string(r.literal + 1) + "," + std::to_string(r.clause + 1) + "," + half(r.half) + ")";
        },
        role);
}

namespace {

    // Slot layout shared by the graph builder and the witness.
    //   literal path: 0 hub, 1 hub neighbour, 2j / 2j+1 straddle clause j
    //                 (1-based j), 2m+2 top disk
    //   side path:    0 hub, 2j-1 / 2j straddle clause j
    auto literal_slots(int clauses) -> int { return 2 * clauses + 2; }
    auto side_slots(int clauses) -> int { return 2 * clauses; }

    class SkeletonBuilder
    {
    public:
        SkeletonBuilder(int literals, int clauses) :
            _n(literals), _m(clauses)
        {
            _s.literals = literals;
            _s.clauses = clauses;
            _s.end_levels = end_levels_for(literals, clauses);
        }

        auto build() -> Skeleton
        {
            auto side_path = [&](Side side) {
                std::vector<int> path;
                for (int slot = -side_slots(_m); slot <= side_slots(_m); ++slot)
                    path.push_back(add(SidePathRole{ side, slot }));
                chain(path);
                return path;
            };

            _left = side_path(Side::Left);
            for (int i = 0; i < _n; ++i) {
                std::vector<int> path;
                for (int slot = -literal_slots(_m); slot <= literal_slots(_m); ++slot)
                    path.push_back(add(LiteralPathRole{ i, slot }));
                chain(path);
                _literal.push_back(std::move(path));
            }
            _right = side_path(Side::Right);

            std::vector<int> hubs{ side_vertex(Side::Left, 0) };
            for (int i = 0; i < _n; ++i)
                hubs.push_back(literal_vertex(i, 0));
            hubs.push_back(side_vertex(Side::Right, 0));
            for (int k = 0; k <= _n; ++k) {
                int link = add(AlphaLinkRole{ k });
                _s.graph.add_edge(hubs[k], link);
                _s.graph.add_edge(link, hubs[k + 1]);
            }

            for (Side side : { Side::Left, Side::Right })
                for (Half half : { Half::Bottom, Half::Top })
                    for (int j = 0; j < _m; ++j)
                        for (bool outer : { true, false }) {
                            int tip = add(DiamondTipRole{ side, j, half, outer });
                            int below = sign_of(half) * (2 * j + 1), above = sign_of(half) * (2 * j + 2);
                            _s.graph.add_edge(tip, side_vertex(side, below));
                            _s.graph.add_edge(tip, side_vertex(side, above));
                        }

            for (int i = 0; i < _n; ++i)
                for (Half half : { Half::Bottom, Half::Top }) {
                    int anchor = literal_vertex(i, sign_of(half) * literal_slots(_m));
                    for (int level = 0; level < _s.end_levels; ++level) {
                        int left = add(EndCycleRole{ i, half, level, EndPart::Left });
                        int right = add(EndCycleRole{ i, half, level, EndPart::Right });
                        int cap = add(EndCycleRole{ i, half, level, EndPart::Cap });
                        for (int x : { left, right }) {
                            _s.graph.add_edge(anchor, x);
                            _s.graph.add_edge(x, cap);
                        }
                        anchor = cap;
                    }
                }
            return std::move(_s);
        }

    private:
        auto add(Role role) -> int
        {
            _s.roles.push_back(role);
            return _s.graph.add_vertex();
        }

        auto chain(const std::vector<int> & path) -> void
        {
            for (std::size_t k = 0; k + 1 < path.size(); ++k)
                _s.graph.add_edge(path[k], path[k + 1]);
        }

        auto side_vertex(Side side, int slot) const -> int
        {
            const auto & path = side == Side::Left ? _left : _right;
            return path.at(slot + side_slots(_m));
        }

        auto literal_vertex(int i, int slot) const -> int
        {
            return _literal.at(i).at(slot + literal_slots(_m));
        }

        int _n, _m;
        Skeleton _s;
        std::vector<int> _left, _right;
        std::vector<std::vector<int>> _literal;
    };

    auto find_literal_vertex(const Skeleton & s, int literal, int slot) -> int
    {
        // Literal path i occupies a contiguous block right after the left path.
        int base = 2 * side_slots(s.clauses) + 1 + literal * (2 * literal_slots(s.clauses) + 1);
        int v = base + slot + literal_slots(s.clauses);
        if (v < 0 || v >= static_cast<int>(s.roles.size()) || std::get<LiteralPathRole>(s.roles[v]) != LiteralPathRole{ literal, slot })
            throw std::logic_error("skeleton layout mismatch");
        return v;
    }

}

auto build_skeleton(int literals, int clauses) -> Skeleton
{
    require_dimensions(literals, clauses);
    return SkeletonBuilder(literals, clauses).build();
}

auto attach_flags(const Skeleton & skeleton, const NaeFormula & f) -> Skeleton
{
    f.validate();
    if (f.variables != skeleton.literals || static_cast<int>(f.clauses.size()) != skeleton.clauses)
        throw RejectedInput("formula has n=" + std::to_string(f.variables) + ", m=" + std::to_string(f.clauses.size())
            + " but the skeleton was built for n=" + std::to_string(skeleton.literals) + ", m=" + std::to_string(skeleton.clauses));
    if (skeleton.formula)
        throw RejectedInput("skeleton already carries flags");

    Skeleton result = skeleton;
    result.formula = f;
    for (int i = 0; i < f.variables; ++i)
        for (int j = 0; j < skeleton.clauses; ++j)
            for (Half half : { Half::Bottom, Half::Top }) {
                const auto & c = f.clauses[j];
                bool occurs = std::find(c.begin(), c.end(), i) != c.end();
                if (half == Half::Top && occurs)
                    continue;
                int below = find_literal_vertex(skeleton, i, sign_of(half) * (2 * j + 2));
                int above = find_literal_vertex(skeleton, i, sign_of(half) * (2 * j + 3));
                int flag = result.graph.add_vertex();
                result.roles.push_back(FlagRole{ i, j, half });
                result.graph.add_edge(flag, below);
                result.graph.add_edge(flag, above);
            }
    return result;
}

namespace {

    auto assemble(Skeleton s, const LayoutProfile & profile) -> ReductionInstance
    {
        ReductionInstance inst;
        inst.lines = build_lines(s.literals, s.clauses, profile);
        inst.graph = std::move(s.graph);
        inst.roles = std::move(s.roles);
        inst.literals = s.literals;
        inst.clauses = s.clauses;
        inst.end_levels = s.end_levels;
        inst.profile = profile;
        inst.formula = std::move(s.formula);
        return inst;
    }

    auto reduce_unchecked(const NaeFormula & f, const LayoutProfile & profile) -> ReductionInstance
    {
        f.validate();
        return assemble(attach_flags(build_skeleton(f.variables, static_cast<int>(f.clauses.size())), f), profile);
    }

}

auto validate_profile(const LayoutProfile & profile) -> void
{
    if (! (profile.epsilon > Rational(0) && profile.epsilon < Rational(1)))
        throw RejectedInput("epsilon must lie strictly between 0 and 1");
    NaeFormula probe{ 3, { { 0, 1, 2 } } };
    auto inst = reduce_unchecked(probe, profile);
    auto placement = witness_layout(inst, Assignment{ { true, false, false } });
    if (! verify_realization(inst.graph, inst.lines, placement).valid())
        throw RejectedInput("layout profile with epsilon " + profile.epsilon.str() + " fails its self-check");
}

auto reduce(const NaeFormula & f, const LayoutProfile & profile) -> ReductionInstance
{
    validate_profile(profile);
    return reduce_unchecked(f, profile);
}

auto skeleton_instance(int literals, int clauses, const LayoutProfile & profile) -> ReductionInstance
{
    validate_profile(profile);
    return assemble(build_skeleton(literals, clauses), profile);
}

namespace {

    class WitnessLayout
    {
    public:
        WitnessLayout(const ReductionInstance & inst, const Assignment & a) :
            _inst(inst), _p(inst.profile), _a(a), _n(inst.literals), _m(inst.clauses)
        {
            for (const auto & role : inst.roles)
                if (auto flag = std::get_if<FlagRole>(&role))
                    _flags.insert({ flag->literal, flag->clause, flag->half });
            choose_flag_sides();
        }

        auto place_all() -> Placement
        {
            Placement pl;
            for (int v = 0; v < static_cast<int>(_inst.roles.size()); ++v) {
                auto [point, line] = std::visit([&](const auto & r) { return place(r); }, _inst.roles[v]);
                pl.place(v, std::move(point), line);
            }
            return pl;
        }

    private:
        using Spot = std::pair<Point, LineId>;

        auto vertical_x(int hub) const -> Rational { return Rational(hub) * _p.literal_pitch; }
        auto literal_x(int i) const -> Rational { return vertical_x(i + 1); }
        auto side_x(Side s) const -> Rational { return s == Side::Left ? vertical_x(0) : vertical_x(_n + 1); }
        auto flip(int i) const -> int { return _a.values[i] ? 1 : -1; }

        auto on_vertical(const Rational & x, const Rational & y) const -> Spot
        {
            return { Point{ x, y }, _inst.lines.vertical(x) };
        }

        auto on_horizontal(const Rational & x, const Rational & y) const -> Spot
        {
            return { Point{ x, y }, _inst.lines.horizontal(y) };
        }

        auto literal_height(int slot) const -> Rational
        {
            int k = slot < 0 ? -slot : slot;
            Rational y;
            if (k == 0)
                y = 0;
            else if (k == 1)
                y = _p.hub_offset;
            else if (k == literal_slots(_m))
                y = literal_top(_p, _m);
            else
                y = clause_height(_p, k / 2 - 1) + (k % 2 == 0 ? -_p.straddle : _p.straddle);
            return slot < 0 ? -y : y;
        }

        auto side_height(int slot) const -> Rational
        {
            int k = slot < 0 ? -slot : slot;
            Rational y = 0;
            if (k > 0)
                y = clause_height(_p, (k - 1) / 2) + (k % 2 == 1 ? -_p.side_straddle : _p.side_straddle);
            return slot < 0 ? -y : y;
        }

        auto place(const SidePathRole & r) const -> Spot
        {
            if (r.slot == 0)
                return on_horizontal(side_x(r.side), 0);
            return on_vertical(side_x(r.side), side_height(r.slot));
        }

        auto place(const LiteralPathRole & r) const -> Spot
        {
            if (r.slot == 0)
                return on_horizontal(literal_x(r.literal), 0);
            return on_vertical(literal_x(r.literal), Rational(flip(r.literal)) * literal_height(r.slot));
        }

        auto place(const AlphaLinkRole & r) const -> Spot
        {
            return on_horizontal((vertical_x(r.link) + vertical_x(r.link + 1)) / Rational(2), 0);
        }

        auto place(const DiamondTipRole & r) const -> Spot
        {
            bool away_from_centre = r.outer;
            int direction = (r.side == Side::Left) == away_from_centre ? -1 : 1;
            Rational x = side_x(r.side) + Rational(direction) * _p.diamond_offset;
            return on_horizontal(x, Rational(sign_of(r.half)) * clause_height(_p, r.clause));
        }

        auto place(const EndCycleRole & r) const -> Spot
        {
            // End-line disks form one uniform row of pitch end_pitch across all
            // literals; each pair is shifted so the row drifts evenly about x_i.
            Rational drift = Rational(2) * _p.end_pitch - _p.literal_pitch;
            Rational shift = drift * (Rational(r.literal + 1) - Rational(_n + 1, 2));
            Rational x = literal_x(r.literal);
            Rational y = end_height(_p, _m, r.level);
            int sign = flip(r.literal) * sign_of(r.half);
            if (r.part == EndPart::Cap)
                return on_vertical(x, Rational(sign) * (y + _p.cap_height));
            Rational half_pitch = _p.end_pitch / Rational(2);
            x += shift + (r.part == EndPart::Left ? -half_pitch : half_pitch);
            return on_horizontal(x, Rational(sign) * y);
        }

        auto place(const FlagRole & r) const -> Spot
        {
            Half physical = _a.values[r.literal] ? r.half : opposite(r.half);
            int direction = _flag_direction.at({ r.literal, r.clause, physical });
            return on_horizontal(literal_x(r.literal) + Rational(direction) * _p.flag_offset,
                Rational(sign_of(physical)) * clause_height(_p, r.clause));
        }

        // On each clause line, flags left of the first missing flag point right
        // and flags after it point left, so every gap between consecutive
        // vertical lines holds at most one flag or diamond tip.
        auto choose_flag_sides() -> void
        {
            for (int j = 0; j < _m; ++j)
                for (Half physical : { Half::Bottom, Half::Top }) {
                    int missing = -1;
                    for (int i = 0; i < _n && missing < 0; ++i) {
                        Half graph_half = _a.values[i] ? physical : opposite(physical);
                        if (! _flags.count({ i, j, graph_half }))
                            missing = i;
                    }
                    if (missing < 0)
                        throw RejectedInput("assignment leaves no missing flag on clause line " + std::to_string(j + 1)
                            + (physical == Half::Top ? " (top)" : " (bottom)"));
                    for (int i = 0; i < _n; ++i)
                        _flag_direction[{ i, j, physical }] = i < missing ? 1 : -1;
                }
        }

        const ReductionInstance & _inst;
        const LayoutProfile & _p;
        const Assignment & _a;
        int _n, _m;
        std::set<std::tuple<int, int, Half>> _flags;
        std::map<std::tuple<int, int, Half>, int> _flag_direction;
    };

}

auto witness_layout(const ReductionInstance & instance, const Assignment & a) -> Placement
{
    if (static_cast<int>(a.values.size()) != instance.literals)
        throw RejectedInput("assignment has " + std::to_string(a.values.size()) + " values, instance has "
            + std::to_string(instance.literals) + " literals");
    if (instance.formula)
        if (auto bad = first_violated_clause(*instance.formula, a)) {
            const auto & c = instance.formula->clauses[*bad];
            throw RejectedInput("assignment is not NAE-satisfying: clause " + std::to_string(*bad + 1) + " ("
                + std::to_string(c[0] + 1) + " " + std::to_string(c[1] + 1) + " " + std::to_string(c[2] + 1)
                + ") has all literals " + (a.values[c[0]] ? "true" : "false"));
        }
    return WitnessLayout(instance, a).place_all();
}

auto witness_embedding(const ReductionInstance & instance, const Assignment & a) -> Placement
{
    auto placement = witness_layout(instance, a);
    auto report = verify_realization(instance.graph, instance.lines, placement);
    if (! report.valid()) {
        std::ostringstream msg;
        msg << "witness layout does not realize the instance: " << report.line_violations.size() << " line violations, "
            << report.missing_edges.size() << " missing edges, " << report.excess_edges.size() << " excess edges";
        throw LayoutError(msg.str());
    }
    return placement;
}

auto lift_to_3d(const Graph & g, const Rational & epsilon) -> Lift
{
    const int n = g.size();
    Graph lifted(2 * n);
    for (auto [u, v] : g.edges()) {
        lifted.add_edge(u, v);
        lifted.add_edge(u + n, v + n);
    }
    for (int v = 0; v < n; ++v)
        lifted.add_edge(v, v + n);
    return Lift{ std::move(lifted), Rational(0), Rational(1) - epsilon };
}

}
