#include "apud/io.hpp"

#include <sstream>

namespace apud {

namespace {

    auto rational_from(const Json & j) -> Rational
    {
        if (j.is_string())
            return Rational::parse(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<std::int64_t>());
        throw RejectedInput("expected a rational as \"num/den\" string");
    }

    auto side_text(Side s) -> const char * { return s == Side::Left ? "L" : "R"; }
    auto half_text(Half h) -> const char * { return h == Half::Top ? "top" : "bottom"; }
    auto part_text(EndPart p) -> const char *
    {
        switch (p) {
        case EndPart::Left: return "left";
        case EndPart::Right: return "right";
        case EndPart::Cap: return "cap";
        }
        return "?";
    }

    auto side_from(const Json & j) -> Side
    {
        auto s = j.get<std::string>();
        if (s == "L")
            return Side::Left;
        if (s == "R")
            return Side::Right;
        throw RejectedInput("side must be \"L\" or \"R\"");
    }

    auto half_from(const Json & j) -> Half
    {
        auto s = j.get<std::string>();
        if (s == "top")
            return Half::Top;
        if (s == "bottom")
            return Half::Bottom;
        throw RejectedInput("half must be \"top\" or \"bottom\"");
    }

    auto part_from(const Json & j) -> EndPart
    {
        auto s = j.get<std::string>();
        if (s == "left")
            return EndPart::Left;
        if (s == "right")
            return EndPart::Right;
        if (s == "cap")
            return EndPart::Cap;
        throw RejectedInput("end part must be left, right or cap");
    }

    // Runs a decoder, converting JSON type errors and bad values into ParseError.
    template <typename F>
    auto decoding(const char * what, F && f)
    {
        try {
            return f();
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const std::exception & e) {
            throw ParseError(1, std::string("invalid ") + what + ": " + e.what());
        }
    }

}

auto graph_to_text(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << "graph " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto graph_to_json(const Graph & g) -> Json
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({ u, v });
    return Json{ { "n", g.size() }, { "edges", std::move(edges) } };
}

auto graph_from_json(const Json & j) -> Graph
{
    return decoding("graph", [&] {
        std::vector<Edge> edges;
        for (const auto & e : j.at("edges")) {
            if (! e.is_array() || e.size() != 2)
                throw RejectedInput("edge must be a [u, v] pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph::from_edges(j.at("n").get<int>(), edges);
    });
}

auto parse_graph(const std::string & text) -> Graph
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw ParseError(1, "empty graph input");
    if (text[first] == '{')
        return graph_from_json(parse_json(text));

    std::istringstream in(text);
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;)
            tokens.push_back(t);
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        auto number = [&](const std::string & t) -> long long {
            try {
                std::size_t used = 0;
                long long v = std::stoll(t, &used);
                if (used == t.size())
                    return v;
            }
            catch (const std::exception &) {
            }
            throw ParseError(line_no, "expected an integer, got '" + t + "'");
        };
        if (! have_header) {
            if (tokens.size() != 3 || tokens[0] != "graph")
                throw ParseError(line_no, "expected header 'graph <n> <m>'");
            n = number(tokens[1]);
            m = number(tokens[2]);
            if (n < 0 || m < 0 || n > 10'000'000)
                throw ParseError(line_no, "header counts out of range");
            have_header = true;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(line_no, "edge line must hold exactly two vertices");
        long long u = number(tokens[0]), v = number(tokens[1]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line_no, "edge endpoint out of range");
        if (u == v)
            throw ParseError(line_no, "self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (! have_header)
        throw ParseError(1, "missing header 'graph <n> <m>'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    }
    catch (const RejectedInput & e) {
        throw ParseError(line_no, e.what());
    }
}

auto lines_to_json(const LineConfig & lines) -> Json
{
    Json h = Json::array(), v = Json::array();
    for (const auto & y : lines.horizontals())
        h.push_back(y.str());
    for (const auto & x : lines.verticals())
        v.push_back(x.str());
    return Json{ { "H", std::move(h) }, { "V", std::move(v) } };
}

auto lines_from_json(const Json & j) -> LineConfig
{
    return decoding("line config", [&] {
        std::vector<Rational> h, v;
        for (const auto & y : j.at("H"))
            h.push_back(rational_from(y));
        for (const auto & x : j.at("V"))
            v.push_back(rational_from(x));
        return LineConfig(std::move(h), std::move(v));
    });
}

auto placement_to_json(const Placement & p) -> Json
{
    Json points = Json::object(), assignment = Json::object();
    for (const auto & [v, pt] : p.points) {
        Json coords = { pt.x.str(), pt.y.str() };
        if (pt.z != 0)
            coords.push_back(pt.z.str());
        points[std::to_string(v)] = std::move(coords);
    }
    for (const auto & [v, line] : p.assignment)
        assignment[std::to_string(v)] = Json{ { "axis", line.axis == Axis::Horizontal ? "H" : "V" }, { "index", line.index } };
    return Json{ { "points", std::move(points) }, { "assignment", std::move(assignment) } };
}

auto placement_from_json(const Json & j) -> Placement
{
    return decoding("placement", [&] {
        Placement p;
        auto vertex = [](const std::string & key) {
            std::size_t used = 0;
            int v = std::stoi(key, &used);
            if (used != key.size() || v < 0)
                throw RejectedInput("bad vertex key '" + key + "'");
            return v;
        };
        for (const auto & [key, coords] : j.at("points").items()) {
            if (! coords.is_array() || coords.size() < 2 || coords.size() > 3)
                throw RejectedInput("point must be [x, y] or [x, y, z]");
            Point pt{ rational_from(coords[0]), rational_from(coords[1]) };
            if (coords.size() == 3)
                pt.z = rational_from(coords[2]);
            p.points.emplace(vertex(key), std::move(pt));
        }
        if (j.contains("assignment"))
            for (const auto & [key, line] : j.at("assignment").items()) {
                auto axis = line.at("axis").get<std::string>();
                if (axis != "H" && axis != "V")
                    throw RejectedInput("axis must be \"H\" or \"V\"");
                p.assignment.emplace(vertex(key), LineId{ axis == "H" ? Axis::Horizontal : Axis::Vertical, line.at("index").get<int>() });
            }
        return p;
    });
}

auto role_to_json(const Role & r) -> Json
{
    return std::visit(
        [](const auto & x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SidePathRole>)
                return { { "kind", "side_path" }, { "side", side_text(x.side) }, { "slot", x.slot } };
            else if constexpr (std::is_same_v<T, LiteralPathRole>)
                return { { "kind", "literal_path" }, { "literal", x.literal }, { "slot", x.slot } };
            else if constexpr (std::is_same_v<T, AlphaLinkRole>)
                return { { "kind", "alpha_link" }, { "link", x.link } };
            else if constexpr (std::is_same_v<T, DiamondTipRole>)
                return { { "kind", "diamond_tip" }, { "side", side_text(x.side) }, { "clause", x.clause }, { "half", half_text(x.half) }, { "outer", x.outer } };
            else if constexpr (std::is_same_v<T, EndCycleRole>)
                return { { "kind", "end_cycle" }, { "literal", x.literal }, { "half", half_text(x.half) }, { "level", x.level }, { "part", part_text(x.part) } };
            else
                return { { "kind", "flag" }, { "literal", x.literal }, { "clause", x.clause }, { "half", half_text(x.half) } };
        },
        r);
}

auto role_from_json(const Json & j) -> Role
{
    return decoding("role", [&]() -> Role {
        auto kind = j.at("kind").get<std::string>();
        if (kind == "side_path")
            return SidePathRole{ side_from(j.at("side")), j.at("slot").get<int>() };
        if (kind == "literal_path")
            return LiteralPathRole{ j.at("literal").get<int>(), j.at("slot").get<int>() };
        if (kind == "alpha_link")
            return AlphaLinkRole{ j.at("link").get<int>() };
        if (kind == "diamond_tip")
            return DiamondTipRole{ side_from(j.at("side")), j.at("clause").get<int>(), half_from(j.at("half")), j.at("outer").get<bool>() };
        if (kind == "end_cycle")
            return EndCycleRole{ j.at("literal").get<int>(), half_from(j.at("half")), j.at("level").get<int>(), part_from(j.at("part")) };
        if (kind == "flag")
            return FlagRole{ j.at("literal").get<int>(), j.at("clause").get<int>(), half_from(j.at("half")) };
        throw RejectedInput("unknown role kind '" + kind + "'");
    });
}

auto profile_to_json(const LayoutProfile & p) -> Json
{
    return Json{
        { "epsilon", p.epsilon.str() },
        { "literal_pitch", p.literal_pitch.str() },
        { "clause_pitch", p.clause_pitch.str() },
        { "first_clause", p.first_clause.str() },
        { "straddle", p.straddle.str() },
        { "side_straddle", p.side_straddle.str() },
        { "hub_offset", p.hub_offset.str() },
        { "diamond_offset", p.diamond_offset.str() },
        { "flag_offset", p.flag_offset.str() },
        { "end_gap", p.end_gap.str() },
        { "cap_height", p.cap_height.str() },
        { "end_pitch", p.end_pitch.str() },
    };
}

auto profile_from_json(const Json & j) -> LayoutProfile
{
    return decoding("layout profile", [&] {
        LayoutProfile p;
        p.epsilon = rational_from(j.at("epsilon"));
        p.literal_pitch = rational_from(j.at("literal_pitch"));
        p.clause_pitch = rational_from(j.at("clause_pitch"));
        p.first_clause = rational_from(j.at("first_clause"));
        p.straddle = rational_from(j.at("straddle"));
        p.side_straddle = rational_from(j.at("side_straddle"));
        p.hub_offset = rational_from(j.at("hub_offset"));
        p.diamond_offset = rational_from(j.at("diamond_offset"));
        p.flag_offset = rational_from(j.at("flag_offset"));
        p.end_gap = rational_from(j.at("end_gap"));
        p.cap_height = rational_from(j.at("cap_height"));
        p.end_pitch = rational_from(j.at("end_pitch"));
        return p;
    });
}

auto instance_to_json(const ReductionInstance & inst) -> Json
{
    Json roles = Json::array();
    for (const auto & r : inst.roles)
        roles.push_back(role_to_json(r));
    Json params{
        { "n", inst.literals },
        { "m", inst.clauses },
        { "end_levels", inst.end_levels },
        { "profile", profile_to_json(inst.profile) },
    };
    if (inst.formula) {
        Json clauses = Json::array();
        for (const auto & c : inst.formula->clauses)
            clauses.push_back({ c[0], c[1], c[2] });
        params["formula"] = Json{ { "n", inst.formula->variables }, { "clauses", std::move(clauses) } };
    }
    else
        params["formula"] = nullptr;
    return Json{
        { "graph", graph_to_json(inst.graph) },
        { "lines", lines_to_json(inst.lines) },
        { "roles", std::move(roles) },
        { "params", std::move(params) },
    };
}

auto instance_from_json(const Json & j) -> ReductionInstance
{
    return decoding("instance bundle", [&] {
        ReductionInstance inst;
        inst.graph = graph_from_json(j.at("graph"));
        inst.lines = lines_from_json(j.at("lines"));
        for (const auto & r : j.at("roles"))
            inst.roles.push_back(role_from_json(r));
        const auto & params = j.at("params");
        inst.literals = params.at("n").get<int>();
        inst.clauses = params.at("m").get<int>();
        inst.end_levels = params.at("end_levels").get<int>();
        inst.profile = profile_from_json(params.at("profile"));
        if (params.contains("formula") && ! params.at("formula").is_null()) {
            NaeFormula f;
            f.variables = params.at("formula").at("n").get<int>();
            for (const auto & c : params.at("formula").at("clauses"))
                f.clauses.push_back({ c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>() });
            f.validate();
            inst.formula = std::move(f);
        }
        if (static_cast<int>(inst.roles.size()) != inst.graph.size())
            throw RejectedInput("role count does not match vertex count");
        return inst;
    });
}

auto verification_to_json(const VerificationReport & r) -> Json
{
    Json lines = Json::array(), missing = Json::array(), excess = Json::array();
    for (const auto & v : r.line_violations)
        lines.push_back(Json{ { "vertex", v.vertex }, { "reason", v.reason } });
    for (auto [u, v] : r.missing_edges)
        missing.push_back({ u, v });
    for (auto [u, v] : r.excess_edges)
        excess.push_back({ u, v });
    return Json{
        { "valid", r.valid() },
        { "line_violations", std::move(lines) },
        { "missing_edges", std::move(missing) },
        { "excess_edges", std::move(excess) },
    };
}

auto occurrence_to_json(const Occurrence & o) -> Json
{
    return Json{ { "pattern", o.pattern.name() }, { "vertices", o.vertices } };
}

auto obstruction_report_to_json(const ObstructionReport & r) -> Json
{
    Json found = Json::array();
    for (const auto & o : r.found)
        found.push_back(occurrence_to_json(o));
    return Json{ { "verdict", verdict_name(r.verdict) }, { "found", std::move(found) } };
}

auto search_outcome_to_json(const SearchOutcome & o, const SearchBudget & budget) -> Json
{
    Json j{
        { "status", search_status_name(o.status) },
        { "budget", Json{ { "step", budget.step.str() }, { "window", budget.window.str() }, { "max_nodes", budget.max_nodes } } },
        { "nodes", o.nodes },
    };
    j["placement"] = o.placement ? placement_to_json(*o.placement) : Json(nullptr);
    return j;
}

auto assignment_to_json(const Assignment & a) -> Json
{
    Json values = Json::array();
    for (bool v : a.values)
        values.push_back(v ? 1 : 0);
    return values;
}

auto parse_json(const std::string & text) -> Json
{
    try {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        int line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n')
                ++line;
        throw ParseError(line, std::string("malformed JSON: ") + e.what());
    }
}

auto dump(const Json & j) -> std::string
{
    return j.dump(2) + "\n";
}

}
