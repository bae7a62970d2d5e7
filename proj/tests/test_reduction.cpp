#include "apud/reduction.hpp"

#include <doctest.h>

#include <set>

using namespace apud;

namespace {

const char * sample_formula = "p nae 4 3\n1 3 4\n1 2 4\n1 2 3\n";
const char * fano = "p nae 7 7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";

auto parse_line_of(const std::string & text) -> int
{
    try {
        parse_nae3sat(text);
    }
    catch (const ParseError & e) {
        return e.line();
    }
    return 0;
}

template <typename R>
auto count_roles(const std::vector<Role> & roles) -> int
{
    return static_cast<int>(std::count_if(roles.begin(), roles.end(), [](const Role & r) { return std::holds_alternative<R>(r); }));
}

auto count_flags(const std::vector<Role> & roles, Half half) -> int
{
    int c = 0;
    for (const auto & r : roles)
        if (auto f = std::get_if<FlagRole>(&r))
            c += f->half == half;
    return c;
}

// Closed form for the vertex count, frozen from the verified generator.
auto expected_vertices(int n, int m, bool flags) -> int
{
    int levels = n == 2 * m ? 2 : 1;
    int v = 2 * (4 * m + 1) + n * (4 * m + 5) + (n + 1) + 8 * m + 6 * n * levels;
    return flags ? v + 2 * n * m - 3 * m : v;
}

auto all_assignments(int n) -> std::vector<Assignment>
{
    std::vector<Assignment> out;
    for (unsigned code = 0; code < (1u << n); ++code) {
        Assignment a;
        for (int i = 0; i < n; ++i)
            a.values.push_back(code >> i & 1u);
        out.push_back(a);
    }
    return out;
}

}

TEST_CASE("parse formulas")
{
    auto f = parse_nae3sat("p nae 3 1\n1 2 3");
    CHECK(f.variables == 3);
    CHECK(f.clauses == std::vector<std::array<int, 3>>{ { 0, 1, 2 } });

    auto g = parse_nae3sat(sample_formula);
    CHECK(g.variables == 4);
    CHECK(g.clauses == std::vector<std::array<int, 3>>{ { 0, 2, 3 }, { 0, 1, 3 }, { 0, 1, 2 } });

    auto h = parse_nae3sat("c comment\n\np nae 3 1\nc another\n3 1 2\n");
    CHECK(h.clauses[0] == std::array<int, 3>{ 2, 0, 1 });

    CHECK(parse_nae3sat(format_nae3sat(g)) == g);
}

TEST_CASE("formula parse errors carry line numbers")
{
    CHECK(parse_line_of("p nae 3 1\n1 2") == 2);
    CHECK(parse_line_of("p nae 3 1\n1 -2 3") == 2);
    CHECK(parse_line_of("p nae 3 1\n1 2 4") == 2);
    CHECK(parse_line_of("p nae 3 1\n1 1 2") == 2);
    CHECK(parse_line_of("p nae 3 2\n1 2 3\n") >= 2);
    CHECK(parse_line_of("1 2 3\n") == 1);
    CHECK(parse_line_of("") == 1);
    CHECK(parse_line_of("p nae 3 1\n1 2 3\n1 2 3\n") == 3);
    CHECK(parse_line_of("p cnf 3 1\n1 2 3\n") == 1);
}

TEST_CASE("NAE brute force")
{
    auto single = parse_nae3sat("p nae 3 1\n1 2 3");
    auto a = solve_nae_bruteforce(single);
    REQUIRE(a);
    CHECK(a->values == std::vector<bool>{ true, false, false });

    CHECK_FALSE(solve_nae_bruteforce(parse_nae3sat(fano)));

    auto sample = parse_nae3sat(sample_formula);
    auto b = solve_nae_bruteforce(sample);
    REQUIRE(b);
    CHECK(is_nae_satisfying(sample, *b));

    NaeFormula big;
    big.variables = 25;
    big.clauses = { { 0, 1, 2 } };
    CHECK_THROWS_AS(solve_nae_bruteforce(big), RejectedInput);
}

TEST_CASE("brute force returns the lowest satisfying code; solutions are complement closed")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 3 + static_cast<int>(seed % 5);
        auto f = random_nae_formula(n, 1 + static_cast<int>(seed % 7), seed);
        std::optional<Assignment> lowest;
        for (const auto & a : all_assignments(n)) {
            bool ok = true;
            for (const auto & c : f.clauses) {
                int t = a.values[c[0]] + a.values[c[1]] + a.values[c[2]];
                ok = ok && t != 0 && t != 3;
            }
            if (ok && ! lowest)
                lowest = a;
            Assignment flipped = a;
            flipped.values.flip();
            CHECK(is_nae_satisfying(f, a) == is_nae_satisfying(f, flipped));
        }
        CHECK(solve_nae_bruteforce(f) == lowest);
    }
}

TEST_CASE("random formulas are reproducible")
{
    CHECK(random_nae_formula(5, 4, 99) == random_nae_formula(5, 4, 99));
    auto corpus = nae_corpus(50, 5, 4);
    CHECK(corpus.size() == 50);
    CHECK(corpus == nae_corpus(50, 5, 4));
    for (const auto & f : corpus) {
        CHECK(f.variables >= 3);
        CHECK(f.variables <= 5);
        CHECK(f.clauses.size() >= 1);
        CHECK(f.clauses.size() <= 4);
        CHECK_NOTHROW(f.validate());
    }
    CHECK_THROWS_AS(random_nae_formula(2, 1, 1), RejectedInput);
}

TEST_CASE("line frame")
{
    auto p = LayoutProfile::standard();
    CHECK(p.epsilon == Rational(1, 10));
    auto lines = build_lines(4, 3, p);
    std::vector<Rational> xs;
    for (int k : { 0, 39, 78, 117, 156, 195 })
        xs.push_back(Rational(k, 10));
    CHECK(lines.verticals() == xs);

    auto small = build_lines(1, 1, p);
    CHECK(small.verticals().size() == 3);
    CHECK(small.horizontals().size() == 5);

    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 4; ++m) {
            auto l = build_lines(n, m, p);
            CHECK(l.verticals().size() == static_cast<std::size_t>(n + 2));
            int extra = n == 2 * m ? 2 : 0;
            CHECK(l.horizontals().size() == static_cast<std::size_t>(2 * m + 3 + extra));
            for (const auto & y : l.horizontals())
                CHECK(l.find_horizontal(-y).has_value());
            // Uniform clause pitch.
            for (int j = 1; j < m; ++j)
                CHECK(clause_height(p, j) - clause_height(p, j - 1) == p.clause_pitch);
        }
    CHECK_THROWS_AS(build_lines(0, 1, p), RejectedInput);
    CHECK_THROWS_AS(build_lines(1, 0, p), RejectedInput);
}

TEST_CASE("skeleton structure")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            auto s = build_skeleton(n, m);
            REQUIRE(s.roles.size() == static_cast<std::size_t>(s.graph.size()));
            CHECK(s.graph.size() == expected_vertices(n, m, false));
            CHECK(count_roles<AlphaLinkRole>(s.roles) == n + 1);
            CHECK(count_roles<DiamondTipRole>(s.roles) == 8 * m);
            CHECK(count_roles<FlagRole>(s.roles) == 0);
            CHECK(s.graph.is_connected());

            // Diamonds hang on the frame paths, 2m per side.
            int per_side[2] = { 0, 0 };
            for (const auto & o : find_induced(s.graph, diamond())) {
                std::set<int> sides;
                for (int v : o.vertices)
                    if (auto r = std::get_if<SidePathRole>(&s.roles[v]))
                        sides.insert(static_cast<int>(r->side));
                REQUIRE(sides.size() == 1);
                ++per_side[*sides.begin()];
            }
            CHECK(per_side[0] == 2 * m);
            CHECK(per_side[1] == 2 * m);

            // One induced 4-star per literal hub. Stacked end cycles add one
            // more at each cap that carries a further level.
            int hub_stars = 0, cap_stars = 0;
            for (const auto & o : find_induced(s.graph, star(4))) {
                const auto & centre = s.roles[o.vertices[0]];
                if (auto r = std::get_if<LiteralPathRole>(&centre))
                    hub_stars += r->slot == 0;
                else if (auto e = std::get_if<EndCycleRole>(&centre))
                    cap_stars += e->part == EndPart::Cap && e->level + 1 < s.end_levels;
                else
                    FAIL("4-star centred on " << role_name(centre));
            }
            CHECK(hub_stars == n);
            CHECK(cap_stars == 2 * n * (s.end_levels - 1));

            // End 4-cycles at both ends of every literal path.
            int end_cycles = 0;
            for (const auto & o : find_induced(s.graph, cycle(4))) {
                bool has_cap = false;
                for (int v : o.vertices)
                    if (auto r = std::get_if<EndCycleRole>(&s.roles[v]))
                        has_cap = has_cap || r->part == EndPart::Cap;
                end_cycles += has_cap;
            }
            CHECK(end_cycles == 2 * n * s.end_levels);
            CHECK(longest_cycle_at_most(s.graph, 4));
        }
}

TEST_CASE("sample formula instance snapshot")
{
    auto inst = reduce(parse_nae3sat(sample_formula), LayoutProfile::standard());
    CHECK(inst.graph.size() == 162);
    CHECK(inst.graph.edge_count() == 208);
    CHECK(inst.lines.verticals().size() == 6);
    CHECK(inst.lines.horizontals().size() == 9);
    CHECK(count_flags(inst.roles, Half::Bottom) == 12);
    CHECK(count_flags(inst.roles, Half::Top) == 3);
    CHECK(count_roles<SidePathRole>(inst.roles) == 26);
    CHECK(count_roles<LiteralPathRole>(inst.roles) == 68);
    CHECK(count_roles<EndCycleRole>(inst.roles) == 24);
    CHECK(longest_cycle_at_most(inst.graph, 4));
    CHECK(role_name(inst.roles[0]) == "path_L[-6]");
}

TEST_CASE("flags mark absent literals")
{
    auto f = parse_nae3sat(sample_formula);
    auto s = attach_flags(build_skeleton(4, 3), f);
    std::set<std::pair<int, int>> top;
    for (int v = 0; v < s.graph.size(); ++v) {
        auto flag = std::get_if<FlagRole>(&s.roles[v]);
        if (! flag)
            continue;
        if (flag->half == Half::Top)
            top.insert({ flag->literal, flag->clause });
        // A flag forms a triangle with two consecutive path vertices.
        REQUIRE(s.graph.degree(v) == 2);
        int a = s.graph.neighbours(v)[0], b = s.graph.neighbours(v)[1];
        auto ra = std::get_if<LiteralPathRole>(&s.roles[a]), rb = std::get_if<LiteralPathRole>(&s.roles[b]);
        REQUIRE(ra);
        REQUIRE(rb);
        CHECK(ra->literal == flag->literal);
        CHECK(rb->literal == flag->literal);
        CHECK(std::abs(ra->slot - rb->slot) == 1);
        CHECK(s.graph.adjacent(a, b));
        CHECK((ra->slot > 0) == (flag->half == Half::Top));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) {
            const auto & c = f.clauses[j];
            bool present = c[0] == i || c[1] == i || c[2] == i;
            CHECK(top.count({ i, j }) == (present ? 0u : 1u));
        }

    auto single = attach_flags(build_skeleton(3, 1), parse_nae3sat("p nae 3 1\n1 2 3"));
    CHECK(count_flags(single.roles, Half::Bottom) == 3);
    CHECK(count_flags(single.roles, Half::Top) == 0);

    CHECK_THROWS_AS(attach_flags(build_skeleton(4, 2), f), RejectedInput);
}

TEST_CASE("reduction is deterministic")
{
    auto f = parse_nae3sat(sample_formula);
    auto a = reduce(f, LayoutProfile::standard());
    auto b = reduce(f, LayoutProfile::standard());
    CHECK(a.graph == b.graph);
    CHECK(a.lines == b.lines);
    CHECK(a.roles == b.roles);
}

TEST_CASE("layout profile validation")
{
    CHECK_NOTHROW(validate_profile(LayoutProfile::standard()));
    CHECK_NOTHROW(validate_profile(LayoutProfile::for_epsilon(Rational(1, 20))));
    CHECK_THROWS_AS(validate_profile(LayoutProfile::for_epsilon(Rational(0))), RejectedInput);
    CHECK_THROWS_AS(validate_profile(LayoutProfile::for_epsilon(Rational(1))), RejectedInput);
    auto squeezed = LayoutProfile::standard();
    squeezed.literal_pitch = 2;
    CHECK_THROWS_AS(validate_profile(squeezed), RejectedInput);
}

TEST_CASE("witness embedding for every satisfying assignment of the sample formula")
{
    auto f = parse_nae3sat(sample_formula);
    auto inst = reduce(f, LayoutProfile::standard());
    int satisfying = 0;
    for (const auto & a : all_assignments(4)) {
        if (! is_nae_satisfying(f, a)) {
            CHECK_THROWS_AS(witness_layout(inst, a), RejectedInput);
            continue;
        }
        ++satisfying;
        auto p = witness_embedding(inst, a);
        CHECK(verify_realization(inst.graph, inst.lines, p).valid());
    }
    CHECK(satisfying == 8);
    CHECK_THROWS_AS(witness_embedding(inst, Assignment{ { true, false } }), RejectedInput);
}

TEST_CASE("witness truth encoding: false literals are flipped")
{
    auto f = parse_nae3sat(sample_formula);
    auto inst = reduce(f, LayoutProfile::standard());
    auto a = *solve_nae_bruteforce(f);
    auto p = witness_embedding(inst, a);
    Assignment complement = a;
    complement.values.flip();
    auto q = witness_embedding(inst, complement);
    for (int v = 0; v < inst.graph.size(); ++v)
        if (auto r = std::get_if<LiteralPathRole>(&inst.roles[v])) {
            if (r->slot == 0)
                continue;
            int up = p.points.at(v).y.sign() * (r->slot > 0 ? 1 : -1);
            CHECK(up == (a.values[r->literal] ? 1 : -1));
            CHECK(q.points.at(v).y == -p.points.at(v).y);
        }
}

TEST_CASE("skeleton instances realize with the all-true assignment")
{
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 4; ++m) {
            auto inst = skeleton_instance(n, m, LayoutProfile::standard());
            CHECK_FALSE(inst.formula.has_value());
            Assignment all_true{ std::vector<bool>(n, true) };
            CHECK(verify_realization(inst.graph, inst.lines, witness_embedding(inst, all_true)).valid());
        }
}

TEST_CASE("witness embeddings on random formulas, including n = 2m")
{
    auto profile = LayoutProfile::standard();
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 3 + static_cast<int>(seed % 4);
        int m = n % 2 == 0 && seed % 3 == 0 ? n / 2 : 1 + static_cast<int>(seed % 4);
        auto f = random_nae_formula(n, m, seed);
        auto inst = reduce(f, profile);
        CHECK(inst.end_levels == (n == 2 * m ? 2 : 1));
        if (auto a = solve_nae_bruteforce(f))
            CHECK(verify_realization(inst.graph, inst.lines, witness_embedding(inst, *a)).valid());
    }
}

TEST_CASE("3D lift")
{
    auto k2 = Graph::from_edges(2, { { 0, 1 } });
    auto lift = lift_to_3d(k2);
    CHECK(lift.graph == Graph::from_edges(4, { { 0, 1 }, { 2, 3 }, { 0, 2 }, { 1, 3 } }));
    CHECK(lift.lower_plane == 0);
    CHECK(lift.upper_plane == Rational(9, 10));
    CHECK(lift_to_3d(Graph(1)).graph == Graph::from_edges(2, { { 0, 1 } }));
    auto empty = lift_to_3d(Graph(3)).graph;
    CHECK(empty.edge_count() == 3);
    for (int v = 0; v < 3; ++v)
        CHECK(empty.adjacent(v, v + 3));

    // Stacking a 2D realization of an independent set realizes its lift.
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i)
        pts.push_back({ Rational(3 * i), 0, lift.lower_plane });
    for (int i = 0; i < 3; ++i)
        pts.push_back({ Rational(3 * i), 0, lift.upper_plane });
    CHECK(verify_intersection_pattern(empty, pts).valid());
}

TEST_CASE("facing flags cannot share the gap between two literal lines")
{
    // With the path disks of the witness fixed, a disk on a clause line that
    // touches the straddling pair of one literal line and avoids the path
    // disks next to that pair must stay near its line: two such disks facing
    // each other across one gap always meet.
    auto f = parse_nae3sat(sample_formula);
    auto inst = reduce(f, LayoutProfile::standard());
    auto p = witness_embedding(inst, *solve_nae_bruteforce(f));
    const Rational step(1, 20);
    const auto & xs = inst.lines.verticals();

    // Candidate centres on the clause line at height h strictly between the
    // literal lines, that form a triangle with the straddling pair of literal i.
    auto candidates = [&](int literal, const Rational & h) {
        std::vector<std::pair<Rational, int>> column; // (y, vertex)
        for (int v = 0; v < inst.graph.size(); ++v)
            if (auto r = std::get_if<LiteralPathRole>(&inst.roles[v]); r && r->literal == literal)
                column.push_back({ p.points.at(v).y, v });
        std::sort(column.begin(), column.end());
        std::size_t above = 0;
        while (column[above].first < h)
            ++above;
        REQUIRE(above >= 2);
        REQUIRE(above + 1 < column.size());
        std::vector<int> touch{ column[above - 1].second, column[above].second };
        std::vector<int> avoid{ column[above - 2].second, column[above + 1].second };
        std::vector<Rational> out;
        Rational x_line = xs[literal + 1];
        for (Rational x = xs[literal] + step; x < xs[literal + 2]; x += step) {
            Point c{ x, h };
            bool ok = std::all_of(touch.begin(), touch.end(), [&](int v) { return disks_intersect(c, p.points.at(v)); })
                && std::none_of(avoid.begin(), avoid.end(), [&](int v) { return disks_intersect(c, p.points.at(v)); });
            if (ok)
                out.push_back(x - x_line);
        }
        return out;
    };

    int gaps = 0;
    for (int j = 0; j < inst.clauses; ++j)
        for (int sign : { -1, 1 }) {
            Rational h = clause_height(inst.profile, j) * Rational(sign);
            for (int i = 0; i + 1 < inst.literals; ++i) {
                auto left = candidates(i, h), right = candidates(i + 1, h);
                REQUIRE_FALSE(left.empty());
                REQUIRE_FALSE(right.empty());
                Rational reach_right = *std::max_element(left.begin(), left.end());
                Rational reach_left = *std::min_element(right.begin(), right.end());
                // Rightmost disk of the left line against the leftmost disk
                // of the right line.
                Point a{ xs[i + 1] + reach_right, h }, b{ xs[i + 2] + reach_left, h };
                CHECK(disks_intersect(a, b));
                ++gaps;
            }
        }
    CHECK(gaps == 2 * inst.clauses * (inst.literals - 1));
}
