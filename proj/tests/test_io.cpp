#include "apud/io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace apud;
using namespace apud::test;

namespace {

auto parse_error_line(const std::string & text) -> int
{
    try {
        parse_graph(text);
    }
    catch (const ParseError & e) {
        return e.line();
    }
    return 0;
}

auto sample_formula() -> ReductionInstance
{
    return reduce(parse_nae3sat("p nae 4 3\n1 3 4\n1 2 4\n1 2 3\n"), LayoutProfile::standard());
}

}

TEST_CASE("graph text and JSON forms round-trip")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(trial % 9, 0.4, rng);
        CHECK(parse_graph(graph_to_text(g)) == g);
        CHECK(parse_graph(dump(graph_to_json(g))) == g);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    CHECK(graph_to_text(path_graph(3)) == "graph 3 2\n0 1\n1 2\n");
    CHECK(parse_graph("# comment\ngraph 2 1\n\n0 1\n") == path_graph(2));
}

TEST_CASE("graph parse errors")
{
    CHECK(parse_error_line("graph 2 1\n0 2\n") == 2);
    CHECK(parse_error_line("graph 2 1\n0 0\n") == 2);
    CHECK(parse_error_line("graph 3 2\n0 1\n0 1\n") == 3);
    CHECK(parse_error_line("graph 2 2\n0 1\n") > 0);
    CHECK(parse_error_line("edges 2\n") == 1);
    CHECK(parse_error_line("{\"n\": 2,\n \"edges\": [[0, 5]]}") > 0);
    CHECK(parse_error_line("{\"n\": 2,\n") == 2);
}

TEST_CASE("lines and placements round-trip exactly")
{
    LineConfig lines({ Rational(-7, 3), Rational(0), Rational(11, 10) }, { Rational(1, 1000) });
    CHECK(lines_from_json(lines_to_json(lines)) == lines);
    CHECK(lines_from_json(parse_json(dump(lines_to_json(LineConfig())))) == LineConfig());

    Placement p;
    p.place(0, { Rational(1, 3), Rational(-7, 3) }, LineId{ Axis::Horizontal, 0 });
    p.place(4, { Rational(1, 1000), Rational(22, 7) }, LineId{ Axis::Vertical, 0 });
    p.place(2, { Rational(0), Rational(0), Rational(9, 10) }, LineId{ Axis::Horizontal, 1 });
    CHECK(placement_from_json(parse_json(dump(placement_to_json(p)))) == p);

    CHECK_THROWS_AS(lines_from_json(parse_json("{\"horizontals\": [\"1/0\"], \"verticals\": []}")), ParseError);
    CHECK_THROWS_AS(lines_from_json(parse_json("{\"horizontals\": [\"1\", \"1\"], \"verticals\": []}")), ParseError);
}

TEST_CASE("every role kind round-trips")
{
    auto inst = reduce(parse_nae3sat("p nae 3 2\n1 2 3\n1 2 3\n"), LayoutProfile::standard());
    std::set<std::size_t> kinds;
    for (const auto & r : inst.roles) {
        kinds.insert(r.index());
        CHECK(role_from_json(role_to_json(r)) == r);
    }
    CHECK(kinds.size() == 6);
    CHECK_THROWS_AS(role_from_json(parse_json("{\"kind\": \"hinge\"}")), ParseError);
}

TEST_CASE("instances round-trip")
{
    auto inst = sample_formula();
    auto back = instance_from_json(parse_json(dump(instance_to_json(inst))));
    CHECK(back.graph == inst.graph);
    CHECK(back.lines == inst.lines);
    CHECK(back.roles == inst.roles);
    CHECK(back.literals == inst.literals);
    CHECK(back.clauses == inst.clauses);
    CHECK(back.end_levels == inst.end_levels);
    CHECK(back.profile == inst.profile);
    CHECK(back.formula == inst.formula);

    auto skeleton = skeleton_instance(2, 1, LayoutProfile::standard());
    CHECK_FALSE(instance_from_json(instance_to_json(skeleton)).formula.has_value());

    auto profile = LayoutProfile::for_epsilon(Rational(1, 7));
    CHECK(profile_from_json(profile_to_json(profile)) == profile);
}

TEST_CASE("serialization is byte-stable")
{
    auto a = dump(instance_to_json(sample_formula()));
    auto b = dump(instance_to_json(sample_formula()));
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(dump(assignment_to_json(Assignment{ { true, false, true } })) == "[\n  1,\n  0,\n  1\n]\n");
}

TEST_CASE("reports")
{
    VerificationReport r;
    r.missing_edges = { { 0, 1 } };
    auto j = verification_to_json(r);
    CHECK(j.at("valid") == false);

    SearchBudget budget;
    SearchOutcome none;
    auto s = search_outcome_to_json(none, budget);
    CHECK(s.at("status") == "NotFound");
    CHECK(s.at("budget").at("step") == "1/20");
    CHECK(s.at("placement").is_null());

    auto report = apud11_obstructions(make_pattern(cycle(5)));
    auto o = obstruction_report_to_json(report);
    CHECK(o.at("verdict") == "NotInClass");
    CHECK(o.at("found").size() == 1);
}
