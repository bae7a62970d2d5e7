#include "apud/cli.hpp"

#include "apud/io.hpp"
#include "apud/recognize.hpp"
#include "apud/reduction.hpp"
#include "apud/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace apud {

namespace {

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct InputError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot read '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    }

    auto write_output(const std::string & path, const std::string & text, std::ostream & out) -> void
    {
        if (path.empty() || path == "-") {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (! file || ! (file << text))
            throw InputError("cannot write '" + path + "'");
    }

    auto rational_flag(const std::string & text, const char * name) -> Rational
    {
        try {
            return Rational::parse(text);
        }
        catch (const std::exception &) {
            throw UsageError(std::string("--") + name + " expects num/den, got '" + text + "'");
        }
    }

    auto is_blank(const std::string & text) -> bool
    {
        return std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
    }

    // A graph file, or an instance bundle whose graph is used.
    auto load_graph(const std::string & path) -> Graph
    {
        auto text = read_file(path);
        if (is_blank(text))
            throw UsageError("graph file '" + path + "' is empty");
        auto first = text.find_first_not_of(" \t\r\n");
        if (text[first] == '{') {
            auto j = parse_json(text);
            if (j.contains("graph"))
                return graph_from_json(j.at("graph"));
            return graph_from_json(j);
        }
        return parse_graph(text);
    }

    struct LinesFile
    {
        LineConfig lines;
        std::optional<std::vector<Role>> roles;
    };

    // A lines file, or an instance bundle (whose roles come along).
    auto load_lines(const std::string & path) -> LinesFile
    {
        auto j = parse_json(read_file(path));
        LinesFile result;
        if (j.contains("graph")) {
            auto inst = instance_from_json(j);
            result.lines = inst.lines;
            result.roles = inst.roles;
        }
        else if (j.contains("lines"))
            result.lines = lines_from_json(j.at("lines"));
        else
            result.lines = lines_from_json(j);
        return result;
    }

    auto parse_assignment(const std::string & text) -> Assignment
    {
        Assignment a;
        for (char c : text) {
            if (c == '1' || c == 'T' || c == 't')
                a.values.push_back(true);
            else if (c == '0' || c == 'F' || c == 'f')
                a.values.push_back(false);
            else if (c != ',' && c != ' ')
                throw UsageError("--assignment expects a string of 0/1, got '" + text + "'");
        }
        return a;
    }

    auto bits(const Assignment & a) -> std::string
    {
        std::string s;
        for (bool v : a.values)
            s += v ? '1' : '0';
        return s;
    }

    struct Common
    {
        std::string format = "text";

        [[nodiscard]] auto json() const -> bool { return format == "json"; }
    };

    auto add_format(CLI::App * cmd, Common & common) -> void
    {
        cmd->add_option("--format", common.format, "Report format")->check(CLI::IsMember({ "json", "text" }));
    }

    struct ReduceArgs
    {
        Common common;
        std::string formula, output;
        std::vector<int> skeleton, random;
        std::uint64_t seed = default_corpus_seed;
        std::string epsilon = "1/10";
    };

    auto cmd_reduce(const ReduceArgs & a, std::ostream & out, std::ostream & err) -> int
    {
        int sources = ! a.formula.empty() + ! a.skeleton.empty() + ! a.random.empty();
        if (sources != 1)
            throw UsageError("reduce needs exactly one of FORMULA, --skeleton N M, --random N M");
        auto profile = LayoutProfile::for_epsilon(rational_flag(a.epsilon, "epsilon"));
        try {
            validate_profile(profile);
        }
        catch (const RejectedInput & e) {
            throw UsageError(std::string("--epsilon: ") + e.what());
        }

        ReductionInstance inst;
        if (! a.skeleton.empty())
            inst = skeleton_instance(a.skeleton[0], a.skeleton[1], profile);
        else if (! a.random.empty())
            inst = reduce(random_nae_formula(a.random[0], a.random[1], a.seed), profile);
        else {
            auto text = read_file(a.formula);
            if (is_blank(text))
                throw UsageError("formula file '" + a.formula + "' is empty");
            inst = reduce(parse_nae3sat(text), profile);
        }

        auto bundle = dump(instance_to_json(inst));
        Json summary{
            { "vertices", inst.graph.size() },
            { "edges", inst.graph.edge_count() },
            { "horizontal_lines", inst.lines.horizontals().size() },
            { "vertical_lines", inst.lines.verticals().size() },
        };
        std::ostringstream line;
        line << "|V|=" << inst.graph.size() << " |E|=" << inst.graph.edge_count()
             << " horizontal=" << inst.lines.horizontals().size() << " vertical=" << inst.lines.verticals().size() << '\n';
        auto & report = a.output.empty() || a.output == "-" ? err : out;
        write_output(a.output, bundle, out);
        report << (a.common.json() ? dump(summary) : line.str());
        return exit_code::success;
    }

    struct SolveArgs
    {
        Common common;
        std::string formula;
    };

    auto cmd_solve(const SolveArgs & a, std::ostream & out) -> int
    {
        auto text = read_file(a.formula);
        if (is_blank(text))
            throw UsageError("formula file '" + a.formula + "' is empty");
        auto f = parse_nae3sat(text);
        auto solution = solve_nae_bruteforce(f);
        if (a.common.json()) {
            Json j{ { "satisfiable", solution.has_value() } };
            j["assignment"] = solution ? assignment_to_json(*solution) : Json(nullptr);
            out << dump(j);
        }
        else
            out << (solution ? "NAE-satisfiable " + bits(*solution) : std::string("NAE-unsatisfiable")) << '\n';
        return solution ? exit_code::success : exit_code::negative;
    }

    struct WitnessArgs
    {
        Common common;
        std::string bundle, assignment, output, report;
    };

    auto cmd_witness(const WitnessArgs & a, std::ostream & out, std::ostream & err) -> int
    {
        auto inst = instance_from_json(parse_json(read_file(a.bundle)));
        Assignment assignment;
        if (! a.assignment.empty())
            assignment = parse_assignment(a.assignment);
        else if (inst.formula) {
            auto solution = solve_nae_bruteforce(*inst.formula);
            if (! solution) {
                err << "NAE-unsatisfiable: no witness exists\n";
                return exit_code::negative;
            }
            assignment = *solution;
        }
        else
            assignment.values.assign(inst.literals, true);

        if (static_cast<int>(assignment.values.size()) != inst.literals)
            throw RejectedInput("assignment has " + std::to_string(assignment.values.size()) + " values, instance has "
                + std::to_string(inst.literals) + " literals");
        if (inst.formula)
            if (auto bad = first_violated_clause(*inst.formula, assignment)) {
                const auto & c = inst.formula->clauses[*bad];
                err << "assignment rejected: clause " << *bad + 1 << " (" << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1
                    << ") has all literals " << (assignment.values[c[0]] ? "true" : "false") << '\n';
                return exit_code::negative;
            }

        auto placement = witness_layout(inst, assignment);
        auto report = verify_realization(inst.graph, inst.lines, placement);
        auto report_text = a.common.json() ? dump(verification_to_json(report))
                                           : std::string(report.valid() ? "valid" : "invalid") + '\n';
        if (! report.valid()) {
            err << "internal error: witness layout does not verify\n" << dump(verification_to_json(report));
            return exit_code::internal;
        }
        write_output(a.output, dump(placement_to_json(placement)), out);
        if (! a.report.empty())
            write_output(a.report, report_text, out);
        else
            (a.output.empty() || a.output == "-" ? err : out) << report_text;
        return exit_code::success;
    }

    struct VerifyArgs
    {
        Common common;
        std::string graph, lines, placement;
    };

    auto cmd_verify(const VerifyArgs & a, std::ostream & out) -> int
    {
        auto g = load_graph(a.graph);
        auto lines = load_lines(a.lines).lines;
        auto placement = placement_from_json(parse_json(read_file(a.placement)));
        auto report = verify_realization(g, lines, placement);
        if (a.common.json())
            out << dump(verification_to_json(report));
        else {
            out << (report.valid() ? "valid" : "invalid") << '\n';
            for (const auto & v : report.line_violations)
                out << "line violation: vertex " << v.vertex << ": " << v.reason << '\n';
            for (auto [u, v] : report.missing_edges)
                out << "missing edge: " << u << ' ' << v << '\n';
            for (auto [u, v] : report.excess_edges)
                out << "excess edge: " << u << ' ' << v << '\n';
        }
        return report.valid() ? exit_code::success : exit_code::negative;
    }

    struct RecognizeArgs
    {
        Common common;
        std::string graph, mode = "uig", lines;
        int k = 1, m = 1, jobs = 1;
        std::string step = "1/20", window = "4";
        std::int64_t max_nodes = SearchBudget{}.max_nodes;
    };

    auto verdict_exit(Verdict v) -> int
    {
        switch (v) {
        case Verdict::SufficientMember: return exit_code::success;
        case Verdict::NotInClass: return exit_code::negative;
        case Verdict::Inconclusive: return exit_code::inconclusive;
        }
        return exit_code::internal;
    }

    auto report_text(const ObstructionReport & r) -> std::string
    {
        std::string s = verdict_name(r.verdict) + '\n';
        for (const auto & o : r.found) {
            s += o.pattern.name() + ':';
            for (int v : o.vertices)
                s += ' ' + std::to_string(v);
            s += '\n';
        }
        return s;
    }

    auto cmd_recognize(const RecognizeArgs & a, std::ostream & out) -> int
    {
        auto g = load_graph(a.graph);
        Json j{ { "mode", a.mode }, { "vertices", g.size() }, { "edges", g.edge_count() } };
        std::string text;
        int code = exit_code::internal;

        if (a.mode == "uig") {
            bool member = is_unit_interval(g);
            j["unit_interval"] = member;
            text = member ? "unit interval\n" : "not unit interval\n";
            if (member && g.size() <= max_oracle_vertices)
                if (auto xs = uig_oracle(g)) {
                    Json coords = Json::array();
                    for (const auto & x : *xs)
                        coords.push_back(x.str());
                    j["coordinates"] = std::move(coords);
                }
            if (! member)
                if (auto witness = find_uig_obstruction(g))
                    j["obstruction"] = *witness;
            code = member ? exit_code::success : exit_code::negative;
        }
        else if (a.mode == "apud11") {
            auto report = apud11_obstructions(g);
            if (report.verdict != Verdict::NotInClass)
                report = apud11_sufficient(g);
            j["report"] = obstruction_report_to_json(report);
            text = report_text(report);
            code = verdict_exit(report.verdict);
        }
        else if (a.mode == "gt2") {
            auto report = apud_gt2_sufficient(g, a.k, a.m);
            j["k"] = a.k;
            j["m"] = a.m;
            j["report"] = obstruction_report_to_json(report);
            text = report_text(report);
            code = verdict_exit(report.verdict);
        }
        else {
            if (a.lines.empty())
                throw UsageError("--mode grid needs --lines FILE");
            auto lines = load_lines(a.lines).lines;
            SearchBudget budget{ rational_flag(a.step, "step"), rational_flag(a.window, "window"), a.max_nodes };
            try {
                budget.validate();
            }
            catch (const RejectedInput & e) {
                throw UsageError(e.what());
            }
            auto outcome = solve_placement_grid(g, lines, budget, a.jobs);
            j["search"] = search_outcome_to_json(outcome, budget);
            text = search_status_name(outcome.status) + " (step " + budget.step.str() + ", window " + budget.window.str()
                + ", " + std::to_string(outcome.nodes) + " nodes)\n";
            if (outcome.placement)
                text += dump(placement_to_json(*outcome.placement));
            code = outcome.status == SearchStatus::Found ? exit_code::success
                : outcome.status == SearchStatus::Exhausted ? exit_code::exhausted
                                                            : exit_code::inconclusive;
        }
        out << (a.common.json() ? dump(j) : text);
        return code;
    }

    struct FindArgs
    {
        Common common;
        std::string graph, pattern;
    };

    auto cmd_find(const FindArgs & a, std::ostream & out) -> int
    {
        PatternKind kind;
        try {
            kind = parse_pattern_kind(a.pattern);
        }
        catch (const RejectedInput & e) {
            throw UsageError(e.what());
        }
        auto g = load_graph(a.graph);
        auto found = find_induced(g, kind);
        if (a.common.json()) {
            Json occ = Json::array();
            for (const auto & o : found)
                occ.push_back(occurrence_to_json(o));
            out << dump(Json{ { "pattern", kind.name() }, { "count", found.size() }, { "occurrences", std::move(occ) } });
        }
        else {
            out << found.size() << " induced " << kind.name() << '\n';
            for (const auto & o : found) {
                for (std::size_t i = 0; i < o.vertices.size(); ++i)
                    out << (i ? " " : "") << o.vertices[i];
                out << '\n';
            }
        }
        return found.empty() ? exit_code::negative : exit_code::success;
    }

    struct RenderArgs
    {
        std::string placement, lines, output;
        bool labels = false;
    };

    auto cmd_render(const RenderArgs & a, std::ostream & out) -> int
    {
        auto placement = placement_from_json(parse_json(read_file(a.placement)));
        LinesFile lines;
        if (! a.lines.empty())
            lines = load_lines(a.lines);
        RenderOptions options;
        if (lines.roles)
            options.roles = &*lines.roles;
        options.labels = a.labels;
        write_output(a.output, render_svg(lines.lines, placement, options), out);
        return exit_code::success;
    }

}

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Axes-parallel unit disk graph toolkit", "apud" };
    app.require_subcommand(1);
    app.footer("Exit status: 0 yes/valid, 1 no/invalid, 2 inconclusive or not found on the grid, 3 node budget\n"
               "exhausted, 64 usage, 65 malformed input, 66 unreadable file, 70 internal error.");

    ReduceArgs reduce_args;
    auto * reduce_cmd = app.add_subcommand("reduce", "Build the instance bundle for a monotone NAE3SAT formula");
    reduce_cmd->add_option("formula", reduce_args.formula, "Formula file (p nae n m)");
    reduce_cmd->add_option("--skeleton", reduce_args.skeleton, "Flagless instance for N literals and M clauses")->expected(2);
    reduce_cmd->add_option("--random", reduce_args.random, "Random formula with N variables and M clauses")->expected(2);
    reduce_cmd->add_option("--seed", reduce_args.seed, "Seed for --random");
    reduce_cmd->add_option("--epsilon", reduce_args.epsilon, "Layout slack, num/den");
    reduce_cmd->add_option("-o,--output", reduce_args.output, "Bundle file (default stdout)");
    add_format(reduce_cmd, reduce_args.common);

    SolveArgs solve_args;
    auto * solve_cmd = app.add_subcommand("solve-nae", "Brute-force NAE3SAT");
    solve_cmd->add_option("formula", solve_args.formula, "Formula file")->required();
    add_format(solve_cmd, solve_args.common);

    WitnessArgs witness_args;
    auto * witness_cmd = app.add_subcommand("witness", "Realization of a bundle from a satisfying assignment");
    witness_cmd->add_option("bundle", witness_args.bundle, "Instance bundle")->required();
    witness_cmd->add_option("--assignment", witness_args.assignment, "Truth values as 0/1 string, variable 1 first");
    witness_cmd->add_option("-o,--output", witness_args.output, "Placement file (default stdout)");
    witness_cmd->add_option("--report", witness_args.report, "Verification report file");
    add_format(witness_cmd, witness_args.common);

    VerifyArgs verify_args;
    auto * verify_cmd = app.add_subcommand("verify", "Check a placement against a graph and lines");
    verify_cmd->add_option("graph", verify_args.graph, "Graph file or bundle")->required();
    verify_cmd->add_option("lines", verify_args.lines, "Lines file or bundle")->required();
    verify_cmd->add_option("placement", verify_args.placement, "Placement file")->required();
    add_format(verify_cmd, verify_args.common);

    RecognizeArgs recognize_args;
    auto * recognize_cmd = app.add_subcommand("recognize", "Recognition checks");
    recognize_cmd->add_option("graph", recognize_args.graph, "Graph file or bundle")->required();
    recognize_cmd->add_option("--mode", recognize_args.mode, "uig, apud11, gt2 or grid")
        ->check(CLI::IsMember({ "uig", "apud11", "gt2", "grid" }));
    recognize_cmd->add_option("--k", recognize_args.k, "Horizontal line count (gt2)");
    recognize_cmd->add_option("--m", recognize_args.m, "Vertical line count (gt2)");
    recognize_cmd->add_option("--lines", recognize_args.lines, "Lines file or bundle (grid)");
    recognize_cmd->add_option("--step", recognize_args.step, "Grid pitch, num/den (grid)");
    recognize_cmd->add_option("--window", recognize_args.window, "Grid half-width, num/den (grid)");
    recognize_cmd->add_option("--max-nodes", recognize_args.max_nodes, "Search node budget (grid)");
    recognize_cmd->add_option("--jobs", recognize_args.jobs, "Worker threads (grid)")->check(CLI::PositiveNumber);
    add_format(recognize_cmd, recognize_args.common);

    FindArgs find_args;
    auto * find_cmd = app.add_subcommand("find-pattern", "List induced copies of a pattern");
    find_cmd->add_option("graph", find_args.graph, "Graph file or bundle")->required();
    find_cmd->add_option("pattern", find_args.pattern, "C5, K1,4, S3, I4, claw, net, diamond, ...")->required();
    add_format(find_cmd, find_args.common);

    RenderArgs render_args;
    auto * render_cmd = app.add_subcommand("render", "Draw a placement as SVG");
    render_cmd->add_option("placement", render_args.placement, "Placement file")->required();
    render_cmd->add_option("--lines", render_args.lines, "Lines file or bundle");
    render_cmd->add_option("-o,--output", render_args.output, "SVG file (default stdout)");
    render_cmd->add_flag("--labels", render_args.labels, "Write vertex numbers");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::success : exit_code::usage;
    }

    try {
        if (reduce_cmd->parsed())
            return cmd_reduce(reduce_args, out, err);
        if (solve_cmd->parsed())
            return cmd_solve(solve_args, out);
        if (witness_cmd->parsed())
            return cmd_witness(witness_args, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(verify_args, out);
        if (recognize_cmd->parsed())
            return cmd_recognize(recognize_args, out);
        if (find_cmd->parsed())
            return cmd_find(find_args, out);
        if (render_cmd->parsed())
            return cmd_render(render_args, out);
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const ParseError & e) {
        err << "parse error at " << e.what() << '\n';
        return exit_code::bad_input;
    }
    catch (const InputError & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::no_input;
    }
    catch (const RejectedInput & e) {
        err << "rejected: " << e.what() << '\n';
        return exit_code::bad_input;
    }
    catch (const std::exception & e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
    return exit_code::usage;
}

}
