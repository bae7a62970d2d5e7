#include "apud/render.hpp"

#include <doctest.h>

using namespace apud;

namespace {

auto count(const std::string & text, const std::string & needle) -> int
{
    int c = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++c;
    return c;
}

}

TEST_CASE("SVG drawing")
{
    LineConfig lines({ Rational(0) }, { Rational(0) });
    Placement p;
    p.place(0, { Rational(3, 2), 0 }, lines.horizontal(0));
    p.place(1, { 0, Rational(-3, 2) }, lines.vertical(0));
    auto svg = render_svg(lines, p);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<line") == 2);
    // Disk outline plus centre dot per vertex.
    CHECK(count(svg, "<circle") == 4);
    CHECK(count(svg, "<text") == 0);
    CHECK(svg == render_svg(lines, p));

    RenderOptions labelled;
    labelled.labels = true;
    CHECK(count(render_svg(lines, p, labelled), "<text") == 2);

    auto inst = skeleton_instance(1, 1, LayoutProfile::standard());
    auto witness = witness_embedding(inst, Assignment{ { true } });
    RenderOptions coloured;
    coloured.roles = &inst.roles;
    auto drawing = render_svg(inst.lines, witness, coloured);
    CHECK(count(drawing, "<circle") == 2 * inst.graph.size());
    CHECK(drawing != render_svg(inst.lines, witness));
}
