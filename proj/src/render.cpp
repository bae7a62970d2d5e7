#include "apud/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace apud {

namespace {

    auto fmt(double v) -> std::string
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        std::string s = buf;
        if (s == "-0.000")
            s = "0.000";
        return s;
    }

    auto role_colour(const Role & r) -> const char *
    {
        switch (r.index()) {
        case 0: return "#1f77b4"; // side path
        case 1: return "#2ca02c"; // literal path
        case 2: return "#bcbd22"; // hinge link
        case 3: return "#d62728"; // diamond tip
        case 4: return "#ff7f0e"; // end cycle
        case 5: return "#9467bd"; // flag
        }
        return "#444444";
    }

}

auto render_svg(const LineConfig & lines, const Placement & placement, const RenderOptions & options) -> std::string
{
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    auto extend = [&](double x0, double x1, double y0, double y1) {
        if (first) {
            lo_x = x0, hi_x = x1, lo_y = y0, hi_y = y1;
            first = false;
            return;
        }
        lo_x = std::min(lo_x, x0), hi_x = std::max(hi_x, x1);
        lo_y = std::min(lo_y, y0), hi_y = std::max(hi_y, y1);
    };
    for (const auto & [v, p] : placement.points)
        extend(p.x.to_double() - 1, p.x.to_double() + 1, p.y.to_double() - 1, p.y.to_double() + 1);
    for (const auto & y : lines.horizontals())
        extend(lo_x, hi_x, y.to_double(), y.to_double());
    for (const auto & x : lines.verticals())
        extend(x.to_double(), x.to_double(), lo_y, hi_y);
    const double margin = 1;
    lo_x -= margin, hi_x += margin, lo_y -= margin, hi_y += margin;

    const double s = options.pixels_per_unit;
    auto sx = [&](double x) { return fmt((x - lo_x) * s); };
    auto sy = [&](double y) { return fmt((hi_y - y) * s); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt((hi_x - lo_x) * s) << "\" height=\""
        << fmt((hi_y - lo_y) * s) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g stroke=\"#999999\" stroke-width=\"1\">\n";
    for (const auto & y : lines.horizontals())
        out << "<line x1=\"" << sx(lo_x) << "\" y1=\"" << sy(y.to_double()) << "\" x2=\"" << sx(hi_x) << "\" y2=\""
            << sy(y.to_double()) << "\"/>\n";
    for (const auto & x : lines.verticals())
        out << "<line x1=\"" << sx(x.to_double()) << "\" y1=\"" << sy(hi_y) << "\" x2=\"" << sx(x.to_double())
            << "\" y2=\"" << sy(lo_y) << "\"/>\n";
    out << "</g>\n";

    out << "<g stroke-width=\"1.5\" fill-opacity=\"0.15\">\n";
    for (const auto & [v, p] : placement.points) {
        const char * colour = "#444444";
        if (options.roles && v >= 0 && v < static_cast<int>(options.roles->size()))
            colour = role_colour((*options.roles)[v]);
        out << "<circle cx=\"" << sx(p.x.to_double()) << "\" cy=\"" << sy(p.y.to_double()) << "\" r=\"" << fmt(s)
            << "\" stroke=\"" << colour << "\" fill=\"" << colour << "\"/>\n";
        out << "<circle cx=\"" << sx(p.x.to_double()) << "\" cy=\"" << sy(p.y.to_double()) << "\" r=\"2\" fill=\""
            << colour << "\" fill-opacity=\"1\"/>\n";
        if (options.labels)
            out << "<text x=\"" << sx(p.x.to_double()) << "\" y=\"" << sy(p.y.to_double()) << "\" font-size=\"8\">" << v
                << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}
