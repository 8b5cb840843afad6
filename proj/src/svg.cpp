#include "planecycles/svg.hpp"

#include <algorithm>
#include <sstream>

namespace planecycles {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

} // namespace

std::string render_svg(const ColoredPointSet& ps, const std::optional<PlaneCycle>& cycle,
                       const SvgOptions& options) {
    Coord min_x = ps.point(0).x, max_x = ps.point(0).x;
    Coord min_y = ps.point(0).y, max_y = ps.point(0).y;
    for (int i = 1; i < ps.size(); ++i) {
        min_x = std::min(min_x, ps.point(i).x);
        max_x = std::max(max_x, ps.point(i).x);
        min_y = std::min(min_y, ps.point(i).y);
        max_y = std::max(max_y, ps.point(i).y);
    }
    const double span = std::max<double>(
        {static_cast<double>(max_x - min_x), static_cast<double>(max_y - min_y), 1.0});
    const double margin = 0.06 * span;
    const double scale = options.width / (span + 2 * margin);
    const double height = (static_cast<double>(max_y - min_y) + 2 * margin) * scale;

    auto sx = [&](Coord x) { return (static_cast<double>(x - min_x) + margin) * scale; };
    auto sy = [&](Coord y) { return height - (static_cast<double>(y - min_y) + margin) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << static_cast<int>(height + 1) << "\" viewBox=\"0 0 " << options.width << " "
        << static_cast<int>(height + 1) << "\">\n";

    if (options.draw_hull && ps.size() >= 3) {
        const auto hull = convex_hull(ps.points());
        out << "  <polygon fill=\"none\" stroke=\"#999\" stroke-dasharray=\"6 4\" points=\"";
        for (int v : hull) out << sx(ps.point(v).x) << ',' << sy(ps.point(v).y) << ' ';
        out << "\"/>\n";
    }
    if (cycle) {
        out << "  <polygon fill=\"none\" stroke=\"#111\" stroke-width=\"2\" points=\"";
        for (int v : cycle->vertices) out << sx(ps.point(v).x) << ',' << sy(ps.point(v).y) << ' ';
        out << "\"/>\n";
    }
    const double r = std::max(3.0, options.width / 180.0);
    for (int i = 0; i < ps.size(); ++i) {
        const char* fill = kPalette[ps.color(i) % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "  <circle cx=\"" << sx(ps.point(i).x) << "\" cy=\"" << sy(ps.point(i).y)
            << "\" r=\"" << r << "\" fill=\"" << fill << "\" stroke=\"#333\"/>\n";
        out << "  <text x=\"" << sx(ps.point(i).x) + r + 1 << "\" y=\"" << sy(ps.point(i).y) - r
            << "\" font-size=\"" << r * 2.5 << "\" fill=\"#555\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace planecycles
