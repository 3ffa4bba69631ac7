#pragma once

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "sumset/convex.hpp"
#include "sumset/point_set.hpp"

namespace sumset {

using Overlay = std::variant<PointSet2D, ConvexPolygon>;

/// One panel of a figure. Point sets are drawn as emphasized dots over the
/// integer lattice of their bounding box; polygons as filled outlines.
struct SvgPanel {
    std::string title;
    std::vector<Overlay> overlays;
    std::vector<Rational> vertical_guides; // dashed lines x = const
};

namespace detail {

inline std::string fmt_num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    while (s.back() == '0')
        s.pop_back();
    if (s.back() == '.')
        s.pop_back();
    return s == "-0" ? "0" : s;
}

struct Box {
    Rational x0, y0, x1, y1;
};

inline Box bounding_box(const SvgPanel& p)
{
    bool first = true;
    Box b;
    auto add = [&](const Point2& q) {
        if (first) {
            b = {q.x, q.y, q.x, q.y};
            first = false;
            return;
        }
        b.x0 = min(b.x0, q.x);
        b.y0 = min(b.y0, q.y);
        b.x1 = max(b.x1, q.x);
        b.y1 = max(b.y1, q.y);
    };
    for (const auto& o : p.overlays) {
        if (auto s = std::get_if<PointSet2D>(&o))
            for (const auto& q : *s)
                add(q);
        else
            for (const auto& q : std::get<ConvexPolygon>(o).vertices())
                add(q);
    }
    if (first)
        throw Error(ErrorCode::InvalidSpec, "figure panel has no overlays");
    return b;
}

} // namespace detail

/// Byte-stable SVG; panels are laid out left to right.
inline std::string render_svg(const std::vector<SvgPanel>& panels)
{
    if (panels.empty())
        throw Error(ErrorCode::InvalidSpec, "figure needs at least one panel");
    static const char* palette[] = {"#1f5fa8", "#c0392b", "#2e8b57", "#8e44ad"};
    constexpr double unit = 20, margin = 30;

    std::vector<detail::Box> boxes;
    double width = margin, height = 0;
    for (const auto& p : panels) {
        boxes.push_back(detail::bounding_box(p));
        const auto& b = boxes.back();
        width += (b.x1 - b.x0).approx() * unit + margin;
        height = std::max(height, (b.y1 - b.y0).approx() * unit + 2 * margin + 20);
    }

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt_num(width) + "\" height=\"" +
                      detail::fmt_num(height) + "\" viewBox=\"0 0 " + detail::fmt_num(width) + " " +
                      detail::fmt_num(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    double left = margin;
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& p = panels[k];
        const auto& b = boxes[k];
        const double base = height - margin;
        auto px = [&](const Rational& x) { return detail::fmt_num(left + (x - b.x0).approx() * unit); };
        auto py = [&](const Rational& y) { return detail::fmt_num(base - (y - b.y0).approx() * unit); };

        out += "<g class=\"panel\" id=\"panel" + std::to_string(k) + "\">\n";
        out += "<text x=\"" + detail::fmt_num(left) + "\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\">" +
               p.title + "</text>\n";
        for (Rational y(b.y0.ceil(), 1); y <= b.y1; y += 1)
            for (Rational x(b.x0.ceil(), 1); x <= b.x1; x += 1)
                out += "<circle class=\"lattice\" cx=\"" + px(x) + "\" cy=\"" + py(y) +
                       "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
        for (const auto& gx : p.vertical_guides)
            out += "<line class=\"guide\" x1=\"" + px(gx) + "\" y1=\"" + py(b.y0) + "\" x2=\"" + px(gx) + "\" y2=\"" +
                   py(b.y1) + "\" stroke=\"#999999\" stroke-dasharray=\"3,3\"/>\n";
        for (std::size_t i = 0; i < p.overlays.size(); ++i) {
            const char* colour = palette[i % 4];
            if (auto s = std::get_if<PointSet2D>(&p.overlays[i])) {
                for (const auto& q : *s)
                    out += "<circle class=\"point\" cx=\"" + px(q.x) + "\" cy=\"" + py(q.y) + "\" r=\"4\" fill=\"" +
                           colour + "\"/>\n";
            }
            else {
                std::string pts;
                for (const auto& q : std::get<ConvexPolygon>(p.overlays[i]).vertices())
                    pts += (pts.empty() ? "" : " ") + px(q.x) + "," + py(q.y);
                out += "<polygon class=\"body\" points=\"" + pts + "\" fill=\"" + colour +
                       "\" fill-opacity=\"0.25\" stroke=\"" + colour + "\"/>\n";
            }
        }
        out += "</g>\n";
        left += (b.x1 - b.x0).approx() * unit + margin;
    }
    out += "</svg>\n";
    return out;
}

/// Single-panel convenience; an empty overlay list is rejected.
inline std::string render_svg(const std::vector<Overlay>& overlays, const std::string& title = "")
{
    if (overlays.empty())
        throw Error(ErrorCode::InvalidSpec, "figure needs at least one overlay");
    return render_svg(std::vector<SvgPanel>{{title, overlays, {}}});
}

} // namespace sumset
