#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hyperbolic.hpp"

namespace veech {

inline std::string to_roman(int n) {
    if (n <= 0) throw std::invalid_argument("roman numerals start at 1");
    static const std::pair<int, const char*> table[] = {{1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
                                                        {90, "XC"},  {50, "L"},   {40, "XL"}, {10, "X"},   {9, "IX"},
                                                        {5, "V"},    {4, "IV"},   {1, "I"}};
    std::string out;
    for (const auto& [value, glyph] : table)
        while (n >= value) {
            out += glyph;
            n -= value;
        }
    return out;
}

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Viewport {
    double min_x, max_y, scale, margin;
    double px(double x) const { return margin + (x - min_x) * scale; }
    double py(double y) const { return margin + (max_y - y) * scale; }
};

inline std::string svg_open(double width, double height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
}

} // namespace detail

/// Polygons at their stored coordinates. Each gluing pair gets one roman
/// numeral, written just inside both of its edges.
inline std::string render_surface_svg(const TranslationSurface& s, double size = 640) {
    if (s.num_polygons() == 0) throw Error(ErrorCode::InvalidSurface, "cannot render an empty surface");
    double lo_x = INFINITY, hi_x = -INFINITY, lo_y = INFINITY, hi_y = -INFINITY;
    for (const auto& p : s.polygons())
        for (const auto& v : p.vertices) {
            lo_x = std::min(lo_x, v.x.approximate());
            hi_x = std::max(hi_x, v.x.approximate());
            lo_y = std::min(lo_y, v.y.approximate());
            hi_y = std::max(hi_y, v.y.approximate());
        }
    const double margin = 20;
    const double scale = size / std::max(hi_x - lo_x, hi_y - lo_y);
    const detail::Viewport vp{lo_x, hi_y, scale, margin};
    using detail::fmt;

    std::string out = detail::svg_open(2 * margin + (hi_x - lo_x) * scale, 2 * margin + (hi_y - lo_y) * scale);
    out += "<g class=\"polygons\" fill=\"#eef3fb\" stroke=\"#1d3557\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < s.num_polygons(); ++i) {
        out += "<polygon data-index=\"" + std::to_string(i) + "\" points=\"";
        const auto& vs = s.polygon(i).vertices;
        for (std::size_t k = 0; k < vs.size(); ++k)
            out += (k ? " " : "") + fmt(vp.px(vs[k].x.approximate())) + "," + fmt(vp.py(vs[k].y.approximate()));
        out += "\"/>\n";
    }
    out += "</g>\n<g class=\"edge-labels\" font-family=\"serif\" font-size=\"9\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\" fill=\"#c1121f\">\n";
    const auto glue = s.gluings();
    for (std::size_t g = 0; g < glue.size(); ++g) {
        const std::string label = to_roman(static_cast<int>(g) + 1);
        for (const EdgeRef& e : {glue[g].first, glue[g].second}) {
            const auto& poly = s.polygon(e.polygon);
            double cx = 0, cy = 0;
            for (const auto& v : poly.vertices) {
                cx += v.x.approximate();
                cy += v.y.approximate();
            }
            cx /= static_cast<double>(poly.size());
            cy /= static_cast<double>(poly.size());
            const Vec2 a = poly.vertex(e.edge), b = poly.vertex(e.edge + 1);
            const double mx = (a.x.approximate() + b.x.approximate()) / 2, my = (a.y.approximate() + b.y.approximate()) / 2;
            const double lx = mx + 0.18 * (cx - mx), ly = my + 0.18 * (cy - my);
            out += "<text class=\"edge-label\" data-pair=\"" + std::to_string(g + 1) + "\" x=\"" + fmt(vp.px(lx)) +
                   "\" y=\"" + fmt(vp.py(ly)) + "\">" + label + "</text>\n";
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

/// The polygon in the upper half-plane model: sides on vertical geodesics
/// become vertical segments (clipped at the top for the ideal vertex at
/// infinity), the others semicircular arcs. Vertex labels are drawn at the
/// vertices; real axis points as dots.
inline std::string render_domain_svg(const HypPolygon& poly, const std::vector<std::string>& names) {
    if (names.size() != poly.vertices.size()) throw std::invalid_argument("one name per vertex required");
    struct Pt {
        double x, y;
        bool at_infinity;
    };
    auto approx = [](const HypPoint& p) -> Pt {
        if (const auto* z = std::get_if<UHPoint>(&p)) return {z->re.approximate(), z->im.approximate(), false};
        const auto& b = std::get<BoundaryPoint>(p);
        if (b.is_infinity()) return {0, 0, true};
        return {b.x->approximate(), 0, false};
    };
    std::vector<Pt> pts;
    for (const auto& v : poly.vertices) pts.push_back(approx(v));

    double lo_x = INFINITY, hi_x = -INFINITY, hi_y = 0;
    for (const auto& p : pts)
        if (!p.at_infinity) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            hi_y = std::max(hi_y, p.y);
        }
    for (const auto& g : poly.sides)
        if (!g.vertical) hi_y = std::max(hi_y, std::sqrt(g.radius_sq.approximate()));
    const double top = hi_y + 0.5 * (hi_x - lo_x) / 2 + 1;
    const double pad = 0.1 * (hi_x - lo_x) + 0.5;
    const double scale = 560 / (hi_x - lo_x + 2 * pad);
    const detail::Viewport vp{lo_x - pad, top, scale, 20};
    using detail::fmt;

    std::string out = detail::svg_open(40 + (hi_x - lo_x + 2 * pad) * scale, 60 + top * scale);
    out += "<line class=\"axis\" x1=\"" + fmt(vp.px(lo_x - pad)) + "\" y1=\"" + fmt(vp.py(0)) + "\" x2=\"" +
           fmt(vp.px(hi_x + pad)) + "\" y2=\"" + fmt(vp.py(0)) + "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    out += "<g class=\"sides\" fill=\"none\" stroke=\"#1d3557\" stroke-width=\"2\">\n";
    const std::size_t n = pts.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Pt& p = pts[k];
        const Pt& q = pts[(k + 1) % n];
        const Geodesic& g = poly.sides[k];
        if (g.vertical) {
            const double x = g.x0.approximate();
            const double y1 = p.at_infinity ? top : p.y, y2 = q.at_infinity ? top : q.y;
            out += "<line class=\"side vertical\" data-side=\"" + names[k] + names[(k + 1) % n] + "\" x1=\"" +
                   fmt(vp.px(x)) + "\" y1=\"" + fmt(vp.py(y1)) + "\" x2=\"" + fmt(vp.px(x)) + "\" y2=\"" +
                   fmt(vp.py(y2)) + "\"/>\n";
        } else {
            const double r = std::sqrt(g.radius_sq.approximate()) * scale;
            // Sweep flag 0 passes over the top when moving right to left.
            const int sweep = p.x > q.x ? 0 : 1;
            out += "<path class=\"side arc\" data-side=\"" + names[k] + names[(k + 1) % n] + "\" d=\"M " +
                   fmt(vp.px(p.x)) + " " + fmt(vp.py(p.y)) + " A " + fmt(r) + " " + fmt(r) + " 0 0 " +
                   std::to_string(sweep) + " " + fmt(vp.px(q.x)) + " " + fmt(vp.py(q.y)) + "\"/>\n";
        }
    }
    out += "</g>\n<g class=\"vertex-labels\" font-family=\"serif\" font-size=\"14\" fill=\"#c1121f\">\n";
    for (std::size_t k = 0; k < n; ++k) {
        const Pt& p = pts[k];
        if (p.at_infinity) {
            out += "<text class=\"vertex-label\" x=\"" + fmt(vp.px((lo_x + hi_x) / 2)) + "\" y=\"" + fmt(vp.py(top) + 14) +
                   "\">" + names[k] + " = inf</text>\n";
            continue;
        }
        if (p.y == 0)
            out += "<circle cx=\"" + fmt(vp.px(p.x)) + "\" cy=\"" + fmt(vp.py(0)) + "\" r=\"3\"/>\n";
        out += "<text class=\"vertex-label\" x=\"" + fmt(vp.px(p.x) + 5) + "\" y=\"" + fmt(vp.py(p.y) + (p.y == 0 ? 16 : -6)) +
               "\">" + names[k] + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace veech
