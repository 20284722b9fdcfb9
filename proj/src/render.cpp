#include "polycross/render.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace polycross {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

std::string render_svg(const Polyline& L, const RenderSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0 || spec.stroke_width <= 0 || spec.vertex_radius <= 0)
        throw std::invalid_argument("render: dimensions must be positive");
    if (spec.margin < 0 || spec.margin >= 0.5) throw std::invalid_argument("render: margin must be in [0, 0.5)");

    std::vector<std::pair<double, double>> p;
    for (const auto& q : L.v) p.emplace_back(q.x.get_d(), q.y.get_d());
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!p.empty()) {
        auto [xa, xb] = std::minmax_element(p.begin(), p.end(), [](auto& a, auto& b) { return a.first < b.first; });
        auto [ya, yb] = std::minmax_element(p.begin(), p.end(), [](auto& a, auto& b) { return a.second < b.second; });
        x0 = xa->first, x1 = xb->first, y0 = ya->second, y1 = yb->second;
    }
    double mx = spec.width * spec.margin, my = spec.height * spec.margin;
    double sx = x1 > x0 ? (spec.width - 2 * mx) / (x1 - x0) : 1, sy = y1 > y0 ? (spec.height - 2 * my) / (y1 - y0) : 1;
    double s = std::min(sx, sy);
    double ox = (spec.width - s * (x1 - x0)) / 2, oy = (spec.height - s * (y1 - y0)) / 2;
    auto X = [&](double x) { return num(ox + s * (x - x0)); };
    auto Y = [&](double y) { return num(spec.height - oy - s * (y - y0)); };  // y axis points up

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
           std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<g stroke=\"black\" stroke-width=\"" + num(spec.stroke_width) + "\" stroke-linecap=\"round\">\n";
    const int n = L.size();
    for (int i = 0; i < n; ++i) {
        auto& a = p[static_cast<std::size_t>(i)];
        auto& b = p[static_cast<std::size_t>((i + 1) % n)];
        out += "<line x1=\"" + X(a.first) + "\" y1=\"" + Y(a.second) + "\" x2=\"" + X(b.first) + "\" y2=\"" + Y(b.second) + "\"/>\n";
    }
    out += "</g>\n<g fill=\"crimson\">\n";
    for (auto& a : p) out += "<circle cx=\"" + X(a.first) + "\" cy=\"" + Y(a.second) + "\" r=\"" + num(spec.vertex_radius) + "\"/>\n";
    out += "</g>\n";
    if (spec.labels && n >= 3) {
        IntersectionProfile prof = intersection_profile(L);
        out += "<g fill=\"navy\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
        for (int i = 0; i < n; ++i) {
            auto& a = p[static_cast<std::size_t>(i)];
            auto& b = p[static_cast<std::size_t>((i + 1) % n)];
            out += "<text x=\"" + X((a.first + b.first) / 2) + "\" y=\"" + Y((a.second + b.second) / 2) + "\">" +
                   std::to_string(prof.per_edge[static_cast<std::size_t>(i)]) + "</text>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace polycross
