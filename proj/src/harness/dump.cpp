#include "coverkit/harness/dump.hpp"

#include <fmt/format.h>

#include <variant>

namespace coverkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void put(std::string& out, double v) {
    out += ' ';
    out += format_real(v);
}

}  // namespace

std::string format_real(double v) {
    std::string s = fmt::format("{:.3f}", v);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string scene_block(const Scene& scene) {
    const Mover& m = scene.mover();
    std::string out = fmt::format("scene {}\n", m.size());
    for (std::size_t z = 0; z < m.size(); ++z) {
        const MoveableObject& obj = m[z];
        const Rect b = obj.bounds();
        out += fmt::format("{} {} {} {}", scene.name_of(obj.id()), obj.kind(), z, obj.cover().size());
        for (const double v : {obj.angle().radians, b.left, b.top, b.width, b.height}) put(out, v);
        GeometryWriter geo;
        obj.describe_geometry(geo);
        if (!geo.tokens().empty()) {
            out += " |";
            for (const auto& t : geo.tokens()) {
                std::visit(Overloaded{
                               [&](const std::string& w) {
                                   out += ' ';
                                   out += w;
                               },
                               [&](double v) { put(out, v); },
                           },
                           t);
            }
        }
        out += '\n';
    }
    return out;
}

std::string covers_block(const Scene& scene) {
    const auto entries = scene.mover().cover_geometry();
    std::string out = fmt::format("covers {}\n", entries.size());
    for (const CoverGeometryEntry& e : entries) {
        const CoverNode& n = e.node;
        out += fmt::format("{} {} {} {} {} {}", scene.name_of(e.object), n.id, to_string(shape_kind(n.shape)),
                           to_string(n.freedom), to_string(n.cursor), n.visible ? "visible" : "hidden");
        std::visit(Overloaded{
                       [&](const CircleShape& c) {
                           put(out, c.center.x);
                           put(out, c.center.y);
                           put(out, c.radius);
                       },
                       [&](const StripShape& s) {
                           put(out, s.a.x);
                           put(out, s.a.y);
                           put(out, s.b.x);
                           put(out, s.b.y);
                           put(out, s.radius);
                       },
                       [&](const PolygonShape& p) {
                           out += fmt::format(" {}", p.apexes.size());
                           for (const Point2 q : p.apexes) {
                               put(out, q.x);
                               put(out, q.y);
                           }
                       },
                   },
                   n.shape);
        out += '\n';
    }
    return out;
}

}  // namespace coverkit
