#include "lam/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lam {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Pt {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Disk {
  double cx, cy, r;

  Pt at(const Angle& a) const {
    double t = 2 * kPi * a.to_double();
    // screen y grows downward; negate to keep the circle counterclockwise
    return {cx + r * std::cos(t), cy - r * std::sin(t)};
  }

  std::string circle_path() const {
    std::string rr = num(r);
    return "M " + num(cx + r) + " " + num(cy) + " A " + rr + " " + rr + " 0 1 0 " +
           num(cx - r) + " " + num(cy) + " A " + rr + " " + rr + " 0 1 0 " + num(cx + r) + " " +
           num(cy) + " Z";
  }

  // "L x y" or the orthogonal-circle arc from the current point (at angle a)
  // to the point at angle b
  std::string geodesic_to(const Angle& a, const Angle& b, GeodesicStyle style) const {
    Pt p1 = at(a), p2 = at(b);
    if (style == GeodesicStyle::straight_chord) {
      return "L " + num(p2.x) + " " + num(p2.y);
    }
    // unit-disk coordinates; the circle through both points orthogonal to
    // the unit circle has center c with c.u1 = c.u2 = 1
    double u1x = (p1.x - cx) / r, u1y = (p1.y - cy) / r;
    double u2x = (p2.x - cx) / r, u2y = (p2.y - cy) / r;
    double det = u1x * u2y - u1y * u2x;
    if (std::abs(det) < 1e-9) {  // diameter (or equal points): straight
      return "L " + num(p2.x) + " " + num(p2.y);
    }
    double ccx = (u2y - u1y) / det;
    double ccy = (u1x - u2x) / det;
    double rad = std::sqrt(ccx * ccx + ccy * ccy - 1.0);
    // screen-space arc center and radius
    double sx = cx + r * ccx, sy = cy + r * ccy, sr = r * rad;
    // pick the sweep whose arc midpoint lies inside the disk
    double a1 = std::atan2(p1.y - sy, p1.x - sx);
    double a2 = std::atan2(p2.y - sy, p2.x - sx);
    double delta = std::fmod(a2 - a1 + 4 * kPi, 2 * kPi);
    double mx = sx + sr * std::cos(a1 + delta / 2);
    double my = sy + sr * std::sin(a1 + delta / 2);
    double inside = std::hypot(mx - cx, my - cy);
    int sweep = inside < r ? 1 : 0;
    return "A " + num(sr) + " " + num(sr) + " 0 0 " + std::to_string(sweep) + " " + num(p2.x) +
           " " + num(p2.y);
  }

  std::string chord_path(const Chord& c, GeodesicStyle style) const {
    Pt p1 = at(c.a());
    return "M " + num(p1.x) + " " + num(p1.y) + " " + geodesic_to(c.a(), c.b(), style);
  }

  std::string polygon_path(const Polygon& p, GeodesicStyle style) const {
    const auto& vs = p.vertices();
    Pt p0 = at(vs[0]);
    std::string d = "M " + num(p0.x) + " " + num(p0.y);
    for (size_t i = 0; i < vs.size(); ++i) {
      d += " " + geodesic_to(vs[i], vs[(i + 1) % vs.size()], style);
    }
    return d + " Z";
  }
};

std::string svg_open(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string color_for(const Polygon& left) {
  uint64_t h = fnv1a(left.str());
  int hue = static_cast<int>(h % 360);
  int light = 35 + static_cast<int>((h / 360) % 25);
  return "hsl(" + std::to_string(hue) + ",70%," + std::to_string(light) + "%)";
}

void draw_polygon(std::ostringstream& out, const Disk& disk, const Polygon& p,
                  const std::string& color, const RenderSpec& spec) {
  if (p.empty()) return;
  if (p.size() == 1) {
    Pt q = disk.at(p.vertices()[0]);
    out << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\""
        << num(spec.size * 0.006) << "\" fill=\"" << color << "\"/>\n";
    return;
  }
  if (p.size() == 2) {
    out << "<path d=\"" << disk.chord_path(Chord(p.vertices()[0], p.vertices()[1]), spec.style)
        << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << num(spec.stroke_width * 2) << "\"/>\n";
    return;
  }
  out << "<path d=\"" << disk.polygon_path(p, spec.style) << "\" fill=\"" << color
      << "\" fill-opacity=\"0.55\" stroke=\"" << color << "\" stroke-width=\""
      << num(spec.stroke_width) << "\"/>\n";
}

}  // namespace

std::string render_lamination_svg(const Lamination& L, const RenderSpec& spec) {
  double s = spec.size;
  Disk disk{s / 2, s / 2, s / 2 - 2};
  std::ostringstream out;
  out << svg_open(spec.size, spec.size);
  out << "<path d=\"" << disk.circle_path() << "\" fill=\"none\" stroke=\"" << spec.stroke
      << "\" stroke-width=\"" << num(spec.stroke_width) << "\"/>\n";
  for (const Chord& c : L.leaves()) {
    out << "<path d=\"" << disk.chord_path(c, spec.style) << "\" fill=\"none\" stroke=\""
        << spec.stroke << "\" stroke-width=\"" << num(spec.stroke_width) << "\"/>\n";
  }
  if (spec.labels) {
    out << "<text x=\"4\" y=\"14\" font-size=\"12\">degree " << L.degree() << ", "
        << L.leaves().size() << " leaves</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_tag_svg(const std::vector<MixedTag>& tags, const RenderSpec& spec) {
  double s = spec.size;
  Disk left{s / 2, s / 2, s / 2 - 2};
  Disk right{s + s / 2, s / 2, s / 2 - 2};
  std::ostringstream out;
  out << svg_open(2 * spec.size, spec.size);
  for (const Disk& d : {left, right}) {
    out << "<path d=\"" << d.circle_path() << "\" fill=\"none\" stroke=\"" << spec.stroke
        << "\" stroke-width=\"" << num(spec.stroke_width) << "\"/>\n";
  }
  for (const MixedTag& t : tags) {
    std::string color = color_for(t.left);
    draw_polygon(out, left, t.left, color, spec);
    draw_polygon(out, right, t.right, color, spec);
  }
  if (spec.labels) {
    out << "<text x=\"4\" y=\"14\" font-size=\"12\">" << tags.size() << " tags</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lam
