#include "lam/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace lam {

Polygon::Polygon(std::vector<Angle> vertices) : vs_(std::move(vertices)) {
  std::sort(vs_.begin(), vs_.end());
  vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
}

Polygon Polygon::parse(std::string_view text) {
  std::vector<Angle> vs;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    size_t b = piece.find_first_not_of(" \t");
    size_t e = piece.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw std::invalid_argument("Polygon: empty vertex in '" + std::string(text) + "'");
    vs.push_back(Angle::parse(piece.substr(b, e - b + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Polygon(std::move(vs));
}

bool Polygon::has_vertex(const Angle& x) const {
  return std::binary_search(vs_.begin(), vs_.end(), x);
}

std::vector<Chord> Polygon::edges() const {
  std::vector<Chord> out;
  if (vs_.size() < 2) return out;
  if (vs_.size() == 2) {
    out.emplace_back(vs_[0], vs_[1]);
    return out;
  }
  for (size_t i = 0; i < vs_.size(); ++i) {
    out.emplace_back(vs_[i], vs_[(i + 1) % vs_.size()]);
  }
  return out;
}

std::vector<Arc> Polygon::holes() const {
  std::vector<Arc> out;
  if (vs_.empty()) return out;
  if (vs_.size() == 1) {
    out.push_back(Arc{vs_[0], vs_[0], Closedness::open});
    return out;
  }
  for (size_t i = 0; i < vs_.size(); ++i) {
    out.push_back(Arc{vs_[i], vs_[(i + 1) % vs_.size()], Closedness::open});
  }
  return out;
}

bool Polygon::is_edge(const Chord& c) const {
  if (c.degenerate()) return false;
  for (const Chord& e : edges()) {
    if (e == c) return true;
  }
  return false;
}

std::strong_ordering Polygon::operator<=>(const Polygon& o) const {
  size_t n = std::min(vs_.size(), o.vs_.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = vs_[i] <=> o.vs_[i]; c != 0) return c;
  }
  return vs_.size() <=> o.vs_.size();
}

std::string Polygon::str() const {
  std::string out;
  for (size_t i = 0; i < vs_.size(); ++i) {
    if (i) out += ",";
    out += vs_[i].str();
  }
  return out;
}

Polygon polygon_image(int degree, const Polygon& p) {
  std::vector<Angle> vs;
  vs.reserve(p.size());
  for (const Angle& v : p.vertices()) vs.push_back(sigma(degree, v));
  return Polygon(std::move(vs));
}

Polygon polygon_rotate(const Polygon& p, const Angle& by) {
  std::vector<Angle> vs;
  vs.reserve(p.size());
  for (const Angle& v : p.vertices()) vs.push_back(v + by);
  return Polygon(std::move(vs));
}

namespace {

// All vertices of q strictly inside one open hole of p.
bool separated(const Polygon& p, const Polygon& q) {
  const auto& pv = p.vertices();
  size_t n = pv.size();
  for (size_t i = 0; i < n; ++i) {
    const Angle& u = pv[i];
    const Angle& v = pv[n == 1 ? i : (i + 1) % n];
    bool all_inside = true;
    for (const Angle& x : q.vertices()) {
      if (!in_open_arc(x, u, v)) { all_inside = false; break; }
    }
    if (all_inside) return true;
  }
  return false;
}

}  // namespace

bool polygons_intersect(const Polygon& p, const Polygon& q) {
  if (p.empty() || q.empty()) return false;
  return !separated(p, q);
}

}  // namespace lam
