#include "lam/quadcrit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lam {

CriticalQuadrilateral::CriticalQuadrilateral(int degree, std::array<Angle, 4> vertices)
    : degree_(degree), v_(std::move(vertices)) {
  if (degree_ < 2) throw std::invalid_argument("CriticalQuadrilateral: degree must be >= 2");
  if (!cyclically_ordered(std::span<const Angle>(v_.data(), 4), false)) {
    throw std::invalid_argument("CriticalQuadrilateral: vertices not in circular order");
  }
  Chord s1(v_[0], v_[2]), s2(v_[1], v_[3]);
  if (!is_critical(degree_, s1) || !is_critical(degree_, s2)) {
    throw std::invalid_argument("CriticalQuadrilateral: spikes are not critical chords");
  }
  // canonical rotation: lexicographically smallest
  std::array<Angle, 4> best = v_;
  for (int r = 1; r < 4; ++r) {
    std::array<Angle, 4> rot{v_[r % 4], v_[(r + 1) % 4], v_[(r + 2) % 4], v_[(r + 3) % 4]};
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end())) {
      best = rot;
    }
  }
  v_ = best;
}

CriticalQuadrilateral CriticalQuadrilateral::parse(int degree, std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("CriticalQuadrilateral: expected '[a,b,c,d]'");
  }
  std::string_view inner = text.substr(1, text.size() - 2);
  std::vector<Angle> vs;
  size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    size_t comma = inner.find(',', pos);
    bool last = comma == std::string_view::npos;
    if (last && i != 3) throw std::invalid_argument("CriticalQuadrilateral: need 4 vertices");
    vs.push_back(Angle::parse(inner.substr(pos, last ? inner.size() - pos : comma - pos)));
    pos = last ? inner.size() : comma + 1;
  }
  return CriticalQuadrilateral(degree, {vs[0], vs[1], vs[2], vs[3]});
}

bool CriticalQuadrilateral::has_spike(const Chord& c) const {
  auto [s1, s2] = spikes();
  return s1 == c || s2 == c;
}

bool CriticalQuadrilateral::degenerate() const {
  for (int i = 0; i < 4; ++i) {
    if (v_[i] == v_[(i + 1) % 4]) return true;
  }
  return false;
}

bool CriticalQuadrilateral::collapsing() const { return !image().degenerate(); }

Polygon CriticalQuadrilateral::hull() const {
  return Polygon(std::vector<Angle>(v_.begin(), v_.end()));
}

Chord CriticalQuadrilateral::image() const {
  return Chord(sigma(degree_, v_[0]), sigma(degree_, v_[1]));
}

std::string CriticalQuadrilateral::str() const {
  std::string out = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += v_[i].str();
  }
  return out + "]";
}

bool strongly_linked(const CriticalQuadrilateral& A, const CriticalQuadrilateral& B) {
  const auto& a = A.vertices();
  const auto& b = B.vertices();
  for (int off = 0; off < 4; ++off) {
    std::array<Angle, 8> chain;
    for (int i = 0; i < 4; ++i) {
      chain[2 * i] = a[i];
      chain[2 * i + 1] = b[(i + off) % 4];
    }
    if (cyclically_ordered(chain, false)) return true;
  }
  return false;
}

namespace {

bool gap_is_critical(int degree, const Polygon& boundary) {
  const auto& vs = boundary.vertices();
  size_t n = vs.size();
  bool all_crit = true;
  for (const Chord& e : boundary.edges()) {
    if (!is_critical(degree, e)) { all_crit = false; break; }
  }
  if (all_crit) return true;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent && n > 2) continue;
      if (sigma(degree, vs[i]) == sigma(degree, vs[j])) return true;
    }
  }
  return false;
}

bool is_critical_set_of(const Lamination& L, const Polygon& P,
                        const std::vector<Gap>& leaf_gaps) {
  if (P.size() < 2) return false;
  if (P.size() == 2) {
    Chord c(P.vertices()[0], P.vertices()[1]);
    return L.contains(c) && is_critical(L.degree(), c);
  }
  for (const Gap& g : leaf_gaps) {
    if (g.boundary == P) return gap_is_critical(L.degree(), P);
  }
  return false;
}

// Closed rational intervals within [0,1), wrap split into two pieces.
using Interval = std::pair<mpq_class, mpq_class>;

std::vector<Interval> arc_intervals(const Angle& start, const mpq_class& len) {
  mpq_class s = start.value();
  std::vector<Interval> out;
  if (s + len <= 1) {
    out.push_back({s, s + len});
  } else {
    out.push_back({s, 1});
    out.push_back({0, s + len - 1});
  }
  return out;
}

mpq_class overlap_length(const std::vector<Interval>& xs, const std::vector<Interval>& ys) {
  mpq_class total = 0;
  for (const auto& [a, b] : xs) {
    for (const auto& [c, d] : ys) {
      mpq_class lo = std::max(a, c), hi = std::min(b, d);
      if (hi > lo) total += hi - lo;
    }
  }
  return total;
}

// sigma must be injective (up to critical-edge endpoints) on the circle part
// of each component of the disk minus the two critical sets.
bool marked_injectivity_holds(int degree, const Polygon& c1, const Polygon& c2) {
  std::vector<Angle> pts = c1.vertices();
  pts.insert(pts.end(), c2.vertices().begin(), c2.vertices().end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n < 2) return false;

  auto hole_index = [](const Polygon& p, const Angle& x) -> int {
    const auto& vs = p.vertices();
    size_t m = vs.size();
    for (size_t i = 0; i < m; ++i) {
      const Angle& u = vs[i];
      const Angle& v = vs[m == 1 ? i : (i + 1) % m];
      if (in_open_arc(x, u, v)) return static_cast<int>(i);
    }
    return -1;  // x is a vertex (cannot happen for arc midpoints)
  };

  // group the open arcs between consecutive boundary points by component
  std::map<std::pair<int, int>, std::vector<Interval>> components;
  for (size_t i = 0; i < n; ++i) {
    const Angle& u = pts[i];
    const Angle& v = pts[(i + 1) % n];
    mpq_class len = n == 1 ? mpq_class(1) : arc_length(u, v);
    Angle mid(u.value() + len / 2);
    auto key = std::make_pair(hole_index(c1, mid), hole_index(c2, mid));
    auto pieces = arc_intervals(u, len);
    auto& dst = components[key];
    dst.insert(dst.end(), pieces.begin(), pieces.end());
  }

  for (const auto& [key, arcs] : components) {
    for (int k = 1; k < degree; ++k) {
      std::vector<Interval> shifted;
      for (const auto& [a, b] : arcs) {
        for (const auto& piece : arc_intervals(Angle(a + mpq_class(k, degree)), b - a)) {
          shifted.push_back(piece);
        }
      }
      if (overlap_length(arcs, shifted) > 0) return false;
    }
  }
  return true;
}

}  // namespace

MarkedLamination::MarkedLamination(Lamination lamination, Polygon c1, Polygon c2)
    : lam_(std::move(lamination)), c1_(std::move(c1)), c2_(std::move(c2)) {
  if (lam_.degree() != 3) {
    throw std::invalid_argument("MarkedLamination: degree must be 3");
  }
  std::vector<Gap> leaf_gaps;
  if (c1_.size() > 2 || c2_.size() > 2) {
    for (Gap& g : gaps(lam_)) {
      if (g.all_edges_leaves()) leaf_gaps.push_back(std::move(g));
    }
  }
  if (!is_critical_set_of(lam_, c1_, leaf_gaps) || !is_critical_set_of(lam_, c2_, leaf_gaps)) {
    throw std::invalid_argument("MarkedLamination: pattern entries must be critical sets");
  }
  if (!marked_injectivity_holds(lam_.degree(), c1_, c2_)) {
    throw std::invalid_argument(
        "MarkedLamination: sigma not injective off the critical pattern");
  }
}

bool validate_portrait(const Lamination& L, const CriticalQuadrilateral& Q1,
                       const CriticalQuadrilateral& Q2) {
  std::vector<Gap> leaf_gaps;
  for (Gap& g : gaps(L)) {
    if (g.all_edges_leaves()) leaf_gaps.push_back(std::move(g));
  }
  auto realized = [&](const CriticalQuadrilateral& Q) {
    Polygon h = Q.hull();
    if (h.size() == 2) {
      return L.contains(Chord(h.vertices()[0], h.vertices()[1]));
    }
    for (const Gap& g : leaf_gaps) {
      if (g.boundary == h) return true;
    }
    return false;
  };
  if (!realized(Q1) || !realized(Q2)) {
    throw std::invalid_argument("validate_portrait: quadrilateral not realized in lamination");
  }
  return !(Q1 == Q2);
}

namespace {

// Candidate quadrilaterals Q contained in a critical set C, as used by the
// linked/essentially-equal search: critical edges, vertex quadruples with
// critical spikes, and the degenerate quadruples on an all-critical triangle.
// Collapsing candidates must share a pair of opposite edges with C.
std::vector<CriticalQuadrilateral> candidate_quads(int degree, const Polygon& C) {
  std::vector<CriticalQuadrilateral> out;
  const auto& vs = C.vertices();
  size_t n = vs.size();

  auto push = [&](std::array<Angle, 4> q) {
    try {
      CriticalQuadrilateral cq(degree, std::move(q));
      if (cq.collapsing()) {
        const auto& v = cq.vertices();
        Chord e0(v[0], v[1]), e1(v[1], v[2]), e2(v[2], v[3]), e3(v[3], v[0]);
        bool pair02 = C.is_edge(e0) && C.is_edge(e2);
        bool pair13 = C.is_edge(e1) && C.is_edge(e3);
        if (!pair02 && !pair13) return;
      }
      if (std::find(out.begin(), out.end(), cq) == out.end()) out.push_back(std::move(cq));
    } catch (const std::invalid_argument&) {
      // not a critical quadrilateral; skip
    }
  };

  for (const Chord& e : C.edges()) {
    if (is_critical(degree, e)) push({e.a(), e.a(), e.b(), e.b()});
  }
  if (n >= 4) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        for (size_t k = j + 1; k < n; ++k) {
          for (size_t l = k + 1; l < n; ++l) {
            push({vs[i], vs[j], vs[k], vs[l]});
          }
        }
      }
    }
  }
  if (n == 3) {
    bool all_crit = true;
    for (const Chord& e : C.edges()) {
      if (!is_critical(degree, e)) { all_crit = false; break; }
    }
    if (all_crit) {
      push({vs[0], vs[0], vs[1], vs[2]});
      push({vs[0], vs[1], vs[1], vs[2]});
      push({vs[0], vs[1], vs[2], vs[2]});
    }
  }
  return out;
}

// Forward orbit of a chord until it repeats; empty optional if the orbit
// exceeds the cap (treated as a failed witness).
std::optional<std::vector<Chord>> forward_orbit(int degree, Chord c, int cap = 512) {
  std::vector<Chord> orbit;
  while (cap-- > 0) {
    if (std::find(orbit.begin(), orbit.end(), c) != orbit.end()) return orbit;
    orbit.push_back(c);
    c = chord_image(degree, c);
  }
  return std::nullopt;
}

bool orbit_unlinked(int degree, const CriticalQuadrilateral& Q) {
  auto orbit = forward_orbit(degree, Q.image());
  if (!orbit) return false;
  for (size_t i = 0; i < orbit->size(); ++i) {
    for (size_t j = i + 1; j < orbit->size(); ++j) {
      if (linked((*orbit)[i], (*orbit)[j])) return false;
    }
  }
  return true;
}

// An all-critical triangle relevant to a marking is necessarily one of its
// critical sets, so it suffices to inspect the marked polygons directly.
std::vector<Polygon> all_critical_triangles(int degree, const MarkedLamination& M) {
  std::vector<Polygon> out;
  for (const Polygon* p : {&M.c1(), &M.c2()}) {
    if (p->size() != 3) continue;
    bool all_crit = true;
    for (const Chord& e : p->edges()) {
      if (!is_critical(degree, e)) { all_crit = false; break; }
    }
    if (all_crit && std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
  }
  return out;
}

}  // namespace

PairClass classify_pair(const MarkedLamination& M1, const MarkedLamination& M2) {
  const int d = M1.lamination().degree();

  // shared all-critical triangle: essentially equal outright
  auto tris1 = all_critical_triangles(d, M1);
  if (!tris1.empty()) {
    auto tris2 = all_critical_triangles(d, M2);
    for (const Polygon& t : tris1) {
      if (std::find(tris2.begin(), tris2.end(), t) != tris2.end()) {
        return PairClass::essentially_equal;
      }
    }
  }

  // keep only candidates whose image orbit stays unlinked; the orbit test is
  // the expensive part, so run it once per candidate rather than per tuple
  auto usable = [&](const Polygon& C) {
    std::vector<CriticalQuadrilateral> qs = candidate_quads(d, C);
    qs.erase(std::remove_if(qs.begin(), qs.end(),
                            [&](const CriticalQuadrilateral& q) { return !orbit_unlinked(d, q); }),
             qs.end());
    return qs;
  };
  auto q11 = usable(M1.c1());
  auto q12 = usable(M1.c2());
  auto q21 = usable(M2.c1());
  auto q22 = usable(M2.c2());

  bool found_linked = false;
  for (const auto& a1 : q11) {
    for (const auto& a2 : q12) {
      if (a1 == a2) continue;  // portrait needs distinct quadrilaterals
      for (const auto& b1 : q21) {
        if (!strongly_linked(a1, b1)) continue;
        for (const auto& b2 : q22) {
          if (b1 == b2) continue;
          if (!strongly_linked(a2, b2)) continue;
          auto [s1a, s1b] = a1.spikes();
          auto [s2a, s2b] = a2.spikes();
          bool share1 = b1.has_spike(s1a) || b1.has_spike(s1b);
          bool share2 = b2.has_spike(s2a) || b2.has_spike(s2b);
          if (share1 && share2) return PairClass::essentially_equal;
          found_linked = true;
        }
      }
    }
  }
  return found_linked ? PairClass::linked : PairClass::unrelated;
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::linked: return "linked";
    case PairClass::essentially_equal: return "essentially_equal";
    case PairClass::unrelated: return "unrelated";
  }
  return "?";
}

}  // namespace lam
