#include "lam/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lam {

bool Gap::all_edges_leaves() const {
  return std::all_of(edge_is_leaf.begin(), edge_is_leaf.end(), [](bool b) { return b; });
}

std::string SiblingCheckReport::summary() const {
  size_t fails = 0;
  for (const auto& e : entries) {
    if (!e.pass()) ++fails;
  }
  std::ostringstream os;
  os << (pass ? "pass" : "fail") << ": " << entries.size() << " leaves tested, " << fails
     << " failing";
  for (const auto& e : entries) {
    if (e.pass()) continue;
    os << "\n  leaf " << e.leaf.str() << " level " << e.level << ":";
    if (!e.image_ok) os << " image-missing";
    if (!e.pullback_ok) os << " no-pullback";
    if (!e.siblings_ok) os << " no-disjoint-siblings";
  }
  return os.str();
}

Lamination::Lamination(int degree, std::vector<Chord> leaves, int depth)
    : degree_(degree), depth_(depth), leaves_(std::move(leaves)) {
  if (degree_ < 2) throw std::invalid_argument("Lamination: degree must be >= 2");
  if (depth_ < 0) throw std::invalid_argument("Lamination: depth must be >= 0");
  std::erase_if(leaves_, [](const Chord& c) { return c.degenerate(); });
  std::sort(leaves_.begin(), leaves_.end());
  leaves_.erase(std::unique(leaves_.begin(), leaves_.end()), leaves_.end());
  if (!pairwise_unlinked(leaves_)) {
    throw std::invalid_argument("Lamination: leaves are not pairwise unlinked");
  }
}

bool Lamination::contains(const Chord& c) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), c);
}

std::string Lamination::dump() const {
  std::ostringstream os;
  os << "degree=" << degree_ << " depth=" << depth_ << "\n";
  for (const Chord& c : leaves_) os << c.str() << "\n";
  return os.str();
}

Lamination Lamination::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  int degree = 0, depth = -1;
  if (!std::getline(in, line)) throw std::invalid_argument("line 1: missing header");
  ++lineno;
  if (std::sscanf(line.c_str(), "degree=%d depth=%d", &degree, &depth) != 2) {
    throw std::invalid_argument("line 1: expected 'degree=<d> depth=<n>'");
  }
  std::vector<Chord> leaves;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      leaves.push_back(Chord::parse(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return Lamination(degree, std::move(leaves), depth);
}

Lamination Lamination::parse_string(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

namespace {

// Reconstructed generation level of every leaf: critical leaves and leaves
// with arbitrarily long pullback chains in L sit at level 0; a leaf whose
// longest pullback chain has length h sits at level depth - h.
std::vector<int> leaf_levels(const Lamination& L) {
  const auto& leaves = L.leaves();
  const int n = static_cast<int>(leaves.size());
  const int INF = std::numeric_limits<int>::max() / 2;

  // preimage adjacency: j -> i when sigma(leaves[i]) == leaves[j]
  std::map<Chord, std::vector<int>> pre;
  for (int i = 0; i < n; ++i) {
    Chord img = chord_image(L.degree(), leaves[i]);
    if (!img.degenerate()) pre[img].push_back(i);
  }

  std::vector<int> height(n, -1);   // -1: unvisited, -2: on stack
  std::vector<int> result(n, 0);
  // Iterative longest-pullback-chain with cycle detection.
  for (int start = 0; start < n; ++start) {
    if (height[start] >= 0) continue;
    std::vector<std::pair<int, size_t>> stack{{start, 0}};
    height[start] = -2;
    while (!stack.empty()) {
      auto& [node, child] = stack.back();
      auto it = pre.find(leaves[node]);
      size_t deg = it == pre.end() ? 0 : it->second.size();
      if (child < deg) {
        int nxt = it->second[child++];
        if (height[nxt] == -2) {
          // pullback cycle: everything on it has unbounded chains
          height[nxt] = INF;
        } else if (height[nxt] == -1) {
          height[nxt] = -2;
          stack.emplace_back(nxt, 0);
        }
      } else {
        int h = 0;
        if (it != pre.end()) {
          for (int c : it->second) {
            int hc = height[c];
            if (hc == -2) hc = INF;  // back edge into the stack
            h = std::max(h, hc >= INF ? INF : hc + 1);
          }
        }
        if (height[node] != INF) height[node] = h;
        stack.pop_back();
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (is_critical(L.degree(), leaves[i]) || height[i] >= INF) {
      result[i] = 0;
    } else {
      result[i] = std::max(0, L.depth() - height[i]);
    }
  }
  return result;
}

// Search for d pairwise disjoint leaves of L with the same image as `leaf`
// (including leaf itself), among `pool`.
bool disjoint_family_exists(int d, const Chord& leaf, const std::vector<Chord>& pool) {
  std::vector<Chord> chosen{leaf};
  auto rec = [&](auto&& self, size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == d) return true;
    for (size_t i = from; i < pool.size(); ++i) {
      if (pool[i] == leaf) continue;
      bool ok = true;
      for (const Chord& c : chosen) {
        if (!chords_disjoint(pool[i], c)) { ok = false; break; }
      }
      if (!ok) continue;
      chosen.push_back(pool[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

SiblingCheckReport check_sibling_invariant(const Lamination& L) {
  SiblingCheckReport report;
  const auto& leaves = L.leaves();
  std::vector<int> levels = leaf_levels(L);

  std::map<Chord, std::vector<Chord>> by_image;
  for (const Chord& c : leaves) {
    Chord img = chord_image(L.degree(), c);
    if (!img.degenerate()) by_image[img].push_back(c);
  }

  for (size_t i = 0; i < leaves.size(); ++i) {
    if (levels[i] > L.depth() - 1) continue;
    const Chord& leaf = leaves[i];
    SiblingCheckEntry e;
    e.leaf = leaf;
    e.level = levels[i];

    Chord img = chord_image(L.degree(), leaf);
    e.image_ok = img.degenerate() || L.contains(img);

    // pullback: some leaf of L maps onto this one
    auto it = by_image.find(leaf);
    e.pullback_ok = it != by_image.end() && !it->second.empty();

    if (img.degenerate()) {
      e.siblings_ok = true;
    } else {
      bool all_present = true;
      try {
        for (const Chord& s : siblings(L.degree(), leaf)) {
          if (!L.contains(s)) { all_present = false; break; }
        }
      } catch (const std::domain_error&) {
        all_present = false;
      }
      e.siblings_ok =
          all_present || disjoint_family_exists(L.degree(), leaf, by_image[img]);
    }

    report.entries.push_back(e);
    if (!e.pass()) report.pass = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Gap extraction: trace faces of the planar subdivision cut out by the
// leaves. All vertices lie on the circle, so the rotational order of edges
// around a vertex v is: outgoing circle arc first, then chords sorted by the
// circular distance of their far endpoint from v, then the incoming arc.
// ---------------------------------------------------------------------------

std::vector<Gap> gaps(const Lamination& L) {
  const auto& leaves = L.leaves();
  std::vector<Gap> out;
  if (leaves.empty()) return out;

  std::vector<Angle> pts;
  for (const Chord& c : leaves) {
    pts.push_back(c.a());
    pts.push_back(c.b());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int m = static_cast<int>(pts.size());
  auto index_of = [&](const Angle& a) {
    return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), a) - pts.begin());
  };

  // neighbors[v]: far endpoints of chords at v, sorted by ccw distance from v
  std::vector<std::vector<int>> neighbors(m);
  for (const Chord& c : leaves) {
    neighbors[index_of(c.a())].push_back(index_of(c.b()));
    neighbors[index_of(c.b())].push_back(index_of(c.a()));
  }
  for (int v = 0; v < m; ++v) {
    std::sort(neighbors[v].begin(), neighbors[v].end(), [&](int x, int y) {
      return arc_length(pts[v], pts[x]) < arc_length(pts[v], pts[y]);
    });
  }

  // Directed edges: arc v -> succ(v) (id: v), chord slot k at v (id: m + ...).
  // Visited flags per directed edge.
  std::vector<bool> arc_seen(m, false);
  std::vector<std::vector<bool>> chord_seen(m);
  for (int v = 0; v < m; ++v) chord_seen[v].assign(neighbors[v].size(), false);

  auto chord_slot = [&](int v, int partner) {
    for (size_t k = 0; k < neighbors[v].size(); ++k) {
      if (neighbors[v][k] == partner) return static_cast<int>(k);
    }
    throw std::logic_error("gaps: missing chord slot");
  };

  // One traversal step: we stand at v having arrived from u (arc_in set when
  // the arrival edge was the circle arc). Returns the next directed edge.
  struct Step { int v; int u; bool via_arc; };
  auto next_step = [&](const Step& s) -> Step {
    int v = s.v;
    int nslots = static_cast<int>(neighbors[v].size());
    // positions around v: 0 = arc out, 1..nslots = chords, nslots+1 = arc in
    int rev = s.via_arc ? nslots + 1 : 1 + chord_slot(v, s.u);
    int nxt = rev - 1;  // clockwise successor traces the face on the left
    if (nxt == 0) {
      int w = (v + 1) % m;
      return Step{w, v, true};
    }
    int w = neighbors[v][nxt - 1];
    return Step{w, v, false};
  };

  auto trace = [&](Step start) {
    std::vector<Angle> cycle;
    std::vector<bool> is_leaf_edge;
    Step s = start;
    do {
      if (s.via_arc) {
        arc_seen[s.u] = true;
      } else {
        chord_seen[s.u][chord_slot(s.u, s.v)] = true;
      }
      cycle.push_back(pts[s.u]);
      is_leaf_edge.push_back(!s.via_arc);
      s = next_step(s);
    } while (!(s.u == start.u && s.v == start.v && s.via_arc == start.via_arc));

    // rotate so the smallest vertex comes first (cycle is already ccw)
    size_t lo = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    std::rotate(cycle.begin(), cycle.begin() + lo, cycle.end());
    std::rotate(is_leaf_edge.begin(), is_leaf_edge.begin() + lo, is_leaf_edge.end());
    Gap g;
    g.boundary = Polygon(cycle);
    if (g.boundary.size() != cycle.size()) {
      throw std::logic_error("gaps: face revisits a vertex");
    }
    g.edge_is_leaf = std::move(is_leaf_edge);
    out.push_back(std::move(g));
  };

  for (int v = 0; v < m; ++v) {
    if (!arc_seen[v]) trace(Step{(v + 1) % m, v, true});
    for (size_t k = 0; k < neighbors[v].size(); ++k) {
      if (!chord_seen[v][k]) trace(Step{neighbors[v][k], v, false});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Gap& x, const Gap& y) { return x.boundary < y.boundary; });
  return out;
}

std::vector<Polygon> critical_objects(const Lamination& L) {
  std::vector<Polygon> candidates;
  for (const Chord& c : L.leaves()) {
    if (is_critical(L.degree(), c)) {
      candidates.push_back(Polygon({c.a(), c.b()}));
    }
  }
  for (const Gap& g : gaps(L)) {
    if (!g.all_edges_leaves()) continue;  // depth artifact, not a gap of L
    const auto& vs = g.boundary.vertices();
    bool all_crit = true;
    for (const Chord& e : g.boundary.edges()) {
      if (!is_critical(L.degree(), e)) { all_crit = false; break; }
    }
    bool interior_crit = false;
    size_t n = vs.size();
    for (size_t i = 0; i < n && !interior_crit; ++i) {
      for (size_t j = i + 1; j < n && !interior_crit; ++j) {
        bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        if (adjacent && n > 2) continue;
        if (sigma(L.degree(), vs[i]) == sigma(L.degree(), vs[j])) interior_crit = true;
      }
    }
    if (all_crit || interior_crit) candidates.push_back(g.boundary);
  }

  // maximal by inclusion of vertex sets
  auto subset = [](const Polygon& a, const Polygon& b) {
    for (const Angle& v : a.vertices()) {
      if (!b.has_vertex(v)) return false;
    }
    return true;
  };
  std::vector<Polygon> out;
  for (size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < candidates.size(); ++j) {
      if (i == j || candidates[i] == candidates[j]) continue;
      if (subset(candidates[i], candidates[j])) { maximal = false; break; }
    }
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hausdorff metric probe
// ---------------------------------------------------------------------------

namespace {

std::array<double, 2> embed(const Angle& a) {
  double t = 2.0 * std::numbers::pi * a.to_double();
  return {std::cos(t), std::sin(t)};
}

double point_dist(const std::array<double, 2>& p, const std::array<double, 2>& q) {
  return std::hypot(p[0] - q[0], p[1] - q[1]);
}

double point_segment_dist(const std::array<double, 2>& p, const std::array<double, 4>& s) {
  double vx = s[2] - s[0], vy = s[3] - s[1];
  double wx = p[0] - s[0], wy = p[1] - s[1];
  double vv = vx * vx + vy * vy;
  double t = vv == 0.0 ? 0.0 : std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0);
  return std::hypot(wx - t * vx, wy - t * vy);
}

double dist_to_set(const std::array<double, 2>& p, const PlanarSet& s) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : s.points) best = std::min(best, point_dist(p, q));
  for (const auto& seg : s.segments) best = std::min(best, point_segment_dist(p, seg));
  return best;
}

// sup over points of `seg` of the distance to `other`
double segment_sup_dist(const std::array<double, 4>& seg, const PlanarSet& other) {
  auto at = [&](double t) -> std::array<double, 2> {
    return {seg[0] + t * (seg[2] - seg[0]), seg[1] + t * (seg[3] - seg[1])};
  };
  constexpr int kCoarse = 256;
  std::vector<double> vals(kCoarse + 1);
  for (int i = 0; i <= kCoarse; ++i) vals[i] = dist_to_set(at(double(i) / kCoarse), other);

  // refine around the strongest coarse candidates
  std::vector<int> idx(kCoarse + 1);
  for (int i = 0; i <= kCoarse; ++i) idx[i] = i;
  std::partial_sort(idx.begin(), idx.begin() + std::min<size_t>(8, idx.size()), idx.end(),
                    [&](int x, int y) { return vals[x] > vals[y]; });
  double best = 0.0;
  for (int k = 0; k < std::min<int>(8, static_cast<int>(idx.size())); ++k) {
    double lo = std::max(0.0, (idx[k] - 1.0) / kCoarse);
    double hi = std::min(1.0, (idx[k] + 1.0) / kCoarse);
    for (int it = 0; it < 200; ++it) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (dist_to_set(at(m1), other) < dist_to_set(at(m2), other)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    best = std::max(best, dist_to_set(at(0.5 * (lo + hi)), other));
  }
  return best;
}

double directed_hausdorff(const PlanarSet& a, const PlanarSet& b) {
  double best = 0.0;
  for (const auto& p : a.points) best = std::max(best, dist_to_set(p, b));
  for (const auto& s : a.segments) {
    best = std::max(best, dist_to_set({s[0], s[1]}, b));
    best = std::max(best, dist_to_set({s[2], s[3]}, b));
    best = std::max(best, segment_sup_dist(s, b));
  }
  return best;
}

}  // namespace

void PlanarSet::add(const Angle& a) { points.push_back(embed(a)); }

void PlanarSet::add(const Chord& c) {
  if (c.degenerate()) {
    add(c.a());
    return;
  }
  auto p = embed(c.a()), q = embed(c.b());
  segments.push_back({p[0], p[1], q[0], q[1]});
}

void PlanarSet::add(const Polygon& p) {
  if (p.size() == 1) {
    add(p.vertices()[0]);
    return;
  }
  for (const Chord& e : p.edges()) add(e);
}

PlanarSet PlanarSet::of(const Chord& c) {
  PlanarSet s;
  s.add(c);
  return s;
}

PlanarSet PlanarSet::of(const Polygon& p) {
  PlanarSet s;
  s.add(p);
  return s;
}

double hausdorff_distance(const PlanarSet& a, const PlanarSet& b) {
  if ((a.points.empty() && a.segments.empty()) || (b.points.empty() && b.segments.empty())) {
    throw std::invalid_argument("hausdorff_distance: empty set");
  }
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace lam
