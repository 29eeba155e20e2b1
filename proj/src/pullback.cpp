#include "lam/pullback.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lam {

namespace {

// Full forward orbit of a chord (first repeat excluded). Degenerate images
// terminate the orbit: points add nothing to the leaf set.
std::vector<Chord> chord_orbit(int degree, Chord c, int cap = 4096) {
  std::vector<Chord> orbit;
  std::set<Chord> seen;
  while (!c.degenerate() && seen.insert(c).second) {
    if (static_cast<int>(orbit.size()) >= cap) {
      throw std::invalid_argument("CriticalPortrait: forward orbit exceeds cap");
    }
    orbit.push_back(c);
    c = chord_image(degree, c);
  }
  return orbit;
}

std::vector<Chord> initial_leaves(int degree,
                                  const std::vector<CriticalQuadrilateral>& criticals) {
  std::set<Chord> leaves;
  for (const CriticalQuadrilateral& q : criticals) {
    for (const Chord& e : q.hull().edges()) {
      for (const Chord& c : chord_orbit(degree, e)) leaves.insert(c);
    }
  }
  return {leaves.begin(), leaves.end()};
}

}  // namespace

CriticalPortrait::CriticalPortrait(int degree, std::vector<CriticalQuadrilateral> criticals)
    : degree_(degree), criticals_(std::move(criticals)) {
  if (degree_ < 2) throw std::invalid_argument("CriticalPortrait: degree must be >= 2");
  if (criticals_.size() != static_cast<size_t>(degree_ - 1)) {
    throw std::invalid_argument("CriticalPortrait: need exactly degree-1 quadrilaterals");
  }
  for (const CriticalQuadrilateral& q : criticals_) {
    if (q.degree() != degree_) {
      throw std::invalid_argument("CriticalPortrait: quadrilateral degree mismatch");
    }
  }
  std::vector<Chord> all = initial_leaves(degree_, criticals_);
  if (!pairwise_unlinked(all)) {
    throw std::invalid_argument("CriticalPortrait: forward orbits cross");
  }
}

std::string CriticalPortrait::dump() const {
  std::string out = "degree=" + std::to_string(degree_) + "\n";
  for (const CriticalQuadrilateral& q : criticals_) out += q.str() + "\n";
  return out;
}

CriticalPortrait CriticalPortrait::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  int degree = 0;
  std::vector<CriticalQuadrilateral> quads;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    try {
      if (line.rfind("degree=", 0) == 0) {
        degree = std::stoi(line.substr(7));
      } else {
        if (degree == 0) throw std::invalid_argument("quadrilateral before degree header");
        quads.push_back(CriticalQuadrilateral::parse(degree, line));
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree == 0) throw std::invalid_argument("line 1: missing degree header");
  return CriticalPortrait(degree, std::move(quads));
}

CriticalPortrait CriticalPortrait::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

namespace {

// A component of the disk minus the critical hulls: its circle part is a
// union of arcs between hull vertices. Closures of neighbouring components
// share those vertices, so several components may claim the same point.
struct Component {
  std::vector<std::pair<Angle, Angle>> arcs;

  bool closure_contains(const Angle& x) const {
    for (const auto& [s, e] : arcs) {
      if (x == s || x == e || in_open_arc(x, s, e)) return true;
    }
    return false;
  }
};

std::vector<Component> make_components(const CriticalPortrait& P) {
  std::vector<Polygon> hulls;
  for (const CriticalQuadrilateral& q : P.criticals()) hulls.push_back(q.hull());

  std::vector<Angle> cuts;
  for (const Polygon& h : hulls) {
    cuts.insert(cuts.end(), h.vertices().begin(), h.vertices().end());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // group the arcs between consecutive cut points by which hole of each
  // hull they lie in
  auto hole_of = [](const Polygon& h, const Angle& x) -> int {
    const auto& vs = h.vertices();
    size_t m = vs.size();
    for (size_t i = 0; i < m; ++i) {
      if (in_open_arc(x, vs[i], vs[(i + 1) % m])) return static_cast<int>(i);
    }
    return -1;
  };
  std::map<std::vector<int>, Component> groups;
  size_t n = cuts.size();
  for (size_t i = 0; i < n; ++i) {
    const Angle& s = cuts[i];
    const Angle& e = cuts[(i + 1) % n];
    Angle mid(s.value() + arc_length(s, e) / 2);
    std::vector<int> sig;
    sig.reserve(hulls.size());
    for (const Polygon& h : hulls) sig.push_back(hole_of(h, mid));
    groups[sig].arcs.push_back({s, e});
  }

  std::vector<Component> components;
  mpq_class cap(1, P.degree());
  for (auto& [sig, comp] : groups) {
    mpq_class total = 0;
    for (const auto& [s, e] : comp.arcs) total += arc_length(s, e);
    if (total > cap) {
      throw std::invalid_argument("pullback: component longer than 1/degree");
    }
    components.push_back(std::move(comp));
  }
  return components;
}

// The d pullback leaves of a chord: match the preimages of its endpoints so
// that every matched pair lies in the closure of one complementary
// component and the resulting chords are pairwise unlinked. When several
// matchings qualify (preimages on hull vertices), the lexicographically
// smallest chord family is taken.
std::vector<Chord> pull_leaf(int degree, const std::vector<Component>& components,
                             const Chord& c) {
  std::vector<Angle> us = preimages(degree, c.a());
  std::vector<Angle> vs = preimages(degree, c.b());
  const int d = degree;

  std::vector<std::vector<bool>> compat(d, std::vector<bool>(d, false));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (const Component& comp : components) {
        if (comp.closure_contains(us[i]) && comp.closure_contains(vs[j])) {
          compat[i][j] = true;
          break;
        }
      }
    }
  }

  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<Chord>> best;
  do {
    std::vector<Chord> family;
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      if (!compat[i][perm[i]]) { ok = false; break; }
      family.push_back(Chord(us[i], vs[perm[i]]));
    }
    if (!ok || !pairwise_unlinked(family)) continue;
    std::sort(family.begin(), family.end());
    if (!best || family < *best) best = std::move(family);
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!best) throw std::invalid_argument("pullback: no unlinked preimage matching");
  return *best;
}

}  // namespace

Lamination pullback_generate(const CriticalPortrait& P, int depth) {
  if (depth < 0) throw std::invalid_argument("pullback_generate: depth must be >= 0");
  const int d = P.degree();
  std::vector<Component> components = make_components(P);

  std::set<Chord> leaves;
  std::vector<Chord> frontier = initial_leaves(d, P.criticals());
  for (const Chord& c : frontier) leaves.insert(c);

  for (int step = 0; step < depth; ++step) {
    std::vector<Chord> next;
    for (const Chord& c : frontier) {
      for (const Chord& pre : pull_leaf(d, components, c)) {
        if (!pre.degenerate() && leaves.insert(pre).second) next.push_back(pre);
      }
    }
    frontier = std::move(next);
  }
  return Lamination(d, {leaves.begin(), leaves.end()}, depth);
}

namespace {

// strictly preperiodic angles p / (3^k (3^m - 1)), reduced, in (0,1)
std::vector<Angle> preperiodic_angles(int max_preperiod, int max_period, long cap_den = 250) {
  std::vector<Angle> out;
  std::set<mpq_class> seen;
  for (int k = 1; k <= max_preperiod; ++k) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= 3;
    for (int m = 1; m <= max_period; ++m) {
      long pm = 1;
      for (int i = 0; i < m; ++i) pm *= 3;
      long q = pk * (pm - 1);
      if (q <= 0 || q > cap_den) continue;
      for (long p = 1; p < q; ++p) {
        Angle a(p, q);
        // a is strictly preperiodic under tripling iff 3 divides the
        // reduced denominator
        if (a.denominator() % 3 != 0) continue;
        if (seen.insert(a.value()).second) out.push_back(a);
      }
    }
  }
  return out;
}

std::optional<CriticalQuadrilateral> make_leaf_quad(const Angle& a) {
  Angle b = a + Angle(1, 3);
  try {
    return CriticalQuadrilateral(3, {a, a, b, b});
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<CriticalQuadrilateral> make_collapsing_quad(const Angle& a, const Angle& b) {
  if (!in_open_arc(b, a, a + Angle(1, 3))) return std::nullopt;
  try {
    return CriticalQuadrilateral(3, {a, b, a + Angle(1, 3), b + Angle(1, 3)});
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool gaps_stay_small(const Lamination& L, size_t max_vertices = 12) {
  for (const Gap& g : gaps(L)) {
    if (g.all_edges_leaves() && g.boundary.size() > max_vertices) return false;
  }
  return true;
}

// the critical object of L whose vertex set contains the quad's vertices
std::optional<Polygon> matching_critical_object(const std::vector<Polygon>& objects,
                                                const CriticalQuadrilateral& q) {
  for (const Polygon& o : objects) {
    bool all = true;
    for (const Angle& v : q.vertices()) {
      if (!o.has_vertex(v)) { all = false; break; }
    }
    if (all) return o;
  }
  return std::nullopt;
}

}  // namespace

std::vector<GeneratedMarked> enumerate_dendritic_portraits(int max_preperiod, int max_period,
                                                           int count, std::uint64_t seed,
                                                           int depth) {
  if (max_preperiod < 1 || max_period < 1 || count < 1) {
    throw std::invalid_argument("enumerate_dendritic_portraits: bounds must be >= 1");
  }
  std::vector<Angle> base = preperiodic_angles(max_preperiod, max_period);
  std::mt19937_64 rng(seed);

  // candidate quadrilaterals: critical leaves first, then collapsing quads
  std::vector<CriticalQuadrilateral> cands;
  for (const Angle& a : base) {
    if (auto q = make_leaf_quad(a)) cands.push_back(*q);
  }
  size_t leaf_count = cands.size();
  {
    std::vector<size_t> idx(base.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    size_t quota = std::max<size_t>(leaf_count / 2, 64);
    for (size_t i = 0; i + 1 < idx.size() && cands.size() < leaf_count + quota; i += 2) {
      if (auto q = make_collapsing_quad(base[idx[i]], base[idx[i + 1]])) cands.push_back(*q);
    }
  }
  std::shuffle(cands.begin(), cands.end(), rng);

  std::vector<GeneratedMarked> out;
  std::set<std::string> dedupe;
  for (size_t i = 0; i < cands.size() && static_cast<int>(out.size()) < count; ++i) {
    for (size_t j = i + 1; j < cands.size() && static_cast<int>(out.size()) < count; ++j) {
      const CriticalQuadrilateral& q1 = cands[i];
      const CriticalQuadrilateral& q2 = cands[j];
      if (polygons_intersect(q1.hull(), q2.hull())) continue;
      try {
        CriticalPortrait portrait(3, {q1, q2});
        Lamination L = pullback_generate(portrait, depth);
        if (!gaps_stay_small(L)) {
          std::clog << "skip " << q1.str() << " " << q2.str() << ": large gap\n";
          continue;
        }
        std::vector<Polygon> objects = critical_objects(L);
        auto o1 = matching_critical_object(objects, q1);
        auto o2 = matching_critical_object(objects, q2);
        if (!o1 || !o2) {
          std::clog << "skip " << q1.str() << " " << q2.str() << ": critical object missing\n";
          continue;
        }
        if (!dedupe.insert(o1->str() + "|" + o2->str()).second) continue;
        out.push_back({portrait, MarkedLamination(L, *o1, *o2)});
        if (*o1 != *o2 && dedupe.insert(o2->str() + "|" + o1->str()).second &&
            static_cast<int>(out.size()) < count) {
          out.push_back({portrait, MarkedLamination(L, *o2, *o1)});
        }
      } catch (const std::invalid_argument& e) {
        std::clog << "skip " << q1.str() << " " << q2.str() << ": " << e.what() << "\n";
      }
    }
  }
  return out;
}

namespace {

std::vector<Angle> exact_period_angles(int k) {
  long q = (1L << k) - 1;
  std::vector<Angle> out;
  for (long p = 1; p < q; ++p) {
    long x = p;
    int j = 0;
    do {
      x = (2 * x) % q;
      ++j;
    } while (x != p && j <= k);
    if (j == k) out.push_back(Angle(p, q));
  }
  return out;
}

}  // namespace

Lamination lavaurs_qml(int max_period) {
  if (max_period < 1) throw std::invalid_argument("lavaurs_qml: max_period must be >= 1");
  std::vector<Chord> drawn;
  for (int k = 1; k <= max_period; ++k) {
    std::vector<Angle> angles = exact_period_angles(k);
    std::vector<bool> paired(angles.size(), false);
    for (size_t i = 0; i < angles.size(); ++i) {
      if (paired[i]) continue;
      for (size_t j = i + 1; j < angles.size(); ++j) {
        if (paired[j]) continue;
        Chord cand(angles[i], angles[j]);
        bool crosses = false;
        for (const Chord& c : drawn) {
          if (linked(cand, c)) { crosses = true; break; }
        }
        if (!crosses) {
          drawn.push_back(cand);
          paired[i] = paired[j] = true;
          break;
        }
      }
    }
  }
  return Lamination(2, std::move(drawn), 0);
}

}  // namespace lam
