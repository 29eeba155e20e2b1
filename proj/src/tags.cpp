#include "lam/tags.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lam {

Polygon minor_set(const MarkedLamination& M) { return polygon_image(3, M.c2()); }

Polygon cocritical_hull(const Polygon& C) {
  mpq_class third(1, 3);
  Arc hole;
  bool found = false;
  for (const Arc& h : C.holes()) {
    if (h.length() > third) {
      if (found) throw std::domain_error("cocritical_hull: hole of length > 1/3 not unique");
      hole = h;
      found = true;
    }
  }
  if (!found) throw std::domain_error("cocritical_hull: no hole of length > 1/3");

  Polygon img = polygon_image(3, C);
  std::vector<Angle> picked;
  for (const Angle& v : img.vertices()) {
    for (const Angle& x : preimages(3, v)) {
      if (in_open_arc(x, hole.start, hole.end)) picked.push_back(x);
    }
  }
  if (picked.empty()) throw std::domain_error("cocritical_hull: empty co-critical set");
  return Polygon(std::move(picked));
}

Polygon cocritical_set(const MarkedLamination& M) {
  if (M.unicritical()) return M.c1();
  std::vector<Polygon> crits = critical_objects(M.lamination());
  if (crits.size() == 1 && crits[0] == M.c1()) return M.c1();
  return cocritical_hull(M.c1());
}

bool MixedTag::intersects(const MixedTag& o) const {
  return polygons_intersect(left, o.left) && polygons_intersect(right, o.right);
}

std::string MixedTag::str() const {
  return "left: " + left.str() + "\nright: " + right.str() + "\n";
}

MixedTag mixed_tag(const MarkedLamination& M) {
  return MixedTag{cocritical_set(M), minor_set(M)};
}

const char* to_string(TagRelation r) {
  switch (r) {
    case TagRelation::disjoint: return "disjoint";
    case TagRelation::equal: return "equal";
    case TagRelation::overlap: return "overlap";
  }
  return "?";
}

TagRelation tag_relation(const MixedTag& a, const MixedTag& b) {
  if (a == b) return TagRelation::equal;
  if (!a.intersects(b)) return TagRelation::disjoint;
  return TagRelation::overlap;
}

TagRelation mixed_tag_relation(const MarkedLamination& M1, const MarkedLamination& M2) {
  return tag_relation(mixed_tag(M1), mixed_tag(M2));
}

FamilyReport family_relation(const std::vector<MixedTag>& tags) {
  FamilyReport rep;
  for (size_t i = 0; i < tags.size(); ++i) {
    for (size_t j = i + 1; j < tags.size(); ++j) {
      switch (tag_relation(tags[i], tags[j])) {
        case TagRelation::disjoint: ++rep.disjoint; break;
        case TagRelation::equal: ++rep.equal; break;
        case TagRelation::overlap: rep.overlaps.push_back({i, j}); break;
      }
    }
  }
  return rep;
}

FamilyReport family_disjoint_or_equal(const std::vector<MarkedLamination>& family) {
  std::vector<MixedTag> tags;
  tags.reserve(family.size());
  for (const MarkedLamination& m : family) tags.push_back(mixed_tag(m));
  return family_relation(tags);
}

std::string FamilyReport::text(const std::vector<MixedTag>& tags) const {
  std::ostringstream out;
  for (size_t i = 0; i < tags.size(); ++i) {
    for (size_t j = i + 1; j < tags.size(); ++j) {
      out << "pair " << i << " " << j << ": " << to_string(tag_relation(tags[i], tags[j]))
          << "\n";
    }
  }
  out << "counts: disjoint=" << disjoint << " equal=" << equal << " overlap=" << overlaps.size()
      << "\n";
  for (auto [i, j] : overlaps) {
    out << "overlap witness " << i << " " << j << ":\n"
        << tags[i].str() << tags[j].str();
  }
  return out.str();
}

namespace {

// Exact limit of a rational trajectory: constant tail, or Aitken's delta
// squared applied to the last three terms (exact for x_n = a + c*r^n).
// nullopt when the trajectory is neither.
std::optional<Angle> trajectory_limit(const std::vector<mpq_class>& xs) {
  size_t n = xs.size();
  if (n == 0) return std::nullopt;
  if (n >= 2 && xs[n - 1] == xs[n - 2]) return Angle(xs[n - 1]);
  if (n == 1) return Angle(xs[0]);
  if (n < 3) return std::nullopt;
  const mpq_class &x0 = xs[n - 3], &x1 = xs[n - 2], &x2 = xs[n - 1];
  mpq_class denom = x2 - 2 * x1 + x0;
  if (denom == 0) return std::nullopt;
  mpq_class d = x2 - x1;
  return Angle(x2 - d * d / denom);
}

// Hull of the extrapolated vertex limits of a polygon sequence; requires a
// consistent vertex count in the tail used for extrapolation.
std::optional<Polygon> polygon_limit(const std::vector<Polygon>& seq) {
  size_t tail = std::min<size_t>(seq.size(), 3);
  size_t first = seq.size() - tail;
  size_t m = seq[first].size();
  for (size_t i = first; i < seq.size(); ++i) {
    if (seq[i].size() != m) return std::nullopt;
  }
  std::vector<Angle> limits;
  for (size_t k = 0; k < m; ++k) {
    std::vector<mpq_class> traj;
    for (size_t i = first; i < seq.size(); ++i) traj.push_back(seq[i].vertices()[k].value());
    auto lim = trajectory_limit(traj);
    if (!lim) return std::nullopt;
    limits.push_back(*lim);
  }
  return Polygon(std::move(limits));
}

bool hull_contains(const Polygon& outer, const Polygon& inner) {
  for (const Angle& v : inner.vertices()) {
    if (!outer.has_vertex(v)) return false;
  }
  return true;
}

}  // namespace

bool usc_probe(const std::vector<MarkedLamination>& sequence, const MarkedLamination& limit,
               double threshold) {
  if (sequence.empty()) throw std::invalid_argument("usc_probe: empty sequence");

  for (int coord = 0; coord < 2; ++coord) {
    auto pattern = [&](const MarkedLamination& m) -> const Polygon& {
      return coord == 0 ? m.c1() : m.c2();
    };
    PlanarSet target = PlanarSet::of(pattern(limit));
    double prev = -1;
    const double slack = 1e-9;
    for (const MarkedLamination& m : sequence) {
      double d = hausdorff_distance(PlanarSet::of(pattern(m)), target);
      if (prev >= 0 && d > prev + slack) {
        throw std::invalid_argument("usc_probe: pattern distances not non-increasing");
      }
      prev = d;
    }
    if (prev > threshold) {
      throw std::invalid_argument("usc_probe: pattern does not approach the limit");
    }

    std::vector<Polygon> seq;
    seq.reserve(sequence.size());
    for (const MarkedLamination& m : sequence) seq.push_back(pattern(m));
    auto extrapolated = polygon_limit(seq);
    if (!extrapolated) {
      throw std::invalid_argument("usc_probe: no exact limit for pattern sequence");
    }
    if (!hull_contains(pattern(limit), *extrapolated)) return false;
  }
  return true;
}

}  // namespace lam
