#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "lam/polygon.hpp"

namespace lam {

/// Closure of a complementary component of the leaf set, described by its
/// circular vertex cycle. Edges that are circle arcs rather than leaves are
/// finite-depth artifacts and flagged as such.
struct Gap {
  Polygon boundary;
  /// edge_is_leaf[i] refers to the edge from boundary vertex i to i+1 (wrap).
  std::vector<bool> edge_is_leaf;

  bool all_edges_leaves() const;
};

struct SiblingCheckEntry {
  Chord leaf;
  int level = 0;           // reconstructed generation depth
  bool image_ok = false;   // sigma(leaf) in L or degenerate
  bool pullback_ok = false;
  bool siblings_ok = false;
  bool pass() const { return image_ok && pullback_ok && siblings_ok; }
};

struct SiblingCheckReport {
  std::vector<SiblingCheckEntry> entries;  // only leaves that were tested
  bool pass = true;
  std::string summary() const;
};

/// Finite-depth approximation of an invariant geodesic lamination:
/// the set of non-degenerate leaves present after `depth` pullback
/// generations (degenerate chords are implicit members).
class Lamination {
 public:
  Lamination() = default;
  /// Validates pairwise unlinkedness (O(n log n)); throws on a crossing.
  Lamination(int degree, std::vector<Chord> leaves, int depth);

  int degree() const { return degree_; }
  int depth() const { return depth_; }
  const std::vector<Chord>& leaves() const { return leaves_; }  // sorted, unique
  bool contains(const Chord& c) const;

  bool operator==(const Lamination& o) const = default;

  /// Line-oriented dump: "degree=<d> depth=<n>" then one chord per line.
  std::string dump() const;
  static Lamination parse(std::istream& in);
  static Lamination parse_string(const std::string& text);

 private:
  int degree_ = 2;
  int depth_ = 0;
  std::vector<Chord> leaves_;
};

/// Verify Definition of sibling invariance, conditions (1)-(3), for every
/// leaf whose reconstructed generation level is < depth. Failures are
/// report entries, not faults.
SiblingCheckReport check_sibling_invariant(const Lamination& L);

/// Complementary regions of the leaf set, traced combinatorially from the
/// circular endpoint sequence. Empty for a leafless lamination.
std::vector<Gap> gaps(const Lamination& L);

/// Maximal-by-inclusion critical sets: critical leaves, and gaps that are
/// all-critical or carry a critical chord in their interior. Only gaps all
/// of whose edges are leaves are considered (arc-bounded gaps are
/// finite-depth artifacts).
std::vector<Polygon> critical_objects(const Lamination& L);

/// A compact subset of the closed disk given as points and straight
/// segments, for metric probes and rendering only.
struct PlanarSet {
  std::vector<std::array<double, 2>> points;
  std::vector<std::array<double, 4>> segments;  // x1,y1,x2,y2

  void add(const Angle& a);
  void add(const Chord& c);
  void add(const Polygon& p);
  static PlanarSet of(const Chord& c);
  static PlanarSet of(const Polygon& p);
};

/// Numeric Hausdorff distance between two planar compact sets, accurate to
/// about 1e-9. Never used for combinatorial predicates.
double hausdorff_distance(const PlanarSet& a, const PlanarSet& b);

}  // namespace lam
