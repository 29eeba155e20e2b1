#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lam/quadcrit.hpp"

namespace lam {

/// Critical data for a degree-d pullback: d-1 critical quadrilaterals
/// (degenerate quadruples encode critical leaves and all-critical
/// triangles). Construction validates that every spike endpoint is
/// preperiodic under sigma_d and that the forward orbits of all hull edges
/// are pairwise unlinked.
class CriticalPortrait {
 public:
  CriticalPortrait(int degree, std::vector<CriticalQuadrilateral> criticals);

  int degree() const { return degree_; }
  const std::vector<CriticalQuadrilateral>& criticals() const { return criticals_; }

  /// "degree=<d>" then one quadrilateral "[p/q,p/q,p/q,p/q]" per line.
  std::string dump() const;
  static CriticalPortrait parse(std::istream& in);
  static CriticalPortrait parse_string(const std::string& text);

 private:
  int degree_;
  std::vector<CriticalQuadrilateral> criticals_;
};

/// Thurston pullback: starts from the portrait's hull edges and their full
/// forward orbits, then takes iterated sigma_d-preimages `depth` times.
/// Each preimage of a leaf is the family of d chords obtained by matching
/// endpoint preimages inside the closures of the components of the disk
/// minus the critical hulls; when a preimage point sits on a hull vertex
/// and several matchings stay unlinked, the lexicographically smallest
/// chord family is chosen, keeping the output deterministic.
Lamination pullback_generate(const CriticalPortrait& P, int depth);

struct GeneratedMarked {
  CriticalPortrait portrait;
  MarkedLamination marked;
};

/// Cubic portraits with strictly preperiodic spike endpoints (preperiod <=
/// max_preperiod, eventual period <= max_period), pulled back to `depth`,
/// kept when all fully-leaf-bounded gaps stay small (finite-gap proxy),
/// and wrapped as marked laminations — both pattern orders when the two
/// critical objects are distinct. `seed` shuffles candidate order; at most
/// `count` results.
std::vector<GeneratedMarked> enumerate_dendritic_portraits(int max_preperiod, int max_period,
                                                           int count, std::uint64_t seed = 0,
                                                           int depth = 8);

/// Quadratic minor chords up to the given period: for each k = 1..max_period
/// the angles of exact period k under doubling are paired greedily in
/// ascending order, each with the smallest admissible partner that crosses
/// no previously drawn chord. Used only as an independent cross-check corpus.
Lamination lavaurs_qml(int max_period);

}  // namespace lam
