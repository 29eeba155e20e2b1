#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "lam/lamination.hpp"

namespace lam {

/// Circularly ordered quadruple [a0,a1,a2,a3] whose diagonals (spikes) are
/// critical chords. Cyclic rotations are identified: the stored
/// representative is the lexicographically smallest rotation.
class CriticalQuadrilateral {
 public:
  CriticalQuadrilateral(int degree, std::array<Angle, 4> vertices);

  static CriticalQuadrilateral parse(int degree, std::string_view text);

  int degree() const { return degree_; }
  const std::array<Angle, 4>& vertices() const { return v_; }
  std::pair<Chord, Chord> spikes() const { return {Chord(v_[0], v_[2]), Chord(v_[1], v_[3])}; }
  bool has_spike(const Chord& c) const;

  /// Two cyclically adjacent vertices coincide.
  bool degenerate() const;
  /// Maps to a non-degenerate leaf.
  bool collapsing() const;

  Polygon hull() const;
  Chord image() const;  // sigma-image chord (may be degenerate)

  bool operator==(const CriticalQuadrilateral& o) const { return v_ == o.v_; }
  std::string str() const;

 private:
  int degree_;
  std::array<Angle, 4> v_;
};

/// Definition of strong linkage: some cyclic alignment interleaves the two
/// vertex quadruples weakly around the circle.
bool strongly_linked(const CriticalQuadrilateral& A, const CriticalQuadrilateral& B);

/// A degree-3 lamination with an ordered critical pattern (c1, c2).
/// Construction validates that both sets are critical sets of the lamination
/// and that sigma is injective on the boundary circle arcs of each component
/// of the complement of c1 and c2, except at critical-edge endpoints.
class MarkedLamination {
 public:
  MarkedLamination(Lamination lamination, Polygon c1, Polygon c2);

  const Lamination& lamination() const { return lam_; }
  const Polygon& c1() const { return c1_; }
  const Polygon& c2() const { return c2_; }
  bool unicritical() const { return c1_ == c2_; }

  bool operator==(const MarkedLamination& o) const = default;

 private:
  Lamination lam_;
  Polygon c1_, c2_;
};

/// Quadratically critical portrait check: Q1, Q2 are distinct critical
/// quadrilaterals realized as leaves or gaps of L (including the
/// all-critical-triangle degenerate cases). Throws when a quadrilateral is
/// not realized in L.
bool validate_portrait(const Lamination& L, const CriticalQuadrilateral& Q1,
                       const CriticalQuadrilateral& Q2);

enum class PairClass { linked, essentially_equal, unrelated };

/// Classify two marked laminations by searching for quadratically critical
/// portraits inside their critical patterns that are coordinatewise strongly
/// linked; shared spikes (or a shared all-critical triangle) upgrade the
/// verdict to essentially_equal.
PairClass classify_pair(const MarkedLamination& M1, const MarkedLamination& M2);

const char* to_string(PairClass c);

}  // namespace lam
