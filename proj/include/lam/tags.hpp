#pragma once

#include <string>
#include <vector>

#include "lam/quadcrit.hpp"

namespace lam {

/// sigma_3-image of the second pattern entry.
Polygon minor_set(const MarkedLamination& M);

/// Co-critical set of a critical set C with a unique hole of length > 1/3:
/// the hull of the points of that open hole whose sigma_3-image is a vertex
/// of sigma_3(C). Throws std::domain_error when no such hole exists.
Polygon cocritical_hull(const Polygon& C);

/// Co-critical set of the first pattern entry. For a unicritical lamination
/// (the pattern entry is the only critical object) this is the entry itself;
/// otherwise it is cocritical_hull of the entry.
Polygon cocritical_set(const MarkedLamination& M);

/// The product subset co(C1) x sigma_3(C2) of the two closed disks.
struct MixedTag {
  Polygon left;
  Polygon right;

  bool operator==(const MixedTag& o) const = default;
  bool intersects(const MixedTag& o) const;
  std::string str() const;  // "left: <polygon>\nright: <polygon>\n"
};

MixedTag mixed_tag(const MarkedLamination& M);

enum class TagRelation { disjoint, equal, overlap };
const char* to_string(TagRelation r);

TagRelation tag_relation(const MixedTag& a, const MixedTag& b);
TagRelation mixed_tag_relation(const MarkedLamination& M1, const MarkedLamination& M2);

/// Pairwise relation over an unordered family of tags. Any overlap pair is
/// a falsification witness and makes pass() false.
struct FamilyReport {
  size_t disjoint = 0;
  size_t equal = 0;
  std::vector<std::pair<size_t, size_t>> overlaps;

  bool pass() const { return overlaps.empty(); }
  /// Line-oriented: "pair i j: disjoint|equal|overlap" for every unordered
  /// pair, then a summary line with the three counts.
  std::string text(const std::vector<MixedTag>& tags) const;
};

FamilyReport family_disjoint_or_equal(const std::vector<MarkedLamination>& family);
FamilyReport family_relation(const std::vector<MixedTag>& tags);

/// Finite-scale upper-semicontinuity probe. Requires the critical patterns
/// of the sequence to approach the limit's pattern (Hausdorff distances must
/// be non-increasing and end below the threshold); throws std::invalid_argument
/// otherwise. Returns true iff the exact extrapolated limit of each pattern
/// coordinate is contained in the corresponding coordinate of the limit.
bool usc_probe(const std::vector<MarkedLamination>& sequence, const MarkedLamination& limit,
               double threshold = 1e-3);

}  // namespace lam
