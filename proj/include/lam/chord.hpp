#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lam/angle.hpp"

namespace lam {

/// Unordered pair of circle points; the chord of the disk joining them.
/// Stored order-normalized (a <= b in [0,1)).
class Chord {
 public:
  Chord() = default;
  Chord(Angle x, Angle y);

  static Chord parse(std::string_view text);

  const Angle& a() const { return a_; }
  const Angle& b() const { return b_; }
  bool degenerate() const { return a_ == b_; }
  bool has_endpoint(const Angle& x) const { return a_ == x || b_ == x; }

  bool operator==(const Chord& o) const = default;
  std::strong_ordering operator<=>(const Chord& o) const {
    if (auto c = a_ <=> o.a_; c != 0) return c;
    return b_ <=> o.b_;
  }

  std::string str() const;

 private:
  Angle a_, b_;
};

/// True iff the point x lies strictly inside the open positively oriented
/// arc from u to v.
bool in_open_arc(const Angle& x, const Angle& u, const Angle& v);

/// True iff the two chords cross in the open disk: both non-degenerate,
/// distinct, and endpoints strictly alternating on the circle.
/// Sharing an endpoint does not count as linked.
bool linked(const Chord& c1, const Chord& c2);

/// Disjoint as closed sets: unlinked and sharing no endpoint.
bool chords_disjoint(const Chord& c1, const Chord& c2);

/// True iff both endpoints have the same image under sigma(d, .).
/// Degenerate chords are never critical.
bool is_critical(int degree, const Chord& c);

Chord chord_image(int degree, const Chord& c);

/// The d-1 siblings of a non-critical chord: chords with the same
/// sigma-image, pairwise disjoint from each other and from c.
/// Throws std::domain_error when the image of c is degenerate.
std::vector<Chord> siblings(int degree, const Chord& c);

/// True iff the family of chords is pairwise unlinked. O(n log n).
bool pairwise_unlinked(const std::vector<Chord>& chords);

}  // namespace lam
