#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lam {

/// A point of the circle R/Z, stored as a reduced rational in [0,1).
/// All arithmetic is exact; there is no floating-point angle type.
class Angle {
 public:
  Angle() : v_(0) {}
  explicit Angle(mpq_class v) : v_(std::move(v)) { normalize(); }
  Angle(long num, long den);

  static Angle parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Angle operator+(const Angle& o) const { return Angle(v_ + o.v_); }
  Angle operator-(const Angle& o) const { return Angle(v_ - o.v_); }

  bool operator==(const Angle& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Angle& o) const {
    int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  std::string str() const;
  double to_double() const { return v_.get_d(); }

 private:
  void normalize();
  mpq_class v_;
};

/// Positive circular distance from a to b, in [0,1).
mpq_class arc_length(const Angle& from, const Angle& to);

enum class Closedness { open, closed, half_open_left, half_open_right };

/// Positively oriented circular arc from start to end.
/// half_open_left excludes the start point, half_open_right excludes the end.
struct Arc {
  Angle start;
  Angle end;
  Closedness closedness = Closedness::open;

  mpq_class length() const { return arc_length(start, end); }
  bool contains(const Angle& x) const;
};

/// The angle-multiplication map theta -> d*theta on R/Z.
Angle sigma(int degree, const Angle& a);

/// The d preimages of a under sigma(d, .), ascending in [0,1).
std::vector<Angle> preimages(int degree, const Angle& a);

/// True iff the list is in weakly (strict=false) or strictly (strict=true)
/// increasing circular order starting from its first element.
/// Requires at least 3 entries.
bool cyclically_ordered(std::span<const Angle> angles, bool strict);

}  // namespace lam
