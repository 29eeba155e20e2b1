#include "lam/angle.hpp"

#include <stdexcept>

namespace lam {

void Angle::normalize() {
  v_.canonicalize();
  if (v_ < 0 || v_ >= 1) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    v_ -= fl;
    v_.canonicalize();
  }
}

Angle::Angle(long num, long den) {
  if (den <= 0) throw std::invalid_argument("Angle: denominator must be positive");
  v_ = mpq_class(num, den);
  normalize();
}

Angle Angle::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Angle: empty string");
  try {
    mpq_class v(s);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
    return Angle(v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Angle: cannot parse '" + s + "'");
  }
}

std::string Angle::str() const {
  if (v_ == 0) return "0";
  return v_.get_str();
}

mpq_class arc_length(const Angle& from, const Angle& to) {
  return (to - from).value();
}

bool Arc::contains(const Angle& x) const {
  mpq_class t = arc_length(start, x);
  mpq_class len = length();
  if (t == 0) {
    return closedness == Closedness::closed || closedness == Closedness::half_open_right;
  }
  if (t == len) {
    return closedness == Closedness::closed || closedness == Closedness::half_open_left;
  }
  return t < len;
}

Angle sigma(int degree, const Angle& a) {
  if (degree < 2) throw std::invalid_argument("sigma: degree must be >= 2");
  return Angle(a.value() * degree);
}

std::vector<Angle> preimages(int degree, const Angle& a) {
  if (degree < 2) throw std::invalid_argument("preimages: degree must be >= 2");
  std::vector<Angle> out;
  out.reserve(degree);
  for (int k = 0; k < degree; ++k) {
    out.emplace_back(mpq_class(a.value() + k) / degree);
  }
  return out;  // (a+k)/d is already ascending in [0,1)
}

bool cyclically_ordered(std::span<const Angle> angles, bool strict) {
  if (angles.size() < 3) {
    throw std::invalid_argument("cyclically_ordered: need at least 3 angles");
  }
  // Walk the cycle; the number of full turns is the sum of forward steps.
  mpq_class total = 0;
  for (size_t i = 0; i < angles.size(); ++i) {
    const Angle& cur = angles[i];
    const Angle& nxt = angles[(i + 1) % angles.size()];
    mpq_class step = arc_length(cur, nxt);
    if (strict && step == 0) return false;
    total += step;
  }
  // total is an integer: the winding number of the walk.
  if (strict) return total == 1;
  return total <= 1;
}

}  // namespace lam
