#include "lam/chord.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lam {

Chord::Chord(Angle x, Angle y) {
  if (y < x) std::swap(x, y);
  a_ = std::move(x);
  b_ = std::move(y);
}

Chord Chord::parse(std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw std::invalid_argument("Chord: expected 'p/q-r/s', got '" + std::string(text) + "'");
  }
  return Chord(Angle::parse(text.substr(0, dash)), Angle::parse(text.substr(dash + 1)));
}

std::string Chord::str() const { return a_.str() + "-" + b_.str(); }

bool in_open_arc(const Angle& x, const Angle& u, const Angle& v) {
  mpq_class t = arc_length(u, x);
  if (t == 0) return false;
  mpq_class len = u == v ? mpq_class(1) : arc_length(u, v);
  return t < len;
}

bool linked(const Chord& c1, const Chord& c2) {
  if (c1 == c2 || c1.degenerate() || c2.degenerate()) return false;
  if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b())) return false;
  bool a_in = in_open_arc(c2.a(), c1.a(), c1.b());
  bool b_in = in_open_arc(c2.b(), c1.a(), c1.b());
  return a_in != b_in;
}

bool chords_disjoint(const Chord& c1, const Chord& c2) {
  if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b())) return false;
  return !linked(c1, c2);
}

bool is_critical(int degree, const Chord& c) {
  if (c.degenerate()) return false;
  return sigma(degree, c.a()) == sigma(degree, c.b());
}

Chord chord_image(int degree, const Chord& c) {
  return Chord(sigma(degree, c.a()), sigma(degree, c.b()));
}

std::vector<Chord> siblings(int degree, const Chord& c) {
  Chord img = chord_image(degree, c);
  if (img.degenerate()) {
    throw std::domain_error("siblings: chord is critical (degenerate image)");
  }
  std::vector<Angle> ps = preimages(degree, sigma(degree, c.a()));
  std::vector<Angle> qs = preimages(degree, sigma(degree, c.b()));
  std::erase(ps, c.a());
  std::erase(qs, c.b());

  // Try every matching of the remaining preimage points; keep the ones
  // whose chords are pairwise disjoint and disjoint from c.
  std::vector<size_t> perm(qs.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::vector<std::vector<Chord>> valid;
  do {
    std::vector<Chord> cand;
    cand.reserve(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) cand.emplace_back(ps[i], qs[perm[i]]);
    bool ok = true;
    for (size_t i = 0; i < cand.size() && ok; ++i) {
      if (!chords_disjoint(cand[i], c)) ok = false;
      for (size_t j = i + 1; j < cand.size() && ok; ++j) {
        if (!chords_disjoint(cand[i], cand[j])) ok = false;
      }
    }
    if (ok) valid.push_back(std::move(cand));
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (valid.empty()) {
    throw std::domain_error("siblings: no disjoint sibling matching exists");
  }
  size_t pick = 0;
  if (valid.size() > 1) {
    // Tie-break: the matching whose chords each fit in one closed
    // fundamental arc [k/d,(k+1)/d] (the matching the pullback uses).
    for (size_t m = 0; m < valid.size(); ++m) {
      bool all_fund = true;
      for (const Chord& ch : valid[m]) {
        bool fund = false;
        for (int k = 0; k < degree && !fund; ++k) {
          Angle lo(k, degree);
          mpq_class w(1, degree);
          if (arc_length(lo, ch.a()) <= w && arc_length(lo, ch.b()) <= w) fund = true;
        }
        if (!fund) { all_fund = false; break; }
      }
      if (all_fund) { pick = m; break; }
    }
  }
  std::vector<Chord> out = valid[pick];
  std::sort(out.begin(), out.end());
  return out;
}

bool pairwise_unlinked(const std::vector<Chord>& chords) {
  // Non-crossing test by balanced nesting of endpoints along [0,1).
  // Chords are intervals [a,b]; at each circle point close matured chords
  // (they must sit on top of the stack), then open new ones, farthest
  // closing pushed first.
  struct Events {
    std::vector<int> opens;
    std::vector<int> closes;
  };
  std::map<Angle, Events> events;
  for (size_t i = 0; i < chords.size(); ++i) {
    if (chords[i].degenerate()) continue;
    events[chords[i].a()].opens.push_back(static_cast<int>(i));
    events[chords[i].b()].closes.push_back(static_cast<int>(i));
  }
  std::vector<int> stack;
  for (auto& [angle, ev] : events) {
    std::vector<int>& closing = ev.closes;
    for (size_t k = 0; k < closing.size(); ++k) {
      if (stack.empty()) return false;
      int top = stack.back();
      if (std::find(closing.begin(), closing.end(), top) == closing.end()) return false;
      stack.pop_back();
    }
    std::vector<int> opens = ev.opens;
    std::sort(opens.begin(), opens.end(), [&](int x, int y) {
      return chords[y].b() < chords[x].b();  // farther close deeper
    });
    for (int id : opens) stack.push_back(id);
  }
  return stack.empty();
}

}  // namespace lam
