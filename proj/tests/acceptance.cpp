// Standalone acceptance gate. Each criterion prints exactly one line:
//   criterion N: pass — <what was verified>
//   criterion N: FAIL — <what went wrong>
// Exit code is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "lam/pullback.hpp"
#include "lam/tags.hpp"

using namespace lam;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& pass_msg, const std::string& fail_msg) {
  if (ok) {
    std::cout << "criterion " << n << ": pass — " << pass_msg << "\n";
  } else {
    std::cout << "criterion " << n << ": FAIL — " << fail_msg << "\n";
    ++failures;
  }
  std::cout.flush();
}

// ---------------------------------------------------------------- corpus

std::vector<GeneratedMarked> build_corpus() {
  return enumerate_dendritic_portraits(3, 3, 100, /*seed=*/42, /*depth=*/8);
}

void criterion1(const std::vector<GeneratedMarked>& corpus,
                std::chrono::steady_clock::time_point started) {
  std::set<std::string> distinct;
  std::vector<MarkedLamination> family;
  for (const auto& g : corpus) {
    family.push_back(g.marked);
    distinct.insert(g.marked.lamination().dump() + g.marked.c1().str() + "|" +
                    g.marked.c2().str());
  }
  if (corpus.size() < 100 || distinct.size() != corpus.size()) {
    report(1, false, "", "needed >= 100 distinct marked laminations, got " +
                             std::to_string(distinct.size()));
    return;
  }
  FamilyReport rep = family_disjoint_or_equal(family);
  size_t pairs = rep.disjoint + rep.equal + rep.overlaps.size();
  long secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() -
                                                               started)
                  .count();
  std::ostringstream ok;
  ok << corpus.size() << " dendritic marked laminations, " << pairs
     << " tag pairs, 0 overlaps (" << rep.disjoint << " disjoint, " << rep.equal
     << " equal) in " << secs << " s";
  report(1, rep.pass() && pairs >= 4950 && secs <= 300, ok.str(),
         std::to_string(rep.overlaps.size()) + " overlapping tag pairs in " +
             std::to_string(secs) + " s");
}

void criterion2(const std::vector<GeneratedMarked>& corpus) {
  size_t related = 0, violations = 0;

  auto verify = [&](const GeneratedMarked& a, const GeneratedMarked& b, int common_depth) {
    ++related;
    Lamination la = pullback_generate(a.portrait, common_depth);
    Lamination lb = pullback_generate(b.portrait, common_depth);
    bool same_leaves = la.leaves() == lb.leaves();
    auto contains = [](const Polygon& big, const Polygon& small) {
      for (const Angle& v : small.vertices()) {
        if (!big.has_vertex(v)) return false;
      }
      return true;
    };
    bool c1ok = contains(a.marked.c1(), b.marked.c1());
    bool c2ok = contains(a.marked.c2(), b.marked.c2());
    if (!(same_leaves && c1ok && c2ok)) ++violations;
  };

  for (size_t i = 0; i < corpus.size(); ++i) {
    for (size_t j = i + 1; j < corpus.size(); ++j) {
      PairClass pc = classify_pair(corpus[i].marked, corpus[j].marked);
      if (pc == PairClass::linked || pc == PairClass::essentially_equal) {
        verify(corpus[i], corpus[j], 8);
      }
    }
  }
  // constructed related pairs: the same portrait regenerated at a lower depth
  size_t constructed = 0;
  for (size_t i = 0; i < corpus.size() && constructed < 10; ++i) {
    try {
      Lamination shallow = pullback_generate(corpus[i].portrait, 6);
      MarkedLamination m(shallow, corpus[i].marked.c1(), corpus[i].marked.c2());
      GeneratedMarked g{corpus[i].portrait, m};
      PairClass pc = classify_pair(corpus[i].marked, g.marked);
      if (pc != PairClass::essentially_equal && pc != PairClass::linked) continue;
      verify(corpus[i], g, 6);
      ++constructed;
    } catch (const std::invalid_argument&) {
      continue;  // pattern entry may be realized only at full depth
    }
  }
  std::ostringstream ok;
  ok << related << " linked/essentially-equal pairs (" << constructed
     << " constructed), all with identical leaf sets at common depth and exact pattern "
        "containments";
  report(2, violations == 0 && constructed > 0, ok.str(),
         std::to_string(violations) + " containment violations among " +
             std::to_string(related) + " related pairs");
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  Lamination qml = lavaurs_qml(8);
  const auto& leaves = qml.leaves();
  size_t linked_pairs = 0;
  for (size_t i = 0; i < leaves.size(); ++i) {
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      linked_pairs += linked(leaves[i], leaves[j]);
    }
  }
  // every angle of exact period 2..8 under doubling must be paired
  std::set<Angle> endpoints;
  for (const Chord& c : leaves) {
    endpoints.insert(c.a());
    endpoints.insert(c.b());
  }
  size_t missing = 0;
  for (int k = 2; k <= 8; ++k) {
    long q = (1L << k) - 1;
    for (long p = 1; p < q; ++p) {
      long x = p;
      int j = 0;
      do {
        x = (2 * x) % q;
        ++j;
      } while (x != p && j <= k);
      if (j == k && !endpoints.count(Angle(p, q))) ++missing;
    }
  }
  long secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream ok;
  ok << leaves.size() << " minor chords through period 8, 0 linked pairs, all period-2..8 "
        "angles paired, in "
     << secs << " s";
  report(3, linked_pairs == 0 && missing == 0 && secs <= 10, ok.str(),
         std::to_string(linked_pairs) + " linked pairs, " + std::to_string(missing) +
             " unpaired periodic angles, " + std::to_string(secs) + " s");
}

void criterion4() {
  std::mt19937_64 rng(4242);
  Angle third(1, 3);
  int tested = 0, failed = 0;
  while (tested < 1000) {
    long den = 2 + static_cast<long>(rng() % 9998);
    Angle a(static_cast<long>(rng() % den), den);
    long span = 1 + static_cast<long>(rng() % den);
    Angle b = a + Angle(span, den * 3);
    if (b == a || arc_length(a, b) >= mpq_class(1, 3)) continue;
    Polygon C({a, b, a + third, b + third});
    ++tested;
    try {
      Polygon co = cocritical_hull(C);
      std::vector<Angle> rebuilt;
      for (const Angle& v : co.vertices()) {
        rebuilt.push_back(v + third);
        rebuilt.push_back(v + third + third);
      }
      if (Polygon(rebuilt) != C) ++failed;
    } catch (const std::exception&) {
      ++failed;
    }
  }
  report(4, failed == 0,
         "1000 collapsing quadrilaterals (denominators <= 10^4) reconstructed exactly from "
         "their co-critical sets",
         std::to_string(failed) + " reconstruction failures");
}

void criterion5(const std::vector<GeneratedMarked>& corpus) {
  size_t failed = 0;
  for (const auto& g : corpus) {
    if (!check_sibling_invariant(g.marked.lamination()).pass) ++failed;
  }
  report(5, failed == 0 && !corpus.empty(),
         "all " + std::to_string(corpus.size()) +
             " corpus laminations satisfy the sibling conditions at depth-1",
         std::to_string(failed) + " laminations fail the sibling check");
}

void criterion6() {
  std::mt19937_64 rng(6006);
  int sequences = 0, failed = 0;
  const long den = 1L << 20;
  while (sequences < 1000) {
    long a0 = static_cast<long>(rng() % den);
    long gap = 1 + static_cast<long>(rng() % (den / 4));
    Angle A0(a0, den), A1(a0 + gap, den);
    CriticalQuadrilateral A(2, {A0, A1, A0 + Angle(1, 2), A1 + Angle(1, 2)});
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      long e = std::max(gap >> n, 1L);
      CriticalQuadrilateral B(
          2, {Angle(a0 + gap - e, den), Angle(a0 + gap + e, den),
              Angle(a0 + gap - e, den) + Angle(1, 2), Angle(a0 + gap + e, den) + Angle(1, 2)});
      ok = ok && strongly_linked(A, B);
    }
    CriticalQuadrilateral Blim(2, {A1, A1, A1 + Angle(1, 2), A1 + Angle(1, 2)});
    ok = ok && strongly_linked(A, Blim);
    ++sequences;
    if (!ok) ++failed;
  }
  report(6, failed == 0,
         "1000 dyadic sequences of strongly linked pairs keep strong linkage at the limit",
         std::to_string(failed) + " sequences lose strong linkage");
}

void criterion7() {
  // Sequences of marked laminations whose collapsing quadrilateral shrinks
  // onto a critical leaf of the limit lamination. The chord {u,3u} with
  // u = 3^-K/2 has forward orbit {u,3u},{3u,9u},...,{1/6,1/2}: a chain of
  // consecutive chords that ends on the critical leaf {1/6,1/2} and then
  // collapses to the fixed point 1/2. The quadrilateral [u/3,u,2/3+u/3,2/3+u]
  // maps every hull edge onto the first chord of that chain, the whole chain
  // sits in its long hole, and its vertices approach {0,2/3} geometrically in
  // K (so the trajectory extrapolation inside usc_probe is exact). Mirroring
  // the circle and retargeting the chain at the fixed point 0 (u = 3^-K) give
  // four distinct families; five window offsets each make 20 sequences.
  auto pow3 = [](int k) {
    mpq_class r(1, 1);
    for (int i = 0; i < k; ++i) r /= 3;
    return r;
  };
  int built = 0, passed = 0;
  for (int f = 0; f < 4; ++f) {
    for (int s = 0; s < 5; ++s) {
      try {
        auto make = [&](bool at_limit, int k) {
          mpq_class u = at_limit ? mpq_class(0) : (f < 2 ? pow3(k) / 2 : pow3(k));
          std::array<Angle, 4> qv;
          Angle e1, e2;
          switch (f) {
            case 0:
              qv = {Angle(u / 3), Angle(u), Angle(u / 3 + mpq_class(2, 3)),
                    Angle(u + mpq_class(2, 3))};
              e1 = Angle(mpq_class(1, 6)), e2 = Angle(mpq_class(1, 2));
              break;
            case 1:
              qv = {Angle(mpq_class(1, 3) - u), Angle(mpq_class(1, 3) - u / 3), Angle(1 - u),
                    Angle(1 - u / 3)};
              e1 = Angle(mpq_class(1, 2)), e2 = Angle(mpq_class(5, 6));
              break;
            case 2:
              qv = {Angle(mpq_class(1, 3) + u / 3), Angle(mpq_class(1, 3) + u),
                    Angle(mpq_class(2, 3) + u / 3), Angle(mpq_class(2, 3) + u)};
              e1 = Angle(mpq_class(0)), e2 = Angle(mpq_class(1, 3));
              break;
            default:
              qv = {Angle(mpq_class(1, 3) - u), Angle(mpq_class(1, 3) - u / 3),
                    Angle(mpq_class(2, 3) - u), Angle(mpq_class(2, 3) - u / 3)};
              e1 = Angle(mpq_class(0)), e2 = Angle(mpq_class(2, 3));
              break;
          }
          CriticalQuadrilateral quad(3, qv);
          CriticalQuadrilateral leaf2(3, {e1, e1, e2, e2});
          CriticalPortrait P(3, {quad, leaf2});
          Lamination L = pullback_generate(P, 3);
          return MarkedLamination(L, quad.hull(), Polygon({e1, e2}));
        };
        MarkedLamination limit_marked = make(true, 0);
        std::vector<MarkedLamination> terms;
        for (int k = 9 + s; k <= 11 + s; ++k) terms.push_back(make(false, k));
        ++built;
        if (usc_probe(terms, limit_marked)) ++passed;
      } catch (const std::invalid_argument&) {
        // leave the sequence uncounted; the criterion then reports a failure
      }
    }
  }
  report(7, built == 20 && passed == 20,
         "20 shrinking-quadrilateral sequences satisfy exact coordinatewise tag containment",
         std::to_string(passed) + "/" + std::to_string(built) + " probes passed");
}

void criterion8() {
  std::mt19937_64 rng(8008);
  auto rnd_angle = [&rng]() {
    long den = 1 + static_cast<long>(rng() % 1000);
    return Angle(static_cast<long>(rng() % den), den);
  };
  auto embed = [](const Angle& a) -> std::array<double, 2> {
    double t = 2 * 3.14159265358979323846 * a.to_double();
    return {std::cos(t), std::sin(t)};
  };
  auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& p,
                  const std::array<double, 2>& q) {
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
  };
  long sampled = 0, compared = 0, disagreements = 0;
  while (sampled < 100000) {
    Chord c1(rnd_angle(), rnd_angle());
    Chord c2(rnd_angle(), rnd_angle());
    if (c1.degenerate() || c2.degenerate()) continue;
    ++sampled;
    auto p1 = embed(c1.a()), p2 = embed(c1.b()), q1 = embed(c2.a()), q2 = embed(c2.b());
    double d1 = cross(p1, p2, q1), d2 = cross(p1, p2, q2);
    double d3 = cross(q1, q2, p1), d4 = cross(q1, q2, p2);
    if (std::min({std::abs(d1), std::abs(d2), std::abs(d3), std::abs(d4)}) < 1e-9) {
      continue;  // inside the oracle's tolerance band: no confident verdict
    }
    ++compared;
    bool oracle = d1 * d2 < 0 && d3 * d4 < 0;
    if (linked(c1, c2) != oracle) ++disagreements;
  }
  std::ostringstream ok;
  ok << "exact linked() agrees with the floating oracle on " << compared << " of " << sampled
     << " random chord pairs (rest within 1e-9 tolerance band)";
  report(8, disagreements == 0 && compared > 90000, ok.str(),
         std::to_string(disagreements) + " disagreements");
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<GeneratedMarked> corpus = build_corpus();
  criterion1(corpus, t0);
  criterion2(corpus);
  criterion3();
  criterion4();
  criterion5(corpus);
  criterion6();
  criterion7();
  criterion8();
  return failures;
}
