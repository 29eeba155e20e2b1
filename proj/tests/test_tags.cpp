#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lam/tags.hpp"

using namespace lam;

namespace {

Lamination make(int degree, std::initializer_list<const char*> chords, int depth = 0) {
  std::vector<Chord> cs;
  for (const char* s : chords) cs.push_back(Chord::parse(s));
  return Lamination(degree, std::move(cs), depth);
}

MarkedLamination two_leaves(const char* l1, const char* l2, const char* p1, const char* p2) {
  Lamination L = make(3, {l1, l2});
  return MarkedLamination(L, Polygon::parse(p1), Polygon::parse(p2));
}

}  // namespace

TEST_CASE("minor set is the image of the second entry") {
  MarkedLamination M = two_leaves("0-1/3", "1/2-5/6", "0,1/3", "1/2,5/6");
  CHECK(minor_set(M) == Polygon::parse("1/2"));

  Lamination T = make(3, {"0-1/3", "1/3-2/3", "0-2/3"});
  Polygon tri = Polygon::parse("0,1/3,2/3");
  CHECK(minor_set(MarkedLamination(T, tri, tri)) == Polygon::parse("0"));
}

TEST_CASE("cocritical hull: worked examples") {
  CHECK(cocritical_hull(Polygon::parse("0,1/3")) == Polygon::parse("2/3"));
  CHECK(cocritical_hull(Polygon::parse("0,1/12,1/3,5/12")) == Polygon::parse("2/3,3/4"));
  // the triangle 0,1/3,2/3 has no hole longer than 1/3
  CHECK_THROWS_AS(cocritical_hull(Polygon::parse("0,1/3,2/3")), std::domain_error);
}

TEST_CASE("cocritical set: unicritical pattern returns the set itself") {
  Lamination T = make(3, {"0-1/3", "1/3-2/3", "0-2/3"});
  Polygon tri = Polygon::parse("0,1/3,2/3");
  CHECK(cocritical_set(MarkedLamination(T, tri, tri)) == tri);
}

TEST_CASE("mixed tag and relations") {
  MarkedLamination M1 = two_leaves("0-1/3", "1/2-5/6", "0,1/3", "1/2,5/6");
  MixedTag t1 = mixed_tag(M1);
  CHECK(t1.left == Polygon::parse("2/3"));
  CHECK(t1.right == Polygon::parse("1/2"));
  CHECK(t1.str() == "left: 2/3\nright: 1/2\n");

  SUBCASE("equal to itself") {
    CHECK(mixed_tag_relation(M1, M1) == TagRelation::equal);
  }
  SUBCASE("swapped pattern gives a disjoint tag") {
    MarkedLamination M2 = two_leaves("0-1/3", "1/2-5/6", "1/2,5/6", "0,1/3");
    CHECK(mixed_tag_relation(M1, M2) == TagRelation::disjoint);
  }
  SUBCASE("product logic: same left, disjoint rights -> disjoint") {
    MixedTag a{Polygon::parse("2/3"), Polygon::parse("0,1/9")};
    MixedTag b{Polygon::parse("2/3"), Polygon::parse("1/3,4/9")};
    CHECK(tag_relation(a, b) == TagRelation::disjoint);
    MixedTag c{Polygon::parse("2/3"), Polygon::parse("1/9,1/3")};
    CHECK(tag_relation(a, c) == TagRelation::overlap);  // share boundary vertex 1/9
  }
}

TEST_CASE("distinct edges of the all-critical triangle give disjoint tags") {
  Lamination T = make(3, {"0-1/3", "1/3-2/3", "0-2/3"});
  Polygon tri = Polygon::parse("0,1/3,2/3");
  MarkedLamination Ma(T, Polygon::parse("0,1/3"), tri);
  MarkedLamination Mb(T, Polygon::parse("1/3,2/3"), tri);
  MarkedLamination Mc(T, Polygon::parse("0,2/3"), tri);
  CHECK(cocritical_set(Ma) == Polygon::parse("2/3"));
  CHECK(cocritical_set(Mb) == Polygon::parse("0"));
  CHECK(cocritical_set(Mc) == Polygon::parse("1/3"));
  CHECK(mixed_tag_relation(Ma, Mb) == TagRelation::disjoint);
  CHECK(mixed_tag_relation(Ma, Mc) == TagRelation::disjoint);
  CHECK(mixed_tag_relation(Mb, Mc) == TagRelation::disjoint);
}

TEST_CASE("collapsing quadrilateral reconstruction identity (sampled)") {
  std::mt19937_64 rng(31);
  Angle third(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    long den = 2 + static_cast<long>(rng() % 9998);
    Angle a(static_cast<long>(rng() % den), den);
    long span = 1 + static_cast<long>(rng() % den);
    Angle b = a + Angle(span, den * 3);  // b strictly inside (a, a+1/3)
    if (b == a || arc_length(a, b) >= mpq_class(1, 3)) continue;
    Polygon C({a, b, a + third, b + third});
    Polygon co = cocritical_hull(C);
    std::vector<Angle> rebuilt;
    for (const Angle& v : co.vertices()) {
      rebuilt.push_back(v + third);
      rebuilt.push_back(v + third + third);
    }
    REQUIRE(Polygon(rebuilt) == C);
  }
}

TEST_CASE("family report") {
  MarkedLamination M = two_leaves("0-1/3", "1/2-5/6", "0,1/3", "1/2,5/6");
  SUBCASE("single element: trivially clean") {
    FamilyReport rep = family_disjoint_or_equal({M});
    CHECK(rep.pass());
    CHECK(rep.disjoint == 0);
    CHECK(rep.equal == 0);
  }
  SUBCASE("duplicated element: one equal pair") {
    FamilyReport rep = family_disjoint_or_equal({M, M});
    CHECK(rep.pass());
    CHECK(rep.equal == 1);
    std::string text = rep.text({mixed_tag(M), mixed_tag(M)});
    CHECK(text.find("pair 0 1: equal") != std::string::npos);
    CHECK(text.find("overlap=0") != std::string::npos);
  }
}

TEST_CASE("usc probe") {
  MarkedLamination M = two_leaves("0-1/3", "1/2-5/6", "0,1/3", "1/2,5/6");
  SUBCASE("constant sequence converges to itself") {
    CHECK(usc_probe({M, M, M}, M));
  }
  SUBCASE("sequence far from the limit is rejected") {
    MarkedLamination far = two_leaves("1/9-4/9", "11/18-17/18", "1/9,4/9", "11/18,17/18");
    CHECK_THROWS_AS(usc_probe({far, far, far}, M), std::invalid_argument);
  }
  SUBCASE("empty sequence is rejected") {
    CHECK_THROWS_AS(usc_probe({}, M), std::invalid_argument);
  }
}
