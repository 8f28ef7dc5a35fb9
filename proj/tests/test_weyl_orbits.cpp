#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "liechar/weyl_orbits.hpp"

using namespace liechar;
using fixtures::w;

TEST_CASE("dominant representatives") {
  auto d4 = make_datum("D4");
  CHECK(dominant_representative(*d4, w({0, -1, 1, 0})) == w({0, 1, 0, 0}));
  CHECK(dominant_representative(*d4, w({-1, 0, 0, 1})) == w({0, 1, 0, 0}));
  CHECK(dominant_representative(*d4, w({3, 0, 2, 1})) == w({3, 0, 2, 1}));
}

TEST_CASE("orbit of (0,1,0,0)") {
  auto d4 = make_datum("D4");
  auto rec = orbit(*d4, w({0, 1, 0, 0}));
  auto expected = fixtures::d4_orbit_0100();
  REQUIRE(rec.elements->size() == 8);
  std::sort(expected.begin(), expected.end(), LexLess{});
  auto got = *rec.elements;
  std::sort(got.begin(), got.end(), LexLess{});
  CHECK(got == expected);
  CHECK(rec.length == 8);
  CHECK(orbit(*d4, w({0, 0, 0, 0})).length == 1);
  CHECK(orbit(*d4, w({0, 1, 0, 2})).elements->size() == 32);
}

TEST_CASE("orbit lengths") {
  auto d4 = make_datum("D4");
  CHECK(orbit_length(*d4, w({0, 1, 1, 0})) == 48);
  CHECK(orbit_length(*d4, w({1, 0, 0, 1})) == 32);
  CHECK(orbit_length(*d4, w({0, 1, 0, 0})) == 8);
  CHECK(orbit_length(*d4, w({0, 0, 0, 0})) == 1);
  CHECK(orbit_length(*d4, w({1, 2, 3, 1})) == 192);
  CHECK_THROWS_AS(orbit_length(*d4, w({0, -1, 0, 0})), Error);
}

TEST_CASE("random orbits agree with lengths") {
  auto d4 = make_datum("D4");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-3, 3);
  for (int k = 0; k < 50; ++k) {
    Weight x = Weight::NullaryExpr(4, [&] { return dist(rng); });
    auto elems = orbit_elements(*d4, x);
    Weight dom = dominant_representative(*d4, x);
    CHECK(BigInt(elems.size()) == orbit_length(*d4, dom));
    for (const auto& e : elems) CHECK(dominant_representative(*d4, e) == dom);
  }
}
