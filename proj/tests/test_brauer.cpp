#include "doctest.h"
#include "fixtures.hpp"
#include "liechar/brauer.hpp"
#include "liechar/weyl_orbits.hpp"

using namespace liechar;
using fixtures::w;
using fixtures::weyl_library;

namespace {

// Value at t straight from the definition: sum over every weight.
Cyclotomic naive_value(const DominantCharacter& c, const TorusElement& t) {
  Cyclotomic sum(0);
  for (const auto& [mu, m] : c.entries())
    for (const auto& x : orbit_elements(c.datum(), mu))
      sum += Cyclotomic(m) * Cyclotomic::root_of_unity(t.order, mod_floor(x.dot(t.numerators), t.order));
  return sum;
}

}  // namespace

TEST_CASE("Brauer table of SL2(3)") {
  auto a1 = make_datum("A1");
  auto lib = weyl_library(a1, 3, 3);
  auto classes = semisimple_classes(a1, 3, 3);
  auto table = brauer_table(lib, classes);
  REQUIRE(table.labels.size() == 3);
  // Columns (0), (1/2), (1/4).
  const std::int64_t expected[3][3] = {{1, 1, 1}, {2, -2, 0}, {3, 3, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(table.values(i, j) == Cyclotomic(expected[i][j]));
  CHECK(table_rank(table.values, table.conductor()).rank == 3);
}

TEST_CASE("Brauer values agree with the definition") {
  auto d = make_datum("D4", {2, 1, 3, 4});
  auto classes = semisimple_classes(d, 3, 3);
  auto a = fixtures::d4_l0102(d);
  auto b = weyl_character(d, w({0, 0, 0, 2}));
  auto ab = tensor_product(a, b);
  for (std::size_t j = 0; j < classes.classes.size(); j += 8) {
    const auto& t = classes.classes[j].rep;
    auto va = brauer_value(a, t, 3);
    CHECK(va == naive_value(a, t));
    CHECK(brauer_value(ab, t, 3) == va * brauer_value(b, t, 3));
    // Frobenius twist on the weights is the Galois action on values.
    CHECK(brauer_value(frobenius_twist(a, 3, 1), t) == va.galois(3));
    CHECK(brauer_value(frobenius_twist(a, 3, 1), t) == brauer_value(a, t.scaled(3)));
  }
  CHECK(brauer_value(a, TorusElement::zero(4)) == Cyclotomic(Rational(dimension(a))));
}

TEST_CASE("Brauer values reject p-singular classes") {
  auto a1 = make_datum("A1");
  auto c = weyl_character(a1, w({1}));
  auto t = TorusElement::from_fractions({Rational(1, 3)});
  CHECK_THROWS_AS(brauer_value(c, t, 3), Error);
  CHECK(brauer_value(c, t) == Cyclotomic(-1));
}

TEST_CASE("identity column is the degree list") {
  auto d = make_datum("A2", {2, 1});
  auto lib = weyl_library(d, 2, 2);
  auto classes = semisimple_classes(d, 2, 2);
  auto table = brauer_table(lib, classes);
  REQUIRE(classes.classes[0].rep == TorusElement::zero(2));
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    CHECK(table.values(static_cast<Eigen::Index>(i), 0) == Cyclotomic(Rational(dimension(lib.irreducible(table.labels[i])))));
  auto r = table_rank(table.values, table.conductor());
  CHECK(r.exact);
  CHECK(r.rank == table.labels.size());
  CHECK(table.labels.size() == classes.classes.size());
}

TEST_CASE("modular rank detects deficiency") {
  CycMatrix m(3, 3);
  auto z = Cyclotomic::root_of_unity(3);
  m << Cyclotomic(1), z, z * z, Cyclotomic(2), z + z, z * z + z * z, Cyclotomic(0), Cyclotomic(1), Cyclotomic(1);
  auto r = table_rank(m, 3);
  CHECK(r.rank == 2);
  CHECK(r.exact);
  CHECK(splitting_prime(12, 100) % 12 == 1);
  CHECK(rank_mod({{1, 2}, {2, 4}}, 7) == 1);
}
