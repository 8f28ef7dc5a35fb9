#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "liechar/steinberg.hpp"

using namespace liechar;
using fixtures::w;

namespace {

BigInt factor_dimension(const WeightMultiset& f, std::int64_t q, const CharacterLibrary& lib) {
  BigInt total = 0;
  for (auto& [lambda, m] : f) total += m * dimension(q_restricted_character(lambda, q, lib));
  return total;
}

CharacterLibrary a1_library(std::int64_t p) {
  auto a1 = make_datum("A1");
  CharacterLibrary lib(a1, p);
  for (std::int64_t k = 0; k < p; ++k) lib.insert(weyl_character(a1, w({k})));
  return lib;
}

}  // namespace

TEST_CASE("base-p digits") {
  auto f = base_p_digits(w({0, 1, 0, 4}), 3);
  CHECK(f.digits == std::vector<Weight>{w({0, 1, 0, 1}), w({0, 0, 0, 1})});
  CHECK(base_p_digits(w({2, 1, 0, 2}), 3).digits == std::vector<Weight>{w({2, 1, 0, 2})});
  CHECK(base_p_digits(w({0, 3, 0, 6}), 3).digits == std::vector<Weight>{w({0, 0, 0, 0}), w({0, 1, 0, 2})});
  CHECK(base_p_digits(w({0, 0}), 5).digits.size() == 1);
  CHECK_THROWS_AS(base_p_digits(w({-1, 0}), 3), Error);

  std::mt19937_64 rng(17);
  for (std::int64_t p : {2, 3, 5}) {
    std::uniform_int_distribution<std::int64_t> dist(0, p * p * p - 1);
    for (int k = 0; k < 100; ++k) {
      Weight x = Weight::NullaryExpr(4, [&] { return dist(rng); });
      auto d = base_p_digits(x, p);
      CHECK(resum(d) == x);
      for (auto& digit : d.digits) CHECK(is_restricted(digit, p));
    }
  }
}

TEST_CASE("restriction factors follow the twist") {
  auto plus = make_datum("D4");
  auto minus = make_datum("D4", {2, 1, 3, 4});
  auto triality = make_datum("D4", {2, 4, 3, 1});
  CHECK(restriction_factors(w({0, 1, 0, 4}), 3, plus->twist()) ==
        std::vector<Weight>{w({0, 1, 0, 1}), w({0, 0, 0, 1})});
  CHECK(restriction_factors(w({0, 1, 0, 4}), 3, minus->twist()) ==
        std::vector<Weight>{w({0, 1, 0, 1}), w({0, 0, 0, 1})});
  CHECK(restriction_factors(w({0, 1, 0, 4}), 3, triality->twist()) ==
        std::vector<Weight>{w({0, 1, 0, 1}), w({0, 1, 0, 0})});
  CHECK(restriction_factors(w({2, 0, 1, 2}), 3, triality->twist()) == std::vector<Weight>{w({2, 0, 1, 2})});
  CHECK(restriction_factors(w({0, 0, 0, 0}), 3, triality->twist()) == std::vector<Weight>{w({0, 0, 0, 0})});
}

TEST_CASE("restriction factors are invariant under lambda -> lambda q F0") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> dist(0, 30);
  for (auto perm : std::vector<std::vector<int>>{{1, 2, 3, 4}, {2, 1, 3, 4}, {2, 4, 3, 1}}) {
    auto d = make_datum("D4", perm);
    for (int k = 0; k < 50; ++k) {
      Weight x = Weight::NullaryExpr(4, [&] { return dist(rng); });
      auto a = restriction_factors(x, 3, d->twist());
      auto b = restriction_factors(Weight(x * d->twist() * 3), 3, d->twist());
      std::sort(a.begin(), a.end(), LexLess{});
      std::sort(b.begin(), b.end(), LexLess{});
      CHECK(a == b);
    }
  }
}

TEST_CASE("q-restricted characters") {
  auto d4 = make_datum("D4");
  CharacterLibrary lib(d4, 3);
  for (auto lambda : {w({0, 0, 0, 0}), w({0, 0, 0, 1}), w({1, 1, 1, 1}), w({0, 1, 0, 1})})
    lib.insert(weyl_character(d4, lambda));
  CHECK(q_restricted_character(w({0, 0, 0, 1}), 3, lib) == lib.at(w({0, 0, 0, 1})));
  auto c = q_restricted_character(w({4, 4, 4, 4}), 9, lib);
  CHECK(dimension(c) == dimension(lib.at(w({1, 1, 1, 1}))) * dimension(lib.at(w({1, 1, 1, 1}))));
  auto e = q_restricted_character(w({0, 1, 0, 4}), 9, lib);
  CHECK(e == tensor_product(lib.at(w({0, 1, 0, 1})), frobenius_twist(lib.at(w({0, 0, 0, 1})), 3, 1)));
  CHECK_THROWS_AS(q_restricted_character(w({0, 0, 0, 9}), 9, lib), Error);
  CHECK_THROWS_AS(q_restricted_character(w({0, 0, 0, 2}), 9, lib), Error);
}

TEST_CASE("tensor decomposition over G(q) for SL2") {
  auto lib = a1_library(2);
  // L(1) (x) L(1) = L(2) + 2 L(0) for the algebraic group; over SL2(2)
  // the factor L(2) restricts to L(1).
  CHECK(gq_tensor_decompose(w({1}), w({1}), 4, lib) == WeightMultiset{{w({2}), 1}, {w({0}), 2}});
  CHECK(gq_tensor_decompose(w({1}), w({1}), 2, lib) == WeightMultiset{{w({1}), 1}, {w({0}), 2}});
  CHECK(gq_tensor_decompose(w({1}), w({0}), 2, lib) == WeightMultiset{{w({1}), 1}});

  auto lib3 = a1_library(3);
  for (std::int64_t q : {3, 9, 27})
    for (std::int64_t a = 0; a < q; a += 2)
      for (std::int64_t b = 0; b < q; b += 3) {
        auto f = gq_tensor_decompose(w({a}), w({b}), q, lib3);
        CHECK(factor_dimension(f, q, lib3) ==
              dimension(q_restricted_character(w({a}), q, lib3)) * dimension(q_restricted_character(w({b}), q, lib3)));
        for (auto& [lambda, m] : f) CHECK(is_restricted(lambda, q));
      }
}

TEST_CASE("tensor decomposition over twisted SL3(2)") {
  // A2 in characteristic 2: every restricted irreducible is a Weyl module.
  auto a2 = make_datum("A2", {2, 1});
  CharacterLibrary lib(a2, 2);
  for (auto lambda : restricted_weights(2, 2)) lib.insert(weyl_character(a2, lambda));
  for (auto lambda1 : restricted_weights(2, 4))
    for (auto lambda2 : restricted_weights(2, 4)) {
      auto f = gq_tensor_decompose(lambda1, lambda2, 4, lib);
      CHECK(factor_dimension(f, 4, lib) ==
            dimension(lib.irreducible(lambda1)) * dimension(lib.irreducible(lambda2)));
    }
  // L(1,0) (x) L(0,1) = L(1,1) + L(0,0) (8 + 1).
  CHECK(gq_tensor_decompose(w({1, 0}), w({0, 1}), 2, lib) == WeightMultiset{{w({1, 1}), 1}, {w({0, 0}), 1}});
  // L(1,0) (x) L(1,0) = L(2,0) + 2 L(0,1) in characteristic 2, and
  // L(2,0) = L(1,0)^[1] restricts to L(0,1) over the unitary group U3(2).
  CHECK(gq_tensor_decompose(w({1, 0}), w({1, 0}), 2, lib) == WeightMultiset{{w({0, 1}), 3}});
  CHECK(gq_tensor_decompose(w({1, 0}), w({1, 0}), 4, lib) == WeightMultiset{{w({2, 0}), 1}, {w({0, 1}), 2}});
}

TEST_CASE("irreducible degrees") {
  std::map<Weight, BigInt, LexLess> dims;
  auto d4 = make_datum("D4");
  for (auto lambda : restricted_weights(4, 3)) dims[lambda] = weyl_dimension(*d4, lambda);
  auto deg = irreducible_degrees(4, 3, 3, dims);
  CHECK(deg.size() == 81);
  CHECK(deg.at(w({0, 0, 0, 0})) == 1);
  CHECK(deg.at(w({2, 2, 2, 2})) == BigInt(531441));
  auto deg9 = irreducible_degrees(4, 9, 3, dims);
  CHECK(deg9.size() == 6561);
  CHECK(deg9.at(w({8, 8, 8, 8})) == BigInt(531441) * 531441);
}

TEST_CASE("F4 special digits") {
  auto f4 = make_datum("F4");
  const std::vector<Weight> m{w({0, 0, 0, 0}), w({0, 0, 0, 1}), w({0, 0, 1, 0}), w({0, 0, 1, 1})};
  for (auto& lambda : m) {
    CHECK(f4_special_digits(*f4, 2, lambda).digits == std::vector<Weight>{lambda});
    if (lambda.isZero()) continue;
    Weight shifted = lambda * f4_special_isogeny();
    CHECK(f4_special_digits(*f4, 2, shifted).digits == std::vector<Weight>{w({0, 0, 0, 0}), lambda});
  }
  // Ft^2 = 2 Id.
  CHECK(f4_special_isogeny() * f4_special_isogeny() == 2 * IntMatrix::Identity(4, 4));
  auto f = f4_special_digits(*f4, 2, w({1, 1, 1, 1}));
  CHECK(resum(f) == w({1, 1, 1, 1}));
  for (auto& d : f.digits) CHECK(std::find(m.begin(), m.end(), d) != m.end());
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> dist(0, 40);
  for (int k = 0; k < 100; ++k) {
    Weight x = Weight::NullaryExpr(4, [&] { return dist(rng); });
    CHECK(resum(f4_special_digits(*f4, 2, x)) == x);
  }
  CHECK_THROWS_AS(f4_special_digits(*make_datum("D4"), 2, w({0, 0, 0, 1})), Error);
  CHECK_THROWS_AS(f4_special_digits(*f4, 3, w({0, 0, 0, 1})), Error);
}
