#include <random>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "fixtures.hpp"
#include "liechar/root_datum.hpp"

using namespace liechar;
using fixtures::w;

namespace {

// Independent closure: all products of the generators, no formula.
std::size_t closure_size(const std::vector<IntMatrix>& gens) {
  std::unordered_set<IntMatrix, MatrixHash, MatrixEqual> seen;
  std::vector<IntMatrix> queue{IntMatrix::Identity(gens[0].rows(), gens[0].cols())};
  seen.insert(queue[0]);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      IntMatrix next = queue[k] * g;
      if (seen.insert(next).second) queue.push_back(next);
    }
  return queue.size();
}

std::set<std::vector<std::int64_t>> root_closure(const RootDatum& d) {
  std::set<std::vector<std::int64_t>> roots;
  std::vector<Weight> queue;
  for (int i = 0; i < d.rank(); ++i) queue.push_back(d.root_matrix().row(i));
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::vector<std::int64_t> key(queue[k].begin(), queue[k].end());
    if (!roots.insert(key).second) continue;
    for (const auto& s : d.reflections()) queue.push_back(queue[k] * s);
  }
  return roots;
}

}  // namespace

TEST_CASE("D4 reflections match the printed matrices") {
  auto d4 = make_datum("D4");
  auto expected = fixtures::d4_reflections();
  REQUIRE(d4->reflections().size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(d4->reflections()[i] == expected[i]);
  CHECK(d4->weyl_order() == 192);
  CHECK(d4->num_positive_roots() == 12);
  CHECK(root_closure(*d4).size() == 24);
  CHECK(d4->weyl_elements().size() == 192);
}

TEST_CASE("A1 datum") {
  auto a1 = make_datum("A1");
  CHECK(a1->reflections()[0] == fixtures::mat({{-1}}));
  CHECK(a1->weyl_order() == 2);
  CHECK(a1->num_positive_roots() == 1);
  CHECK(a1->weyl_elements().size() == 2);
}

TEST_CASE("Weyl group orders agree with closure") {
  for (auto type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "A2+A1", "B4", "D5"}) {
    CAPTURE(type);
    auto d = make_datum(type);
    CHECK(BigInt(closure_size(d->reflections())) == d->weyl_order());
    CHECK(root_closure(*d).size() == 2 * d->positive_roots().size());
    for (const auto& s : d->reflections()) CHECK((s * s).isIdentity());
  }
  CHECK(make_datum("F4")->weyl_elements().size() == 1152);
  CHECK(make_datum("E6")->weyl_elements().size() == 51840);
}

TEST_CASE("E8 enumeration is refused") {
  auto e8 = make_datum("E8");
  CHECK(e8->weyl_order() == BigInt(696729600));
  try {
    e8->weyl_elements();
    FAIL("expected GroupTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
}

TEST_CASE("roots are W-stable and twist-stable") {
  for (auto [type, perm] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"D4", {2, 1, 3, 4}}, {"D4", {2, 4, 3, 1}}, {"A3", {3, 2, 1}}, {"E6", {6, 2, 5, 4, 3, 1}}}) {
    CAPTURE(type);
    auto d = make_datum(type, perm);
    auto roots = root_closure(*d);
    for (const auto& r : roots) {
      Weight x(d->rank());
      for (int i = 0; i < d->rank(); ++i) x[i] = r[static_cast<std::size_t>(i)];
      Weight y = x * d->twist();
      CHECK(roots.count(std::vector<std::int64_t>(y.begin(), y.end())) == 1);
      for (const auto& s : d->reflections()) {
        Weight z = x * s;
        CHECK(roots.count(std::vector<std::int64_t>(z.begin(), z.end())) == 1);
      }
    }
  }
}

TEST_CASE("incompatible twists and non-finite types are rejected") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { make_datum("D4", {3, 2, 1, 4}); }) == ErrorCode::TwistIncompatible);
  CHECK(code([] { make_datum("B3", {3, 2, 1}); }) == ErrorCode::TwistIncompatible);
  IntMatrix affine = fixtures::mat({{2, -2}, {-2, 2}});
  CHECK(code([&] { RootDatum::build(affine); }) == ErrorCode::NotFiniteType);
  IntMatrix bad = fixtures::mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(code([&] { RootDatum::build(bad); }) == ErrorCode::NotFiniteType);
}

TEST_CASE("root basis conversion") {
  auto d4 = make_datum("D4");
  CHECK(d4->to_root_basis(w({0, 0, 0, 0})) == RatRow::Zero(4));
  RatRow e1 = RatRow::Zero(4);
  e1[0] = 1;
  CHECK(d4->to_root_basis(w({2, 0, -1, 0})) == e1);
  RatRow diff = d4->to_root_basis(w({0, 1, 0, 4}) - w({0, 1, 0, 2}));
  for (int i = 0; i < 4; ++i) CHECK(diff[i] >= 0);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  for (int k = 0; k < 100; ++k) {
    Weight x = Weight::NullaryExpr(4, [&] { return dist(rng); });
    RatRow c = d4->to_root_basis(x);
    RatRow back = RatRow::Zero(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) back[j] += c[i] * Rational(d4->root_matrix()(i, j));
    for (int j = 0; j < 4; ++j) CHECK(back[j] == Rational(x[j]));
  }
}

TEST_CASE("classification normalizes numbering") {
  auto d4 = make_datum("D4");
  REQUIRE(d4->components().size() == 1);
  CHECK(d4->type() == "D4");
  CHECK(make_datum("F4")->type() == "F4");
  CHECK(make_datum("A2+A1")->type() == "A2+A1");
  // Relabelled D4 with the branch node first.
  IntMatrix perm = fixtures::mat({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}});
  auto c = classify_root_matrix(perm.transpose());
  REQUIRE(c.size() == 1);
  CHECK(c[0].name() == "D4");
  CHECK(c[0].nodes[2] == 0);
}

TEST_CASE("parabolic orders agree with closure") {
  auto f4 = make_datum("F4");
  std::vector<std::vector<int>> subsets{{}, {0}, {0, 1}, {1, 2}, {0, 2}, {0, 1, 2}, {1, 2, 3}, {0, 1, 2, 3}};
  for (const auto& j : subsets) {
    std::vector<IntMatrix> gens{IntMatrix::Identity(4, 4)};
    for (int i : j) gens.push_back(f4->reflections()[static_cast<std::size_t>(i)]);
    CHECK(BigInt(closure_size(gens)) == f4->parabolic_order(j));
  }
}
