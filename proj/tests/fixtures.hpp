#pragma once

#include <vector>

#include "liechar/dominant_character.hpp"

namespace fixtures {

using liechar::DatumPtr;
using liechar::DominantCharacter;
using liechar::IntMatrix;
using liechar::Weight;
using liechar::WeightMultiset;

inline Weight w(std::initializer_list<std::int64_t> c) {
  Weight out(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (auto x : c) out[i++] = x;
  return out;
}

inline IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (auto x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

/// Reflections of D4 on X, as printed with the datum.
inline std::vector<IntMatrix> d4_reflections() {
  return {mat({{-1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
          mat({{1, 0, 0, 0}, {0, -1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
          mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, -1, 1}, {0, 0, 0, 1}}),
          mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, -1}})};
}

/// Dominant character of L(0,1,0,2) for D4 in characteristic 3.
inline DominantCharacter d4_l0102(const DatumPtr& d4) {
  WeightMultiset e{{w({0, 1, 0, 2}), 1}, {w({0, 1, 1, 0}), 1}, {w({1, 0, 0, 1}), 3}, {w({0, 1, 0, 0}), 6}};
  return DominantCharacter(d4, e, w({0, 1, 0, 2}));
}

struct Row {
  Weight mu;
  std::int64_t mult;
  std::int64_t orbit;
};

/// L(0,1,0,2) (x) L(0,0,0,2) for D4, p = 3.
inline std::vector<Row> d4_tensor_table() {
  return {{w({0, 1, 0, 4}), 1, 32},  {w({0, 1, 1, 2}), 2, 96},  {w({0, 1, 2, 0}), 3, 48},
          {w({1, 2, 0, 1}), 4, 96},  {w({1, 0, 0, 3}), 6, 32},  {w({1, 0, 1, 1}), 11, 96},
          {w({2, 1, 0, 0}), 15, 32}, {w({0, 3, 0, 0}), 6, 8},   {w({0, 1, 0, 2}), 24, 32},
          {w({0, 1, 1, 0}), 34, 48}, {w({1, 0, 0, 1}), 63, 32}, {w({0, 1, 0, 0}), 112, 8}};
}

inline std::vector<Weight> d4_orbit_0100() {
  return {w({0, 1, 0, 0}),  w({0, -1, 1, 0}), w({1, 0, -1, 1}), w({-1, 0, 0, 1}),
          w({1, 0, 0, -1}), w({-1, 0, 1, -1}), w({0, 1, -1, 0}), w({0, -1, 0, 0})};
}

}  // namespace fixtures

#include "liechar/table_matching.hpp"

namespace fixtures {

/// Classical character table of SL(2,3): classes 1a 2a 3a 3b 4a 6a 6b.
inline liechar::AbstractTable sl2_3_table() {
  using liechar::Cyclotomic;
  liechar::AbstractTable t;
  t.p_hint = 3;
  auto cls = [&](std::string name, std::int64_t order, std::int64_t cent, std::map<std::int64_t, std::size_t> power,
                 std::map<std::size_t, std::size_t> central) {
    t.classes.push_back({std::move(name), order, liechar::BigInt(cent), std::move(power), std::move(central)});
  };
  cls("1a", 1, 24, {{2, 0}, {3, 0}}, {{0, 0}, {1, 1}});
  cls("2a", 2, 24, {{2, 0}, {3, 1}}, {{0, 1}, {1, 0}});
  cls("3a", 3, 6, {{2, 3}, {3, 0}}, {{0, 2}, {1, 5}});
  cls("3b", 3, 6, {{2, 2}, {3, 0}}, {{0, 3}, {1, 6}});
  cls("4a", 4, 4, {{2, 1}, {3, 4}}, {{0, 4}, {1, 4}});
  cls("6a", 6, 6, {{2, 3}, {3, 1}}, {{0, 5}, {1, 2}});
  cls("6b", 6, 6, {{2, 2}, {3, 1}}, {{0, 6}, {1, 3}});
  const Cyclotomic o = Cyclotomic::root_of_unity(3), o2 = o * o, one(1), zero(0);
  t.chars = {{one, one, one, one, one, one, one},
             {one, one, o, o2, one, o, o2},
             {one, one, o2, o, one, o2, o},
             {Cyclotomic(2), Cyclotomic(-2), -one, -one, zero, one, one},
             {Cyclotomic(2), Cyclotomic(-2), -o, -o2, zero, o, o2},
             {Cyclotomic(2), Cyclotomic(-2), -o2, -o, zero, o2, o},
             {Cyclotomic(3), Cyclotomic(3), zero, zero, -one, zero, zero}};
  // Complex conjugation swaps 3a/3b and 6a/6b.
  t.automorphisms = {{0, 1, 3, 2, 4, 6, 5}};
  return t;
}

/// Library of Weyl characters for all weights with coordinates below `bound`.
inline liechar::CharacterLibrary weyl_library(const DatumPtr& d, std::int64_t p, std::int64_t bound) {
  liechar::CharacterLibrary lib(d, p);
  for (const auto& lambda : liechar::restricted_weights(d->rank(), bound)) {
    auto c = liechar::weyl_character(d, lambda);
    c.set_label(lambda);
    lib.insert(c);
  }
  return lib;
}

}  // namespace fixtures
