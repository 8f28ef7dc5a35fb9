#pragma once

#include <vector>

#include "liechar/cyclotomic.hpp"
#include "liechar/dominant_character.hpp"
#include "liechar/semisimple.hpp"

namespace liechar {

/// Sum over all weights mu' of the character of m * exp(2 pi i mu'(t)).
/// Throws BadOrder when p > 0 divides the order of t.
Cyclotomic brauer_value(const DominantCharacter& character, const TorusElement& t, std::int64_t p = 0);

struct BrauerTable {
  DatumPtr datum;
  std::int64_t p = 0;
  std::int64_t q = 0;
  /// q-restricted highest weights, lexicographically ascending.
  std::vector<Weight> labels;
  /// Class representatives in column order.
  std::vector<TorusElement> classes;
  /// Index of each column in the class list it was built from.
  std::vector<std::size_t> class_ids;
  CycMatrix values;

  /// Lcm of the class orders; every value lies in Q(zeta_conductor).
  std::int64_t conductor() const;
};

/// One row per q-restricted weight, one column per class of the list.
BrauerTable brauer_table(const CharacterLibrary& library, const ClassList& classes);

/// Same from explicit representatives.
BrauerTable brauer_table(const CharacterLibrary& library, std::int64_t q, const std::vector<TorusElement>& classes);

/// zeta -> zeta^k on every value. Throws NotCoprime.
CycMatrix galois_twist(const CycMatrix& values, std::int64_t k);

/// A prime ell == 1 mod n above `at_least`.
std::int64_t splitting_prime(std::int64_t n, std::int64_t at_least);

/// Entries reduced modulo ell through zeta_n -> w.
std::vector<std::vector<std::int64_t>> reduce_matrix(const CycMatrix& m, std::int64_t n, std::int64_t ell, std::int64_t w);

/// Rank over F_ell by elimination.
std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t ell);

struct RankResult {
  std::size_t rank = 0;
  /// True when rank is the exact rank over Q(zeta); a modular rank is only
  /// a lower bound unless it is full.
  bool exact = false;
};

/// Full rank is certified by one modular reduction; otherwise falls back to
/// exact elimination when the matrix is small enough.
RankResult table_rank(const CycMatrix& m, std::int64_t conductor);

}  // namespace liechar
