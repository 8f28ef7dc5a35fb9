#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "liechar/root_datum.hpp"

namespace liechar {

/// Multiset of weights: weight -> positive multiplicity.
using WeightMultiset = std::map<Weight, std::int64_t, LexLess>;

/// Dominant weights with their weight-space dimensions. Zero
/// multiplicities are never stored.
class DominantCharacter {
public:
  explicit DominantCharacter(DatumPtr datum);
  DominantCharacter(DatumPtr datum, WeightMultiset entries, std::optional<Weight> label = {});

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  const WeightMultiset& entries() const { return entries_; }
  const std::optional<Weight>& label() const { return label_; }
  void set_label(std::optional<Weight> label) { label_ = std::move(label); }

  std::int64_t multiplicity(const Weight& dominant) const;
  /// Adds m to the multiplicity of a dominant weight. Throws
  /// NegativeMultiplicity if the result would drop below zero.
  void add(const Weight& dominant, std::int64_t m);

  /// Keys sorted greatest-first in the refined dominance order.
  std::vector<Weight> keys_in_decompose_order() const;

  bool operator==(const DominantCharacter& other) const { return entries_ == other.entries_; }

private:
  DatumPtr datum_;
  WeightMultiset entries_;
  std::optional<Weight> label_;
};

/// Total order refining dominance: larger root-basis height first, then
/// lexicographically larger.
bool refined_order_greater(const RootDatum& datum, const Weight& a, const Weight& b);

BigInt dimension(const DominantCharacter& character);

DominantCharacter frobenius_twist(const DominantCharacter& character, std::int64_t p, int i);

/// Character of the tensor product; checks dim(a) * dim(b).
DominantCharacter tensor_product(const DominantCharacter& a, const DominantCharacter& b);

/// Characters of L(lambda) for p-restricted lambda in one characteristic.
/// p == 0 stands for characteristic zero: keys are arbitrary dominant
/// weights and no Steinberg factorization is applied.
class CharacterLibrary {
public:
  CharacterLibrary(DatumPtr datum, std::int64_t p);
  CharacterLibrary(const CharacterLibrary& other);
  CharacterLibrary& operator=(const CharacterLibrary& other);
  CharacterLibrary(CharacterLibrary&&) noexcept;
  CharacterLibrary& operator=(CharacterLibrary&&) noexcept;
  ~CharacterLibrary();

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  std::int64_t characteristic() const { return p_; }
  const std::map<Weight, DominantCharacter, LexLess>& entries() const { return entries_; }

  /// Throws InvalidArgument for unlabeled or non-restricted characters and
  /// for a label already present with different data.
  void insert(DominantCharacter character);
  bool contains(const Weight& lambda) const { return entries_.count(lambda) != 0; }
  /// Stored entry; throws MissingIrreducible.
  const DominantCharacter& at(const Weight& lambda) const;

  /// Character of L(lambda) for any dominant lambda, assembled from the
  /// stored p-restricted entries by the Steinberg tensor product theorem.
  DominantCharacter irreducible(const Weight& lambda) const;

private:
  DatumPtr datum_;
  std::int64_t p_;
  std::map<Weight, DominantCharacter, LexLess> entries_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// Composition factors: repeatedly peel off the greatest remaining weight.
/// Throws MissingIrreducible or NegativeMultiplicity.
WeightMultiset decompose(const DominantCharacter& character, const CharacterLibrary& library);

/// Sum of m * library character over a multiset of highest weights.
DominantCharacter recompose(const WeightMultiset& factors, const CharacterLibrary& library);

/// Character of the Weyl module V(lambda) by Freudenthal's formula. The
/// dimension is checked against the Weyl dimension formula.
DominantCharacter weyl_character(const DatumPtr& datum, const Weight& lambda);

/// prod over positive roots of <lambda+rho, a^vee> / <rho, a^vee>.
BigInt weyl_dimension(const RootDatum& datum, const Weight& lambda);

/// All weights with coordinates in [0, bound), lexicographically ascending.
std::vector<Weight> restricted_weights(int rank, std::int64_t bound);

}  // namespace liechar
