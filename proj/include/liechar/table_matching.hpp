#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liechar/brauer.hpp"
#include "liechar/semisimple.hpp"

namespace liechar {

struct AbstractClass {
  std::string name;
  std::int64_t order = 1;
  BigInt centralizer;
  /// prime -> class index; primes without an entry are unconstrained.
  std::map<std::int64_t, std::size_t> power;
  /// central class index -> translated class index, when supplied.
  std::optional<std::map<std::size_t, std::size_t>> central;
};

/// Ordinary character table data imported from an external system.
struct AbstractTable {
  std::optional<std::int64_t> p_hint;
  std::vector<AbstractClass> classes;
  std::vector<std::vector<Cyclotomic>> chars;
  /// Class permutations; entry i is the image of class i.
  std::vector<std::vector<std::size_t>> automorphisms;

  /// Centralizer of the class of order 1.
  BigInt group_order() const;
  std::vector<std::size_t> p_prime_classes(std::int64_t p) const;
  /// Throws SchemaError or InconsistentPowerMap.
  void validate() const;
};

/// Entry i is the abstract class matched with computed class i.
using Identification = std::vector<std::size_t>;

/// Every invariant of every class is preserved and the map is a bijection
/// onto the p'-classes.
bool verify_identification(const ClassList& classes, const AbstractTable& table, const Identification& ident,
                           std::int64_t p);

constexpr std::size_t default_identification_cap = 100000;

/// All compatible bijections, in search order. `pins` fixes computed
/// class -> abstract class. Throws NoIdentification, or CapExceeded when
/// more than `cap` exist.
std::vector<Identification> candidate_identifications(const ClassList& classes, const AbstractTable& table,
                                                      std::int64_t p,
                                                      const std::map<std::size_t, std::size_t>& pins = {},
                                                      std::size_t cap = default_identification_cap);

struct DecompositionMatrix {
  /// Rows follow the ordinary characters, columns the Brauer rows.
  RatMatrix entries;
  /// False when no rational solution exists; entries are then empty.
  bool solved = false;
  /// Every entry is a non-negative integer.
  bool valid = false;
};

/// Solves X = D B with X the ordinary characters restricted through the
/// identification and B the Brauer table. Small systems are solved over
/// the cyclotomic field; larger ones modulo split primes with rational
/// reconstruction, then verified exactly. Throws SingularBrauerMatrix.
DecompositionMatrix decomposition_matrix(const AbstractTable& table, const BrauerTable& brauer,
                                         const Identification& ident);

struct FilterResult {
  /// Indices into the candidate list with a valid decomposition matrix.
  std::vector<std::size_t> survivors;
  std::vector<DecompositionMatrix> matrices;
  /// One survivor per orbit of the table automorphism group.
  std::vector<std::size_t> representatives;
};

FilterResult filter_identifications(const std::vector<Identification>& idents, const AbstractTable& table,
                                    const BrauerTable& brauer);

/// Smallest |r|/s with r == a s mod m, both below sqrt(m/2); none if absent.
std::optional<Rational> rational_reconstruction(const BigInt& a, const BigInt& m);

}  // namespace liechar
