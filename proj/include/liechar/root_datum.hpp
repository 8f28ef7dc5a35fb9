#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "liechar/types.hpp"

namespace liechar {

/// Weights live in X and are written in the fundamental-weight basis.
using Weight = IntRow;

/// Weyl group element as a matrix acting on X from the right. Its
/// transpose is the adjoint action on Y.
using WeylElement = IntMatrix;

/// One connected component of a Dynkin diagram. `nodes` lists the datum's
/// simple-root indices in the standard numbering of the family (Bourbaki
/// for A, B, C, E, F, G; branch node 3 with leaves 1, 2 for D).
struct DynkinComponent {
  char family = 'A';
  int rank = 0;
  std::vector<int> nodes;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

/// Classify the root matrix A (row i is the simple root alpha_i in the
/// fundamental-weight basis). Throws NotFiniteType.
std::vector<DynkinComponent> classify_root_matrix(const IntMatrix& roots);

/// "A3+A1" style name with components sorted by family then rank
/// descending; empty string for rank 0.
std::string type_name(const std::vector<DynkinComponent>& components);

/// Order of the Weyl group of a single irreducible type.
BigInt weyl_group_order(char family, int rank);

/// Cartan matrix C (C(i,j) = <alpha_j, alpha_i^vee>) of a type such as
/// "D4", "F4" or "A2+A1". Throws InvalidArgument for unknown names.
IntMatrix cartan_matrix(const std::string& type);

/// Permutation i -> perm[i] (1-based) of the fundamental weights as a
/// matrix on X: omega_i * F0 = omega_{perm[i]}.
IntMatrix permutation_twist(const std::vector<int>& perm);

class RootDatum {
public:
  /// `cartan` uses the convention C(i,j) = <alpha_j, alpha_i^vee>; the root
  /// matrix is its transpose. `twist` is the F0 matrix acting on X
  /// (identity when empty).
  static std::shared_ptr<const RootDatum> build(const IntMatrix& cartan,
                                                const IntMatrix& twist = IntMatrix());

  int rank() const { return rank_; }
  const IntMatrix& root_matrix() const { return roots_matrix_; }
  IntMatrix cartan() const { return roots_matrix_.transpose(); }
  IntMatrix coroot_matrix() const { return IntMatrix::Identity(rank_, rank_); }
  const IntMatrix& twist() const { return twist_; }
  /// Twist as a permutation of simple-root indices (1-based), empty when
  /// F0 is not a permutation matrix.
  const std::vector<int>& twist_permutation() const { return twist_perm_; }
  const std::vector<IntMatrix>& reflections() const { return reflections_; }

  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Coroot of positive_roots()[i] in the simple-coroot basis of Y.
  const std::vector<IntRow>& positive_coroots() const { return positive_coroots_; }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }

  const BigInt& weyl_order() const { return weyl_order_; }
  const std::vector<DynkinComponent>& components() const { return components_; }
  std::string type() const { return type_name(components_); }

  /// Coordinates c with weight == sum_i c_i alpha_i.
  RatRow to_root_basis(const Weight& weight) const;
  /// Sum of root-basis coordinates; the height used to refine dominance.
  Rational height(const Weight& weight) const;
  /// W-invariant symmetric form, normalized so short roots of each
  /// component have squared length 2.
  Rational form(const Weight& x, const Weight& y) const;

  /// Elements of W as matrices on X. Throws GroupTooLarge if |W| > bound.
  std::vector<WeylElement> weyl_elements(std::int64_t bound = 1000000) const;

  /// Order of the standard parabolic subgroup generated by s_i, i in J.
  BigInt parabolic_order(const std::vector<int>& generators) const;

  /// Product of generators for a word s_{i1} s_{i2} ... s_{ik} (1-based
  /// indices) acting on X, composed as functions: s_{ik} acts first.
  WeylElement word(const std::vector<int>& word) const;

private:
  RootDatum() = default;

  int rank_ = 0;
  IntMatrix roots_matrix_;
  IntMatrix twist_;
  std::vector<int> twist_perm_;
  std::vector<IntMatrix> reflections_;
  std::vector<Weight> positive_roots_;
  std::vector<IntRow> positive_coroots_;
  std::vector<DynkinComponent> components_;
  BigInt weyl_order_;
  RatMatrix inverse_roots_;
  RatRow heights_;
  std::vector<Rational> symmetrizer_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

/// Build from a type name plus 1-based twist permutation (empty = trivial).
DatumPtr make_datum(const std::string& type, const std::vector<int>& twist = {});

}  // namespace liechar
