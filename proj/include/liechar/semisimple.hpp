#pragma once

#include <map>
#include <string>
#include <vector>

#include "liechar/linalg.hpp"
#include "liechar/polynomial.hpp"
#include "liechar/root_datum.hpp"

namespace liechar {

/// Element of (Q_p'/Z)^l in coroot coordinates: t_i = numerators[i] / order
/// with 0 <= numerators[i] < order and order the least common denominator.
struct TorusElement {
  std::int64_t order = 1;
  IntRow numerators;

  TorusElement() = default;
  /// Reduces num / den mod 1 to canonical form.
  TorusElement(const IntRow& num, std::int64_t den);
  static TorusElement zero(int rank) { return TorusElement(IntRow::Zero(rank), 1); }
  static TorusElement from_fractions(const std::vector<Rational>& coords);

  int rank() const { return static_cast<int>(numerators.size()); }
  Rational coordinate(int i) const { return Rational(numerators[i], order); }
  std::vector<std::string> to_strings() const;

  TorusElement operator+(const TorusElement& other) const;
  TorusElement scaled(std::int64_t k) const { return TorusElement(numerators * k, order); }
  /// t * m for an integer matrix acting on Y.
  TorusElement act(const IntMatrix& m) const { return TorusElement(numerators * m, order); }

  bool operator==(const TorusElement& o) const { return order == o.order && numerators == o.numerators; }
};

/// Coordinatewise comparison of the fractions in [0, 1).
bool torus_less(const TorusElement& a, const TorusElement& b);
struct TorusLess {
  bool operator()(const TorusElement& a, const TorusElement& b) const { return torus_less(a, b); }
};
std::string format_torus(const TorusElement& t);

/// mu(t) = mu * t^T mod 1.
Rational weight_value(const Weight& mu, const TorusElement& t);

/// Action of a Weyl element (stored on X) on Y.
inline IntMatrix y_action(const WeylElement& w) { return w.transpose(); }

struct TwistedWeylClassRep {
  WeylElement w;
  BigInt class_size;
};

/// Representatives of the classes of F0 W under conjugation by W, in
/// breadth-first order of first appearance. Throws GroupTooLarge.
std::vector<TwistedWeylClassRep> twisted_weyl_class_reps(const RootDatum& datum);

/// M = q * F0_Y * w_Y - id on Y.
IntMatrix fixed_point_matrix(const RootDatum& datum, const WeylElement& w, std::int64_t q);

/// All t with t * M == 0 mod 1, read off the Smith form L M R = D as
/// (k_i / d_i) * L. Throws SingularEquation when det M == 0.
std::vector<TorusElement> torus_fixed_points(const RootDatum& datum, const WeylElement& w, std::int64_t q);

struct OrbitMinimum {
  TorusElement rep;
  /// Y-side matrix v of a Weyl element with t * v == rep, and its inverse.
  IntMatrix to_rep;
  IntMatrix from_rep;
  std::size_t orbit_size = 0;
};

OrbitMinimum minimize(const RootDatum& datum, const TorusElement& t);
TorusElement minimal_class_rep(const RootDatum& datum, const TorusElement& t);
std::vector<TorusElement> torus_orbit(const RootDatum& datum, const TorusElement& t);

/// Minimal representative of k * t.
TorusElement power_map(const RootDatum& datum, const TorusElement& t, std::int64_t k);

/// |C^F| = q^q_power * sum_k reciprocal_molien[k] * q^(deg - k) with
/// deg = N_C + rank; reciprocal_molien is the product of (1 - eps_i t^d_i).
struct OrderFactorization {
  int q_power = 0;
  int degree = 0;
  Poly reciprocal_molien;

  BigInt evaluate(std::int64_t q) const;
};

struct CentralizerData {
  /// Positive roots alpha with alpha(t) == 0, in datum order.
  std::vector<Weight> subsystem;
  std::vector<Weight> simple_roots;
  std::vector<DynkinComponent> components;
  /// Dynkin type plus central torus rank, e.g. "A3+T".
  std::string subsystem_type;
  /// Frobenius-aware form, e.g. "A3(q) + T(q+1)".
  std::string description;
  OrderFactorization factorization;
  BigInt order;
  BigInt weyl_order;
};

/// Centralizer of t with the Frobenius q F0 w. Throws NotStabilized unless
/// t * (q F0_Y w_Y) == t.
CentralizerData centralizer_data(const RootDatum& datum, const TorusElement& t, const WeylElement& w,
                                 std::int64_t q);

/// Order of G(q) by the Molien route.
BigInt group_order(const RootDatum& datum, std::int64_t q);

struct SemisimpleClass {
  TorusElement rep;
  std::int64_t order = 1;
  std::size_t orbit_size = 0;
  /// Weyl element with w(F(rep)) == rep; a witness, not canonical.
  WeylElement stab_w;
  std::vector<Weight> subsystem;
  std::string subsystem_type;
  std::string centralizer_type;
  BigInt centralizer_order;
  std::map<std::int64_t, std::size_t> power_map;
  std::map<std::size_t, std::size_t> central_translates;
};

struct ClassList {
  DatumPtr datum;
  std::int64_t q = 0;
  std::int64_t p = 0;
  /// Sorted by (order, rep).
  std::vector<SemisimpleClass> classes;
  /// Class indices of the central elements.
  std::vector<std::size_t> center;
  BigInt group_order;

  /// Index of the class containing t (any orbit element). Throws
  /// InvalidArgument when t is not a class of this list.
  std::size_t index_of(const TorusElement& t) const;
  std::size_t index_of_rep(const TorusElement& rep) const;
  /// Recomputes the lookup table after classes change.
  void reindex();

private:
  std::map<TorusElement, std::size_t, TorusLess> lookup_;
};

/// Center of G(q): t with alpha(t) == 0 for all roots and t * (q F0_Y - id) == 0.
std::vector<TorusElement> center_elements(const RootDatum& datum, std::int64_t q);

/// Full enumeration with power maps for the primes up to the largest
/// element order and p, and central translates.
ClassList semisimple_classes(const DatumPtr& datum, std::int64_t q, std::int64_t p);

/// Fills power maps and translates from the class reps alone.
void complete_class_maps(ClassList& list);

/// Primes for which power maps are stored.
std::vector<std::int64_t> power_map_primes(const ClassList& list);

}  // namespace liechar
