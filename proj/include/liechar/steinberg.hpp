#pragma once

#include <map>
#include <vector>

#include "liechar/dominant_character.hpp"

namespace liechar {

/// lambda = sum_i base^i * digits[i] (or sum_i digits[i] * Ft^i for the F4
/// special isogeny, where base == 0). `twist_powers[i]` records the power of
/// F0^-1 applied to digit i in a restriction to G(q); zero otherwise.
struct SteinbergFactorization {
  std::vector<Weight> digits;
  std::int64_t base = 0;
  std::vector<int> twist_powers;
};

/// Exponent e with q == p^e; throws InvalidArgument otherwise.
int power_exponent(std::int64_t q, std::int64_t p);

/// Coordinatewise base-p digits, trailing zero digits trimmed (at least one
/// digit is kept). Throws NotDominant.
SteinbergFactorization base_p_digits(const Weight& lambda, std::int64_t p);

/// Character of L(lambda) for q-restricted lambda as a tensor product of
/// Frobenius-twisted library entries.
DominantCharacter q_restricted_character(const Weight& lambda, std::int64_t q, const CharacterLibrary& library);

/// Factors lambda_i of lambda = sum_i q^i lambda_i F0^i, each q-restricted,
/// in ascending i. Zero factors are dropped unless lambda itself is zero.
std::vector<Weight> restriction_factors(const Weight& lambda, std::int64_t q, const IntMatrix& twist);

/// Same as restriction_factors with the F0 powers recorded.
SteinbergFactorization restriction_factorization(const Weight& lambda, std::int64_t q, const IntMatrix& twist);

/// Composition factors over G(q) of L(lambda1) (x) L(lambda2), as
/// q-restricted labels with multiplicity.
WeightMultiset gq_tensor_decompose(const Weight& lambda1, const Weight& lambda2, std::int64_t q,
                                   const CharacterLibrary& library);

/// dim L(lambda) for every q-restricted lambda from the dimensions of the
/// p-restricted irreducibles.
std::map<Weight, BigInt, LexLess> irreducible_degrees(int rank, std::int64_t q, std::int64_t p,
                                                      const std::map<Weight, BigInt, LexLess>& restricted_dims);

/// Matrix of the exceptional isogeny of F4 in characteristic 2 on X:
/// omega_1..omega_4 -> 2 omega_4, 2 omega_3, omega_2, omega_1.
IntMatrix f4_special_isogeny();

/// Digits in M = {0, w4, w3, w3+w4} with lambda = sum_i digits[i] * Ft^i.
/// Throws WrongType unless the datum is F4 and p == 2.
SteinbergFactorization f4_special_digits(const RootDatum& datum, std::int64_t p, const Weight& lambda);

/// sum_i base^i digits[i] or sum_i digits[i] Ft^i.
Weight resum(const SteinbergFactorization& f);

}  // namespace liechar
