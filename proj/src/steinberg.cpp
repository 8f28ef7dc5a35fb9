#include "liechar/steinberg.hpp"

#include "liechar/parallel.hpp"

namespace liechar {

namespace {

constexpr int kMaxDepth = 64;

IntMatrix integer_inverse_permutation(const IntMatrix& twist) {
  // F0 is a permutation matrix, so its inverse is its transpose.
  return twist.transpose();
}

}  // namespace

int power_exponent(std::int64_t q, std::int64_t p) {
  if (p < 2 || q < p) throw Error(ErrorCode::InvalidArgument, "q=" + std::to_string(q) + " is not a power of p=" + std::to_string(p));
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) throw Error(ErrorCode::InvalidArgument, "q is not a power of p=" + std::to_string(p));
  return e;
}

SteinbergFactorization base_p_digits(const Weight& lambda, std::int64_t p) {
  if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, "weight " + format_row(lambda) + " is not dominant");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "base must be at least 2");
  SteinbergFactorization f;
  f.base = p;
  Weight rest = lambda;
  do {
    Weight digit = rest.unaryExpr([p](std::int64_t c) { return c % p; });
    f.digits.push_back(digit);
    f.twist_powers.push_back(0);
    rest = (rest - digit) / p;
  } while (!rest.isZero());
  return f;
}

Weight resum(const SteinbergFactorization& f) {
  if (f.digits.empty()) return Weight();
  Weight out = Weight::Zero(f.digits[0].size());
  if (f.base == 0) {
    const IntMatrix ft = f4_special_isogeny();
    for (auto it = f.digits.rbegin(); it != f.digits.rend(); ++it) out = out * ft + *it;
  } else {
    for (auto it = f.digits.rbegin(); it != f.digits.rend(); ++it) out = out * f.base + *it;
  }
  return out;
}

DominantCharacter q_restricted_character(const Weight& lambda, std::int64_t q, const CharacterLibrary& library) {
  const std::int64_t p = library.characteristic();
  power_exponent(q, p);
  if (!is_restricted(lambda, q))
    throw Error(ErrorCode::InvalidArgument, "weight " + format_row(lambda) + " is not " + std::to_string(q) + "-restricted");
  return library.irreducible(lambda);
}

SteinbergFactorization restriction_factorization(const Weight& lambda, std::int64_t q, const IntMatrix& twist) {
  if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, "weight " + format_row(lambda) + " is not dominant");
  const IntMatrix inverse = integer_inverse_permutation(twist);
  auto digits = base_p_digits(lambda, q);
  SteinbergFactorization out;
  out.base = q;
  // lambda_i = mu_i F0^-i for the base-q digits mu_i.
  IntMatrix power = IntMatrix::Identity(lambda.size(), lambda.size());
  for (std::size_t i = 0; i < digits.digits.size(); ++i) {
    if (i >= static_cast<std::size_t>(kMaxDepth))
      throw Error(ErrorCode::InvalidArgument, "restriction recursion exceeded depth cap");
    const Weight factor = digits.digits[i] * power;
    if (!factor.isZero() || (lambda.isZero() && out.digits.empty())) {
      out.digits.push_back(factor);
      out.twist_powers.push_back(static_cast<int>(i));
    }
    power = power * inverse;
  }
  return out;
}

std::vector<Weight> restriction_factors(const Weight& lambda, std::int64_t q, const IntMatrix& twist) {
  return restriction_factorization(lambda, q, twist).digits;
}

namespace {

void accumulate_gq_factors(const DominantCharacter& character, std::int64_t q, const CharacterLibrary& library,
                           std::int64_t scale, int depth, WeightMultiset& out) {
  if (depth > kMaxDepth) throw Error(ErrorCode::InvalidArgument, "G(q) decomposition exceeded depth cap");
  const IntMatrix& twist = library.datum().twist();
  for (const auto& [nu, m] : decompose(character, library)) {
    const auto factors = restriction_factors(nu, q, twist);
    if (factors.size() == 1) {
      out[factors[0]] += scale * m;
      continue;
    }
    DominantCharacter product = q_restricted_character(factors[0], q, library);
    for (std::size_t i = 1; i < factors.size(); ++i)
      product = tensor_product(product, q_restricted_character(factors[i], q, library));
    accumulate_gq_factors(product, q, library, scale * m, depth + 1, out);
  }
}

}  // namespace

WeightMultiset gq_tensor_decompose(const Weight& lambda1, const Weight& lambda2, std::int64_t q,
                                   const CharacterLibrary& library) {
  const DominantCharacter a = q_restricted_character(lambda1, q, library);
  const DominantCharacter b = q_restricted_character(lambda2, q, library);
  WeightMultiset out;
  accumulate_gq_factors(tensor_product(a, b), q, library, 1, 0, out);
  return out;
}

std::map<Weight, BigInt, LexLess> irreducible_degrees(int rank, std::int64_t q, std::int64_t p,
                                                      const std::map<Weight, BigInt, LexLess>& restricted_dims) {
  power_exponent(q, p);
  const auto weights = restricted_weights(rank, q);
  std::vector<BigInt> dims(weights.size());
  parallel_for(weights.size(), [&](std::size_t k) {
    BigInt d = 1;
    for (const auto& digit : base_p_digits(weights[k], p).digits) {
      auto it = restricted_dims.find(digit);
      if (it == restricted_dims.end())
        throw Error(ErrorCode::MissingIrreducible, "no dimension for L(" + format_row(digit) + ")");
      d *= it->second;
    }
    dims[k] = d;
  });
  std::map<Weight, BigInt, LexLess> out;
  for (std::size_t k = 0; k < weights.size(); ++k) out.emplace(weights[k], dims[k]);
  return out;
}

IntMatrix f4_special_isogeny() {
  IntMatrix ft = IntMatrix::Zero(4, 4);
  ft(0, 3) = 2;
  ft(1, 2) = 2;
  ft(2, 1) = 1;
  ft(3, 0) = 1;
  return ft;
}

SteinbergFactorization f4_special_digits(const RootDatum& datum, std::int64_t p, const Weight& lambda) {
  if (datum.type() != "F4" || p != 2)
    throw Error(ErrorCode::WrongType, "special isogeny digits need F4 with p = 2, got " + datum.type() +
                                          " with p = " + std::to_string(p));
  if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, "weight " + format_row(lambda) + " is not dominant");
  SteinbergFactorization f;
  f.base = 0;
  Weight rest = lambda;
  do {
    if (f.digits.size() >= static_cast<std::size_t>(kMaxDepth))
      throw Error(ErrorCode::InvalidArgument, "special digit extraction exceeded depth cap");
    // The image of Ft is {y : y_3, y_4 even}; the digit is the unique
    // element of M in the coset of rest.
    Weight digit = Weight::Zero(4);
    digit[2] = rest[2] % 2;
    digit[3] = rest[3] % 2;
    f.digits.push_back(digit);
    f.twist_powers.push_back(0);
    const Weight y = rest - digit;
    Weight x(4);
    x << y[3] / 2, y[2] / 2, y[1], y[0];
    rest = x;
  } while (!rest.isZero());
  if (resum(f) != lambda)
    throw Error(ErrorCode::DimensionMismatch, "special digits do not re-sum to " + format_row(lambda));
  return f;
}

}  // namespace liechar
