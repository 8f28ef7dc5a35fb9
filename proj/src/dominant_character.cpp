#include "liechar/dominant_character.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "liechar/parallel.hpp"
#include "liechar/weyl_orbits.hpp"

namespace liechar {

namespace {

/// Orbit flattened row-major, `rank` entries per weight.
struct FlatOrbit {
  std::vector<std::int64_t> coords;
  std::size_t size = 0;
};

FlatOrbit flat_orbit(const RootDatum& datum, const Weight& w) {
  FlatOrbit out;
  auto elems = orbit_elements(datum, w);
  out.size = elems.size();
  out.coords.reserve(elems.size() * static_cast<std::size_t>(w.size()));
  for (const auto& e : elems)
    for (Eigen::Index i = 0; i < e.size(); ++i) out.coords.push_back(e[i]);
  return out;
}

void require_same_datum(const DominantCharacter& a, const DominantCharacter& b) {
  if (a.datum_ptr() != b.datum_ptr() &&
      (a.datum().root_matrix() != b.datum().root_matrix()))
    throw Error(ErrorCode::InvalidArgument, "characters belong to different root data");
}

}  // namespace

DominantCharacter::DominantCharacter(DatumPtr datum) : datum_(std::move(datum)) {}

DominantCharacter::DominantCharacter(DatumPtr datum, WeightMultiset entries, std::optional<Weight> label)
    : datum_(std::move(datum)), label_(std::move(label)) {
  for (auto& [w, m] : entries) {
    if (w.size() != datum_->rank())
      throw Error(ErrorCode::InvalidArgument, "weight " + format_row(w) + " has wrong length");
    if (!is_dominant(w)) throw Error(ErrorCode::NotDominant, "key " + format_row(w) + " is not dominant");
    if (m < 0) throw Error(ErrorCode::NegativeMultiplicity, "multiplicity of " + format_row(w));
    if (m > 0) entries_.emplace(w, m);
  }
  if (label_ && !entries_.count(*label_))
    throw Error(ErrorCode::InvalidArgument, "label " + format_row(*label_) + " is not a key");
}

std::int64_t DominantCharacter::multiplicity(const Weight& dominant) const {
  auto it = entries_.find(dominant);
  return it == entries_.end() ? 0 : it->second;
}

void DominantCharacter::add(const Weight& dominant, std::int64_t m) {
  if (!is_dominant(dominant))
    throw Error(ErrorCode::NotDominant, "key " + format_row(dominant) + " is not dominant");
  auto it = entries_.find(dominant);
  const std::int64_t current = it == entries_.end() ? 0 : it->second;
  const std::int64_t next = current + m;
  if (next < 0)
    throw Error(ErrorCode::NegativeMultiplicity,
                "multiplicity of " + format_row(dominant) + " would become " + std::to_string(next));
  if (next == 0) {
    if (it != entries_.end()) entries_.erase(it);
  } else if (it == entries_.end()) {
    entries_.emplace(dominant, next);
  } else {
    it->second = next;
  }
}

bool refined_order_greater(const RootDatum& datum, const Weight& a, const Weight& b) {
  const Rational ha = datum.height(a), hb = datum.height(b);
  if (ha != hb) return ha > hb;
  return LexLess{}(b, a);
}

std::vector<Weight> DominantCharacter::keys_in_decompose_order() const {
  std::vector<std::pair<Rational, Weight>> keyed;
  for (const auto& [w, m] : entries_) keyed.emplace_back(datum_->height(w), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return LexLess{}(y.second, x.second);
  });
  std::vector<Weight> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

BigInt dimension(const DominantCharacter& character) {
  BigInt total = 0;
  for (const auto& [w, m] : character.entries()) total += BigInt(m) * orbit_length(character.datum(), w);
  return total;
}

DominantCharacter frobenius_twist(const DominantCharacter& character, std::int64_t p, int i) {
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "twist exponent must be non-negative");
  std::int64_t scale = 1;
  for (int k = 0; k < i; ++k) scale *= p;
  WeightMultiset out;
  for (const auto& [w, m] : character.entries()) out.emplace(w * scale, m);
  std::optional<Weight> label;
  if (character.label()) label = *character.label() * scale;
  return DominantCharacter(character.datum_ptr(), std::move(out), std::move(label));
}

DominantCharacter tensor_product(const DominantCharacter& a, const DominantCharacter& b) {
  require_same_datum(a, b);
  const RootDatum& datum = a.datum();
  const auto l = static_cast<std::size_t>(datum.rank());

  std::vector<std::pair<FlatOrbit, std::int64_t>> left, right;
  for (const auto& [w, m] : a.entries()) left.emplace_back(flat_orbit(datum, w), m);
  for (const auto& [w, m] : b.entries()) right.emplace_back(flat_orbit(datum, w), m);

  // Each ordered pair (x, y) of weights with x + y dominant contributes
  // m(x) * m(y) to m(x + y).
  using Accumulator = std::unordered_map<IntRow, std::int64_t, RowHash, RowEqual>;
  std::vector<Accumulator> partial(left.size());
  parallel_for(left.size(), [&](std::size_t li) {
    Accumulator& acc = partial[li];
    const auto& [lo, lm] = left[li];
    IntRow sum(static_cast<Eigen::Index>(l));
    std::vector<std::int64_t> s(l);
    for (const auto& [ro, rm] : right) {
      const std::int64_t weight = lm * rm;
      for (std::size_t x = 0; x < lo.size; ++x) {
        const std::int64_t* xc = &lo.coords[x * l];
        for (std::size_t y = 0; y < ro.size; ++y) {
          const std::int64_t* yc = &ro.coords[y * l];
          bool dominant = true;
          for (std::size_t k = 0; k < l; ++k) {
            s[k] = xc[k] + yc[k];
            if (s[k] < 0) {
              dominant = false;
              break;
            }
          }
          if (!dominant) continue;
          for (std::size_t k = 0; k < l; ++k) sum[static_cast<Eigen::Index>(k)] = s[k];
          acc[sum] += weight;
        }
      }
    }
  });

  WeightMultiset merged;
  for (const auto& acc : partial)
    for (const auto& [w, m] : acc) merged[w] += m;
  DominantCharacter result(a.datum_ptr(), std::move(merged));

  const BigInt expected = dimension(a) * dimension(b);
  const BigInt got = dimension(result);
  if (got != expected)
    throw Error(ErrorCode::DimensionMismatch,
                "tensor product has dimension " + got.str() + ", expected " + expected.str());
  return result;
}

struct CharacterLibrary::Cache {
  std::mutex mutex;
  std::map<Weight, std::shared_ptr<const DominantCharacter>, LexLess> characters;
};

CharacterLibrary::CharacterLibrary(DatumPtr datum, std::int64_t p)
    : datum_(std::move(datum)), p_(p), cache_(std::make_unique<Cache>()) {
  if (p_ < 0 || p_ == 1) throw Error(ErrorCode::InvalidArgument, "characteristic must be 0 or >= 2");
}

CharacterLibrary::CharacterLibrary(const CharacterLibrary& other)
    : datum_(other.datum_), p_(other.p_), entries_(other.entries_), cache_(std::make_unique<Cache>()) {}

CharacterLibrary& CharacterLibrary::operator=(const CharacterLibrary& other) {
  if (this != &other) {
    datum_ = other.datum_;
    p_ = other.p_;
    entries_ = other.entries_;
    cache_ = std::make_unique<Cache>();
  }
  return *this;
}

CharacterLibrary::CharacterLibrary(CharacterLibrary&&) noexcept = default;
CharacterLibrary& CharacterLibrary::operator=(CharacterLibrary&&) noexcept = default;
CharacterLibrary::~CharacterLibrary() = default;

void CharacterLibrary::insert(DominantCharacter character) {
  if (!character.label()) throw Error(ErrorCode::InvalidArgument, "library entries must be labeled");
  const Weight lambda = *character.label();
  if (p_ > 0 && !is_restricted(lambda, p_))
    throw Error(ErrorCode::InvalidArgument,
                "label " + format_row(lambda) + " is not " + std::to_string(p_) + "-restricted");
  auto it = entries_.find(lambda);
  if (it != entries_.end()) {
    if (!(it->second == character))
      throw Error(ErrorCode::InvalidArgument,
                  "conflicting library entry for " + format_row(lambda));
    return;
  }
  entries_.emplace(lambda, std::move(character));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->characters.clear();
}

const DominantCharacter& CharacterLibrary::at(const Weight& lambda) const {
  auto it = entries_.find(lambda);
  if (it == entries_.end())
    throw Error(ErrorCode::MissingIrreducible, "no library entry for L(" + format_row(lambda) + ")");
  return it->second;
}

DominantCharacter CharacterLibrary::irreducible(const Weight& lambda) const {
  if (!is_dominant(lambda))
    throw Error(ErrorCode::NotDominant, "weight " + format_row(lambda) + " is not dominant");
  if (p_ == 0 || is_restricted(lambda, p_)) return at(lambda);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->characters.find(lambda);
    if (it != cache_->characters.end()) return *it->second;
  }
  // L(lambda) = L(lambda_0) (x) L(lambda_1)^[1] (x) ... with base-p digits.
  Weight rest = lambda;
  std::optional<DominantCharacter> product;
  for (int i = 0; !rest.isZero(); ++i) {
    Weight digit = rest.unaryExpr([&](std::int64_t c) { return c % p_; });
    rest = (rest - digit) / p_;
    if (digit.isZero()) continue;
    DominantCharacter factor = frobenius_twist(at(digit), p_, i);
    product = product ? tensor_product(*product, factor) : factor;
  }
  product->set_label(lambda);
  auto shared = std::make_shared<const DominantCharacter>(*product);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->characters.emplace(lambda, shared);
  return *shared;
}

WeightMultiset decompose(const DominantCharacter& character, const CharacterLibrary& library) {
  const RootDatum& datum = character.datum();
  DominantCharacter remaining = character;
  WeightMultiset factors;
  while (!remaining.entries().empty()) {
    const auto& entries = remaining.entries();
    auto top = entries.begin();
    for (auto it = std::next(entries.begin()); it != entries.end(); ++it)
      if (refined_order_greater(datum, it->first, top->first)) top = it;
    const Weight lambda = top->first;
    const std::int64_t m = top->second;
    const DominantCharacter irr = library.irreducible(lambda);
    if (irr.multiplicity(lambda) != 1)
      throw Error(ErrorCode::NegativeMultiplicity,
                  "library character of L(" + format_row(lambda) + ") does not have highest weight multiplicity 1");
    for (const auto& [w, k] : irr.entries()) {
      try {
        remaining.add(w, -m * k);
      } catch (const Error&) {
        throw Error(ErrorCode::NegativeMultiplicity,
                    "subtracting " + std::to_string(m) + " x L(" + format_row(lambda) +
                        ") makes the multiplicity of " + format_row(w) + " negative");
      }
    }
    factors[lambda] += m;
  }
  return factors;
}

DominantCharacter recompose(const WeightMultiset& factors, const CharacterLibrary& library) {
  DominantCharacter out(library.datum_ptr());
  for (const auto& [lambda, m] : factors) {
    const DominantCharacter irr = library.irreducible(lambda);
    for (const auto& [w, k] : irr.entries()) out.add(w, m * k);
  }
  return out;
}

BigInt weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw Error(ErrorCode::NotDominant, "weight " + format_row(lambda) + " is not dominant");
  Rational product = 1;
  for (const auto& coroot : datum.positive_coroots()) {
    std::int64_t num = 0, den = 0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      num += (lambda[i] + 1) * coroot[i];
      den += coroot[i];
    }
    product *= Rational(num, den);
  }
  return boost::multiprecision::numerator(product);
}

DominantCharacter weyl_character(const DatumPtr& datum_ptr, const Weight& lambda) {
  const RootDatum& datum = *datum_ptr;
  if (lambda.size() != datum.rank())
    throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
  if (!is_dominant(lambda))
    throw Error(ErrorCode::NotDominant, "weight " + format_row(lambda) + " is not dominant");
  const auto& roots = datum.positive_roots();

  // Dominant weights of V(lambda): close {lambda} under subtracting positive
  // roots while staying dominant.
  std::vector<Weight> dominants{lambda};
  std::unordered_set<IntRow, RowHash, RowEqual> seen{lambda};
  for (std::size_t k = 0; k < dominants.size(); ++k)
    for (const auto& a : roots) {
      Weight next = dominants[k] - a;
      if (is_dominant(next) && seen.insert(next).second) dominants.push_back(next);
    }
  std::vector<std::pair<Rational, Weight>> ordered;
  for (auto& w : dominants) ordered.emplace_back(datum.height(w), w);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });

  // (x, alpha) is linear in x; precompute the coefficient rows.
  std::vector<RatRow> pairing;
  for (const auto& a : roots) {
    RatRow row(datum.rank());
    for (int i = 0; i < datum.rank(); ++i) {
      Weight e = Weight::Zero(datum.rank());
      e[i] = 1;
      row[i] = datum.form(e, a);
    }
    pairing.push_back(row);
  }
  auto pair_with = [&](const Weight& x, std::size_t r) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x[i] != 0) s += Rational(x[i]) * pairing[r][i];
    return s;
  };

  const Weight rho = Weight::Ones(datum.rank());
  const Weight top = lambda + rho;
  const Rational top_norm = datum.form(top, top);

  std::unordered_map<IntRow, std::int64_t, RowHash, RowEqual> mult;
  mult[lambda] = 1;
  for (std::size_t k = 1; k < ordered.size(); ++k) {
    const Weight& mu = ordered[k].second;
    Rational sum = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = mu + roots[r];
      for (;;) {
        auto it = mult.find(dominant_representative(datum, nu));
        if (it == mult.end()) break;
        sum += Rational(it->second) * pair_with(nu, r);
        nu += roots[r];
      }
    }
    const Weight shifted = mu + rho;
    const Rational m = 2 * sum / (top_norm - datum.form(shifted, shifted));
    if (boost::multiprecision::denominator(m) != 1 || m <= 0)
      throw Error(ErrorCode::DimensionMismatch, "Freudenthal recursion produced " + to_string(m));
    mult[mu] = static_cast<std::int64_t>(boost::multiprecision::numerator(m));
  }

  WeightMultiset entries;
  for (const auto& [w, m] : mult) entries.emplace(w, m);
  DominantCharacter out(datum_ptr, std::move(entries), lambda);
  const BigInt dim = dimension(out);
  const BigInt expected = weyl_dimension(datum, lambda);
  if (dim != expected)
    throw Error(ErrorCode::DimensionMismatch,
                "Freudenthal dimension " + dim.str() + " != Weyl dimension " + expected.str());
  return out;
}

std::vector<Weight> restricted_weights(int rank, std::int64_t bound) {
  std::vector<Weight> out;
  Weight w = Weight::Zero(rank);
  for (;;) {
    out.push_back(w);
    int i = rank - 1;
    while (i >= 0 && w[i] == bound - 1) {
      w[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace liechar
