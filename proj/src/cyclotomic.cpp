#include "liechar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "liechar/linalg.hpp"
#include "liechar/polynomial.hpp"

namespace liechar {

namespace {

const std::vector<std::int64_t>& phi_coefficients(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<std::vector<std::int64_t>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<std::int64_t>>();
    for (const auto& c : cyclotomic_polynomial(n)) slot->push_back(static_cast<std::int64_t>(c));
  }
  return *slot;
}

/// Reduce a dense coefficient vector (any length) modulo Phi_n.
std::vector<Rational> reduce(std::vector<Rational> dense, std::int64_t n) {
  const auto& phi = phi_coefficients(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = dense.size(); k-- > deg;) {
    if (dense[k] == 0) continue;
    const Rational c = dense[k];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) dense[k - deg + j] -= c * phi[j];
  }
  dense.resize(deg, Rational(0));
  return dense;
}

/// For n = r * m with r prime: basis of Q(zeta_m) written in Q(zeta_n), a
/// set of pivot columns and the inverse of the square pivot block.
struct Descent {
  std::vector<Eigen::Index> pivots;
  RatMatrix embedding;  // phi(m) x phi(n)
  RatMatrix pivot_inverse;
};

const Descent& descent(std::int64_t n, std::int64_t r) {
  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<Descent>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, r}];
  if (slot) return *slot;
  const std::int64_t m = n / r;
  const auto pm = static_cast<Eigen::Index>(euler_phi(m));
  const auto pn = static_cast<Eigen::Index>(euler_phi(n));
  auto d = std::make_unique<Descent>();
  d->embedding = RatMatrix::Zero(pm, pn);
  for (Eigen::Index a = 0; a < pm; ++a) {
    std::vector<Rational> dense(static_cast<std::size_t>(n), Rational(0));
    dense[static_cast<std::size_t>((a * r) % n)] = 1;
    auto red = reduce(dense, n);
    for (Eigen::Index k = 0; k < pn; ++k) d->embedding(a, k) = red[static_cast<std::size_t>(k)];
  }
  RatMatrix work = d->embedding;
  auto piv = row_reduce(work);
  d->pivots = piv;
  RatMatrix block(pm, pm);
  for (Eigen::Index a = 0; a < pm; ++a)
    for (Eigen::Index j = 0; j < pm; ++j) block(a, j) = d->embedding(a, d->pivots[static_cast<std::size_t>(j)]);
  d->pivot_inverse = rational_inverse(block);
  slot = std::move(d);
  return *slot;
}

}  // namespace

Cyclotomic::Cyclotomic(std::int64_t n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  normalize();
}

void Cyclotomic::normalize() {
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (std::int64_t r : prime_factors(n_)) {
      const Descent& d = descent(n_, r);
      const auto pm = d.embedding.rows();
      std::vector<Rational> y(static_cast<std::size_t>(pm), Rational(0));
      for (Eigen::Index a = 0; a < pm; ++a)
        for (Eigen::Index j = 0; j < pm; ++j) {
          const Rational& x = coeffs_[static_cast<std::size_t>(d.pivots[static_cast<std::size_t>(j)])];
          if (x != 0) y[static_cast<std::size_t>(a)] += x * d.pivot_inverse(j, a);
        }
      bool member = true;
      for (Eigen::Index k = 0; k < d.embedding.cols() && member; ++k) {
        Rational s = 0;
        for (Eigen::Index a = 0; a < pm; ++a)
          if (y[static_cast<std::size_t>(a)] != 0) s += y[static_cast<std::size_t>(a)] * d.embedding(a, k);
        member = s == coeffs_[static_cast<std::size_t>(k)];
      }
      if (!member) continue;
      coeffs_ = std::move(y);
      n_ /= r;
      changed = true;
      break;
    }
  }
  if (n_ == 1 && coeffs_.empty()) coeffs_.push_back(Rational(0));
}

std::vector<Rational> Cyclotomic::lifted(std::int64_t N) const {
  if (N == n_) return coeffs_;
  std::vector<Rational> dense(static_cast<std::size_t>(N), Rational(0));
  const std::int64_t step = N / n_;
  for (std::size_t a = 0; a < coeffs_.size(); ++a) dense[a * static_cast<std::size_t>(step)] += coeffs_[a];
  return reduce(std::move(dense), N);
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
  std::vector<Rational> dense(static_cast<std::size_t>(n), Rational(0));
  dense[static_cast<std::size_t>(mod_floor(k, n))] = 1;
  return Cyclotomic(n, reduce(std::move(dense), n));
}

Cyclotomic Cyclotomic::from_exponent_counts(std::int64_t n, const std::vector<std::int64_t>& counts) {
  std::vector<Rational> dense(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) dense[k % static_cast<std::size_t>(n)] += counts[k];
  return Cyclotomic(n, reduce(std::move(dense), n));
}

Cyclotomic Cyclotomic::from_terms(std::int64_t n, const std::map<std::int64_t, Rational>& terms) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  std::vector<Rational> dense(static_cast<std::size_t>(n), Rational(0));
  for (const auto& [e, c] : terms) dense[static_cast<std::size_t>(mod_floor(e, n))] += c;
  return Cyclotomic(n, reduce(std::move(dense), n));
}

std::map<std::int64_t, Rational> Cyclotomic::terms() const {
  std::map<std::int64_t, Rational> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace(static_cast<std::int64_t>(k), coeffs_[k]);
  return out;
}

bool Cyclotomic::is_zero() const { return n_ == 1 && coeffs_[0] == 0; }

bool Cyclotomic::is_integral() const {
  for (const auto& c : coeffs_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw Error(ErrorCode::InvalidArgument, "value " + to_text() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ == n_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    if (n_ > 1) normalize();
    return *this;
  }
  const std::int64_t N = lcm64(n_, o.n_);
  auto a = lifted(N);
  const auto b = o.lifted(N);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  *this = Cyclotomic(N, std::move(a));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    if (o.coeffs_[0] == 0) *this = Cyclotomic();
    return *this;
  }
  if (n_ == 1) {
    const Rational s = coeffs_[0];
    *this = o;
    return *this *= Cyclotomic(s);
  }
  const std::int64_t N = lcm64(n_, o.n_);
  const auto a = lifted(N);
  const auto b = o.lifted(N);
  std::vector<Rational> dense(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) dense[i + j] += a[i] * b[j];
  }
  *this = Cyclotomic(N, reduce(std::move(dense), N));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Solve x * y == 1 through the multiplication matrix of x.
  const auto d = static_cast<Eigen::Index>(coeffs_.size());
  RatMatrix aug = RatMatrix::Zero(d, d + 1);
  for (Eigen::Index j = 0; j < d; ++j) {
    std::vector<Rational> dense(static_cast<std::size_t>(d + j), Rational(0));
    for (Eigen::Index i = 0; i < d; ++i) dense[static_cast<std::size_t>(i + j)] = coeffs_[static_cast<std::size_t>(i)];
    const auto col = reduce(std::move(dense), n_);
    for (Eigen::Index i = 0; i < d; ++i) aug(i, j) = col[static_cast<std::size_t>(i)];
  }
  aug(0, d) = 1;
  row_reduce(aug, d);
  std::vector<Rational> y(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) y[static_cast<std::size_t>(i)] = aug(i, d);
  return Cyclotomic(n_, std::move(y));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (gcd64(mod_floor(k, std::max<std::int64_t>(n_, 1)), n_) != 1 && n_ > 1)
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(k) + ", " + std::to_string(n_) + ") != 1");
  if (n_ == 1) return *this;
  std::vector<Rational> dense(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    if (coeffs_[a] != 0) dense[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(a) * k, n_))] += coeffs_[a];
  return Cyclotomic(n_, reduce(std::move(dense), n_));
}

std::int64_t Cyclotomic::reduce_mod(std::int64_t ell, std::int64_t N, std::int64_t w) const {
  if (N % n_ != 0) throw Error(ErrorCode::InvalidArgument, "conductor does not divide the root order");
  const std::int64_t base = powmod(w, N / n_, ell);
  std::int64_t out = 0, power = 1;
  for (const auto& c : coeffs_) {
    if (c != 0) {
      const BigInt num = boost::multiprecision::numerator(c) % ell;
      const BigInt den = boost::multiprecision::denominator(c) % ell;
      if (den == 0) throw Error(ErrorCode::InvalidArgument, "coefficient denominator divisible by the modulus");
      std::int64_t v = mod_floor(static_cast<std::int64_t>(num), ell);
      v = static_cast<std::int64_t>((static_cast<__int128>(v) * invmod(static_cast<std::int64_t>(den), ell)) % ell);
      out = static_cast<std::int64_t>((out + static_cast<__int128>(v) * power) % ell);
    }
    power = static_cast<std::int64_t>((static_cast<__int128>(power) * base) % ell);
  }
  return out;
}

std::string Cyclotomic::to_text() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (k == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += "z(" + std::to_string(n_) + ")^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base = mod_floor(base, mod);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % mod);
    base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t mod) {
  std::int64_t g = mod, x = 0, x1 = 1, a1 = mod_floor(a, mod);
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw Error(ErrorCode::InvalidArgument, "not invertible modulo " + std::to_string(mod));
  return mod_floor(x, mod);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t root_of_unity_mod(std::int64_t ell, std::int64_t n) {
  if ((ell - 1) % n != 0) throw Error(ErrorCode::InvalidArgument, "n does not divide ell - 1");
  const auto factors = prime_factors(n);
  for (std::int64_t g = 2; g < ell; ++g) {
    const std::int64_t w = powmod(g, (ell - 1) / n, ell);
    bool exact = true;
    for (auto r : factors)
      if (powmod(w, n / r, ell) == 1) exact = false;
    if (exact) return w;
  }
  throw Error(ErrorCode::InvalidArgument, "no root of unity found");
}

}  // namespace liechar
