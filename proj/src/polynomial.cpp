#include "liechar/polynomial.hpp"

#include <map>
#include <mutex>

namespace liechar {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

namespace {

std::pair<Poly, Poly> divmod(Poly a, const Poly& monic) {
  trim(a);
  if (monic.empty() || monic.back() != 1) throw Error(ErrorCode::InvalidArgument, "divisor is not monic");
  const std::size_t m = monic.size() - 1;
  if (a.size() <= m) return {{}, a};
  Poly q(a.size() - m);
  for (std::size_t k = a.size(); k-- > m;) {
    const BigInt c = a[k];
    if (c == 0) continue;
    q[k - m] = c;
    for (std::size_t j = 0; j <= m; ++j) a[k - m + j] -= c * monic[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace

Poly poly_div_exact(const Poly& a, const Poly& monic) {
  auto [q, r] = divmod(a, monic);
  if (!r.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division has a remainder");
  return q;
}

bool poly_divides(const Poly& monic, const Poly& a) { return divmod(a, monic).second.empty(); }

Poly cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(n, p);
  return p;
}

Poly series_inverse(const Poly& p, std::size_t n) {
  if (p.empty() || p[0] != 1) throw Error(ErrorCode::InvalidArgument, "series inverse needs constant term 1");
  Poly out(n);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt s = k == 0 ? BigInt(1) : BigInt(0);
    for (std::size_t j = 1; j <= k && j < p.size(); ++j) s -= p[j] * out[k - j];
    out[k] = s;
  }
  return out;
}

BigInt poly_eval(const Poly& p, const BigInt& x) {
  BigInt out = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
  return out;
}

}  // namespace liechar
