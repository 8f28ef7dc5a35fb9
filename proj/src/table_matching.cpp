#include "liechar/table_matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <boost/multiprecision/integer.hpp>

#include "liechar/linalg.hpp"
#include "liechar/parallel.hpp"

namespace liechar {

BigInt AbstractTable::group_order() const {
  for (const auto& c : classes)
    if (c.order == 1) return c.centralizer;
  throw Error(ErrorCode::SchemaError, "no class of order 1");
}

std::vector<std::size_t> AbstractTable::p_prime_classes(std::int64_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (p <= 1 || gcd64(classes[i].order, p) == 1) out.push_back(i);
  return out;
}

void AbstractTable::validate() const {
  const std::size_t n = classes.size();
  if (n == 0) throw Error(ErrorCode::SchemaError, "no classes");
  if (chars.empty()) throw Error(ErrorCode::SchemaError, "no characters");
  if (chars.size() != n)
    throw Error(ErrorCode::SchemaError,
                std::to_string(chars.size()) + " characters for " + std::to_string(n) + " classes");
  for (std::size_t c = 0; c < chars.size(); ++c)
    if (chars[c].size() != n) throw Error(ErrorCode::SchemaError, "character " + std::to_string(c) + " has wrong length");
  const BigInt order = group_order();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = classes[i];
    if (c.order < 1) throw Error(ErrorCode::SchemaError, "class " + c.name + ": order must be positive");
    if (c.centralizer <= 0 || order % c.centralizer != 0)
      throw Error(ErrorCode::SchemaError, "class " + c.name + ": centralizer does not divide the group order");
    for (const auto& [k, j] : c.power) {
      if (j >= n) throw Error(ErrorCode::SchemaError, "class " + c.name + ": power map target out of range");
      if (classes[j].order != c.order / gcd64(c.order, k))
        throw Error(ErrorCode::InconsistentPowerMap, "class " + c.name + " to the power " + std::to_string(k) +
                                                         " has order " + std::to_string(c.order / gcd64(c.order, k)) +
                                                         ", class " + classes[j].name + " has order " +
                                                         std::to_string(classes[j].order));
    }
    if (c.central)
      for (const auto& [z, j] : *c.central)
        if (z >= n || j >= n) throw Error(ErrorCode::SchemaError, "class " + c.name + ": central translate out of range");
  }
  for (const auto& perm : automorphisms) {
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted.size() != n || sorted[i] != i) throw Error(ErrorCode::SchemaError, "automorphism is not a permutation");
  }
}

namespace {

bool class_compatible(const SemisimpleClass& c, const AbstractClass& a) {
  return c.order == a.order && c.centralizer_order == a.centralizer;
}

class Search {
public:
  Search(const ClassList& classes, const AbstractTable& table, std::int64_t p,
         const std::map<std::size_t, std::size_t>& pins, std::size_t cap)
      : classes_(classes), table_(table), p_(p), cap_(cap) {
    const auto allowed = table.p_prime_classes(p);
    const std::size_t n = classes.classes.size();
    if (allowed.size() != n)
      throw Error(ErrorCode::NoIdentification, std::to_string(n) + " computed classes against " +
                                                   std::to_string(allowed.size()) + " p'-classes");
    for (std::size_t c : classes.center) is_central_.insert(c);
    domain_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto pin = pins.find(i);
      for (std::size_t a : allowed) {
        if (pin != pins.end() && pin->second != a) continue;
        if (class_compatible(classes.classes[i], table.classes[a])) domain_[i].push_back(a);
      }
    }
    for (const auto& [i, a] : pins)
      if (i >= n || a >= table.classes.size())
        throw Error(ErrorCode::InvalidArgument, "pin " + std::to_string(i) + "=" + std::to_string(a) + " out of range");
    ident_.assign(n, npos);
    owner_.assign(table.classes.size(), npos);
    allowed_.assign(table.classes.size(), std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a : domain_[i]) allowed_[a][i] = 1;
  }

  std::vector<Identification> run() {
    recurse();
    return std::move(found_);
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool assign(std::size_t i0, std::size_t a0) {
    std::vector<std::pair<std::size_t, std::size_t>> work{{i0, a0}};
    while (!work.empty()) {
      auto [i, a] = work.back();
      work.pop_back();
      if (ident_[i] == a) continue;
      if (ident_[i] != npos || owner_[a] != npos || !allowed_[a][i]) return false;
      ident_[i] = a;
      owner_[a] = i;
      trail_.push_back(i);
      const auto& ca = table_.classes[a];
      for (const auto& [k, j] : classes_.classes[i].power_map) {
        auto it = ca.power.find(k);
        if (it != ca.power.end()) work.emplace_back(j, it->second);
      }
      if (!ca.central) continue;
      for (const auto& [z, j] : classes_.classes[i].central_translates) {
        if (ident_[z] == npos) continue;
        auto it = ca.central->find(ident_[z]);
        if (it != ca.central->end()) work.emplace_back(j, it->second);
      }
      if (is_central_.count(i))
        for (std::size_t x : trail_) {
          const auto& tx = classes_.classes[x].central_translates;
          const auto& ax = table_.classes[ident_[x]].central;
          auto jt = tx.find(i);
          if (jt == tx.end() || !ax) continue;
          auto bt = ax->find(a);
          if (bt != ax->end()) work.emplace_back(jt->second, bt->second);
        }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t i = trail_.back();
      trail_.pop_back();
      owner_[ident_[i]] = npos;
      ident_[i] = npos;
    }
  }

  void recurse() {
    std::size_t best = npos, best_count = npos;
    for (std::size_t i = 0; i < ident_.size(); ++i) {
      if (ident_[i] != npos) continue;
      std::size_t count = 0;
      for (std::size_t a : domain_[i])
        if (owner_[a] == npos) ++count;
      if (count == 0) return;
      if (count < best_count) best = i, best_count = count;
    }
    if (best == npos) {
      if (!verify_identification(classes_, table_, ident_, p_))
        throw Error(ErrorCode::InvalidArgument, "search produced an inconsistent identification");
      if (found_.size() == cap_)
        throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap_) + " identifications (" +
                                                std::to_string(found_.size()) + " found before stopping)");
      found_.push_back(ident_);
      return;
    }
    for (std::size_t a : domain_[best]) {
      if (owner_[a] != npos) continue;
      const std::size_t mark = trail_.size();
      if (assign(best, a)) recurse();
      undo(mark);
    }
  }

  const ClassList& classes_;
  const AbstractTable& table_;
  std::int64_t p_;
  std::size_t cap_;
  std::set<std::size_t> is_central_;
  std::vector<std::vector<std::size_t>> domain_;
  std::vector<std::vector<char>> allowed_;
  Identification ident_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> trail_;
  std::vector<Identification> found_;
};

}  // namespace

bool verify_identification(const ClassList& classes, const AbstractTable& table, const Identification& ident,
                           std::int64_t p) {
  const auto allowed = table.p_prime_classes(p);
  if (ident.size() != classes.classes.size() || ident.size() != allowed.size()) return false;
  std::vector<std::size_t> image = ident;
  std::sort(image.begin(), image.end());
  if (image != allowed) return false;
  for (std::size_t i = 0; i < ident.size(); ++i) {
    const auto& c = classes.classes[i];
    const auto& a = table.classes[ident[i]];
    if (!class_compatible(c, a)) return false;
    for (const auto& [k, j] : c.power_map) {
      auto it = a.power.find(k);
      if (it != a.power.end() && it->second != ident[j]) return false;
    }
    if (a.central)
      for (const auto& [z, j] : c.central_translates) {
        auto it = a.central->find(ident[z]);
        if (it != a.central->end() && it->second != ident[j]) return false;
      }
  }
  return true;
}

std::vector<Identification> candidate_identifications(const ClassList& classes, const AbstractTable& table,
                                                      std::int64_t p, const std::map<std::size_t, std::size_t>& pins,
                                                      std::size_t cap) {
  auto found = Search(classes, table, p, pins, cap).run();
  if (found.empty()) throw Error(ErrorCode::NoIdentification, "no bijection is compatible with the class invariants");
  return found;
}

std::optional<Rational> rational_reconstruction(const BigInt& a, const BigInt& m) {
  BigInt r0 = m, r1 = ((a % m) + m) % m;
  BigInt s0 = 0, s1 = 1;
  const BigInt bound = boost::multiprecision::sqrt(BigInt(m / 2));
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1, r1 = r2, s0 = s1, s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  if (boost::multiprecision::gcd(r1, abs(s1)) != 1) return std::nullopt;
  return s1 < 0 ? Rational(-r1, -s1) : Rational(r1, s1);
}

namespace {

constexpr Eigen::Index exact_solve_limit = 16;

// Ordinary characters restricted through the identification, as a
// characters x computed-classes matrix.
CycMatrix restricted_characters(const AbstractTable& table, const Identification& ident) {
  CycMatrix x(static_cast<Eigen::Index>(table.chars.size()), static_cast<Eigen::Index>(ident.size()));
  for (std::size_t c = 0; c < table.chars.size(); ++c)
    for (std::size_t i = 0; i < ident.size(); ++i)
      x(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i)) = table.chars[c][ident[i]];
  return x;
}

std::int64_t common_conductor(const CycMatrix& a, const CycMatrix& b) {
  std::int64_t n = 1;
  for (const CycMatrix* m : {&a, &b})
    for (Eigen::Index i = 0; i < m->rows(); ++i)
      for (Eigen::Index j = 0; j < m->cols(); ++j) n = lcm64(n, (*m)(i, j).conductor());
  return n;
}

DecompositionMatrix finish(RatMatrix d) {
  DecompositionMatrix out;
  out.solved = true;
  out.valid = true;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (d(i, j) < 0 || boost::multiprecision::denominator(d(i, j)) != 1) out.valid = false;
  out.entries = std::move(d);
  return out;
}

DecompositionMatrix solve_exact(const CycMatrix& x, const CycMatrix& b) {
  const Eigen::Index n = b.rows(), m = x.rows();
  // D B = X  <=>  B^T D^T = X^T.
  CycMatrix aug(n, n + m);
  aug.leftCols(n) = b.transpose();
  aug.rightCols(m) = x.transpose();
  if (static_cast<Eigen::Index>(row_reduce(aug, n).size()) != n)
    throw Error(ErrorCode::SingularBrauerMatrix, "Brauer table is singular");
  RatMatrix d(m, n);
  for (Eigen::Index c = 0; c < m; ++c)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Cyclotomic& v = aug(j, n + c);
      if (!v.is_rational()) return {};
      d(c, j) = v.rational_value();
    }
  return finish(std::move(d));
}

// Solution of B^T Y = X^T modulo ell, or none when B is singular there.
std::optional<std::vector<std::vector<std::int64_t>>> solve_mod(const std::vector<std::vector<std::int64_t>>& b,
                                                                const std::vector<std::vector<std::int64_t>>& x,
                                                                std::int64_t ell) {
  const std::size_t n = b.size(), m = x.size();
  std::vector<std::vector<std::int64_t>> aug(n, std::vector<std::int64_t>(n + m));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = b[c][r];
    for (std::size_t c = 0; c < m; ++c) aug[r][n + c] = x[c][r];
  }
  auto mulmod = [ell](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % ell);
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[c]);
    const std::int64_t inv = invmod(aug[c][c], ell);
    for (auto& v : aug[c]) v = mulmod(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const std::int64_t f = aug[r][c];
      for (std::size_t k = c; k < n + m; ++k) aug[r][k] = mod_floor(aug[r][k] - mulmod(f, aug[c][k]), ell);
    }
  }
  std::vector<std::vector<std::int64_t>> d(m, std::vector<std::int64_t>(n));
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t j = 0; j < n; ++j) d[c][j] = aug[j][n + c];
  return d;
}

// Exact check of D B == X with every product accumulated in Q(zeta_N).
bool verify_solution(const RatMatrix& d, const CycMatrix& b, const CycMatrix& x, std::int64_t N) {
  std::vector<std::vector<std::pair<std::int64_t, Rational>>> lifted(static_cast<std::size_t>(b.size()));
  for (Eigen::Index j = 0; j < b.rows(); ++j)
    for (Eigen::Index i = 0; i < b.cols(); ++i) {
      const Cyclotomic& v = b(j, i);
      auto& terms = lifted[static_cast<std::size_t>(j * b.cols() + i)];
      for (const auto& [e, c] : v.terms()) terms.emplace_back(e * (N / v.conductor()), c);
    }
  std::vector<char> ok(static_cast<std::size_t>(x.rows()), 1);
  parallel_for(static_cast<std::size_t>(x.rows()), [&](std::size_t c) {
    const auto row = static_cast<Eigen::Index>(c);
    for (Eigen::Index i = 0; i < b.cols(); ++i) {
      std::map<std::int64_t, Rational> sum;
      for (Eigen::Index j = 0; j < b.rows(); ++j) {
        if (d(row, j) == 0) continue;
        for (const auto& [e, coeff] : lifted[static_cast<std::size_t>(j * b.cols() + i)]) sum[e] += d(row, j) * coeff;
      }
      if (Cyclotomic::from_terms(N, sum) != x(row, i)) {
        ok[c] = 0;
        return;
      }
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
}

bool same_entries(const RatMatrix& a, const RatMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

DecompositionMatrix solve_modular(const CycMatrix& x, const CycMatrix& b) {
  const std::int64_t N = common_conductor(x, b);
  const Eigen::Index n = b.rows(), m = x.rows();
  std::vector<std::vector<BigInt>> residues(static_cast<std::size_t>(m), std::vector<BigInt>(static_cast<std::size_t>(n)));
  BigInt modulus = 1;
  std::optional<RatMatrix> previous;
  std::int64_t ell = std::int64_t(1) << 30;
  int singular = 0;
  constexpr int max_primes = 48;
  for (int round = 0; round < max_primes;) {
    ell = splitting_prime(N, ell);
    const std::int64_t w = root_of_unity_mod(ell, N);
    auto sol = solve_mod(reduce_matrix(b, N, ell, w), reduce_matrix(x, N, ell, w), ell);
    if (!sol) {
      if (++singular == 3) throw Error(ErrorCode::SingularBrauerMatrix, "Brauer table is singular modulo three primes");
      continue;
    }
    ++round;
    // Chinese remaindering of the new residues into the running ones.
    const BigInt inv = BigInt(invmod(static_cast<std::int64_t>(modulus % ell), ell));
    for (Eigen::Index c = 0; c < m; ++c)
      for (Eigen::Index j = 0; j < n; ++j) {
        BigInt& r = residues[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
        BigInt delta = ((BigInt((*sol)[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]) - r) % ell + ell) % ell;
        r += modulus * ((delta * inv) % ell);
      }
    modulus *= ell;
    RatMatrix d(m, n);
    bool complete = true;
    for (Eigen::Index c = 0; c < m && complete; ++c)
      for (Eigen::Index j = 0; j < n && complete; ++j) {
        auto v = rational_reconstruction(residues[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)], modulus);
        if (v) d(c, j) = *v;
        else complete = false;
      }
    if (!complete) {
      previous.reset();
      continue;
    }
    if (previous && same_entries(*previous, d)) {
      if (!verify_solution(d, b, x, N)) return {};
      return finish(std::move(d));
    }
    previous = std::move(d);
  }
  return {};
}

}  // namespace

DecompositionMatrix decomposition_matrix(const AbstractTable& table, const BrauerTable& brauer,
                                         const Identification& ident) {
  const Eigen::Index n = brauer.values.rows();
  if (brauer.values.cols() != n || static_cast<Eigen::Index>(ident.size()) != n)
    throw Error(ErrorCode::SingularBrauerMatrix, "Brauer table is not square over the identified classes");
  CycMatrix x = restricted_characters(table, ident);
  return n <= exact_solve_limit ? solve_exact(x, brauer.values) : solve_modular(x, brauer.values);
}

namespace {

std::vector<std::vector<std::size_t>> group_closure(const std::vector<std::vector<std::size_t>>& gens) {
  if (gens.empty()) return {};
  std::vector<std::size_t> id(gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> out{id};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      std::vector<std::size_t> next(id.size());
      for (std::size_t i = 0; i < id.size(); ++i) next[i] = g[out[k][i]];
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  return out;
}

}  // namespace

FilterResult filter_identifications(const std::vector<Identification>& idents, const AbstractTable& table,
                                    const BrauerTable& brauer) {
  std::vector<DecompositionMatrix> all(idents.size());
  parallel_for(idents.size(), [&](std::size_t k) { all[k] = decomposition_matrix(table, brauer, idents[k]); });
  FilterResult out;
  for (std::size_t k = 0; k < idents.size(); ++k)
    if (all[k].valid) {
      out.survivors.push_back(k);
      out.matrices.push_back(std::move(all[k]));
    }
  const auto group = group_closure(table.automorphisms);
  std::set<Identification> covered;
  for (std::size_t k : out.survivors) {
    if (covered.count(idents[k])) continue;
    out.representatives.push_back(k);
    covered.insert(idents[k]);
    for (const auto& g : group) {
      Identification image(idents[k].size());
      for (std::size_t i = 0; i < image.size(); ++i) image[i] = g[idents[k][i]];
      covered.insert(std::move(image));
    }
  }
  return out;
}

}  // namespace liechar
