#include "liechar/brauer.hpp"

#include <functional>
#include <numeric>
#include <unordered_map>

#include "liechar/linalg.hpp"
#include "liechar/parallel.hpp"
#include "liechar/weyl_orbits.hpp"

namespace liechar {

namespace {

using FlatOrbits = std::unordered_map<IntRow, std::vector<IntRow>, RowHash, RowEqual>;

Cyclotomic evaluate(const DominantCharacter& character, const TorusElement& t,
                    const std::function<const std::vector<IntRow>&(const Weight&)>& orbit_of) {
  const std::int64_t n = t.order;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (const auto& [mu, m] : character.entries())
    for (const auto& x : orbit_of(mu)) counts[static_cast<std::size_t>(mod_floor(x.dot(t.numerators), n))] += m;
  return Cyclotomic::from_exponent_counts(n, counts);
}

}  // namespace

Cyclotomic brauer_value(const DominantCharacter& character, const TorusElement& t, std::int64_t p) {
  if (p > 1 && gcd64(t.order, p) != 1)
    throw Error(ErrorCode::BadOrder, "class " + format_torus(t) + " has order divisible by " + std::to_string(p));
  if (t.rank() != character.datum().rank()) throw Error(ErrorCode::InvalidArgument, "rank mismatch");
  std::vector<IntRow> scratch;
  return evaluate(character, t, [&](const Weight& mu) -> const std::vector<IntRow>& {
    scratch = orbit_elements(character.datum(), mu);
    return scratch;
  });
}

std::int64_t BrauerTable::conductor() const {
  std::int64_t n = 1;
  for (const auto& t : classes) n = lcm64(n, t.order);
  return n;
}

BrauerTable brauer_table(const CharacterLibrary& library, std::int64_t q, const std::vector<TorusElement>& classes) {
  const std::int64_t p = library.characteristic();
  const RootDatum& datum = library.datum();
  BrauerTable table;
  table.datum = library.datum_ptr();
  table.p = p;
  table.q = q;
  table.labels = restricted_weights(datum.rank(), q);
  table.classes = classes;
  table.class_ids.resize(classes.size());
  std::iota(table.class_ids.begin(), table.class_ids.end(), 0);
  for (const auto& t : classes)
    if (gcd64(t.order, p) != 1)
      throw Error(ErrorCode::BadOrder, "class " + format_torus(t) + " has order divisible by " + std::to_string(p));

  std::vector<DominantCharacter> characters;
  characters.reserve(table.labels.size());
  for (const auto& lambda : table.labels) characters.push_back(library.irreducible(lambda));

  FlatOrbits orbits;
  for (const auto& c : characters)
    for (const auto& [mu, m] : c.entries())
      if (!orbits.count(mu)) orbits.emplace(mu, orbit_elements(datum, mu));
  auto lookup = [&](const Weight& mu) -> const std::vector<IntRow>& { return orbits.at(mu); };

  const std::size_t rows = characters.size(), cols = classes.size();
  table.values = CycMatrix(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  parallel_for(rows * cols, [&](std::size_t cell) {
    const std::size_t i = cell / cols, j = cell % cols;
    table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = evaluate(characters[i], classes[j], lookup);
  });
  return table;
}

BrauerTable brauer_table(const CharacterLibrary& library, const ClassList& classes) {
  std::vector<TorusElement> reps;
  for (const auto& c : classes.classes) reps.push_back(c.rep);
  return brauer_table(library, classes.q, reps);
}

CycMatrix galois_twist(const CycMatrix& values, std::int64_t k) {
  CycMatrix out(values.rows(), values.cols());
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    for (Eigen::Index j = 0; j < values.cols(); ++j) out(i, j) = values(i, j).galois(k);
  return out;
}

std::int64_t splitting_prime(std::int64_t n, std::int64_t at_least) {
  std::int64_t ell = (at_least / n + 1) * n + 1;
  while (!is_prime(ell)) ell += n;
  return ell;
}

std::vector<std::vector<std::int64_t>> reduce_matrix(const CycMatrix& m, std::int64_t n, std::int64_t ell, std::int64_t w) {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(m.rows()),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).reduce_mod(ell, n, w);
  return out;
}

std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t ell) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t inv = invmod(m[r][c], ell);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((static_cast<__int128>(m[i][c]) * inv) % ell);
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = mod_floor(static_cast<std::int64_t>((m[i][j] - static_cast<__int128>(f) * m[r][j]) % ell), ell);
    }
    ++r;
  }
  return r;
}

RankResult table_rank(const CycMatrix& m, std::int64_t conductor) {
  const std::size_t full = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
  const std::int64_t ell = splitting_prime(conductor, std::int64_t(1) << 30);
  const std::int64_t w = root_of_unity_mod(ell, conductor);
  const std::size_t r = rank_mod(reduce_matrix(m, conductor, ell, w), ell);
  if (r == full) return {r, true};
  if (full <= 12) return {static_cast<std::size_t>(exact_rank(m)), true};
  return {r, false};
}

}  // namespace liechar
