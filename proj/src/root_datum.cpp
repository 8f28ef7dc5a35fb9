#include "liechar/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "liechar/linalg.hpp"

namespace liechar {

namespace {

struct Edge {
  int other;
  int weight;  // product A(i,j) * A(j,i)
};

[[noreturn]] void not_finite(const std::string& why) { throw Error(ErrorCode::NotFiniteType, why); }

// In a bond i - j, node i is the short one when <alpha_i, alpha_j^vee> = -1
// and the reverse pairing is -2 or -3.
bool is_short_end(const IntMatrix& a, int i, int j) { return a(i, j) == -1 && a(j, i) < -1; }

DynkinComponent classify_component(const IntMatrix& a, const std::vector<int>& nodes,
                                   const std::vector<std::vector<Edge>>& adj) {
  const int n = static_cast<int>(nodes.size());
  DynkinComponent comp;
  comp.rank = n;
  if (n == 1) {
    comp.family = 'A';
    comp.nodes = nodes;
    return comp;
  }
  int edge_count = 0;
  int doubles = 0, triples = 0;
  for (int v : nodes)
    for (const auto& e : adj[static_cast<std::size_t>(v)]) {
      ++edge_count;
      if (e.weight == 2) ++doubles;
      if (e.weight == 3) ++triples;
      if (e.weight > 3) not_finite("bond of weight " + std::to_string(e.weight));
    }
  edge_count /= 2;
  doubles /= 2;
  triples /= 2;
  if (edge_count != n - 1) not_finite("Dynkin diagram contains a cycle");

  auto degree = [&](int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };

  // Walk a path starting at `start`, not returning to `prev`.
  auto walk = [&](int start, int prev) {
    std::vector<int> path{start};
    int cur = start;
    for (;;) {
      int next = -1;
      for (const auto& e : adj[static_cast<std::size_t>(cur)])
        if (e.other != prev) next = e.other;
      if (next < 0) break;
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    return path;
  };

  if (triples > 0) {
    if (n != 2) not_finite("triple bond outside rank 2");
    comp.family = 'G';
    int u = nodes[0], v = nodes[1];
    comp.nodes = is_short_end(a, u, v) ? std::vector<int>{u, v} : std::vector<int>{v, u};
    return comp;
  }

  const int max_degree = std::accumulate(nodes.begin(), nodes.end(), 0,
                                         [&](int m, int v) { return std::max(m, degree(v)); });

  if (doubles > 0) {
    if (doubles > 1 || max_degree > 2) not_finite("multiply laced diagram is not of finite type");
    int end = *std::min_element(nodes.begin(), nodes.end(), [&](int x, int y) {
      if ((degree(x) == 1) != (degree(y) == 1)) return degree(x) == 1;
      return x < y;
    });
    std::vector<int> path = walk(end, -1);
    int pos = -1;
    for (int k = 0; k + 1 < n; ++k)
      if (a(path[static_cast<std::size_t>(k)], path[static_cast<std::size_t>(k + 1)]) *
              a(path[static_cast<std::size_t>(k + 1)], path[static_cast<std::size_t>(k)]) ==
          2)
        pos = k;
    if (n == 4 && pos == 1) {
      // F4: alpha_1, alpha_2 long.
      if (is_short_end(a, path[1], path[2])) std::reverse(path.begin(), path.end());
      comp.family = 'F';
      comp.nodes = path;
      return comp;
    }
    if (pos != 0 && pos != n - 2) not_finite("double bond in the interior of the diagram");
    if (pos == 0) std::reverse(path.begin(), path.end());
    if (n == 2 && !is_short_end(a, path[1], path[0])) std::reverse(path.begin(), path.end());
    const int last = path[static_cast<std::size_t>(n - 1)];
    const int before = path[static_cast<std::size_t>(n - 2)];
    comp.family = is_short_end(a, last, before) ? 'B' : 'C';
    comp.nodes = path;
    return comp;
  }

  if (max_degree <= 2) {
    int end = *std::min_element(nodes.begin(), nodes.end(), [&](int x, int y) {
      if ((degree(x) == 1) != (degree(y) == 1)) return degree(x) == 1;
      return x < y;
    });
    comp.family = 'A';
    comp.nodes = walk(end, -1);
    return comp;
  }
  if (max_degree > 3) not_finite("node of degree > 3");
  std::vector<int> branches;
  for (int v : nodes)
    if (degree(v) == 3) branches.push_back(v);
  if (branches.size() != 1) not_finite("more than one branch node");
  const int branch = branches.front();
  std::vector<std::vector<int>> arms;
  for (const auto& e : adj[static_cast<std::size_t>(branch)]) arms.push_back(walk(e.other, branch));
  std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });
  const auto s0 = arms[0].size(), s1 = arms[1].size(), s2 = arms[2].size();
  if (s0 == 1 && s1 == 1) {
    comp.family = 'D';
    comp.nodes = {arms[0][0], arms[1][0], branch};
    for (int v : arms[2]) comp.nodes.push_back(v);
    return comp;
  }
  if (s0 == 1 && s1 == 2 && s2 >= 2 && s2 <= 4) {
    comp.family = 'E';
    // Bourbaki: 1 - 3 - 4 - 5 - 6 ..., 2 attached to 4.
    comp.nodes = {arms[1][1], arms[0][0], arms[1][0], branch};
    for (int v : arms[2]) comp.nodes.push_back(v);
    return comp;
  }
  not_finite("simply laced diagram with arms (" + std::to_string(s0) + "," + std::to_string(s1) +
             "," + std::to_string(s2) + ")");
}

IntMatrix root_matrix_for(char family, int n) {
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j) {
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      // B: alpha_n short, C: alpha_n long.
      if (family == 'B')
        a(n - 2, n - 1) = -2;
      else
        a(n - 1, n - 2) = -2;
      break;
    case 'D':
      bond(1, 3);
      bond(2, 3);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case 'E':
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      a(1, 2) = -2;
      break;
    case 'G':
      a(0, 1) = -1;
      a(1, 0) = -3;
      break;
    default:
      break;
  }
  return a;
}

bool valid_family_rank(char family, int n) {
  switch (family) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

IntMatrix reflection_on_x(const IntMatrix& roots, int i) {
  const auto l = roots.rows();
  IntMatrix s = IntMatrix::Identity(l, l);
  // s_i(x) = x - <x, alpha_i^vee> alpha_i with alpha_i^vee = e_i.
  s.row(i) -= roots.row(i);
  return s;
}

}  // namespace

std::vector<DynkinComponent> classify_root_matrix(const IntMatrix& a) {
  const int l = static_cast<int>(a.rows());
  if (a.cols() != l) not_finite("root matrix is not square");
  std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    if (a(i, i) != 2) not_finite("diagonal entry " + std::to_string(a(i, i)) + " != 2");
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) not_finite("positive off-diagonal entry");
      if ((a(i, j) == 0) != (a(j, i) == 0)) not_finite("zero pattern is not symmetric");
      if (a(i, j) != 0) adj[static_cast<std::size_t>(i)].push_back({j, static_cast<int>(a(i, j) * a(j, i))});
    }
  }
  std::vector<int> seen(static_cast<std::size_t>(l), 0);
  std::vector<DynkinComponent> out;
  for (int s = 0; s < l; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> nodes;
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      nodes.push_back(v);
      for (const auto& e : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(e.other)]) {
          seen[static_cast<std::size_t>(e.other)] = 1;
          queue.push_back(e.other);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(classify_component(a, nodes, adj));
  }
  return out;
}

std::string type_name(const std::vector<DynkinComponent>& components) {
  std::vector<std::pair<char, int>> parts;
  for (const auto& c : components) parts.emplace_back(c.family, c.rank);
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second > y.second;
  });
  std::string out;
  for (const auto& [f, r] : parts) {
    if (!out.empty()) out += "+";
    out += f;
    out += std::to_string(r);
  }
  return out;
}

BigInt weyl_group_order(char family, int n) {
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (BigInt(1) << n) * factorial(n);
    case 'D': return (BigInt(1) << (n - 1)) * factorial(n);
    case 'E':
      if (n == 6) return BigInt(51840);
      if (n == 7) return BigInt(2903040);
      return BigInt(696729600);
    case 'F': return BigInt(1152);
    case 'G': return BigInt(12);
    default: return BigInt(0);
  }
}

IntMatrix cartan_matrix(const std::string& type) {
  std::vector<std::pair<char, int>> parts;
  std::string token;
  std::istringstream in(type);
  while (std::getline(in, token, '+')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.size() < 2) throw Error(ErrorCode::InvalidArgument, "unknown type '" + type + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    int rank = 0;
    try {
      std::size_t pos = 0;
      rank = std::stoi(token.substr(1), &pos);
      if (pos != token.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "unknown type '" + type + "'");
    }
    if (!valid_family_rank(family, rank))
      throw Error(ErrorCode::InvalidArgument, "unknown type '" + type + "'");
    parts.emplace_back(family, rank);
  }
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "empty type");
  int total = 0;
  for (const auto& p : parts) total += p.second;
  IntMatrix a = IntMatrix::Zero(total, total);
  int offset = 0;
  for (const auto& [family, rank] : parts) {
    a.block(offset, offset, rank, rank) = root_matrix_for(family, rank);
    offset += rank;
  }
  return a.transpose();
}

IntMatrix permutation_twist(const std::vector<int>& perm) {
  const auto l = static_cast<Eigen::Index>(perm.size());
  std::vector<int> seen(perm.size(), 0);
  IntMatrix f = IntMatrix::Zero(l, l);
  for (Eigen::Index i = 0; i < l; ++i) {
    const int target = perm[static_cast<std::size_t>(i)];
    if (target < 1 || target > l || seen[static_cast<std::size_t>(target - 1)]++)
      throw Error(ErrorCode::TwistIncompatible, "twist is not a permutation of 1.." + std::to_string(l));
    f(i, target - 1) = 1;
  }
  return f;
}

std::shared_ptr<const RootDatum> RootDatum::build(const IntMatrix& cartan, const IntMatrix& twist) {
  std::shared_ptr<RootDatum> d(new RootDatum());
  const int l = static_cast<int>(cartan.rows());
  if (l == 0 || cartan.cols() != l) not_finite("Cartan matrix must be square and non-empty");
  d->rank_ = l;
  d->roots_matrix_ = cartan.transpose();
  d->components_ = classify_root_matrix(d->roots_matrix_);

  const IntMatrix& a = d->roots_matrix_;
  d->twist_ = twist.size() == 0 ? IntMatrix::Identity(l, l) : twist;
  if (d->twist_.rows() != l || d->twist_.cols() != l)
    throw Error(ErrorCode::TwistIncompatible, "twist has wrong size");
  // A valid F0 must send simple roots to simple roots and simple coroots to
  // simple coroots; with A^vee = I that forces a permutation matrix which is
  // a diagram automorphism.
  std::vector<int> perm(static_cast<std::size_t>(l), -1);
  for (int i = 0; i < l; ++i) {
    int target = -1;
    int nonzero = 0;
    for (int j = 0; j < l; ++j) {
      if (d->twist_(i, j) != 0) ++nonzero;
      if (d->twist_(i, j) == 1) target = j;
    }
    if (target < 0 || nonzero != 1) throw Error(ErrorCode::TwistIncompatible, "twist does not permute the simple coroots");
    perm[static_cast<std::size_t>(i)] = target;
  }
  {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < l; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i)
        throw Error(ErrorCode::TwistIncompatible, "twist is not invertible");
  }
  IntMatrix image = a * d->twist_;
  for (int i = 0; i < l; ++i)
    if (image.row(i) != a.row(perm[static_cast<std::size_t>(i)]))
      throw Error(ErrorCode::TwistIncompatible, "twist does not preserve the simple roots");
  for (int i = 0; i < l; ++i) d->twist_perm_.push_back(perm[static_cast<std::size_t>(i)] + 1);

  for (int i = 0; i < l; ++i) d->reflections_.push_back(reflection_on_x(a, i));

  d->inverse_roots_ = rational_inverse(a);
  d->heights_ = RatRow(l);
  for (int i = 0; i < l; ++i) {
    Rational s = 0;
    for (int j = 0; j < l; ++j) s += d->inverse_roots_(i, j);
    d->heights_[i] = s;
  }

  // Symmetrizer: A(i,j) d_j == A(j,i) d_i, smallest entry 1 per component.
  d->symmetrizer_.assign(static_cast<std::size_t>(l), Rational(0));
  for (const auto& comp : d->components_) {
    std::deque<int> queue{comp.nodes.front()};
    d->symmetrizer_[static_cast<std::size_t>(comp.nodes.front())] = 1;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : comp.nodes) {
        if (j == i || a(i, j) == 0 || d->symmetrizer_[static_cast<std::size_t>(j)] != 0) continue;
        d->symmetrizer_[static_cast<std::size_t>(j)] =
            d->symmetrizer_[static_cast<std::size_t>(i)] * Rational(a(j, i)) / Rational(a(i, j));
        queue.push_back(j);
      }
    }
    Rational smallest = d->symmetrizer_[static_cast<std::size_t>(comp.nodes.front())];
    for (int v : comp.nodes) smallest = std::min(smallest, d->symmetrizer_[static_cast<std::size_t>(v)]);
    for (int v : comp.nodes) d->symmetrizer_[static_cast<std::size_t>(v)] /= smallest;
  }

  // Roots with their coroots, by closure of the simple pairs under W.
  std::unordered_map<IntRow, IntRow, RowHash, RowEqual> coroot_of;
  std::deque<IntRow> queue;
  for (int i = 0; i < l; ++i) {
    IntRow r = a.row(i);
    IntRow c = IntRow::Zero(l);
    c[i] = 1;
    if (coroot_of.emplace(r, c).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    IntRow r = queue.front();
    queue.pop_front();
    const IntRow c = coroot_of.at(r);
    for (const auto& s : d->reflections_) {
      IntRow r2 = r * s;
      if (coroot_of.count(r2)) continue;
      IntRow c2 = c * s.transpose();
      coroot_of.emplace(r2, c2);
      queue.push_back(r2);
    }
  }
  std::vector<std::pair<IntRow, IntRow>> positive;
  for (const auto& [r, c] : coroot_of) {
    RatRow coords = d->to_root_basis(r);
    bool nonneg = true;
    for (Eigen::Index i = 0; i < coords.size(); ++i)
      if (coords[i] < 0) nonneg = false;
    if (nonneg) positive.emplace_back(r, c);
  }
  std::sort(positive.begin(), positive.end(), [&](const auto& x, const auto& y) {
    Rational hx = d->height(x.first), hy = d->height(y.first);
    if (hx != hy) return hx < hy;
    return LexLess{}(y.first, x.first);
  });
  for (auto& [r, c] : positive) {
    d->positive_roots_.push_back(r);
    d->positive_coroots_.push_back(c);
  }
  if (2 * positive.size() != coroot_of.size())
    not_finite("root system is not symmetric under negation");

  d->weyl_order_ = 1;
  for (const auto& comp : d->components_) d->weyl_order_ *= weyl_group_order(comp.family, comp.rank);
  return d;
}

RatRow RootDatum::to_root_basis(const Weight& weight) const {
  RatRow out = RatRow::Zero(rank_);
  for (int j = 0; j < rank_; ++j) {
    Rational s = 0;
    for (int i = 0; i < rank_; ++i)
      if (weight[i] != 0) s += Rational(weight[i]) * inverse_roots_(i, j);
    out[j] = s;
  }
  return out;
}

Rational RootDatum::height(const Weight& weight) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    if (weight[i] != 0) s += Rational(weight[i]) * heights_[i];
  return s;
}

Rational RootDatum::form(const Weight& x, const Weight& y) const {
  RatRow c = to_root_basis(y);
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    if (x[j] != 0) s += Rational(x[j]) * symmetrizer_[static_cast<std::size_t>(j)] * c[j];
  return s;
}

std::vector<WeylElement> RootDatum::weyl_elements(std::int64_t bound) const {
  if (weyl_order_ > bound)
    throw Error(ErrorCode::GroupTooLarge,
                "|W| = " + weyl_order_.str() + " exceeds the bound " + std::to_string(bound));
  std::vector<WeylElement> out;
  std::unordered_set<IntMatrix, MatrixHash, MatrixEqual> seen;
  IntMatrix id = IntMatrix::Identity(rank_, rank_);
  out.push_back(id);
  seen.insert(id);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : reflections_) {
      IntMatrix g = out[k] * s;
      if (seen.insert(g).second) out.push_back(g);
    }
  }
  return out;
}

BigInt RootDatum::parabolic_order(const std::vector<int>& generators) const {
  if (generators.empty()) return BigInt(1);
  const auto k = static_cast<Eigen::Index>(generators.size());
  IntMatrix sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      sub(i, j) = roots_matrix_(generators[static_cast<std::size_t>(i)], generators[static_cast<std::size_t>(j)]);
  BigInt order = 1;
  for (const auto& comp : classify_root_matrix(sub)) order *= weyl_group_order(comp.family, comp.rank);
  return order;
}

WeylElement RootDatum::word(const std::vector<int>& letters) const {
  IntMatrix m = IntMatrix::Identity(rank_, rank_);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (*it < 1 || *it > rank_) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
    m = m * reflections_[static_cast<std::size_t>(*it - 1)];
  }
  return m;
}

DatumPtr make_datum(const std::string& type, const std::vector<int>& twist) {
  IntMatrix c = cartan_matrix(type);
  IntMatrix f = twist.empty() ? IntMatrix() : permutation_twist(twist);
  if (!twist.empty() && static_cast<Eigen::Index>(twist.size()) != c.rows())
    throw Error(ErrorCode::TwistIncompatible, "twist length does not match the rank");
  return RootDatum::build(c, f);
}

}  // namespace liechar
