#include "liechar/semisimple.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "liechar/parallel.hpp"

namespace liechar {

TorusElement::TorusElement(const IntRow& num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorCode::InvalidArgument, "torus denominator must be positive");
  numerators = num.unaryExpr([den](std::int64_t x) { return mod_floor(x, den); });
  std::int64_t g = den;
  for (Eigen::Index i = 0; i < numerators.size(); ++i) g = gcd64(g, numerators[i]);
  order = den / g;
  numerators /= g;
}

TorusElement TorusElement::from_fractions(const std::vector<Rational>& coords) {
  std::int64_t den = 1;
  for (const auto& c : coords)
    den = lcm64(den, static_cast<std::int64_t>(boost::multiprecision::denominator(c)));
  IntRow num(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational scaled = coords[i] * den;
    num[static_cast<Eigen::Index>(i)] = static_cast<std::int64_t>(boost::multiprecision::numerator(scaled));
  }
  return TorusElement(num, den);
}

std::vector<std::string> TorusElement::to_strings() const {
  std::vector<std::string> out;
  for (int i = 0; i < rank(); ++i) out.push_back(to_string(coordinate(i)));
  return out;
}

TorusElement TorusElement::operator+(const TorusElement& other) const {
  const std::int64_t den = lcm64(order, other.order);
  return TorusElement(numerators * (den / order) + other.numerators * (den / other.order), den);
}

bool torus_less(const TorusElement& a, const TorusElement& b) {
  for (int i = 0; i < std::min(a.rank(), b.rank()); ++i) {
    const std::int64_t x = a.numerators[i] * b.order, y = b.numerators[i] * a.order;
    if (x != y) return x < y;
  }
  return a.rank() < b.rank();
}

std::string format_torus(const TorusElement& t) {
  std::string out = "(";
  auto parts = t.to_strings();
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

Rational weight_value(const Weight& mu, const TorusElement& t) {
  if (mu.size() != t.numerators.size()) throw Error(ErrorCode::InvalidArgument, "rank mismatch");
  const std::int64_t s = mu.dot(t.numerators);
  return Rational(mod_floor(s, t.order), t.order);
}

namespace {

IntMatrix twist_on_y(const RootDatum& datum) {
  return datum.twist().size() ? IntMatrix(datum.twist().transpose()) : IntMatrix::Identity(datum.rank(), datum.rank());
}

std::vector<IntMatrix> y_generators(const RootDatum& datum) {
  std::vector<IntMatrix> out;
  for (const auto& s : datum.reflections()) out.push_back(s.transpose());
  return out;
}

std::vector<IntMatrix> closure(const std::vector<IntMatrix>& gens, int rank) {
  std::vector<IntMatrix> out{IntMatrix::Identity(rank, rank)};
  std::unordered_set<IntMatrix, MatrixHash, MatrixEqual> seen{out[0]};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      IntMatrix next = out[k] * g;
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  return out;
}

}  // namespace

std::vector<TwistedWeylClassRep> twisted_weyl_class_reps(const RootDatum& datum) {
  const auto elements = datum.weyl_elements();
  const IntMatrix f0 = twist_on_y(datum);
  const auto gens = y_generators(datum);
  std::unordered_set<IntMatrix, MatrixHash, MatrixEqual> assigned;
  std::vector<TwistedWeylClassRep> reps;
  for (const auto& w : elements) {
    IntMatrix op = f0 * y_action(w);
    if (assigned.count(op)) continue;
    std::vector<IntMatrix> orbit{op};
    assigned.insert(op);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : gens) {
        IntMatrix next = s * orbit[k] * s;
        if (assigned.insert(next).second) orbit.push_back(std::move(next));
      }
    reps.push_back({w, BigInt(orbit.size())});
  }
  return reps;
}

IntMatrix fixed_point_matrix(const RootDatum& datum, const WeylElement& w, std::int64_t q) {
  return q * twist_on_y(datum) * y_action(w) - IntMatrix::Identity(datum.rank(), datum.rank());
}

std::vector<TorusElement> torus_fixed_points(const RootDatum& datum, const WeylElement& w, std::int64_t q) {
  const IntMatrix m = fixed_point_matrix(datum, w, q);
  const SmithForm snf = smith_normal_form(m);
  const auto d = snf.invariant_factors();
  std::int64_t den = 1;
  for (auto x : d) {
    if (x == 0) throw Error(ErrorCode::SingularEquation, "det(q F0 w - id) = 0");
    den = lcm64(den, x);
  }
  const int l = datum.rank();
  std::vector<TorusElement> out;
  IntRow k = IntRow::Zero(l);
  for (;;) {
    IntRow u(l);
    for (int i = 0; i < l; ++i) u[i] = k[i] * (den / d[static_cast<std::size_t>(i)]);
    out.emplace_back(IntRow(u * snf.left), den);
    int i = l - 1;
    while (i >= 0 && k[i] == d[static_cast<std::size_t>(i)] - 1) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

namespace {

// Numerators alone are ambiguous across orders.
IntRow visit_key(std::int64_t order, const IntRow& numerators) {
  IntRow key(numerators.size() + 1);
  key << order, numerators;
  return key;
}

OrbitMinimum minimize_impl(const RootDatum& datum, const TorusElement& t,
                           std::unordered_set<IntRow, RowHash, RowEqual>* visited) {
  const auto gens = y_generators(datum);
  const std::int64_t n = t.order;
  std::vector<IntRow> orbit{t.numerators};
  std::vector<std::pair<std::size_t, int>> parent{{0, -1}};
  std::unordered_set<IntRow, RowHash, RowEqual> seen{t.numerators};
  std::size_t best = 0;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntRow next = (orbit[k] * gens[g]).unaryExpr([n](std::int64_t x) { return mod_floor(x, n); });
      if (!seen.insert(next).second) continue;
      orbit.push_back(std::move(next));
      parent.emplace_back(k, static_cast<int>(g));
      if (LexLess{}(orbit.back(), orbit[best])) best = orbit.size() - 1;
    }
  }
  OrbitMinimum out;
  out.rep.order = n;
  out.rep.numerators = orbit[best];
  out.orbit_size = orbit.size();
  std::vector<int> path;
  for (std::size_t k = best; parent[k].second >= 0; k = parent[k].first) path.push_back(parent[k].second);
  std::reverse(path.begin(), path.end());
  const int l = datum.rank();
  out.to_rep = IntMatrix::Identity(l, l);
  out.from_rep = IntMatrix::Identity(l, l);
  for (int g : path) {
    out.to_rep = out.to_rep * gens[static_cast<std::size_t>(g)];
    out.from_rep = gens[static_cast<std::size_t>(g)] * out.from_rep;
  }
  if (visited)
    for (const auto& x : orbit) visited->insert(visit_key(n, x));
  return out;
}

}  // namespace

OrbitMinimum minimize(const RootDatum& datum, const TorusElement& t) { return minimize_impl(datum, t, nullptr); }

TorusElement minimal_class_rep(const RootDatum& datum, const TorusElement& t) { return minimize(datum, t).rep; }

std::vector<TorusElement> torus_orbit(const RootDatum& datum, const TorusElement& t) {
  std::unordered_set<IntRow, RowHash, RowEqual> visited;
  minimize_impl(datum, t, &visited);
  std::vector<TorusElement> out;
  for (const auto& v : visited) out.emplace_back(IntRow(v.tail(v.size() - 1)), t.order);
  std::sort(out.begin(), out.end(), TorusLess{});
  return out;
}

TorusElement power_map(const RootDatum& datum, const TorusElement& t, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "power must be non-negative");
  return minimal_class_rep(datum, t.scaled(k));
}

BigInt OrderFactorization::evaluate(std::int64_t q) const {
  BigInt sum = 0, power = 1;
  for (int k = degree; k >= 0; --k) {
    if (static_cast<std::size_t>(k) < reciprocal_molien.size()) sum += reciprocal_molien[static_cast<std::size_t>(k)] * power;
    power *= q;
  }
  BigInt qn = 1;
  for (int i = 0; i < q_power; ++i) qn *= q;
  return qn * sum;
}

namespace {

std::string poly_to_string(const Poly& p, const char* var) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const BigInt& c = p[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

/// det(x I - c) for a rational matrix with integral characteristic polynomial.
Poly characteristic_polynomial(const RatMatrix& c) {
  const Eigen::Index n = c.rows();
  std::vector<Rational> coeff(static_cast<std::size_t>(n + 1));
  coeff[0] = 1;
  RatMatrix mk = RatMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    RatMatrix next = multiply(c, mk);
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += coeff[static_cast<std::size_t>(k - 1)];
    mk = next;
    Rational trace = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index r = 0; r < n; ++r) trace += c(i, r) * mk(r, i);
    coeff[static_cast<std::size_t>(k)] = -trace / k;
  }
  Poly out(static_cast<std::size_t>(n + 1));
  for (Eigen::Index k = 0; k <= n; ++k) {
    const Rational& x = coeff[static_cast<std::size_t>(k)];
    if (boost::multiprecision::denominator(x) != 1)
      throw Error(ErrorCode::InvalidArgument, "characteristic polynomial is not integral");
    out[static_cast<std::size_t>(n - k)] = boost::multiprecision::numerator(x);
  }
  return out;
}

/// Multiplicities of Phi_d in a product of cyclotomic polynomials.
std::vector<std::pair<std::int64_t, int>> cyclotomic_factors(Poly p) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 1; p.size() > 1; ++d) {
    if (d > 1000) throw Error(ErrorCode::InvalidArgument, "polynomial is not a product of cyclotomic factors");
    const Poly phi = cyclotomic_polynomial(d);
    int e = 0;
    while (p.size() > 1 && poly_divides(phi, p)) {
      p = poly_div_exact(p, phi);
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  return out;
}

std::string describe_torus(const Poly& charpoly) {
  const auto factors = cyclotomic_factors(charpoly);
  if (factors.size() == 1 && factors[0].second == 1)
    return "T(" + poly_to_string(cyclotomic_polynomial(factors[0].first), "q") + ")";
  std::string inner;
  for (auto [d, e] : factors) {
    inner += "(" + poly_to_string(cyclotomic_polynomial(d), "q") + ")";
    if (e > 1) inner += "^" + std::to_string(e);
  }
  return "T(" + inner + ")";
}

}  // namespace

CentralizerData centralizer_data(const RootDatum& datum, const TorusElement& t, const WeylElement& w,
                                 std::int64_t q) {
  const int l = datum.rank();
  const IntMatrix sigma = twist_on_y(datum) * y_action(w);
  if (!(t.act(q * sigma) == t))
    throw Error(ErrorCode::NotStabilized, "w(F(t)) != t for t = " + format_torus(t));

  CentralizerData out;
  const auto& roots = datum.positive_roots();
  const auto& coroots = datum.positive_coroots();
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (mod_floor(roots[i].dot(t.numerators), t.order) == 0) {
      members.push_back(i);
      out.subsystem.push_back(roots[i]);
    }

  // Simple roots of the subsystem: members that are not a sum of two members.
  std::unordered_set<IntRow, RowHash, RowEqual> member_set(out.subsystem.begin(), out.subsystem.end());
  std::unordered_set<IntRow, RowHash, RowEqual> decomposable;
  for (std::size_t a = 0; a < out.subsystem.size(); ++a)
    for (std::size_t b = a + 1; b < out.subsystem.size(); ++b) {
      IntRow s = out.subsystem[a] + out.subsystem[b];
      if (member_set.count(s)) decomposable.insert(s);
    }
  std::vector<std::size_t> simple;
  for (std::size_t k = 0; k < members.size(); ++k)
    if (!decomposable.count(out.subsystem[k])) {
      simple.push_back(members[k]);
      out.simple_roots.push_back(out.subsystem[k]);
    }
  const auto r = static_cast<Eigen::Index>(simple.size());

  IntMatrix sub(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      sub(i, j) = roots[simple[static_cast<std::size_t>(i)]].dot(coroots[simple[static_cast<std::size_t>(j)]]);
  if (r > 0) out.components = classify_root_matrix(sub);

  // Reflections of the subsystem on Y: y -> y - <beta, y> beta^vee.
  std::vector<IntMatrix> sub_gens;
  for (auto i : simple) {
    IntMatrix s = IntMatrix::Identity(l, l) - roots[i].transpose() * coroots[i];
    sub_gens.push_back(s);
  }
  const auto wc = closure(sub_gens, l);
  out.weyl_order = BigInt(wc.size());

  // Molien series of the twisted reflection group, inverted.
  const int n_c = static_cast<int>(members.size());
  const int degree = n_c + l;
  const std::size_t terms = static_cast<std::size_t>(degree + l + 2);
  std::map<Poly, std::int64_t> dets;
  for (const auto& v : wc) ++dets[reversed_characteristic_polynomial(IntMatrix(sigma * v))];
  Poly series(terms);
  for (const auto& [p, count] : dets) {
    const Poly inv = series_inverse(p, terms);
    for (std::size_t k = 0; k < terms; ++k) series[k] += count * inv[k];
  }
  for (auto& c : series) {
    if (c % out.weyl_order != 0) throw Error(ErrorCode::InvalidArgument, "Molien series is not integral");
    c /= out.weyl_order;
  }
  Poly recip = series_inverse(series, terms);
  for (std::size_t k = static_cast<std::size_t>(degree) + 1; k < terms; ++k)
    if (recip[k] != 0) throw Error(ErrorCode::InvalidArgument, "inverted Molien series is not a polynomial");
  trim(recip);
  out.factorization = {n_c, degree, recip};
  out.order = out.factorization.evaluate(q);
  if (out.order <= 0) throw Error(ErrorCode::InvalidArgument, "centralizer order is not positive");

  // Components permuted by sigma, labelled by orbit length and twist.
  std::unordered_map<IntRow, std::size_t, RowHash, RowEqual> coroot_index;
  for (std::size_t i = 0; i < coroots.size(); ++i) coroot_index.emplace(coroots[i], i);
  std::vector<int> component_of(roots.size(), -1);
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    std::vector<IntMatrix> gens;
    for (int node : out.components[c].nodes) gens.push_back(sub_gens[static_cast<std::size_t>(node)]);
    for (const auto& v : closure(gens, l))
      for (int node : out.components[c].nodes) {
        IntRow y = coroots[simple[static_cast<std::size_t>(node)]] * v;
        auto it = coroot_index.find(y);
        if (it == coroot_index.end()) it = coroot_index.find(IntRow(-y));
        component_of[it->second] = static_cast<int>(c);
      }
  }
  auto component_image = [&](std::size_t c, const IntMatrix& m) {
    const int node = out.components[c].nodes[0];
    IntRow y = coroots[simple[static_cast<std::size_t>(node)]] * m;
    auto it = coroot_index.find(y);
    if (it == coroot_index.end()) it = coroot_index.find(IntRow(-y));
    return component_of[it->second];
  };
  std::vector<bool> done(out.components.size(), false);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    if (done[c]) continue;
    int k = 0;
    std::size_t cur = c;
    IntMatrix tau = IntMatrix::Identity(l, l);
    do {
      done[cur] = true;
      cur = static_cast<std::size_t>(component_image(cur, sigma));
      tau = tau * sigma;
      ++k;
    } while (cur != c);
    // Smallest m with tau^m inner on the component.
    const auto& nodes = out.components[c].nodes;
    std::vector<IntMatrix> gens;
    for (int node : nodes) gens.push_back(sub_gens[static_cast<std::size_t>(node)]);
    std::unordered_set<IntRow, RowHash, RowEqual> inner;
    auto signature = [&](const IntMatrix& m) {
      IntRow sig(static_cast<Eigen::Index>(nodes.size()) * l);
      for (std::size_t j = 0; j < nodes.size(); ++j)
        sig.segment(static_cast<Eigen::Index>(j) * l, l) = coroots[simple[static_cast<std::size_t>(nodes[j])]] * m;
      return sig;
    };
    for (const auto& v : closure(gens, l)) inner.insert(signature(v));
    int m = 1;
    IntMatrix power = tau;
    while (!inner.count(signature(power)) && m < 6) {
      power = power * tau;
      ++m;
    }
    std::string label = (m > 1 ? std::to_string(m) : std::string()) + out.components[c].name();
    label += k == 1 ? "(q)" : "(q^" + std::to_string(k) + ")";
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());

  // Central torus: sigma on the annihilator of the subsystem.
  const int torus_rank = l - static_cast<int>(r);
  if (torus_rank > 0) {
    RatMatrix constraints(r, l);
    for (Eigen::Index i = 0; i < r; ++i)
      for (int j = 0; j < l; ++j) constraints(i, j) = roots[simple[static_cast<std::size_t>(i)]][j];
    const RatMatrix basis = right_nullspace(constraints);  // columns y^T
    const Eigen::Index d = basis.cols();
    RatMatrix sigma_q(l, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) sigma_q(i, j) = sigma(i, j);
    // Solve C * B^T = B^T * sigma for the restricted matrix C.
    RatMatrix aug(l, 2 * d);
    const RatMatrix images = multiply<Rational>(basis.transpose(), sigma_q).transpose();
    aug.leftCols(d) = basis;
    aug.rightCols(d) = images;
    row_reduce(aug, d);
    const RatMatrix restricted = aug.topRightCorner(d, d).transpose();
    labels.push_back(describe_torus(characteristic_polynomial(restricted)));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) out.description += (i ? " + " : "") + labels[i];

  const std::string dynkin = type_name(out.components);
  const std::string torus = torus_rank > 1 ? "T" + std::to_string(torus_rank) : "T";
  if (r == 0) out.subsystem_type = torus;
  else if (torus_rank == 0) out.subsystem_type = dynkin;
  else out.subsystem_type = dynkin + "+" + torus;
  return out;
}

BigInt group_order(const RootDatum& datum, std::int64_t q) {
  return centralizer_data(datum, TorusElement::zero(datum.rank()), IntMatrix::Identity(datum.rank(), datum.rank()), q)
      .order;
}

std::size_t ClassList::index_of_rep(const TorusElement& rep) const {
  auto it = lookup_.find(rep);
  if (it == lookup_.end()) throw Error(ErrorCode::InvalidArgument, "no class with representative " + format_torus(rep));
  return it->second;
}

std::size_t ClassList::index_of(const TorusElement& t) const { return index_of_rep(minimal_class_rep(*datum, t)); }

void ClassList::reindex() {
  lookup_.clear();
  for (std::size_t i = 0; i < classes.size(); ++i) lookup_.emplace(classes[i].rep, i);
}

std::vector<TorusElement> center_elements(const RootDatum& datum, std::int64_t q) {
  const int l = datum.rank();
  const SmithForm snf = smith_normal_form(IntMatrix(datum.root_matrix().transpose()));
  const auto d = snf.invariant_factors();
  std::int64_t den = 1;
  for (auto x : d) den = lcm64(den, x);
  const IntMatrix frob = q * twist_on_y(datum) - IntMatrix::Identity(l, l);
  std::vector<TorusElement> out;
  IntRow k = IntRow::Zero(l);
  for (;;) {
    IntRow u(l);
    for (int i = 0; i < l; ++i) u[i] = k[i] * (den / d[static_cast<std::size_t>(i)]);
    TorusElement t(IntRow(u * snf.left), den);
    if (t.act(frob) == TorusElement::zero(l) && gcd64(t.order, q) == 1) out.push_back(t);
    int i = l - 1;
    while (i >= 0 && k[i] == d[static_cast<std::size_t>(i)] - 1) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), TorusLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> power_map_primes(const ClassList& list) {
  std::int64_t max_order = 1;
  for (const auto& c : list.classes) max_order = std::max(max_order, c.order);
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 2; n <= max_order; ++n)
    if (prime_factors(n).size() == 1 && prime_factors(n)[0] == n) primes.push_back(n);
  if (list.p > 1 && std::find(primes.begin(), primes.end(), list.p) == primes.end()) primes.push_back(list.p);
  std::sort(primes.begin(), primes.end());
  return primes;
}

void complete_class_maps(ClassList& list) {
  list.reindex();
  const RootDatum& datum = *list.datum;
  const auto primes = power_map_primes(list);
  std::vector<TorusElement> centre;
  list.center.clear();
  for (const auto& c : center_elements(datum, list.q)) {
    centre.push_back(c);
    list.center.push_back(list.index_of_rep(c));
  }
  parallel_for(list.classes.size(), [&](std::size_t i) {
    auto& cls = list.classes[i];
    cls.power_map.clear();
    cls.central_translates.clear();
    for (auto r : primes) cls.power_map[r] = list.index_of(cls.rep.scaled(r));
    for (std::size_t z = 0; z < centre.size(); ++z)
      cls.central_translates[list.center[z]] = list.index_of(cls.rep + centre[z]);
  });
}

ClassList semisimple_classes(const DatumPtr& datum_ptr, std::int64_t q, std::int64_t p) {
  const RootDatum& datum = *datum_ptr;
  if (p < 2 || q < 2) throw Error(ErrorCode::InvalidArgument, "need p, q >= 2");
  {
    std::int64_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw Error(ErrorCode::InvalidArgument, "q must be a power of p");
  }
  const IntMatrix f0 = twist_on_y(datum);
  const auto reps = twisted_weyl_class_reps(datum);

  struct Found {
    TorusElement rep;
    WeylElement witness;
    std::size_t orbit_size;
  };
  std::vector<std::vector<Found>> per_rep(reps.size());
  parallel_for(reps.size(), [&](std::size_t k) {
    const IntMatrix g = f0 * y_action(reps[k].w);
    std::unordered_set<IntRow, RowHash, RowEqual> visited;
    for (const auto& t : torus_fixed_points(datum, reps[k].w, q)) {
      if (visited.count(visit_key(t.order, t.numerators))) continue;
      const OrbitMinimum m = minimize_impl(datum, t, &visited);
      // rep = t v is fixed by v^-1 g v = F0_Y u_Y.
      const IntMatrix conj = m.from_rep * g * m.to_rep;
      const IntMatrix u = f0.transpose() * conj;
      per_rep[k].push_back({m.rep, WeylElement(u.transpose()), m.orbit_size});
    }
  });

  std::map<TorusElement, Found, TorusLess> unique;
  for (auto& list : per_rep)
    for (auto& f : list) unique.emplace(f.rep, f);

  ClassList out;
  out.datum = datum_ptr;
  out.q = q;
  out.p = p;
  std::vector<Found> found;
  for (auto& [rep, f] : unique) found.push_back(f);
  out.classes.resize(found.size());
  parallel_for(found.size(), [&](std::size_t i) {
    const Found& f = found[i];
    const CentralizerData c = centralizer_data(datum, f.rep, f.witness, q);
    SemisimpleClass& cls = out.classes[i];
    cls.rep = f.rep;
    cls.order = f.rep.order;
    cls.orbit_size = f.orbit_size;
    cls.stab_w = f.witness;
    cls.subsystem = c.subsystem;
    cls.subsystem_type = c.subsystem_type;
    cls.centralizer_type = c.description;
    cls.centralizer_order = c.order;
  });
  std::stable_sort(out.classes.begin(), out.classes.end(), [](const SemisimpleClass& a, const SemisimpleClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return torus_less(a.rep, b.rep);
  });
  out.group_order = out.classes.front().centralizer_order;
  complete_class_maps(out);
  return out;
}

}  // namespace liechar
