#include <complex>
#include <random>

#include "doctest.h"
#include "liechar/cyclotomic.hpp"
#include "liechar/linalg.hpp"

using namespace liechar;

namespace {

// Numerical embedding zeta_n -> exp(2 pi i / n); independent of the
// reduction code.
std::complex<double> numeric(const Cyclotomic& x) {
  std::complex<double> s = 0;
  const double n = static_cast<double>(x.conductor());
  for (auto& [k, c] : x.terms())
    s += static_cast<double>(c) * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / n);
  return s;
}

Cyclotomic random_element(std::mt19937_64& rng) {
  static const std::int64_t conductors[] = {1, 3, 4, 5, 8, 12, 15, 20, 24};
  std::uniform_int_distribution<int> pick(0, 8), coeff(-3, 3), den(1, 3);
  const std::int64_t n = conductors[pick(rng)];
  std::map<std::int64_t, Rational> terms;
  for (std::int64_t k = 0; k < n; ++k)
    if (coeff(rng) > 1) terms[k] = Rational(coeff(rng), den(rng));
  return Cyclotomic::from_terms(n, terms);
}

}  // namespace

TEST_CASE("canonical forms") {
  CHECK(Cyclotomic::root_of_unity(2).is_rational());
  CHECK(Cyclotomic::root_of_unity(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(6).conductor() == 3);
  CHECK(Cyclotomic::root_of_unity(4).conductor() == 4);
  auto z4 = Cyclotomic::root_of_unity(4);
  CHECK(z4 + z4.galois(3) == Cyclotomic(0));
  CHECK(z4 * z4 == Cyclotomic(-1));
  // sqrt(5) lives in Q(zeta_5) and nowhere smaller.
  auto z5 = Cyclotomic::root_of_unity(5);
  auto sqrt5 = 1 + 2 * (z5 + z5.galois(4));
  CHECK(sqrt5 * sqrt5 == Cyclotomic(5));
  CHECK(sqrt5.conductor() == 5);
  // zeta_8 + zeta_8^7 = sqrt 2, conductor 8.
  auto z8 = Cyclotomic::root_of_unity(8);
  auto sqrt2 = z8 + z8.galois(7);
  CHECK(sqrt2.conductor() == 8);
  CHECK(sqrt2 * sqrt2 == Cyclotomic(2));
  // zeta_12 + zeta_12^11 = sqrt 3 has conductor 12.
  auto z12 = Cyclotomic::root_of_unity(12);
  CHECK((z12 + z12.galois(11)).conductor() == 12);
  // zeta_15^5 = zeta_3.
  CHECK(Cyclotomic::root_of_unity(15, 5) == Cyclotomic::root_of_unity(3));
  CHECK(Cyclotomic::root_of_unity(9, 3) == Cyclotomic::root_of_unity(3));
}

TEST_CASE("sum of all n-th roots of unity vanishes") {
  for (std::int64_t n = 2; n <= 24; ++n) {
    Cyclotomic s = 0;
    for (std::int64_t k = 0; k < n; ++k) s += Cyclotomic::root_of_unity(n, k);
    CHECK(s.is_zero());
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 1);
    CHECK(Cyclotomic::from_exponent_counts(n, counts).is_zero());
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 500; ++k) {
    auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9);
    CHECK(std::abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    // Normalization is idempotent.
    CHECK(Cyclotomic::from_terms(a.conductor(), a.terms()) == a);
    auto lifted = std::map<std::int64_t, Rational>();
    for (auto& [e, x] : a.terms()) lifted[e * 7] = x;
    CHECK(Cyclotomic::from_terms(a.conductor() * 7, lifted) == a);
  }
}

TEST_CASE("Galois action") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    auto a = random_element(rng), b = random_element(rng);
    CHECK(a.galois(1) == a);
    const std::int64_t g = 120 * 7 + 1;  // coprime to every conductor used
    CHECK((a * b).galois(g) == a.galois(g) * b.galois(g));
    CHECK(std::abs(numeric(a.conjugate()) - std::conj(numeric(a))) < 1e-9);
  }
  CHECK(Cyclotomic(Rational(3, 2)).galois(6) == Cyclotomic(Rational(3, 2)));
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(4).galois(2), Error);
}

TEST_CASE("text form") {
  CHECK(Cyclotomic(0).to_text() == "0");
  CHECK(Cyclotomic(Rational(-3, 2)).to_text() == "-3/2");
  auto z = Cyclotomic::root_of_unity(3);
  CHECK(z.to_text() == "z(3)^1");
  CHECK((2 - 3 * z).to_text() == "2 - 3*z(3)^1");
  CHECK(z.galois(2).to_text() == "-1 - z(3)^1");
}

TEST_CASE("reduction modulo a prime") {
  const std::int64_t ell = 61;  // 60 = lcm(3, 4, 5) * 1
  const std::int64_t w = root_of_unity_mod(ell, 60);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    std::uniform_int_distribution<int> pick(0, 3);
    const std::int64_t ns[] = {1, 3, 4, 5};
    std::int64_t n1 = ns[pick(rng)], n2 = ns[pick(rng)];
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::map<std::int64_t, Rational> t1, t2;
    for (std::int64_t e = 0; e < n1; ++e) t1[e] = coeff(rng);
    for (std::int64_t e = 0; e < n2; ++e) t2[e] = coeff(rng);
    auto a = Cyclotomic::from_terms(n1, t1), b = Cyclotomic::from_terms(n2, t2);
    auto red = [&](const Cyclotomic& x) { return x.reduce_mod(ell, 60, w); };
    CHECK(red(a * b) == (red(a) * red(b)) % ell);
    CHECK(red(a + b) == (red(a) + red(b)) % ell);
  }
}

TEST_CASE("cyclotomic matrices through Eigen") {
  CycMatrix m(2, 2);
  auto z = Cyclotomic::root_of_unity(3);
  m << 1, z, z.galois(2), 1;
  CHECK(exact_rank(m) == 1);
  m(1, 1) = 2;
  CHECK(exact_rank(m) == 2);
}
