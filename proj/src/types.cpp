#include "liechar/types.hpp"

#include <numeric>
#include <sstream>

namespace liechar {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::TwistIncompatible: return "TwistIncompatible";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingIrreducible: return "MissingIrreducible";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::SingularEquation: return "SingularEquation";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InconsistentPowerMap: return "InconsistentPowerMap";
    case ErrorCode::NoIdentification: return "NoIdentification";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SingularBrauerMatrix: return "SingularBrauerMatrix";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string format_row(const IntRow& row, const char* sep) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    if (i) out << sep;
    out << row[i];
  }
  return out.str();
}

IntRow parse_row(const std::string& text) {
  std::vector<std::int64_t> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "not an integer vector: '" + text + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw Error(ErrorCode::InvalidArgument, "not an integer vector: '" + text + "'");
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "empty vector");
  IntRow row(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) row[static_cast<Eigen::Index>(i)] = values[i];
  return row;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto r : prime_factors(n)) result = result / r * (r - 1);
  return result;
}

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
}

}  // namespace liechar
