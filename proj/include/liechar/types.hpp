#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace liechar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Row-vector convention: weights and torus elements are rows, group
// elements act by right multiplication (x -> x * M).
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntRow = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatRow = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

enum class ErrorCode {
  NotFiniteType,
  TwistIncompatible,
  GroupTooLarge,
  NotDominant,
  DimensionMismatch,
  MissingIrreducible,
  NegativeMultiplicity,
  WrongType,
  SingularEquation,
  NotStabilized,
  BadOrder,
  NotCoprime,
  SchemaError,
  InconsistentPowerMap,
  NoIdentification,
  CapExceeded,
  SingularBrauerMatrix,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Domain error raised by every module. The code names the failure kind,
/// the message carries the offending data.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

std::string format_row(const IntRow& row, const char* sep = ",");
IntRow parse_row(const std::string& text);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::vector<std::int64_t> prime_factors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

}  // namespace liechar

namespace liechar {

struct RowHash {
  std::size_t operator()(const IntRow& row) const noexcept {
    std::size_t h = static_cast<std::size_t>(row.size());
    for (Eigen::Index i = 0; i < row.size(); ++i)
      h ^= std::hash<std::int64_t>{}(row[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct RowEqual {
  bool operator()(const IntRow& a, const IntRow& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

/// Lexicographic order on integer coordinate vectors, shared by every
/// module that picks a "minimal" element.
struct LexLess {
  bool operator()(const IntRow& a, const IntRow& b) const noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

struct MatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.size());
    for (Eigen::Index i = 0; i < m.size(); ++i)
      h ^= std::hash<std::int64_t>{}(m.data()[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct MatrixEqual {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const noexcept {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  }
};

inline bool is_dominant(const IntRow& w) { return (w.array() >= 0).all(); }

inline bool is_restricted(const IntRow& w, std::int64_t bound) {
  return is_dominant(w) && (w.array() < bound).all();
}

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace liechar
