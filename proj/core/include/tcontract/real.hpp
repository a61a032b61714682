#pragma once

#include <cfloat>
#include <stdexcept>
#include <string>

namespace tcontract {

/// Scalar type for points, distances and ratios.
///
/// Extended precision keeps distance ratios on near-diagonal pairs resolvable
/// to ~1e-12; with plain double the rounding of map outputs alone exceeds that.
using Real = long double;

inline constexpr Real kEpsilon = LDBL_EPSILON;

/// Two points closer than this are treated as the same point.
inline constexpr Real kDistinctTolerance = 1e-12L;

/// Slack used for exact comparisons on finite spaces.
inline constexpr Real kFiniteSlack = 1e-12L;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input structure (e.g. a non-square distance matrix).
class StructuralError : public Error {
  public:
    using Error::Error;
};

/// A point or a map image fell outside the declared domain.
class DomainError : public Error {
  public:
    DomainError(const std::string& what, Real point)
        : Error(what), point_(point) {}
    Real point() const noexcept { return point_; }

  private:
    Real point_;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Configuration or expression text that failed to parse. Line and column are
/// 1-based; zero means unknown.
class ConfigError : public Error {
  public:
    ConfigError(const std::string& message, int line, int column)
        : Error(format(message, line, column)), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

  private:
    static std::string format(const std::string& message, int line, int column) {
        if (line <= 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
               message;
    }
    int line_;
    int column_;
};

}  // namespace tcontract
