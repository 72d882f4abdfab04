#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace appell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's contract (mismatched variables, unbound
/// parameters, bad arguments).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A series or rational function whose constant term is required to be 1
/// was handed something else.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but outside what the library supports
/// (e.g. a non-rational amplitude where a rational one is required).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Raised when the Padé linear system has no solution: the [m|n] table entry
/// is defective. `order()` is the first matching order that cannot be met.
class PadeDefect : public Error {
 public:
  PadeDefect(std::size_t m, std::size_t n, std::size_t order)
      : Error("defective Pade entry [" + std::to_string(m) + "|" +
              std::to_string(n) + "]: matching condition at order " +
              std::to_string(order) + " is unsatisfiable"),
        m_(m),
        n_(n),
        order_(order) {}

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t order_;
};

/// A rational function vanishes in its denominator inside an evaluation grid.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, double abscissa)
      : Error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Floating-point evaluation requested outside a documented validity window.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace appell
