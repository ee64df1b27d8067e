#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlat {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// Inverse requested for a scalar that is not of the form c * s^k.
class UnsupportedInverse : public Error {
  public:
    using Error::Error;
};

// Exact q-number requested where the quotient is not a Laurent polynomial.
class NonPolynomial : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

// Rewriting exceeded its step budget (or a scan exceeded its size guard).
class Diverged : public Error {
  public:
    using Error::Error;
};

class NumericalFailure : public Error {
  public:
    using Error::Error;
};

class SingularLimit : public Error {
  public:
    using Error::Error;
};

class DecompositionFailure : public Error {
  public:
    using Error::Error;
};

class InsufficientRange : public Error {
  public:
    using Error::Error;
};

class IntegrationFailure : public Error {
  public:
    IntegrationFailure(const std::string &what, double t, double x, double p)
        : Error(what), t_(t), x_(x), p_(p) {}
    double last_t() const noexcept { return t_; }
    double last_x() const noexcept { return x_; }
    double last_p() const noexcept { return p_; }

  private:
    double t_, x_, p_;
};

} // namespace qlat
