#pragma once

#include <stdexcept>
#include <string>

namespace ward {

// Base class for all domain errors raised by the library. `code()` is a
// stable machine-readable tag (the CLI maps it into its error JSON).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

// Malformed textual input (fraction strings, series JSON, CLI payloads).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

// Multiplicative inversion of a series with zero constant term.
class ZeroConstantTerm : public Error {
public:
  explicit ZeroConstantTerm(const std::string& what)
      : Error("ZeroConstantTerm", what) {}
};

// Composition f(g) where g has a nonzero constant term.
class NonzeroInnerConstant : public Error {
public:
  explicit NonzeroInnerConstant(const std::string& what)
      : Error("NonzeroInnerConstant", what) {}
};

// Operator power series applied around an operator that does not certify a
// strictly positive order shift.
class NotContractive : public Error {
public:
  explicit NotContractive(const std::string& what)
      : Error("NotContractive", what) {}
};

// Affine solver given an operator that may expand distances.
class NotNonExpansive : public Error {
public:
  explicit NotNonExpansive(const std::string& what)
      : Error("NotNonExpansive", what) {}
};

// A candidate h-series violates h_0 = 0 or h_n != 0; `witness` is the
// offending index.
class InvalidH : public Error {
public:
  InvalidH(int witness, const std::string& what)
      : Error("InvalidH", what), witness_(witness) {}

  int witness() const noexcept { return witness_; }

private:
  int witness_;
};

// The requested output truncation cannot be fully determined from the
// truncations of the inputs.
class PrecisionExhausted : public Error {
public:
  explicit PrecisionExhausted(const std::string& what)
      : Error("PrecisionExhausted", what) {}
};

// The characteristic polynomial does not factor into rational roots (and no
// valid factorization was supplied).
class RootsDontFactor : public Error {
public:
  explicit RootsDontFactor(const std::string& what)
      : Error("RootsDontFactor", what) {}
};

// A lower hypergeometric parameter hits a zero Pochhammer factor inside the
// requested truncation window.
class PochhammerPole : public Error {
public:
  PochhammerPole(int parameter_index, int at_k, const std::string& what)
      : Error("PochhammerPole", what),
        parameter_index_(parameter_index),
        at_k_(at_k) {}

  int parameter_index() const noexcept { return parameter_index_; }
  int at_k() const noexcept { return at_k_; }

private:
  int parameter_index_;
  int at_k_;
};

// Catch-all for structurally invalid arguments (bad family parameters,
// size mismatches, Lipschitz class incompatible with the equation order).
class InvalidParameter : public Error {
public:
  explicit InvalidParameter(const std::string& what)
      : Error("InvalidParameter", what) {}
};

}  // namespace ward
