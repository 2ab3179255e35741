#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncomm {

/// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class RingMismatch : public Error {
public:
  using Error::Error;
};

/// Structure constants fail (e_i e_j) e_k = e_i (e_j e_k); carries the triple (1-based).
class NonAssociative : public Error {
public:
  NonAssociative(std::size_t i, std::size_t j, std::size_t k)
      : Error("non-associative product at basis triple (" + std::to_string(i) + ", " +
              std::to_string(j) + ", " + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class BadUnity : public Error {
public:
  using Error::Error;
};

class BadParameter : public Error {
public:
  using Error::Error;
};

class ZeroBeta : public Error {
public:
  using Error::Error;
};

/// Enumeration asked for on a ring with infinitely many elements (modulus 0).
class InfiniteScalar : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class UnknownIdentity : public Error {
public:
  using Error::Error;
};

class UnknownScenario : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace ncomm
