#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "crosscut/element_set.hpp"

namespace crosscut {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cover/relation data would violate antisymmetry.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// A relation table that is not a partial order.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search was asked to run beyond its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// D(P) and U(P) share a node, so C(P) is undefined.
class NotDisjoint : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

/// A map fails to preserve order; `witness()` is a pair x <= y with f(x) !<= f(y).
class NotMonotone : public Error {
 public:
  NotMonotone(Element x, Element y)
      : Error("map is not order-preserving: " + std::to_string(x) + " <= " + std::to_string(y) +
              " but images are not ordered"),
        witness_(x, y) {}
  std::pair<Element, Element> witness() const { return witness_; }

 private:
  std::pair<Element, Element> witness_;
};

/// Source/target posets of composed maps do not line up.
class Mismatch : public Error {
 public:
  using Error::Error;
};

class NotEndomap : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotACrown : public Error {
 public:
  using Error::Error;
};

class WrongFixture : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace crosscut
