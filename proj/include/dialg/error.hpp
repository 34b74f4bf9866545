#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dialg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Terms mixing operation families, or an operation applied outside its signature.
class SignatureError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

// Input that must be multilinear (each variable exactly once per monomial) is not.
class MultilinearityError : public Error {
 public:
  using Error::Error;
};

class MacroError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Largest degree any space computation accepts.
inline constexpr std::size_t kMaxDegree = 6;

inline void require_degree(std::size_t degree, std::size_t cap = kMaxDegree) {
  if (cap > kMaxDegree) cap = kMaxDegree;
  if (degree > cap) {
    throw DegreeError("degree " + std::to_string(degree) + " exceeds the cap of " +
                      std::to_string(cap));
  }
}

}  // namespace dialg
