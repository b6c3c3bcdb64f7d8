#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

// Base of every domain error raised by the engine. The CLI maps these to
// exit code 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("ValidationError", what) {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error("NotDivisible", what) {}
};

class HasDoublePoints : public Error {
 public:
  explicit HasDoublePoints(const std::string& what) : Error("HasDoublePoints", what) {}
};

class NotADoublePoint : public Error {
 public:
  explicit NotADoublePoint(const std::string& what) : Error("NotADoublePoint", what) {}
};

class NotACrossing : public Error {
 public:
  explicit NotACrossing(const std::string& what) : Error("NotACrossing", what) {}
};

class InapplicableMove : public Error {
 public:
  explicit InapplicableMove(const std::string& what) : Error("InapplicableMove", what) {}
};

class NotALoop : public Error {
 public:
  explicit NotALoop(const std::string& what) : Error("NotALoop", what) {}
};

class IndMismatch : public Error {
 public:
  explicit IndMismatch(const std::string& what) : Error("IndMismatch", what) {}
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& what) : Error("UnknownName", what) {}
};

}  // namespace skein
