#ifndef FILTRA_ERROR_HPP
#define FILTRA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace filtra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text. position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A formula mentions an atom that is not declared.
class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(std::string atom)
      : Error("unknown atom '" + atom + "'"), atom_(std::move(atom)) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// A size budget (atoms, points, enumeration limit) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Two values built over different universes were combined.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

// A constructor or precondition found a broken structural invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace filtra

#endif  // FILTRA_ERROR_HPP
