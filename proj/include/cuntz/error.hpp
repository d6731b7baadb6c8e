#pragma once

#include <stdexcept>
#include <string>

namespace cuntz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Thrown when a level expansion would produce more monomials than the
/// configured cap (see `expansion_limit()`).
class ExpansionLimitExceeded : public Error {
 public:
  ExpansionLimitExceeded(std::size_t projected, std::size_t cap)
      : Error("expansion would produce " + std::to_string(projected) +
              " monomials (cap " + std::to_string(cap) + ")"),
        projected_(projected),
        cap_(cap) {}

  std::size_t projected() const noexcept { return projected_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t projected_;
  std::size_t cap_;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class InvalidEndo : public Error {
 public:
  using Error::Error;
};

}  // namespace cuntz
