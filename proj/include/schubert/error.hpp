#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (permutations, pillar sets, option values).
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// A matrix violating the rank-matrix axioms, or whose dots do not form a
/// permutation.
class InvalidRankMatrix : public Error {
 public:
  using Error::Error;
};

/// A set of entries that is not the pillar set of any permutation.
class InvalidPillarSet : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A computation whose size exceeds the configured budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace schubert
