#ifndef QRAT_ERRORS_HPP
#define QRAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain arguments.
struct InvalidInput : Error {
  using Error::Error;
};

struct PoleAtOne : Error {
  PoleAtOne() : Error("denominator vanishes at q=1") {}
};

struct SingularMatrix : Error {
  std::size_t rank;
  SingularMatrix(std::size_t r, const std::string& hint = {})
      : Error("matrix is rank deficient (rank " + std::to_string(r) + ")" +
              (hint.empty() ? "" : "; " + hint)),
        rank(r) {}
};

struct InconsistentSystem : Error {
  InconsistentSystem() : Error("overdetermined system has no exact solution") {}
};

struct NoInverse : Error {
  using Error::Error;
};

struct InsufficientDepth : Error {
  int max_order;
  InsufficientDepth(int requested, int max)
      : Error("lineage of order " + std::to_string(requested) +
              " unavailable; maximum order is " + std::to_string(max)),
        max_order(max) {}
};

struct DegenerateWeights : Error {
  using Error::Error;
};

struct VanishingLineage : Error {
  VanishingLineage() : Error("lineage is vanishing (first member is an integer)") {}
};

}  // namespace qrat

#endif  // QRAT_ERRORS_HPP
