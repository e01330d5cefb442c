#ifndef HAMNODAL_ERRORS_HPP
#define HAMNODAL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamnodal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoordOutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct BadCoordinate : Error { using Error::Error; };
struct BadLevel : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };
struct AlphabetTooSmall : Error { using Error::Error; };
struct ParamsMismatch : Error { using Error::Error; };
struct ScaleGuardExceeded : Error { using Error::Error; };

struct NotAPartition : Error { using Error::Error; };

// Carries the first vertex (in index order) whose neighbor counts deviate.
struct NotEquitable : Error {
  NotEquitable(const std::string& msg, std::uint64_t witness_index)
      : Error(msg), witness(witness_index) {}
  std::uint64_t witness;
};

struct ZeroFunction : Error { using Error::Error; };
struct NotAnEigenfunction : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct ZeroDimension : Error { using Error::Error; };

}  // namespace hamnodal

#endif
