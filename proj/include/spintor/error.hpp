// Error types shared across the library.

#ifndef SPINTOR_ERROR_HPP_
#define SPINTOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace spintor {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A monomial matrix whose nonzero entries are neither all in {1,-1} nor all
// in {i,-i}.  Never raised for generator representations.
struct MixedTypeError : Error {
  explicit MixedTypeError(const std::string& msg) : Error(msg) {}
};

// A permutation that lacks the recursive two-block structure of a generator
// representation's shape, so no switch decomposition exists.
struct ShapeStructureError : Error {
  explicit ShapeStructureError(const std::string& msg) : Error(msg) {}
};

// A requested translation constant that is not in the image of w -> A.w - w.
struct NotTranslationConstantError : Error {
  explicit NotTranslationConstantError(const std::string& msg) : Error(msg) {}
};

// An enumeration whose size exceeds the configured cap.  Callers fall back to
// sampling or to the proven counting formulas; nothing is truncated silently.
struct CapExceededError : Error {
  explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

} // namespace spintor

#endif // SPINTOR_ERROR_HPP_
