// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#ifndef SEMIDEC_ERROR_HPP_
#define SEMIDEC_ERROR_HPP_

#include <cstdint>    // for uint32_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

namespace semidec {

  //! Elements of a semigroup of order n are the indices 0, ..., n - 1.
  using element = std::uint32_t;

  enum class ErrorKind {
    InvalidShape,
    EntryOutOfRange,
    NonAssociative,
    NotIdempotent,
    NotASubsemigroup,
    NotACongruence,
    NotASemilattice,
    OrderTooLargeForExhaustive,
    NotAPrimeCoideal,
    NotASubsemilattice,
    NotASurjection,
    DomainMismatch,
    NotAHomomorphism,
    PreconditionNotMet,
    MalformedTree,
    ParameterOutOfRange,
    OrderTooLarge,
    ClosureTooLarge,
    ParseError,
  };

  char const* to_string(ErrorKind kind) noexcept;

  //! The single exception type thrown by the library.  `details()` carries
  //! the offending elements where there are any: the triple (i, j, k) for
  //! NonAssociative, the cell (i, j) for EntryOutOfRange, the pair (x, y)
  //! for NotACongruence, and so on.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& msg, std::vector<element> details = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
          _kind(kind),
          _details(std::move(details)) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::vector<element> const& details() const noexcept {
      return _details;
    }

   private:
    ErrorKind            _kind;
    std::vector<element> _details;
  };

}  // namespace semidec

#endif  // SEMIDEC_ERROR_HPP_
