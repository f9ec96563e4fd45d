#pragma once

#include <stdexcept>
#include <string>

namespace opq {

// Base of every error raised by the library.  The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct SignatureError : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct ZeroRepError : Error { using Error::Error; };
struct AssumptionError : Error { using Error::Error; };
struct RegularityError : Error { using Error::Error; };
struct LengthError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ScaleError : Error { using Error::Error; };

} // namespace opq
