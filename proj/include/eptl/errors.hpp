#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eptl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleError : Error { using Error::Error; };
struct UnknownIdError : Error { using Error::Error; };
struct DuplicateIdError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct UnboundVariableError : Error { using Error::Error; };
struct EmptyDomainError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct BoundError : Error { using Error::Error; };
struct UnsupportedOperatorError : Error { using Error::Error; };
struct TraceError : Error { using Error::Error; };

/// Formula text rejected by the parser. Carries the byte offset of the bad
/// token and the token classes that would have been accepted there.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t position, std::vector<std::string> expected)
        : Error(std::move(message)), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

} // namespace eptl
