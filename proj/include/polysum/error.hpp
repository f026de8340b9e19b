#pragma once

#include <stdexcept>
#include <string>

namespace polysum {

// Every library failure derives from Error so the CLI can map it to an exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct InvalidInstance : Error { using Error::Error; };
struct GenericityViolation : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ContractError : Error { using Error::Error; };
struct ConstructionFailure : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(const std::string& msg, int line_no)
        : Error(msg), line(line_no) {}
    int line;
};

}  // namespace polysum
