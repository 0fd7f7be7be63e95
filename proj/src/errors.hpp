#ifndef CWS_ERRORS_HPP
#define CWS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cws {

// Domain errors: well-formed input on which the requested operation is not
// defined (even voter count, incomplete tournament, tied preferences, ...).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Parse errors: the input document or arguments are malformed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace cws

#endif
