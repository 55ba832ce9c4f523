#pragma once

#include <stdexcept>
#include <string>

namespace tchordal {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error { public: using Error::Error; };
class DigonError : public Error { public: using Error::Error; };
class VertexOutOfRangeError : public Error { public: using Error::Error; };
class InvalidParameterError : public Error { public: using Error::Error; };
class SizeCapExceededError : public Error { public: using Error::Error; };
class NotIndependentError : public Error { public: using Error::Error; };
class BudgetExceededError : public Error { public: using Error::Error; };
class UncoloredVertexError : public Error { public: using Error::Error; };
class TooManyVariablesError : public Error { public: using Error::Error; };
class NotSatisfyingError : public Error { public: using Error::Error; };
class NotALongCycleError : public Error { public: using Error::Error; };
class ClauseTooLargeError : public Error { public: using Error::Error; };

// Failure in one of the text formats; carries the offending line number.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace tchordal
