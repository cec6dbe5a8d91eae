#ifndef QPD_ERRORS_HPP
#define QPD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qpd {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Amplitude vanished where a derived quantity (phase gradient, quantum
/// potential) is singular or undefined.
class NodeError : public Error {
public:
    explicit NodeError(const std::string& msg) : Error(msg) {}
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Adaptive step size underflowed; the message reports the location.
class StepFailure : public Error {
public:
    explicit StepFailure(const std::string& msg) : Error(msg) {}
};

/// |psi|^2 sampling requested for a non-normalizable state.
class NonNormalizableError : public Error {
public:
    explicit NonNormalizableError(const std::string& msg) : Error(msg) {}
};

/// Malformed scenario text. Carries one entry per offending line.
class ParseError : public Error {
public:
    explicit ParseError(std::vector<std::string> errors)
        : Error(join(errors)), errors_(std::move(errors)) {}
    const std::vector<std::string>& errors() const { return errors_; }

private:
    static std::string join(const std::vector<std::string>& errs) {
        std::string out;
        for (const auto& e : errs) {
            if (!out.empty()) out += "\n";
            out += e;
        }
        return out;
    }
    std::vector<std::string> errors_;
};

/// Well-formed but semantically invalid scenario.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace qpd

#endif
