#ifndef CLUSTERCAT_ERRORS_HPP
#define CLUSTERCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clustercat {

// Domain errors carry a stable code so the CLI can report "<Code>: <detail>"
// and exit 1. Usage errors (bad flags, malformed input) exit 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define CLUSTERCAT_DEFINE_ERROR(Name)                                     \
    class Name : public DomainError {                                     \
    public:                                                               \
        explicit Name(const std::string& what) : DomainError(#Name, what) {} \
    }

CLUSTERCAT_DEFINE_ERROR(NoReduction);
CLUSTERCAT_DEFINE_ERROR(KnittingDiverged);
CLUSTERCAT_DEFINE_ERROR(NegativeHammock);
CLUSTERCAT_DEFINE_ERROR(NegativeExt);
CLUSTERCAT_DEFINE_ERROR(NoStabilization);
CLUSTERCAT_DEFINE_ERROR(SizeViolation);
CLUSTERCAT_DEFINE_ERROR(CountViolation);
CLUSTERCAT_DEFINE_ERROR(PreconditionViolated);
CLUSTERCAT_DEFINE_ERROR(RotationNotFound);
CLUSTERCAT_DEFINE_ERROR(LaurentViolation);
CLUSTERCAT_DEFINE_ERROR(BudgetExceeded);

#undef CLUSTERCAT_DEFINE_ERROR

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace clustercat

#endif
