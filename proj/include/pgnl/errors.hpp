#ifndef PGNL_ERRORS_HPP
#define PGNL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgnl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations on mathematical inputs (m < 3, bad prime, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed sum expressions and similar textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

// children() called on a node whose truant search found no gap.
class LeafNodeError : public Error {
public:
    using Error::Error;
};

// stable_truant_threshold() needs a finite truant to work from.
class UniversalInputError : public Error {
public:
    using Error::Error;
};

// Tree/scan node budget exhausted.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Oracle enumeration would exceed its work budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

// Oracle densities failed to reach a plateau within budget; signals a bug.
class NonStabilizedError : public Error {
public:
    using Error::Error;
};

// Density request with completed target 0 and no degenerate cutoff: the
// defining sum does not terminate.
class ZeroTargetUnboundedError : public Error {
public:
    using Error::Error;
};

// Odd-prime density formulas take diagonal polynomials only.
class OddPrimeBlocksError : public Error {
public:
    using Error::Error;
};

// Eisenstein intervals require rank >= 5.
class RankTooSmallError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Internal consistency assertion failed (e.g. a density term assembled to an
// irrational value). Always a bug, never a user error.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace pgnl

#endif
