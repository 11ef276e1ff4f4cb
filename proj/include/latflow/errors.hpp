/* Error hierarchy shared by every latflow component.
 *
 * Two failure families matter to callers:
 *   - PreconditionError: the caller handed us something malformed (bad shape,
 *     unbalanced flow vector, zero input where nonzero is required, ...).
 *   - BudgetError: inputs were fine but an internal search or precision
 *     escalation ran out of its configured budget.  The result would have
 *     been unreliable, so we refuse instead of degrading silently.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace latflow {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or malformed input (CLI maps this to exit code 1).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Internal budget exhausted: enumeration node caps, comparison precision
/// caps, search box limits (CLI maps this to exit code 2).
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

} // namespace latflow
