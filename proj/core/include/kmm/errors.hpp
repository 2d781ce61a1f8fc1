#ifndef KMM_ERRORS_HPP
#define KMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kmm {

/// Rejected input: dimension mismatch, malformed certificate, schema
/// violation, ill-sorted term.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource cap was exceeded (oracle dimension, recursion
/// depth, quantifier enumeration). Never a silent approximation.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A construction whose output is validated against its contract could
/// not produce a conforming result (e.g. a translated certificate that
/// fails its invariant, or a repair loop that ran out of exchanges).
class construction_failure : public std::runtime_error {
public:
    explicit construction_failure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kmm

#endif
