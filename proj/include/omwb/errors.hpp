// Error taxonomy shared by the whole library.
//
// Three failure families matter to callers (and map to distinct CLI exit
// codes): malformed input, a refusal to start work that would blow past the
// configured enumeration bounds, and a certified-impossible situation where a
// search that is guaranteed to succeed came back empty.  Everything else is a
// plain logic_error (an internal invariant broke).
#pragma once

#include <stdexcept>
#include <string>

namespace omwb {

// Input bytes/values do not satisfy a documented format or precondition.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// The request is well-formed but exceeds an explicit enumeration bound.
// Work is refused up front; nothing is silently truncated.
class refusal_error : public std::runtime_error {
public:
    explicit refusal_error(const std::string& what) : std::runtime_error(what) {}
};

// A search whose success is mathematically guaranteed failed, or a
// certificate failed re-verification.  Either the input broke a stated
// hypothesis in an undetected way or there is a bug; both are reportable
// events, never silently swallowed.
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace omwb
