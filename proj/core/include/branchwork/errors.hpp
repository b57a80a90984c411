#pragma once

#include <stdexcept>
#include <string>

namespace branchwork {

// Raised when an exact computation fails to clear to an integer or produces
// a negative multiplicity. Always indicates a bug, never valid output.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

// Raised when a guaranteed-existence check comes back empty.
class theorem_violation : public std::logic_error {
public:
    explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

// File or stream failure outside the caller's control.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace branchwork
