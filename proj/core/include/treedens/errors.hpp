#ifndef TREEDENS_ERRORS_HPP
#define TREEDENS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treedens {

/// Precondition violation: the request is outside the operation's domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data violates a structural invariant (bad encoding, loop, overlap, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed serialized input; carries the byte offset of the offending data.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : ValidationError(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A fixed resource or format limit was exceeded (search guards, graph6 size cap).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; indicates a defect, not bad input.
class InternalDefect : public std::logic_error {
public:
    explicit InternalDefect(const std::string& what) : std::logic_error(what) {}
};

} // namespace treedens

#endif
