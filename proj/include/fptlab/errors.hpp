#ifndef FPTLAB_ERRORS_HPP
#define FPTLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fptlab {

// Syntax error in polynomial or rational text, with the byte offset of the
// offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(std::move(message) + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Invariant check that survives NDEBUG. A failure means the mathematics was
// violated (inconsistent oracle, broken lemma identity), never bad user input.
inline void internal_check(bool condition, const char* message)
{
    if (!condition)
        throw std::logic_error(std::string("internal invariant violated: ") + message);
}

} // namespace fptlab

#endif
