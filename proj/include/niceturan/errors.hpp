#ifndef NICETURAN_ERRORS_HPP
#define NICETURAN_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace niceturan
{
    /// A count left the range of Count. Never wrapped silently.
    class OverflowError : public std::overflow_error
    {
    public:
        using std::overflow_error::overflow_error;
    };

    /// A request exceeded a configured resource limit (vertex caps, search sizes).
    class GuardError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed textual input: graph6, pattern notation, objectives.
    class ParseError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// An internal consistency check failed. Indicates a bug, not bad input.
    class InternalError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    inline auto checked_add(std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        std::uint64_t r = 0;
        if (__builtin_add_overflow(a, b, &r))
            throw OverflowError("count exceeds 64-bit range");
        return r;
    }

    inline auto checked_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        std::uint64_t r = 0;
        if (__builtin_mul_overflow(a, b, &r))
            throw OverflowError("count exceeds 64-bit range");
        return r;
    }

    // Binomial coefficient with overflow detection.
    inline auto checked_binomial(std::int64_t n, std::int64_t k) -> std::uint64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        if (k > n - k)
            k = n - k;
        unsigned __int128 r = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
            if (r > UINT64_MAX)
                throw OverflowError("binomial coefficient exceeds 64-bit range");
        }
        return static_cast<std::uint64_t>(r);
    }
}

#endif
