#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace opq {

[[noreturn]] void throw_overflow(const char* what);

/// An exact element of ½ℤ, stored as twice its value.
///
/// All arithmetic is checked: results that leave the 64-bit range of the
/// stored numerator raise OverflowError instead of wrapping.
class HalfInt {
public:
    constexpr HalfInt() noexcept = default;
    constexpr HalfInt(std::int64_t integer) : twice_(checked_double(integer)) {}

    static constexpr HalfInt from_twice(std::int64_t twice) noexcept
    {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    /// Parses "a" (integer) or "a/2" (odd numerator).
    static HalfInt parse(std::string_view text);

    constexpr std::int64_t twice() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

    /// Integer value; only meaningful when is_integer().
    constexpr std::int64_t integer() const noexcept { return twice_ / 2; }

    HalfInt abs() const;

    /// "a" when integral, "a/2" otherwise.
    std::string to_string() const;

    friend HalfInt operator+(HalfInt a, HalfInt b);
    friend HalfInt operator-(HalfInt a, HalfInt b);
    friend HalfInt operator-(HalfInt a);
    HalfInt& operator+=(HalfInt other) { return *this = *this + other; }
    HalfInt& operator-=(HalfInt other) { return *this = *this - other; }

    friend constexpr bool operator==(HalfInt, HalfInt) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) noexcept
    {
        return a.twice_ <=> b.twice_;
    }

private:
    static constexpr std::int64_t checked_double(std::int64_t v);

    std::int64_t twice_ = 0;
};

constexpr std::int64_t HalfInt::checked_double(std::int64_t v)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(v, std::int64_t{2}, &out)) {
        throw_overflow("HalfInt construction");
    }
    return out;
}

/// ½ as a constant; handy for the many "λ − ½" offsets.
inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

enum class Ordering { less, equal, greater };

Ordering compare(HalfInt a, HalfInt b) noexcept;

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// C(n, k) with the convention C(n, k) = 0 for k < 0, k > n or n < 0.
/// Throws OverflowError when the result does not fit in 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

} // namespace opq
