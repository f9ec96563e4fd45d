#include "opq/exactnum.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "opq/errors.hpp"

namespace opq {

void throw_overflow(const char* what)
{
    throw OverflowError(std::string("integer overflow in ") + what);
}

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole)
{
    std::int64_t value = 0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    if (!digits.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw OverflowError("half-integer out of range: '" + std::string(whole) + "'");
    }
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError("not a half-integer: '" + std::string(whole) +
                         "' (expected \"a\" or \"a/2\")");
    }
    return value;
}

} // namespace

HalfInt HalfInt::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return HalfInt(parse_int(text, text));
    }
    if (text.substr(slash + 1) != "2") {
        throw ParseError("not a half-integer: '" + std::string(text) +
                         "' (denominator must be 2)");
    }
    const std::int64_t numerator = parse_int(text.substr(0, slash), text);
    if (numerator % 2 == 0) {
        throw ParseError("non-canonical half-integer: '" + std::string(text) +
                         "' (use the integer form)");
    }
    return from_twice(numerator);
}

HalfInt HalfInt::abs() const
{
    if (twice_ == std::numeric_limits<std::int64_t>::min()) {
        throw_overflow("HalfInt::abs");
    }
    return from_twice(twice_ < 0 ? -twice_ : twice_);
}

std::string HalfInt::to_string() const
{
    if (is_integer()) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

HalfInt operator+(HalfInt a, HalfInt b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a.twice_, b.twice_, &out)) {
        throw_overflow("HalfInt addition");
    }
    return HalfInt::from_twice(out);
}

HalfInt operator-(HalfInt a, HalfInt b)
{
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a.twice_, b.twice_, &out)) {
        throw_overflow("HalfInt subtraction");
    }
    return HalfInt::from_twice(out);
}

HalfInt operator-(HalfInt a)
{
    return HalfInt() - a;
}

Ordering compare(HalfInt a, HalfInt b) noexcept
{
    if (a < b) {
        return Ordering::less;
    }
    return a == b ? Ordering::equal : Ordering::greater;
}

std::ostream& operator<<(std::ostream& os, HalfInt h)
{
    return os << h.to_string();
}

std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // result * (n - i) stays below 2^127, and the running value is always
    // C(n, i + 1), so exact division is safe.
    unsigned __int128 result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result = result * static_cast<unsigned __int128>(n - i) /
                 static_cast<unsigned __int128>(i + 1);
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw_overflow("binomial");
        }
    }
    return static_cast<std::uint64_t>(result);
}

} // namespace opq
