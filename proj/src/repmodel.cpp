#include "opq/repmodel.hpp"

#include <algorithm>
#include <functional>

#include "opq/errors.hpp"

namespace opq {

std::string to_string(Signature sig)
{
    return "(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

char to_char(Sign s) noexcept
{
    return s == Sign::plus ? '+' : '-';
}

Sign parse_sign(std::string_view text)
{
    if (text == "+") {
        return Sign::plus;
    }
    if (text == "-") {
        return Sign::minus;
    }
    throw ParseError("sign must be '+' or '-', got '" + std::string(text) + "'");
}

bool has_parity(HalfInt value, int dim) noexcept
{
    // λ - dim/2 ∈ ℤ  <=>  2λ ≡ dim (mod 2)
    return ((value.twice() - dim) % 2) == 0;
}

Rep Rep::make(Signature sig, Sign sign, HalfInt lambda)
{
    if (sig.p < 1 || sig.q < 0) {
        throw SignatureError("invalid signature " + to_string(sig) + ": need p >= 1, q >= 0");
    }
    if (!has_parity(lambda, sig.dim())) {
        throw ParityError("lambda = " + lambda.to_string() + " is not in Z + (p+q)/2 for " +
                          to_string(sig));
    }
    if (lambda <= HalfInt(0)) {
        throw RangeError("lambda = " + lambda.to_string() + " must be positive");
    }
    const bool zero = sign == Sign::plus ? sig.p == 1 : sig.q == 1;
    return Rep(sig, sign, lambda, zero);
}

HalfInt regularity_threshold(Signature sig)
{
    return HalfInt::from_twice(sig.dim() - 2);
}

bool is_regular(const Rep& r)
{
    return r.lambda() >= regularity_threshold(r.sig());
}

HalfInt kappa(int n)
{
    return n % 2 == 0 ? HalfInt(0) : kHalf;
}

bool InfChar::is_canonical(std::span<const HalfInt> raw)
{
    return std::all_of(raw.begin(), raw.end(), [](HalfInt h) { return h >= HalfInt(0); }) &&
           std::is_sorted(raw.begin(), raw.end(), std::greater<>{});
}

InfChar canonicalize(std::span<const HalfInt> raw)
{
    InfChar out;
    out.entries_.reserve(raw.size());
    for (HalfInt h : raw) {
        out.entries_.push_back(h.abs());
    }
    std::sort(out.entries_.begin(), out.entries_.end(), std::greater<>{});
    return out;
}

std::vector<HalfInt> inf_char_tail(int dim)
{
    std::vector<HalfInt> tail;
    const int length = dim / 2;
    for (int i = 1; i < length; ++i) {
        tail.push_back(HalfInt::from_twice(dim - 2 - 2 * i));
    }
    return tail;
}

InfChar inf_char(const Rep& r)
{
    if (r.is_zero()) {
        throw ZeroRepError("zero representation has no infinitesimal character");
    }
    const int dim = r.sig().dim();
    if (dim < 2) {
        throw DomainError("infinitesimal character needs p+q >= 2");
    }
    std::vector<HalfInt> raw{r.lambda()};
    for (HalfInt h : inf_char_tail(dim)) {
        raw.push_back(h);
    }
    return canonicalize(raw);
}

InfChar trivial_inf_char(Signature sig)
{
    if (sig.dim() < 2) {
        throw DomainError("trivial infinitesimal character needs p+q >= 2");
    }
    std::vector<HalfInt> raw{regularity_threshold(sig)};
    for (HalfInt h : inf_char_tail(sig.dim())) {
        raw.push_back(h);
    }
    return canonicalize(raw);
}

KType minimal_k_type(const Rep& r)
{
    if (r.is_zero()) {
        throw ZeroRepError("zero representation has no minimal K-type");
    }
    const auto [p, q] = r.sig();
    if (r.sign() == Sign::plus) {
        // b(λ) = λ - ½(p-q-2); integral by the parity condition
        const HalfInt degree = r.lambda() - HalfInt::from_twice(p - q - 2);
        return degree >= HalfInt(0) ? KType{degree.integer(), 0} : KType{};
    }
    const HalfInt degree = r.lambda() - HalfInt::from_twice(q - p - 2);
    return degree >= HalfInt(0) ? KType{0, degree.integer()} : KType{};
}

std::uint64_t harmonic_dim(int n, std::int64_t b)
{
    if (n < 1) {
        throw DomainError("harmonic_dim needs n >= 1");
    }
    if (b < 0) {
        return 0;
    }
    return binomial(n + b - 1, b) - binomial(n + b - 3, b - 2);
}

} // namespace opq
