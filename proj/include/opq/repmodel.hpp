#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "opq/exactnum.hpp"

namespace opq {

/// Signature (p, q) of the quadratic form; the group is O(p, q).
struct Signature {
    int p = 0;
    int q = 0;

    constexpr int dim() const noexcept { return p + q; }

    /// Signature of the subgroup O(p-1, q).
    constexpr Signature subgroup() const noexcept { return {p - 1, q}; }

    /// The standing hypothesis for the packet theorems: p >= 3 and q >= 2.
    constexpr bool assumption_o() const noexcept { return p >= 3 && q >= 2; }

    friend constexpr bool operator==(Signature, Signature) noexcept = default;
};

std::string to_string(Signature sig);

enum class Sign { plus, minus };

constexpr Sign opposite(Sign s) noexcept
{
    return s == Sign::plus ? Sign::minus : Sign::plus;
}

char to_char(Sign s) noexcept;

/// Parses "+" or "-".
Sign parse_sign(std::string_view text);

/// Parity class of the parameter: λ ∈ ℤ + ½·dim.
bool has_parity(HalfInt value, int dim) noexcept;

/// A member Π^{p,q}_{δ,λ} of the family of irreducible unitary
/// representations of O(p, q) occurring in L²(O(p,q)/O(p-1,q)), or of the
/// mirror family for δ = -.  The same type models the subgroup
/// representations π^{p-1,q}_{ε,μ}; only the signature differs.
///
/// The + family on ℝ^p is zero for p = 1; the - family is zero for q = 1.
class Rep {
public:
    /// Validates and builds a representation.  Throws SignatureError for
    /// p < 1 or q < 0, ParityError when λ ∉ ℤ + ½(p+q), RangeError for λ <= 0.
    static Rep make(Signature sig, Sign sign, HalfInt lambda);

    Signature sig() const noexcept { return sig_; }
    Sign sign() const noexcept { return sign_; }
    HalfInt lambda() const noexcept { return lambda_; }
    bool is_zero() const noexcept { return zero_; }

    friend bool operator==(const Rep&, const Rep&) noexcept = default;

private:
    Rep(Signature sig, Sign sign, HalfInt lambda, bool zero)
        : sig_(sig), sign_(sign), lambda_(lambda), zero_(zero)
    {
    }

    Signature sig_;
    Sign sign_;
    HalfInt lambda_;
    bool zero_;
};

inline Rep make_rep(Signature sig, Sign sign, HalfInt lambda)
{
    return Rep::make(sig, sign, lambda);
}

/// ½(p+q-2): parameters at or above this are regular.
HalfInt regularity_threshold(Signature sig);

bool is_regular(const Rep& r);

/// 0 for n even, ½ for n odd.
HalfInt kappa(int n);

/// Harish-Chandra parameter in canonical form: non-negative entries sorted
/// non-increasingly, i.e. the orbit representative under signed permutations.
class InfChar {
public:
    InfChar() = default;

    const std::vector<HalfInt>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    HalfInt operator[](std::size_t i) const { return entries_[i]; }

    /// True if `raw` is already the orbit representative.
    static bool is_canonical(std::span<const HalfInt> raw);

    friend bool operator==(const InfChar&, const InfChar&) = default;

private:
    friend InfChar canonicalize(std::span<const HalfInt> raw);

    std::vector<HalfInt> entries_;
};

InfChar canonicalize(std::span<const HalfInt> raw);

/// (d-4)/2, (d-6)/2, ..., κ(d): the fixed tail shared by every member of the
/// family on a form of dimension d = p+q; it has ⌊d/2⌋ - 1 entries.
std::vector<HalfInt> inf_char_tail(int dim);

/// (λ, (p+q-4)/2, ..., κ(p+q)) in canonical form.  Throws ZeroRepError for
/// zero representations.
InfChar inf_char(const Rep& r);

/// ((p+q-2)/2, (p+q-4)/2, ..., κ(p+q)).  Requires p+q >= 2.
InfChar trivial_inf_char(Signature sig);

/// O(p)×O(q)-type ℋ^a(ℝ^p) ⊠ ℋ^b(ℝ^q); degree 0 is the trivial factor.
struct KType {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr bool operator==(KType, KType) noexcept = default;
};

KType minimal_k_type(const Rep& r);

/// dim ℋ^b(ℝ^n) = C(n+b-1, b) - C(n+b-3, b-2); zero for b < 0.
std::uint64_t harmonic_dim(int n, std::int64_t b);

/// The pair {Π_{+,λ}, Π_{-,λ}} on a common signature.
struct Packet {
    Rep plus;
    Rep minus;

    static Packet make(Signature sig, HalfInt lambda)
    {
        return {Rep::make(sig, Sign::plus, lambda), Rep::make(sig, Sign::minus, lambda)};
    }

    Signature sig() const noexcept { return plus.sig(); }
    HalfInt lambda() const noexcept { return plus.lambda(); }
    const Rep& member(Sign s) const noexcept { return s == Sign::plus ? plus : minus; }
};

} // namespace opq
