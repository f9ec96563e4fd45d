#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "opq/exactnum.hpp"
#include "opq/report.hpp"
#include "opq/repmodel.hpp"

namespace opq {

/// Characters of O(1).
enum class OneChar { trivial, sgn };

/// sgn^n.
constexpr OneChar sgn_power(std::int64_t n) noexcept
{
    return n % 2 == 0 ? OneChar::trivial : OneChar::sgn;
}

std::string_view to_string(OneChar c) noexcept;
OneChar parse_one_char(std::string_view text);

/// A summand π ⊠ sgn^n of the restriction to H × O(1).
struct SpectrumEntry {
    Rep rep;
    OneChar ochar;
    std::int64_t n;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;
    /// Set for the - family: only the first max_entries terms are listed.
    bool truncated = false;
    /// Set when summands that are zero representations were dropped.
    bool zero_omitted = false;
};

inline constexpr std::size_t kDefaultMaxEntries = 16;

/// The index n with μ = λ - ½ - n (+ family) or μ = λ + n + ½ (- family)
/// when π occurs in the discrete spectrum of Π|_H; nullopt otherwise.
/// Throws SignatureMismatch unless small lives on big's subgroup.
std::optional<std::int64_t> branching_index(const Rep& big, const Rep& small);

/// dim Hom_H(π, Π|_H) ∈ {0, 1}.
int multiplicity(const Rep& big, const Rep& small);

/// Multiplicity of π ⊠ chi in the restriction to H × O(1).
int multiplicity_with_o1(const Rep& big, const Rep& small, OneChar chi);

/// Discrete spectrum of Π|_H, enumerated term by term.  The + family has
/// finitely many summands (0 <= n < λ - ½); the - family is infinite and is
/// cut at max_entries.
Spectrum discrete_spectrum(const Rep& big, std::size_t max_entries = kDefaultMaxEntries);

enum class Variant {
    disc,   ///< μ > λ > (p+q-4)/2 > ... , the - family
    finite, ///< λ > μ > (p+q-4)/2 > ... , the + family
};

constexpr Variant variant_for(Sign s) noexcept
{
    return s == Sign::plus ? Variant::finite : Variant::disc;
}

/// Interlacing test between an infinitesimal character of O(p,q) and one of
/// O(p-1,q).  p+q is recovered from the lengths (⌊(p+q)/2⌋ and
/// ⌊(p+q-1)/2⌋), and both tails must be the fixed strings
/// (p+q-4)/2, ..., κ(p+q) resp. (p+q-5)/2, ..., κ(p+q-1); only the leading
/// comparisons are then live.
///
/// Throws LengthError for inconsistent lengths, DomainError for
/// non-canonical input or foreign tails.
bool interlacing_holds(const InfChar& chi_g, const InfChar& chi_h, Variant variant);

/// Multiplicities of π_{ε,μ} in Π_{δ,λ}|_H for (δ,ε) in the order
/// (++, +-, -+, --).
struct PacketDecomposition {
    std::array<int, 4> counts{};

    static constexpr std::size_t index(Sign g, Sign h) noexcept
    {
        return (g == Sign::plus ? 0 : 2) + (h == Sign::plus ? 0 : 1);
    }
    int at(Sign g, Sign h) const noexcept { return counts[index(g, h)]; }
    int total() const noexcept { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

/// Requires assumption_o(sig); throws AssumptionError otherwise.
PacketDecomposition packet_decomposition(Signature sig, HalfInt lambda, HalfInt mu);

/// dim Hom_H(V(μ), U(λ)|_H) with U(λ) = Π_{+,λ} ⊕ Π_{-,λ}, V(μ) likewise.
int packet_multiplicity(Signature sig, HalfInt lambda, HalfInt mu);

struct PacketPartner {
    Sign g_member;
    Sign h_member;

    friend constexpr bool operator==(PacketPartner, PacketPartner) noexcept = default;
};

/// The unique (δ, ε) with nonzero multiplicity.  Requires assumption_o and
/// regular λ, μ (RegularityError otherwise).
PacketPartner packet_partner(Signature sig, HalfInt lambda, HalfInt mu);

/// Exhaustive check, for every regular λ <= lambda_max and regular
/// μ <= mu_max, that multiplicity one and interlacing agree for both
/// families and that the packet multiplicity is exactly one.
BranchingReport verify_versions(Signature sig, HalfInt lambda_max, HalfInt mu_max);

/// mu_max defaults to lambda_max + 1.
BranchingReport verify_versions(Signature sig, HalfInt lambda_max);

/// Regular parameters of the given parity class up to `max` inclusive.
std::vector<HalfInt> regular_parameters(Signature sig, HalfInt max);

} // namespace opq
