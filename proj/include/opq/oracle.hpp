#pragma once

#include <cstdint>
#include <vector>

#include "opq/exactnum.hpp"
#include "opq/report.hpp"

namespace opq {

/// The SO(p) representation with one-row highest weight (ℓ, 0, ..., 0).
struct CompactRep {
    int p = 3;
    std::int64_t ell = 0;

    /// Throws RangeError unless p >= 3 and ell >= 0.
    static CompactRep make(int p, std::int64_t ell);
};

/// First entries m of the SO(p-1) highest weights (m, 0, ..., 0) occurring in
/// the restriction, from the Gelfand-Tsetlin interlacing ℓ >= m >= 0.
/// Sorted ascending.
std::vector<std::int64_t> classical_branching(const CompactRep& r);

/// Largest n (number of variables) and degree accepted by the brute-force
/// harmonic dimension.
inline constexpr int kBruteForceMaxVars = 6;
inline constexpr int kBruteForceMaxDegree = 6;

/// dim ker(Δ : P_b(ℝ^n) → P_{b-2}(ℝ^n)) from the exact rank of the
/// Laplacian on the monomial basis.  Throws ScaleError outside
/// 1 <= n <= 6, 0 <= b <= 6.
std::uint64_t brute_force_harmonic_dim(int n, int b);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t exact_rank(std::vector<std::vector<std::int64_t>> rows);

/// For every λ ∈ ℤ + p/2 with p/2 <= λ <= lambda_max (ℓ = λ - p/2), checks
/// that {μ = λ - ½ - n : μ >= (p-1)/2} maps onto classical_branching(p, ℓ)
/// under m = μ - (p-1)/2, and that dim ℋ^ℓ(ℝ^p) = Σ_m dim ℋ^m(ℝ^{p-1}).
/// Requires 3 <= p <= 10 (RangeError otherwise).
BranchingReport compact_consistency(int p, HalfInt lambda_max);

} // namespace opq
