#include "opq/branching.hpp"

#include <string>

#include "opq/errors.hpp"

namespace opq {

std::string_view to_string(OneChar c) noexcept
{
    return c == OneChar::trivial ? "trivial" : "sgn";
}

OneChar parse_one_char(std::string_view text)
{
    if (text == "trivial") {
        return OneChar::trivial;
    }
    if (text == "sgn") {
        return OneChar::sgn;
    }
    throw ParseError("O(1) character must be 'trivial' or 'sgn', got '" + std::string(text) + "'");
}

std::optional<std::int64_t> branching_index(const Rep& big, const Rep& small)
{
    if (small.sig() != big.sig().subgroup()) {
        throw SignatureMismatch("subgroup representation lives on " + to_string(small.sig()) +
                                ", expected " + to_string(big.sig().subgroup()));
    }
    if (big.is_zero() || small.is_zero() || big.sign() != small.sign()) {
        return std::nullopt;
    }
    const HalfInt lambda = big.lambda();
    const HalfInt mu = small.lambda();
    // Parity makes λ - μ ∈ ℤ + ½, so the offsets below are integral.
    if (big.sign() == Sign::minus) {
        if (mu <= lambda) {
            return std::nullopt;
        }
        return (mu - lambda - kHalf).integer();
    }
    if (mu >= lambda) {
        return std::nullopt;
    }
    // μ > 0 is guaranteed by Rep, which is exactly n < λ - ½.
    return (lambda - kHalf - mu).integer();
}

int multiplicity(const Rep& big, const Rep& small)
{
    return branching_index(big, small).has_value() ? 1 : 0;
}

int multiplicity_with_o1(const Rep& big, const Rep& small, OneChar chi)
{
    const auto n = branching_index(big, small);
    return n && sgn_power(*n) == chi ? 1 : 0;
}

Spectrum discrete_spectrum(const Rep& big, std::size_t max_entries)
{
    Spectrum out;
    if (big.is_zero()) {
        return out;
    }
    const Signature sub = big.sig().subgroup();
    const HalfInt lambda = big.lambda();
    if (big.sign() == Sign::plus) {
        for (std::int64_t n = 0; HalfInt(n) < lambda - kHalf; ++n) {
            const Rep small = Rep::make(sub, Sign::plus, lambda - kHalf - HalfInt(n));
            if (small.is_zero()) {
                out.zero_omitted = true;
                continue;
            }
            out.entries.push_back({small, sgn_power(n), n});
        }
        return out;
    }
    for (std::size_t n = 0; n < max_entries; ++n) {
        const auto index = static_cast<std::int64_t>(n);
        const Rep small = Rep::make(sub, Sign::minus, lambda + HalfInt(index) + kHalf);
        if (small.is_zero()) {
            out.zero_omitted = true;
            continue;
        }
        out.entries.push_back({small, sgn_power(index), index});
    }
    out.truncated = true;
    return out;
}

namespace {

// Removes the fixed tail from a canonical tuple and returns the remaining
// (leading) parameter.  Both sequences are sorted non-increasingly, so this
// is a single merge pass.
HalfInt leading_parameter(const InfChar& chi, int dim, const char* side)
{
    const std::vector<HalfInt> tail = inf_char_tail(dim);
    if (!InfChar::is_canonical(chi.entries())) {
        throw DomainError(std::string(side) + " infinitesimal character is not canonical");
    }
    std::optional<HalfInt> leftover;
    std::size_t t = 0;
    for (HalfInt entry : chi.entries()) {
        if (t < tail.size() && entry == tail[t]) {
            ++t;
        } else if (!leftover) {
            leftover = entry;
        } else {
            break;
        }
    }
    if (t != tail.size() || !leftover) {
        throw DomainError(std::string(side) +
                          " infinitesimal character does not carry the expected tail for p+q = " +
                          std::to_string(dim));
    }
    return *leftover;
}

} // namespace

bool interlacing_holds(const InfChar& chi_g, const InfChar& chi_h, Variant variant)
{
    const std::size_t m = chi_g.size();
    const std::size_t n = chi_h.size();
    int dim = 0;
    if (m == n + 1) {
        dim = static_cast<int>(2 * m);
    } else if (m == n) {
        dim = static_cast<int>(2 * m + 1);
    } else {
        throw LengthError("infinitesimal character lengths " + std::to_string(m) + " and " +
                          std::to_string(n) + " do not belong to O(p,q) > O(p-1,q)");
    }
    if (n == 0) {
        throw LengthError("subgroup infinitesimal character is empty");
    }
    const HalfInt lambda = leading_parameter(chi_g, dim, "group");
    const HalfInt mu = leading_parameter(chi_h, dim - 1, "subgroup");
    const HalfInt tail_top = HalfInt::from_twice(dim - 4);
    const HalfInt zero(0);
    if (variant == Variant::disc) {
        return mu > lambda && lambda > tail_top && lambda > zero;
    }
    return lambda > mu && mu > tail_top && mu > zero;
}

namespace {

void require_assumption_o(Signature sig)
{
    if (!sig.assumption_o()) {
        throw AssumptionError("signature " + to_string(sig) + " violates p >= 3 and q >= 2");
    }
}

} // namespace

PacketDecomposition packet_decomposition(Signature sig, HalfInt lambda, HalfInt mu)
{
    require_assumption_o(sig);
    const Packet big = Packet::make(sig, lambda);
    const Packet small = Packet::make(sig.subgroup(), mu);
    PacketDecomposition out;
    for (Sign g : {Sign::plus, Sign::minus}) {
        for (Sign h : {Sign::plus, Sign::minus}) {
            out.counts[PacketDecomposition::index(g, h)] =
                multiplicity(big.member(g), small.member(h));
        }
    }
    return out;
}

int packet_multiplicity(Signature sig, HalfInt lambda, HalfInt mu)
{
    return packet_decomposition(sig, lambda, mu).total();
}

PacketPartner packet_partner(Signature sig, HalfInt lambda, HalfInt mu)
{
    require_assumption_o(sig);
    const Rep g = Rep::make(sig, Sign::plus, lambda);
    const Rep h = Rep::make(sig.subgroup(), Sign::plus, mu);
    if (!is_regular(g) || !is_regular(h)) {
        throw RegularityError("packet partner needs regular parameters, got lambda = " +
                              lambda.to_string() + ", mu = " + mu.to_string());
    }
    // λ ≠ μ by parity; the side of the dichotomy picks the family.
    const Sign s = lambda > mu ? Sign::plus : Sign::minus;
    return {s, s};
}

std::vector<HalfInt> regular_parameters(Signature sig, HalfInt max)
{
    std::vector<HalfInt> out;
    for (HalfInt x = regularity_threshold(sig); x <= max; x += HalfInt(1)) {
        if (x > HalfInt(0)) {
            out.push_back(x);
        }
    }
    return out;
}

BranchingReport verify_versions(Signature sig, HalfInt lambda_max, HalfInt mu_max)
{
    require_assumption_o(sig);
    BranchingReport report;
    report.grid = Json{{"p", sig.p},
                       {"q", sig.q},
                       {"lambda_max", lambda_max.to_string()},
                       {"mu_max", mu_max.to_string()}};

    const Signature sub = sig.subgroup();
    for (HalfInt lambda : regular_parameters(sig, lambda_max)) {
        for (HalfInt mu : regular_parameters(sub, mu_max)) {
            ++report.checks;
            const Json params{{"p", sig.p},
                              {"q", sig.q},
                              {"lambda", lambda.to_string()},
                              {"mu", mu.to_string()}};
            for (Sign s : {Sign::plus, Sign::minus}) {
                const Rep big = Rep::make(sig, s, lambda);
                const Rep small = Rep::make(sub, s, mu);
                const bool occurs = multiplicity(big, small) == 1;
                const bool interlaces =
                    interlacing_holds(inf_char(big), inf_char(small), variant_for(s));
                if (occurs != interlaces) {
                    report.failures.push_back(
                        {std::string("version_equivalence") + to_char(s), params,
                         interlaces ? "multiplicity 1" : "multiplicity 0",
                         occurs ? "multiplicity 1" : "multiplicity 0"});
                }
            }
            const int total = packet_multiplicity(sig, lambda, mu);
            if (total != 1) {
                report.failures.push_back(
                    {"packet_multiplicity", params, "1", std::to_string(total)});
            }
        }
    }
    return report;
}

BranchingReport verify_versions(Signature sig, HalfInt lambda_max)
{
    return verify_versions(sig, lambda_max, lambda_max + HalfInt(1));
}

} // namespace opq
