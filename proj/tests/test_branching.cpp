#include <gtest/gtest.h>

#include <set>
#include <tuple>
#include <vector>

#include "opq/branching.hpp"
#include "opq/errors.hpp"

using opq::HalfInt;
using opq::OneChar;
using opq::Rep;
using opq::Sign;
using opq::Signature;
using opq::Variant;

namespace {

HalfInt h(const char* text)
{
    return HalfInt::parse(text);
}

Rep rep(Signature sig, Sign s, const char* lambda)
{
    return opq::make_rep(sig, s, h(lambda));
}

opq::InfChar chi(std::initializer_list<const char*> entries)
{
    std::vector<HalfInt> raw;
    for (const char* e : entries) {
        raw.push_back(h(e));
    }
    return opq::canonicalize(raw);
}

// Test-side oracle: the summands of Π|_{H×O(1)} written straight from the
// two decomposition formulas, as (sign, 2μ, n) triples with μ bounded by
// mu_bound.  Uses plain integer arithmetic on doubled parameters.
std::set<std::tuple<Sign, std::int64_t, std::int64_t>> summands(Sign s, std::int64_t twice_lambda,
                                                               std::int64_t twice_mu_bound)
{
    std::set<std::tuple<Sign, std::int64_t, std::int64_t>> out;
    for (std::int64_t n = 0;; ++n) {
        if (s == Sign::plus) {
            // 0 <= n < λ - ½
            if (2 * n >= twice_lambda - 1) {
                break;
            }
            out.emplace(s, twice_lambda - 1 - 2 * n, n);
        } else {
            const std::int64_t twice_mu = twice_lambda + 2 * n + 1;
            if (twice_mu > twice_mu_bound) {
                break;
            }
            out.emplace(s, twice_mu, n);
        }
    }
    return out;
}

const Signature kSig{3, 2};
const Signature kSub{2, 2};

} // namespace

TEST(Multiplicity, Examples)
{
    EXPECT_EQ(opq::multiplicity(rep(kSig, Sign::plus, "5/2"), rep(kSub, Sign::plus, "2")), 1);
    EXPECT_EQ(opq::multiplicity(rep(kSig, Sign::minus, "5/2"), rep(kSub, Sign::minus, "3")), 1);
    EXPECT_EQ(opq::multiplicity(rep(kSig, Sign::plus, "5/2"), rep(kSub, Sign::minus, "3")), 0);
    EXPECT_EQ(opq::multiplicity(rep(kSig, Sign::minus, "5/2"), rep(kSub, Sign::minus, "2")), 0);
}

TEST(Multiplicity, SignatureMismatch)
{
    EXPECT_THROW(opq::multiplicity(rep(kSig, Sign::plus, "5/2"), rep({3, 1}, Sign::plus, "2")),
                 opq::SignatureMismatch);
    EXPECT_THROW(opq::multiplicity(rep(kSig, Sign::plus, "5/2"), rep(kSig, Sign::plus, "5/2")),
                 opq::SignatureMismatch);
}

TEST(Multiplicity, ZeroRepsContributeNothing)
{
    // π^{1,2}_{+,μ} = 0, so O(2,2) ↓ O(1,2) has no + summands.
    const Rep big = rep({2, 2}, Sign::plus, "5");
    const Rep small = rep({1, 2}, Sign::plus, "9/2");
    ASSERT_TRUE(small.is_zero());
    EXPECT_EQ(opq::multiplicity(big, small), 0);
    // q = 1: the - family is zero on both sides.
    EXPECT_EQ(opq::multiplicity(rep({4, 1}, Sign::minus, "5/2"), rep({3, 1}, Sign::minus, "3")), 0);
}

TEST(Multiplicity, WithO1Character)
{
    EXPECT_EQ(opq::multiplicity_with_o1(rep(kSig, Sign::minus, "5/2"), rep(kSub, Sign::minus, "4"),
                                        OneChar::sgn),
              1);
    EXPECT_EQ(opq::multiplicity_with_o1(rep(kSig, Sign::minus, "5/2"), rep(kSub, Sign::minus, "4"),
                                        OneChar::trivial),
              0);
    EXPECT_EQ(opq::multiplicity_with_o1(rep(kSig, Sign::plus, "5/2"), rep(kSub, Sign::plus, "1"),
                                        OneChar::sgn),
              1);
}

TEST(Multiplicity, AgreesWithDecompositionOracle)
{
    for (int p = 2; p <= 7; ++p) {
        for (int q = 1; q <= 6; ++q) {
            const Signature sig{p, q};
            const Signature sub = sig.subgroup();
            for (std::int64_t tl = (sig.dim() % 2 == 0 ? 2 : 1); tl <= 40; tl += 2) {
                for (Sign s : {Sign::plus, Sign::minus}) {
                    const Rep big = opq::make_rep(sig, s, HalfInt::from_twice(tl));
                    auto expected = summands(s, tl, 80);
                    for (std::int64_t tm = (sub.dim() % 2 == 0 ? 2 : 1); tm <= 80; tm += 2) {
                        for (Sign e : {Sign::plus, Sign::minus}) {
                            const Rep small = opq::make_rep(sub, e, HalfInt::from_twice(tm));
                            int oracle = 0;
                            int oracle_sgn = 0;
                            if (!big.is_zero() && !small.is_zero() && e == s) {
                                for (const auto& [es, etm, n] : expected) {
                                    if (etm == tm) {
                                        oracle = 1;
                                        oracle_sgn = n % 2;
                                    }
                                }
                            }
                            const int m = opq::multiplicity(big, small);
                            ASSERT_EQ(m, oracle) << p << "," << q << " " << tl << " " << tm;
                            ASSERT_TRUE(m == 0 || m == 1);
                            if (s != e) {
                                ASSERT_EQ(m, 0);
                            }
                            const int with_sgn = opq::multiplicity_with_o1(big, small, OneChar::sgn);
                            const int with_triv =
                                opq::multiplicity_with_o1(big, small, OneChar::trivial);
                            ASSERT_EQ(with_sgn + with_triv, m);
                            if (m == 1) {
                                ASSERT_EQ(with_sgn, oracle_sgn);
                            }
                            // Parity excludes λ = μ.
                            ASSERT_NE(tl, tm);
                        }
                    }
                }
            }
        }
    }
}

TEST(Spectrum, Examples)
{
    const auto plus = opq::discrete_spectrum(rep(kSig, Sign::plus, "5/2"));
    ASSERT_EQ(plus.entries.size(), 2u);
    EXPECT_EQ(plus.entries[0], (opq::SpectrumEntry{rep(kSub, Sign::plus, "2"), OneChar::trivial, 0}));
    EXPECT_EQ(plus.entries[1], (opq::SpectrumEntry{rep(kSub, Sign::plus, "1"), OneChar::sgn, 1}));
    EXPECT_FALSE(plus.truncated);
    EXPECT_FALSE(plus.zero_omitted);

    EXPECT_TRUE(opq::discrete_spectrum(rep(kSig, Sign::plus, "1/2")).entries.empty());

    const auto minus = opq::discrete_spectrum(rep(kSig, Sign::minus, "5/2"), 3);
    ASSERT_EQ(minus.entries.size(), 3u);
    EXPECT_EQ(minus.entries[0], (opq::SpectrumEntry{rep(kSub, Sign::minus, "3"), OneChar::trivial, 0}));
    EXPECT_EQ(minus.entries[1], (opq::SpectrumEntry{rep(kSub, Sign::minus, "4"), OneChar::sgn, 1}));
    EXPECT_EQ(minus.entries[2], (opq::SpectrumEntry{rep(kSub, Sign::minus, "5"), OneChar::trivial, 2}));
    EXPECT_TRUE(minus.truncated);
    EXPECT_EQ(opq::discrete_spectrum(rep(kSig, Sign::minus, "5/2")).entries.size(),
              opq::kDefaultMaxEntries);
}

TEST(Spectrum, PlusFamilyStructure)
{
    for (int p = 3; p <= 8; ++p) {
        for (int q = 1; q <= 8; ++q) {
            const Signature sig{p, q};
            for (std::int64_t tl = (sig.dim() % 2 == 0 ? 2 : 1); tl <= 50; tl += 2) {
                const Rep big = opq::make_rep(sig, Sign::plus, HalfInt::from_twice(tl));
                const auto s = opq::discrete_spectrum(big);
                // #{n : 0 <= n < λ - ½}
                std::size_t count = 0;
                for (std::int64_t n = 0; 2 * n < tl - 1; ++n) {
                    ++count;
                }
                ASSERT_EQ(s.entries.size(), count);
                ASSERT_FALSE(s.zero_omitted);
                std::set<std::tuple<Sign, HalfInt, OneChar>> seen;
                for (const auto& e : s.entries) {
                    ASSERT_TRUE(seen.emplace(e.rep.sign(), e.rep.lambda(), e.ochar).second);
                    ASSERT_EQ(opq::multiplicity(big, e.rep), 1);
                    ASSERT_EQ(opq::multiplicity_with_o1(big, e.rep, e.ochar), 1);
                }
            }
        }
    }
}

TEST(Spectrum, PEqualsTwoIsEmpty)
{
    for (int q = 1; q <= 6; ++q) {
        const Signature sig{2, q};
        for (std::int64_t tl = (sig.dim() % 2 == 0 ? 2 : 1); tl <= 30; tl += 2) {
            const auto s = opq::discrete_spectrum(opq::make_rep(sig, Sign::plus, HalfInt::from_twice(tl)));
            EXPECT_TRUE(s.entries.empty());
            // λ = ½ has nothing to omit either.
            EXPECT_EQ(s.zero_omitted, tl > 1);
        }
    }
}

TEST(Spectrum, MinusFamilyPreservesRegularity)
{
    for (int p = 2; p <= 8; ++p) {
        for (int q = 2; q <= 8; ++q) {
            const Signature sig{p, q};
            for (HalfInt lambda = opq::regularity_threshold(sig); lambda <= HalfInt(30);
                 lambda += HalfInt(1)) {
                const auto s = opq::discrete_spectrum(opq::make_rep(sig, Sign::minus, lambda), 40);
                ASSERT_EQ(s.entries.size(), 40u);
                for (const auto& e : s.entries) {
                    ASSERT_TRUE(opq::is_regular(e.rep));
                }
            }
        }
    }
}

TEST(Spectrum, PlusFamilyCanLoseRegularity)
{
    // O(4,2) > O(3,2): λ = 2 is regular, but the n = 1 summand π_{+,1/2} is not.
    const auto s = opq::discrete_spectrum(rep({4, 2}, Sign::plus, "2"));
    ASSERT_TRUE(opq::is_regular(rep({4, 2}, Sign::plus, "2")));
    ASSERT_EQ(s.entries.size(), 2u);
    EXPECT_TRUE(opq::is_regular(s.entries[0].rep));
    EXPECT_FALSE(opq::is_regular(s.entries[1].rep));
}

TEST(Interlacing, Examples)
{
    EXPECT_TRUE(opq::interlacing_holds(chi({"5/2", "1/2"}), chi({"2", "0"}), Variant::finite));
    EXPECT_TRUE(opq::interlacing_holds(chi({"5/2", "1/2"}), chi({"3", "0"}), Variant::disc));
    EXPECT_FALSE(opq::interlacing_holds(chi({"5/2", "1/2"}), chi({"2", "0"}), Variant::disc));
    EXPECT_FALSE(opq::interlacing_holds(chi({"5/2", "1/2"}), chi({"3", "0"}), Variant::finite));
}

TEST(Interlacing, Errors)
{
    EXPECT_THROW(opq::interlacing_holds(chi({"5/2", "1/2"}), chi({"2", "1", "0"}), Variant::disc),
                 opq::LengthError);
    EXPECT_THROW(opq::interlacing_holds(chi({"5/2"}), chi({}), Variant::disc), opq::LengthError);
    // Tail must be the fixed string ½ for p+q = 5.
    EXPECT_THROW(opq::interlacing_holds(chi({"5/2", "3/2"}), chi({"2", "0"}), Variant::disc),
                 opq::DomainError);
    EXPECT_THROW(opq::interlacing_holds(chi({"5/2", "1/2"}), chi({"2", "1"}), Variant::disc),
                 opq::DomainError);
}

TEST(Interlacing, NonRegularParametersInsideTheTail)
{
    // p+q = 7: G tail (3/2, 1/2), H tail (1, 0).  λ = 1/2 sits inside the tail.
    const auto g = opq::inf_char(rep({5, 2}, Sign::plus, "1/2"));
    const auto hchar = opq::inf_char(rep({4, 2}, Sign::plus, "5"));
    EXPECT_TRUE(opq::interlacing_holds(g, hchar, Variant::disc) == false);
    EXPECT_FALSE(opq::interlacing_holds(g, hchar, Variant::finite));
}

TEST(Packet, Examples)
{
    EXPECT_EQ(opq::packet_multiplicity(kSig, h("5/2"), h("2")), 1);
    EXPECT_EQ(opq::packet_multiplicity(kSig, h("5/2"), h("3")), 1);
    const auto d = opq::packet_decomposition(kSig, h("5/2"), h("2"));
    EXPECT_EQ(d.counts, (std::array<int, 4>{1, 0, 0, 0}));
    const auto d2 = opq::packet_decomposition(kSig, h("5/2"), h("3"));
    EXPECT_EQ(d2.counts, (std::array<int, 4>{0, 0, 0, 1}));

    EXPECT_EQ(opq::packet_partner(kSig, h("5/2"), h("2")), (opq::PacketPartner{Sign::plus, Sign::plus}));
    EXPECT_EQ(opq::packet_partner(kSig, h("5/2"), h("3")),
              (opq::PacketPartner{Sign::minus, Sign::minus}));
    EXPECT_EQ(opq::packet_partner({4, 2}, h("3"), h("5/2")), (opq::PacketPartner{Sign::plus, Sign::plus}));
    EXPECT_EQ(opq::packet_decomposition({4, 2}, h("3"), h("5/2")).counts,
              (std::array<int, 4>{1, 0, 0, 0}));
}

TEST(Packet, Errors)
{
    EXPECT_THROW(opq::packet_multiplicity({2, 2}, h("1"), h("3/2")), opq::AssumptionError);
    EXPECT_THROW(opq::packet_multiplicity({3, 1}, h("1"), h("3/2")), opq::AssumptionError);
    EXPECT_THROW(opq::packet_partner(kSig, h("1/2"), h("2")), opq::RegularityError);
    EXPECT_THROW(opq::packet_partner(kSig, h("5/2"), h("0")), opq::RangeError);
    EXPECT_THROW(opq::packet_multiplicity(kSig, h("2"), h("2")), opq::ParityError);
}

TEST(Packet, PartnerMatchesDecomposition)
{
    for (int p = 3; p <= 6; ++p) {
        for (int q = 2; q <= 6; ++q) {
            const Signature sig{p, q};
            for (HalfInt lambda : opq::regular_parameters(sig, HalfInt(15))) {
                for (HalfInt mu : opq::regular_parameters(sig.subgroup(), HalfInt(16))) {
                    const auto d = opq::packet_decomposition(sig, lambda, mu);
                    const auto partner = opq::packet_partner(sig, lambda, mu);
                    ASSERT_EQ(d.total(), 1);
                    ASSERT_EQ(d.at(partner.g_member, partner.h_member), 1);
                }
            }
        }
    }
}

TEST(VerifyVersions, Grids)
{
    const auto a = opq::verify_versions(kSig, h("21/2"));
    EXPECT_TRUE(a.passed());
    EXPECT_GT(a.checks, 0u);
    const auto b = opq::verify_versions({4, 3}, h("10"));
    EXPECT_TRUE(b.passed());
    EXPECT_GT(b.checks, 0u);
    const auto c = opq::verify_versions(kSig, h("1/2"));
    EXPECT_TRUE(c.passed());
    EXPECT_EQ(c.checks, 0u);
    EXPECT_THROW(opq::verify_versions({2, 3}, h("5")), opq::AssumptionError);
}

TEST(VerifyVersions, CheckCountIsGridSize)
{
    // (3,2) up to λ = 21/2: λ ∈ {3/2, ..., 21/2} (10 values); μ ∈ {1, ..., 23/2} on
    // integers: {1, ..., 11} (11 values).
    EXPECT_EQ(opq::verify_versions(kSig, h("21/2")).checks, 110u);
}
