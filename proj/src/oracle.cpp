#include "opq/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "opq/errors.hpp"
#include "opq/repmodel.hpp"

namespace opq {

CompactRep CompactRep::make(int p, std::int64_t ell)
{
    if (p < 3 || ell < 0) {
        throw RangeError("compact representation needs p >= 3 and ell >= 0, got p = " +
                         std::to_string(p) + ", ell = " + std::to_string(ell));
    }
    return {p, ell};
}

std::vector<std::int64_t> classical_branching(const CompactRep& r)
{
    // Highest weight (ℓ, 0, ..., 0) of SO(p); a subgroup weight (m, m2, ...)
    // interlaces iff ℓ >= m >= 0 >= m2 ..., and the trailing zeros force
    // m2 = ... = 0.
    std::vector<std::int64_t> out;
    const std::int64_t next = 0;
    for (std::int64_t m = 0; m <= r.ell; ++m) {
        if (r.ell >= m && m >= next) {
            out.push_back(m);
        }
    }
    return out;
}

namespace {

using Monomial = std::vector<int>;

void monomials_rec(int vars, int degree, Monomial& current, std::vector<Monomial>& out)
{
    if (static_cast<int>(current.size()) == vars - 1) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current.push_back(e);
        monomials_rec(vars, degree - e, current, out);
        current.pop_back();
    }
}

std::vector<Monomial> monomials(int vars, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0) {
        return out;
    }
    Monomial current;
    monomials_rec(vars, degree, current, out);
    return out;
}

} // namespace

std::size_t exact_rank(std::vector<std::vector<std::int64_t>> rows)
{
    using boost::multiprecision::cpp_int;
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<cpp_int>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw LengthError("ragged matrix");
        }
        a.emplace_back(row.begin(), row.end());
    }

    // Bareiss: after each pivot step every entry is a minor of the input, and
    // the division by the previous pivot is exact.
    cpp_int prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == a.size()) {
            continue;
        }
        std::swap(a[pivot], a[rank]);
        const cpp_int& pv = a[rank][col];
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            const cpp_int factor = a[r][col];
            for (std::size_t c = col + 1; c < cols; ++c) {
                a[r][c] = (pv * a[r][c] - factor * a[rank][c]) / prev_pivot;
            }
            a[r][col] = 0;
        }
        prev_pivot = pv;
        ++rank;
    }
    return rank;
}

std::uint64_t brute_force_harmonic_dim(int n, int b)
{
    if (n < 1 || n > kBruteForceMaxVars || b < 0 || b > kBruteForceMaxDegree) {
        throw ScaleError("brute-force harmonic dimension limited to 1 <= n <= " +
                         std::to_string(kBruteForceMaxVars) + ", 0 <= b <= " +
                         std::to_string(kBruteForceMaxDegree));
    }
    const std::vector<Monomial> source = monomials(n, b);
    const std::vector<Monomial> target = monomials(n, b - 2);
    if (target.empty()) {
        return source.size();
    }
    std::map<Monomial, std::size_t> target_index;
    for (std::size_t i = 0; i < target.size(); ++i) {
        target_index.emplace(target[i], i);
    }

    // Column j is Δ applied to the j-th source monomial:
    // Δ x^α = Σ_i α_i (α_i - 1) x^(α - 2 e_i).
    std::vector<std::vector<std::int64_t>> laplacian(
        target.size(), std::vector<std::int64_t>(source.size(), 0));
    for (std::size_t j = 0; j < source.size(); ++j) {
        for (int i = 0; i < n; ++i) {
            const int e = source[j][i];
            if (e < 2) {
                continue;
            }
            Monomial image = source[j];
            image[i] -= 2;
            laplacian[target_index.at(image)][j] += static_cast<std::int64_t>(e) * (e - 1);
        }
    }
    return source.size() - exact_rank(std::move(laplacian));
}

BranchingReport compact_consistency(int p, HalfInt lambda_max)
{
    if (p < 3 || p > 10) {
        throw RangeError("compact consistency needs 3 <= p <= 10, got p = " + std::to_string(p));
    }
    BranchingReport report;
    report.grid = Json{{"p", p}, {"lambda_max", lambda_max.to_string()}};

    const HalfInt rho = HalfInt::from_twice(p);         // p/2
    const HalfInt rho_sub = HalfInt::from_twice(p - 1); // (p-1)/2
    for (HalfInt lambda = rho; lambda <= lambda_max; lambda += HalfInt(1)) {
        const std::int64_t ell = (lambda - rho).integer();
        ++report.checks;
        const Json params{{"p", p}, {"lambda", lambda.to_string()}, {"ell", ell}};

        std::vector<std::int64_t> from_spectrum;
        for (std::int64_t n = 0;; ++n) {
            const HalfInt mu = lambda - kHalf - HalfInt(n);
            if (mu < rho_sub) {
                break;
            }
            const HalfInt m = mu - rho_sub;
            if (!m.is_integer()) {
                report.failures.push_back({"compact_index_map", params, "integral m",
                                           m.to_string()});
                break;
            }
            from_spectrum.push_back(m.integer());
        }
        std::sort(from_spectrum.begin(), from_spectrum.end());

        const std::vector<std::int64_t> classical = classical_branching(CompactRep::make(p, ell));
        if (from_spectrum != classical) {
            auto render = [](const std::vector<std::int64_t>& v) {
                std::string s = "{";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    s += (i ? "," : "") + std::to_string(v[i]);
                }
                return s + "}";
            };
            report.failures.push_back(
                {"compact_bijection", params, render(classical), render(from_spectrum)});
        }

        std::uint64_t restricted = 0;
        for (std::int64_t m : classical) {
            restricted += harmonic_dim(p - 1, m);
        }
        const std::uint64_t whole = harmonic_dim(p, ell);
        if (whole != restricted) {
            report.failures.push_back({"compact_dimension", params, std::to_string(whole),
                                       std::to_string(restricted)});
        }
    }
    return report;
}

} // namespace opq
