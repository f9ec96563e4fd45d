#include "opq/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "opq/branching.hpp"
#include "opq/errors.hpp"
#include "opq/oracle.hpp"
#include "opq/render.hpp"

namespace opq::cli {
namespace {

enum class Output { json, table };

// An error tied to a specific flag; reported as "error: <flag>: <message>".
struct FlagError : Error {
    FlagError(const std::string& flag, const std::string& message)
        : Error(flag + ": " + message)
    {
    }
};

template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const FlagError&) {
        throw;
    } catch (const Error& e) {
        throw FlagError(flag, e.what());
    }
}

HalfInt half_int_flag(const std::string& flag, const std::string& text)
{
    return with_flag(flag, [&] { return HalfInt::parse(text); });
}

Sign sign_flag(const std::string& flag, const std::string& text)
{
    return with_flag(flag, [&] { return parse_sign(text); });
}

struct IntRange {
    int first = 0;
    int last = 0;
};

IntRange range_flag(const std::string& flag, const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw FlagError(flag, "expected an inclusive range A..B, got '" + text + "'");
    }
    auto parse_part = [&](const std::string& part) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != part.size()) {
            throw FlagError(flag, "expected an inclusive range A..B, got '" + text + "'");
        }
        return value;
    };
    IntRange r{parse_part(text.substr(0, dots)), parse_part(text.substr(dots + 2))};
    if (r.first > r.last) {
        throw FlagError(flag, "empty range '" + text + "'");
    }
    return r;
}

std::string range_text(IntRange r)
{
    return std::to_string(r.first) + ".." + std::to_string(r.last);
}

// Minimal aligned table: first row is the header.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i]))
                << row[i];
        }
        out << '\n';
    }
}

std::string text(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void print_report_table(std::ostream& out, const BranchingReport& report)
{
    std::vector<std::vector<std::string>> rows{{"key", "value"}};
    for (const auto& [key, value] : report.grid.items()) {
        rows.push_back({key, text(value)});
    }
    rows.push_back({"checks", std::to_string(report.checks)});
    rows.push_back({"failures", std::to_string(report.failures.size())});
    print_table(out, rows);
    if (!report.failures.empty()) {
        out << '\n';
        std::vector<std::vector<std::string>> frows{{"check", "params", "expected", "got"}};
        for (const auto& f : report.failures) {
            frows.push_back({f.check, f.params.dump(), f.expected, f.got});
        }
        print_table(out, frows);
    }
}

struct Options {
    int p = 0;
    int q = 0;
    std::string sign;
    std::string big_sign;
    std::string small_sign;
    std::string lambda;
    std::string mu;
    std::optional<std::string> ochar;
    std::size_t max_entries = kDefaultMaxEntries;
    std::string p_range;
    std::string q_range;
    std::string lambda_max;
    int p_max = 0;
    std::int64_t ell_max = 0;
    std::string a;
    std::string b;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t ell = 0;
    bool brute_force = false;
    std::string entries;
    std::string g_entries;
    std::string h_entries;
    std::string variant;
    Output output = Output::json;
};

Signature signature(const Options& o)
{
    return {o.p, o.q};
}

int cmd_rep_info(const Options& o, std::ostream& out)
{
    const HalfInt lambda = half_int_flag("--lambda", o.lambda);
    const Sign sign = sign_flag("--sign", o.sign);
    const Rep r = with_flag("--lambda", [&] { return Rep::make(signature(o), sign, lambda); });
    const Json j = to_json(r);
    if (o.output == Output::json) {
        out << j.dump() << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows{{"key", "value"}};
    for (const auto& [key, value] : j.items()) {
        rows.push_back({key, text(value)});
    }
    print_table(out, rows);
    return 0;
}

int cmd_branch_mult(const Options& o, std::ostream& out)
{
    const HalfInt lambda = half_int_flag("--lambda", o.lambda);
    const HalfInt mu = half_int_flag("--mu", o.mu);
    const Sign big_sign = sign_flag("--big-sign", o.big_sign);
    const Sign small_sign = sign_flag("--small-sign", o.small_sign);
    const Signature sig = signature(o);
    const Rep big = with_flag("--lambda", [&] { return Rep::make(sig, big_sign, lambda); });
    const Rep small =
        with_flag("--mu", [&] { return Rep::make(sig.subgroup(), small_sign, mu); });
    int m = 0;
    if (o.ochar) {
        const OneChar chi = with_flag("--ochar", [&] { return parse_one_char(*o.ochar); });
        m = multiplicity_with_o1(big, small, chi);
    } else {
        m = multiplicity(big, small);
    }
    if (o.output == Output::json) {
        out << Json{{"multiplicity", m}}.dump() << '\n';
    } else {
        print_table(out, {{"key", "value"}, {"multiplicity", std::to_string(m)}});
    }
    return 0;
}

int cmd_branch_spectrum(const Options& o, std::ostream& out)
{
    const HalfInt lambda = half_int_flag("--lambda", o.lambda);
    const Sign sign = sign_flag("--sign", o.sign);
    const Rep big = with_flag("--lambda", [&] { return Rep::make(signature(o), sign, lambda); });
    const Spectrum s = discrete_spectrum(big, o.max_entries);
    if (o.output == Output::json) {
        out << to_json(s).dump() << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows{{"n", "sign", "mu", "ochar"}};
    for (const auto& e : s.entries) {
        rows.push_back({std::to_string(e.n), std::string(1, to_char(e.rep.sign())),
                        e.rep.lambda().to_string(), std::string(to_string(e.ochar))});
    }
    print_table(out, rows);
    out << "truncated: " << (s.truncated ? "yes" : "no")
        << ", zero summands omitted: " << (s.zero_omitted ? "yes" : "no") << '\n';
    return 0;
}

int cmd_packet_verify(const Options& o, std::ostream& out)
{
    const HalfInt lambda = half_int_flag("--lambda", o.lambda);
    const HalfInt mu = half_int_flag("--mu", o.mu);
    const Signature sig = signature(o);
    with_flag("--lambda", [&] { return Packet::make(sig, lambda); });
    with_flag("--mu", [&] { return Packet::make(sig.subgroup(), mu); });
    const PacketDecomposition d = packet_decomposition(sig, lambda, mu);

    std::optional<PacketPartner> witness;
    if (d.total() == 1) {
        for (Sign g : {Sign::plus, Sign::minus}) {
            for (Sign h : {Sign::plus, Sign::minus}) {
                if (d.at(g, h) == 1) {
                    witness = PacketPartner{g, h};
                }
            }
        }
    }

    static constexpr const char* kPairs[] = {"++", "+-", "-+", "--"};
    if (o.output == Output::json) {
        Json j;
        j["p"] = sig.p;
        j["q"] = sig.q;
        j["lambda"] = lambda.to_string();
        j["mu"] = mu.to_string();
        j["multiplicity"] = d.total();
        Json decomposition;
        for (std::size_t i = 0; i < 4; ++i) {
            decomposition[kPairs[i]] = d.counts[i];
        }
        j["decomposition"] = std::move(decomposition);
        if (witness) {
            j["witness"] = Json{{"g_member", std::string(1, to_char(witness->g_member))},
                                {"h_member", std::string(1, to_char(witness->h_member))}};
        } else {
            j["witness"] = nullptr;
        }
        out << j.dump() << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows{{"pair", "multiplicity"}};
    for (std::size_t i = 0; i < 4; ++i) {
        rows.push_back({kPairs[i], std::to_string(d.counts[i])});
    }
    rows.push_back({"total", std::to_string(d.total())});
    print_table(out, rows);
    return 0;
}

int emit_report(const BranchingReport& report, Output output, std::ostream& out)
{
    if (output == Output::json) {
        out << to_json(report).dump() << '\n';
    } else {
        print_report_table(out, report);
    }
    return report.passed() ? 0 : 1;
}

int cmd_sweep_versions(const Options& o, std::ostream& out)
{
    const IntRange ps = range_flag("--p-range", o.p_range);
    const IntRange qs = range_flag("--q-range", o.q_range);
    const HalfInt lambda_max = half_int_flag("--lambda-max", o.lambda_max);
    if (!Signature{ps.first, qs.first}.assumption_o()) {
        throw FlagError(ps.first < 3 ? "--p-range" : "--q-range",
                        "sweeps need p >= 3 and q >= 2");
    }
    const HalfInt mu_max = lambda_max + HalfInt(1);
    BranchingReport merged;
    merged.grid = Json{{"p_range", range_text(ps)},
                       {"q_range", range_text(qs)},
                       {"lambda_max", lambda_max.to_string()},
                       {"mu_max", mu_max.to_string()}};
    for (int p = ps.first; p <= ps.last; ++p) {
        for (int q = qs.first; q <= qs.last; ++q) {
            merged.merge(verify_versions({p, q}, lambda_max, mu_max));
        }
    }
    return emit_report(merged, o.output, out);
}

int cmd_oracle_compact(const Options& o, std::ostream& out)
{
    if (o.p_max < 3 || o.p_max > 10) {
        throw FlagError("--p-max", "must lie in 3..10");
    }
    if (o.ell_max < 0) {
        throw FlagError("--ell-max", "must be non-negative");
    }
    BranchingReport merged;
    merged.grid = Json{{"p_range", range_text({3, o.p_max})}, {"ell_max", o.ell_max}};
    for (int p = 3; p <= o.p_max; ++p) {
        merged.merge(compact_consistency(p, HalfInt(o.ell_max) + HalfInt::from_twice(p)));
    }
    return emit_report(merged, o.output, out);
}

std::vector<HalfInt> list_flag(const std::string& flag, const std::string& text)
{
    std::vector<HalfInt> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(half_int_flag(flag, text.substr(start, comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

// Single-value results share one shape: {"<key>": value}.
int emit_value(const std::string& key, Json value, Output output, std::ostream& out)
{
    if (output == Output::json) {
        out << Json{{key, value}}.dump() << '\n';
    } else {
        print_table(out, {{"key", "value"}, {key, text(value)}});
    }
    return 0;
}

int cmd_calc_half(const Options& o, std::ostream& out)
{
    const HalfInt a = half_int_flag("--a", o.a);
    const HalfInt b = half_int_flag("--b", o.b);
    static constexpr const char* kOrder[] = {"LT", "EQ", "GT"};
    Json j;
    j["sum"] = (a + b).to_string();
    j["difference"] = (a - b).to_string();
    j["compare"] = kOrder[static_cast<int>(compare(a, b))];
    j["difference_integral"] = (a - b).is_integer();
    if (o.output == Output::json) {
        out << j.dump() << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows{{"key", "value"}};
    for (const auto& [key, value] : j.items()) {
        rows.push_back({key, text(value)});
    }
    print_table(out, rows);
    return 0;
}

int cmd_calc_harmonic_dim(const Options& o, std::ostream& out)
{
    if (o.n < 1) {
        throw FlagError("--n", "must be at least 1");
    }
    const int n = static_cast<int>(o.n);
    const std::uint64_t d = o.brute_force
                                ? with_flag("--b", [&] {
                                      return brute_force_harmonic_dim(n, static_cast<int>(o.k));
                                  })
                                : harmonic_dim(n, o.k);
    return emit_value("harmonic_dim", d, o.output, out);
}

int cmd_calc_interlace(const Options& o, std::ostream& out)
{
    const InfChar g = canonicalize(list_flag("--g-char", o.g_entries));
    const InfChar h = canonicalize(list_flag("--h-char", o.h_entries));
    Variant v = Variant::disc;
    if (o.variant == "finite") {
        v = Variant::finite;
    } else if (o.variant != "disc") {
        throw FlagError("--variant", "must be 'disc' or 'finite'");
    }
    return emit_value("interlacing", interlacing_holds(g, h, v), o.output, out);
}

int cmd_oracle_classical(const Options& o, std::ostream& out)
{
    const CompactRep r = with_flag("--p", [&] { return CompactRep::make(o.p, o.ell); });
    return emit_value("subgroup_weights", classical_branching(r), o.output, out);
}

void add_output_flag(CLI::App* app, Options& o)
{
    const std::map<std::string, Output> names{{"json", Output::json}, {"table", Output::table}};
    app->add_option("--output", o.output, "output format: json (stable) or table")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

void add_signature(CLI::App* app, Options& o)
{
    app->add_option("--p", o.p, "p in the signature (p,q)")->required();
    app->add_option("--q", o.q, "q in the signature (p,q)")->required();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Branching laws for O(p,q) restricted to O(p-1,q)", "opq"};
    app.require_subcommand(1);

    auto* rep = app.add_subcommand("rep", "inspect a representation")->require_subcommand(1);
    auto* rep_info = rep->add_subcommand("info", "parameters, infinitesimal character, minimal K-type");
    add_signature(rep_info, o);
    rep_info->add_option("--sign", o.sign, "+ or -")->required();
    rep_info->add_option("--lambda", o.lambda, "parameter, e.g. 5/2")->required();
    add_output_flag(rep_info, o);

    auto* branch = app.add_subcommand("branch", "branching to O(p-1,q)")->require_subcommand(1);
    auto* mult = branch->add_subcommand("mult", "multiplicity of a subgroup representation");
    add_signature(mult, o);
    mult->add_option("--big-sign", o.big_sign, "sign of the O(p,q) representation")->required();
    mult->add_option("--lambda", o.lambda, "O(p,q) parameter")->required();
    mult->add_option("--small-sign", o.small_sign, "sign of the O(p-1,q) representation")
        ->required();
    mult->add_option("--mu", o.mu, "O(p-1,q) parameter")->required();
    mult->add_option("--ochar", o.ochar, "O(1) character: trivial or sgn");
    add_output_flag(mult, o);

    auto* spectrum = branch->add_subcommand("spectrum", "discrete spectrum of the restriction");
    add_signature(spectrum, o);
    spectrum->add_option("--sign", o.sign, "+ or -")->required();
    spectrum->add_option("--lambda", o.lambda, "parameter")->required();
    spectrum->add_option("--max-entries", o.max_entries, "terms listed for the infinite sum")
        ->capture_default_str();
    add_output_flag(spectrum, o);

    auto* packet = app.add_subcommand("packet", "packet-level statements")->require_subcommand(1);
    auto* verify = packet->add_subcommand("verify", "packet multiplicity and witness pair");
    add_signature(verify, o);
    verify->add_option("--lambda", o.lambda, "O(p,q) parameter")->required();
    verify->add_option("--mu", o.mu, "O(p-1,q) parameter")->required();
    add_output_flag(verify, o);

    auto* sweep = app.add_subcommand("sweep", "verification sweeps")->require_subcommand(1);
    auto* versions = sweep->add_subcommand("versions", "multiplicity one vs interlacing");
    versions->add_option("--p-range", o.p_range, "inclusive range A..B")->required();
    versions->add_option("--q-range", o.q_range, "inclusive range C..D")->required();
    versions->add_option("--lambda-max", o.lambda_max, "largest lambda; mu runs to lambda-max+1")
        ->required();
    add_output_flag(versions, o);

    auto* oracle = app.add_subcommand("oracle", "compact-case oracle")->require_subcommand(1);
    auto* compact = oracle->add_subcommand("compact", "SO(p) > SO(p-1) consistency");
    compact->add_option("--p-max", o.p_max, "largest p (3..10)")->required();
    compact->add_option("--ell-max", o.ell_max, "largest one-row weight")->required();
    add_output_flag(compact, o);

    auto* classical = oracle->add_subcommand("classical", "SO(p) > SO(p-1) for weight (ell,0,...,0)");
    classical->add_option("--p", o.p, "p >= 3")->required();
    classical->add_option("--ell", o.ell, "one-row weight")->required();
    add_output_flag(classical, o);

    auto* calc = app.add_subcommand("calc", "exact helpers")->require_subcommand(1);
    auto* half = calc->add_subcommand("half", "sum, difference and order of two half-integers");
    half->add_option("--a", o.a)->required();
    half->add_option("--b", o.b)->required();
    add_output_flag(half, o);
    auto* binom = calc->add_subcommand("binomial", "C(n, k)");
    binom->add_option("--n", o.n)->required();
    binom->add_option("--k", o.k)->required();
    add_output_flag(binom, o);
    auto* kap = calc->add_subcommand("kappa", "0 for even n, 1/2 for odd n");
    kap->add_option("--n", o.n)->required();
    add_output_flag(kap, o);
    auto* canon = calc->add_subcommand("canonicalize", "orbit representative of a tuple");
    canon->add_option("--entries", o.entries, "comma-separated, e.g. --entries=-1/2,5/2")
        ->required();
    add_output_flag(canon, o);
    auto* trivial = calc->add_subcommand("trivial-inf-char", "infinitesimal character of the trivial rep");
    add_signature(trivial, o);
    add_output_flag(trivial, o);
    auto* hdim = calc->add_subcommand("harmonic-dim", "dimension of degree-b spherical harmonics on R^n");
    hdim->add_option("--n", o.n)->required();
    hdim->add_option("--b", o.k)->required();
    hdim->add_flag("--brute-force", o.brute_force, "exact Laplacian kernel instead of the formula");
    add_output_flag(hdim, o);
    auto* inter = calc->add_subcommand("interlace", "interlacing of two infinitesimal characters");
    inter->add_option("--g-char", o.g_entries, "O(p,q) tuple, comma-separated")->required();
    inter->add_option("--h-char", o.h_entries, "O(p-1,q) tuple, comma-separated")->required();
    inter->add_option("--variant", o.variant, "disc or finite")->required();
    add_output_flag(inter, o);

    std::vector<std::string> argv_store{"opq"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*rep_info) {
            return cmd_rep_info(o, out);
        }
        if (*mult) {
            return cmd_branch_mult(o, out);
        }
        if (*spectrum) {
            return cmd_branch_spectrum(o, out);
        }
        if (*verify) {
            return cmd_packet_verify(o, out);
        }
        if (*versions) {
            return cmd_sweep_versions(o, out);
        }
        if (*compact) {
            return cmd_oracle_compact(o, out);
        }
        if (*classical) {
            return cmd_oracle_classical(o, out);
        }
        if (*half) {
            return cmd_calc_half(o, out);
        }
        if (*binom) {
            return emit_value("binomial", binomial(o.n, o.k), o.output, out);
        }
        if (*kap) {
            if (o.n < 1) {
                throw FlagError("--n", "must be at least 1");
            }
            return emit_value("kappa", kappa(static_cast<int>(o.n)).to_string(), o.output, out);
        }
        if (*canon) {
            return emit_value("inf_char", to_json(canonicalize(list_flag("--entries", o.entries))),
                              o.output, out);
        }
        if (*trivial) {
            const Signature sig = signature(o);
            if (sig.p < 1 || sig.q < 0 || sig.dim() < 2) {
                throw FlagError("--p", "need p >= 1, q >= 0 and p+q >= 2");
            }
            return emit_value("inf_char", to_json(trivial_inf_char(sig)), o.output, out);
        }
        if (*hdim) {
            return cmd_calc_harmonic_dim(o, out);
        }
        if (*inter) {
            return cmd_calc_interlace(o, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace opq::cli
