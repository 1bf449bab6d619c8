#include "cli.hpp"

#include "bellrec/convolve.hpp"
#include "bellrec/linrec.hpp"
#include "bellrec/symfun.hpp"
#include "bellrec/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace bellrec::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::size_t nmax_limit()
{
    const char* env = std::getenv("BELLREC_NMAX_LIMIT");
    if (env == nullptr || *env == '\0') {
        return 500;
    }
    try {
        return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
        throw UsageError(std::string("BELLREC_NMAX_LIMIT is not a non-negative integer: ") + env);
    }
}

void check_n(long n)
{
    if (n < 0) {
        throw UsageError("--n must be non-negative");
    }
    if (static_cast<std::size_t>(n) > nmax_limit()) {
        throw UsageError("--n " + std::to_string(n) + " exceeds BELLREC_NMAX_LIMIT (" +
                         std::to_string(nmax_limit()) + ")");
    }
}

std::vector<RingElem> parse_list(const std::string& text, const std::string& flag)
{
    std::vector<RingElem> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_ring_elem(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(flag + ": " + e.what());
        }
    }
    if (!text.empty() && text.back() == ',') {
        throw UsageError(flag + ": trailing comma");
    }
    return out;
}

// A single record shape for every command; `values` holds either scalars or
// polynomial coefficient lists, always as exact strings.
struct Record {
    std::string command;
    json params = json::object();
    json values = json::array();
    std::vector<std::string> methods;
    std::optional<std::string> verdict;
    std::vector<std::string> plain_lines;  // plain-mode rendering of `values`
};

json value_json(const Integer& v) { return to_string(v); }
json value_json(const Rational& v) { return to_string(v); }
json value_json(const Poly& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return coeffs;
}

template <class T>
void push_values(Record& rec, const std::vector<T>& values)
{
    for (const auto& v : values) {
        rec.values.push_back(value_json(v));
        rec.plain_lines.push_back(to_string(v));
    }
}

json list_json(const std::vector<RingElem>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

void emit(const Record& rec, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        json doc;
        doc["command"] = rec.command;
        doc["params"] = rec.params;
        doc["values"] = rec.values;
        doc["methods"] = rec.methods;
        doc["verdict"] = rec.verdict ? json(*rec.verdict) : json(nullptr);
        out << doc.dump(2) << '\n';
        return;
    }
    for (const auto& line : rec.plain_lines) {
        out << line << '\n';
    }
    if (rec.verdict) {
        out << "verdict: " << *rec.verdict << '\n';
    }
}

// Promotes every list to their common (integer or rational) domain and calls
// fn with typed vectors.
template <class Fn>
void with_domain(std::vector<std::vector<RingElem>*> lists, Fn&& fn)
{
    std::vector<RingElem> all;
    for (auto* l : lists) {
        all.insert(all.end(), l->begin(), l->end());
    }
    const Domain domain = common_domain(all);
    for (auto* l : lists) {
        for (auto& v : *l) {
            v = promote(v, domain);
        }
    }
    if (domain == Domain::integer) {
        fn(Integer{});
    } else {
        fn(Rational{});
    }
}

// seq

struct SeqArgs {
    std::string coeffs;
    std::string init;
    std::string family;
    long n = 0;
};

Record cmd_seq(const SeqArgs& a)
{
    check_n(a.n);
    Record rec{"seq"};
    const auto n = static_cast<std::size_t>(a.n);

    if (!a.family.empty()) {
        if (!a.coeffs.empty() || !a.init.empty()) {
            throw UsageError("--family cannot be combined with --coeffs/--init");
        }
        rec.params["family"] = a.family;
        rec.params["n"] = a.n;
        RecurrenceSpec<Poly> spec;
        if (a.family == "chebyshev-t") {
            spec = chebyshev_t_spec();
        } else if (a.family == "chebyshev-u") {
            spec = chebyshev_u_spec();
        } else {
            throw UsageError("unknown family '" + a.family + "' (expected chebyshev-t or chebyshev-u)");
        }
        const auto s = eval_recurrence(spec, n);
        push_values(rec, s.values);
        rec.methods.emplace_back(to_string(s.method));
        return rec;
    }

    auto coeffs = parse_list(a.coeffs, "--coeffs");
    auto init = parse_list(a.init, "--init");
    if (coeffs.empty() || coeffs.size() != init.size()) {
        throw UsageError("seq needs --coeffs and --init of equal, non-zero length");
    }
    rec.params["coeffs"] = list_json(coeffs);
    rec.params["init"] = list_json(init);
    rec.params["n"] = a.n;
    with_domain({&coeffs, &init}, [&](auto tag) {
        using T = decltype(tag);
        const auto s = eval_recurrence(make_recurrence(as_vector<T>(coeffs), as_vector<T>(init)), n);
        push_values(rec, s.values);
        rec.methods.emplace_back(to_string(s.method));
    });
    return rec;
}

// decompose

Record cmd_decompose(const std::string& coeffs_text, const std::string& init_text)
{
    auto coeffs = parse_list(coeffs_text, "--coeffs");
    auto init = parse_list(init_text, "--init");
    if (coeffs.empty() || coeffs.size() != init.size()) {
        throw UsageError("decompose needs --coeffs and --init of equal, non-zero length");
    }
    Record rec{"decompose"};
    rec.params["coeffs"] = list_json(coeffs);
    rec.params["init"] = list_json(init);
    with_domain({&coeffs, &init}, [&](auto tag) {
        using T = decltype(tag);
        const auto spec = make_recurrence(as_vector<T>(coeffs), as_vector<T>(init));
        const auto dec = decompose(spec);
        // the decomposition must rebuild the sequence; a failure is a library bug
        const std::size_t check_n = std::max<std::size_t>(2 * spec.depth(), 16);
        if (reconstruct<T>(dec, spec.coeffs, check_n).values != eval_recurrence(spec, check_n).values) {
            throw PathMismatch("decompose: reconstruction does not reproduce the recurrence");
        }
        push_values(rec, dec.lambdas);
    });
    rec.methods.emplace_back("decomposition");
    return rec;
}

// conv

struct ConvArgs {
    std::string coeffs;
    long r = 1;
    long delta = 0;
    long n = 0;
    std::string method = "direct";
};

Record cmd_conv(const ConvArgs& a)
{
    check_n(a.n);
    if (a.r < 0) {
        throw UsageError("--r must be non-negative");
    }
    if (a.delta < 0) {
        throw UsageError("--delta must be non-negative");
    }
    const bool needs_r = a.method == "bell" || a.method == "recurrence" || a.method == "all";
    if (needs_r && a.r == 0) {
        throw UsageError("--method " + a.method + " needs --r >= 1");
    }
    if (a.method == "recurrence" && a.delta != 0) {
        throw UsageError("--method recurrence only covers --delta 0");
    }
    auto coeffs = parse_list(a.coeffs, "--coeffs");

    Record rec{"conv"};
    rec.params["coeffs"] = list_json(coeffs);
    rec.params["r"] = a.r;
    rec.params["delta"] = a.delta;
    rec.params["n"] = a.n;
    rec.params["method"] = a.method;

    with_domain({&coeffs}, [&](auto tag) {
        using T = decltype(tag);
        const ConvSpec<T> spec{as_vector<T>(coeffs), static_cast<unsigned>(a.r),
                               static_cast<std::size_t>(a.delta), static_cast<std::size_t>(a.n)};
        std::vector<Seq<T>> runs;
        if (a.method == "direct" || a.method == "all") {
            runs.push_back(conv_direct(spec));
        }
        if (a.method == "bell" || a.method == "all") {
            runs.push_back(conv_bell(spec));
        }
        if (a.method == "recurrence" || (a.method == "all" && a.delta == 0)) {
            runs.push_back(conv_thm_recurrence(spec));
        }
        for (const auto& s : runs) {
            rec.methods.emplace_back(to_string(s.method));
        }
        if (a.method == "all") {
            const bool agree = std::all_of(runs.begin(), runs.end(),
                                           [&](const Seq<T>& s) { return s.values == runs.front().values; });
            rec.verdict = agree ? "agree" : "mismatch";
        }
        push_values(rec, runs.front().values);
    });
    return rec;
}

// powersum

struct PowerSumArgs {
    std::string roots;
    std::string elems;
    long d = -1;
    long n = 0;
};

Record cmd_powersum(const PowerSumArgs& a)
{
    check_n(a.n);
    const bool have_roots = !a.roots.empty();
    const bool have_elems = !a.elems.empty();
    if (have_roots == have_elems) {
        throw UsageError("powersum needs exactly one of --roots or --elems");
    }
    auto to_rationals = [](const std::vector<RingElem>& v) {
        std::vector<Rational> out;
        for (const auto& e : v) {
            out.push_back(std::get<Rational>(promote(e, Domain::rational)));
        }
        return out;
    };

    Record rec{"powersum"};
    const auto n = static_cast<std::size_t>(a.n);
    std::vector<Seq<Rational>> routes;
    SymSpec spec;
    if (have_roots) {
        const auto roots = parse_list(a.roots, "--roots");
        if (roots.empty()) {
            throw UsageError("--roots is empty");
        }
        if (a.d >= 0 && static_cast<std::size_t>(a.d) != roots.size()) {
            throw UsageError("--d does not match the number of roots");
        }
        rec.params["roots"] = list_json(roots);
        spec = sym_from_roots(to_rationals(roots));
        routes.push_back(power_sums_direct(*spec.roots, n));
    } else {
        const auto elems = parse_list(a.elems, "--elems");
        if (a.d < 1 || static_cast<std::size_t>(a.d) != elems.size()) {
            throw UsageError("--elems needs --d equal to the number of elementary symmetric values");
        }
        rec.params["elems"] = list_json(elems);
        spec = sym_from_elems(to_rationals(elems));
    }
    rec.params["d"] = spec.d();
    rec.params["n"] = a.n;
    routes.push_back(power_sums_newton<Rational>(spec.elems, n));
    routes.push_back(power_sums_bell<Rational>(spec.elems, n));

    const bool agree = std::all_of(routes.begin(), routes.end(),
                                   [&](const Seq<Rational>& s) { return s.values == routes.front().values; });
    for (const auto& s : routes) {
        rec.methods.emplace_back(to_string(s.method));
    }
    rec.verdict = agree ? "agree" : "mismatch";
    push_values(rec, routes.front().values);
    return rec;
}

// verify

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 1;
    long trials = 10;
};

Record cmd_verify(const VerifyArgs& a, bool& internal, std::ostream& err)
{
    if (a.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    std::vector<Suite> suites;
    try {
        suites = parse_suites(a.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    Record rec{"verify"};
    rec.params["suite"] = a.suite;
    rec.params["seed"] = a.seed;
    rec.params["trials"] = a.trials;

    bool all_ok = true;
    const auto start = std::chrono::steady_clock::now();
    for (Suite s : suites) {
        const auto result = run_suite(s, a.seed, static_cast<std::size_t>(a.trials));
        all_ok = all_ok && result.ok();
        json entry;
        entry["suite"] = std::string(to_string(s));
        entry["trials"] = result.trials;
        entry["passed"] = result.passed;
        json failures = json::array();
        std::string line = std::string(to_string(s)) + ": " + std::to_string(result.passed) + "/" +
                           std::to_string(result.trials) + " passed";
        rec.plain_lines.push_back(line);
        for (const auto& f : result.failures) {
            internal = internal || f.internal;
            failures.push_back({{"trial", f.trial}, {"detail", f.detail}});
            rec.plain_lines.push_back("  trial " + std::to_string(f.trial) + ": " + f.detail);
        }
        entry["failures"] = failures;
        rec.values.push_back(entry);
        rec.methods.emplace_back(to_string(s));
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    // timing goes to stderr so stdout stays byte-identical across runs
    err << "verify: " << elapsed.count() << " s\n";
    rec.verdict = all_ok ? "pass" : "fail";
    return rec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact linear-recurrence, convolution and power-sum toolkit", "bellrec"};
    app.require_subcommand(1);
    std::string format = "plain";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));

    SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "Evaluate a linear recurrence a_0..a_n");
    seq->add_option("--coeffs", seq_args.coeffs, "c_1,...,c_d (integers or p/q)");
    seq->add_option("--init", seq_args.init, "a_0,...,a_{d-1}");
    seq->add_option("--family", seq_args.family, "chebyshev-t or chebyshev-u");
    seq->add_option("--n", seq_args.n, "Last index")->required();

    std::string dec_coeffs;
    std::string dec_init;
    auto* dec = app.add_subcommand("decompose", "Coefficients lambda_k with a_n = sum lambda_k y_{n-k}");
    dec->add_option("--coeffs", dec_coeffs)->required();
    dec->add_option("--init", dec_init)->required();

    ConvArgs conv_args;
    auto* conv = app.add_subcommand("conv", "r-fold self-convolution of the INVERT transform of c");
    conv->add_option("--coeffs", conv_args.coeffs)->required();
    conv->add_option("--r", conv_args.r, "Number of factors");
    conv->add_option("--delta", conv_args.delta, "Shift applied to each factor");
    conv->add_option("--n", conv_args.n)->required();
    conv->add_option("--method", conv_args.method)
        ->check(CLI::IsMember({"direct", "bell", "recurrence", "all"}));

    PowerSumArgs ps_args;
    auto* ps = app.add_subcommand("powersum", "Power sums from roots or elementary symmetric values");
    ps->add_option("--roots", ps_args.roots);
    ps->add_option("--elems", ps_args.elems);
    ps->add_option("--d", ps_args.d);
    ps->add_option("--n", ps_args.n)->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Randomized identity checks");
    verify->add_option("--suite", verify_args.suite)
        ->check(CLI::IsMember({"lemma-key", "prop1", "cor3", "thm4", "genfam", "girard-waring", "all"}));
    verify->add_option("--seed", verify_args.seed);
    verify->add_option("--trials", verify_args.trials);

    for (auto* sub : {seq, dec, conv, ps, verify}) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        Record rec;
        bool internal = false;
        if (seq->parsed()) {
            rec = cmd_seq(seq_args);
        } else if (dec->parsed()) {
            rec = cmd_decompose(dec_coeffs, dec_init);
        } else if (conv->parsed()) {
            rec = cmd_conv(conv_args);
        } else if (ps->parsed()) {
            rec = cmd_powersum(ps_args);
        } else {
            rec = cmd_verify(verify_args, internal, err);
        }
        emit(rec, format, out);
        if (rec.verdict == "mismatch" || internal) {
            return internal_mismatch;
        }
        if (rec.verdict == "fail") {
            return verification_failure;
        }
        return ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const PathMismatch& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_mismatch;
    } catch (const IntegralityError& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_mismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace bellrec::cli
