#include "bellrec/verify.hpp"

#include "bellrec/bell.hpp"
#include "bellrec/convolve.hpp"
#include "bellrec/linrec.hpp"
#include "bellrec/symfun.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace bellrec {

Integer random_integer(Rng& rng, long lo, long hi)
{
    return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

Rational random_rational(Rng& rng, long lo, long hi, long max_den)
{
    const long num = std::uniform_int_distribution<long>(lo, hi)(rng);
    const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
    return make_rational(num, den);
}

std::vector<Integer> random_integers(Rng& rng, std::size_t len, long lo, long hi)
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(random_integer(rng, lo, hi));
    }
    return out;
}

std::vector<Rational> random_rationals(Rng& rng, std::size_t len, long lo, long hi, long max_den)
{
    std::vector<Rational> out;
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(random_rational(rng, lo, hi, max_den));
    }
    return out;
}

std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t i)
{
    // splitmix64 over a mix of the three inputs
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1) + (salt << 32U);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

std::string_view to_string(Suite s)
{
    switch (s) {
    case Suite::lemma_key: return "lemma-key";
    case Suite::prop1: return "prop1";
    case Suite::cor3: return "cor3";
    case Suite::thm4: return "thm4";
    case Suite::genfam: return "genfam";
    case Suite::girard_waring: return "girard-waring";
    }
    return "unknown";
}

std::vector<Suite> parse_suites(std::string_view name)
{
    constexpr std::array all{Suite::lemma_key, Suite::prop1, Suite::cor3,
                             Suite::thm4, Suite::genfam, Suite::girard_waring};
    if (name == "all") {
        return {all.begin(), all.end()};
    }
    for (Suite s : all) {
        if (to_string(s) == name) {
            return {s};
        }
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

namespace {

using Outcome = std::optional<std::string>;

template <class T>
std::string join(const std::vector<T>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + to_string(v[i]);
    }
    return out;
}

template <class T>
std::optional<std::size_t> first_difference(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size()) {
        return std::min(a.size(), b.size());
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) {
            return i;
        }
    }
    return std::nullopt;
}

Outcome lemma_key_trial(Rng& rng)
{
    constexpr std::size_t n_max = 14;
    const BellTable<Rational> table(random_rationals(rng, n_max, -9, 9, 9), n_max, Exec::serial);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            if (!check_key_identity(table, n, k)) {
                return "key identity fails at (n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    }
    return std::nullopt;
}

Outcome prop1_trial(Rng& rng)
{
    constexpr std::size_t n_max = 40;
    const std::size_t d = random_size(rng, 1, 5);
    const auto spec = make_recurrence(random_integers(rng, d, -9, 9), random_integers(rng, d, -9, 9));
    const auto dec = decompose(spec);
    const auto direct = eval_recurrence(spec, n_max);
    const auto rebuilt = reconstruct<Integer>(dec, spec.coeffs, n_max, Exec::serial);
    if (auto at = first_difference(direct.values, rebuilt.values)) {
        return "reconstruct differs at n = " + std::to_string(*at) + " for c = (" + join(spec.coeffs) + ")";
    }
    const auto y = invert_transform<Integer>(spec.coeffs, d - 1, Exec::serial);
    if (mat_vec<Integer>(initial_value_matrix<Integer>(y.values, d), dec.lambdas) != spec.init) {
        return "initial-value matrix does not map lambda to a_0..a_{d-1}";
    }
    if (mat_vec<Integer>(initial_value_matrix_inverse<Integer>(spec.coeffs, d), spec.init) != dec.lambdas) {
        return "inverse matrix does not map a_0..a_{d-1} to lambda";
    }
    return std::nullopt;
}

Outcome cor3_trial(Rng& rng)
{
    ConvSpec<Integer> spec;
    spec.c = random_integers(rng, random_size(rng, 1, 5), -9, 9);
    spec.r = static_cast<unsigned>(random_size(rng, 1, 5));
    spec.delta = random_size(rng, 0, 3);
    spec.n_max = 30;
    const auto direct = conv_direct(spec, Exec::serial);
    const auto bell = conv_bell(spec, Exec::serial);
    if (auto at = first_difference(direct.values, bell.values)) {
        return "direct vs bell differ at n = " + std::to_string(*at) + " (r = " + std::to_string(spec.r) +
               ", delta = " + std::to_string(spec.delta) + ")";
    }
    return std::nullopt;
}

Outcome thm4_trial(Rng& rng)
{
    ConvSpec<Integer> spec;
    spec.c = random_integers(rng, random_size(rng, 1, 5), -9, 9);
    spec.r = static_cast<unsigned>(random_size(rng, 1, 5));
    spec.n_max = 30;
    const auto direct = conv_direct(spec, Exec::serial);
    const auto bell = conv_bell(spec, Exec::serial);
    const auto rec = conv_thm_recurrence(spec);
    if (auto at = first_difference(direct.values, bell.values)) {
        return "direct vs bell differ at n = " + std::to_string(*at);
    }
    if (auto at = first_difference(direct.values, rec.values)) {
        return "direct vs recurrence differ at n = " + std::to_string(*at);
    }
    return std::nullopt;
}

Outcome genfam_trial(Rng& rng)
{
    const std::array<Rational, 5> params{Rational(-1), Rational(0), Rational(1), Rational(2),
                                         make_rational(1, 2)};
    GenFamilySpec<Integer> spec;
    spec.a = params[random_size(rng, 0, params.size() - 1)];
    spec.b = params[random_size(rng, 0, params.size() - 1)];
    spec.c = random_integers(rng, random_size(rng, 1, 4), -9, 9);
    const auto r = static_cast<unsigned>(random_size(rng, 1, 4));
    if (!genfam_conv_check(spec, r, 16, Exec::serial)) {
        return "convolution identity fails for a = " + to_string(spec.a) + ", b = " + to_string(spec.b) +
               ", r = " + std::to_string(r) + ", c = (" + join(spec.c) + ")";
    }
    return std::nullopt;
}

Outcome girard_waring_trial(Rng& rng)
{
    constexpr std::size_t n_max = 20;
    const std::size_t d = random_size(rng, 1, 6);
    const SymSpec spec = sym_from_roots(random_rationals(rng, d, -9, 9, 5));
    const auto direct = power_sums_direct(*spec.roots, n_max, Exec::serial);
    const auto newton = power_sums_newton<Rational>(spec.elems, n_max);
    const auto bell = power_sums_bell<Rational>(spec.elems, n_max, Exec::serial);
    const auto signed_coeffs = power_sums_bell_signed_coeffs<Rational>(spec.elems, n_max, Exec::serial);
    if (auto at = first_difference(direct.values, newton.values)) {
        return "direct vs Newton differ at n = " + std::to_string(*at);
    }
    if (auto at = first_difference(direct.values, bell.values)) {
        return "direct vs Bell differ at n = " + std::to_string(*at);
    }
    if (auto at = first_difference(bell.values, signed_coeffs.values)) {
        return "Bell sign orders differ at n = " + std::to_string(*at);
    }
    const auto rec = power_sum_recurrence<Rational>(spec.elems);
    const auto dec = decompose(rec);
    for (std::size_t j = 1; j < d; ++j) {
        const Rational expected = Rational(static_cast<long>(j) - static_cast<long>(d)) * rec.coeffs[j - 1];
        if (dec.lambdas[j] != expected) {
            return "lambda_j = (j-d) c_j fails at j = " + std::to_string(j);
        }
    }
    return std::nullopt;
}

Outcome run_trial(Suite suite, Rng& rng)
{
    switch (suite) {
    case Suite::lemma_key: return lemma_key_trial(rng);
    case Suite::prop1: return prop1_trial(rng);
    case Suite::cor3: return cor3_trial(rng);
    case Suite::thm4: return thm4_trial(rng);
    case Suite::genfam: return genfam_trial(rng);
    case Suite::girard_waring: return girard_waring_trial(rng);
    }
    return "unknown suite";
}

}  // namespace

SuiteResult run_suite(Suite suite, std::uint64_t seed, std::size_t trials, Exec exec)
{
    std::vector<std::optional<TrialFailure>> outcomes(trials);
    parallel_for(exec, trials, [&](std::size_t i) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(suite), i));
        try {
            if (auto detail = run_trial(suite, rng)) {
                outcomes[i] = TrialFailure{i, *detail, false};
            }
        } catch (const PathMismatch& e) {
            outcomes[i] = TrialFailure{i, e.what(), true};
        } catch (const std::exception& e) {
            outcomes[i] = TrialFailure{i, e.what(), false};
        }
    });

    SuiteResult result{suite, trials, 0, {}};
    for (auto& o : outcomes) {
        if (o) {
            result.failures.push_back(std::move(*o));
        } else {
            ++result.passed;
        }
    }
    return result;
}

}  // namespace bellrec
