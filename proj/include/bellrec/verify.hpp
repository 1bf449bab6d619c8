#pragma once

// Randomized identity checks shared by the CLI `verify` command and the
// acceptance suite. Trials are drawn from per-trial seeds derived from the
// master seed, so a run is reproducible regardless of thread count.

#include "bellrec/exec.hpp"
#include "bellrec/ring.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bellrec {

using Rng = std::mt19937_64;

Integer random_integer(Rng& rng, long lo, long hi);
/// numerator in [lo, hi], denominator in [1, max_den]
Rational random_rational(Rng& rng, long lo, long hi, long max_den);
std::vector<Integer> random_integers(Rng& rng, std::size_t len, long lo, long hi);
std::vector<Rational> random_rationals(Rng& rng, std::size_t len, long lo, long hi, long max_den);
std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi);

/// Independent 64-bit seed for trial i of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t i);

enum class Suite { lemma_key, prop1, cor3, thm4, genfam, girard_waring };

std::string_view to_string(Suite s);
/// "all" expands to every suite; unknown names throw std::invalid_argument.
std::vector<Suite> parse_suites(std::string_view name);

struct TrialFailure {
    std::size_t trial;
    std::string detail;
    bool internal;  // a PathMismatch escaped from a library routine
};

struct SuiteResult {
    Suite suite;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<TrialFailure> failures;

    bool ok() const { return passed == trials; }
};

SuiteResult run_suite(Suite suite, std::uint64_t seed, std::size_t trials, Exec exec = Exec::parallel);

}  // namespace bellrec
