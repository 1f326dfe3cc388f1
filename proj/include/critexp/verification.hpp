#pragma once

#include "critexp/construction.hpp"
#include "critexp/rational.hpp"
#include "critexp/word.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace critexp {

struct Counterexample {
    std::string inputs;
    std::string observed;
    std::string expected;
};

struct CheckReport {
    std::string check_name;
    std::uint64_t instances_tested = 0;
    std::vector<Counterexample> failures;

    bool passed() const noexcept { return failures.empty(); }
    void fail(std::string inputs, std::string observed, std::string expected) {
        failures.push_back({std::move(inputs), std::move(observed), std::move(expected)});
    }
};

/// Human-readable rendering; lists at most `max_failures` counterexamples.
std::string render_text(const CheckReport& report, std::size_t max_failures = 5);

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 0;

/// Uniform-ish draw in [0, n) that does not depend on the standard library's
/// distribution implementation, so seeds reproduce across toolchains.
inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

/// Random alpha-power-free word of exactly `len` letters, by randomized
/// backtracking over per-period suffix streaks.
Word random_power_free_word(std::uint64_t len, const Rational& alpha, Rng& rng);

/// Random alpha-power-free word 00v in L with |00v| <= max_len (max_len >= 2):
/// a 00-anchored factor of mu(u) for a random alpha-power-free u.
Word sample_free_00v(const Rational& alpha, std::uint64_t max_len, Rng& rng);

/// Every factor of mu^s(01) longer than 2^s fails to have period 2^s, for 1 <= s <= s_max.
CheckReport check_lemma1(unsigned s_max);
/// The per-word body of check_lemma1, exposed so the harness can be fed a non-Thue-Morse word.
CheckReport check_period_exclusion(const Word& z, unsigned s);

/// w alpha-free <=> mu(w) alpha-free: exhaustive over |w| <= min(max_len, 20),
/// plus sample_count random words with |w| <= max_len.
CheckReport check_theorem2(std::uint64_t sample_count, std::uint64_t max_len, const Rational& alpha,
                           std::uint64_t seed = default_seed);

/// Every run of exponent > 2 and period p in mu(w) has p even and is matched by
/// a factor of w with period p/2 and at least ceil(|u|/2) + length_slack letters.
/// A nonzero slack is only meaningful as a self-test of the harness.
CheckReport check_theorem3(std::uint64_t sample_count, std::uint64_t max_len, std::uint64_t seed = default_seed,
                           std::int64_t length_slack = 0);

/// For sampled alpha-free 00v in L, the only factor of 0^r v (r = ceil(alpha))
/// with exponent >= alpha is its prefix 0^r.
CheckReport check_lemma4(const Rational& alpha, std::uint64_t sample_count, std::uint64_t max_len,
                         std::uint64_t seed = default_seed);

/// For sampled alpha-free 00v in L and W = phi(params, v): W starts with 00 and
/// lies in L; W has a prefix of period 2^s and exponent >= beta; every run of
/// 00v with period p and exponent b reappears in W as a b-power of period 2^s p;
/// W is alpha-power-free. Params that are not obtainable for alpha are
/// reported as a failure rather than thrown.
CheckReport check_lemma5(const ObtainableParams& params, const Rational& alpha, std::uint64_t sample_count,
                         std::uint64_t seed = default_seed, std::uint64_t max_len = 128);

/// Builds w_1..w_levels for the canonical schedule and checks freeness, all
/// predicted witnesses, max exponent in [beta_n, alpha), the prefix chain,
/// and that every intermediate image starts with 00 and lies in L.
CheckReport verify_construction(const Rational& alpha, std::size_t levels,
                                std::uint64_t budget = default_letter_budget);

/// The word-level part of verify_construction for an arbitrary candidate word.
CheckReport verify_constructed_word(const Schedule& schedule, const Word& word);

} // namespace critexp
