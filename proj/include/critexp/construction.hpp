#pragma once

#include "critexp/rational.hpp"
#include "critexp/word.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critexp {

/// beta = r - t / 2^s, where mu^s(0) has 00 at position t.
struct ObtainableParams {
    std::uint64_t r = 0;
    unsigned s = 0;
    std::uint64_t t = 0;
    Rational beta;

    friend bool operator==(const ObtainableParams&, const ObtainableParams&) = default;
};

struct Schedule {
    Rational target_alpha;
    std::vector<ObtainableParams> params;
};

/// A beta-power the construction guarantees: level i has period
/// 2^(s_1 + ... + s_i) and at least ceil(beta_i * period) letters.
struct PredictedWitness {
    std::size_t level = 0;
    std::uint64_t period = 0;
    std::uint64_t min_length = 0;
    Rational beta;
};

struct Construction {
    Word word;
    std::vector<PredictedWitness> witnesses;
};

inline constexpr std::uint64_t default_letter_budget = std::uint64_t{1} << 28;
inline constexpr unsigned max_schedule_s = 62;

/// With r = ceil(alpha), the smallest 00-position t of mu^s(0) inside the open
/// window ((r - alpha) 2^s, (r - 2) 2^s), i.e. the largest obtainable beta < alpha
/// for this s. Occurrences come from the Thue-Morse parity rule, so mu^s(0) is
/// never materialized.
std::optional<ObtainableParams> find_obtainable(const Rational& alpha, unsigned s);

/// Greedy canonical schedule: s = s_start, s_start + 1, ..., keeping each
/// find_obtainable result whose beta does not fall below the previous one.
Schedule build_schedule(const Rational& alpha, std::size_t n, std::optional<unsigned> s_start = std::nullopt);

/// Throws precondition_error naming the first broken invariant.
void validate_schedule(const Schedule& schedule);

/// delta^t mu^s(0^r w). The result starts with 00 and lies in L.
Word phi(const ObtainableParams& params, const Word& w);

/// Called once per level, innermost first, with the level index (1-based) and phi's output.
using StageObserver = std::function<void(std::size_t level, const Word& image)>;

/// w_n = phi_1(phi_2(... phi_n(eps))), where each inner image 00v contributes
/// v to the next map out (phi_i is defined on v with 00v in L). Throws
/// size_error naming the first level whose image would exceed `budget` letters.
Construction build_word(const Schedule& schedule, std::uint64_t budget = default_letter_budget,
                        const StageObserver& observer = {});

/// |build_word(schedule).word| from the length recurrence alone.
std::uint64_t predicted_length(const Schedule& schedule);

std::vector<PredictedWitness> predicted_witnesses(const Schedule& schedule);

/// The length-target_len prefix of the limit word for alpha.
Word word_prefix(const Rational& alpha, std::uint64_t target_len, std::uint64_t budget = default_letter_budget);

/// Plain-text table: a "# alpha p/q" line, a header comment, then one
/// "level r s t beta_num beta_den" row per entry.
std::string format_schedule_table(const Schedule& schedule);
Schedule parse_schedule_table(std::string_view text);

} // namespace critexp
