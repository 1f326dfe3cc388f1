#pragma once

#include "critexp/rational.hpp"
#include "critexp/word.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace critexp {

/// A maximal repetition w[start, start + length) with least period `period`
/// and length >= 2 * period.
struct Run {
    std::uint64_t start = 0;
    std::uint64_t period = 1;
    std::uint64_t length = 0;

    std::uint64_t end() const noexcept { return start + length; }
    Rational exponent() const { return Rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period)); }

    friend bool operator==(const Run&, const Run&) = default;
};

/// Whether w[j] = w[j + p] for all valid j. Vacuously true when p >= |w|.
bool has_period(const Word& w, std::uint64_t p);
/// Same test restricted to the factor w[start, start + len).
bool has_period(const Word& w, std::uint64_t start, std::uint64_t len, std::uint64_t p);

/// All runs of exponent >= 2, sorted by start then period.
///
/// Main-Lorentz divide and conquer: at each node [lo, hi) split at mid, the
/// runs containing both mid-1 and mid are found with four Z-function passes
/// (two per side), so every level costs O(hi - lo) and the whole pass
/// O(n log n). A run is kept only at the node where it first straddles the
/// split; candidates touching lo or hi that still extend in the full word are
/// dropped, since an ancestor owns them.
std::vector<Run> maximal_repetitions(const Word& w);

/// Largest length/period over the runs; ties go to the smallest start, then period.
std::optional<Run> max_exponent_run(std::span<const Run> runs);
std::optional<Rational> max_exponent(std::span<const Run> runs);
std::optional<Rational> max_exponent(const Word& w);

/// Either free, or a violating run (the first by start then period).
struct PowerFreeVerdict {
    std::optional<Run> violation;

    bool is_free() const noexcept { return !violation.has_value(); }
};

/// Throws precondition_error unless alpha > 2.
PowerFreeVerdict is_power_free(std::span<const Run> runs, const Rational& alpha);
PowerFreeVerdict is_power_free(const Word& w, const Rational& alpha);

/// First maximal p-periodic segment (by start) with length/p >= beta. The
/// returned Run carries `period = p` even when a smaller period exists.
/// Throws precondition_error unless beta >= 2 and p >= 1.
std::optional<Run> find_power_with_period(const Word& w, const Rational& beta, std::uint64_t p);

inline constexpr std::uint64_t naive_length_bound = 4096;

/// O(n^2) reference: extends every (start, period) pair directly. Refuses
/// words longer than `bound` with size_error.
std::optional<Rational> naive_max_exponent(const Word& w, std::uint64_t bound = naive_length_bound);

/// O(n^2) reference runs: every maximal p-periodic segment with length >= 2p,
/// keeping the least p per segment.
std::vector<Run> naive_runs(const Word& w, std::uint64_t bound = naive_length_bound);

} // namespace critexp
