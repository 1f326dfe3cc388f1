#include <doctest.h>

#include "critexp/errors.hpp"
#include "critexp/repetition.hpp"

#include <random>

using namespace critexp;

namespace {

Word W(const char* s) { return Word::from_string(s); }

Word random_word(std::mt19937_64& rng, std::uint64_t n) {
    Word w;
    for (std::uint64_t i = 0; i < n; ++i) w.push_back(rng() & 1);
    return w;
}

// Words glued from repeated random blocks, so long runs show up often.
Word repetitive_word(std::mt19937_64& rng, std::uint64_t n) {
    Word w;
    while (w.size() < n) {
        const Word block = random_word(rng, rng() % 7 + 1);
        const auto copies = rng() % 4 + 1;
        for (std::uint64_t c = 0; c < copies && w.size() < n; ++c) w.append(block);
        if (rng() % 3 == 0) w.push_back(rng() & 1);
    }
    w.truncate(n);
    return w;
}

const Word delta23_mu5_000 = delete_prefix(mu_pow(W("000"), 5), 23);

} // namespace

TEST_CASE("has_period examples") {
    CHECK(has_period(W("0101"), 2));
    CHECK(!has_period(W("001"), 1));
    CHECK(has_period(delta23_mu5_000, 8 * 4));
    CHECK(has_period(W("01"), 5));
    CHECK(has_period(W("0110"), 1, 2, 1));
    CHECK_THROWS_AS(has_period(W("01"), 0), precondition_error);
}

TEST_CASE("maximal_repetitions examples") {
    CHECK(maximal_repetitions(W("0110")) == std::vector<Run>{{1, 1, 2}});
    CHECK(maximal_repetitions(W("000")) == std::vector<Run>{{0, 1, 3}});
    CHECK(maximal_repetitions(W("01101001")) == std::vector<Run>{{1, 1, 2}, {2, 2, 4}, {5, 1, 2}});
    CHECK(maximal_repetitions(W("0101101001")) ==
          std::vector<Run>{{0, 2, 4}, {1, 3, 6}, {3, 1, 2}, {4, 2, 4}, {7, 1, 2}});
    CHECK(maximal_repetitions(Word()).empty());
    CHECK(maximal_repetitions(W("0")).empty());
    CHECK(*max_exponent(W("01101001")) == Rational(2));
}

TEST_CASE("max_exponent examples") {
    CHECK(*max_exponent(W("000")) == Rational(3));
    CHECK(max_exponent(W("0101101001")) == naive_max_exponent(W("0101101001")));
    CHECK(*max_exponent(delta23_mu5_000) == Rational(73, 32));
    CHECK(!max_exponent(W("01")).has_value());
    CHECK(!naive_max_exponent(W("01")).has_value());
    CHECK(*naive_max_exponent(W("00")) == Rational(2));
}

TEST_CASE("max exponent ties resolve to the smallest start, then period") {
    const auto runs = maximal_repetitions(W("0011"));
    const auto best = max_exponent_run(runs);
    REQUIRE(best);
    CHECK(*best == Run{0, 1, 2});
}

TEST_CASE("is_power_free examples") {
    const auto v = is_power_free(W("000"), Rational(7, 3));
    REQUIRE(!v.is_free());
    CHECK(*v.violation == Run{0, 1, 3});
    CHECK(is_power_free(mu_pow(W("01"), 6), Rational(7, 3)).is_free());
    CHECK(is_power_free(delta23_mu5_000, Rational(7, 3)).is_free());
    CHECK(!is_power_free(delta23_mu5_000, Rational(73, 32)).is_free());
    CHECK_THROWS_AS(is_power_free(W("01"), Rational(2)), precondition_error);
    CHECK_THROWS_AS(is_power_free(W("01"), Rational(3, 2)), precondition_error);
}

TEST_CASE("find_power_with_period examples") {
    CHECK(*find_power_with_period(delta23_mu5_000, Rational(73, 32), 32) == Run{0, 32, 73});
    CHECK(*find_power_with_period(W("0101"), Rational(2), 2) == Run{0, 2, 4});
    CHECK(!find_power_with_period(W("0110"), Rational(2), 3));
    CHECK(!find_power_with_period(delta23_mu5_000, Rational(74, 32), 32));
    CHECK_THROWS_AS(find_power_with_period(W("0101"), Rational(3, 2), 2), precondition_error);
}

TEST_CASE("naive oracle refuses long words") {
    CHECK_THROWS_AS(naive_max_exponent(Word(4097)), size_error);
    CHECK_THROWS_AS(naive_max_exponent(Word(100), 50), size_error);
    CHECK_NOTHROW(naive_max_exponent(Word(4096)));
}

TEST_CASE("maximal_repetitions equals the naive run set") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 3000; ++i) {
        const std::uint64_t n = rng() % 80;
        const Word w = i % 2 ? random_word(rng, n) : repetitive_word(rng, n);
        INFO(w.to_string());
        REQUIRE(maximal_repetitions(w) == naive_runs(w));
    }
}

TEST_CASE("max_exponent and freeness verdicts agree with the naive oracle") {
    std::mt19937_64 rng(22);
    const Rational alphas[] = {Rational(21, 10), Rational(7, 3), Rational(5, 2), Rational(3)};
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = rng() % 201;
        const Word w = i % 3 == 0 ? repetitive_word(rng, n) : random_word(rng, n);
        const auto oracle = naive_max_exponent(w);
        INFO(w.to_string());
        REQUIRE(max_exponent(w) == oracle);
        for (const auto& a : alphas) CHECK(is_power_free(w, a).is_free() == (!oracle || *oracle < a));
    }
}

TEST_CASE("every reported run is periodic, maximal and has least period") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 400; ++i) {
        const Word w = repetitive_word(rng, rng() % 150 + 1);
        for (const Run& r : maximal_repetitions(w)) {
            REQUIRE(r.length >= 2 * r.period);
            CHECK(has_period(w, r.start, r.length, r.period));
            if (r.start > 0) CHECK(!has_period(w, r.start - 1, r.length + 1, r.period));
            if (r.end() < w.size()) CHECK(!has_period(w, r.start, r.length + 1, r.period));
            for (std::uint64_t q = 1; q < r.period; ++q) CHECK(!has_period(w, r.start, r.length, q));
        }
    }
}

TEST_CASE("freeness is monotone in alpha and closed under factors") {
    std::mt19937_64 rng(24);
    const Rational alphas[] = {Rational(21, 10), Rational(7, 3), Rational(5, 2), Rational(3), Rational(7, 2)};
    for (int i = 0; i < 300; ++i) {
        const Word w = random_word(rng, rng() % 60);
        for (std::size_t a = 0; a < std::size(alphas); ++a) {
            if (!is_power_free(w, alphas[a]).is_free()) continue;
            for (std::size_t b = a; b < std::size(alphas); ++b) CHECK(is_power_free(w, alphas[b]).is_free());
            for (std::uint64_t s = 0; s < w.size(); s += 2)
                for (std::uint64_t e = s; e <= w.size(); e += 3)
                    CHECK(is_power_free(w.subword(s, e - s), alphas[a]).is_free());
        }
    }
}

TEST_CASE("factors of mu^s(01) longer than 2^s never have period 2^s") {
    for (unsigned s = 1; s <= 10; ++s) {
        const Word z = mu_pow(W("01"), s);
        const std::uint64_t p = std::uint64_t{1} << s;
        bool any = false;
        for (std::uint64_t a = 0; a < z.size(); ++a)
            for (std::uint64_t len = p + 1; a + len <= z.size(); ++len) any = any || has_period(z, a, len, p);
        CHECK_FALSE(any);
        // At |z| = 2^s the period holds vacuously.
        CHECK(has_period(z, 0, p, p));
    }
}

TEST_CASE("runs of a long constructed-style word stay consistent") {
    // mu^16(0) is overlap-free: every run is a square.
    const Word w = mu_pow(W("0"), 16);
    const auto runs = maximal_repetitions(w);
    CHECK(!runs.empty());
    CHECK(*max_exponent(runs) == Rational(2));
    CHECK(is_power_free(runs, Rational(201, 100)).is_free());
}
