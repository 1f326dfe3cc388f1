#include <doctest.h>

#include "critexp/construction.hpp"
#include "critexp/errors.hpp"
#include "critexp/repetition.hpp"

#include <random>

using namespace critexp;

namespace {

Word W(const char* s) { return Word::from_string(s); }

// Reference: scan the materialized mu^s(0) for the admissible window.
std::optional<std::uint64_t> ref_smallest_t(const Rational& alpha, unsigned s) {
    const Rational r(alpha.ceil());
    const Rational block(std::int64_t{1} << s);
    for (auto t : occurrences_00(mu_pow(W("0"), s))) {
        const Rational tt(static_cast<std::int64_t>(t));
        if ((r - alpha) * block < tt && tt < (r - Rational(2)) * block) return t;
    }
    return std::nullopt;
}

const ObtainableParams p5{3, 5, 23, Rational(73, 32)};
const ObtainableParams p6{3, 6, 45, Rational(147, 64)};

} // namespace

TEST_CASE("find_obtainable examples") {
    const Rational a(7, 3);
    CHECK(*find_obtainable(a, 5) == p5);
    CHECK(!find_obtainable(a, 3));
    CHECK(*find_obtainable(a, 6) == p6);
    CHECK_THROWS_AS(find_obtainable(Rational(2), 5), precondition_error);
    CHECK_THROWS_AS(find_obtainable(a, 2), precondition_error);
}

TEST_CASE("find_obtainable agrees with scanning the materialized word") {
    for (const char* text : {"7/3", "2.1", "5/2", "3", "2.01", "13/4", "4", "9/2", "2.999"}) {
        const Rational alpha = Rational::parse(text);
        for (unsigned s = 3; s <= 14; ++s) {
            const auto got = find_obtainable(alpha, s);
            const auto want = ref_smallest_t(alpha, s);
            INFO(text << " s=" << s);
            REQUIRE(got.has_value() == want.has_value());
            if (!got) continue;
            CHECK(got->t == *want);
            CHECK(got->r == static_cast<std::uint64_t>(alpha.ceil()));
            CHECK(got->beta == Rational(alpha.ceil()) - Rational(static_cast<std::int64_t>(got->t), std::int64_t{1} << s));
            CHECK(got->beta > Rational(2));
            CHECK(got->beta < alpha);
        }
    }
}

TEST_CASE("obtainable betas approach alpha within 7/2^s") {
    const Rational alpha(7, 3);
    for (unsigned s = 3; s <= 14; ++s)
        if (auto p = find_obtainable(alpha, s)) CHECK(alpha - p->beta <= Rational(7, std::int64_t{1} << s));
    // Large s without materializing mu^s(0).
    const auto far = find_obtainable(alpha, 40);
    REQUIRE(far);
    CHECK(alpha - far->beta <= Rational(7, std::int64_t{1} << 40));
}

TEST_CASE("build_schedule examples and invariants") {
    const Schedule s = build_schedule(Rational(7, 3), 2);
    CHECK(s.params == std::vector<ObtainableParams>{p5, p6});

    const Schedule three = build_schedule(Rational(3), 1);
    REQUIRE(three.params.size() == 1);
    CHECK(three.params[0].r == 3);
    CHECK(three.params[0].beta < Rational(3));

    for (const char* text : {"2.1", "7/3", "5/2", "3", "2.001", "17/5"}) {
        const Schedule sched = build_schedule(Rational::parse(text), 4);
        CHECK(sched.params.size() == 4);
        CHECK_NOTHROW(validate_schedule(sched));
    }
    // s_start skips the small s values.
    const Schedule late = build_schedule(Rational(7, 3), 1, 7);
    CHECK(late.params[0].s == 7);
}

TEST_CASE("validate_schedule rejects broken tables") {
    Schedule s{Rational(7, 3), {p5, p6}};
    CHECK_NOTHROW(validate_schedule(s));
    auto broken = s;
    broken.params[1].t = 46;
    CHECK_THROWS_AS(validate_schedule(broken), precondition_error);
    broken = s;
    std::swap(broken.params[0], broken.params[1]);
    CHECK_THROWS_AS(validate_schedule(broken), precondition_error);
    broken = s;
    broken.params[0].beta = Rational(74, 32);
    CHECK_THROWS_AS(validate_schedule(broken), precondition_error);
    broken = s;
    broken.target_alpha = Rational(9, 4);
    CHECK_THROWS_AS(validate_schedule(broken), precondition_error);
}

TEST_CASE("phi examples") {
    const Word w = phi(p5, Word());
    CHECK(w.size() == 73);
    CHECK(has_period(w, 32));
    CHECK(w == delete_prefix(mu_pow(W("000"), 5), 23));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        Word v;
        const auto n = rng() % 40;
        for (std::uint64_t k = 0; k < n; ++k) v.push_back(rng() & 1);
        const Word img = phi(p6, v);
        CHECK(img.size() == (std::uint64_t{1} << 6) * (3 + v.size()) - 45);
        CHECK(!img[0]);
        CHECK(!img[1]);
    }
}

TEST_CASE("build_word examples") {
    const Construction one = build_word(Schedule{Rational(7, 3), {p5}});
    CHECK(one.word.size() == 73);
    REQUIRE(one.witnesses.size() == 1);
    CHECK(one.witnesses[0].period == 32);
    CHECK(one.witnesses[0].min_length == 73);

    const Construction two = build_word(Schedule{Rational(7, 3), {p5, p6}});
    CHECK(two.word.size() == 4713);
    REQUIRE(two.witnesses.size() == 2);
    CHECK(two.witnesses[1].period == 2048);
    CHECK(two.witnesses[1].min_length == 4704);
    CHECK(two.witnesses[1].min_length <= two.word.size());
    CHECK(one.word.is_prefix_of(two.word));
    for (const auto& wit : two.witnesses) {
        auto run = find_power_with_period(two.word, wit.beta, wit.period);
        REQUIRE(run);
        CHECK(run->length >= wit.min_length);
    }
    CHECK(*max_exponent(two.word) == Rational(147, 64));
    CHECK(is_power_free(two.word, Rational(7, 3)).is_free());
}

TEST_CASE("feeding phi_2's image to phi_1 unstripped breaks freeness") {
    // The inner image starts with 00, so 0^r . 00... carries 0^5 and its
    // image under mu^5 is a 137/32-power.
    const Word literal = phi(p5, phi(p6, Word()));
    CHECK(literal.size() == 4777);
    CHECK(*max_exponent(literal) == Rational(137, 32));
    CHECK(!is_power_free(literal, Rational(7, 3)).is_free());
}

TEST_CASE("build_word reports the stages innermost first") {
    std::vector<std::size_t> levels;
    build_word(build_schedule(Rational(5, 2), 3), default_letter_budget, [&](std::size_t level, const Word& image) {
        levels.push_back(level);
        CHECK(!image[0]);
        CHECK(!image[1]);
        CHECK(in_language_L(image));
    });
    CHECK(levels == std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("build_word enforces the letter budget by level") {
    const Schedule s{Rational(7, 3), {p5, p6}};
    try {
        build_word(s, 1000);
        FAIL("expected size_error");
    } catch (const size_error& e) {
        CHECK(std::string(e.what()).find("level 1") != std::string::npos);
    }
    try {
        build_word(s, 100);
        FAIL("expected size_error");
    } catch (const size_error& e) {
        CHECK(std::string(e.what()).find("level 2") != std::string::npos);
    }
    CHECK_THROWS_AS(build_word(Schedule{Rational(7, 3), {}}), precondition_error);
}

TEST_CASE("predicted_length matches materialized lengths") {
    CHECK(predicted_length(Schedule{Rational(7, 3), {p5}}) == 73);
    CHECK(predicted_length(Schedule{Rational(7, 3), {p5, p6}}) == 4713);
    CHECK(predicted_length(Schedule{Rational(7, 3), {}}) == 0);
    CHECK(predicted_length(build_schedule(Rational(5, 2), 3)) == 10171);
    for (const char* text : {"2.1", "7/3", "5/2", "3"}) {
        const Schedule s = build_schedule(Rational::parse(text), 2);
        CHECK(predicted_length(s) == build_word(s).word.size());
    }
}

TEST_CASE("schedule prefixes give a prefix chain") {
    for (const char* text : {"7/3", "5/2", "3", "2.1"}) {
        const Schedule full = build_schedule(Rational::parse(text), 3);
        Word previous;
        for (std::size_t n = 1; n <= 3; ++n) {
            if (predicted_length(Schedule{full.target_alpha, {full.params.begin(), full.params.begin() + n}}) > 2'000'000)
                break;
            const Word w = build_word(Schedule{full.target_alpha, {full.params.begin(), full.params.begin() + n}}).word;
            CHECK(previous.is_prefix_of(w));
            previous = w;
        }
    }
}

TEST_CASE("word_prefix examples") {
    const Rational a(7, 3);
    const Word w73 = word_prefix(a, 73);
    CHECK(w73 == build_word(Schedule{a, {p5}}).word);
    const Word w10 = word_prefix(a, 10);
    CHECK(w10.size() == 10);
    CHECK(w10.is_prefix_of(w73));
    Word prev;
    for (std::uint64_t m : {1, 2, 50, 73, 74, 1000, 4713, 5000, 20000}) {
        const Word w = word_prefix(a, m);
        CHECK(w.size() == m);
        CHECK(prev.is_prefix_of(w));
        prev = w;
    }
    CHECK_THROWS_AS(word_prefix(a, 0), precondition_error);
    CHECK_THROWS_AS(word_prefix(Rational(2), 5), precondition_error);
    CHECK_THROWS_AS(word_prefix(a, 5000, 4000), size_error);
}

TEST_CASE("schedule table round trip") {
    const Schedule s = build_schedule(Rational(21, 10), 3);
    const std::string table = format_schedule_table(s);
    CHECK(table.rfind("# alpha 21/10\n", 0) == 0);
    const Schedule back = parse_schedule_table(table);
    CHECK(back.target_alpha == s.target_alpha);
    CHECK(back.params == s.params);

    CHECK(format_schedule_table(Schedule{Rational(7, 3), {p5, p6}}) ==
          "# alpha 7/3\n# level r s t beta_num beta_den\n1 3 5 23 73 32\n2 3 6 45 147 64\n");
    CHECK_THROWS_AS(parse_schedule_table("1 3 5 23 73 32\n"), format_error);
    CHECK_THROWS_AS(parse_schedule_table("# alpha 7/3\n1 3 5 23 73\n"), format_error);
    CHECK_THROWS_AS(parse_schedule_table("# alpha 7/3\n1 3 5 24 72 32\n"), precondition_error);
}
