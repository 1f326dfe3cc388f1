#include "critexp/verification.hpp"

#include "critexp/errors.hpp"
#include "critexp/repetition.hpp"

#include <algorithm>
#include <sstream>

namespace critexp {

namespace {

std::string short_word(const Word& w, std::size_t limit = 80) {
    if (w.size() <= limit) return w.to_string();
    return w.subword(0, limit).to_string() + "...(" + std::to_string(w.size()) + " letters)";
}

std::string run_str(const Run& r) {
    return "Run(" + std::to_string(r.start) + "," + std::to_string(r.period) + "," + std::to_string(r.length) + ")";
}

std::uint64_t periodic_prefix_length(const Word& w, std::uint64_t p) {
    std::uint64_t j = 0;
    while (j + p < w.size() && w[j] == w[j + p]) ++j;
    return std::min<std::uint64_t>(w.size(), j + p);
}

Word word_from_bits(std::uint64_t bits, std::uint64_t len) {
    Word w;
    for (std::uint64_t i = 0; i < len; ++i) w.push_back((bits >> i) & 1u);
    return w;
}

Word random_word(std::uint64_t len, Rng& rng) {
    Word w;
    for (std::uint64_t i = 0; i < len; ++i) w.push_back(rng() & 1u);
    return w;
}

} // namespace

std::string render_text(const CheckReport& report, std::size_t max_failures) {
    std::ostringstream os;
    os << (report.passed() ? "PASS " : "FAIL ") << report.check_name << ": " << report.instances_tested
       << " instances, " << report.failures.size() << " failures\n";
    for (std::size_t i = 0; i < std::min(max_failures, report.failures.size()); ++i) {
        const auto& f = report.failures[i];
        os << "  input: " << f.inputs << "\n    observed: " << f.observed << "\n    expected: " << f.expected << "\n";
    }
    if (report.failures.size() > max_failures)
        os << "  ... " << (report.failures.size() - max_failures) << " more\n";
    return os.str();
}

Word random_power_free_word(std::uint64_t len, const Rational& alpha, Rng& rng) {
    if (alpha <= Rational(2)) throw precondition_error("alpha must exceed 2 (got " + alpha.str() + ")");
    const std::uint64_t step_limit = 64 * (len + 8);
    for (;;) {
        // streaks[d][p]: trailing run of x[j] = x[j - p] matches after d letters.
        std::vector<std::vector<std::uint32_t>> streaks(len + 1);
        std::vector<std::uint8_t> letters;
        std::vector<std::uint8_t> order(len, 0);
        std::vector<std::uint8_t> tried(len, 0);
        std::uint64_t steps = 0;
        std::uint64_t depth = 0;
        if (len > 0) order[0] = rng() & 1u;
        while (depth < len && steps < step_limit) {
            ++steps;
            if (tried[depth] == 2) {
                if (depth == 0) break;
                tried[depth] = 0;
                --depth;
                letters.pop_back();
                continue;
            }
            const std::uint8_t a = order[depth] ^ tried[depth];
            ++tried[depth];
            const auto& prev = streaks[depth];
            auto& next = streaks[depth + 1];
            next.assign(depth + 2, 0);
            bool ok = true;
            for (std::uint64_t p = 1; p <= depth; ++p) {
                const std::uint32_t c = letters[depth - p] == a ? (p < depth ? prev[p] : 0) + 1 : 0;
                next[p] = c;
                if (compare_ratio(c + p, p, alpha) >= 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            letters.push_back(a);
            ++depth;
            if (depth < len) {
                order[depth] = rng() & 1u;
                tried[depth] = 0;
            }
        }
        if (depth == len) {
            Word w;
            for (auto b : letters) w.push_back(b);
            return w;
        }
    }
}

Word sample_free_00v(const Rational& alpha, std::uint64_t max_len, Rng& rng) {
    if (max_len < 2) throw precondition_error("sample_free_00v: max_len must be at least 2");
    for (;;) {
        const Word u = random_power_free_word(2 + draw(rng, max_len / 2 + 1), alpha, rng);
        const Word image = mu(u);
        const auto occ = occurrences_00(image);
        if (occ.empty()) continue;
        const std::uint64_t start = occ[draw(rng, occ.size())];
        const std::uint64_t room = std::min<std::uint64_t>(image.size() - start, max_len);
        const std::uint64_t len = 2 + draw(rng, room - 1);
        Word cand = image.subword(start, len);
        if (in_language_L(cand) && is_power_free(cand, alpha).is_free()) return cand;
    }
}

CheckReport check_period_exclusion(const Word& z, unsigned s) {
    CheckReport rep{"period exclusion (s=" + std::to_string(s) + ")", 0, {}};
    const std::uint64_t p = std::uint64_t{1} << s;
    for (std::uint64_t start = 0; start < z.size(); ++start) {
        for (std::uint64_t len = p + 1; start + len <= z.size(); ++len) {
            ++rep.instances_tested;
            if (has_period(z, start, len, p))
                rep.fail("s=" + std::to_string(s) + " factor [" + std::to_string(start) + "," +
                             std::to_string(start + len) + ") of " + short_word(z),
                         "has period " + std::to_string(p), "no period " + std::to_string(p));
        }
    }
    return rep;
}

CheckReport check_lemma1(unsigned s_max) {
    if (s_max < 1) throw precondition_error("check_lemma1: s_max must be at least 1");
    CheckReport rep{"lemma1: factors of mu^s(01) longer than 2^s lack period 2^s", 0, {}};
    for (unsigned s = 1; s <= s_max; ++s) {
        auto part = check_period_exclusion(mu_pow(Word::from_string("01"), s), s);
        rep.instances_tested += part.instances_tested;
        for (auto& f : part.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

CheckReport check_theorem2(std::uint64_t sample_count, std::uint64_t max_len, const Rational& alpha,
                           std::uint64_t seed) {
    if (alpha <= Rational(2)) throw precondition_error("alpha must exceed 2 (got " + alpha.str() + ")");
    CheckReport rep{"theorem2: w is " + alpha.str() + "-free iff mu(w) is", 0, {}};
    auto check = [&](const Word& w) {
        ++rep.instances_tested;
        const bool lhs = is_power_free(w, alpha).is_free();
        const bool rhs = is_power_free(mu(w), alpha).is_free();
        if (lhs != rhs)
            rep.fail("w=" + short_word(w), std::string("w ") + (lhs ? "free" : "not free") + ", mu(w) " +
                                                (rhs ? "free" : "not free"),
                     "equal verdicts");
    };
    const std::uint64_t exhaustive = std::min<std::uint64_t>(max_len, 20);
    for (std::uint64_t len = 0; len <= exhaustive; ++len)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) check(word_from_bits(bits, len));
    Rng rng(seed);
    for (std::uint64_t i = 0; i < sample_count; ++i) check(random_word(draw(rng, max_len + 1), rng));
    return rep;
}

CheckReport check_theorem3(std::uint64_t sample_count, std::uint64_t max_len, std::uint64_t seed,
                           std::int64_t length_slack) {
    CheckReport rep{"theorem3: runs of exponent > 2 in mu(w) halve into w", 0, {}};
    Rng rng(seed);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        const Word w = random_word(draw(rng, max_len + 1), rng);
        const Word image = mu(w);
        for (const Run& u : maximal_repetitions(image)) {
            if (u.length <= 2 * u.period) continue;
            ++rep.instances_tested;
            if (u.period % 2 != 0) {
                rep.fail("w=" + short_word(w) + " run " + run_str(u), "odd period", "even period");
                continue;
            }
            const std::uint64_t half = u.period / 2;
            const std::int64_t need = static_cast<std::int64_t>((u.length + 1) / 2) + length_slack;
            const Rational beta(need, static_cast<std::int64_t>(half));
            const bool found = beta >= Rational(2) && find_power_with_period(w, beta, half).has_value();
            if (!found)
                rep.fail("w=" + short_word(w) + " run " + run_str(u),
                         "no factor of period " + std::to_string(half) + " and length " + std::to_string(need),
                         "such a factor");
        }
    }
    return rep;
}

CheckReport check_lemma4(const Rational& alpha, std::uint64_t sample_count, std::uint64_t max_len,
                         std::uint64_t seed) {
    if (alpha <= Rational(2)) throw precondition_error("alpha must exceed 2 (got " + alpha.str() + ")");
    CheckReport rep{"lemma4: the only " + alpha.str() + "-power in 0^r v is the prefix 0^r", 0, {}};
    const auto r = static_cast<std::uint64_t>(alpha.ceil());
    Rng rng(seed);
    for (std::uint64_t i = 0; i <= sample_count; ++i) {
        // Instance 0 is v = eps.
        const Word w00v = i == 0 ? zeros(2) : sample_free_00v(alpha, max_len, rng);
        const Word v = delete_prefix(w00v, 2);
        const Word word = zeros(r) + v;
        ++rep.instances_tested;
        // Brute force over every (start, period): the longest factor there
        // with that period has p + streak[start] letters.
        const std::uint64_t n = word.size();
        std::vector<std::uint64_t> streak(n + 1, 0);
        for (std::uint64_t p = 1; p < n; ++p) {
            streak[n - p] = 0;
            for (std::uint64_t s = n - p; s-- > 0;) {
                streak[s] = word[s] == word[s + p] ? streak[s + 1] + 1 : 0;
                const std::uint64_t len = p + streak[s];
                if (compare_ratio(len, p, alpha) < 0) continue;
                if (s == 0 && p == 1 && len == r) continue;
                rep.fail("alpha=" + alpha.str() + " 00v=" + short_word(w00v),
                         "factor at " + std::to_string(s) + " with period " + std::to_string(p) + " and length " +
                             std::to_string(len),
                         "only the prefix 0^" + std::to_string(r));
            }
        }
    }
    return rep;
}

CheckReport check_lemma5(const ObtainableParams& params, const Rational& alpha, std::uint64_t sample_count,
                         std::uint64_t seed, std::uint64_t max_len) {
    if (alpha <= Rational(2)) throw precondition_error("alpha must exceed 2 (got " + alpha.str() + ")");
    const std::string tag = "(r=" + std::to_string(params.r) + ",s=" + std::to_string(params.s) +
                            ",t=" + std::to_string(params.t) + ",beta=" + params.beta.str() + ")";
    CheckReport rep{"lemma5: phi" + tag + " for alpha=" + alpha.str(), 0, {}};
    try {
        validate_schedule(Schedule{alpha, {params}});
    } catch (const precondition_error& e) {
        rep.fail("params " + tag, e.what(), "valid obtainable params for alpha=" + alpha.str());
    }
    if (params.s > max_schedule_s || params.t >= (params.r << params.s)) return rep;
    const std::uint64_t block = std::uint64_t{1} << params.s;
    Rng rng(seed);
    for (std::uint64_t i = 0; i <= sample_count; ++i) {
        const Word w00v = i == 0 ? zeros(2) : sample_free_00v(alpha, max_len, rng);
        const Word v = delete_prefix(w00v, 2);
        const Word image = phi(params, v);
        const std::string input = "00v=" + short_word(w00v);
        ++rep.instances_tested;

        if (image.size() < 2 || image[0] || image[1] || !in_language_L(image))
            rep.fail(input, "image " + short_word(image), "image 00... in L");

        const std::uint64_t prefix = periodic_prefix_length(image, block);
        if (compare_ratio(prefix, block, params.beta) < 0)
            rep.fail(input,
                     "prefix of period " + std::to_string(block) + " has " + std::to_string(prefix) + " letters",
                     "exponent >= " + params.beta.str());

        for (const Run& run : naive_runs(w00v)) {
            if (!find_power_with_period(image, run.exponent(), block * run.period))
                rep.fail(input + " run " + run_str(run),
                         "no " + run.exponent().str() + "-power of period " + std::to_string(block * run.period),
                         "scaled power in the image");
        }

        if (auto verdict = is_power_free(image, alpha); !verdict.is_free())
            rep.fail(input, "violation " + run_str(*verdict.violation), alpha.str() + "-power-free");
    }
    return rep;
}

CheckReport verify_constructed_word(const Schedule& schedule, const Word& word) {
    const Rational& alpha = schedule.target_alpha;
    CheckReport rep{"construction word for alpha=" + alpha.str(), 0, {}};
    const auto runs = maximal_repetitions(word);

    ++rep.instances_tested;
    if (auto verdict = is_power_free(runs, alpha); !verdict.is_free())
        rep.fail("|w|=" + std::to_string(word.size()), "violation " + run_str(*verdict.violation),
                 alpha.str() + "-power-free");

    for (const auto& wit : predicted_witnesses(schedule)) {
        ++rep.instances_tested;
        auto found = find_power_with_period(word, wit.beta, wit.period);
        if (!found || found->length < wit.min_length)
            rep.fail("level " + std::to_string(wit.level), "no " + wit.beta.str() + "-power of period " +
                                                               std::to_string(wit.period),
                     "witness of length >= " + std::to_string(wit.min_length));
    }

    ++rep.instances_tested;
    const Rational deepest = schedule.params.back().beta;
    const auto top = max_exponent(runs);
    if (!top || *top < deepest || *top >= alpha)
        rep.fail("|w|=" + std::to_string(word.size()), "max exponent " + (top ? top->str() : std::string("none")),
                 "in [" + deepest.str() + ", " + alpha.str() + ")");
    return rep;
}

CheckReport verify_construction(const Rational& alpha, std::size_t levels, std::uint64_t budget) {
    if (levels == 0) throw precondition_error("verify_construction: levels must be at least 1");
    const Schedule full = build_schedule(alpha, levels);
    CheckReport rep{"theorem6: construction for alpha=" + alpha.str() + " with " + std::to_string(levels) + " levels",
                    0, {}};

    Word previous;
    for (std::size_t n = 1; n <= levels; ++n) {
        Schedule sched{alpha, {full.params.begin(), full.params.begin() + static_cast<std::ptrdiff_t>(n)}};
        auto built = build_word(sched, budget, [&](std::size_t level, const Word& image) {
            ++rep.instances_tested;
            if (image.size() < 2 || image[0] || image[1] || !in_language_L(image))
                rep.fail("w_" + std::to_string(n) + " stage " + std::to_string(level), "image " + short_word(image),
                         "image 00... in L");
        });
        if (n > 1) {
            ++rep.instances_tested;
            if (!previous.is_prefix_of(built.word))
                rep.fail("w_" + std::to_string(n - 1) + " vs w_" + std::to_string(n), "not a prefix", "prefix");
        }
        if (n == levels) {
            auto part = verify_constructed_word(sched, built.word);
            rep.instances_tested += part.instances_tested;
            for (auto& f : part.failures) rep.failures.push_back(std::move(f));
        }
        previous = std::move(built.word);
    }
    return rep;
}

} // namespace critexp
