#include "critexp/construction.hpp"

#include "critexp/errors.hpp"

#include <limits>
#include <sstream>

namespace critexp {

namespace {

using i128 = __int128;

void require_alpha(const Rational& alpha) {
    if (alpha <= Rational(2)) throw precondition_error("alpha must exceed 2 (got " + alpha.str() + ")");
}

bool is_00_position(std::uint64_t t) { return !thue_morse_letter(t) && !thue_morse_letter(t + 1); }

std::uint64_t checked_image_length(unsigned s, std::uint64_t r, std::uint64_t inner, std::uint64_t t) {
    const i128 len = (static_cast<i128>(r) + inner) * (static_cast<i128>(1) << s) - t;
    if (s > max_schedule_s || len > static_cast<i128>(std::numeric_limits<std::int64_t>::max()))
        throw size_error("construction length overflows 64 bits");
    return static_cast<std::uint64_t>(len);
}

} // namespace

std::optional<ObtainableParams> find_obtainable(const Rational& alpha, unsigned s) {
    require_alpha(alpha);
    if (s < 3) throw precondition_error("find_obtainable: s must be at least 3 (got " + std::to_string(s) + ")");
    if (s > max_schedule_s) throw size_error("find_obtainable: 2^" + std::to_string(s) + " overflows");

    const std::int64_t r = alpha.ceil();
    const i128 block = static_cast<i128>(1) << s;
    // t * den > (r * den - num) * 2^s
    const i128 gap_num = (static_cast<i128>(r) * alpha.den() - alpha.num()) * block;
    const i128 first = gap_num / alpha.den() + 1;
    const i128 upper = std::min(static_cast<i128>(r - 2) * block, block - 1); // t < upper, t + 1 < 2^s
    for (i128 t = first; t < upper; ++t) {
        const auto tt = static_cast<std::uint64_t>(t);
        if (is_00_position(tt)) {
            ObtainableParams p;
            p.r = static_cast<std::uint64_t>(r);
            p.s = s;
            p.t = tt;
            p.beta = Rational(r) - Rational(static_cast<std::int64_t>(tt), static_cast<std::int64_t>(block));
            return p;
        }
    }
    return std::nullopt;
}

Schedule build_schedule(const Rational& alpha, std::size_t n, std::optional<unsigned> s_start) {
    require_alpha(alpha);
    if (n == 0) throw precondition_error("build_schedule: need at least one level");
    Schedule out{alpha, {}};
    for (unsigned s = std::max(3u, s_start.value_or(3)); out.params.size() < n; ++s) {
        if (s > max_schedule_s)
            throw size_error("build_schedule: exhausted s <= " + std::to_string(max_schedule_s) + " after " +
                             std::to_string(out.params.size()) + " levels");
        auto p = find_obtainable(alpha, s);
        if (!p) continue;
        if (!out.params.empty() && p->beta < out.params.back().beta) continue;
        out.params.push_back(*p);
    }
    return out;
}

void validate_schedule(const Schedule& schedule) {
    const Rational& alpha = schedule.target_alpha;
    require_alpha(alpha);
    for (std::size_t i = 0; i < schedule.params.size(); ++i) {
        const auto& p = schedule.params[i];
        const std::string where = "schedule level " + std::to_string(i + 1) + ": ";
        if (p.s < 3 || p.s > max_schedule_s) throw precondition_error(where + "s out of range");
        if (p.r != static_cast<std::uint64_t>(alpha.ceil())) throw precondition_error(where + "r must be ceil(alpha)");
        const auto block = std::int64_t{1} << p.s;
        if (p.t + 1 >= static_cast<std::uint64_t>(block) || !is_00_position(p.t))
            throw precondition_error(where + "t is not a 00 position of mu^s(0)");
        if (p.beta != Rational(static_cast<std::int64_t>(p.r)) - Rational(static_cast<std::int64_t>(p.t), block))
            throw precondition_error(where + "beta != r - t/2^s");
        if (p.beta <= Rational(2) || p.beta >= alpha) throw precondition_error(where + "beta must lie in (2, alpha)");
        if (i > 0) {
            const auto& prev = schedule.params[i - 1];
            if (p.s <= prev.s) throw precondition_error(where + "s must strictly increase");
            if (p.beta < prev.beta) throw precondition_error(where + "beta must not decrease");
        }
    }
}

Word phi(const ObtainableParams& params, const Word& w) {
    return delete_prefix(mu_pow(zeros(params.r) + w, params.s), params.t);
}

std::uint64_t predicted_length(const Schedule& schedule) {
    std::uint64_t inner = 0;
    std::uint64_t out = 0;
    for (auto it = schedule.params.rbegin(); it != schedule.params.rend(); ++it) {
        out = checked_image_length(it->s, it->r, inner, it->t);
        inner = out - 2;
    }
    return out;
}

std::vector<PredictedWitness> predicted_witnesses(const Schedule& schedule) {
    std::vector<PredictedWitness> out;
    unsigned total_s = 0;
    for (std::size_t i = 0; i < schedule.params.size(); ++i) {
        const auto& p = schedule.params[i];
        total_s += p.s;
        if (total_s > max_schedule_s) throw size_error("witness period 2^" + std::to_string(total_s) + " overflows");
        const auto period = std::uint64_t{1} << total_s;
        const Rational min_len = p.beta * Rational(static_cast<std::int64_t>(period));
        out.push_back({i + 1, period, static_cast<std::uint64_t>(min_len.ceil()), p.beta});
    }
    return out;
}

Construction build_word(const Schedule& schedule, std::uint64_t budget, const StageObserver& observer) {
    if (schedule.params.empty()) throw precondition_error("build_word: empty schedule");

    // Check every level's size before materializing anything.
    {
        std::uint64_t inner = 0;
        for (std::size_t level = schedule.params.size(); level-- > 0;) {
            const auto& p = schedule.params[level];
            const std::uint64_t len = checked_image_length(p.s, p.r, inner, p.t);
            if (len > budget)
                throw size_error("level " + std::to_string(level + 1) + " image needs " + std::to_string(len) +
                                 " letters, over the budget of " + std::to_string(budget));
            inner = len - 2;
        }
    }

    Word inner;
    Word image;
    for (std::size_t level = schedule.params.size(); level-- > 0;) {
        image = phi(schedule.params[level], inner);
        if (observer) observer(level + 1, image);
        if (level > 0) inner = delete_prefix(image, 2);
    }
    return {std::move(image), predicted_witnesses(schedule)};
}

Word word_prefix(const Rational& alpha, std::uint64_t target_len, std::uint64_t budget) {
    require_alpha(alpha);
    if (target_len == 0) throw precondition_error("word_prefix: target length must be positive");
    if (target_len > budget)
        throw size_error("target length " + std::to_string(target_len) + " exceeds the budget of " +
                         std::to_string(budget) + " letters");
    for (std::size_t n = 1;; ++n) {
        const Schedule schedule = build_schedule(alpha, n);
        if (predicted_length(schedule) >= target_len) {
            Word w = build_word(schedule, budget).word;
            w.truncate(target_len);
            return w;
        }
    }
}

std::string format_schedule_table(const Schedule& schedule) {
    std::ostringstream os;
    os << "# alpha " << schedule.target_alpha.str() << "\n";
    os << "# level r s t beta_num beta_den\n";
    for (std::size_t i = 0; i < schedule.params.size(); ++i) {
        const auto& p = schedule.params[i];
        os << (i + 1) << ' ' << p.r << ' ' << p.s << ' ' << p.t << ' ' << p.beta.num() << ' ' << p.beta.den() << "\n";
    }
    return os.str();
}

Schedule parse_schedule_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::optional<Rational> alpha;
    Schedule out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key, value;
            if (hs >> key >> value && key == "alpha") alpha = Rational::parse(value);
            continue;
        }
        std::istringstream ls(line);
        std::size_t level = 0;
        ObtainableParams p;
        std::int64_t bn = 0, bd = 0;
        std::string extra;
        if (!(ls >> level >> p.r >> p.s >> p.t >> bn >> bd) || (ls >> extra) || bd <= 0)
            throw format_error("malformed schedule row: '" + line + "'");
        if (level != out.params.size() + 1) throw format_error("schedule rows must be numbered 1, 2, ...");
        p.beta = Rational(bn, bd);
        out.params.push_back(p);
    }
    if (!alpha) throw format_error("schedule table lacks an '# alpha p/q' line");
    out.target_alpha = *alpha;
    validate_schedule(out);
    return out;
}

} // namespace critexp
