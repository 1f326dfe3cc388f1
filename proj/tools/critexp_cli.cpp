// critexp: build binary words of prescribed critical exponent and analyze repetitions.

#include "critexp/construction.hpp"
#include "critexp/errors.hpp"
#include "critexp/report.hpp"
#include "critexp/repetition.hpp"
#include "critexp/verification.hpp"
#include "critexp/word_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace critexp;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_size = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_alpha(const std::string& text) {
    Rational alpha;
    try {
        alpha = Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("--alpha: '" + text + "' is not an exact rational (use p/q or a finite decimal)");
    }
    if (alpha <= Rational(2)) throw UsageError("alpha must exceed 2 (got " + alpha.str() + ")");
    return alpha;
}

struct GenerateOptions {
    std::string alpha;
    std::size_t levels = 3;
    std::optional<std::uint64_t> target_len;
    std::string out;
    std::string format = "text";
    std::string report;
    std::string schedule_in;
    std::uint64_t budget = default_letter_budget;
};

struct AnalyzeOptions {
    std::string input;
    std::string alpha;
    std::string format = "auto";
    std::string report;
    std::size_t max_runs = 100;
};

struct BetasOptions {
    std::string alpha;
    unsigned s_min = 3;
    unsigned s_max = 14;
};

struct VerifyOptions {
    std::string alpha;
    std::size_t levels = 3;
    std::uint64_t seed = default_seed;
    unsigned lemma1_s_max = 10;
    std::uint64_t t2_max_len = 14;
    std::uint64_t t2_samples = 0;
    std::uint64_t t3_samples = 10000;
    std::uint64_t t3_max_len = 64;
    std::uint64_t l4_samples = 1000;
    std::uint64_t l4_max_len = 128;
    std::uint64_t l5_samples = 200;
    std::uint64_t budget = default_letter_budget;
    std::string report;
};

void print_schedule(const Schedule& schedule, const std::vector<PredictedWitness>& witnesses) {
    std::cout << format_schedule_table(schedule);
    std::cout << "# witness level period min_length beta\n";
    for (const auto& w : witnesses)
        std::cout << "witness " << w.level << ' ' << w.period << ' ' << w.min_length << ' ' << w.beta.str() << "\n";
}

int cmd_generate(const GenerateOptions& o) {
    const Rational alpha = parse_alpha(o.alpha);
    if (o.format != "text" && o.format != "packed" && o.format != "report")
        throw UsageError("--format must be text, packed or report");
    if (o.levels == 0) throw UsageError("--levels must be at least 1");
    if (o.target_len && *o.target_len == 0) throw UsageError("--target-len must be positive");

    Schedule schedule;
    if (!o.schedule_in.empty()) {
        try {
            schedule = parse_schedule_table(io::read_file(o.schedule_in));
        } catch (const std::exception& e) {
            throw UsageError(std::string("--schedule: ") + e.what());
        }
        if (schedule.target_alpha != alpha) throw UsageError("--schedule: table is for alpha " + schedule.target_alpha.str());
        if (schedule.params.empty()) throw UsageError("--schedule: table has no rows");
    } else if (o.target_len) {
        if (*o.target_len > o.budget)
            throw size_error("--target-len " + std::to_string(*o.target_len) + " exceeds the budget of " +
                             std::to_string(o.budget) + " letters");
        for (std::size_t n = 1;; ++n) {
            schedule = build_schedule(alpha, n);
            if (predicted_length(schedule) >= *o.target_len) break;
        }
    } else {
        schedule = build_schedule(alpha, o.levels);
    }

    Construction built = build_word(schedule, o.budget);
    if (o.target_len) {
        if (*o.target_len > built.word.size())
            throw UsageError("--target-len exceeds the length of the scheduled word");
        built.word.truncate(*o.target_len);
    }

    print_schedule(schedule, built.witnesses);
    std::cout << "length " << built.word.size() << "\n";

    nlohmann::ordered_json meta;
    meta["alpha"] = alpha.str();
    meta["schedule"] = to_json(schedule);
    meta["witnesses"] = to_json(built.witnesses);
    meta["length"] = built.word.size();

    if (o.out.empty()) {
        std::cout << "word " << built.word.to_string() << "\n";
    } else if (o.format == "text") {
        io::write_word(o.out, built.word, io::WordFormat::text);
    } else if (o.format == "packed") {
        io::write_word(o.out, built.word, io::WordFormat::packed);
    } else {
        auto j = meta;
        j["word"] = built.word.to_string();
        io::write_file(o.out, j.dump(2) + "\n");
    }
    if (!o.report.empty()) io::write_file(o.report, meta.dump(2) + "\n");
    return exit_ok;
}

int cmd_analyze(const AnalyzeOptions& o) {
    std::optional<Rational> alpha;
    if (!o.alpha.empty()) alpha = parse_alpha(o.alpha);
    if (o.input.empty()) throw UsageError("analyze: an input file is required");

    Word w;
    try {
        if (o.format == "auto")
            w = io::read_word(o.input);
        else if (o.format == "text")
            w = io::read_word(o.input, io::WordFormat::text);
        else if (o.format == "packed")
            w = io::read_word(o.input, io::WordFormat::packed);
        else
            throw UsageError("--format must be auto, text or packed");
    } catch (const format_error& e) {
        throw UsageError(std::string("malformed input: ") + e.what());
    }

    const AnalysisReport report = analyze(w, alpha);
    std::cout << render_text(report, o.max_runs);
    if (!o.report.empty()) io::write_file(o.report, to_json(report).dump(2) + "\n");
    return report.verdict && !report.verdict->is_free() ? exit_violation : exit_ok;
}

int cmd_betas(const BetasOptions& o) {
    const Rational alpha = parse_alpha(o.alpha);
    if (o.s_min < 3) throw UsageError("--s-min must be at least 3");
    if (o.s_max < o.s_min) throw UsageError("--s-max must not be below --s-min");
    if (o.s_max > max_schedule_s) throw UsageError("--s-max must be at most " + std::to_string(max_schedule_s));

    std::cout << "# alpha " << alpha.str() << " r " << alpha.ceil() << "\n";
    std::cout << "# s t beta beta_decimal alpha_minus_beta bound_7_over_2^s\n";
    for (unsigned s = o.s_min; s <= o.s_max; ++s) {
        const auto p = find_obtainable(alpha, s);
        if (!p) {
            std::cout << s << " none\n";
            continue;
        }
        const Rational gap = alpha - p->beta;
        const Rational bound(7, std::int64_t{1} << s);
        std::cout << s << ' ' << p->t << ' ' << p->beta.str() << ' ' << p->beta.decimal(8) << ' ' << gap.str() << ' '
                  << bound.str() << (gap <= bound ? "" : " EXCEEDS") << "\n";
    }
    return exit_ok;
}

int cmd_verify(const VerifyOptions& o) {
    const Rational alpha = parse_alpha(o.alpha);
    if (o.levels == 0) throw UsageError("--levels must be at least 1");
    if (o.lemma1_s_max == 0) throw UsageError("--lemma1-s-max must be at least 1");

    std::vector<CheckReport> reports;
    auto run = [&](CheckReport rep) {
        std::cout << render_text(rep) << std::flush;
        reports.push_back(std::move(rep));
    };
    run(check_lemma1(o.lemma1_s_max));
    run(check_theorem2(o.t2_samples, o.t2_max_len, alpha, o.seed));
    run(check_theorem3(o.t3_samples, o.t3_max_len, o.seed));
    run(check_lemma4(alpha, o.l4_samples, o.l4_max_len, o.seed));
    const Schedule schedule = build_schedule(alpha, o.levels);
    for (const auto& p : schedule.params) run(check_lemma5(p, alpha, o.l5_samples, o.seed));
    run(verify_construction(alpha, o.levels, o.budget));

    bool ok = true;
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        j.push_back(to_json(r));
    }
    std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
    if (!o.report.empty()) io::write_file(o.report, j.dump(2) + "\n");
    return ok ? exit_ok : exit_violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary words with prescribed critical exponent"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* g = app.add_subcommand("generate", "Construct a prefix of the limit word for alpha");
    g->add_option("--alpha", gen.alpha, "Target critical exponent (p/q or finite decimal, > 2)")->required();
    g->add_option("--levels", gen.levels, "Number of nested levels")->capture_default_str();
    g->add_option("--target-len", gen.target_len, "Emit exactly this many letters");
    g->add_option("--out", gen.out, "Output path (word goes to stdout when omitted)");
    g->add_option("--format", gen.format, "text, packed or report")->capture_default_str();
    g->add_option("--report", gen.report, "Write a JSON report of schedule and witnesses");
    g->add_option("--schedule", gen.schedule_in, "Read the schedule from a table instead of the canonical one");
    g->add_option("--budget", gen.budget, "Maximum letters per constructed word")->capture_default_str();

    AnalyzeOptions ana;
    auto* a = app.add_subcommand("analyze", "Report runs, max exponent and freeness of a word file");
    a->add_option("input", ana.input, "Word file (text or packed)");
    a->add_option("--in", ana.input, "Word file (text or packed)");
    a->add_option("--alpha", ana.alpha, "Check alpha-power-freeness (exit 1 on violation)");
    a->add_option("--format", ana.format, "auto, text or packed")->capture_default_str();
    a->add_option("--report", ana.report, "Write the full JSON analysis report");
    a->add_option("--max-runs", ana.max_runs, "Runs listed on stdout")->capture_default_str();

    BetasOptions bet;
    auto* b = app.add_subcommand("betas", "Tabulate obtainable exponents below alpha");
    b->add_option("--alpha", bet.alpha, "Target exponent")->required();
    b->add_option("--s-min", bet.s_min)->capture_default_str();
    b->add_option("--s-max", bet.s_max)->capture_default_str();

    VerifyOptions ver;
    auto* v = app.add_subcommand("verify", "Run every checker");
    v->add_option("--alpha", ver.alpha, "Target exponent")->required();
    v->add_option("--levels", ver.levels)->capture_default_str();
    v->add_option("--seed", ver.seed)->capture_default_str();
    v->add_option("--lemma1-s-max", ver.lemma1_s_max)->capture_default_str();
    v->add_option("--t2-max-len", ver.t2_max_len, "Exhaustive word length for the mu-freeness check")
        ->capture_default_str();
    v->add_option("--t2-samples", ver.t2_samples)->capture_default_str();
    v->add_option("--t3-samples", ver.t3_samples)->capture_default_str();
    v->add_option("--t3-max-len", ver.t3_max_len)->capture_default_str();
    v->add_option("--l4-samples", ver.l4_samples)->capture_default_str();
    v->add_option("--l4-max-len", ver.l4_max_len)->capture_default_str();
    v->add_option("--l5-samples", ver.l5_samples)->capture_default_str();
    v->add_option("--budget", ver.budget)->capture_default_str();
    v->add_option("--report", ver.report, "Write the JSON check reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*g) return cmd_generate(gen);
        if (*a) return cmd_analyze(ana);
        if (*b) return cmd_betas(bet);
        if (*v) return cmd_verify(ver);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const size_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return exit_size;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
