#include "critexp/report.hpp"

#include <sstream>

namespace critexp {

AnalysisReport analyze(const Word& w, const std::optional<Rational>& alpha) {
    AnalysisReport rep;
    rep.length = w.size();
    rep.runs = maximal_repetitions(w);
    rep.max_run = max_exponent_run(rep.runs);
    rep.alpha = alpha;
    if (alpha) rep.verdict = is_power_free(rep.runs, *alpha);
    return rep;
}

std::string render_text(const AnalysisReport& report, std::size_t max_runs) {
    std::ostringstream os;
    os << "length: " << report.length << "\n";
    os << "runs: " << report.runs.size() << "\n";
    for (std::size_t i = 0; i < std::min(max_runs, report.runs.size()); ++i) {
        const Run& r = report.runs[i];
        os << "  start=" << r.start << " period=" << r.period << " length=" << r.length
           << " exponent=" << r.exponent().str() << "\n";
    }
    if (report.runs.size() > max_runs) os << "  ... " << (report.runs.size() - max_runs) << " more\n";
    if (report.max_run) {
        const Run& m = *report.max_run;
        os << "max exponent: " << m.exponent().str() << " (" << m.exponent().decimal() << ") at start=" << m.start
           << " period=" << m.period << " length=" << m.length << "\n";
    } else {
        os << "max exponent: none\n";
    }
    if (report.alpha && report.verdict) {
        if (report.verdict->is_free()) {
            os << "verdict: " << report.alpha->str() << "-power-free\n";
        } else {
            const Run& v = *report.verdict->violation;
            os << "verdict: contains a " << report.alpha->str() << "-power; witness (" << v.start << "," << v.period
               << "," << v.length << ") exponent " << v.exponent().str() << "\n";
        }
    }
    return os.str();
}

nlohmann::ordered_json to_json(const Run& run) {
    return {{"start", run.start}, {"period", run.period}, {"length", run.length}, {"exponent", run.exponent().str()}};
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
    nlohmann::ordered_json j;
    j["length"] = report.length;
    j["runs"] = nlohmann::ordered_json::array();
    for (const Run& r : report.runs) j["runs"].push_back(to_json(r));
    j["max_exponent"] = report.max_run ? nlohmann::ordered_json(report.max_run->exponent().str()) : nullptr;
    j["max_run"] = report.max_run ? to_json(*report.max_run) : nlohmann::ordered_json(nullptr);
    j["alpha"] = report.alpha ? nlohmann::ordered_json(report.alpha->str()) : nullptr;
    if (report.verdict) {
        j["verdict"] = report.verdict->is_free() ? "free" : "violation";
        j["witness"] = report.verdict->is_free() ? nlohmann::ordered_json(nullptr) : to_json(*report.verdict->violation);
    } else {
        j["verdict"] = nullptr;
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json to_json(const Schedule& schedule) {
    nlohmann::ordered_json j;
    j["alpha"] = schedule.target_alpha.str();
    j["levels"] = nlohmann::ordered_json::array();
    for (const auto& p : schedule.params)
        j["levels"].push_back(
            {{"r", p.r}, {"s", p.s}, {"t", p.t}, {"beta_num", p.beta.num()}, {"beta_den", p.beta.den()}});
    return j;
}

nlohmann::ordered_json to_json(const std::vector<PredictedWitness>& witnesses) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& w : witnesses)
        j.push_back({{"level", w.level}, {"period", w.period}, {"min_length", w.min_length}, {"beta", w.beta.str()}});
    return j;
}

nlohmann::ordered_json to_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["name"] = report.check_name;
    j["tested"] = report.instances_tested;
    j["passed"] = report.passed();
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& f : report.failures)
        j["counterexamples"].push_back({{"inputs", f.inputs}, {"observed", f.observed}, {"expected", f.expected}});
    return j;
}

} // namespace critexp
