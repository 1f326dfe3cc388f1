#pragma once

#include "critexp/construction.hpp"
#include "critexp/repetition.hpp"
#include "critexp/verification.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace critexp {

/// Everything `analyze` reports about one word.
struct AnalysisReport {
    std::uint64_t length = 0;
    std::vector<Run> runs;
    std::optional<Run> max_run;
    std::optional<Rational> alpha;
    std::optional<PowerFreeVerdict> verdict;
};

AnalysisReport analyze(const Word& w, const std::optional<Rational>& alpha = std::nullopt);

std::string render_text(const AnalysisReport& report, std::size_t max_runs);

nlohmann::ordered_json to_json(const Run& run);
nlohmann::ordered_json to_json(const AnalysisReport& report);
nlohmann::ordered_json to_json(const Schedule& schedule);
nlohmann::ordered_json to_json(const std::vector<PredictedWitness>& witnesses);
nlohmann::ordered_json to_json(const CheckReport& report);

} // namespace critexp
