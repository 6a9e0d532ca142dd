#pragma once

#include <quandlekit/search.hpp>
#include <quandlekit/shq.hpp>
#include <quandlekit/structure.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace quandlekit {

inline constexpr const char * analysis_schema = "quandlekit.analysis/1";
inline constexpr const char * validation_schema = "quandlekit.validation/1";
inline constexpr const char * search_schema = "quandlekit.search/1";

struct AnalysisOptions {
    bool subquandles = false;
    bool verify_main_theorem = false;
    EnumerationLimits limits;
};

struct SubquandleSummary {
    std::size_t total = 0;
    std::vector<SubquandleClassSummary> classes; // one per isomorphism class, by (order, representative)
};

struct AnalysisReport {
    // a file path or construction parameters
    std::string source;
    bool valid = true;
    std::size_t order = 0;
    bool connected = false;
    bool latin = false;
    Profile profile;
    ShqClassification shq;
    std::optional<MainTheoremReport> main_theorem;
    std::optional<SubquandleSummary> subquandles;
};

auto analyze(const QuandleTable & q, const std::string & source, const AnalysisOptions & options = {})
    -> AnalysisReport;

auto to_json(const AnalysisReport & report) -> nlohmann::json;
auto validation_json(const std::string & source, const ValidationResult & result, std::size_t order) -> nlohmann::json;
// No timing fields, so equal specs give equal manifests.
auto search_manifest(const SearchSpec & spec, const SearchResult & result) -> nlohmann::json;

// Two-space indentation, keys sorted, trailing newline.
auto dump(const nlohmann::json & doc) -> std::string;

} // namespace quandlekit
