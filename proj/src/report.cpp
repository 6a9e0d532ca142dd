#include <quandlekit/report.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

namespace quandlekit {

using nlohmann::json;

namespace {
    auto structure_json(const CycleStructure & s) -> json
    {
        return json{{"lengths", s.lengths()}, {"text", s.to_string()}};
    }

    auto profile_json(const Profile & p) -> json
    {
        json out;
        out["text"] = p.to_string();
        out["structures"] = json::array();
        for (const auto & s : p.structures)
            out["structures"].push_back(structure_json(s));
        out["connected_form"] = p.connected_form ? structure_json(*p.connected_form) : json(nullptr);
        return out;
    }

    auto check_json(const Check & c) -> json
    {
        return json{{"passed", c.passed}, {"detail", c.detail}, {"witness", c.witness}};
    }

    auto class_json(const SubquandleClassSummary & c) -> json
    {
        return json{
            {"order", c.order},
            {"profile", c.profile.to_string()},
            {"members", c.members},
            {"matches_prefix", c.matches_prefix},
            {"representative", labels_of(c.representative)},
        };
    }

    auto shq_json(const ShqClassification & s) -> json
    {
        json out{{"is_shq", s.is_shq()}, {"diagnostic", s.diagnostic}};
        if (s.params)
            out["params"] = json{{"ell", s.params->ell}, {"c", s.params->c}, {"p", s.params->p}, {"a", s.params->a}};
        else
            out["params"] = nullptr;
        return out;
    }

    auto summarize(const SubquandleInventory & inventory) -> SubquandleSummary
    {
        SubquandleSummary summary;
        summary.total = inventory.subquandles.size();
        std::map<std::size_t, std::size_t> members;
        for (const auto & entry : inventory.subquandles)
            ++members[entry.class_representative];
        for (auto rep : inventory.class_representatives()) {
            const auto & entry = inventory.subquandles[rep];
            SubquandleClassSummary c;
            c.order = entry.elements.size();
            c.profile = entry.profile;
            c.members = members[rep];
            c.representative = entry.elements;
            summary.classes.push_back(std::move(c));
        }
        return summary;
    }
}

auto analyze(const QuandleTable & q, const std::string & source, const AnalysisOptions & options) -> AnalysisReport
{
    AnalysisReport report;
    report.source = source;
    report.order = q.order();
    report.connected = is_connected(q);
    report.latin = is_latin(q);
    report.profile = profile(q);
    report.shq = classify_shq(q);
    if (options.verify_main_theorem && report.shq.is_shq())
        report.main_theorem = verify_main_theorem(q, options.limits);
    if (options.subquandles)
        report.subquandles = summarize(enumerate_subquandles(q, options.limits));
    return report;
}

auto to_json(const AnalysisReport & report) -> json
{
    json out{
        {"schema", analysis_schema},
        {"source", report.source},
        {"valid", report.valid},
        {"order", report.order},
        {"connected", report.connected},
        {"latin", report.latin},
        {"profile", profile_json(report.profile)},
        {"shq", shq_json(report.shq)},
    };
    if (report.main_theorem) {
        const auto & m = *report.main_theorem;
        json classes = json::array();
        for (const auto & c : m.classes)
            classes.push_back(class_json(c));
        out["main_theorem"] = json{
            {"all_passed", m.all_passed()},
            {"order", check_json(m.order_check)},
            {"profile", check_json(m.profile_check)},
            {"prime_power", check_json(m.prime_power_check)},
            {"subquandles", check_json(m.subquandle_check)},
            {"classes", classes},
        };
    }
    else
        out["main_theorem"] = nullptr;
    if (report.subquandles) {
        json classes = json::array();
        for (const auto & c : report.subquandles->classes)
            classes.push_back(class_json(c));
        out["subquandles"] = json{{"total", report.subquandles->total}, {"classes", classes}};
    }
    else
        out["subquandles"] = nullptr;
    return out;
}

auto validation_json(const std::string & source, const ValidationResult & result, std::size_t order) -> json
{
    json out{{"schema", validation_schema}, {"source", source}, {"valid", result.ok()}, {"order", order}};
    if (result.violation)
        out["violation"] = json{
            {"kind", to_string(result.violation->kind)},
            {"witness", result.violation->witness},
            {"message", result.violation->message()},
        };
    else
        out["violation"] = nullptr;
    return out;
}

auto search_manifest(const SearchSpec & spec, const SearchResult & result) -> json
{
    std::string profile_text = "(";
    for (std::size_t i = 0; i < spec.target_profile.size(); ++i)
        profile_text += (i ? "," : "") + std::to_string(spec.target_profile[i]);
    profile_text += ")";

    json files = json::array();
    for (std::size_t k = 0; k < result.quandles.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "result_%04zu.qdl", k + 1);
        files.push_back(name);
    }
    json classes = json::array();
    for (const auto & cls : result.iso_classes) {
        json members = json::array();
        for (auto k : cls)
            members.push_back(k + 1);
        classes.push_back(members);
    }
    json generators = json::array();
    for (const auto & g : result.stats.generators)
        generators.push_back(
            json{{"element", g.element}, {"generated", g.generated}, {"block_consistent", g.block_consistent}});

    const auto & s = result.stats;
    return json{
        {"schema", search_schema},
        {"profile", profile_text},
        {"order", std::accumulate(spec.target_profile.begin(), spec.target_profile.end(), std::size_t{0})},
        {"count", result.quandles.size()},
        {"truncated", result.truncated},
        {"dedup", spec.dedup_isomorphic},
        {"iso_class_count", spec.dedup_isomorphic ? json(result.iso_classes.size()) : json(nullptr)},
        {"iso_classes", spec.dedup_isomorphic ? classes : json(nullptr)},
        {"files", files},
        {"stats",
            json{
                {"raw_space", s.raw_space},
                {"generators", generators},
                {"partial_pruned", s.partial_pruned},
                {"tuples_examined", s.tuples_examined},
                {"conjugation_consistent", s.conjugation_consistent},
                {"distributive", s.distributive},
                {"connected", s.connected},
                {"profile_matched", s.profile_matched},
            }},
    };
}

auto dump(const json & doc) -> std::string
{
    return doc.dump(2) + "\n";
}

} // namespace quandlekit
