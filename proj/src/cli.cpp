#include <quandlekit/cli.hpp>
#include <quandlekit/construct.hpp>
#include <quandlekit/qdl.hpp>
#include <quandlekit/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace quandlekit::cli {

namespace {
    auto env_max_order() -> std::optional<std::size_t>
    {
        const char * value = std::getenv("QUANDLEKIT_MAX_ORDER");
        if (! value || ! *value)
            return std::nullopt;
        std::size_t parsed = 0;
        const auto * end = value + std::char_traits<char>::length(value);
        auto [ptr, ec] = std::from_chars(value, end, parsed);
        if (ec != std::errc{} || ptr != end)
            return std::nullopt;
        return parsed;
    }

    auto resolve_cap(std::optional<std::size_t> flag, std::size_t fallback) -> std::size_t
    {
        if (flag)
            return *flag;
        if (auto env = env_max_order())
            return *env;
        return fallback;
    }

    auto yes_no(bool b) -> const char * { return b ? "yes" : "no"; }

    auto profile_text(const std::vector<std::uint64_t> & lengths) -> std::string
    {
        std::string s = "(";
        for (std::size_t i = 0; i < lengths.size(); ++i)
            s += (i ? "," : "") + std::to_string(lengths[i]);
        return s + ")";
    }

    struct Loaded {
        std::optional<QuandleTable> table;
        ValidationResult validation;
        std::size_t order = 0;
    };

    // Parse errors propagate as QdlParseError.
    auto load(const std::string & path) -> Loaded
    {
        auto doc = read_qdl_file(path);
        Loaded loaded;
        loaded.order = doc.rows.size();
        loaded.validation = validate_quandle(doc.rows);
        if (loaded.validation.ok())
            loaded.table = QuandleTable::from_rows(doc.rows);
        return loaded;
    }

    void print_check(std::ostream & out, const char * name, const Check & c)
    {
        out << "  " << name << ": " << (c.passed ? "pass" : "FAIL");
        if (! c.detail.empty())
            out << " (" << c.detail << ")";
        out << "\n";
    }

    void print_analysis(std::ostream & out, const AnalysisReport & r)
    {
        out << "source: " << r.source << "\n";
        out << "order: " << r.order << "\n";
        out << "connected: " << yes_no(r.connected) << "\n";
        out << "latin: " << yes_no(r.latin) << "\n";
        out << "profile: " << r.profile.to_string() << "\n";
        if (r.shq.params) {
            const auto & p = *r.shq.params;
            out << "shq: yes (l=" << p.ell << " c=" << p.c << " p=" << p.p << " a=" << p.a << ")\n";
        }
        else
            out << "shq: no (" << r.shq.diagnostic << ")\n";
        if (r.main_theorem) {
            const auto & m = *r.main_theorem;
            out << "main theorem: " << (m.all_passed() ? "pass" : "FAIL") << "\n";
            print_check(out, "order", m.order_check);
            print_check(out, "profile", m.profile_check);
            print_check(out, "prime power", m.prime_power_check);
            print_check(out, "subquandles", m.subquandle_check);
        }
        if (r.subquandles) {
            out << "subquandles: " << r.subquandles->total << " total, " << r.subquandles->classes.size()
                << " isomorphism classes\n";
            for (const auto & c : r.subquandles->classes)
                out << "  order " << c.order << " " << c.profile.to_string() << " x" << c.members << "\n";
        }
    }

    auto shq_lengths(const std::string & text, std::ostream & err) -> std::optional<std::vector<std::uint64_t>>
    {
        auto lengths = parse_profile_argument(text);
        if (! lengths)
            err << "error: cannot parse profile '" << text << "'; expected comma-separated ascending integers\n";
        return lengths;
    }

    struct Options {
        std::string path;
        bool json = false;
        bool subquandles = false;
        bool verify = false;
        std::optional<std::size_t> max_order;

        std::string kind;
        std::uint64_t modulus = 0;
        std::int64_t multiplier = 0;
        std::uint64_t p = 0;
        std::uint32_t c = 0;
        std::uint32_t a = 1;
        std::string out_path;

        std::string profile;
        bool dedup = false;
        unsigned threads = 1;
        std::optional<std::size_t> max_results;
    };

    auto cmd_validate(const Options & o, std::ostream & out, std::ostream & err) -> int
    {
        auto loaded = load(o.path);
        if (o.json)
            out << dump(validation_json(o.path, loaded.validation, loaded.order));
        if (loaded.validation.ok()) {
            if (! o.json)
                out << "valid quandle of order " << loaded.order << "\n";
            return exit_ok;
        }
        const auto & v = *loaded.validation.violation;
        (o.json ? err : out) << "invalid: " << to_string(v.kind) << ": " << v.message() << "\n";
        return exit_negative;
    }

    auto cmd_analyze(const Options & o, std::ostream & out, std::ostream & err) -> int
    {
        auto loaded = load(o.path);
        if (! loaded.table) {
            const auto & v = *loaded.validation.violation;
            err << "invalid: " << to_string(v.kind) << ": " << v.message() << "\n";
            return exit_negative;
        }
        AnalysisOptions options;
        options.subquandles = o.subquandles;
        options.verify_main_theorem = o.verify;
        options.limits.max_order = resolve_cap(o.max_order, options.limits.max_order);
        auto report = analyze(*loaded.table, o.path, options);
        if (o.json)
            out << dump(to_json(report));
        else
            print_analysis(out, report);
        return exit_ok;
    }

    auto cmd_construct(const Options & o, std::ostream & out, std::ostream &) -> int
    {
        std::optional<QuandleTable> q;
        std::string label;
        if (o.kind == "affine") {
            q = affine_quandle(o.modulus, o.multiplier);
            label = "affine m=" + std::to_string(o.modulus) + " h=" + std::to_string(o.multiplier);
        }
        else if (o.kind == "shq-family") {
            q = shq_family(o.p, o.c);
            label = "shq-family p=" + std::to_string(o.p) + " c=" + std::to_string(o.c);
        }
        else if (o.kind == "galois") {
            if (o.multiplier < 0)
                throw QuandleError(ErrorKind::ParamOutOfRange, "galois multiplier is a field index >= 0");
            q = galois_affine_quandle(static_cast<std::uint32_t>(o.p), o.a,
                static_cast<GaloisField::element_type>(o.multiplier));
            label = "galois p=" + std::to_string(o.p) + " a=" + std::to_string(o.a)
                + " h=" + std::to_string(o.multiplier);
        }
        else {
            q = cyclic_type_quandle(static_cast<std::uint32_t>(o.p), o.a);
            label = "cyclic p=" + std::to_string(o.p) + " a=" + std::to_string(o.a);
        }
        const auto prof = profile(*q).to_string();
        std::vector<std::string> comments{"# " + label, "# profile " + prof};
        if (o.out_path.empty()) {
            out << format_qdl(*q, comments);
            return exit_ok;
        }
        write_qdl_file(o.out_path, *q, comments);
        out << "order " << q->order() << "\n"
            << "profile " << prof << "\n";
        return exit_ok;
    }

    auto cmd_search(const Options & o, std::ostream & out, std::ostream & err) -> int
    {
        auto lengths = shq_lengths(o.profile, err);
        if (! lengths)
            return exit_usage;
        SearchSpec spec;
        for (auto len : *lengths) {
            if (len > UINT32_MAX)
                throw QuandleError(ErrorKind::SizeLimitExceeded, "cycle length too large");
            spec.target_profile.push_back(static_cast<std::uint32_t>(len));
        }
        spec.dedup_isomorphic = o.dedup;
        spec.max_order = resolve_cap(o.max_order, default_search_order_cap);
        spec.threads = std::max(1u, o.threads);
        spec.max_results = o.max_results;
        auto result = search_by_profile(spec);
        auto manifest = search_manifest(spec, result);

        if (! o.out_path.empty()) {
            std::filesystem::path dir(o.out_path);
            std::filesystem::create_directories(dir);
            for (std::size_t k = 0; k < result.quandles.size(); ++k) {
                const auto name = manifest["files"][k].get<std::string>();
                write_qdl_file(dir / name, result.quandles[k],
                    {"# search result " + std::to_string(k + 1) + " for profile " + profile_text(*lengths)});
            }
            std::ofstream file(dir / "manifest.json", std::ios::binary);
            file << dump(manifest);
            if (! file)
                throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
        }
        if (o.json) {
            out << dump(manifest);
            return exit_ok;
        }
        out << "profile " << profile_text(*lengths) << ": " << result.quandles.size() << " quandles";
        if (o.dedup)
            out << ", " << result.iso_classes.size() << " isomorphism classes";
        if (result.truncated)
            out << " (truncated)";
        out << "\n";
        return exit_ok;
    }

    auto cmd_admissible(const Options & o, std::ostream & out, std::ostream & err) -> int
    {
        auto lengths = shq_lengths(o.profile, err);
        if (! lengths)
            return exit_usage;
        auto v = check_profile_admissible(*lengths);
        if (o.json) {
            out << dump(nlohmann::json{
                {"schema", "quandlekit.admissible/1"},
                {"profile", profile_text(*lengths)},
                {"verdict", v.ruled_out() ? "RuledOut" : "NotRuledOut"},
                {"reason",
                    v.reason == ObstructionReason::None          ? "None"
                        : v.reason == ObstructionReason::NotPrimePower ? "NotPrimePower"
                                                                       : "FormulaMismatch"},
                {"explanation", v.explanation},
            });
        }
        else {
            out << (v.ruled_out() ? "RuledOut" : "NotRuledOut");
            if (! v.explanation.empty())
                out << ": " << v.explanation;
            out << "\n";
        }
        return v.ruled_out() ? exit_negative : exit_ok;
    }
}

auto parse_profile_argument(const std::string & text) -> std::optional<std::vector<std::uint64_t>>
{
    std::vector<std::uint64_t> lengths;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        auto field = text.substr(pos, comma - pos);
        auto first = field.find_first_not_of(" \t");
        auto last = field.find_last_not_of(" \t");
        if (first == std::string::npos)
            return std::nullopt;
        field = field.substr(first, last - first + 1);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size() || value == 0)
            return std::nullopt;
        if (! lengths.empty() && value < lengths.back())
            return std::nullopt;
        lengths.push_back(value);
        pos = comma + 1;
    }
    if (lengths.empty())
        return std::nullopt;
    return lengths;
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Finite quandle toolkit", "quandlekit"};
    app.require_subcommand(1);
    Options o;

    auto * validate = app.add_subcommand("validate", "check the quandle axioms for a .qdl table");
    validate->add_option("path", o.path, ".qdl file")->required();
    validate->add_flag("--json", o.json, "print a JSON report");

    auto * analyze_cmd = app.add_subcommand("analyze", "profile, connectivity and SHQ structure of a table");
    analyze_cmd->add_option("path", o.path, ".qdl file")->required();
    analyze_cmd->add_flag("--json", o.json, "print a JSON report");
    analyze_cmd->add_flag("--subquandles", o.subquandles, "enumerate subquandles up to isomorphism");
    analyze_cmd->add_flag("--verify-main-theorem", o.verify, "check order, profile, prime power and subquandles");
    analyze_cmd->add_option("--max-order", o.max_order, "largest order for subquandle enumeration");

    auto * construct = app.add_subcommand("construct", "build an affine, SHQ-family, Galois or cyclic-type quandle");
    construct->add_option("kind", o.kind, "affine | shq-family | galois | cyclic")
        ->required()
        ->check(CLI::IsMember({"affine", "shq-family", "galois", "cyclic"}));
    construct->add_option("--modulus,-m", o.modulus, "modulus for affine");
    construct->add_option("--multiplier,-k", o.multiplier, "multiplier h (a field index for galois)");
    construct->add_option("--p", o.p, "prime");
    construct->add_option("--c", o.c, "number of cycles for shq-family");
    construct->add_option("--a", o.a, "field degree for galois and cyclic");
    construct->add_option("--out,-o", o.out_path, "write the table here instead of stdout");

    auto * search = app.add_subcommand("search", "exhaustive search for connected quandles with a profile");
    search->add_option("--profile", o.profile, "e.g. 1,2,6")->required();
    search->add_option("--max-order", o.max_order, "largest order allowed");
    search->add_flag("--dedup", o.dedup, "group results into isomorphism classes");
    search->add_option("--out,-o", o.out_path, "directory for result_NNNN.qdl and manifest.json");
    search->add_option("--threads,-j", o.threads, "worker threads");
    search->add_option("--max-results", o.max_results, "stop after this many quandles");
    search->add_flag("--json", o.json, "print the manifest");

    auto * admissible = app.add_subcommand("admissible", "test a candidate SHQ profile against known obstructions");
    admissible->add_option("--profile", o.profile, "e.g. 1,6,42")->required();
    admissible->add_flag("--json", o.json, "print a JSON verdict");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(o, out, err);
        if (analyze_cmd->parsed())
            return cmd_analyze(o, out, err);
        if (construct->parsed())
            return cmd_construct(o, out, err);
        if (search->parsed())
            return cmd_search(o, out, err);
        return cmd_admissible(o, out, err);
    }
    catch (const QuandleError & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace quandlekit::cli
