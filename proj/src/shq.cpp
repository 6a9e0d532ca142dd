#include <quandlekit/number_theory.hpp>
#include <quandlekit/shq.hpp>

#include <algorithm>
#include <numeric>

namespace quandlekit {

namespace nt = number_theory;

namespace {
    auto format_list(const std::vector<std::uint64_t> & values) -> std::string
    {
        std::string out = "(";
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (k != 0)
                out += ',';
            out += std::to_string(values[k]);
        }
        return out + ")";
    }

    auto format_factorisation(std::uint64_t n) -> std::string
    {
        std::string out;
        for (auto [p, e] : nt::factorize(n)) {
            if (! out.empty())
                out += '*';
            out += std::to_string(p);
            if (e != 1)
                out += '^' + std::to_string(e);
        }
        return out;
    }

    auto widen(const std::vector<std::uint32_t> & lengths) -> std::vector<std::uint64_t>
    {
        return {lengths.begin(), lengths.end()};
    }

    auto translation(const QuandleTable & q, index_t i) -> Permutation
    {
        return right_translation(q, Element{i});
    }
}

auto has_shq_shape(const std::vector<std::uint64_t> & lengths) -> bool
{
    if (lengths.size() < 2 || lengths[0] != 1)
        return false;
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] <= lengths[i - 1] || lengths[i] % lengths[i - 1] != 0)
            return false;
    return true;
}

auto classify_shq(const QuandleTable & q) -> ShqClassification
{
    ShqClassification result;
    result.profile = profile(q);
    auto structures = translation_cycle_structures(q);
    for (std::size_t i = 1; i < structures.size(); ++i)
        if (structures[i] != structures[0]) {
            result.diagnostic = "right translations R_1 and R_" + std::to_string(i + 1) + " have different cycle structures";
            return result;
        }
    auto lengths = widen(structures[0].lengths());
    if (lengths.size() < 2) {
        result.diagnostic = "a single cycle; at least two are required";
        return result;
    }
    if (! structures[0].has_distinct_lengths()) {
        result.diagnostic = "cycle structure " + structures[0].to_string() + " repeats a length";
        return result;
    }
    if (! has_shq_shape(lengths)) {
        result.diagnostic = "cycle lengths " + format_list(lengths) + " do not form a divisibility chain";
        return result;
    }
    const auto ell = lengths[1];
    auto pp = nt::as_prime_power(ell + 1);
    if (! pp) {
        result.diagnostic = "l+1 = " + std::to_string(ell + 1) + " = " + format_factorisation(ell + 1)
            + " is not a prime power";
        return result;
    }
    result.params = ShqParams{ell, static_cast<std::uint32_t>(lengths.size()), pp->prime, pp->exponent};
    return result;
}

auto predicted_profile(std::uint64_t ell, std::uint32_t c) -> std::vector<std::uint64_t>
{
    if (ell < 2 || c < 2)
        throw QuandleError(ErrorKind::ParamOutOfRange, "need ell >= 2 and c >= 2", {ell, c});
    std::vector<std::uint64_t> lengths{1};
    std::uint64_t term = ell;
    for (std::uint32_t i = 2; i <= c; ++i) {
        lengths.push_back(term);
        if (i < c) {
            if (term > UINT64_MAX / (ell + 1))
                throw QuandleError(ErrorKind::ParamOutOfRange, "profile lengths overflow 64 bits", {ell, c});
            term *= ell + 1;
        }
    }
    return lengths;
}

auto check_profile_admissible(const std::vector<std::uint64_t> & lengths) -> AdmissibilityVerdict
{
    if (! has_shq_shape(lengths))
        throw QuandleError(ErrorKind::NotSHQShape,
            format_list(lengths) + " is not a strictly increasing divisibility chain starting at 1 with c >= 2");

    AdmissibilityVerdict result;
    const auto ell = lengths[1];
    if (! nt::as_prime_power(ell + 1)) {
        result.verdict = Admissibility::RuledOut;
        result.reason = ObstructionReason::NotPrimePower;
        result.index = 2;
        result.actual = ell + 1;
        result.explanation = "l_2+1 = " + std::to_string(ell + 1) + " = " + format_factorisation(ell + 1)
            + " is not a prime power";
        return result;
    }
    std::uint64_t expected = ell;
    for (std::size_t i = 3; i <= lengths.size(); ++i) {
        if (expected > UINT64_MAX / (ell + 1)) {
            // l_i is a 64-bit value, the formula already exceeds it
            result.verdict = Admissibility::RuledOut;
            result.reason = ObstructionReason::FormulaMismatch;
            result.index = i;
            result.actual = lengths[i - 1];
            result.explanation = "l_" + std::to_string(i) + " must equal l(l+1)^" + std::to_string(i - 2)
                + ", which exceeds 64 bits";
            return result;
        }
        expected *= ell + 1;
        if (lengths[i - 1] != expected) {
            result.verdict = Admissibility::RuledOut;
            result.reason = ObstructionReason::FormulaMismatch;
            result.index = i;
            result.expected = expected;
            result.actual = lengths[i - 1];
            result.explanation = "l_" + std::to_string(i) + " = " + std::to_string(lengths[i - 1])
                + " but l(l+1)^" + std::to_string(i - 2) + " = " + std::to_string(expected);
            return result;
        }
    }
    result.explanation = "consistent with l+1 a prime power and l_i = l(l+1)^{i-2}";
    return result;
}

CanonicalDecomposition::CanonicalDecomposition(std::vector<std::uint32_t> lengths, Permutation relabeling) :
    _lengths(std::move(lengths)),
    _relabeling(std::move(relabeling))
{
    std::uint32_t sum = 0;
    for (auto len : _lengths)
        _partial_sums.push_back(sum += len);
}

auto CanonicalDecomposition::prefix(std::size_t i) const -> ElementSet
{
    ElementSet set;
    for (index_t x = 0; x < partial_sum(i); ++x)
        set.emplace_back(x);
    return set;
}

auto CanonicalDecomposition::block(std::size_t i) const -> ElementSet
{
    ElementSet set;
    for (index_t x = partial_sum(i) - length(i); x < partial_sum(i); ++x)
        set.emplace_back(x);
    return set;
}

auto CanonicalDecomposition::block_of(Element x) const -> std::size_t
{
    auto it = std::upper_bound(_partial_sums.begin(), _partial_sums.end(), x.index());
    return static_cast<std::size_t>(it - _partial_sums.begin()) + 1;
}

namespace {
    // Orders R_1's cycles by length, each starting at its smallest element.
    auto canonical_order(const QuandleTable & q) -> std::pair<std::vector<std::uint32_t>, Permutation>
    {
        auto cycles = translation(q, 0).cycles();
        std::stable_sort(cycles.begin(), cycles.end(),
            [](const auto & a, const auto & b) { return a.size() < b.size(); });
        std::vector<std::uint32_t> lengths;
        for (std::size_t k = 0; k < cycles.size(); ++k) {
            if (k != 0 && cycles[k].size() == cycles[k - 1].size())
                throw QuandleError(ErrorKind::NotRelabelable,
                    "R_1 has two cycles of length " + std::to_string(cycles[k].size()));
            lengths.push_back(static_cast<std::uint32_t>(cycles[k].size()));
        }
        std::vector<index_t> images(q.order());
        index_t next = 0;
        for (const auto & cycle : cycles)
            for (auto x : cycle)
                images[x] = next++;
        return {std::move(lengths), Permutation::from_images(std::move(images))};
    }
}

auto canonical_relabel(const QuandleTable & q) -> CanonicalForm
{
    auto [lengths, relabeling] = canonical_order(q);
    auto table = q.relabeled(relabeling);
    return {std::move(table), CanonicalDecomposition{std::move(lengths), std::move(relabeling)}};
}

auto canonical_decomposition(const QuandleTable & q) -> CanonicalDecomposition
{
    std::pair<std::vector<std::uint32_t>, Permutation> order;
    try {
        order = canonical_order(q);
    }
    catch (const QuandleError & e) {
        throw QuandleError(ErrorKind::NotCanonical, e.what());
    }
    if (! order.second.is_identity())
        throw QuandleError(ErrorKind::NotCanonical, "R_1 = " + translation(q, 0).to_cycle_string() + " is not in block form");
    return CanonicalDecomposition{std::move(order.first), std::move(order.second)};
}

auto check_conjugation_relations(const QuandleTable & q) -> Check
{
    auto d = canonical_decomposition(q);
    auto r1 = translation(q, 0);
    for (std::size_t i = 2; i <= d.cycle_count(); ++i) {
        auto generator = translation(q, d.partial_sum(i) - 1);
        const auto base = d.partial_sum(i - 1);
        auto shift = r1;
        for (std::uint32_t k = 1; k <= d.length(i); ++k, shift = r1 * shift) {
            auto expected = generator.conjugated_by(shift);
            if (translation(q, base + k - 1) != expected)
                return {false,
                    "R_" + std::to_string(base + k) + " != R_1^" + std::to_string(k) + " R_"
                        + std::to_string(d.partial_sum(i)) + " R_1^-" + std::to_string(k),
                    {i, k}};
        }
    }
    return {true, "all block translations are R_1-conjugates of R_{n_i}", {}};
}

auto fix_blocks(const QuandleTable & q, std::uint64_t exponent) -> FixBlockPartition
{
    const auto n = q.order();
    FixBlockPartition result;
    result.exponent = exponent;
    result.block_of.assign(n, 0);
    std::vector<std::size_t> owner(n, SIZE_MAX);
    for (index_t x = 0; x < n; ++x) {
        auto fixed = translation(q, x).power(static_cast<std::int64_t>(exponent)).fixed_points();
        auto it = std::find(result.blocks.begin(), result.blocks.end(), fixed);
        if (it != result.blocks.end()) {
            result.block_of[x] = static_cast<std::size_t>(it - result.blocks.begin());
            continue;
        }
        const auto id = result.blocks.size();
        for (auto y : fixed) {
            if (owner[y.index()] != SIZE_MAX)
                throw QuandleError(ErrorKind::NotAPartition,
                    "fixed sets of R_" + std::to_string(x + 1) + "^" + std::to_string(exponent) + " and another overlap in "
                        + std::to_string(y.label()),
                    {x + 1, y.label()});
            owner[y.index()] = id;
        }
        if (! result.blocks.empty() && fixed.size() != result.blocks.front().size())
            throw QuandleError(ErrorKind::NotAPartition, "fixed sets have different sizes", {x + 1});
        result.block_of[x] = id;
        result.blocks.push_back(std::move(fixed));
    }
    // x lies in its own fixed set, so the blocks cover everything; reorder
    // by smallest element.
    std::vector<std::size_t> order(result.blocks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
        [&](auto a, auto b) { return result.blocks[a].front() < result.blocks[b].front(); });
    std::vector<std::size_t> position(order.size());
    std::vector<ElementSet> sorted;
    for (std::size_t k = 0; k < order.size(); ++k) {
        position[order[k]] = k;
        sorted.push_back(std::move(result.blocks[order[k]]));
    }
    result.blocks = std::move(sorted);
    for (auto & b : result.block_of)
        b = position[b];
    return result;
}

auto MainTheoremReport::all_passed() const -> bool
{
    return is_shq() && order_check.passed && profile_check.passed && prime_power_check.passed
        && subquandle_check.passed;
}

auto verify_main_theorem(const QuandleTable & q, const EnumerationLimits & limits) -> MainTheoremReport
{
    MainTheoremReport report;
    report.classification = classify_shq(q);
    if (! report.is_shq())
        return report;

    const auto & params = *report.classification.params;
    const auto n = q.order();
    const auto lengths = widen(report.classification.profile.connected_form.value_or(CycleStructure{}).lengths());

    auto expected_order = nt::checked_pow(params.ell + 1, params.c - 1);
    report.order_check.passed = expected_order && *expected_order == n;
    report.order_check.detail = "|X| = " + std::to_string(n) + ", (l+1)^{c-1} = "
        + (expected_order ? std::to_string(*expected_order) : std::string{"overflow"});
    if (! report.order_check.passed)
        report.order_check.witness = {n};

    auto predicted = predicted_profile(params.ell, params.c);
    report.profile_check.passed = lengths == predicted;
    report.profile_check.detail = "profile " + format_list(lengths) + ", predicted " + format_list(predicted);
    if (! report.profile_check.passed)
        for (std::size_t i = 0; i < lengths.size(); ++i)
            if (i >= predicted.size() || lengths[i] != predicted[i]) {
                report.profile_check.witness = {i + 1};
                break;
            }

    auto power = nt::checked_pow(params.p, params.a);
    report.prime_power_check.passed = nt::is_prime(params.p) && power && *power == params.ell + 1;
    report.prime_power_check.detail = "l+1 = " + std::to_string(params.ell + 1) + " = " + std::to_string(params.p) + "^"
        + std::to_string(params.a);

    auto canonical = canonical_relabel(q);
    const auto & d = canonical.decomposition;
    std::vector<QuandleTable> prefixes;
    std::string failures;
    for (std::size_t i = 2; i <= params.c; ++i) {
        auto xi = d.prefix(i);
        if (! is_closed(canonical.table, xi)) {
            failures += "X_" + std::to_string(i) + " is not closed; ";
            if (report.subquandle_check.witness.empty())
                report.subquandle_check.witness = {i};
            prefixes.push_back(trivial_quandle(1));
            continue;
        }
        prefixes.push_back(subquandle_table(canonical.table, xi));
        auto p = profile(prefixes.back());
        auto got = widen(p.connected_form.value_or(CycleStructure{}).lengths());
        if (got != predicted_profile(params.ell, static_cast<std::uint32_t>(i))) {
            failures += "X_" + std::to_string(i) + " has profile " + p.to_string() + "; ";
            if (report.subquandle_check.witness.empty())
                report.subquandle_check.witness = {i};
        }
    }

    auto inventory = enumerate_subquandles(canonical.table, limits);
    std::vector<std::size_t> matched(params.c + 1, 0);
    for (auto rep : inventory.class_representatives()) {
        const auto & entry = inventory.subquandles[rep];
        if (entry.elements.size() < 2)
            continue;
        SubquandleClassSummary summary;
        summary.order = entry.elements.size();
        summary.profile = entry.profile;
        summary.representative = entry.elements;
        for (const auto & e : inventory.subquandles)
            if (e.class_representative == rep)
                ++summary.members;
        auto table = subquandle_table(canonical.table, entry.elements);
        for (std::size_t i = 2; i <= params.c; ++i)
            if (d.partial_sum(i) == summary.order && are_isomorphic(table, prefixes[i - 2])) {
                summary.matches_prefix = i;
                ++matched[i];
                break;
            }
        if (summary.matches_prefix == 0) {
            failures += "subquandle of order " + std::to_string(summary.order) + " with profile "
                + summary.profile.to_string() + " is not isomorphic to any X_i; ";
            if (report.subquandle_check.witness.empty())
                report.subquandle_check.witness = widen(labels_of(summary.representative));
        }
        report.classes.push_back(std::move(summary));
    }
    for (std::size_t i = 2; i <= params.c; ++i)
        if (matched[i] != 1) {
            failures += "X_" + std::to_string(i) + " matched by " + std::to_string(matched[i]) + " classes; ";
            if (report.subquandle_check.witness.empty())
                report.subquandle_check.witness = {i};
        }
    report.subquandle_check.passed = failures.empty();
    report.subquandle_check.detail = failures.empty()
        ? std::to_string(report.classes.size()) + " non-trivial classes, one per X_i, i = 2.." + std::to_string(params.c)
        : failures;
    return report;
}

auto lcm_divisibility(const QuandleTable & q) -> LcmReport
{
    const auto n = q.order();
    auto r1 = q.column(0);
    std::vector<std::uint64_t> cycle_length(n, 0);
    for (index_t start = 0; start < n; ++start) {
        if (cycle_length[start] != 0)
            continue;
        std::uint64_t len = 1;
        for (auto x = r1[start]; x != start; x = r1[x])
            ++len;
        cycle_length[start] = len;
        for (auto x = r1[start]; x != start; x = r1[x])
            cycle_length[x] = len;
    }
    LcmReport report;
    for (index_t x = 0; x < n; ++x)
        for (index_t y = 0; y < n; ++y) {
            ++report.triples;
            auto z = q.at(x, y);
            if (std::lcm(cycle_length[x], cycle_length[y]) % cycle_length[z] != 0) {
                if (report.violations++ == 0)
                    report.first_witness = {x + 1, y + 1, z + 1};
            }
        }
    return report;
}

} // namespace quandlekit
