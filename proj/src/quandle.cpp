#include <quandlekit/quandle.hpp>

#include <numeric>

namespace quandlekit {

namespace {
    auto join_labels(const std::vector<index_t> & labels) -> std::string
    {
        std::string out;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (k != 0)
                out += ',';
            out += std::to_string(labels[k]);
        }
        return out;
    }

    auto transpose(std::size_t n, const std::vector<index_t> & entries) -> std::vector<index_t>
    {
        std::vector<index_t> columns(entries.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                columns[j * n + i] = entries[i * n + j];
        return columns;
    }
}

auto Violation::message() const -> std::string
{
    switch (kind) {
    case ErrorKind::NonSquare:
        return "row " + join_labels(witness) + " does not have n entries";
    case ErrorKind::EntryOutOfRange:
        return "entry (" + join_labels(witness) + ") is outside 1..n";
    case ErrorKind::IdempotencyViolation:
        return "i*i != i for i=" + join_labels(witness);
    case ErrorKind::RightInvertibilityViolation:
        return "column " + join_labels(witness) + " is not a permutation";
    case ErrorKind::DistributivityViolation:
        return "(i*j)*k != (i*k)*(j*k) for (i,j,k)=(" + join_labels(witness) + ")";
    default:
        return std::string{to_string(kind)} + " (" + join_labels(witness) + ")";
    }
}

auto validate_quandle(const RawTable & raw) -> ValidationResult
{
    const auto n = raw.size();
    if (n == 0)
        return {Violation{ErrorKind::NonSquare, {0}}};
    for (std::size_t i = 0; i < n; ++i)
        if (raw[i].size() != n)
            return {Violation{ErrorKind::NonSquare, {static_cast<index_t>(i + 1)}}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (raw[i][j] < 1 || raw[i][j] > static_cast<std::int64_t>(n))
                return {Violation{ErrorKind::EntryOutOfRange, {static_cast<index_t>(i + 1), static_cast<index_t>(j + 1)}}};

    std::vector<index_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[i * n + j] = static_cast<index_t>(raw[i][j] - 1);

    for (std::size_t i = 0; i < n; ++i)
        if (t[i * n + i] != i)
            return {Violation{ErrorKind::IdempotencyViolation, {static_cast<index_t>(i + 1)}}};

    std::vector<std::size_t> stamp(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            auto v = t[i * n + j];
            if (stamp[v] == j + 1)
                return {Violation{ErrorKind::RightInvertibilityViolation, {static_cast<index_t>(j + 1)}}};
            stamp[v] = j + 1;
        }

    for (std::size_t i = 0; i < n; ++i) {
        const auto * ri = &t[i * n];
        for (std::size_t j = 0; j < n; ++j) {
            const auto * rij = &t[ri[j] * n];
            const auto * rj = &t[j * n];
            for (std::size_t k = 0; k < n; ++k)
                if (rij[k] != t[ri[k] * n + rj[k]])
                    return {Violation{ErrorKind::DistributivityViolation,
                        {static_cast<index_t>(i + 1), static_cast<index_t>(j + 1), static_cast<index_t>(k + 1)}}};
        }
    }
    return {};
}

QuandleTable::QuandleTable(detail::TrustedTag, std::size_t n, std::vector<index_t> entries) :
    _n(n),
    _entries(std::move(entries)),
    _columns(transpose(n, _entries))
{
}

auto QuandleTable::from_rows(const RawTable & raw) -> QuandleTable
{
    auto result = validate_quandle(raw);
    if (! result.ok())
        throw QuandleError(result.violation->kind, result.violation->message(),
            {result.violation->witness.begin(), result.violation->witness.end()});
    const auto n = raw.size();
    std::vector<index_t> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries[i * n + j] = static_cast<index_t>(raw[i][j] - 1);
    return QuandleTable{detail::TrustedTag{}, n, std::move(entries)};
}

auto QuandleTable::from_indices(std::size_t n, std::vector<index_t> entries) -> QuandleTable
{
    if (n == 0 || entries.size() != n * n)
        throw QuandleError(ErrorKind::NonSquare, "expected n*n entries");
    RawTable raw(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            raw[i][j] = static_cast<std::int64_t>(entries[i * n + j]) + 1;
    auto result = validate_quandle(raw);
    if (! result.ok())
        throw QuandleError(result.violation->kind, result.violation->message(),
            {result.violation->witness.begin(), result.violation->witness.end()});
    return QuandleTable{detail::TrustedTag{}, n, std::move(entries)};
}

auto QuandleTable::to_rows() const -> RawTable
{
    RawTable raw(_n, std::vector<std::int64_t>(_n));
    for (std::size_t i = 0; i < _n; ++i)
        for (std::size_t j = 0; j < _n; ++j)
            raw[i][j] = static_cast<std::int64_t>(_entries[i * _n + j]) + 1;
    return raw;
}

auto QuandleTable::relabeled(const Permutation & phi) const -> QuandleTable
{
    if (phi.size() != _n)
        throw QuandleError(ErrorKind::IndexOutOfRange, "relabeling has the wrong degree");
    std::vector<index_t> entries(_n * _n);
    for (index_t x = 0; x < _n; ++x)
        for (index_t y = 0; y < _n; ++y)
            entries[phi[x] * _n + phi[y]] = phi[at(x, y)];
    return QuandleTable{detail::TrustedTag{}, _n, std::move(entries)};
}

auto trivial_quandle(std::size_t n) -> QuandleTable
{
    std::vector<index_t> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries[i * n + j] = static_cast<index_t>(i);
    return QuandleTable{detail::TrustedTag{}, n, std::move(entries)};
}

auto right_translation(const QuandleTable & q, Element i) -> Permutation
{
    if (i.index() >= q.order())
        throw QuandleError(ErrorKind::IndexOutOfRange, "element " + std::to_string(i.label()) + " not in quandle");
    auto col = q.column(i.index());
    return Permutation::from_images({col.begin(), col.end()});
}

auto right_translations(const QuandleTable & q) -> std::vector<Permutation>
{
    std::vector<Permutation> result;
    result.reserve(q.order());
    for (index_t i = 0; i < q.order(); ++i)
        result.push_back(right_translation(q, Element{i}));
    return result;
}

auto from_translations(std::span<const Permutation> translations) -> QuandleTable
{
    const auto n = translations.size();
    if (n == 0)
        throw QuandleError(ErrorKind::NonSquare, "no translations given");
    for (const auto & p : translations)
        if (p.size() != n)
            throw QuandleError(ErrorKind::NonSquare, "every translation must act on n elements");

    for (index_t i = 0; i < n; ++i) {
        const auto & ri = translations[i];
        for (index_t j = 0; j < n; ++j) {
            const auto & target = translations[ri[j]];
            const auto & rj = translations[j];
            // R_{R_i(j)}(R_i(x)) must equal R_i(R_j(x)) for every x
            for (index_t x = 0; x < n; ++x)
                if (target[ri[x]] != ri[rj[x]])
                    throw QuandleError(ErrorKind::ConjugationViolation,
                        "R_{R_i(j)} != R_i R_j R_i^-1 for (i,j)=(" + std::to_string(i + 1) + ","
                            + std::to_string(j + 1) + ")",
                        {i + 1, j + 1});
        }
    }
    for (index_t i = 0; i < n; ++i)
        if (translations[i][i] != i)
            throw QuandleError(ErrorKind::FixedPointMissing, "R_i(i) != i for i=" + std::to_string(i + 1), {i + 1});

    std::vector<index_t> entries(n * n);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j)
            entries[j * n + i] = translations[i][j];
    return QuandleTable{detail::TrustedTag{}, n, std::move(entries)};
}

} // namespace quandlekit
