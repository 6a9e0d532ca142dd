#include <quandlekit/error.hpp>
#include <quandlekit/permutation.hpp>

#include <algorithm>
#include <numeric>

namespace quandlekit {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::IdempotencyViolation: return "IdempotencyViolation";
    case ErrorKind::RightInvertibilityViolation: return "RightInvertibilityViolation";
    case ErrorKind::DistributivityViolation: return "DistributivityViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::FixedPointMissing: return "FixedPointMissing";
    case ErrorKind::ConjugationViolation: return "ConjugationViolation";
    case ErrorKind::ProfileInconsistency: return "ProfileInconsistency";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotRelabelable: return "NotRelabelable";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NotSHQShape: return "NotSHQShape";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::MultiplierNotInvertible: return "MultiplierNotInvertible";
    case ErrorKind::DegenerateMultiplier: return "DegenerateMultiplier";
    case ErrorKind::RepeatedLengthsUnsupported: return "RepeatedLengthsUnsupported";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

auto make_element_set(std::vector<Element> elements) -> ElementSet
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

auto element_set_from_labels(const std::vector<index_t> & labels) -> ElementSet
{
    std::vector<Element> elements;
    elements.reserve(labels.size());
    for (auto label : labels) {
        if (label == 0)
            throw QuandleError(ErrorKind::IndexOutOfRange, "labels start at 1");
        elements.push_back(Element::from_label(label));
    }
    return make_element_set(std::move(elements));
}

auto labels_of(const ElementSet & set) -> std::vector<index_t>
{
    std::vector<index_t> labels;
    labels.reserve(set.size());
    for (auto e : set)
        labels.push_back(e.label());
    return labels;
}

auto full_element_set(std::size_t n) -> ElementSet
{
    ElementSet all;
    all.reserve(n);
    for (index_t i = 0; i < n; ++i)
        all.emplace_back(i);
    return all;
}

CycleStructure::CycleStructure(std::vector<std::uint32_t> lengths) : _lengths(std::move(lengths))
{
    std::sort(_lengths.begin(), _lengths.end());
}

auto CycleStructure::degree() const -> std::size_t
{
    return std::accumulate(_lengths.begin(), _lengths.end(), std::size_t{0});
}

auto CycleStructure::multiplicities() const -> std::vector<std::pair<std::uint32_t, std::uint32_t>>
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> result;
    for (auto len : _lengths) {
        if (! result.empty() && result.back().first == len)
            ++result.back().second;
        else
            result.emplace_back(len, 1);
    }
    return result;
}

auto CycleStructure::has_distinct_lengths() const -> bool
{
    return std::adjacent_find(_lengths.begin(), _lengths.end()) == _lengths.end();
}

auto CycleStructure::to_string() const -> std::string
{
    std::string out = "(";
    for (std::size_t i = 0; i < _lengths.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(_lengths[i]);
    }
    return out + ")";
}

auto CycleStructure::to_exponent_string() const -> std::string
{
    std::string out = "(";
    bool first = true;
    for (auto [len, count] : multiplicities()) {
        if (! first)
            out += ',';
        first = false;
        out += std::to_string(len);
        if (count != 1)
            out += '^' + std::to_string(count);
    }
    return out + ")";
}

auto Permutation::identity(std::size_t n) -> Permutation
{
    std::vector<index_t> images(n);
    std::iota(images.begin(), images.end(), index_t{0});
    return Permutation{std::move(images)};
}

auto Permutation::from_images(std::vector<index_t> images) -> Permutation
{
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto target = images[i];
        if (target >= images.size() || seen[target])
            throw QuandleError(ErrorKind::NotABijection,
                "image of " + std::to_string(i + 1) + " is out of range or repeated");
        seen[target] = true;
    }
    return Permutation{std::move(images)};
}

auto Permutation::from_labels(const std::vector<index_t> & labels) -> Permutation
{
    std::vector<index_t> images;
    images.reserve(labels.size());
    for (auto label : labels) {
        if (label == 0 || label > labels.size())
            throw QuandleError(ErrorKind::NotABijection, "label " + std::to_string(label) + " out of range");
        images.push_back(label - 1);
    }
    return from_images(std::move(images));
}

auto Permutation::from_cycles(std::size_t n, const std::vector<std::vector<index_t>> & cycles) -> Permutation
{
    std::vector<index_t> images(n);
    std::iota(images.begin(), images.end(), index_t{0});
    std::vector<bool> used(n, false);
    for (const auto & cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            auto from = cycle[k], to = cycle[(k + 1) % cycle.size()];
            if (from == 0 || from > n || to == 0 || to > n || used[from - 1])
                throw QuandleError(ErrorKind::NotABijection, "bad cycle entry " + std::to_string(from));
            used[from - 1] = true;
            images[from - 1] = to - 1;
        }
    }
    return Permutation{std::move(images)};
}

auto Permutation::inverse() const -> Permutation
{
    std::vector<index_t> inv(_images.size());
    for (index_t i = 0; i < _images.size(); ++i)
        inv[_images[i]] = i;
    return Permutation{std::move(inv)};
}

auto Permutation::power(std::int64_t k) const -> Permutation
{
    // Per-cycle rotation, so the cost is linear in n regardless of k.
    std::vector<index_t> result(_images.size());
    std::vector<index_t> cycle;
    std::vector<bool> seen(_images.size(), false);
    for (index_t start = 0; start < _images.size(); ++start) {
        if (seen[start])
            continue;
        cycle.clear();
        for (auto x = start; ! seen[x]; x = _images[x]) {
            seen[x] = true;
            cycle.push_back(x);
        }
        auto len = static_cast<std::int64_t>(cycle.size());
        auto shift = ((k % len) + len) % len;
        for (std::int64_t t = 0; t < len; ++t)
            result[cycle[t]] = cycle[(t + shift) % len];
    }
    return Permutation{std::move(result)};
}

auto Permutation::operator*(const Permutation & g) const -> Permutation
{
    std::vector<index_t> result(g._images.size());
    for (index_t i = 0; i < result.size(); ++i)
        result[i] = _images[g._images[i]];
    return Permutation{std::move(result)};
}

auto Permutation::conjugated_by(const Permutation & s) const -> Permutation
{
    // (s p s^-1)(s(x)) = s(p(x))
    std::vector<index_t> result(_images.size());
    for (index_t x = 0; x < result.size(); ++x)
        result[s._images[x]] = s._images[_images[x]];
    return Permutation{std::move(result)};
}

auto Permutation::is_identity() const -> bool
{
    for (index_t i = 0; i < _images.size(); ++i)
        if (_images[i] != i)
            return false;
    return true;
}

auto Permutation::fixed_points() const -> ElementSet
{
    ElementSet fixed;
    for (index_t i = 0; i < _images.size(); ++i)
        if (_images[i] == i)
            fixed.emplace_back(i);
    return fixed;
}

auto Permutation::cycles() const -> std::vector<std::vector<index_t>>
{
    std::vector<std::vector<index_t>> result;
    std::vector<bool> seen(_images.size(), false);
    for (index_t start = 0; start < _images.size(); ++start) {
        if (seen[start])
            continue;
        auto & cycle = result.emplace_back();
        for (auto x = start; ! seen[x]; x = _images[x]) {
            seen[x] = true;
            cycle.push_back(x);
        }
    }
    return result;
}

auto Permutation::to_cycle_string() const -> std::string
{
    std::string out;
    for (const auto & cycle : cycles()) {
        out += '(';
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (k != 0)
                out += ' ';
            out += std::to_string(cycle[k] + 1);
        }
        out += ')';
    }
    return out;
}

auto cycle_structure(const Permutation & p) -> CycleStructure
{
    std::vector<std::uint32_t> lengths;
    std::vector<bool> seen(p.size(), false);
    for (index_t start = 0; start < p.size(); ++start) {
        if (seen[start])
            continue;
        std::uint32_t len = 0;
        for (auto x = start; ! seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return CycleStructure{std::move(lengths)};
}

} // namespace quandlekit
