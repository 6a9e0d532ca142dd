#pragma once

#include <quandlekit/element.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quandlekit {

// Multiset of disjoint-cycle lengths, sorted ascending, repeats kept.
class CycleStructure {
public:
    CycleStructure() = default;
    explicit CycleStructure(std::vector<std::uint32_t> lengths);

    auto lengths() const -> const std::vector<std::uint32_t> & { return _lengths; }
    auto degree() const -> std::size_t;
    auto cycle_count() const -> std::size_t { return _lengths.size(); }

    // (length, count) pairs, ascending by length.
    auto multiplicities() const -> std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    auto has_distinct_lengths() const -> bool;

    // "(1,1,2)": every cycle listed.
    auto to_string() const -> std::string;
    // "(1^2,2)": exponent notation, exponent 1 dropped.
    auto to_exponent_string() const -> std::string;

    friend auto operator<=>(const CycleStructure &, const CycleStructure &) = default;

private:
    std::vector<std::uint32_t> _lengths;
};

class Permutation {
public:
    Permutation() = default;

    static auto identity(std::size_t n) -> Permutation;
    // images[i] is the image of index i; throws NotABijection.
    static auto from_images(std::vector<index_t> images) -> Permutation;
    static auto from_labels(const std::vector<index_t> & labels) -> Permutation;
    // Cycles given in 1-based labels; unlisted labels are fixed.
    static auto from_cycles(std::size_t n, const std::vector<std::vector<index_t>> & cycles) -> Permutation;

    auto size() const -> std::size_t { return _images.size(); }
    auto operator()(Element e) const -> Element { return Element{_images[e.index()]}; }
    auto operator[](index_t i) const -> index_t { return _images[i]; }
    auto images() const -> std::span<const index_t> { return _images; }

    auto inverse() const -> Permutation;
    auto power(std::int64_t k) const -> Permutation;
    // (f * g)(x) = f(g(x))
    auto operator*(const Permutation & g) const -> Permutation;
    // s * this * s^-1
    auto conjugated_by(const Permutation & s) const -> Permutation;

    auto is_identity() const -> bool;
    auto fixed_points() const -> ElementSet;
    // Each cycle starts at its smallest element; cycles ordered by that element.
    auto cycles() const -> std::vector<std::vector<index_t>>;
    // "(1)(2 3)(4 5 6 7 8 9)" in labels, fixed points included.
    auto to_cycle_string() const -> std::string;

    friend auto operator==(const Permutation &, const Permutation &) -> bool = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    explicit Permutation(std::vector<index_t> images) : _images(std::move(images)) {}

    std::vector<index_t> _images;
};

auto cycle_structure(const Permutation & p) -> CycleStructure;

} // namespace quandlekit
