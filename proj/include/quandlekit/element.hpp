#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace quandlekit {

using index_t = std::uint32_t;

// An element of a finite quandle. Storage is 0-based; every textual surface
// (files, reports, messages) uses label() which is 1-based.
class Element {
public:
    constexpr Element() = default;
    constexpr explicit Element(index_t index) : _index(index) {}

    static constexpr auto from_label(index_t label) -> Element { return Element{label - 1}; }

    constexpr auto index() const -> index_t { return _index; }
    constexpr auto label() const -> index_t { return _index + 1; }

    friend constexpr auto operator<=>(Element, Element) = default;

private:
    index_t _index = 0;
};

// Sorted, duplicate-free.
using ElementSet = std::vector<Element>;

auto make_element_set(std::vector<Element> elements) -> ElementSet;
auto element_set_from_labels(const std::vector<index_t> & labels) -> ElementSet;
auto labels_of(const ElementSet & set) -> std::vector<index_t>;
auto full_element_set(std::size_t n) -> ElementSet;

} // namespace quandlekit
