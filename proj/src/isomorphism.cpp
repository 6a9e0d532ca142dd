#include <quandlekit/structure.hpp>

#include <algorithm>
#include <map>

namespace quandlekit {

namespace {
    // Per-element invariant: cycle type of R_x together with its fixed-point
    // count.
    using Invariant = std::pair<CycleStructure, std::uint32_t>;

    auto invariants(const QuandleTable & q) -> std::vector<Invariant>
    {
        auto structures = translation_cycle_structures(q);
        std::vector<Invariant> result;
        result.reserve(structures.size());
        for (auto & s : structures) {
            auto fixed = static_cast<std::uint32_t>(std::count(s.lengths().begin(), s.lengths().end(), 1u));
            result.emplace_back(std::move(s), fixed);
        }
        return result;
    }

    // Greedy generating sequence: repeatedly add the smallest element outside
    // the closure of those chosen so far.
    auto generating_sequence(const QuandleTable & q) -> std::vector<index_t>
    {
        std::vector<index_t> gens;
        ElementSet closed;
        std::vector<char> member(q.order(), 0);
        for (index_t x = 0; x < q.order(); ++x) {
            if (member[x])
                continue;
            gens.push_back(x);
            closed.emplace_back(x);
            closed = subquandle_closure(q, make_element_set(closed));
            for (auto e : closed)
                member[e.index()] = 1;
        }
        return gens;
    }

    class IsomorphismSearch {
    public:
        IsomorphismSearch(const QuandleTable & a, const QuandleTable & b, std::vector<Invariant> inv_a,
            std::vector<Invariant> inv_b) :
            _a(a),
            _b(b),
            _inv_a(std::move(inv_a)),
            _inv_b(std::move(inv_b)),
            _forward(a.order(), unmapped),
            _backward(a.order(), unmapped)
        {
        }

        auto run(const std::vector<index_t> & gens, std::optional<index_t> first_image) -> std::optional<Permutation>
        {
            if (! assign(gens, 0, first_image))
                return std::nullopt;
            return Permutation::from_images(_forward);
        }

    private:
        static constexpr index_t unmapped = static_cast<index_t>(-1);

        auto assign(const std::vector<index_t> & gens, std::size_t depth, std::optional<index_t> first_image) -> bool
        {
            if (depth == gens.size())
                return _mapped.size() == _a.order();
            const auto g = gens[depth];
            for (index_t y = 0; y < _b.order(); ++y) {
                if (depth == 0 && first_image && y != *first_image)
                    continue;
                if (_backward[y] != unmapped || _inv_a[g] != _inv_b[y])
                    continue;
                const auto mark = _mapped.size();
                if (map(g, y) && propagate(mark) && assign(gens, depth + 1, std::nullopt))
                    return true;
                undo(mark);
            }
            return false;
        }

        auto map(index_t x, index_t y) -> bool
        {
            if (_forward[x] != unmapped)
                return _forward[x] == y;
            if (_backward[y] != unmapped || _inv_a[x] != _inv_b[y])
                return false;
            _forward[x] = y;
            _backward[y] = x;
            _mapped.push_back(x);
            return true;
        }

        // Close the mapped set under * so that phi is forced on the generated
        // subquandle; any clash refutes the partial assignment.
        auto propagate(std::size_t from) -> bool
        {
            for (auto done = from; done < _mapped.size(); ++done) {
                const auto x = _mapped[done];
                for (std::size_t k = 0; k <= done; ++k) {
                    const auto z = _mapped[k];
                    if (! map(_a.at(x, z), _b.at(_forward[x], _forward[z])))
                        return false;
                    if (! map(_a.at(z, x), _b.at(_forward[z], _forward[x])))
                        return false;
                }
            }
            return true;
        }

        void undo(std::size_t mark)
        {
            while (_mapped.size() > mark) {
                auto x = _mapped.back();
                _mapped.pop_back();
                _backward[_forward[x]] = unmapped;
                _forward[x] = unmapped;
            }
        }

        const QuandleTable & _a;
        const QuandleTable & _b;
        std::vector<Invariant> _inv_a, _inv_b;
        std::vector<index_t> _forward, _backward;
        std::vector<index_t> _mapped;
    };
}

auto is_homomorphism(const QuandleTable & a, const QuandleTable & b, const Permutation & phi) -> bool
{
    if (phi.size() != a.order() || a.order() != b.order())
        return false;
    for (index_t x = 0; x < a.order(); ++x)
        for (index_t y = 0; y < a.order(); ++y)
            if (phi[a.at(x, y)] != b.at(phi[x], phi[y]))
                return false;
    return true;
}

auto are_isomorphic(const QuandleTable & a, const QuandleTable & b) -> std::optional<Permutation>
{
    if (a.order() != b.order())
        return std::nullopt;
    auto inv_a = invariants(a);
    auto inv_b = invariants(b);
    auto sorted_a = inv_a, sorted_b = inv_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b)
        return std::nullopt;

    auto gens = generating_sequence(a);
    // In a connected target the inner automorphisms act transitively, so the
    // image of the first generator can be fixed.
    std::optional<index_t> first_image;
    if (is_connected(b))
        first_image = 0;

    IsomorphismSearch search(a, b, std::move(inv_a), std::move(inv_b));
    return search.run(gens, first_image);
}

} // namespace quandlekit
