#include <quandlekit/search.hpp>
#include <quandlekit/structure.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

namespace quandlekit {

namespace {
    constexpr index_t unassigned = static_cast<index_t>(-1);

    // Canonical labelling: block b (0-based) occupies [start[b], start[b] + lengths[b]).
    struct Layout {
        std::vector<std::uint32_t> lengths;
        std::vector<index_t> start;
        std::vector<std::size_t> block_of;
        std::size_t n = 0;
        Permutation r1;
        // r1^k and r1^{-k} for k = 0..l_c
        std::vector<Permutation> powers, inverse_powers;

        explicit Layout(const std::vector<std::uint32_t> & profile) : lengths(profile)
        {
            for (auto len : lengths) {
                start.push_back(static_cast<index_t>(n));
                n += len;
            }
            block_of.resize(n);
            std::vector<index_t> images(n);
            for (std::size_t b = 0; b < lengths.size(); ++b)
                for (index_t j = 0; j < lengths[b]; ++j) {
                    block_of[start[b] + j] = b;
                    images[start[b] + j] = start[b] + (j + 1) % lengths[b];
                }
            r1 = Permutation::from_images(std::move(images));
            for (std::int64_t k = 0; k <= lengths.back(); ++k) {
                powers.push_back(r1.power(k));
                inverse_powers.push_back(r1.power(-k));
            }
        }

        auto blocks() const -> std::size_t { return lengths.size(); }
        // n_b - 1: the element whose translation generates block b
        auto generator(std::size_t b) const -> index_t { return start[b] + lengths[b] - 1; }
        auto end_of(std::size_t b) const -> index_t { return start[b] + lengths[b]; }
    };

    // R_{R_a(x)} = R_a R_x R_a^{-1}, tested pointwise.
    auto relation_holds(const std::vector<const Permutation *> & t, index_t a, index_t x) -> bool
    {
        const auto & ra = *t[a];
        const auto & rx = *t[x];
        const auto & rz = *t[ra[x]];
        for (index_t y = 0; y < ra.size(); ++y)
            if (rz[ra[y]] != ra[rx[y]])
                return false;
        return true;
    }

    // Translations of block b from its generator: R_{n_{b-1}+k} = R_1^k G R_1^{-k}.
    auto block_translations(const Layout & layout, std::size_t b, const Permutation & generator)
        -> std::vector<Permutation>
    {
        std::vector<Permutation> out;
        out.reserve(layout.lengths[b]);
        for (std::uint32_t k = 1; k <= layout.lengths[b]; ++k)
            out.push_back(generator.conjugated_by(layout.powers[k]));
        return out;
    }

    auto block_internally_consistent(const Layout & layout, std::size_t b, std::vector<const Permutation *> & t)
        -> bool
    {
        std::vector<index_t> members{0};
        for (index_t e = layout.start[b]; e < layout.end_of(b); ++e)
            members.push_back(e);
        auto inside = [&](index_t z) { return z == 0 || layout.block_of[z] == b; };
        for (auto a : members)
            for (auto x : members)
                if (inside((*t[a])[x]) && ! relation_holds(t, a, x))
                    return false;
        return true;
    }

    // Backtracking over candidates G for the generator R_g of block b, given
    // the translations of X_{b-1}. Constraints: G fixes g and nothing else,
    // has the target cycle type, commutes with R_1^{l_b}, maps each layer
    // X_i \ X_{i-1} (i > b) and X_b onto themselves, and satisfies
    // R_z R_a = R_a R_x with z = R_a(x) for a, x in X_b, where the
    // translations of L_b are written as R_1^k G R_1^{-k}.
    class GeneratorSearch {
        struct Token {
            const Permutation * perm = nullptr; // nullptr: G
            const Permutation * inverse = nullptr;
        };
        using Word = std::vector<Token>; // applied right to left

        struct Evaluation {
            bool done = false;
            index_t value = 0;
            // not done: G is needed at `value`; if forceable, G(value) must
            // equal the other side pushed back through `prefix`
            bool forceable = false;
            const Word * word = nullptr;
            std::size_t prefix = 0;
        };

        struct Pair {
            index_t a, x;
            index_t z; // unassigned when it depends on G
        };

    public:
        GeneratorSearch(const Layout & layout, std::size_t b, const std::vector<const Permutation *> & known) :
            _layout(layout),
            _b(b),
            _n(layout.n),
            _g(layout.generator(b)),
            _p(layout.powers[layout.lengths[b]]),
            _image(_n, unassigned),
            _preimage(_n, unassigned),
            _remaining(_n + 1, 0),
            _level(_n),
            _words(layout.end_of(b))
        {
            for (index_t e = 0; e < _n; ++e)
                _level[e] = std::max(layout.block_of[e], b);
            for (std::size_t i = 1; i < layout.blocks(); ++i)
                ++_remaining[layout.lengths[i]];
            _image[_g] = _g;
            _preimage[_g] = _g;

            const auto k_end = layout.start[b];
            _inverses.reserve(k_end);
            for (index_t e = 0; e < k_end; ++e)
                _inverses.push_back(known[e]->inverse());
            for (index_t e = 0; e < k_end; ++e)
                _words[e] = {Token{known[e], &_inverses[e]}};
            for (std::uint32_t k = 1; k <= layout.lengths[b]; ++k) {
                const index_t e = layout.start[b] + k - 1;
                if (e == _g)
                    _words[e] = {Token{}};
                else
                    _words[e] = {Token{&layout.powers[k], &layout.inverse_powers[k]}, Token{},
                        Token{&layout.inverse_powers[k], &layout.powers[k]}};
            }
            for (index_t a = 0; a < layout.end_of(b); ++a)
                for (index_t x = 0; x < layout.end_of(b); ++x) {
                    if (a < k_end && x < k_end)
                        continue;
                    _pairs.push_back({a, x, a < k_end ? (*known[a])[x] : unassigned});
                }
        }

        // leaf(images) returns false to stop the search.
        template <typename Leaf>
        void run(Leaf && leaf)
        {
            _stopped = false;
            if (propagate())
                recurse(leaf);
        }

    private:
        template <typename Leaf>
        void recurse(Leaf & leaf)
        {
            index_t x = 0;
            while (x < _n && _image[x] != unassigned)
                ++x;
            if (x == _n) {
                if (! leaf(_image))
                    _stopped = true;
                return;
            }
            for (index_t y = 0; y < _n && ! _stopped; ++y) {
                if (_preimage[y] != unassigned || y == x || _level[y] != _level[x])
                    continue;
                const auto mark = _log.size();
                const auto closed_mark = _closed.size();
                if (assign(x, y) && propagate())
                    recurse(leaf);
                undo(mark, closed_mark);
            }
        }

        auto evaluate(const Word * outer, const Word * inner, index_t y) const -> Evaluation
        {
            index_t v = y;
            const Word * parts[2] = {inner, outer};
            for (int p = 0; p < 2; ++p) {
                const auto & w = *parts[p];
                for (std::size_t i = w.size(); i-- > 0;) {
                    if (w[i].perm) {
                        v = (*w[i].perm)[v];
                        continue;
                    }
                    if (_image[v] == unassigned) {
                        Evaluation e;
                        e.value = v;
                        e.forceable = p == 1;
                        e.word = &w;
                        e.prefix = i;
                        return e;
                    }
                    v = _image[v];
                }
            }
            return {true, v};
        }

        // other = w[0] ... w[prefix-1] applied to G(need.value)
        auto force(const Evaluation & need, index_t other) -> bool
        {
            auto target = other;
            for (std::size_t i = 0; i < need.prefix; ++i) {
                const auto & token = (*need.word)[i];
                if (! token.perm)
                    return true; // a second unknown; nothing to force
                target = (*token.inverse)[target];
            }
            _changed = true;
            return assign(need.value, target);
        }

        auto propagate() -> bool
        {
            do {
                _changed = false;
                for (const auto & pr : _pairs) {
                    auto z = pr.z;
                    if (z == unassigned) {
                        auto e = evaluate_single(_words[pr.a], pr.x);
                        if (! e.done)
                            continue;
                        z = e.value;
                    }
                    if (_level[z] != _b)
                        return false;
                    const auto & wz = _words[z];
                    const auto & wa = _words[pr.a];
                    const auto & wx = _words[pr.x];
                    for (index_t y = 0; y < _n; ++y) {
                        auto lhs = evaluate(&wz, &wa, y);
                        auto rhs = evaluate(&wa, &wx, y);
                        if (lhs.done && rhs.done) {
                            if (lhs.value != rhs.value)
                                return false;
                        }
                        else if (lhs.done && rhs.forceable) {
                            if (! force(rhs, lhs.value))
                                return false;
                        }
                        else if (rhs.done && lhs.forceable) {
                            if (! force(lhs, rhs.value))
                                return false;
                        }
                    }
                }
            } while (_changed);
            return true;
        }

        auto evaluate_single(const Word & w, index_t y) const -> Evaluation
        {
            static const Word empty;
            return evaluate(&w, &empty, y);
        }

        // x -> y, and with it R_1^{l_b t}(x) -> R_1^{l_b t}(y) for every t.
        auto assign(index_t x, index_t y) -> bool
        {
            auto cx = x, cy = y;
            while (true) {
                if (_image[cx] != unassigned)
                    return _image[cx] == cy;
                if (_preimage[cy] != unassigned || cx == cy || _level[cx] != _level[cy])
                    return false;
                _image[cx] = cy;
                _preimage[cy] = cx;
                _log.push_back(cx);
                if (! account_cycle(cx))
                    return false;
                cx = _p[cx];
                cy = _p[cy];
            }
        }

        // If the edge out of x just closed a cycle, its length must still be
        // available.
        auto account_cycle(index_t x) -> bool
        {
            std::uint32_t len = 1;
            auto z = _image[x];
            while (z != x && _image[z] != unassigned) {
                z = _image[z];
                ++len;
            }
            if (z != x)
                return true;
            if (_remaining[len] == 0)
                return false;
            --_remaining[len];
            _closed.push_back(len);
            return true;
        }

        void undo(std::size_t mark, std::size_t closed_mark)
        {
            while (_log.size() > mark) {
                auto x = _log.back();
                _log.pop_back();
                _preimage[_image[x]] = unassigned;
                _image[x] = unassigned;
            }
            while (_closed.size() > closed_mark) {
                ++_remaining[_closed.back()];
                _closed.pop_back();
            }
        }

        const Layout & _layout;
        std::size_t _b;
        std::size_t _n;
        index_t _g;
        const Permutation & _p;
        std::vector<index_t> _image, _preimage;
        std::vector<std::uint32_t> _remaining;
        std::vector<std::size_t> _level;
        std::vector<Permutation> _inverses;
        std::vector<Word> _words;
        std::vector<Pair> _pairs;
        std::vector<index_t> _log;
        std::vector<std::uint32_t> _closed;
        bool _changed = false;
        bool _stopped = false;
    };

    struct Found {
        std::vector<std::size_t> ordinal;
        QuandleTable table;
    };

    struct WorkerOutput {
        std::vector<Found> found;
        SearchStats stats;
        bool stopped_early = false;
    };

    class Worker {
    public:
        Worker(const Layout & layout, const std::vector<std::vector<Permutation>> & first_level,
            const CycleStructure & target, std::optional<std::size_t> max_results) :
            _layout(layout),
            _first(first_level),
            _target(target),
            _max_results(max_results),
            _t(layout.n, nullptr),
            _ordinal(layout.blocks(), 0)
        {
            _t[0] = &layout.r1;
            _out.stats.generators.resize(layout.blocks() - 1);
        }

        void run(unsigned worker, unsigned workers)
        {
            for (std::size_t k = worker; k < _first.size() && ! _out.stopped_early; k += workers) {
                set_block(1, _first[k]);
                _ordinal[1] = k;
                descend(2);
            }
        }

        auto output() && -> WorkerOutput { return std::move(_out); }

    private:
        void set_block(std::size_t b, const std::vector<Permutation> & translations)
        {
            for (std::uint32_t j = 0; j < _layout.lengths[b]; ++j)
                _t[_layout.start[b] + j] = &translations[j];
        }

        void descend(std::size_t b)
        {
            if (b == _layout.blocks()) {
                leaf();
                return;
            }
            auto & gen_stats = _out.stats.generators[b - 1];
            std::size_t ordinal = 0;
            GeneratorSearch search(_layout, b, _t);
            search.run([&](const std::vector<index_t> & images) {
                ++gen_stats.generated;
                _ordinal[b] = ordinal++;
                auto translations = block_translations(_layout, b, Permutation::from_images(images));
                set_block(b, translations);
                if (block_internally_consistent(_layout, b, _t)) {
                    ++gen_stats.block_consistent;
                    if (cross_relations_hold(b))
                        descend(b + 1);
                    else
                        ++_out.stats.partial_pruned;
                }
                for (index_t e = _layout.start[b]; e < _layout.end_of(b); ++e)
                    _t[e] = nullptr;
                return ! _out.stopped_early;
            });
        }

        // Every relation among assigned elements that involves block b and
        // was not already checked inside {1} ∪ L_b.
        auto cross_relations_hold(std::size_t b) const -> bool
        {
            const auto assigned_end = _layout.end_of(b);
            auto blk = [&](index_t z) { return _layout.block_of[z]; };
            auto local = [&](index_t e) { return blk(e) == 0 || blk(e) == b; };
            for (index_t a = 0; a < assigned_end; ++a)
                for (index_t x = 0; x < assigned_end; ++x) {
                    const auto z = (*_t[a])[x];
                    if (z >= assigned_end)
                        return false;
                    if (std::max({blk(a), blk(x), blk(z)}) != b)
                        continue;
                    if (local(a) && local(x) && local(z))
                        continue;
                    if (! relation_holds(_t, a, x))
                        return false;
                }
            return true;
        }

        void leaf()
        {
            ++_out.stats.tuples_examined;
            std::vector<Permutation> translations;
            translations.reserve(_layout.n);
            for (auto * p : _t)
                translations.push_back(*p);
            std::optional<QuandleTable> table;
            try {
                table = from_translations(translations);
            }
            catch (const QuandleError &) {
                return;
            }
            ++_out.stats.conjugation_consistent;
            if (! validate_quandle(table->to_rows()).ok())
                return;
            ++_out.stats.distributive;
            if (! is_connected(*table))
                return;
            ++_out.stats.connected;
            auto structures = translation_cycle_structures(*table);
            if (std::any_of(structures.begin(), structures.end(), [&](const auto & s) { return s != _target; }))
                return;
            ++_out.stats.profile_matched;
            _out.found.push_back({_ordinal, std::move(*table)});
            if (_max_results && _out.found.size() >= *_max_results)
                _out.stopped_early = true;
        }

        const Layout & _layout;
        const std::vector<std::vector<Permutation>> & _first;
        const CycleStructure & _target;
        std::optional<std::size_t> _max_results;
        std::vector<const Permutation *> _t;
        std::vector<std::size_t> _ordinal;
        WorkerOutput _out;
    };

    struct Enumeration {
        std::vector<Found> found;
        SearchStats stats;
        bool truncated = false;
    };

    auto enumerate(const SearchSpec & spec) -> Enumeration
    {
        validate_search_spec(spec);
        const auto started = std::chrono::steady_clock::now();
        Layout layout(spec.target_profile);
        CycleStructure target(spec.target_profile);

        Enumeration result;
        result.stats.raw_space = [&] {
            boost::multiprecision::cpp_int slice(class_slice_size(spec.target_profile)), total = 1;
            for (std::size_t b = 1; b < layout.blocks(); ++b)
                total *= slice;
            return total.str();
        }();
        result.stats.generators.resize(layout.blocks() - 1);
        for (std::size_t b = 1; b < layout.blocks(); ++b)
            result.stats.generators[b - 1].element = layout.generator(b) + 1;

        // The first generator depends on R_1 alone; its candidates are the
        // unit of work split between threads.
        std::vector<std::vector<Permutation>> first_level;
        {
            std::vector<const Permutation *> t(layout.n, nullptr);
            t[0] = &layout.r1;
            auto & stats = result.stats.generators[0];
            GeneratorSearch search(layout, 1, t);
            search.run([&](const std::vector<index_t> & images) {
                ++stats.generated;
                auto translations = block_translations(layout, 1, Permutation::from_images(images));
                for (std::uint32_t j = 0; j < layout.lengths[1]; ++j)
                    t[layout.start[1] + j] = &translations[j];
                if (block_internally_consistent(layout, 1, t)) {
                    ++stats.block_consistent;
                    first_level.push_back(std::move(translations));
                }
                return true;
            });
        }

        const auto workers = std::max(1u, spec.threads);
        std::vector<WorkerOutput> outputs(workers);
        {
            std::vector<std::jthread> threads;
            for (unsigned w = 0; w < workers; ++w)
                threads.emplace_back([&, w] {
                    Worker worker(layout, first_level, target, spec.max_results);
                    worker.run(w, workers);
                    outputs[w] = std::move(worker).output();
                });
        }

        for (auto & out : outputs) {
            auto & s = result.stats;
            for (std::size_t b = 1; b < s.generators.size(); ++b) {
                s.generators[b].generated += out.stats.generators[b].generated;
                s.generators[b].block_consistent += out.stats.generators[b].block_consistent;
            }
            s.partial_pruned += out.stats.partial_pruned;
            s.tuples_examined += out.stats.tuples_examined;
            s.conjugation_consistent += out.stats.conjugation_consistent;
            s.distributive += out.stats.distributive;
            s.connected += out.stats.connected;
            s.profile_matched += out.stats.profile_matched;
            result.truncated = result.truncated || out.stopped_early;
            for (auto & f : out.found)
                result.found.push_back(std::move(f));
        }
        // The first k by candidate order are independent of the partition:
        // each worker holds its own first k.
        std::sort(result.found.begin(), result.found.end(),
            [](const Found & a, const Found & b) { return a.ordinal < b.ordinal; });
        if (spec.max_results && result.found.size() > *spec.max_results) {
            result.found.erase(result.found.begin() + static_cast<std::ptrdiff_t>(*spec.max_results), result.found.end());
            result.truncated = true;
        }
        result.stats.elapsed_ms
            = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        return result;
    }
}

void validate_search_spec(const SearchSpec & spec)
{
    const auto & lengths = spec.target_profile;
    if (lengths.size() < 2 || lengths[0] != 1)
        throw QuandleError(ErrorKind::InvalidProfile, "profile must start at 1 and have c >= 2 cycles");
    auto sorted = lengths;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw QuandleError(ErrorKind::RepeatedLengthsUnsupported,
            "repeated cycle lengths are outside the canonical-form search");
    if (sorted != lengths)
        throw QuandleError(ErrorKind::InvalidProfile, "profile lengths must be strictly increasing");
    const auto n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    if (n > spec.max_order)
        throw QuandleError(ErrorKind::SizeLimitExceeded,
            "order " + std::to_string(n) + " exceeds the search cap " + std::to_string(spec.max_order),
            {static_cast<std::uint32_t>(n)});
}

auto class_slice_size(const std::vector<std::uint32_t> & lengths) -> std::string
{
    const auto n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    boost::multiprecision::cpp_int count = 1;
    for (std::size_t k = 2; k < n; ++k)
        count *= k;
    // (n-1)! / prod l_i over the non-fixed cycles, lengths being distinct
    for (std::size_t i = 1; i < lengths.size(); ++i)
        count /= lengths[i];
    return count.str();
}

auto search_by_profile(const SearchSpec & spec) -> SearchResult
{
    auto enumeration = enumerate(spec);
    SearchResult result;
    result.stats = std::move(enumeration.stats);
    result.truncated = enumeration.truncated;
    for (auto & f : enumeration.found)
        result.quandles.push_back(std::move(f.table));
    std::sort(result.quandles.begin(), result.quandles.end());

    if (spec.dedup_isomorphic) {
        for (std::size_t k = 0; k < result.quandles.size(); ++k) {
            bool placed = false;
            for (auto & cls : result.iso_classes)
                if (are_isomorphic(result.quandles[cls.front()], result.quandles[k])) {
                    cls.push_back(k);
                    placed = true;
                    break;
                }
            if (! placed)
                result.iso_classes.push_back({k});
        }
    }
    return result;
}

auto prune_report(const SearchSpec & spec) -> SearchStats
{
    return enumerate(spec).stats;
}

} // namespace quandlekit
