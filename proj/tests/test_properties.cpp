#include "brute_force.hpp"
#include "shq_fixtures.hpp"

#include <quandlekit/number_theory.hpp>
#include <quandlekit/qdl.hpp>
#include <quandlekit/structure.hpp>

#include <doctest.h>

#include <random>

using namespace quandlekit;

namespace {

const auto & fixtures()
{
    static const auto all = shq_fixtures(81);
    return all;
}

auto params_of(const QuandleTable & q) -> ShqParams
{
    auto c = classify_shq(q);
    REQUIRE(c.is_shq());
    return *c.params;
}

auto fixed_set(const Permutation & p) -> std::vector<index_t>
{
    std::vector<index_t> out;
    for (index_t x = 0; x < p.size(); ++x)
        if (p[x] == x)
            out.push_back(x);
    return out;
}

}

TEST_CASE("fixtures are SHQs in canonical form")
{
    CHECK(fixtures().size() >= 20);
    for (const auto & [name, q] : fixtures()) {
        INFO(name);
        CHECK(classify_shq(q).is_shq());
        CHECK_NOTHROW(canonical_decomposition(q));
    }
}

TEST_CASE("right translations conjugate along the operation")
{
    for (const auto & [name, q] : fixtures()) {
        INFO(name);
        auto rs = right_translations(q);
        std::size_t failures = 0;
        for (index_t i = 0; i < q.order(); ++i) {
            CHECK(rs[i][i] == i);
            for (index_t j = 0; j < q.order(); ++j)
                failures += rs[rs[i][j]] != rs[j].conjugated_by(rs[i]);
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("translations carry fixed sets of powers to fixed sets")
{
    for (const auto & [name, q] : fixtures()) {
        INFO(name);
        auto rs = right_translations(q);
        auto ell = params_of(q).ell;
        for (auto m : {std::uint64_t{1}, ell, ell + 1}) {
            for (index_t x = 0; x < q.order(); x += 3)
                for (index_t y = 0; y < q.order(); y += 5) {
                    auto image = fixed_set(rs[x].power(static_cast<std::int64_t>(m)));
                    for (auto & z : image)
                        z = rs[y][z];
                    std::sort(image.begin(), image.end());
                    CHECK(image == fixed_set(rs[rs[y][x]].power(static_cast<std::int64_t>(m))));
                }
        }
    }
}

TEST_CASE("cycle-length chain, prefixes and latinness")
{
    for (const auto & [name, q] : fixtures()) {
        INFO(name);
        auto d = canonical_decomposition(q);
        for (std::size_t i = 2; i <= d.cycle_count(); ++i) {
            CHECK(d.partial_sum(i - 1) < d.length(i));
            CHECK(d.length(i) % d.length(i - 1) == 0);
            auto x = d.prefix(i);
            REQUIRE(is_closed(q, x));
            auto sub = subquandle_table(q, x);
            std::vector<std::uint32_t> head(d.lengths().begin(), d.lengths().begin() + static_cast<std::ptrdiff_t>(i));
            CHECK(profile(sub).connected_form == CycleStructure(head));
        }
        CHECK(is_latin(q));
        CHECK(lcm_divisibility(q).violations == 0);
        CHECK(check_conjugation_relations(q).passed);
    }
}

TEST_CASE("F and B blocks")
{
    for (const auto & [name, q] : fixtures()) {
        INFO(name);
        auto params = params_of(q);
        auto d = canonical_decomposition(q);
        const auto ell = params.ell;
        const auto c = params.c;
        auto rs = right_translations(q);

        for (std::size_t i = 2; i <= c; ++i) {
            auto f = fix_blocks(q, d.length(i));
            for (const auto & block : f.blocks) {
                CHECK(block.size() == d.partial_sum(i));
                CHECK(is_closed(q, block));
            }
            CHECK(are_isomorphic(subquandle_table(q, f.blocks.back()), subquandle_table(q, d.prefix(i))));
        }

        auto b = fix_blocks(q, ell);
        std::size_t violations = 0;
        for (index_t x = 0; x < q.order(); ++x) {
            const auto & bx = b.fixed_set(Element{x});
            CHECK(bx.size() == ell + 1);
            auto rx = rs[x].power(static_cast<std::int64_t>(ell));
            for (auto y : bx)
                violations += rs[y.index()].power(static_cast<std::int64_t>(ell)) != rx;
        }
        CHECK(violations == 0);

        // B_{n_{i+1}} = {n_i + j l (l+1)^{i-2} : j = 1..l+1}
        for (std::size_t i = 2; i < c; ++i) {
            std::uint64_t step = ell;
            for (std::size_t k = 2; k < i; ++k)
                step *= ell + 1;
            std::vector<index_t> expected;
            for (std::uint64_t j = 1; j <= ell + 1; ++j)
                expected.push_back(static_cast<index_t>(d.partial_sum(i) + j * step));
            CHECK(labels_of(b.fixed_set(Element::from_label(d.partial_sum(i + 1)))) == expected);
        }
    }
}

TEST_CASE("h_p - 1 is a unit modulo p")
{
    for (std::uint64_t p = 3; p < 2000; p += 2) {
        if (! number_theory::is_prime(p))
            continue;
        auto r = primitive_root(p);
        CHECK(std::gcd(r.h - 1, p) == 1);
        CHECK(std::gcd(r.h, p) == 1);
    }
}

TEST_CASE("quandles of cyclic type have only trivial subquandles")
{
    for (auto [p, a] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{2u, 4u}}) {
        auto q = cyclic_type_quandle(p, a);
        for (const auto & e : enumerate_subquandles(q).subquandles)
            CHECK((e.elements.size() == 1 || e.elements.size() == q.order()));
    }
}

TEST_CASE("composed family embeddings stay homomorphisms")
{
    for (std::uint32_t c : {2u, 3u}) {
        auto first = family_embedding_map(3, c);
        auto second = family_embedding_map(3, c + 1);
        auto source = shq_family(3, c);
        auto target = shq_family(3, c + 2);
        for (index_t x = 0; x < source.order(); ++x) {
            auto fx = second[first[x] - 1] - 1;
            CHECK(fx == (9 * x) % target.order());
            for (index_t y = 0; y < source.order(); ++y) {
                auto fy = second[first[y] - 1] - 1;
                auto fxy = second[first[source.at(x, y)] - 1] - 1;
                CHECK(target.at(fx, fy) == fxy);
            }
        }
    }
}

TEST_CASE("closure, isomorphism and format round trips")
{
    std::mt19937 rng(20261014);
    for (const auto & [name, q] : fixtures()) {
        if (q.order() > 27)
            continue;
        INFO(name);
        std::uniform_int_distribution<index_t> pick(0, static_cast<index_t>(q.order() - 1));
        for (int trial = 0; trial < 5; ++trial) {
            auto seed = make_element_set({Element{pick(rng)}, Element{pick(rng)}});
            auto once = subquandle_closure(q, seed);
            CHECK(subquandle_closure(q, once) == once);
        }

        std::vector<index_t> images(q.order());
        std::iota(images.begin(), images.end(), 0);
        std::shuffle(images.begin(), images.end(), rng);
        auto moved = q.relabeled(Permutation::from_images(images));
        auto there = are_isomorphic(q, moved);
        auto back = are_isomorphic(moved, q);
        REQUIRE(there);
        REQUIRE(back);
        CHECK(is_homomorphism(q, moved, *there));
        CHECK(is_homomorphism(moved, q, *back));
        CHECK(canonical_relabel(moved).table.order() == q.order());
        CHECK(are_isomorphic(canonical_relabel(moved).table, q));

        CHECK(QuandleTable::from_rows(parse_qdl(format_qdl(moved)).rows) == moved);
    }
}

TEST_CASE("isomorphism verdicts agree with brute force on order 8 and 9")
{
    std::vector<QuandleTable> qs;
    for (const auto & [name, q] : fixtures())
        if (q.order() == 8 || q.order() == 9)
            qs.push_back(q);
    REQUIRE(qs.size() >= 4);
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j)
            CHECK(are_isomorphic(qs[i], qs[j]).has_value()
                == brute::isomorphic(zero_based_rows(qs[i]), zero_based_rows(qs[j])));
}
