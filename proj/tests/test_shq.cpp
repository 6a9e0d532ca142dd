#include "fixtures.hpp"

#include <quandlekit/construct.hpp>
#include <quandlekit/shq.hpp>

#include <doctest.h>

using namespace quandlekit;

using Lengths = std::vector<std::uint64_t>;

TEST_CASE("classification")
{
    auto c = classify_shq(load_fixture("q94.qdl"));
    REQUIRE(c.is_shq());
    CHECK(*c.params == ShqParams{2, 3, 3, 1});
    CHECK(c.profile.to_string() == "(1,2,6)");

    auto t = classify_shq(load_fixture("trivial3.qdl"));
    CHECK_FALSE(t.is_shq());
    CHECK(t.diagnostic.find("repeats") != std::string::npos);

    CHECK(*classify_shq(affine_quandle(5, 2)).params == ShqParams{4, 2, 5, 1});
    CHECK(*classify_shq(cyclic_type_quandle(2, 2)).params == ShqParams{3, 2, 2, 2});
    CHECK(*classify_shq(cyclic_type_quandle(3, 2)).params == ShqParams{8, 2, 3, 2});
    CHECK(*classify_shq(shq_family(3, 4)).params == ShqParams{2, 4, 3, 1});
}

TEST_CASE("predicted profiles")
{
    CHECK(predicted_profile(2, 3) == Lengths{1, 2, 6});
    CHECK(predicted_profile(4, 3) == Lengths{1, 4, 20});
    CHECK(predicted_profile(2, 4) == Lengths{1, 2, 6, 18});
    CHECK(predicted_profile(6, 2) == Lengths{1, 6});
    CHECK_THROWS_AS(predicted_profile(1, 3), QuandleError);
    CHECK_THROWS_AS(predicted_profile(2, 1), QuandleError);
    CHECK_THROWS_AS(predicted_profile(2, 80), QuandleError);
}

TEST_CASE("shape of candidate profiles")
{
    CHECK(has_shq_shape({1, 2, 6}));
    CHECK(has_shq_shape({1, 5}));
    CHECK_FALSE(has_shq_shape({1}));
    CHECK_FALSE(has_shq_shape({2, 4}));
    CHECK_FALSE(has_shq_shape({1, 2, 3}));
    CHECK_FALSE(has_shq_shape({1, 2, 2}));
}

TEST_CASE("admissibility")
{
    SUBCASE("not a prime power")
    {
        for (const auto & l : {Lengths{1, 5}, Lengths{1, 5, 10}}) {
            auto v = check_profile_admissible(l);
            CHECK(v.ruled_out());
            CHECK(v.reason == ObstructionReason::NotPrimePower);
        }
    }
    SUBCASE("formula mismatch")
    {
        auto v = check_profile_admissible({1, 6, 12});
        CHECK(v.ruled_out());
        CHECK(v.reason == ObstructionReason::FormulaMismatch);
        CHECK(v.index == 3);
        CHECK(v.expected == 42);
        CHECK(v.actual == 12);
    }
    SUBCASE("not ruled out")
    {
        for (const auto & l : {Lengths{1, 6}, Lengths{1, 2, 6, 18}, Lengths{1, 4, 20}, Lengths{1, 6, 42}})
            CHECK_FALSE(check_profile_admissible(l).ruled_out());
    }
    CHECK_THROWS_WITH_AS(check_profile_admissible({1, 2, 3}), doctest::Contains("NotSHQShape"), QuandleError);
}

TEST_CASE("canonical form")
{
    auto q = load_fixture("q94.qdl");
    auto cf = canonical_relabel(q);
    CHECK(cf.table == q);
    CHECK(cf.decomposition.relabeling().is_identity());

    auto d = canonical_decomposition(q);
    CHECK(d.lengths() == std::vector<std::uint32_t>{1, 2, 6});
    CHECK(d.partial_sum(2) == 3);
    CHECK(labels_of(d.prefix(2)) == std::vector<index_t>{1, 2, 3});
    CHECK(labels_of(d.block(3)) == std::vector<index_t>{4, 5, 6, 7, 8, 9});
    CHECK(d.block_of(Element::from_label(5)) == 3);

    auto moved = q.relabeled(Permutation::from_cycles(9, {{1, 6}, {2, 8, 4}}));
    CHECK_THROWS_AS(canonical_decomposition(moved), QuandleError);
    auto back = canonical_relabel(moved);
    CHECK(right_translation(back.table, Element::from_label(1)).to_cycle_string() == "(1)(2 3)(4 5 6 7 8 9)");
    CHECK(are_isomorphic(back.table, q));
    CHECK(moved.relabeled(back.decomposition.relabeling()) == back.table);

    CHECK_THROWS_AS(canonical_relabel(trivial_quandle(3)), QuandleError);
}

TEST_CASE("conjugation relations")
{
    auto q = load_fixture("q94.qdl");
    CHECK(check_conjugation_relations(q).passed);
    for (auto [p, c] : {std::pair{3u, 4u}, std::pair{5u, 3u}})
        CHECK(check_conjugation_relations(canonical_relabel(shq_family(p, c)).table).passed);

    // swap the columns of 5 and 6, leaving R_1 alone
    auto entries = q.entries();
    for (index_t x = 0; x < 9; ++x)
        std::swap(entries[x * 9 + 4], entries[x * 9 + 5]);
    QuandleTable broken(detail::TrustedTag{}, 9, entries);
    auto check = check_conjugation_relations(broken);
    CHECK_FALSE(check.passed);
    CHECK(check.witness == std::vector<std::uint64_t>{3, 2});
}

TEST_CASE("fix blocks of Q_{9,4}")
{
    auto q = load_fixture("q94.qdl");
    auto f = fix_blocks(q, 2);
    REQUIRE(f.blocks.size() == 3);
    CHECK(labels_of(f.blocks[0]) == std::vector<index_t>{1, 2, 3});
    CHECK(labels_of(f.blocks[1]) == std::vector<index_t>{4, 6, 8});
    CHECK(labels_of(f.blocks[2]) == std::vector<index_t>{5, 7, 9});
    CHECK(labels_of(f.fixed_set(Element::from_label(9))) == std::vector<index_t>{5, 7, 9});
    CHECK(fix_blocks(q, 3).blocks.size() == 9);

    // x*1 = x*2 = x, and R_3 swaps 1 and 2
    auto uneven = QuandleTable::from_rows({{1, 1, 2}, {2, 2, 1}, {3, 3, 3}});
    CHECK_THROWS_WITH_AS(fix_blocks(uneven, 1), doctest::Contains("NotAPartition"), QuandleError);
}

TEST_CASE("main theorem on Q_{9,4}")
{
    auto report = verify_main_theorem(load_fixture("q94.qdl"));
    CHECK(report.is_shq());
    CHECK(report.all_passed());
    REQUIRE(report.classes.size() == 2);
    CHECK(report.classes[0].order == 3);
    CHECK(report.classes[0].matches_prefix == 2);
    CHECK(report.classes[0].members == 3);
    CHECK(report.classes[1].order == 9);
    CHECK(report.classes[1].matches_prefix == 3);

    CHECK_FALSE(verify_main_theorem(trivial_quandle(3)).is_shq());
}

TEST_CASE("lcm divisibility")
{
    auto q = load_fixture("q94.qdl");
    auto r = lcm_divisibility(q);
    CHECK(r.triples == 81);
    CHECK(r.violations == 0);

    auto entries = q.entries();
    entries[1 * 9 + 2] = 3; // 2*3 := 4, a 6-cycle point from two 2-cycle points
    auto bad = lcm_divisibility(QuandleTable(detail::TrustedTag{}, 9, entries));
    CHECK(bad.violations >= 1);
    CHECK(bad.first_witness == std::vector<std::uint64_t>{2, 3, 4});
}
