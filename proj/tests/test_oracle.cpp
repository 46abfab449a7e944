#include <catch2/catch.hpp>

#include <set>

#include "test_support.hpp"

using namespace qbel;
using namespace qbel::testing;

TEST_CASE("direct sup-additivity sweep on the example measures") {
    CHECK(oracle::check_supadditivity_direct(example_bel(), 2).pass);
    CHECK(oracle::check_supadditivity_direct(example_bel(), 3).pass);
    CHECK(oracle::check_supadditivity_direct(example_p(), 3).pass);

    const auto f_result = oracle::check_supadditivity_direct(example_f(), 2);
    REQUIRE_FALSE(f_result.pass);
    CHECK(f_result.witness->subsets == std::vector<SubsetId>{SubsetId{1}, SubsetId{2}});
    // g({theta1}) + g({theta2}) - g({}) = 13/10 exceeds g(frame) = 1
    CHECK(f_result.witness->detail.find("13/10") != std::string::npos);
}

TEST_CASE("singleton collections never violate the inequality") {
    const SetFunction weird = make_set_function(frame2(), {"0", "7/2", "1/9", "2"});
    CHECK(oracle::check_supadditivity_direct(weird, 1).pass);
}

TEST_CASE("direct sweep agrees with the Mobius route on an adversarial corpus") {
    std::vector<SetFunction> corpus = {
        example_p(), example_bel(), example_f(), vacuous_bel2(),
        make_set_function(frame2(), {"0", "1/4", "1/4", "1"}),
        make_set_function(frame2(), {"0", "1/2", "1/2", "1/2"}),
        make_set_function(frame2(), {"0", "1", "1", "1"}),
        make_set_function(frame3(), {"0", "1/3", "1/3", "1/3", "1/3", "1/3", "1/3", "1"}),
        make_set_function(frame3(), {"0", "0", "0", "1/2", "0", "1/2", "1/2", "1"}),
        make_set_function(frame3(), {"0", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1"}),
    };
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        corpus.push_back(belief_from_mass(oracle::random_mass(frame3(), World::closed, seed),
                                          World::closed));
    std::mt19937_64 rng(99);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rational> values(frame3().subset_count());
        values[0] = 0;
        for (std::size_t i = 1; i < values.size(); ++i) {
            Rational r(static_cast<long>(rng() % 9), 8);
            r.canonicalize();
            values[i] = r;
        }
        corpus.emplace_back(frame3(), values);
    }

    for (const SetFunction& g : corpus) {
        const bool mobius_belief = check_belief(g).pass();
        const bool direct_belief = g.at(empty_subset) == 0 &&
                                   g.at(g.frame().full_set()) == 1 &&
                                   oracle::check_supadditivity_direct(g, 3).pass;
        CHECK(mobius_belief == direct_belief);
    }
}

TEST_CASE("bounded balance sweep accepts the example relation") {
    CHECK(oracle::check_scott_axiom_direct(example_relation(), 2).pass);
    CHECK(oracle::check_scott_axiom_direct(example_relation(), 3).pass);
}

TEST_CASE("bounded balance sweep refutes the bottom-heavy ranking") {
    const auto result = oracle::check_scott_axiom_direct(ranking2({{3}, {0}, {1}, {2}}), 2);
    REQUIRE_FALSE(result.pass);
    CHECK(result.witness.has_value());
}

TEST_CASE("a full-monotonicity violation yields a length-two balance witness") {
    for (const PreferenceRelation& r : oracle::enumerate_rankings(frame2()))
        if (!check_axiom(r, RelationAxiom::Q5).pass)
            CHECK_FALSE(oracle::check_scott_axiom_direct(r, 1).pass);
}

TEST_CASE("grid search finds the example probability first") {
    const auto found = oracle::search_probability_grid(example_relation(), 10);
    REQUIRE(found.has_value());
    CHECK(found->values() ==
          std::vector<Rational>{Rational(0), Rational(2, 5), Rational(3, 5), Rational(1)});
}

TEST_CASE("grid search on degenerate relations") {
    CHECK_FALSE(oracle::search_probability_grid(trivial_relation(frame2()), 60).has_value());
    const auto uniform = oracle::search_probability_grid(ranking2({{0}, {1, 2}, {3}}), 2);
    REQUIRE(uniform.has_value());
    CHECK(uniform->values() ==
          std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)});
}

TEST_CASE("random masses respect their contract") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const MassFunction closed = oracle::random_mass(frame3(), World::closed, seed);
        CHECK(closed.closed_world());
        const MassFunction open = oracle::random_mass(frame3(), World::open, seed);
        CHECK(open.at(empty_subset) >= 0);
    }
    CHECK(oracle::random_mass(frame3(), World::closed, 42) ==
          oracle::random_mass(frame3(), World::closed, 42));
    // open-world seeds must cover both zero and positive empty-set mass
    bool saw_zero = false, saw_positive = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const MassFunction m = oracle::random_mass(frame2(), World::open, seed);
        (m.at(empty_subset) == 0 ? saw_zero : saw_positive) = true;
    }
    CHECK(saw_zero);
    CHECK(saw_positive);
}

TEST_CASE("random masses always produce belief functions") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const MassFunction m = oracle::random_mass(frame3(), World::closed, seed);
        CHECK(check_belief(belief_from_mass(m, World::closed)).pass());
    }
}

TEST_CASE("ranking enumeration counts") {
    const Frame f1({"only"});
    const auto small = oracle::enumerate_rankings(f1);
    REQUIRE(small.size() == 3);

    const auto all = oracle::enumerate_rankings(frame2());
    REQUIRE(all.size() == 75);
    for (const PreferenceRelation& r : all)
        CHECK(check_weak_order(r).pass());

    // each ranking appears exactly once
    std::set<std::vector<std::vector<std::uint32_t>>> seen;
    for (const PreferenceRelation& r : all) {
        const RankedPartition part = partition(r);
        std::vector<std::vector<std::uint32_t>> key;
        for (const auto& cls : part.classes) {
            std::vector<std::uint32_t> bits;
            for (SubsetId s : cls)
                bits.push_back(s.bits);
            key.push_back(bits);
        }
        seen.insert(key);
    }
    CHECK(seen.size() == 75);

    CHECK_THROWS_AS(oracle::enumerate_rankings(frame3()), input_error);
}

TEST_CASE("random rankings are deterministic weak orders") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PreferenceRelation r = oracle::random_ranking(frame3(), seed);
        CHECK(check_weak_order(r).pass());
        CHECK(r == oracle::random_ranking(frame3(), seed));
    }
}

TEST_CASE("sampled balance probes never refute a representable relation") {
    const auto sampled = oracle::check_scott_axiom_sampled(example_relation(), 3, 5000, 7);
    CHECK(sampled.pass);
    const auto refuted =
        oracle::check_scott_axiom_sampled(ranking2({{3}, {0}, {1}, {2}}), 3, 20000, 7);
    CHECK_FALSE(refuted.pass);
}
