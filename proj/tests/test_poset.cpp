#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "staircase/permutation.hpp"
#include "staircase/poset.hpp"
#include "staircase/verify.hpp"

using namespace staircase;

namespace {

const Composition kAlpha({4, 5, 4, 1, 0, 2, 0}, 8);
const Composition kAlphaPrime({2, 5, 4, 1, 0, 2, 1}, 8);

} // namespace

TEST_CASE("check_cover on the worked examples") {
    CHECK(check_cover(kAlpha, kAlphaPrime) == CoverWitness{1, 7, 2});
    CHECK(check_cover(kAlpha, Composition({4, 5, 3, 1, 0, 2, 0}, 8)) == CoverWitness{3, 8, 1});
    CHECK_FALSE(check_cover(kAlpha, kAlpha));
    CHECK_FALSE(check_cover(kAlphaPrime, kAlpha));  // wrong direction
    CHECK_FALSE(check_cover(kAlpha, Composition({4, 5, 4, 1, 0, 1, 1}, 8)));
    CHECK_THROWS_AS(check_cover(kAlpha, Composition::zero(4)), degree_mismatch);
}

TEST_CASE("removal partner columns") {
    CHECK(removal_partner(kAlpha, 1, 2) == 7);
    CHECK(removal_partner(kAlpha, 1, 3) == 4);
    CHECK(removal_partner(kAlpha, 1, 1) == 8);
    CHECK(removal_partner(Composition({1}, 2), 1, 1) == 2);
    CHECK_THROWS_AS(removal_partner(kAlpha, 1, 5), index_error);
    CHECK_THROWS_AS(removal_partner(kAlpha, 5, 1), index_error);
}

TEST_CASE("removability criterion") {
    CHECK(is_removable(kAlpha, 1, 1));
    CHECK(is_removable(kAlpha, 1, 2));
    CHECK(is_removable(kAlpha, 1, 3));
    CHECK_FALSE(is_removable(kAlpha, 1, 4));
    CHECK_THROWS_AS(is_removable(kAlpha, 1, 5), index_error);  // ill-posed, not false
    CHECK_THROWS_AS(is_removable(kAlpha, 5, 1), index_error);  // zero part has no removals
}

TEST_CASE("removals of the worked example") {
    CHECK(removal(kAlpha, 1, 1) == Composition({3, 5, 4, 1, 0, 2, 0}, 8));
    CHECK(removal(kAlpha, 1, 2) == kAlphaPrime);
    CHECK(removal(kAlpha, 1, 3) == Composition({1, 5, 4, 3, 0, 2, 0}, 8));
    CHECK_THROWS_AS(removal(kAlpha, 1, 4), not_removable);
    for (int z = 1; z <= 3; ++z)
        CHECK(check_cover(kAlpha, removal(kAlpha, 1, z)) ==
              CoverWitness{1, removal_partner(kAlpha, 1, z), z});
}

TEST_CASE("insertion partner columns") {
    CHECK(insertion_partner(kAlphaPrime, 1, 2) == 7);
    CHECK(insertion_partner(kAlphaPrime, 1, 3) == 3);
    CHECK(insertion_partner(kAlphaPrime, 1, 4) == 2);
    CHECK_THROWS_AS(insertion_partner(kAlphaPrime, 1, 6), index_error);
}

TEST_CASE("insertability criterion") {
    CHECK(is_insertable(kAlphaPrime, 1, 1));
    CHECK(is_insertable(kAlphaPrime, 1, 2));
    CHECK(is_insertable(kAlphaPrime, 1, 3));
    CHECK(is_insertable(kAlphaPrime, 1, 4));
    CHECK_FALSE(is_insertable(kAlphaPrime, 1, 5));  // range-valid, criterion fails
    CHECK_THROWS_AS(is_insertable(kAlphaPrime, 1, 6), index_error);
}

TEST_CASE("insertions of the worked example") {
    CHECK(insertion(kAlphaPrime, 1, 1) == Composition({3, 5, 4, 1, 0, 2, 1}, 8));
    CHECK(insertion(kAlphaPrime, 1, 2) == kAlpha);
    CHECK(insertion(kAlphaPrime, 1, 3) == Composition({5, 5, 2, 1, 0, 2, 1}, 8));
    CHECK(insertion(kAlphaPrime, 1, 4) == Composition({6, 2, 4, 1, 0, 2, 1}, 8));
    CHECK_THROWS_AS(insertion(kAlphaPrime, 1, 5), not_insertable);
    for (int z = 1; z <= 4; ++z)
        CHECK(check_cover(insertion(kAlphaPrime, 1, z), kAlphaPrime) ==
              CoverWitness{1, insertion_partner(kAlphaPrime, 1, z), z});
}

TEST_CASE("lower covers") {
    CHECK(lower_covers(Composition::zero(5)).empty());

    const auto covers = lower_covers(kAlpha);
    std::vector<Composition> from_row_one;
    for (const auto& [below, witness] : covers)
        if (witness.i == 1) from_row_one.push_back(below);
    CHECK(from_row_one == std::vector<Composition>{Composition({3, 5, 4, 1, 0, 2, 0}, 8),
                                                   kAlphaPrime,
                                                   Composition({1, 5, 4, 3, 0, 2, 0}, 8)});
    for (const auto& [below, witness] : covers)
        CHECK(check_cover(kAlpha, below) == witness);
}

TEST_CASE("lower cover counts agree with the oracle over degree 5") {
    for (const auto& w : all_permutations(5))
        CHECK(lower_covers(encode(w)).size() == all_bruhat_lower_covers(w).size());
}

TEST_CASE("upper covers") {
    CHECK(upper_covers(Composition({4, 3, 2, 1}, 5)).empty());  // top of the poset

    const auto covers = upper_covers(kAlphaPrime);
    std::vector<Composition> from_row_one;
    for (const auto& [above, witness] : covers)
        if (witness.i == 1) from_row_one.push_back(above);
    CHECK(from_row_one == std::vector<Composition>{Composition({3, 5, 4, 1, 0, 2, 1}, 8), kAlpha,
                                                   Composition({5, 5, 2, 1, 0, 2, 1}, 8),
                                                   Composition({6, 2, 4, 1, 0, 2, 1}, 8)});

    const auto atoms = upper_covers(Composition::zero(3));
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].first == Composition({1, 0}, 3));
    CHECK(atoms[0].second == CoverWitness{1, 2, 1});
    CHECK(atoms[1].first == Composition({0, 1}, 3));
    CHECK(atoms[1].second == CoverWitness{2, 3, 1});
}

TEST_CASE("upper covers equal dualized lower covers of the dual") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& a : all_compositions(n)) {
            std::set<std::vector<int>> via_insertion;
            for (const auto& [above, witness] : upper_covers(a))
                via_insertion.insert(above.parts());
            std::set<std::vector<int>> via_dual;
            for (const auto& [below, witness] : lower_covers(dual(a)))
                via_dual.insert(dual(below).parts());
            CHECK(via_insertion == via_dual);
        }
}

TEST_CASE("order relation") {
    CHECK(leq(kAlphaPrime, kAlpha));
    CHECK(leq(kAlpha, kAlpha));
    CHECK_FALSE(leq(Composition({0, 1}, 3), Composition({1, 0}, 3)));
    CHECK_FALSE(leq(Composition({1, 0}, 3), Composition({0, 1}, 3)));
    CHECK(leq(Composition::zero(4), Composition({3, 2, 1}, 4)));
    CHECK_FALSE(leq(Composition({3, 2, 1}, 4), Composition::zero(4)));
    CHECK_THROWS_AS(leq(Composition::zero(4), Composition::zero(5)), degree_mismatch);
}

TEST_CASE("componentwise order implies the cover order") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        std::vector<int> upper(static_cast<std::size_t>(n - 1));
        std::vector<int> lower(static_cast<std::size_t>(n - 1));
        for (int i = 1; i <= n - 1; ++i) {
            upper[static_cast<std::size_t>(i - 1)] = static_cast<int>(rng() % (n - i + 1));
            lower[static_cast<std::size_t>(i - 1)] =
                static_cast<int>(rng() % (upper[static_cast<std::size_t>(i - 1)] + 1));
        }
        CHECK(leq(Composition(lower, n), Composition(upper, n)));
    }
}

TEST_CASE("hasse diagrams at small degrees") {
    const HasseDiagram two = hasse(2);
    CHECK(two.nodes().size() == 2);
    CHECK(two.edges().size() == 1);

    const HasseDiagram three = hasse(3);
    CHECK(three.nodes().size() == 6);
    CHECK(three.edges().size() == 8);

    const HasseDiagram four = hasse(4);
    CHECK(four.nodes().size() == 24);
    std::size_t oracle_edges = 0;
    for (const auto& w : all_permutations(4)) oracle_edges += all_bruhat_lower_covers(w).size();
    CHECK(four.edges().size() == oracle_edges);

    for (const auto& edge : four.edges()) {
        const auto& upper = four.nodes()[static_cast<std::size_t>(edge.upper)];
        const auto& lower = four.nodes()[static_cast<std::size_t>(edge.lower)];
        CHECK(weight(upper) == weight(lower) + 1);  // graded by weight
        CHECK(length(decode(upper)) == weight(upper));
    }

    CHECK_THROWS_AS(hasse(10), resource_limit);
    CHECK_THROWS_AS(hasse(0), index_error);
}

TEST_CASE("edge multiset equals the oracle Bruhat Hasse") {
    for (int n = 2; n <= 5; ++n) {
        const HasseDiagram diagram = hasse(n);
        std::multiset<std::tuple<std::vector<int>, std::vector<int>, int, int>> poset_edges;
        for (const auto& edge : diagram.edges())
            poset_edges.insert(
                {diagram.nodes()[static_cast<std::size_t>(edge.upper)].parts(),
                 diagram.nodes()[static_cast<std::size_t>(edge.lower)].parts(),
                 edge.witness.i, edge.witness.j});
        std::multiset<std::tuple<std::vector<int>, std::vector<int>, int, int>> oracle_edges;
        for (const auto& w : all_permutations(n))
            for (const auto& [lower, t] : all_bruhat_lower_covers(w))
                oracle_edges.insert({encode(w).parts(), encode(lower).parts(), t.i, t.j});
        CHECK(poset_edges == oracle_edges);
    }
}

TEST_CASE("cover rows split exactly at the witness column") {
    for (int n = 2; n <= 5; ++n) {
        const HasseDiagram diagram = hasse(n);
        for (const auto& edge : diagram.edges()) {
            const auto& upper = diagram.nodes()[static_cast<std::size_t>(edge.upper)];
            const auto& lower = diagram.nodes()[static_cast<std::size_t>(edge.lower)];
            const auto [i, j, z] = edge.witness;
            for (int k = i + 1; k <= j; ++k)
                CHECK(extended_code_entry(upper, i, k) == extended_code_entry(lower, i, k));
            CHECK(extended_code_entry(upper, i, j + 1) == extended_code_entry(upper, i, j) + 1);
            CHECK(extended_code_entry(lower, i, j + 1) == extended_code_entry(lower, i, j));
            for (int k = j + 1; k <= n + 1; ++k)
                CHECK(extended_code_entry(upper, i, k) > extended_code_entry(lower, i, k));
            for (int k = i + 1; k <= j - 1; ++k) {
                const int probe = upper.part(k) + extended_code_entry(upper, i, k);
                CHECK((probe >= upper.part(i) || probe < lower.part(i)));
            }
        }
    }
}

TEST_CASE("partners shrink as the amount grows") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& a : all_compositions(n))
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<std::pair<int, int>> removable;  // (z, partner)
                for (int z = 1; z <= a.part(i); ++z)
                    if (is_removable(a, i, z)) removable.emplace_back(z, removal_partner(a, i, z));
                for (std::size_t s = 1; s < removable.size(); ++s) {
                    CHECK(removable[s].first > removable[s - 1].first);
                    CHECK(removable[s].second < removable[s - 1].second);
                }
                std::vector<std::pair<int, int>> insertable;
                for (int z = 1; z <= n - i - a.part(i); ++z)
                    if (is_insertable(a, i, z))
                        insertable.emplace_back(z, insertion_partner(a, i, z));
                for (std::size_t s = 1; s < insertable.size(); ++s) {
                    CHECK(insertable[s].first > insertable[s - 1].first);
                    CHECK(insertable[s].second < insertable[s - 1].second);
                }
            }
}

TEST_CASE("removal and insertion are mutually inverse, exhaustively") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& a : all_compositions(n))
            for (int i = 1; i <= n - 1; ++i)
                for (int z = 1; z <= a.part(i); ++z) {
                    if (!is_removable(a, i, z)) continue;
                    const Composition below = removal(a, i, z);
                    CHECK(insertion(below, i, z) == a);
                    CHECK(insertion_partner(below, i, z) == removal_partner(a, i, z));
                }
}

TEST_CASE("insertability is removability of the dual, exhaustively") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& a : all_compositions(n)) {
            const Composition d = dual(a);
            for (int i = 1; i <= n - 1; ++i)
                for (int z = 1; z <= n - i - a.part(i); ++z) {
                    CHECK(is_insertable(a, i, z) == is_removable(d, i, z));
                    CHECK(insertion_partner(a, i, z) == removal_partner(d, i, z));
                }
        }
}

TEST_CASE("single-part decrements are always covers") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& a : all_compositions(n))
            for (int i = 1; i <= n - 1; ++i) {
                if (a.part(i) == 0) continue;
                std::vector<int> parts = a.parts();
                --parts[static_cast<std::size_t>(i - 1)];
                const auto witness = check_cover(a, Composition(parts, n));
                REQUIRE(witness.has_value());
                CHECK(witness->i == i);
                CHECK(witness->z == 1);
            }
}

TEST_CASE("decrement covers whose partner lies past the stored parts") {
    // Degree-8 instance from the worked example plus every small-degree one.
    CHECK(check_cover(kAlpha, Composition({4, 5, 3, 1, 0, 2, 0}, 8)) == CoverWitness{3, 8, 1});
    int found = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& a : all_compositions(n))
            for (int i = 1; i <= n - 1; ++i) {
                if (a.part(i) == 0 || removal_partner(a, i, 1) != n) continue;
                ++found;
                std::vector<int> parts = a.parts();
                --parts[static_cast<std::size_t>(i - 1)];
                CHECK(check_cover(a, Composition(parts, n)) == CoverWitness{i, n, 1});
            }
    CHECK(found > 0);
}

TEST_CASE("covering equivalence with the oracle, degrees 2 to 5") {
    for (int n = 2; n <= 5; ++n) {
        const VerifyReport report = verify_theorem(n);
        CHECK(report.pairs_checked > 0);
        CHECK(report.mismatches.empty());
    }
}

TEST_CASE("hasse exports") {
    const HasseDiagram diagram = hasse(3);
    const std::string dot = diagram.to_dot();
    CHECK(dot.starts_with("digraph hasse3 {"));
    CHECK(dot.find("\"1,0@3\" -> \"0,0@3\"") != std::string::npos);
    CHECK(dot == diagram.to_dot());  // deterministic

    const std::string jsonl = diagram.to_jsonl();
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 8);
    CHECK(jsonl.find("{\"upper\":\"1,0@3\",\"lower\":\"0,0@3\",\"i\":1,\"j\":2,\"z\":1}") !=
          std::string::npos);
}
