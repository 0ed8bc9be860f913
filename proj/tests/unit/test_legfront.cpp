#include "doctest.h"
#include "gfh/legfront.hpp"

#include <algorithm>
#include <set>

using namespace gfh;

namespace {

FrontDiagram front(int strands, std::vector<std::pair<char, int>> ev) {
    FrontDiagram fd;
    fd.strands = strands;
    for (auto [t, k] : ev)
        fd.events.push_back({t == 'l' ? EventType::LeftCusp : t == 'r' ? EventType::RightCusp : EventType::Crossing, k});
    return fd;
}

std::multiset<std::string> lch_profile(const FrontDiagram& fd) {
    DGA d = chekanov_dga(fd);
    std::multiset<std::string> out;
    for (const auto& e : augmentations(d)) out.insert(lch(d, e).to_string());
    return out;
}

long long signed_count(const DGA& d) {
    long long s = 0;
    for (const auto& g : d.generators) s += (g.degree % 2 == 0) ? 1 : -1;
    return s;
}

}  // namespace

TEST_CASE("front validation") {
    CHECK_THROWS_AS(front(2, {{'l', 0}}).validate(), InvalidInput);
    CHECK_THROWS_AS(front(2, {{'l', 0}, {'c', 0}, {'r', 1}}).validate(), InvalidInput);
    CHECK_THROWS_AS(front(2, {{'l', 0}, {'l', 0}, {'r', 0}, {'r', 0}}).validate(), InvalidInput);
    CHECK_NOTHROW(unknot_front().validate());
    FrontDiagram bad = unknot_front();
    bad.maslov = std::vector<int>{0, 0};
    CHECK_THROWS_AS(maslov_potential(bad), InvalidInput);
    bad.maslov = std::vector<int>{3, 4};
    CHECK(maslov_potential(bad) == std::vector<int>{3, 4});
}

TEST_CASE("rotation obstruction") {
    // a zigzag: the potential around the component cannot close up
    FrontDiagram z = front(4, {{'l', 0}, {'l', 1}, {'r', 2}, {'r', 0}});
    CHECK_THROWS_AS(classical_invariants(z), RotationError);
}

TEST_CASE("unknot") {
    FrontDiagram u = unknot_front();
    auto ci = classical_invariants(u);
    CHECK(ci.tb == -1);
    CHECK(ci.rot == 0);
    DGA d = chekanov_dga(u);
    REQUIRE(d.generators.size() == 1);
    CHECK(d.generators[0].degree == 1);
    CHECK(d.differential[0].empty());
    auto augs = augmentations(d);
    REQUIRE(augs.size() == 1);
    GradedRanks l = lch(d, augs[0]);
    CHECK(l.to_string() == [] {
        GradedRanks g;
        g.set_free(1, 1);
        return g.to_string();
    }());
    CHECK(gfh_from_lch(l).get(2).free == 1);
}

TEST_CASE("max-tb trefoil") {
    FrontDiagram t = trefoil_front();
    auto ci = classical_invariants(t);
    CHECK(ci.tb == 1);
    CHECK(ci.writhe == 3);
    DGA d = chekanov_dga(t);
    REQUIRE(d.generators.size() == 5);
    int deg0 = 0;
    for (std::size_t g = 0; g < d.generators.size(); ++g) {
        if (d.generators[g].degree == 0) ++deg0;
        if (d.generators[g].degree == 1) {
            CHECK(std::find(d.differential[g].begin(), d.differential[g].end(), Word{}) != d.differential[g].end());
        }
    }
    CHECK(deg0 == 3);
    CHECK(d.grading_ok());
    CHECK(d.d_squared_zero());
    auto augs = augmentations(d);
    CHECK(augs.size() == 5);
    for (const auto& e : augs) {
        GradedRanks l = lch(d, e);
        CHECK(l.get(0).free == 2);
        CHECK(l.get(1).free == 1);
        CHECK(l.groups().size() == 2);
        CHECK(l.euler_characteristic() == signed_count(d));
        GradedRanks g = gfh_from_lch(l);
        CHECK(g.get(1).free == 2);
        CHECK(g.get(2).free == 1);
    }
}

TEST_CASE("presentation independence") {
    FrontDiagram u2 = front(4, {{'l', 0}, {'l', 2}, {'c', 1}, {'r', 0}, {'r', 0}});
    CHECK(classical_invariants(u2).tb == -1);
    CHECK(lch_profile(u2) == lch_profile(unknot_front()));
    FrontDiagram t2 =
        front(6, {{'l', 0}, {'l', 2}, {'c', 1}, {'c', 1}, {'c', 1}, {'l', 4}, {'c', 3}, {'r', 2}, {'r', 2}, {'r', 0}});
    CHECK(classical_invariants(t2).tb == 1);
    auto p2 = lch_profile(t2), p1 = lch_profile(trefoil_front());
    CHECK(p2.size() == 5);
    CHECK(p2 == p1);
}

TEST_CASE("twist knots") {
    for (int d = 3; d <= 7; ++d) {
        FrontDiagram f = twist_knot(d);
        DGA a = chekanov_dga(f);
        CHECK(a.d_squared_zero());
        auto augs = augmentations(a);
        REQUIRE(!augs.empty());
        for (const auto& e : augs) {
            GradedRanks g = gfh_from_lch(lch(a, e));
            CHECK_MESSAGE(g.support() == (std::vector<int>{-d + 2, 2, d}), "d=", d, " ", g.to_string());
        }
    }
    CHECK(classical_invariants(twist_knot(3)).tb == 1);
    CHECK(classical_invariants(twist_knot(4)).tb == -3);
    CHECK(classical_invariants(twist_knot(5)).tb == 1);
}

TEST_CASE("augmentation edge cases") {
    DGA d;
    d.generators = {{"a", 0, EventType::Crossing, 0}, {"b", 1, EventType::Crossing, 1}};
    d.differential = {{}, {Word{}}};
    CHECK(augmentations(d).empty());
    d.differential = {{}, {Word{}, Word{0}}};
    auto augs = augmentations(d);
    REQUIRE(augs.size() == 1);
    CHECK(augs[0][0] == 1);
    CHECK_THROWS_AS(lch(d, Augmentation{0, 0}), InvalidInput);
    CHECK_THROWS_AS(chekanov_dga(trefoil_front(), 0), SearchBudgetExceeded);
}

TEST_CASE("augmentation enumeration agrees with brute force") {
    std::vector<FrontDiagram> fronts{unknot_front(), trefoil_front(), twist_knot(3), twist_knot(4),
                                     front(4, {{'l', 0}, {'l', 2}, {'c', 1}, {'r', 0}, {'r', 0}})};
    for (const auto& fd : fronts) {
        const DGA d = chekanov_dga(fd);
        std::vector<std::size_t> zero;
        for (std::size_t g = 0; g < d.generators.size(); ++g)
            if (d.generators[g].degree == 0) zero.push_back(g);
        REQUIRE(zero.size() < 20);
        std::size_t count = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << zero.size()); ++mask) {
            Augmentation e(d.generators.size(), 0);
            for (std::size_t i = 0; i < zero.size(); ++i) e[zero[i]] = (mask >> i) & 1;
            if (is_augmentation(d, e)) ++count;
        }
        CHECK(augmentations(d).size() == count);
    }
}
