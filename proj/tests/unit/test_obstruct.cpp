#include "doctest.h"
#include "gfh/legfront.hpp"
#include "gfh/obstruct.hpp"

using namespace gfh;

namespace {

GradedRanks ranks(std::map<int, std::size_t> m) {
    GradedRanks g;
    for (auto [k, r] : m) g.set_free(k, r);
    return g;
}

GFHProfile z2(std::map<int, std::size_t> m, int dim = 1) { return {"", dim, true, {{Ring::Z2, ranks(m)}}}; }

}  // namespace

TEST_CASE("fiber dimension bounds") {
    CHECK(nmin_lower_bound(z2({{-1, 1}, {2, 1}, {3, 1}})) == 2);
    for (int d = 3; d <= 7; ++d) CHECK(nmin_lower_bound(z2({{-d + 2, 1}, {2, 1}, {d, 1}})) == d - 1);
    for (int n = 1; n <= 4; ++n) CHECK(nmin_lower_bound(z2({{n + 1, 1}}, n)) == 1);
    CHECK(nmin_lower_bound(z2({{1, 2}, {2, 1}})) == 1);

    GFHProfile mixed{"", 1, true, {{Ring::Z2, ranks({{-1, 1}})}, {Ring::Z, ranks({{5, 1}})}}};
    CHECK(nmin_lower_bound(mixed) == 4);

    // monotone under adding degrees
    GFHProfile p = z2({{2, 1}});
    int prev = nmin_lower_bound(p);
    for (int deg : {-3, 7, 0, -5, 9}) {
        GradedRanks g = p.rings[0].second;
        g.set_free(deg, 1);
        p.rings[0].second = g;
        const int now = nmin_lower_bound(p);
        CHECK(now >= prev);
        prev = now;
    }
    CHECK_THROWS_AS(nmin_lower_bound(GFHProfile{}), InvalidInput);
}

TEST_CASE("homology-level and Steenrod-enhanced bounds") {
    // Sigma^{-3} Sigma^infty CP2 has homology in degrees -1 and 1
    SpectrumSurrogate x = shift(named_surrogate("CP2"), -3);
    GFHProfile p{"", 1, true, {{Ring::Z2, spec_homology(x, Ring::Z2)}}};
    NminReport r = nmin_report(p, x);
    CHECK(r.homology_bound == 2);
    REQUIRE(r.steenrod_bound);
    CHECK(*r.steenrod_bound == 3);
    CHECK(r.steenrod_witness.find("Sq2") != std::string::npos);
    NminReport plain = nmin_report(z2({{2, 1}}), named_surrogate("S2"));
    CHECK(plain.steenrod_bound == plain.homology_bound);
}

TEST_CASE("fillability verdicts") {
    CHECK(fillability_name(fillability_obstruction(z2({{-1, 1}, {2, 1}, {3, 1}}))) == "noFilling");
    CHECK(fillability_name(fillability_obstruction(z2({{1, 2}, {2, 1}}))) == "noObstruction");
    CHECK(fillability_name(fillability_obstruction(z2({{0, 1}, {2, 1}}))) == "noConnectedFilling");
    GFHProfile two = z2({{0, 1}, {2, 1}});
    two.connected = false;
    CHECK(fillability_obstruction(two) == Fillability::NoObstruction);
}

TEST_CASE("duality audit") {
    DualityReport m52 = duality_audit(z2({{-1, 1}, {2, 1}, {3, 1}}));
    CHECK(m52.pass);
    REQUIRE(m52.pairs.size() == 1);
    CHECK(m52.pairs[0] == std::make_pair(-1, 3));
    for (int d = 3; d <= 7; ++d) CHECK(duality_audit(z2({{-d + 2, 1}, {2, 1}, {d, 1}})).pass);
    DualityReport bad = duality_audit(z2({{-1, 1}}));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == std::make_pair(1, 3));
    CHECK_THROWS_AS(duality_audit({"", 1, true, {{Ring::Z, ranks({{1, 1}})}}}), InvalidInput);
}

TEST_CASE("filling spectra") {
    CHECK(spec_homology(seidel_spectrum({0, 1, true}), Ring::Z) == ranks({{2, 1}}));
    CHECK(spec_homology(seidel_spectrum({1, 1, true}), Ring::Z) == ranks({{1, 2}, {2, 1}}));
    CHECK(spec_homology(interval_filling_spectrum(), Ring::Z) == ranks({{1, 1}}));
    for (int g = 0; g <= 3; ++g)
        for (int b = 1; b <= 3; ++b) {
            SurfaceFilling s{g, b, true};
            SpectrumSurrogate x = seidel_spectrum(s);
            GradedRanks h = spec_homology(x, Ring::Z);
            CHECK(h == ranks({{1, static_cast<std::size_t>(2 * g + b - 1)}, {2, 1}}));
            CHECK(h.euler_characteristic() == filling_euler_characteristic(s));
            CHECK(suspension_obstruction(x).summary() == "possible");
        }
    SurfaceFilling mob{1, 1, false};
    GradedRanks hm = spec_homology(seidel_spectrum(mob), Ring::Z);
    CHECK(hm.get(1) == GroupRank{0, {2}});
    CHECK(!hm.nonzero(2));
    CHECK(spec_homology(seidel_spectrum({2, 2, false}), Ring::Z).get(1) == GroupRank{2, {2}});
    CHECK(spec_homology(seidel_spectrum({2, 1, false}), Ring::Z).euler_characteristic() ==
          filling_euler_characteristic({2, 1, false}));
    CHECK_THROWS_AS(seidel_spectrum({0, 0, true}), InvalidInput);
}

TEST_CASE("Seidel comparison against combinatorial GFH") {
    auto gfh_of = [](const FrontDiagram& f) {
        DGA d = chekanov_dga(f);
        return gfh_from_lch(lch(d, augmentations(d).front()));
    };
    GradedRanks tref = gfh_of(trefoil_front()), unk = gfh_of(unknot_front());
    CHECK(compare_seidel(tref, {1, 1, true}, Ring::Z2).match);
    CHECK(compare_seidel(unk, {0, 1, true}, Ring::Z2).match);
    SeidelComparison bad = compare_seidel(tref, {0, 1, true}, Ring::Z2);
    CHECK_FALSE(bad.match);
    CHECK(bad.mismatched_degrees == std::vector<int>{1});

    // an obstructed profile matches no surface
    GradedRanks m52 = ranks({{-1, 1}, {2, 1}, {3, 1}});
    REQUIRE(fillability_obstruction(z2({{-1, 1}, {2, 1}, {3, 1}})) == Fillability::NoFilling);
    for (int g = 0; g <= 3; ++g)
        for (int b = 1; b <= 3; ++b) CHECK_FALSE(compare_seidel(m52, {g, b, true}, Ring::Z2).match);
}
