// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "gfh/cli.hpp"
#include "gfh/genfam.hpp"
#include "gfh/legfront.hpp"
#include "gfh/obstruct.hpp"
#include "gfh/spectop.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace gfh;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
    void require_within(double seconds, double limit, const std::string& what) {
        std::ostringstream os;
        os << what << " took " << seconds << " s, limit " << limit << " s";
        require(seconds < limit, os.str());
    }
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string path(const std::string& name) { return std::string(GFH_SOURCE_DIR) + "/fixtures/" + name; }
GFDescriptor descriptor(const std::string& name) { return descriptor_from_json(read_json_file(path(name))); }
FrontDiagram front(const std::string& name) { return front_from_json(read_json_file(path(name))); }

GradedRanks ranks(std::initializer_list<std::pair<int, std::size_t>> entries) {
    GradedRanks g;
    for (auto [k, r] : entries) g.set_free(k, r);
    return g;
}

GFHProfile z2_profile(const GradedRanks& g) { return GFHProfile{"front", 1, true, {{Ring::Z2, g}}}; }

std::vector<GradedRanks> front_gfh(const FrontDiagram& fd) {
    const DGA d = chekanov_dga(fd);
    std::vector<GradedRanks> out;
    for (const auto& e : augmentations(d)) out.push_back(gfh_from_lch(lch(d, e)));
    return out;
}

void criterion1(Verdict& v) {
    const GFDescriptor g = descriptor("cubic.json");
    const GradedRanks expected = ranks({{1, 1}});
    auto t = Clock::now();
    const GFHResult r = compute_gfh(g, default_grid(g, 201), std::nullopt, Ring::Z, kDefaultCellBudget);
    const double t1 = since(t);
    v.require(r.ranks == expected, "N = 1 profile " + r.ranks.to_string());
    v.require(r.grid.axes.size() == 2 && r.grid.axes[0].samples >= 201, "201^2 samples");
    v.require_within(t1, 10, "201^2 run");

    const GFDescriptor s = stabilize(g, 1);
    t = Clock::now();
    const GFHResult rs = compute_gfh(s, default_grid(s, 61), std::nullopt, Ring::Z, 3e8);
    const double t2 = since(t);
    v.require(rs.ranks == expected && rs.fiber_dim == 2, "N = 2 profile " + rs.ranks.to_string());
    v.require_within(t2, 300, "61^4 run");
    v.detail << "201^2: " << r.ranks.to_string() << " in " << t1 << " s; stabilized 61^4: " << rs.ranks.to_string()
             << " in " << t2 << " s";
}

void criterion2(Verdict& v) {
    const auto t = Clock::now();
    const GFDescriptor g = descriptor("linear.json");
    int windows = 0;
    for (auto [e, w] : std::vector<std::pair<double, double>>{{0.1, 0.5}, {1, 2}, {0.3, 8}, {0.5, 10}, {1, 20}, {5, 50}}) {
        const GFHResult r = compute_gfh(g, default_grid(g, 201), Window{e, w}, Ring::Z, kDefaultCellBudget);
        v.require(r.ranks.empty() && r.raw.empty(), "window nonzero");
        ++windows;
    }
    const double secs = since(t);
    v.require_within(secs, 1, "linear runs");
    v.detail << windows << " windows all zero in " << secs << " s";
}

void criterion3(Verdict& v) {
    const auto t = Clock::now();
    const GFDescriptor g = descriptor("cubic.json");
    const GridSpec grid = default_grid(g, 201);
    std::optional<GradedRanks> first;
    for (auto [e, w] : std::vector<std::pair<double, double>>{{0.3, 8}, {0.5, 10}, {1.0, 20}}) {
        const GFHResult r = compute_gfh(g, grid, Window{e, w}, Ring::Z, kDefaultCellBudget);
        if (!first) first = r.raw;
        v.require(r.raw == *first, "window dependence");
    }
    const GFDescriptor b = descriptor("cubic-bump.json");
    const GFHResult rb = compute_gfh(b, default_grid(b, 201), std::nullopt, Ring::Z, kDefaultCellBudget);
    v.require(rb.raw == *first, "bump perturbation " + rb.raw.to_string());
    v.require(b.bumps.size() == 1 && b.bumps[0].amplitude == 0.5, "bump amplitude 0.5");
    const double secs = since(t);
    v.require_within(secs, 60, "invariance runs");
    v.detail << "pair homology " << first->to_string() << " for 3 windows and the 0.5 bump in " << secs << " s";
}

void criterion4(Verdict& v) {
    const auto t = Clock::now();
    const auto profiles = front_gfh(front("unknot.json"));
    v.require(profiles.size() == 1, "augmentation count");
    const GradedRanks expected = ranks({{2, 1}});
    for (const auto& g : profiles) {
        v.require(g == expected, "GFH " + g.to_string());
        v.require(compare_seidel(g, SurfaceFilling{0, 1, true}, Ring::Z2).match, "disk comparison");
    }
    const double secs = since(t);
    v.require_within(secs, 1, "unknot");
    v.detail << profiles.size() << " augmentation, GFH " << expected.to_string() << ", matches the disk, " << secs
             << " s";
}

void criterion5(Verdict& v) {
    const auto t = Clock::now();
    const FrontDiagram fd = front("trefoil.json");
    const DGA d = chekanov_dga(fd);
    const auto augs = augmentations(d);
    v.require(augs.size() == 5, "augmentation count " + std::to_string(augs.size()));
    long long signed_gens = 0;
    for (const auto& g : d.generators) signed_gens += g.degree % 2 == 0 ? 1 : -1;
    const GradedRanks expected = ranks({{1, 2}, {2, 1}});
    const SurfaceFilling torus{1, 1, true};
    for (const auto& e : augs) {
        const GradedRanks l = lch(d, e);
        const GradedRanks g = gfh_from_lch(l);
        v.require(g == expected, "GFH " + g.to_string());
        v.require(compare_seidel(g, torus, Ring::Z2).match, "genus one comparison");
        v.require(l.euler_characteristic() == signed_gens, "LCH Euler characteristic vs generators");
        v.require(g.euler_characteristic() == filling_euler_characteristic(torus), "GFH Euler characteristic vs filling");
    }
    const double secs = since(t);
    v.require_within(secs, 10, "trefoil");
    v.detail << augs.size() << " augmentations, each " << expected.to_string() << ", chi = "
             << filling_euler_characteristic(torus) << " both ways, " << secs << " s";
}

void criterion6(Verdict& v) {
    const auto t = Clock::now();
    const auto profiles = front_gfh(front("m52.json"));
    v.require(!profiles.empty(), "no augmentation");
    for (const auto& g : profiles) {
        v.require(g.support() == std::vector<int>{-1, 2, 3}, "support " + g.to_string());
        const GFHProfile p = z2_profile(g);
        v.require(nmin_lower_bound(p) == 2, "nmin");
        v.require(fillability_obstruction(p) == Fillability::NoFilling, "fillability");
        const DualityReport dr = duality_audit(p);
        v.require(dr.pass, "duality");
        v.require(std::find(dr.pairs.begin(), dr.pairs.end(), std::pair<int, int>{-1, 3}) != dr.pairs.end(),
                  "pairing -1 <-> 3");
    }
    const double secs = since(t);
    v.require_within(secs, 30, "m(5_2)");
    v.detail << "support {-1,2,3}, nmin 2, noFilling, duality -1 <-> 3, " << secs << " s";
}

void criterion7(Verdict& v) {
    const auto t = Clock::now();
    for (int d = 3; d <= 5; ++d) {
        const auto profiles = front_gfh(front("twist" + std::to_string(d) + ".json"));
        v.require(!profiles.empty(), "no augmentation for d = " + std::to_string(d));
        for (const auto& g : profiles) {
            v.require(g.support() == std::vector<int>{-d + 2, 2, d}, "support " + g.to_string());
            v.require(nmin_lower_bound(z2_profile(g)) == d - 1, "nmin for d = " + std::to_string(d));
        }
    }
    const double secs = since(t);
    v.require_within(secs, 300, "twist knots");
    v.detail << "d = 3, 4, 5: support {-d+2, 2, d}, nmin d-1, " << secs << " s";
}

void criterion8(Verdict& v) {
    const auto t = Clock::now();
    const Json doc = read_json_file(path("cubic-filling.json"));
    FillingDescriptorNumeric fd;
    fd.base = descriptor_from_json(doc["base"]);
    const ShearSpec spec = shear_from_json(doc["shear"]);
    fd.t_minus = spec.t_minus;
    const GridSpec grid = GridSpec::parse(doc["grid"].get<std::string>());
    v.require(grid.axes[0].samples >= 121 && grid.axes[1].samples >= 161 && grid.axes[2].samples >= 161, "grid size");
    const SeidelReport r = seidel_decomposition(fd, spec, grid, Ring::Z);
    const double lmin = r.spectrum.lengths.front(), lmax = r.spectrum.lengths.back();
    try {
        validate_shear(spec, lmin, lmax);
    } catch (const ChoiceViolation& e) {
        v.require(false, e.what());
    }
    v.require(r.W == ranks({{2, 1}}), "W " + r.W.to_string());
    v.require(r.A == ranks({{2, 1}}), "A " + r.A.to_string());
    v.require(r.B.empty(), "B " + r.B.to_string());
    v.require(r.C.empty(), "C " + r.C.to_string());
    v.require(r.match, "verdict");
    v.require(r.lemmas.pass, "lambda lemmas");
    double worst = 1e300;
    for (const auto& c : r.lemmas.checks) {
        v.require(c.pass && c.margin > 0, "lemma " + c.name);
        worst = std::min(worst, c.margin);
    }
    const double secs = since(t);
    v.require_within(secs, 900, "Seidel run");
    v.detail << grid.to_string() << ": W=" << r.W.to_string() << " A=" << r.A.to_string() << " B=" << r.B.to_string()
             << " C=" << r.C.to_string() << ", " << r.lemmas.checks.size() << " lemma checks, smallest margin " << worst
             << ", " << secs << " s";
}

void criterion9(Verdict& v) {
    const auto t = Clock::now();
    const std::vector<std::string> s0{"Z", "Z/2", "Z/2", "Z/24", "0", "0", "Z/2", "Z/240", "Z/2 x Z/2"};
    for (int k = -3; k <= 8; ++k)
        v.require(pi_s_lookup(SphereWedge{{0}, 0}, k) == (k < 0 ? "0" : s0[static_cast<std::size_t>(k)]),
                  "pi_" + std::to_string(k) + "(S^0)");
    for (int k = 0; k <= 11; ++k)
        v.require(pi_s_lookup(SphereWedge{{3}, 0}, k) == (k < 3 ? "0" : s0[static_cast<std::size_t>(k - 3)]),
                  "pi_" + std::to_string(k) + "(S^3)");
    const SpectrumSurrogate t2 = named_surrogate("T2");
    v.require(spec_homology(t2, Ring::Z) == ranks({{1, 2}, {2, 1}}), "T2 homology");
    v.require(pi_s_lookup(as_sphere_wedge(t2), 3) == "Z/2 + Z/2 + Z/2", "pi_3 of T2");

    const SpectrumSurrogate cp2 = shift(named_surrogate("CP2"), -1);
    const GradedRanks h = spec_homology(cp2, Ring::Z);
    v.require(h == ranks({{1, 1}, {3, 1}}), "desuspended CP2 homology " + h.to_string());
    const SpectrumSurrogate same_homology = parse_surrogate("S2+S4 @shift -1");
    v.require(spec_homology(same_homology, Ring::Z) == h, "sphere wedge homology");
    v.require(suspension_obstruction(same_homology).summary() == "possible", "degree test on homology alone");
    const SuspensionVerdict sv = suspension_obstruction(cp2);
    v.require(sv.summary() == "obstructed: Sq2 instability", "verdict " + sv.summary());
    const double secs = since(t);
    v.require_within(secs, 5, "spectrum checks");
    v.detail << "stems k = 0..8 verbatim, T2 pi_3 = (Z/2)^3, desusp CP2 " << h.to_string() << " -> " << sv.summary() << " (same homology as S^2 v S^4 desuspended: possible)"
             << ", " << secs << " s";
}

void criterion10(Verdict& v) {
    const auto t = Clock::now();
    const std::string cmd = std::string("\"") + PROPERTY_SUITE + "\" > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    const double secs = since(t);
    v.require(rc == 0, "property suite exit status " + std::to_string(rc));
    v.detail << "standalone property suite exit " << rc << " in " << secs << " s";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
        {"cubic model", criterion1},
        {"empty Legendrian", criterion2},
        {"window and perturbation invariance", criterion3},
        {"unknot front", criterion4},
        {"max-tb trefoil", criterion5},
        {"m(5_2)", criterion6},
        {"twist knots d = 3..5", criterion7},
        {"Seidel decomposition", criterion8},
        {"spectrum surrogate", criterion9},
        {"property suites", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            criteria[i].second(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << v.detail.str() << std::endl;
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
