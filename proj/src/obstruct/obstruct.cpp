#include "gfh/obstruct.hpp"

#include <algorithm>
#include <set>

namespace gfh {

void GFHProfile::validate() const {
    if (m < 0) throw InvalidInput("Legendrian dimension must be nonnegative");
    if (rings.empty()) throw InvalidInput("profile has no coefficient rings");
    std::set<Ring> seen;
    for (const auto& [r, _] : rings)
        if (!seen.insert(r).second) throw InvalidInput("profile lists ring " + ring_name(r) + " twice");
}

const GradedRanks* GFHProfile::find(Ring r) const {
    for (const auto& [ring, g] : rings)
        if (ring == r) return &g;
    return nullptr;
}

int nmin_lower_bound(const GFHProfile& p) {
    p.validate();
    int k_term = 1, l_term = 1;
    for (const auto& [r, g] : p.rings)
        for (int deg : g.support()) {
            if (deg <= 0) k_term = std::max(k_term, -deg + 1);
            if (deg >= 0) l_term = std::max(l_term, deg - p.m);
        }
    return std::max(k_term, l_term);
}

NminReport nmin_report(const GFHProfile& p, const std::optional<SpectrumSurrogate>& spectrum) {
    NminReport r;
    r.homology_bound = nmin_lower_bound(p);
    if (!spectrum) return r;
    const int limit = r.homology_bound + 64;
    for (int n = r.homology_bound; n <= limit; ++n) {
        const SuspensionVerdict v = suspension_obstruction(shift(*spectrum, n));
        if (v.kind == SuspensionVerdict::Kind::Possible) {
            r.steenrod_bound = n;
            return r;
        }
        r.steenrod_witness = "N = " + std::to_string(n) + ": " + v.summary();
        if (v.kind == SuspensionVerdict::Kind::Inconclusive) return r;
    }
    return r;
}

std::string fillability_name(Fillability f) {
    switch (f) {
        case Fillability::NoFilling: return "noFilling";
        case Fillability::NoConnectedFilling: return "noConnectedFilling";
        case Fillability::NoObstruction: return "noObstruction";
    }
    return "noObstruction";
}

Fillability fillability_obstruction(const GFHProfile& p) {
    p.validate();
    bool zero = false;
    for (const auto& [r, g] : p.rings) {
        for (int deg : g.support())
            if (deg < 0) return Fillability::NoFilling;
        zero = zero || g.nonzero(0);
    }
    return p.connected && zero ? Fillability::NoConnectedFilling : Fillability::NoObstruction;
}

DualityReport duality_audit(const GFHProfile& p) {
    p.validate();
    const GradedRanks* g = p.find(Ring::Z2);
    if (!g) throw InvalidInput("duality audit needs a Z/2 profile");
    DualityReport rep;
    int reach = 1;
    for (int deg : g->support()) reach = std::max(reach, std::abs(deg) + 1);
    for (int k = 1; k <= reach; ++k) {
        const int partner = p.m + 1 + k;
        const bool lo = g->nonzero(-k), hi = g->nonzero(partner);
        if (lo && hi) rep.pairs.push_back({-k, partner});
        if (lo != hi && rep.pass) {
            rep.pass = false;
            rep.witness = std::make_pair(k, partner);
        }
    }
    return rep;
}

void SurfaceFilling::validate() const {
    if (boundary < 1) throw InvalidInput("a filling needs at least one boundary component");
    if (genus < 0) throw InvalidInput("genus must be nonnegative");
    if (!orientable && genus < 1) throw InvalidInput("nonorientable genus must be at least 1");
    if (genus > 40 || boundary > 200) throw InvalidInput("surface too large for the simplicial model");
}

namespace {

// Connected sum: drops facet {0,1,2} from b (relabeled) and facet fa from a,
// identifying the two boundary triangles.
SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> fa = a.facets(), fb = b.facets();
    const Simplex cut_a = fa.front();
    const Simplex cut_b = fb.front();
    int top = a.simplices(0).back()[0] + 1;
    std::vector<Simplex> out(fa.begin() + 1, fa.end());
    for (std::size_t i = 1; i < fb.size(); ++i) {
        Simplex s;
        for (int v : fb[i]) {
            auto it = std::find(cut_b.begin(), cut_b.end(), v);
            s.push_back(it != cut_b.end() ? cut_a[static_cast<std::size_t>(it - cut_b.begin())] : top + v);
        }
        out.push_back(s);
    }
    return SimplicialComplex::from_facets(out);
}

}  // namespace

SpectrumSurrogate seidel_spectrum(const SurfaceFilling& s) {
    s.validate();
    SimplicialComplex closed;
    if (s.orientable && s.genus == 0) {
        closed = sphere_complex(2);
    } else {
        const SimplicialComplex piece = s.orientable ? torus_complex() : rp2_complex();
        closed = piece;
        for (int i = 1; i < s.genus; ++i) closed = connected_sum(closed, piece);
    }
    for (int i = 1; i < s.boundary; ++i) closed = SimplicialComplex::wedge(closed, sphere_complex(1));
    std::string label = (s.orientable ? "S_g" : "N_h") + std::string("(") + std::to_string(s.genus) + "," +
                        std::to_string(s.boundary) + ")";
    std::optional<std::vector<int>> split;
    if (s.orientable) {
        std::vector<int> dims(static_cast<std::size_t>(2 * s.genus + s.boundary - 1), 1);
        dims.push_back(2);
        split = dims;
    }
    return suspension_spectrum(std::move(closed), label, split);
}

SpectrumSurrogate interval_filling_spectrum() { return suspension_spectrum(sphere_complex(1), "I/{0,1}", std::vector<int>{1}); }

long long filling_euler_characteristic(const SurfaceFilling& s) {
    s.validate();
    const long long b1 = s.orientable ? 2LL * s.genus + s.boundary - 1 : s.genus - 1LL + s.boundary - 1;
    return (s.orientable ? 1 : 0) - b1;
}

SeidelComparison compare_seidel(const GradedRanks& gfh, const SurfaceFilling& s, Ring ring) {
    SeidelComparison c;
    c.expected = spec_homology(seidel_spectrum(s), ring);
    std::set<int> degrees;
    for (const auto& [k, _] : gfh.groups()) degrees.insert(k);
    for (const auto& [k, _] : c.expected.groups()) degrees.insert(k);
    for (int k : degrees)
        if (!(gfh.get(k) == c.expected.get(k))) c.mismatched_degrees.push_back(k);
    c.match = c.mismatched_degrees.empty();
    return c;
}

}  // namespace gfh
