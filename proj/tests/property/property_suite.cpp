// Standalone property suite: boundary-squared, difference-function
// antisymmetry, suspension/shift/wedge identities and grid-doubling stability.

#include "doctest.h"
#include "gfh/cli.hpp"
#include "gfh/genfam.hpp"
#include "gfh/legfront.hpp"
#include "gfh/spectop.hpp"

#include <random>

using namespace gfh;

namespace {

bool squares_to_zero(const ChainComplex& c) {
    for (int k = c.k_lo() + 1; k <= c.k_hi(); ++k) {
        const SparseMatrix& hi = c.boundary(k);
        const SparseMatrix& lo = c.boundary(k - 1);
        if (hi.cols() == 0 || lo.cols() == 0) continue;
        if (multiply(lo, hi).nnz() != 0) return false;
    }
    return true;
}

std::vector<SimplicialComplex> zoo() {
    std::vector<SimplicialComplex> z{sphere_complex(1), sphere_complex(2), sphere_complex(3), torus_complex(),
                                     rp2_complex(), cp2_complex()};
    z.push_back(torus_complex().suspension());
    z.push_back(rp2_complex().barycentric_subdivision());
    const Simplex f = cp2_complex().facets().front();
    z.push_back(cp2_complex().stellar_subdivision({f[0], f[1], f[2]}));
    z.push_back(SimplicialComplex::wedge(torus_complex(), rp2_complex()));
    return z;
}

GFDescriptor fixture(const std::string& name) {
    return descriptor_from_json(read_json_file(std::string(GFH_SOURCE_DIR) + "/fixtures/" + name));
}

GFDescriptor random_descriptor(std::mt19937& rng) {
    std::uniform_real_distribution<double> c(-2, 2);
    GFDescriptor g;
    g.base_dim = 1;
    g.fiber_dim = 1;
    g.core = {{c(rng), {0, 3}}, {c(rng), {1, 1}}, {c(rng), {2, 1}}, {c(rng), {1, 0}}};
    g.support_box = {{-1, 1}, {-1.5, 1.5}};
    g.tail = {1 + std::abs(c(rng))};
    g.bumps = {{c(rng) / 4, {c(rng) / 8, c(rng) / 8}, 0.3}};
    return g;
}

}  // namespace

TEST_CASE("boundary squares to zero on simplicial complexes") {
    for (const auto& k : zoo()) CHECK(squares_to_zero(k.chain_complex()));
}

TEST_CASE("boundary squares to zero on sublevel cubical complexes") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        const GFDescriptor g = random_descriptor(rng);
        const GridSpec grid = GridSpec::parse("-1.5:1.5:7,-2.5:2.5:9,-2.5:2.5:9");
        const SampledField f = SampledField::sample(grid, difference_function(g));
        CHECK(squares_to_zero(build_sublevel_complex(f, 1e300).complex));
    }
}

TEST_CASE("DGA differential squares to zero on the front corpus") {
    std::vector<FrontDiagram> fronts{unknot_front(), trefoil_front()};
    for (int d = 3; d <= 7; ++d) fronts.push_back(twist_knot(d));
    for (const auto& f : fronts) {
        const DGA dga = chekanov_dga(f);
        CHECK(dga.d_squared_zero());
        CHECK(dga.grading_ok());
    }
}

TEST_CASE("difference function is antisymmetric under swapping the fiber copies") {
    std::mt19937 rng(11);
    std::vector<GFDescriptor> gs{fixture("cubic.json"), fixture("cubic-bump.json"), fixture("linear.json"),
                                 stabilize(fixture("cubic.json"), -1)};
    for (int i = 0; i < 4; ++i) gs.push_back(random_descriptor(rng));
    std::uniform_real_distribution<double> u(-3, 3);
    for (const auto& g : gs) {
        const FieldFunction delta = difference_function(g);
        const int b = g.base_dim, n = g.fiber_dim;
        for (int s = 0; s < 200; ++s) {
            std::vector<double> p(static_cast<std::size_t>(b + 2 * n)), q;
            for (auto& v : p) v = u(rng);
            q = p;
            std::swap_ranges(q.begin() + b, q.begin() + b + n, q.begin() + b + n);
            CHECK(delta(p.data()) == doctest::Approx(-delta(q.data())).epsilon(1e-12));
        }
        std::vector<double> diag(static_cast<std::size_t>(b + 2 * n));
        for (int i = 0; i < b + n; ++i) diag[static_cast<std::size_t>(i)] = u(rng);
        for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(b + n + i)] = diag[static_cast<std::size_t>(b + i)];
        CHECK(delta(diag.data()) == 0.0);
    }
}

TEST_CASE("suspension and shift identities") {
    for (const auto& k : zoo()) {
        for (Ring r : {Ring::Z, Ring::Z2}) {
            const GradedRanks h = k.reduced_homology(r);
            CHECK(k.suspension().reduced_homology(r) == h.shifted(1));
            const SpectrumSurrogate x = suspension_spectrum(k, "K");
            for (int n : {-3, -1, 0, 2}) CHECK(spec_homology(shift(x, n), r) == h.shifted(n));
            CHECK(spec_homology(shift(shift(x, 2), -5), r) == spec_homology(shift(x, -3), r));
            CHECK(spec_homology(suspension_spectrum(k.suspension(), "SK"), r) == spec_homology(shift(x, 1), r));
        }
    }
}

TEST_CASE("wedge identities") {
    const auto z = zoo();
    for (std::size_t i = 0; i + 1 < z.size(); i += 2) {
        const SpectrumSurrogate x = shift(suspension_spectrum(z[i], "X"), static_cast<int>(i % 3) - 1);
        const SpectrumSurrogate y = suspension_spectrum(z[i + 1], "Y");
        for (Ring r : {Ring::Z, Ring::Z2}) {
            const GradedRanks sum = spec_homology(x, r).direct_sum(spec_homology(y, r));
            CHECK(spec_homology(wedge(x, y), r) == sum);
            CHECK(spec_homology(wedge(y, x), r) == sum);
            CHECK(spec_homology(shift(wedge(x, y), 3), r) == spec_homology(wedge(shift(x, 3), shift(y, 3)), r));
        }
    }
}

TEST_CASE("obstruction verdicts are stable under subdivision") {
    const SimplicialComplex cp2 = cp2_complex();
    const SimplicialComplex refined = cp2.stellar_subdivision(cp2.facets().front());
    for (int n : {-1, -2, -3, 0}) {
        const auto a = suspension_obstruction(shift(suspension_spectrum(cp2, "CP2"), n)).summary();
        const auto b = suspension_obstruction(shift(suspension_spectrum(refined, "CP2'"), n)).summary();
        CHECK(a == b);
    }
}

TEST_CASE("grid doubling leaves numeric fixtures unchanged") {
    struct Case {
        std::string file;
        std::optional<Window> window;
        int stabilize;
    };
    const std::vector<Case> cases{{"cubic.json", std::nullopt, 0},
                                  {"cubic-bump.json", std::nullopt, 0},
                                  {"linear.json", Window{1, 2}, 0},
                                  {"linear.json", Window{0.3, 8}, 0},
                                  {"cubic.json", Window{2, 9}, 1},
                                  {"cubic.json", Window{2, 9}, -1}};
    for (const auto& c : cases) {
        CAPTURE(c.file);
        CAPTURE(c.stabilize);
        GFDescriptor g = fixture(c.file);
        if (c.stabilize) g = stabilize(g, c.stabilize);
        const bool big = g.fiber_dim > 1;
        const std::size_t n = big ? 21 : 101;
        for (Ring r : {Ring::Z, Ring::Z2}) {
            const GFHResult coarse = compute_gfh(g, default_grid(g, n), c.window, r, kDefaultCellBudget);
            const GFHResult fine = compute_gfh(g, default_grid(g, 2 * n - 1), c.window, r, kDefaultCellBudget);
            CHECK(coarse.ranks == fine.ranks);
            CHECK(coarse.raw == fine.raw);
        }
    }
}

TEST_CASE("grid doubling leaves the filling decomposition unchanged") {
    const Json doc = read_json_file(std::string(GFH_SOURCE_DIR) + "/fixtures/cubic-filling.json");
    FillingDescriptorNumeric fd;
    fd.base = descriptor_from_json(doc["base"]);
    const ShearSpec spec = shear_from_json(doc["shear"]);
    fd.t_minus = spec.t_minus;
    const auto a = seidel_decomposition(fd, spec, GridSpec::parse("0.25:12.25:121,-3:3:41,-3:3:41"), Ring::Z,
                                        kDefaultCellBudget);
    const auto b = seidel_decomposition(fd, spec, GridSpec::parse("0.25:12.25:241,-3:3:81,-3:3:81"), Ring::Z,
                                        kDefaultCellBudget);
    CHECK(a.match);
    CHECK(b.match);
    CHECK(a.W == b.W);
    CHECK(a.A == b.A);
    CHECK(a.B == b.B);
    CHECK(a.C == b.C);
}
