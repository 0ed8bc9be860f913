#include "gfh/genfam.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace gfh {

void FillingDescriptorNumeric::validate() const {
    base.validate();
    if (base.base_dim != 0) throw InvalidInput("a filling family needs a boundary family without base variables");
    if (!(t_minus > 0 && t_minus < 1)) throw ChoiceViolation("filling needs 0 < t_minus < 1");
}

double FillingDescriptorNumeric::beta(double t) const { return smoothstep((t - t_minus) / (1 - t_minus)); }

double FillingDescriptorNumeric::evaluate(double t, const double* eta) const {
    const int nc = base.core_fibers();
    double v = base.tail_value(eta);
    const double b = beta(t);
    if (b != 0) v += b * base.core_value(eta);
    for (std::size_t s = 0; s < base.stabilization.size(); ++s) {
        const double e = eta[nc + static_cast<int>(s)];
        v += base.stabilization[s] * e * e;
    }
    return t * v;
}

FieldFunction sheared_difference(const FillingDescriptorNumeric& fd, const ShearSpec& spec) {
    fd.validate();
    const Shear h(spec.u);
    const int n = fd.base.fiber_dim;
    return [fd, h, n](const double* p) {
        const double t = p[0];
        return fd.evaluate(t, p + 1 + n) + h.H(t) - fd.evaluate(t, p + 1);
    };
}

namespace {

GridSpec fiber_grid(const GridSpec& grid) {
    GridSpec g;
    g.axes.assign(grid.axes.begin() + 1, grid.axes.end());
    return g;
}

GridSpec coarsened(GridSpec g, std::size_t max_vertices) {
    while (g.vertex_count() > max_vertices) {
        bool changed = false;
        for (auto& a : g.axes)
            if (a.samples > 9) a.samples = (a.samples + 1) / 2, changed = true;
        if (!changed) break;
    }
    return g;
}

}  // namespace

SeidelReport seidel_decomposition(const FillingDescriptorNumeric& fd, const ShearSpec& spec, const GridSpec& grid,
                                  Ring ring, double budget, std::optional<Spectrum> spectrum) {
    fd.validate();
    grid.validate();
    const int n = fd.base.fiber_dim;
    if (static_cast<int>(grid.dim()) != 1 + 2 * n)
        throw InvalidInput("filling grid needs 1 + 2N axes (t first), got " + std::to_string(grid.dim()));
    const AxisSpec& ta = grid.axes[0];
    if (!(ta.min > 0)) throw InvalidInput("t axis must start above 0");
    if (!(ta.min < spec.t_minus)) throw ChoiceViolation("t axis must start below t_minus");
    check_truncation(fd.base, fiber_grid(grid));
    grid.check_budget(budget);

    SeidelReport rep;
    std::size_t iu = 0;
    double best = std::abs(ta.coord(0) - spec.u);
    for (std::size_t i = 1; i < ta.samples; ++i)
        if (std::abs(ta.coord(i) - spec.u) < best) best = std::abs(ta.coord(i) - spec.u), iu = i;
    if (iu == 0 || iu + 1 >= ta.samples || best > 1e-9 * std::max(1.0, spec.u))
        throw InvalidInput("t axis must contain u as an interior sample");
    rep.u_index = iu;
    rep.w = ta.coord(0);
    rep.v = ta.coord(ta.samples - 1);

    const GridSpec fg = fiber_grid(grid);
    if (spectrum) {
        rep.spectrum = *spectrum;
    } else {
        SampledField delta = SampledField::sample(coarsened(fg, 5000000), difference_function(fd.base));
        rep.spectrum = length_spectrum(delta);
    }
    const bool none = rep.spectrum.empty();
    const double lmin = none ? std::numeric_limits<double>::infinity() : rep.spectrum.lmin();
    const double lmax = none ? 0.0 : rep.spectrum.lmax();
    validate_shear(spec, lmin, lmax);
    rep.lemmas = verify_lambda_lemmas(spec, lmin, lmax);
    if (!rep.lemmas.pass) {
        for (const auto& c : rep.lemmas.checks)
            if (!c.pass) throw ChoiceViolation("shear inequality fails: " + c.name);
    }
    const Shear h(spec.u);
    if (!(h.lambda(-spec.mu, rep.v) > lmax)) {
        std::ostringstream os;
        os << "t axis must end at v with lambda_-mu(v) > lmax (v = " << rep.v << ")";
        throw ChoiceViolation(os.str());
    }

    PairOptions opts;
    opts.budget = budget;
    auto pair = [&](const SampledField& f) {
        return relative_pair_homology({&f, -spec.mu, spec.Omega}, ring, opts);
    };

    const FieldFunction df = sheared_difference(fd, spec);
    {
        const double u = spec.u;
        SampledField slice = SampledField::sample(fg, [&](const double* p) {
            double q[32];
            q[0] = u;
            for (int i = 0; i < 2 * n; ++i) q[i + 1] = p[i];
            return df(q);
        });
        rep.W = pair(slice);
    }
    {
        SampledField full = SampledField::sample(grid, df);
        rep.C = pair(full);
        rep.A = pair(full.restrict_axis(0, 0, iu));
        rep.B = pair(full.restrict_axis(0, iu, ta.samples - 1));
    }

    std::optional<Window> win;
    if (none) win = Window{h.lambda(-spec.mu, spec.u), h.lambda(spec.Omega, spec.u)};
    GFHResult ref = compute_gfh(fd.base, fg, win, ring, budget);
    rep.reference = ref.raw;
    rep.reference_window = ref.window;
    rep.match = rep.W == rep.reference && rep.A == rep.W && rep.B.empty() && rep.C.empty();
    return rep;
}

}  // namespace gfh
