#include "gfh/genfam.hpp"

#include <cmath>
#include <sstream>

namespace gfh {

Spectrum length_spectrum(const SampledField& delta) {
    Spectrum s;
    for (const auto& cv : detect_critical_values(delta).values)
        if (cv.sign == CriticalSign::Positive) s.lengths.push_back(cv.value);
    return s;
}

Window choose_window(const Spectrum& spectrum, std::optional<double> eps, std::optional<double> omega) {
    Window w;
    if (spectrum.empty()) {
        if (!eps || !omega)
            throw ChoiceViolation("no positive critical values detected: pass an explicit window (eps, omega)");
        w = {*eps, *omega};
    } else {
        w.eps = eps.value_or(0.5 * spectrum.lmin());
        w.omega = omega.value_or(2 * spectrum.lmax() + 1);
    }
    std::ostringstream os;
    if (!(w.eps > 0)) os << "window needs 0 < eps (eps = " << w.eps << ")";
    else if (!(w.omega > w.eps)) os << "window needs eps < omega (" << w.eps << " >= " << w.omega << ")";
    else if (!spectrum.empty() && !(w.eps < spectrum.lmin()))
        os << "window needs eps < lmin (" << w.eps << " >= " << spectrum.lmin() << ")";
    else if (!spectrum.empty() && !(w.omega > spectrum.lmax()))
        os << "window needs lmax < omega (" << w.omega << " <= " << spectrum.lmax() << ")";
    if (!os.str().empty()) throw ChoiceViolation(os.str());
    return w;
}

GFHResult compute_gfh(const GFDescriptor& g, const GridSpec& grid, std::optional<Window> window, Ring ring, double budget) {
    g.validate();
    grid.validate();
    check_truncation(g, grid);
    grid.check_budget(budget);
    SampledField delta = SampledField::sample(grid, difference_function(g));

    GFHResult r;
    r.fiber_dim = g.fiber_dim;
    r.grid = grid;
    CriticalScan scan = detect_critical_values(delta);
    for (const auto& cv : scan.values)
        if (cv.sign == CriticalSign::Positive) r.spectrum.lengths.push_back(cv.value);
    r.window = window ? choose_window(r.spectrum, window->eps, window->omega) : choose_window(r.spectrum);

    PairOptions opts;
    opts.budget = budget;
    for (const auto& cv : scan.values) opts.critical_values.push_back(cv.value);
    r.raw = relative_pair_homology({&delta, r.window.eps, r.window.omega}, ring, opts, &r.stats);
    r.ranks = r.raw.shifted(-g.fiber_dim);
    return r;
}

}  // namespace gfh
