#include "gfh/genfam.hpp"

#include <cmath>
#include <sstream>

namespace gfh {

double smoothstep(double x) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    return x * x * (3 - 2 * x);
}

void GFDescriptor::validate() const {
    if (base_dim < 0) throw InvalidInput("base dimension must be nonnegative");
    if (fiber_dim < 1) throw InvalidInput("fiber dimension N must be at least 1");
    if (core_fibers() < 1) throw InvalidInput("at least one fiber must carry the linear tail");
    for (int s : stabilization)
        if (s != 1 && s != -1) throw InvalidInput("stabilization signs must be +1 or -1");
    if (static_cast<int>(tail.size()) != core_fibers())
        throw InvalidInput("tail must have one coefficient per non-stabilizing fiber");
    bool nonzero = false;
    for (double a : tail) {
        if (!std::isfinite(a)) throw InvalidInput("tail coefficient is not finite");
        nonzero = nonzero || a != 0;
    }
    if (!nonzero) throw InvalidInput("the linear tail A must be nonzero");
    const std::size_t nv = static_cast<std::size_t>(core_vars());
    for (const auto& m : core) {
        if (m.exponents.size() != nv)
            throw InvalidInput("core monomial needs " + std::to_string(nv) + " exponents");
        for (int e : m.exponents)
            if (e < 0) throw InvalidInput("negative exponent in core monomial");
        if (!std::isfinite(m.coeff)) throw InvalidInput("core coefficient is not finite");
    }
    if (!is_linear() && support_box.size() != nv)
        throw InvalidInput("support box needs one interval per core variable");
    for (const auto& [lo, hi] : support_box)
        if (!(lo < hi)) throw InvalidInput("support box intervals need lo < hi");
    if (!(blend_radius > 0 && blend_radius <= 1)) throw InvalidInput("blend radius must lie in (0, 1]");
    for (const auto& b : bumps) {
        if (b.center.size() != nv) throw InvalidInput("bump center needs one coordinate per core variable");
        if (!(b.radius > 0)) throw InvalidInput("bump radius must be positive");
        for (std::size_t i = 0; i < nv; ++i)
            if (b.center[i] - b.radius < support_box[i].first || b.center[i] + b.radius > support_box[i].second)
                throw InvalidInput("bump must lie inside the support box");
    }
}

double GFDescriptor::core_value(const double* x) const {
    if (is_linear()) return 0;
    const std::size_t nv = static_cast<std::size_t>(core_vars());
    double chi = 1;
    for (std::size_t i = 0; i < nv && chi != 0; ++i) {
        const auto& [lo, hi] = support_box[i];
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo), r = blend_radius * h;
        chi *= 1 - smoothstep((std::abs(x[i] - c) - (h - r)) / r);
    }
    double p = 0;
    if (chi != 0)
        for (const auto& m : core) {
            double term = m.coeff;
            for (std::size_t i = 0; i < nv; ++i)
                for (int e = 0; e < m.exponents[i]; ++e) term *= x[i];
            p += term;
        }
    double bump = 0;
    for (const auto& b : bumps) {
        double w = b.amplitude;
        for (std::size_t i = 0; i < nv && w != 0; ++i) w *= 1 - smoothstep(std::abs(x[i] - b.center[i]) / b.radius);
        bump += w;
    }
    return chi * p + bump;
}

double GFDescriptor::tail_value(const double* eta) const {
    double a = 0;
    for (std::size_t j = 0; j < tail.size(); ++j) a += tail[j] * eta[j];
    return a;
}

double GFDescriptor::evaluate(const double* x, const double* eta) const {
    const int nc = core_fibers();
    double vars[16];
    for (int i = 0; i < base_dim; ++i) vars[i] = x[i];
    for (int j = 0; j < nc; ++j) vars[base_dim + j] = eta[j];
    double v = core_value(vars) + tail_value(eta);
    for (std::size_t s = 0; s < stabilization.size(); ++s) {
        const double e = eta[nc + static_cast<int>(s)];
        v += stabilization[s] * e * e;
    }
    return v;
}

GFDescriptor stabilize(const GFDescriptor& g, int sign) {
    if (sign != 1 && sign != -1) throw InvalidInput("stabilization sign must be +1 or -1");
    GFDescriptor out = g;
    out.stabilization.push_back(sign);
    out.fiber_dim += 1;
    out.validate();
    return out;
}

FieldFunction difference_function(const GFDescriptor& g) {
    g.validate();
    if (g.core_vars() > 16) throw InvalidInput("too many core variables");
    const int b = g.base_dim, n = g.fiber_dim;
    return [g, b, n](const double* p) { return g.evaluate(p, p + b + n) - g.evaluate(p, p + b); };
}

GridSpec default_grid(const GFDescriptor& g, std::size_t samples, double margin) {
    g.validate();
    auto widen = [&](std::pair<double, double> iv) {
        const double w = iv.second - iv.first;
        return AxisSpec{iv.first - margin * w, iv.second + margin * w, samples};
    };
    std::vector<AxisSpec> base, fiber;
    double extent = 3;
    if (!g.is_linear()) {
        extent = 0;
        for (int i = 0; i < g.base_dim; ++i) base.push_back(widen(g.support_box[static_cast<std::size_t>(i)]));
        for (int j = 0; j < g.core_fibers(); ++j) {
            AxisSpec a = widen(g.support_box[static_cast<std::size_t>(g.base_dim + j)]);
            extent = std::max({extent, std::abs(a.min), std::abs(a.max)});
            fiber.push_back(a);
        }
    } else {
        for (int i = 0; i < g.base_dim; ++i) base.push_back({-extent, extent, samples});
        for (int j = 0; j < g.core_fibers(); ++j) fiber.push_back({-extent, extent, samples});
    }
    for (std::size_t s = 0; s < g.stabilization.size(); ++s) fiber.push_back({-extent, extent, samples});
    GridSpec grid;
    grid.axes = base;
    grid.axes.insert(grid.axes.end(), fiber.begin(), fiber.end());
    grid.axes.insert(grid.axes.end(), fiber.begin(), fiber.end());
    return grid;
}

void check_truncation(const GFDescriptor& g, const GridSpec& grid) {
    const int b = g.base_dim, n = g.fiber_dim;
    if (static_cast<int>(grid.dim()) != b + 2 * n)
        throw InvalidInput("grid dimension " + std::to_string(grid.dim()) + " does not match base + 2N = " +
                           std::to_string(b + 2 * n));
    if (g.is_linear()) return;
    auto check = [&](std::size_t axis, std::pair<double, double> iv) {
        const double m = 0.2 * (iv.second - iv.first);
        const auto& a = grid.axes[axis];
        if (a.min > iv.first - m + 1e-12 || a.max < iv.second + m - 1e-12) {
            std::ostringstream os;
            os << "grid axis " << axis << " [" << a.min << ", " << a.max << "] must contain the support [" << iv.first
               << ", " << iv.second << "] with a 20% margin";
            throw InvalidInput(os.str());
        }
    };
    for (int i = 0; i < b; ++i) check(static_cast<std::size_t>(i), g.support_box[static_cast<std::size_t>(i)]);
    for (int j = 0; j < g.core_fibers(); ++j) {
        check(static_cast<std::size_t>(b + j), g.support_box[static_cast<std::size_t>(b + j)]);
        check(static_cast<std::size_t>(b + n + j), g.support_box[static_cast<std::size_t>(b + j)]);
    }
}

}  // namespace gfh
