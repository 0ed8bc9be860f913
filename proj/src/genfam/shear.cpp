#include "gfh/genfam.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace gfh {

Shear::Shear(double u) : u_(u) {
    if (!(u > 1)) throw ChoiceViolation("shear needs 1 < u");
}

double Shear::H(double t) const {
    if (t <= 1) return 0;
    const double w = u_ - 1;
    if (t >= u_) return -0.5 * (t - 1) * (t - 1);
    const double x = (t - 1) / w;
    return -w * w * (x * x * x - 0.5 * x * x * x * x);
}

double Shear::dH(double t) const {
    if (t <= 1) return 0;
    if (t >= u_) return -(t - 1);
    const double w = u_ - 1;
    return -w * smoothstep((t - 1) / w);
}

double Shear::ddH(double t) const {
    if (t <= 1) return 0;
    if (t >= u_) return -1;
    const double x = (t - 1) / (u_ - 1);
    return -6 * x * (1 - x);
}

void validate_shear(const ShearSpec& s, double lmin, double lmax) {
    const double inf = std::numeric_limits<double>::infinity();
    std::ostringstream os;
    const double ucap = std::min(std::isfinite(lmin) ? std::sqrt(1 + lmin) : inf, 2.0);
    const double mucap = std::min(lmin, 0.5 * (s.u - 1) * (s.u - 1));
    if (!(s.u > 1)) os << "shear needs 1 < u (u = " << s.u << ")";
    else if (!(s.u < ucap)) os << "shear needs u < min(sqrt(1 + lmin), 2) = " << ucap << " (u = " << s.u << ")";
    else if (!(s.mu > 0)) os << "shear needs 0 < mu (mu = " << s.mu << ")";
    else if (!(s.mu < mucap)) os << "shear needs mu < min(lmin, (u - 1)^2 / 2) = " << mucap << " (mu = " << s.mu << ")";
    else if (!(s.Omega > lmax + 0.5 * lmax * lmax))
        os << "shear needs Omega > lmax + lmax^2 / 2 = " << lmax + 0.5 * lmax * lmax << " (Omega = " << s.Omega << ")";
    else if (!(s.t_minus > 0 && s.t_minus < 1)) os << "filling needs 0 < t_minus < 1 (t_minus = " << s.t_minus << ")";
    if (!os.str().empty()) throw ChoiceViolation(os.str());
}

LemmaReport verify_lambda_lemmas(const ShearSpec& s, double lmin, double lmax, std::optional<double> sigma,
                                 std::size_t samples) {
    validate_shear(s, lmin, lmax);
    if (samples < 100) throw InvalidInput("lemma verification needs at least 100 samples");
    const Shear h(s.u);
    const double lo = s.u * s.u - 1;
    const double hi = std::isfinite(lmin) ? lmin : lo + 2;
    LemmaReport rep;
    rep.samples = samples;
    rep.sigma = sigma.value_or(0.5 * (lo + hi));
    if (!(rep.sigma > lo && rep.sigma < hi)) {
        std::ostringstream os;
        os << "sigma must satisfy u^2 - 1 < sigma < lmin (" << lo << " < " << rep.sigma << " < " << hi << ")";
        throw ChoiceViolation(os.str());
    }

    // first t >= u where the lower family clears lmax, with headroom
    double t_exit = s.u;
    while (h.lambda(-s.mu, t_exit) <= lmax) t_exit += 0.01;
    rep.t_max = 1.5 * t_exit;

    auto scan = [&](const std::string& name, double a, double b, auto slack) {
        LemmaCheck c{name, true, std::numeric_limits<double>::infinity(), a};
        for (std::size_t i = 0; i <= samples; ++i) {
            const double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(samples);
            const double m = slack(t);
            if (m < c.margin) c.margin = m, c.witness = t;
        }
        c.pass = c.margin > 0;
        rep.checks.push_back(c);
    };
    auto point = [&](const std::string& name, double t, double m) { rep.checks.push_back({name, m > 0, m, t}); };

    const double t0 = rep.t_max / static_cast<double>(samples);
    scan("lambda_Omega(t) > lmax on (0, t_max]", t0, rep.t_max, [&](double t) { return h.lambda(s.Omega, t) - lmax; });
    const double l1 = h.lambda(-s.mu, 1), lu = h.lambda(-s.mu, s.u);
    point("-lmin < lambda_-mu(1)", 1, std::isfinite(lmin) ? l1 + lmin : 1);
    point("lambda_-mu(1) < 0", 1, -l1);
    point("0 < lambda_-mu(u)", s.u, lu);
    point("lambda_-mu(u) < lmin", s.u, std::isfinite(lmin) ? lmin - lu : 1);
    scan("lambda_-mu increasing on [u, t_max]", s.u, rep.t_max, [&](double t) {
        const double dt = (rep.t_max - s.u) / static_cast<double>(samples);
        return h.lambda(-s.mu, t + dt) - h.lambda(-s.mu, t);
    });
    const double step = (s.u - 1) / static_cast<double>(samples);
    scan("lambda_sigma decreasing on [1, u]", 1, s.u - step,
         [&](double t) { return h.lambda(rep.sigma, t) - h.lambda(rep.sigma, t + step); });
    scan("0 < lambda_sigma < lmin on [1, u]", 1, s.u, [&](double t) {
        const double l = h.lambda(rep.sigma, t);
        return std::min(l, std::isfinite(lmin) ? lmin - l : l);
    });
    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

}  // namespace gfh
