#pragma once

#include "gfh/cubegrid.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gfh {

/// Raised when a window or shear parameter breaks one of the required
/// inequalities. The message names the inequality.
class ChoiceViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double smoothstep(double x);

struct Monomial {
    double coeff = 0;
    std::vector<int> exponents;  ///< one per core variable (base first, then fibers)
};

/// Localized perturbation amplitude * prod_i (1 - smoothstep(|z_i - c_i| / radius)).
struct Bump {
    double amplitude = 0;
    std::vector<double> center;
    double radius = 1;
};

/// f(x, eta) = chi(x, eta) * core(x, eta) + bumps + A(eta) + sum_j s_j eta'_j^2
/// where chi is the blended indicator of the support box and eta' are the
/// stabilizing fibers.
struct GFDescriptor {
    int base_dim = 0;
    int fiber_dim = 1;  ///< N, stabilizing fibers included
    std::vector<Monomial> core;
    std::vector<std::pair<double, double>> support_box;  ///< per core variable
    double blend_radius = 0.25;                          ///< fraction of each half-width
    std::vector<double> tail;                            ///< A on the core fibers
    std::vector<int> stabilization;                      ///< +1/-1 per stabilizing fiber
    std::vector<Bump> bumps;

    int core_fibers() const { return fiber_dim - static_cast<int>(stabilization.size()); }
    int core_vars() const { return base_dim + core_fibers(); }
    void validate() const;

    double core_value(const double* x) const;  ///< chi * core + bumps, over core variables
    double tail_value(const double* eta) const;
    double evaluate(const double* x, const double* eta) const;
    bool is_linear() const { return core.empty() && bumps.empty(); }
};

GFDescriptor stabilize(const GFDescriptor& g, int sign);

using FieldFunction = std::function<double(const double*)>;

/// delta(x, eta, eta~) = f(x, eta~) - f(x, eta); variables ordered (x, eta, eta~).
FieldFunction difference_function(const GFDescriptor& g);

/// Box around the support with the given fractional margin on each side.
GridSpec default_grid(const GFDescriptor& g, std::size_t samples, double margin = 0.25);

/// Checks that the grid covers the support with at least 20% margin per axis.
void check_truncation(const GFDescriptor& g, const GridSpec& grid);

struct Window {
    double eps = 0;
    double omega = 0;
};

struct Spectrum {
    std::vector<double> lengths;  ///< positive critical values, ascending
    bool empty() const { return lengths.empty(); }
    double lmin() const { return lengths.front(); }
    double lmax() const { return lengths.back(); }
};

Spectrum length_spectrum(const SampledField& delta);

/// Picks (lmin / 2, 2 lmax + 1), or validates the overrides against the spectrum.
Window choose_window(const Spectrum& spectrum, std::optional<double> eps = {}, std::optional<double> omega = {});

struct GFHResult {
    GradedRanks ranks;  ///< GFH_k = H_{k+N}
    GradedRanks raw;    ///< H_* of the pair before regrading
    int fiber_dim = 0;
    Window window;
    GridSpec grid;
    Spectrum spectrum;
    PairStats stats;
};

GFHResult compute_gfh(const GFDescriptor& g, const GridSpec& grid, std::optional<Window> window, Ring ring,
              double budget = kDefaultCellBudget);

struct ShearSpec {
    double u = 1.5;
    double mu = 0.1;
    double Omega = 10;
    double t_minus = 0.5;
};

/// Shearing function: 0 for t <= 1, -(t-1)^2/2 for t >= u, and on (1, u) the
/// integral of -(u-1) s((t-1)/(u-1)) with s the cubic smoothstep.
class Shear {
public:
    explicit Shear(double u);
    double H(double t) const;
    double dH(double t) const;
    double ddH(double t) const;
    double lambda(double alpha, double t) const { return (alpha - H(t)) / t; }
    double u() const { return u_; }

private:
    double u_;
};

/// Throws ChoiceViolation naming the first violated inequality.
void validate_shear(const ShearSpec& spec, double lmin, double lmax);

struct LemmaCheck {
    std::string name;
    bool pass = false;
    double margin = 0;   ///< smallest slack over the samples
    double witness = 0;  ///< t where the smallest slack occurs
};

struct LemmaReport {
    bool pass = false;
    std::size_t samples = 0;
    double sigma = 0;
    double t_max = 0;
    std::vector<LemmaCheck> checks;
};

LemmaReport verify_lambda_lemmas(const ShearSpec& spec, double lmin, double lmax,
                                 std::optional<double> sigma = {}, std::size_t samples = 20000);

/// F(t, eta) = t * (A(eta) + beta(t) core(eta) + quadratic part), beta rising
/// from 0 at t_minus to 1 at t = 1.
struct FillingDescriptorNumeric {
    GFDescriptor base;
    double t_minus = 0.5;

    void validate() const;
    double beta(double t) const;
    double evaluate(double t, const double* eta) const;
};

/// Delta_F(t, eta, eta~) = F(t, eta~) + H(t) - F(t, eta); variables (t, eta, eta~).
FieldFunction sheared_difference(const FillingDescriptorNumeric& fd, const ShearSpec& spec);

struct SeidelReport {
    GradedRanks W, A, B, C;
    GradedRanks reference;  ///< pre-shift GFH of the boundary family with its own window
    Window reference_window;
    Spectrum spectrum;
    LemmaReport lemmas;
    std::size_t u_index = 0;
    double w = 0, v = 0;
    bool match = false;
};

SeidelReport seidel_decomposition(const FillingDescriptorNumeric& fd, const ShearSpec& spec, const GridSpec& grid,
                                  Ring ring, double budget = kDefaultCellBudget,
                                  std::optional<Spectrum> spectrum = {});

}  // namespace gfh
