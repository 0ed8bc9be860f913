#pragma once

#include "gfh/homlin.hpp"
#include "gfh/spectop.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfh {

struct GFHProfile {
    std::string name;
    int m = 1;               ///< Legendrian dimension
    bool connected = true;
    std::vector<std::pair<Ring, GradedRanks>> rings;

    void validate() const;
    const GradedRanks* find(Ring r) const;
};

/// max of {k+1 : GFH_{-k} != 0, k >= 0}, {l-m : GFH_l != 0, l >= 0} and 1,
/// each term maximized over the rings independently.
int nmin_lower_bound(const GFHProfile& p);

struct NminReport {
    int homology_bound = 1;
    /// Smallest N >= homology_bound with no Steenrod obstruction on the
    /// N-fold suspension of the supplied spectrum, when one was supplied.
    std::optional<int> steenrod_bound;
    std::string steenrod_witness;  ///< detector verdict at N = steenrod_bound - 1
};

NminReport nmin_report(const GFHProfile& p, const std::optional<SpectrumSurrogate>& spectrum = {});

enum class Fillability { NoFilling, NoConnectedFilling, NoObstruction };
std::string fillability_name(Fillability f);
Fillability fillability_obstruction(const GFHProfile& p);

struct DualityReport {
    bool pass = true;
    std::vector<std::pair<int, int>> pairs;   ///< (-k, m+1+k) with both sides nonzero
    std::optional<std::pair<int, int>> witness;  ///< (k, partner degree) of the first failure
};

/// Checks GFH_{-k} != 0 <=> GFH_{m+1+k} != 0 over Z/2 for k >= 1.
DualityReport duality_audit(const GFHProfile& p);

struct SurfaceFilling {
    int genus = 0;  ///< nonorientable genus when orientable == false
    int boundary = 1;
    bool orientable = true;

    void validate() const;
};

/// The quotient L0 / Lambda: the closed surface with its b boundary circles
/// collapsed to one point, i.e. the closed surface wedged with b-1 circles.
SpectrumSurrogate seidel_spectrum(const SurfaceFilling& s);
/// Interval filling of the two-point Legendrian: the quotient is a circle.
SpectrumSurrogate interval_filling_spectrum();

/// Reduced Euler characteristic of L0 / Lambda.
long long filling_euler_characteristic(const SurfaceFilling& s);

struct SeidelComparison {
    bool match = false;
    GradedRanks expected;
    std::vector<int> mismatched_degrees;
};

SeidelComparison compare_seidel(const GradedRanks& gfh, const SurfaceFilling& s, Ring ring);

}  // namespace gfh
