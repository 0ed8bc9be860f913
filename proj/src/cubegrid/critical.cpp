#include "gfh/cubegrid.hpp"

#include <algorithm>
#include <cmath>

namespace gfh {

CriticalScan detect_critical_values(const SampledField& field) {
    field.validate();
    const auto& g = field.grid;
    const std::size_t d = g.dim();
    std::vector<std::size_t> stride(d);
    std::size_t s = 1;
    for (std::size_t a = d; a-- > 0;) {
        stride[a] = s;
        s *= g.axes[a].samples;
    }

    std::vector<double> hits;
    std::vector<std::size_t> coord(d, 0);
    const auto& val = field.values;
    for (std::size_t v = 0; v < val.size(); ++v) {
        bool critical = true;
        for (std::size_t a = 0; a < d && critical; ++a) {
            if (coord[a] == 0 || coord[a] + 1 == g.axes[a].samples) {
                critical = false;
                break;
            }
            double back = val[v] - val[v - stride[a]];
            double fwd = val[v + stride[a]] - val[v];
            critical = back * fwd <= 0;
        }
        if (critical) hits.push_back(val[v]);
        for (std::size_t a = d; a-- > 0;) {
            if (++coord[a] < g.axes[a].samples) break;
            coord[a] = 0;
        }
    }

    CriticalScan scan;
    scan.resolution = 2 * grid_oscillation(field);
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i + 1;
        while (j < hits.size() && hits[j] - hits[j - 1] <= scan.resolution) ++j;
        double sum = 0;
        for (std::size_t k = i; k < j; ++k) sum += hits[k];
        CriticalValue cv;
        cv.value = sum / static_cast<double>(j - i);
        cv.support = j - i;
        cv.sign = std::abs(cv.value) <= scan.resolution ? CriticalSign::Zero
                  : cv.value > 0                        ? CriticalSign::Positive
                                                        : CriticalSign::Negative;
        if (cv.sign == CriticalSign::Zero) cv.value = 0;
        scan.values.push_back(cv);
        i = j;
    }
    return scan;
}

}  // namespace gfh
