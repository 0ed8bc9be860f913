#pragma once

#include "gfh/cubegrid.hpp"

#include <array>
#include <algorithm>
#include <cstdint>
#include <limits>

namespace gfh::detail {

inline constexpr std::size_t kMaxDim = 8;

/// Geometry of the doubled grid: cell coordinates run over [0, 2n-2] per axis.
struct CellGrid {
    std::size_t d = 0;
    std::array<std::uint64_t, kMaxDim> ext{};      // 2n-1
    std::array<std::uint64_t, kMaxDim> cstride{};  // cell index strides
    std::array<std::uint64_t, kMaxDim> vstride{};  // vertex index strides
    std::uint64_t total = 1;

    explicit CellGrid(const GridSpec& g) : d(g.dim()) {
        if (d > kMaxDim) throw InvalidInput("grids above dimension 8 are not supported");
        std::uint64_t cs = 1, vs = 1;
        for (std::size_t a = d; a-- > 0;) {
            ext[a] = 2 * g.axes[a].samples - 1;
            cstride[a] = cs;
            vstride[a] = vs;
            cs *= ext[a];
            vs *= g.axes[a].samples;
        }
        total = cs;
    }

    void decode(std::uint64_t idx, std::uint64_t* c) const {
        for (std::size_t a = 0; a < d; ++a) {
            c[a] = idx / cstride[a];
            idx -= c[a] * cstride[a];
        }
    }

    template <class F>
    void for_each_vertex(const std::uint64_t* c, F&& f) const {
        std::uint64_t base = 0;
        std::array<std::uint64_t, kMaxDim> odd{};
        std::size_t k = 0;
        for (std::size_t a = 0; a < d; ++a) {
            base += (c[a] >> 1) * vstride[a];
            if (c[a] & 1) odd[k++] = vstride[a];
        }
        for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
            std::uint64_t v = base;
            for (std::size_t j = 0; j < k; ++j)
                if (mask >> j & 1) v += odd[j];
            f(v);
        }
    }

    double cell_value(const std::uint64_t* c, const std::vector<double>& values) const {
        double m = -std::numeric_limits<double>::infinity();
        for_each_vertex(c, [&](std::uint64_t v) { m = std::max(m, values[v]); });
        return m;
    }

    int cell_dim(const std::uint64_t* c) const {
        int k = 0;
        for (std::size_t a = 0; a < d; ++a) k += static_cast<int>(c[a] & 1);
        return k;
    }

    /// Calls f(face_index, coefficient) for the codimension-one faces.
    template <class F>
    void for_each_face(std::uint64_t idx, const std::uint64_t* c, F&& f) const {
        int sign = 1;
        for (std::size_t a = 0; a < d; ++a) {
            if (!(c[a] & 1)) continue;
            f(idx + cstride[a], sign);
            f(idx - cstride[a], -sign);
            sign = -sign;
        }
    }
};

}  // namespace gfh::detail
