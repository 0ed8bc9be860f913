#include "cell_grid.hpp"

#include <cmath>
#include <unordered_map>

namespace gfh {

SubcomplexSelector SublevelComplex::sublevel(double t) const {
    SubcomplexSelector sel;
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::vector<bool> mask(values[k].size());
        for (std::size_t i = 0; i < values[k].size(); ++i) mask[i] = values[k][i] <= t;
        sel[static_cast<int>(k)] = std::move(mask);
    }
    return sel;
}

SublevelComplex build_sublevel_complex(const SampledField& field, double t, double budget) {
    field.validate();
    if (!std::isfinite(t)) throw InvalidInput("threshold must be finite");
    field.grid.check_budget(budget);
    detail::CellGrid g(field.grid);

    SublevelComplex out;
    out.cells.resize(g.d + 1);
    out.values.resize(g.d + 1);
    std::unordered_map<std::uint64_t, std::size_t> position;
    std::array<std::uint64_t, detail::kMaxDim> c{};
    for (std::uint64_t idx = 0; idx < g.total; ++idx) {
        g.decode(idx, c.data());
        double v = g.cell_value(c.data(), field.values);
        if (v > t) continue;
        int k = g.cell_dim(c.data());
        position[idx] = out.cells[k].size();
        out.cells[k].push_back(idx);
        out.values[k].push_back(v);
    }
    std::vector<std::size_t> dims;
    for (const auto& cs : out.cells) dims.push_back(cs.size());
    out.complex = ChainComplex(0, dims);
    for (std::size_t k = 1; k <= g.d; ++k) {
        SparseMatrix m(dims[k - 1], dims[k]);
        for (std::size_t j = 0; j < out.cells[k].size(); ++j) {
            std::uint64_t idx = out.cells[k][j];
            g.decode(idx, c.data());
            g.for_each_face(idx, c.data(), [&](std::uint64_t face, int coeff) { m.add(position.at(face), j, coeff); });
        }
        out.complex.set_boundary(static_cast<int>(k), std::move(m));
    }
    return out;
}

GradedRanks relative_pair_homology_explicit(const CubicalPair& pair, Ring ring, double budget) {
    if (!pair.field) throw InvalidInput("pair has no field");
    if (!(pair.lower < pair.upper)) throw InvalidInput("pair thresholds must satisfy lower < upper");
    SublevelComplex x = build_sublevel_complex(*pair.field, pair.upper, budget);
    return relative_homology(x.complex, x.sublevel(pair.lower), ring);
}

}  // namespace gfh
