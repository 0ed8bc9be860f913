#pragma once

#include "gfh/homlin.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gfh {

inline constexpr double kDefaultCellBudget = 5e7;

/// Raised when a grid would exceed the configured cell budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AxisSpec {
    double min = 0;
    double max = 1;
    std::size_t samples = 2;

    double spacing() const { return (max - min) / static_cast<double>(samples - 1); }
    double coord(std::size_t i) const;
};

struct GridSpec {
    std::vector<AxisSpec> axes;

    std::size_t dim() const { return axes.size(); }
    std::size_t vertex_count() const;
    /// Number of cells of the full cubical complex on the grid (vertices included).
    double cell_count() const;
    void validate() const;
    void check_budget(double budget) const;

    /// Parses "lo:hi:n" axis specs separated by commas.
    static GridSpec parse(const std::string& spec);
    std::string to_string() const;
};

struct SampledField {
    GridSpec grid;
    std::vector<double> values;  ///< row-major, last axis fastest

    void validate() const;

    static SampledField sample(const GridSpec& grid, const std::function<double(const double*)>& fn);

    /// Copies the vertex slab [first, last] along one axis into a new field.
    SampledField restrict_axis(std::size_t axis, std::size_t first, std::size_t last) const;

    void write_binary(std::ostream& os) const;
    static SampledField read_binary(std::istream& is);
    std::string to_json() const;
};

/// Cells of a full cubical complex indexed in the doubled grid, where an odd
/// coordinate marks an interval direction.
struct SublevelComplex {
    ChainComplex complex;
    std::vector<std::vector<std::uint64_t>> cells;  ///< doubled-grid index per degree
    std::vector<std::vector<double>> values;        ///< max vertex value per cell

    /// Marks the cells whose value does not exceed t.
    SubcomplexSelector sublevel(double t) const;
};

SublevelComplex build_sublevel_complex(const SampledField& field, double t,
                                       double budget = kDefaultCellBudget);

struct CubicalPair {
    const SampledField* field = nullptr;
    double lower = 0;
    double upper = 0;
};

struct PairStats {
    std::uint64_t relative_cells = 0;  ///< cells in X_upper \ X_lower
    std::uint64_t residual_cells = 0;  ///< critical cells of the discrete gradient
    std::vector<std::string> warnings;
};

struct PairOptions {
    double budget = kDefaultCellBudget;
    /// Critical values used to warn about thresholds placed too close to them.
    std::vector<double> critical_values;
};

GradedRanks relative_pair_homology(const CubicalPair& pair, Ring ring, const PairOptions& opts = {},
                                   PairStats* stats = nullptr);

/// Same pair computed by materializing the complex; meant for small grids.
GradedRanks relative_pair_homology_explicit(const CubicalPair& pair, Ring ring,
                                            double budget = kDefaultCellBudget);

enum class CriticalSign { Negative, Zero, Positive };

struct CriticalValue {
    double value = 0;
    CriticalSign sign = CriticalSign::Zero;
    std::size_t support = 0;  ///< number of grid vertices in the cluster
};

struct CriticalScan {
    std::vector<CriticalValue> values;  ///< sorted ascending
    double resolution = 0;              ///< clustering tolerance used
};

CriticalScan detect_critical_values(const SampledField& field);

/// Largest absolute difference between adjacent vertices.
double grid_oscillation(const SampledField& field);

}  // namespace gfh
