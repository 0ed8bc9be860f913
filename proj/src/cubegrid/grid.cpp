#include "gfh/cubegrid.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace gfh {

double AxisSpec::coord(std::size_t i) const {
    if (i + 1 == samples) return max;
    return min + static_cast<double>(i) * spacing();
}

std::size_t GridSpec::vertex_count() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.samples;
    return n;
}

double GridSpec::cell_count() const {
    double n = 1;
    for (const auto& a : axes) n *= static_cast<double>(2 * a.samples - 1);
    return n;
}

void GridSpec::validate() const {
    if (axes.empty()) throw InvalidInput("grid must have at least one axis");
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const auto& a = axes[i];
        if (!std::isfinite(a.min) || !std::isfinite(a.max) || !(a.min < a.max))
            throw InvalidInput("grid axis " + std::to_string(i) + " needs finite min < max");
        if (a.samples < 2) throw InvalidInput("grid axis " + std::to_string(i) + " needs at least 2 samples");
    }
}

void GridSpec::check_budget(double budget) const {
    if (cell_count() > budget) {
        std::ostringstream os;
        os << "grid " << to_string() << " has " << cell_count() << " cells, over the budget of " << budget;
        throw BudgetExceeded(os.str());
    }
}

GridSpec GridSpec::parse(const std::string& spec) {
    GridSpec g;
    std::stringstream all(spec);
    std::string item;
    while (std::getline(all, item, ',')) {
        std::stringstream is(item);
        std::string lo, hi, n;
        if (!std::getline(is, lo, ':') || !std::getline(is, hi, ':') || !std::getline(is, n))
            throw InvalidInput("grid axis '" + item + "' is not of the form lo:hi:samples");
        try {
            g.axes.push_back({std::stod(lo), std::stod(hi), static_cast<std::size_t>(std::stoull(n))});
        } catch (const std::exception&) {
            throw InvalidInput("grid axis '" + item + "' has a malformed number");
        }
    }
    g.validate();
    return g;
}

std::string GridSpec::to_string() const {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < axes.size(); ++i)
        os << (i ? "," : "") << axes[i].min << ":" << axes[i].max << ":" << axes[i].samples;
    return os.str();
}

void SampledField::validate() const {
    grid.validate();
    if (values.size() != grid.vertex_count()) throw InvalidInput("field value count does not match the grid");
    for (double v : values)
        if (!std::isfinite(v)) throw InvalidInput("field contains a non-finite value");
}

SampledField SampledField::sample(const GridSpec& grid, const std::function<double(const double*)>& fn) {
    grid.validate();
    SampledField f;
    f.grid = grid;
    const std::size_t d = grid.dim();
    const std::size_t n = grid.vertex_count();
    f.values.resize(n);
    std::vector<std::vector<double>> coords(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < grid.axes[a].samples; ++i) coords[a].push_back(grid.axes[a].coord(i));
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> x(d);
    for (std::size_t a = 0; a < d; ++a) x[a] = coords[a][0];
    for (std::size_t v = 0; v < n; ++v) {
        f.values[v] = fn(x.data());
        for (std::size_t a = d; a-- > 0;) {
            if (++idx[a] < grid.axes[a].samples) {
                x[a] = coords[a][idx[a]];
                break;
            }
            idx[a] = 0;
            x[a] = coords[a][0];
        }
    }
    f.validate();
    return f;
}

SampledField SampledField::restrict_axis(std::size_t axis, std::size_t first, std::size_t last) const {
    if (axis >= grid.dim() || first >= last || last >= grid.axes[axis].samples)
        throw InvalidInput("invalid axis restriction");
    SampledField out;
    out.grid = grid;
    out.grid.axes[axis].min = grid.axes[axis].coord(first);
    out.grid.axes[axis].max = grid.axes[axis].coord(last);
    out.grid.axes[axis].samples = last - first + 1;
    std::size_t inner = 1;
    for (std::size_t a = axis + 1; a < grid.dim(); ++a) inner *= grid.axes[a].samples;
    std::size_t outer = 1;
    for (std::size_t a = 0; a < axis; ++a) outer *= grid.axes[a].samples;
    const std::size_t n_axis = grid.axes[axis].samples;
    out.values.reserve(out.grid.vertex_count());
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t i = first; i <= last; ++i) {
            const double* src = values.data() + (o * n_axis + i) * inner;
            out.values.insert(out.values.end(), src, src + inner);
        }
    return out;
}

namespace {
static_assert(std::endian::native == std::endian::little, "binary field format assumes a little-endian host");
constexpr char kMagic[8] = {'G', 'F', 'H', 'F', 'I', 'E', 'L', 'D'};

template <class T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
T get(std::istream& is) {
    T v{};
    if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) throw InvalidInput("truncated field file");
    return v;
}
}  // namespace

void SampledField::write_binary(std::ostream& os) const {
    os.write(kMagic, sizeof kMagic);
    put<std::uint64_t>(os, grid.dim());
    for (const auto& a : grid.axes) {
        put<double>(os, a.min);
        put<double>(os, a.max);
        put<std::uint64_t>(os, a.samples);
    }
    os.write(reinterpret_cast<const char*>(values.data()), static_cast<std::streamsize>(values.size() * sizeof(double)));
}

SampledField SampledField::read_binary(std::istream& is) {
    char magic[8];
    if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0)
        throw InvalidInput("not a field file");
    SampledField f;
    auto d = get<std::uint64_t>(is);
    for (std::uint64_t i = 0; i < d; ++i) {
        AxisSpec a;
        a.min = get<double>(is);
        a.max = get<double>(is);
        a.samples = get<std::uint64_t>(is);
        f.grid.axes.push_back(a);
    }
    f.grid.validate();
    f.values.resize(f.grid.vertex_count());
    if (!is.read(reinterpret_cast<char*>(f.values.data()), static_cast<std::streamsize>(f.values.size() * sizeof(double))))
        throw InvalidInput("truncated field file");
    f.validate();
    return f;
}

std::string SampledField::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"axes\":[";
    for (std::size_t i = 0; i < grid.dim(); ++i)
        os << (i ? "," : "") << "{\"min\":" << grid.axes[i].min << ",\"max\":" << grid.axes[i].max
           << ",\"samples\":" << grid.axes[i].samples << "}";
    os << "],\"values\":[";
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << "]}";
    return os.str();
}

}  // namespace gfh
