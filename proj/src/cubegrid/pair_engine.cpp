#include "cell_grid.hpp"

#include <map>
#include <queue>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace gfh {
namespace {

using detail::CellGrid;
using detail::kMaxDim;
using Coords = std::array<std::uint64_t, kMaxDim>;

constexpr std::size_t kMorseMaxDim = 6;

// Cell state word: bits 0-1 kind, bits 2-4 partner axis, bit 5 partner
// direction (+1 when set), bits 6-15 pairing timestamp inside the lower star.
enum Kind : std::uint16_t { kUnset = 0, kCritical = 1, kUp = 2, kDown = 3 };

struct VertexKey {
    double value;
    std::uint64_t index;
    bool operator<(const VertexKey& o) const { return value < o.value || (value == o.value && index < o.index); }
    bool operator==(const VertexKey& o) const = default;
};

// Discrete gradient on the relative complex X_upper \ X_lower built one lower
// star at a time; vertices are totally ordered by (value, index).
class MorseEngine {
public:
    MorseEngine(const SampledField& f, double lower, double upper)
        : f_(f), g_(f.grid), lower_(lower), upper_(upper), state_(g_.total, 0), critical_(g_.d + 1) {
        if (g_.d > kMorseMaxDim) throw InvalidInput("the implicit pair engine supports at most 6 dimensions");
        build_tables();
    }

    void match() {
        std::array<std::uint64_t, kMaxDim> vc{};
        const std::size_t nv = f_.values.size();
        for (std::uint64_t v = 0; v < nv; ++v) {
            const double val = f_.values[v];
            if (val <= upper_) ++sublevel_vertices_;
            if (val > lower_ && val <= upper_) process_lower_star(v, vc);
            for (std::size_t a = g_.d; a-- > 0;) {
                if (++vc[a] < f_.grid.axes[a].samples) break;
                vc[a] = 0;
            }
        }
    }

    std::uint64_t relative_cells() const { return relative_; }
    std::uint64_t sublevel_vertices() const { return sublevel_vertices_; }

    GradedRanks morse_homology(Ring ring, std::uint64_t& critical_count) const {
        std::vector<std::size_t> dims;
        std::unordered_map<std::uint64_t, std::size_t> pos;
        critical_count = 0;
        for (const auto& cs : critical_) {
            for (std::size_t i = 0; i < cs.size(); ++i) pos[cs[i]] = i;
            dims.push_back(cs.size());
            critical_count += cs.size();
        }
        ChainComplex cx(0, dims);
        for (std::size_t k = 1; k <= g_.d; ++k) {
            SparseMatrix m(dims[k - 1], dims[k]);
            for (std::size_t j = 0; j < critical_[k].size(); ++j)
                for (const auto& [cell, coeff] : flow_boundary(critical_[k][j])) m.add(pos.at(cell), j, coeff);
            cx.set_boundary(static_cast<int>(k), std::move(m));
        }
        return homology(cx, ring);
    }

private:
    struct Code {
        std::array<int, kMaxDim> dir{};
        std::vector<int> nonzero;  // axes with a direction
        std::vector<int> faces;    // codes of faces containing the base vertex
        std::vector<std::pair<int, int>> cofaces;  // (code, axis)
        std::int64_t vertex_offset = 0;             // opposite vertex relative to base
        std::int64_t cell_offset = 0;               // cell index relative to base vertex cell
    };

    void build_tables() {
        std::size_t n = 1;
        for (std::size_t a = 0; a < g_.d; ++a) n *= 3;
        codes_.resize(n);
        std::vector<std::int64_t> pow3(g_.d + 1, 1);
        for (std::size_t a = 1; a <= g_.d; ++a) pow3[a] = pow3[a - 1] * 3;
        for (std::size_t c = 0; c < n; ++c) {
            Code& code = codes_[c];
            std::size_t rest = c;
            for (std::size_t a = 0; a < g_.d; ++a) {
                int digit = static_cast<int>(rest % 3);
                rest /= 3;
                code.dir[a] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
                if (code.dir[a] != 0) {
                    code.nonzero.push_back(static_cast<int>(a));
                    code.faces.push_back(static_cast<int>(c - static_cast<std::size_t>(digit * pow3[a])));
                    code.vertex_offset += code.dir[a] * static_cast<std::int64_t>(g_.vstride[a]);
                    code.cell_offset += code.dir[a] * static_cast<std::int64_t>(g_.cstride[a]);
                } else {
                    code.cofaces.push_back({static_cast<int>(c + pow3[a]), static_cast<int>(a)});
                    code.cofaces.push_back({static_cast<int>(c + 2 * pow3[a]), static_cast<int>(a)});
                }
            }
        }
        order_.resize(n);
        for (std::size_t c = 0; c < n; ++c) order_[c] = static_cast<int>(c);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int x, int y) { return codes_[x].nonzero.size() < codes_[y].nonzero.size(); });
        in_star_.assign(n, 0);
        classified_.assign(n, 0);
        keys_.resize(n);
    }

    VertexKey key(std::uint64_t v) const { return {f_.values[v], v}; }

    // Sorted (descending) vertex keys of the cell with the given code.
    void fill_keys(int c, std::uint64_t v) {
        auto& out = keys_[c];
        out.clear();
        const Code& code = codes_[c];
        const std::size_t k = code.nonzero.size();
        for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
            std::int64_t off = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (mask >> j & 1) off += code.dir[code.nonzero[j]] * static_cast<std::int64_t>(g_.vstride[code.nonzero[j]]);
            out.push_back(key(static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + off)));
        }
        std::sort(out.begin(), out.end(), [](const VertexKey& x, const VertexKey& y) { return y < x; });
    }

    bool g_less(int x, int y) const {
        return std::lexicographical_compare(keys_[x].begin(), keys_[x].end(), keys_[y].begin(), keys_[y].end());
    }

    int unpaired_faces(int c) const {
        int n = 0;
        for (int f : codes_[c].faces) n += !classified_[f];
        return n;
    }

    void set_state(std::uint64_t cell, Kind kind, int axis, int sign, int stamp) {
        state_[cell] = static_cast<std::uint16_t>(kind | (axis << 2) | ((sign > 0 ? 1 : 0) << 5) | (stamp << 6));
    }

    void process_lower_star(std::uint64_t v, const std::array<std::uint64_t, kMaxDim>& vc) {
        std::uint64_t base = 0;
        for (std::size_t a = 0; a < g_.d; ++a) base += 2 * vc[a] * g_.cstride[a];
        const VertexKey vk = key(v);

        star_.clear();
        for (int c : order_) {
            const Code& code = codes_[c];
            bool in = true;
            if (!code.nonzero.empty()) {
                for (int a : code.nonzero) {
                    if (code.dir[a] > 0 ? vc[a] + 1 >= f_.grid.axes[a].samples : vc[a] == 0) {
                        in = false;
                        break;
                    }
                }
                for (std::size_t j = 0; in && j < code.faces.size(); ++j) in = in_star_[code.faces[j]];
                in = in && key(static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + code.vertex_offset)) < vk;
            }
            in_star_[c] = in;
            if (in) {
                star_.push_back(c);
                classified_[c] = 0;
            }
        }
        relative_ += star_.size();
        auto global = [&](int c) { return static_cast<std::uint64_t>(static_cast<std::int64_t>(base) + codes_[c].cell_offset); };

        int stamp = 0;
        auto critical = [&](int c) {
            classified_[c] = 1;
            set_state(global(c), kCritical, 0, 0, stamp++);
            critical_[codes_[c].nonzero.size()].push_back(global(c));
        };
        auto pair = [&](int face, int coface) {
            int axis = 0;
            for (int a : codes_[coface].nonzero)
                if (codes_[face].dir[a] == 0) axis = a;
            int sign = codes_[coface].dir[axis];
            classified_[face] = classified_[coface] = 1;
            set_state(global(face), kUp, axis, sign, stamp);
            set_state(global(coface), kDown, axis, -sign, stamp);
            ++stamp;
        };

        if (star_.size() == 1) {
            critical(0);
            return;
        }
        if (star_.size() > 1024) throw InvalidInput("lower star too large for the pairing timestamp");
        for (int c : star_) fill_keys(c, v);

        int delta = -1;
        pq_zero_.clear();
        for (int c : star_)
            if (codes_[c].nonzero.size() == 1) {
                if (delta < 0 || g_less(c, delta)) delta = c;
            }
        for (int c : star_)
            if (codes_[c].nonzero.size() == 1 && c != delta) pq_zero_.push_back(c);
        pair(0, delta);

        pq_one_.clear();
        auto push_cofaces = [&](int c) {
            for (const auto& [cf, axis] : codes_[c].cofaces)
                if (in_star_[cf] && !classified_[cf] && unpaired_faces(cf) == 1) pq_one_.push_back(cf);
        };
        push_cofaces(delta);
        auto pop_min = [&](std::vector<int>& pq) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < pq.size(); ++i)
                if (g_less(pq[i], pq[best])) best = i;
            int c = pq[best];
            pq[best] = pq.back();
            pq.pop_back();
            return c;
        };

        while (!pq_one_.empty() || !pq_zero_.empty()) {
            while (!pq_one_.empty()) {
                int alpha = pop_min(pq_one_);
                if (classified_[alpha]) continue;
                if (unpaired_faces(alpha) == 0) {
                    pq_zero_.push_back(alpha);
                    continue;
                }
                int face = -1;
                for (int f : codes_[alpha].faces)
                    if (!classified_[f]) face = f;
                pair(face, alpha);
                push_cofaces(alpha);
                push_cofaces(face);
            }
            while (!pq_zero_.empty()) {
                int gamma = pop_min(pq_zero_);
                if (classified_[gamma]) continue;
                critical(gamma);
                push_cofaces(gamma);
                break;
            }
        }
    }

    struct HeapItem {
        VertexKey top;
        int stamp;
        std::uint64_t cell;
        bool operator<(const HeapItem& o) const {
            if (!(top == o.top)) return top < o.top;
            return stamp < o.stamp;
        }
    };

    HeapItem heap_item(std::uint64_t cell) const {
        std::array<std::uint64_t, kMaxDim> c{};
        g_.decode(cell, c.data());
        VertexKey best{-std::numeric_limits<double>::infinity(), 0};
        bool first = true;
        g_.for_each_vertex(c.data(), [&](std::uint64_t v) {
            VertexKey k = key(v);
            if (first || best < k) best = k;
            first = false;
        });
        return {best, state_[cell] >> 6, cell};
    }

    // Boundary of a critical cell in the Morse complex, obtained by pushing
    // its cubical boundary down the gradient until only critical cells remain.
    std::map<std::uint64_t, std::int64_t> flow_boundary(std::uint64_t sigma) const {
        std::map<std::uint64_t, std::int64_t> result;
        std::unordered_map<std::uint64_t, std::int64_t> chain;
        std::priority_queue<HeapItem> heap;
        auto add = [&](std::uint64_t cell, std::int64_t c) {
            if ((state_[cell] & 3) == kUnset) return;  // lies in the lower sublevel set
            auto [it, fresh] = chain.try_emplace(cell, 0);
            if (fresh) heap.push(heap_item(cell));
            if (__builtin_add_overflow(it->second, c, &it->second))
                throw InvalidInput("Morse boundary coefficient overflow");
        };
        std::array<std::uint64_t, kMaxDim> c{};
        g_.decode(sigma, c.data());
        g_.for_each_face(sigma, c.data(), [&](std::uint64_t y, int coeff) { add(y, coeff); });
        while (!heap.empty()) {
            const std::uint64_t y = heap.top().cell;
            heap.pop();
            auto it = chain.find(y);
            const std::int64_t cy = it->second;
            chain.erase(it);
            if (cy == 0) continue;
            const std::uint16_t st = state_[y];
            const int kind = st & 3;
            if (kind == kCritical) {
                result[y] += cy;
                continue;
            }
            if (kind == kDown) continue;
            const int axis = (st >> 2) & 7;
            const std::uint64_t kappa = (st >> 5 & 1) ? y + g_.cstride[axis] : y - g_.cstride[axis];
            g_.decode(kappa, c.data());
            int e = 0;
            g_.for_each_face(kappa, c.data(), [&](std::uint64_t r, int coeff) {
                if (r == y) e = coeff;
            });
            std::int64_t scale;
            if (__builtin_mul_overflow(cy, static_cast<std::int64_t>(e), &scale))
                throw InvalidInput("Morse boundary coefficient overflow");
            g_.for_each_face(kappa, c.data(), [&](std::uint64_t r, int coeff) {
                if (r != y) add(r, -scale * coeff);
            });
        }
        for (auto it = result.begin(); it != result.end();)
            it = it->second == 0 ? result.erase(it) : std::next(it);
        return result;
    }

    const SampledField& f_;
    CellGrid g_;
    double lower_, upper_;
    std::vector<std::uint16_t> state_;
    std::vector<std::vector<std::uint64_t>> critical_;
    std::vector<Code> codes_;
    std::vector<int> order_;
    std::vector<char> in_star_, classified_;
    std::vector<std::vector<VertexKey>> keys_;
    std::vector<int> star_, pq_zero_, pq_one_;
    std::uint64_t relative_ = 0;
    std::uint64_t sublevel_vertices_ = 0;
};

}  // namespace

double grid_oscillation(const SampledField& field) {
    const auto& g = field.grid;
    double osc = 0;
    std::size_t stride = 1;
    for (std::size_t a = g.dim(); a-- > 0;) {
        const std::size_t n = g.axes[a].samples;
        for (std::size_t v = 0; v < field.values.size(); ++v)
            if ((v / stride) % n + 1 < n) osc = std::max(osc, std::abs(field.values[v + stride] - field.values[v]));
        stride *= n;
    }
    return osc;
}

GradedRanks relative_pair_homology(const CubicalPair& pair, Ring ring, const PairOptions& opts, PairStats* stats) {
    if (!pair.field) throw InvalidInput("pair has no field");
    const SampledField& f = *pair.field;
    f.validate();
    if (!std::isfinite(pair.lower) || !std::isfinite(pair.upper) || !(pair.lower < pair.upper))
        throw InvalidInput("pair thresholds must be finite with lower < upper");
    f.grid.check_budget(opts.budget);

    PairStats local;
    if (!opts.critical_values.empty()) {
        const double osc = grid_oscillation(f);
        for (double cv : opts.critical_values)
            for (double t : {pair.lower, pair.upper})
                if (std::abs(t - cv) < osc) {
                    std::ostringstream os;
                    os << "threshold " << t << " lies within one grid-cell oscillation (" << osc
                       << ") of critical value " << cv;
                    local.warnings.push_back(os.str());
                }
    }

    MorseEngine engine(f, pair.lower, pair.upper);
    engine.match();
    if (engine.sublevel_vertices() == 0)
        throw InvalidInput("thresholds straddle no cells: the upper sublevel set is empty");
    local.relative_cells = engine.relative_cells();
    GradedRanks out = engine.morse_homology(ring, local.residual_cells);
    if (stats) *stats = std::move(local);
    return out;
}

}  // namespace gfh
