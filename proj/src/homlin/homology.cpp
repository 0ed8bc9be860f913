#include "gfh/homlin.hpp"

#include <algorithm>
#include <sstream>

namespace gfh {

void GradedRanks::set(int degree, GroupRank g) {
    if (g.zero())
        groups_.erase(degree);
    else
        groups_[degree] = std::move(g);
}

GroupRank GradedRanks::get(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? GroupRank{} : it->second;
}

GradedRanks GradedRanks::shifted(int by) const {
    GradedRanks out;
    for (const auto& [k, g] : groups_) out.set(k + by, g);
    return out;
}

GradedRanks GradedRanks::direct_sum(const GradedRanks& other) const {
    GradedRanks out = *this;
    for (const auto& [k, g] : other.groups_) {
        GroupRank cur = out.get(k);
        cur.free += g.free;
        cur.torsion.insert(cur.torsion.end(), g.torsion.begin(), g.torsion.end());
        std::sort(cur.torsion.begin(), cur.torsion.end());
        out.set(k, cur);
    }
    return out;
}

std::vector<int> GradedRanks::support() const {
    std::vector<int> out;
    for (const auto& [k, g] : groups_) out.push_back(k);
    return out;
}

long long GradedRanks::euler_characteristic() const {
    long long chi = 0;
    for (const auto& [k, g] : groups_) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(g.free);
    return chi;
}

std::string GradedRanks::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, g] : groups_) {
        if (!first) os << ", ";
        first = false;
        os << k << ": (" << g.free << ", [";
        for (std::size_t i = 0; i < g.torsion.size(); ++i) os << (i ? "," : "") << g.torsion[i];
        os << "])";
    }
    os << "}";
    return os.str();
}

ChainComplex::ChainComplex(int k_lo, std::vector<std::size_t> dims) : k_lo_(k_lo), dims_(std::move(dims)) {
    boundaries_.resize(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i)
        boundaries_[i] = SparseMatrix(i == 0 ? 0 : dims_[i - 1], dims_[i]);
}

std::size_t ChainComplex::dim(int k) const {
    if (k < k_lo_ || k > k_hi()) return 0;
    return dims_[static_cast<std::size_t>(k - k_lo_)];
}

void ChainComplex::set_boundary(int k, SparseMatrix m) {
    if (k < k_lo_ || k > k_hi()) throw InvalidInput("boundary degree out of range");
    if (m.rows() != dim(k - 1) || m.cols() != dim(k)) throw InvalidInput("boundary shape mismatch");
    boundaries_[static_cast<std::size_t>(k - k_lo_)] = std::move(m);
}

const SparseMatrix& ChainComplex::boundary(int k) const {
    if (k < k_lo_ || k > k_hi()) return zero_;
    return boundaries_[static_cast<std::size_t>(k - k_lo_)];
}

bool ChainComplex::is_complex() const {
    for (int k = k_lo_ + 1; k <= k_hi(); ++k)
        if (multiply(boundary(k - 1), boundary(k)).nnz() != 0) return false;
    return true;
}

GradedRanks homology(const ChainComplex& c, Ring ring) {
    if (!c.is_complex()) throw InvalidInput("boundary maps do not compose to zero");
    GradedRanks out;
    if (c.empty_range()) return out;
    const int lo = c.k_lo(), hi = c.k_hi();
    std::map<int, std::size_t> rank;
    std::map<int, std::vector<BigInt>> factors;
    for (int k = lo; k <= hi + 1; ++k) {
        const SparseMatrix& d = c.boundary(k);
        if (d.nnz() == 0) {
            rank[k] = 0;
            continue;
        }
        if (ring == Ring::Z2) {
            rank[k] = rank_mod2(d);
        } else {
            SmithResult s = smith_normal_form(d);
            rank[k] = s.rank;
            factors[k] = std::move(s.factors);
        }
    }
    for (int k = lo; k <= hi; ++k) {
        GroupRank g;
        g.free = c.dim(k) - rank[k] - rank[k + 1];
        if (ring == Ring::Z) g.torsion = prime_power_decomposition(factors[k + 1]);
        out.set(k, std::move(g));
    }
    return out;
}

ChainComplex quotient_complex(const ChainComplex& total, const SubcomplexSelector& sub) {
    if (total.empty_range()) return total;
    const int lo = total.k_lo(), hi = total.k_hi();
    auto in_sub = [&](int k, std::size_t i) {
        auto it = sub.find(k);
        if (it == sub.end()) return false;
        if (it->second.size() != total.dim(k)) throw InvalidInput("subcomplex mask size mismatch");
        return static_cast<bool>(it->second[i]);
    };
    for (const auto& [k, mask] : sub)
        if (mask.size() != total.dim(k) && !(mask.empty() && total.dim(k) == 0))
            throw InvalidInput("subcomplex mask size mismatch in degree " + std::to_string(k));

    std::vector<std::vector<std::size_t>> index(static_cast<std::size_t>(hi - lo + 1));
    std::vector<std::size_t> dims;
    for (int k = lo; k <= hi; ++k) {
        auto& idx = index[static_cast<std::size_t>(k - lo)];
        idx.assign(total.dim(k), static_cast<std::size_t>(-1));
        std::size_t n = 0;
        for (std::size_t i = 0; i < total.dim(k); ++i)
            if (!in_sub(k, i)) idx[i] = n++;
        dims.push_back(n);
    }
    ChainComplex q(lo, dims);
    for (int k = lo + 1; k <= hi; ++k) {
        const auto& col_idx = index[static_cast<std::size_t>(k - lo)];
        const auto& row_idx = index[static_cast<std::size_t>(k - 1 - lo)];
        SparseMatrix m(dims[static_cast<std::size_t>(k - 1 - lo)], dims[static_cast<std::size_t>(k - lo)]);
        for (const auto& e : total.boundary(k).entries()) {
            bool col_sub = col_idx[e.col] == static_cast<std::size_t>(-1);
            bool row_sub = row_idx[e.row] == static_cast<std::size_t>(-1);
            if (col_sub && !row_sub)
                throw InvalidInput("subcomplex is not closed under the boundary (degree " + std::to_string(k) + ")");
            if (!col_sub && !row_sub) m.add(row_idx[e.row], col_idx[e.col], e.value);
        }
        q.set_boundary(k, std::move(m));
    }
    return q;
}

GradedRanks relative_homology(const ChainComplex& total, const SubcomplexSelector& sub, Ring ring) {
    if (!total.is_complex()) throw InvalidInput("boundary maps do not compose to zero");
    return homology(quotient_complex(total, sub), ring);
}

}  // namespace gfh
