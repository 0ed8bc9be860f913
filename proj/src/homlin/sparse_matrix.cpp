#include "gfh/homlin.hpp"

#include <algorithm>
#include <limits>

namespace gfh {

Ring parse_ring(const std::string& s) {
    if (s == "z" || s == "Z") return Ring::Z;
    if (s == "z2" || s == "Z2" || s == "Z/2") return Ring::Z2;
    throw InvalidInput("unknown ring '" + s + "' (expected z or z2)");
}

std::string ring_name(Ring r) { return r == Ring::Z ? "Z" : "Z/2"; }

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
    if (row >= rows_ || col >= cols_) throw InvalidInput("matrix entry out of range");
    if (value == 0) return;
    auto key = std::make_pair(col, row);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, value);
        return;
    }
    std::int64_t sum;
    if (__builtin_add_overflow(it->second, value, &sum)) throw InvalidInput("matrix entry overflow");
    if (sum == 0)
        entries_.erase(it);
    else
        it->second = sum;
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
    std::vector<MatrixEntry> out;
    out.reserve(entries_.size());
    for (const auto& [key, v] : entries_) out.push_back({key.second, key.first, v});
    return out;
}

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const {
    auto it = entries_.find({col, row});
    return it == entries_.end() ? 0 : it->second;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows[0].size() : 0;
    SparseMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw InvalidInput("ragged dense matrix");
        for (std::size_t j = 0; j < nc; ++j) m.add(i, j, rows[i][j]);
    }
    return m;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) const {
    if (row_perm.size() != rows_ || col_perm.size() != cols_) throw InvalidInput("permutation size mismatch");
    SparseMatrix m(rows_, cols_);
    for (const auto& [key, v] : entries_) m.add(row_perm[key.second], col_perm[key.first], v);
    return m;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix shape mismatch in product");
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> a_cols(a.cols());
    for (const auto& e : a.entries()) a_cols[e.col].push_back({e.row, e.value});
    std::map<std::pair<std::size_t, std::size_t>, __int128> acc;
    for (const auto& e : b.entries())
        for (const auto& [r, v] : a_cols[e.row]) acc[{r, e.col}] += static_cast<__int128>(v) * e.value;
    SparseMatrix out(a.rows(), b.cols());
    for (const auto& [key, v] : acc) {
        if (v == 0) continue;
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw InvalidInput("matrix product overflow");
        out.add(key.first, key.second, static_cast<std::int64_t>(v));
    }
    return out;
}

std::size_t rank_mod2(const SparseMatrix& m) {
    std::vector<std::vector<std::size_t>> cols(m.cols());
    for (const auto& e : m.entries())
        if (e.value & 1) cols[e.col].push_back(e.row);
    std::vector<long long> pivot_owner(m.rows(), -1);
    std::size_t rank = 0;
    std::vector<std::size_t> scratch;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            long long owner = pivot_owner[col.back()];
            if (owner < 0) {
                pivot_owner[col.back()] = static_cast<long long>(j);
                ++rank;
                break;
            }
            const auto& other = cols[static_cast<std::size_t>(owner)];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
    }
    return rank;
}

}  // namespace gfh
