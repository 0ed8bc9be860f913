#include "gfh/homlin.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace gfh {
namespace {

using Column = std::vector<std::pair<std::size_t, BigInt>>;  // sorted by row

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

// Eliminates unit pivots while the matrix is sparse. Pivots are taken in
// (column, row) order among entries of magnitude one. Returns the number of
// pivots removed; the surviving columns are left in `cols`.
std::size_t eliminate_unit_pivots(std::vector<Column>& cols, std::size_t nrows) {
    std::vector<std::set<std::size_t>> row_cols(nrows);
    std::set<std::pair<std::size_t, std::size_t>> units;  // (col, row)
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) {
            row_cols[r].insert(c);
            if (is_unit(v)) units.insert({c, r});
        }

    auto detach = [&](std::size_t c) {
        for (const auto& [r, v] : cols[c]) {
            row_cols[r].erase(c);
            if (is_unit(v)) units.erase({c, r});
        }
    };
    auto attach = [&](std::size_t c) {
        for (const auto& [r, v] : cols[c]) {
            row_cols[r].insert(c);
            if (is_unit(v)) units.insert({c, r});
        }
    };

    std::size_t pivots = 0;
    Column merged;
    while (!units.empty()) {
        auto [pc, pr] = *units.begin();
        const Column& pivot_col = cols[pc];
        BigInt pv;
        for (const auto& [r, v] : pivot_col)
            if (r == pr) pv = v;

        std::vector<std::size_t> others(row_cols[pr].begin(), row_cols[pr].end());
        for (std::size_t c : others) {
            if (c == pc) continue;
            Column& target = cols[c];
            BigInt factor;
            for (const auto& [r, v] : target)
                if (r == pr) factor = v * pv;  // pv is +-1, so v / pv == v * pv
            detach(c);
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < target.size() || j < pivot_col.size()) {
                if (j == pivot_col.size() || (i < target.size() && target[i].first < pivot_col[j].first)) {
                    merged.push_back(std::move(target[i++]));
                } else if (i == target.size() || pivot_col[j].first < target[i].first) {
                    merged.emplace_back(pivot_col[j].first, -factor * pivot_col[j].second);
                    ++j;
                } else {
                    BigInt v = target[i].second - factor * pivot_col[j].second;
                    if (v != 0) merged.emplace_back(target[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            target.swap(merged);
            attach(c);
        }
        detach(pc);
        cols[pc].clear();
        ++pivots;
    }
    return pivots;
}

// Dense reduction with the smallest-magnitude, then lexicographic, pivot rule.
std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> out;
    const std::size_t n = a.size();
    const std::size_t m = n ? a[0].size() : 0;

    auto find_min = [&](std::size_t t, std::size_t& bi, std::size_t& bj) {
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j) {
                if (a[i][j] == 0) continue;
                BigInt v = babs(a[i][j]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        return found;
    };
    auto swap_rows = [&](std::size_t i, std::size_t k) { std::swap(a[i], a[k]); };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        for (auto& row : a) std::swap(row[j], row[k]);
    };

    for (std::size_t t = 0; t < std::min(n, m); ++t) {
        std::size_t bi = 0, bj = 0;
        if (!find_min(t, bi, bj)) break;
        swap_rows(t, bi);
        swap_cols(t, bj);
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < m; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                // bring the smallest remainder in row/column t to the pivot spot
                std::size_t ri = t, cj = t;
                BigInt best = babs(a[t][t]);
                for (std::size_t i = t + 1; i < n; ++i)
                    if (a[i][t] != 0 && babs(a[i][t]) < best) best = babs(a[i][t]), ri = i, cj = t;
                for (std::size_t j = t + 1; j < m; ++j)
                    if (a[t][j] != 0 && babs(a[t][j]) < best) best = babs(a[t][j]), ri = t, cj = j;
                swap_rows(t, ri);
                swap_cols(t, cj);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < m; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < m; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        out.push_back(babs(a[t][t]));
    }
    return out;
}

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& m) {
    std::vector<Column> cols(m.cols());
    for (const auto& e : m.entries()) cols[e.col].emplace_back(e.row, BigInt(e.value));

    SmithResult res;
    std::size_t units = eliminate_unit_pivots(cols, m.rows());
    res.factors.assign(units, BigInt(1));

    std::vector<std::size_t> live_cols;
    std::vector<std::size_t> row_index(m.rows(), static_cast<std::size_t>(-1));
    std::size_t nrows = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].empty()) continue;
        live_cols.push_back(c);
        for (const auto& [r, v] : cols[c])
            if (row_index[r] == static_cast<std::size_t>(-1)) row_index[r] = 0;
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (row_index[r] != static_cast<std::size_t>(-1)) row_index[r] = nrows++;

    if (!live_cols.empty()) {
        std::vector<std::vector<BigInt>> dense(nrows, std::vector<BigInt>(live_cols.size()));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& [r, v] : cols[live_cols[j]]) dense[row_index[r]][j] = v;
        for (auto& d : dense_smith(std::move(dense))) res.factors.push_back(std::move(d));
    }
    std::stable_sort(res.factors.begin(), res.factors.end());
    res.rank = res.factors.size();
    return res;
}

}  // namespace gfh
