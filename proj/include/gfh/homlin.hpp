#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfh {

using BigInt = boost::multiprecision::cpp_int;

enum class Ring { Z, Z2 };

Ring parse_ring(const std::string& s);
std::string ring_name(Ring r);

/// Error raised when an input violates a module precondition.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
};

/// Integer matrix in coordinate form. Entries are kept unique and nonzero.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    /// Accumulates value into (row, col); zero results are dropped.
    void add(std::size_t row, std::size_t col, std::int64_t value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    /// Entries sorted by (col, row).
    std::vector<MatrixEntry> entries() const;

    std::int64_t at(std::size_t row, std::size_t col) const;

    static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);
    SparseMatrix permuted(const std::vector<std::size_t>& row_perm,
                          const std::vector<std::size_t>& col_perm) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> entries_;
};

/// Product a * b with exact 128-bit accumulation; throws on overflow.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct SmithResult {
    std::vector<BigInt> factors;  ///< d_1 | d_2 | ... | d_r, all positive
    std::size_t rank = 0;
};

SmithResult smith_normal_form(const SparseMatrix& m);

/// Rank over the field with two elements.
std::size_t rank_mod2(const SparseMatrix& m);

struct GroupRank {
    std::size_t free = 0;
    std::vector<BigInt> torsion;  ///< sorted prime powers

    bool zero() const { return free == 0 && torsion.empty(); }
    bool operator==(const GroupRank&) const = default;
};

/// Degree-indexed homology. Zero groups are never stored.
class GradedRanks {
public:
    void set(int degree, GroupRank g);
    void set_free(int degree, std::size_t rank) { set(degree, GroupRank{rank, {}}); }
    GroupRank get(int degree) const;
    bool nonzero(int degree) const { return groups_.count(degree) != 0; }
    bool empty() const { return groups_.empty(); }
    const std::map<int, GroupRank>& groups() const { return groups_; }

    GradedRanks shifted(int by) const;
    GradedRanks direct_sum(const GradedRanks& other) const;
    std::vector<int> support() const;
    /// Alternating sum of free ranks.
    long long euler_characteristic() const;
    std::string to_string() const;

    bool operator==(const GradedRanks&) const = default;

private:
    std::map<int, GroupRank> groups_;
};

/// Splits every integer > 1 into its prime-power components, sorted.
std::vector<BigInt> prime_power_decomposition(const std::vector<BigInt>& factors);

/// Chain complex C_lo <- ... <- C_hi with boundary[k] : C_k -> C_{k-1}.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(int k_lo, std::vector<std::size_t> dims);

    int k_lo() const { return k_lo_; }
    int k_hi() const { return k_lo_ + static_cast<int>(dims_.size()) - 1; }
    bool empty_range() const { return dims_.empty(); }
    std::size_t dim(int k) const;

    /// Sets the boundary of degree k; its shape must be dim(k-1) x dim(k).
    void set_boundary(int k, SparseMatrix m);
    const SparseMatrix& boundary(int k) const;

    /// Checks that every composite of consecutive boundaries vanishes.
    bool is_complex() const;

private:
    int k_lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<SparseMatrix> boundaries_;
    SparseMatrix zero_;
};

GradedRanks homology(const ChainComplex& c, Ring ring);

/// Per-degree membership mask selecting a subcomplex.
using SubcomplexSelector = std::map<int, std::vector<bool>>;

ChainComplex quotient_complex(const ChainComplex& total, const SubcomplexSelector& sub);
GradedRanks relative_homology(const ChainComplex& total, const SubcomplexSelector& sub, Ring ring);

}  // namespace gfh
