#pragma once

#include "gfh/homlin.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfh {

using Simplex = std::vector<int>;

/// Ordered simplicial complex: every simplex is stored with ascending vertices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    int vertex_count() const { return simplices_.empty() ? 0 : static_cast<int>(simplices_[0].size()); }
    const std::vector<Simplex>& simplices(int k) const;
    std::size_t count(int k) const { return simplices(k).size(); }
    std::vector<std::size_t> f_vector() const;
    std::vector<Simplex> facets() const;
    /// Position of a sorted simplex in simplices(|s|-1); throws when absent.
    std::size_t index(const Simplex& s) const;

    ChainComplex chain_complex() const;
    GradedRanks reduced_homology(Ring ring) const;

    SimplicialComplex suspension() const;
    SimplicialComplex barycentric_subdivision() const;
    /// Cones off the star of one simplex from a new vertex.
    SimplicialComplex stellar_subdivision(const Simplex& s) const;
    /// One-point union, glued at vertex 0 of each complex.
    static SimplicialComplex wedge(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    std::vector<std::vector<Simplex>> simplices_;
    static const std::vector<Simplex> empty_;
};

SimplicialComplex sphere_complex(int n);
SimplicialComplex torus_complex();
SimplicialComplex rp2_complex();
SimplicialComplex cp2_complex();

using Cochain = std::vector<std::uint8_t>;

/// Cocycle representatives of a basis of H^n(K; Z/2).
std::vector<Cochain> cohomology_basis_mod2(const SimplicialComplex& k, int n);
bool is_coboundary_mod2(const SimplicialComplex& k, int n, const Cochain& c);
/// Alexander-Whitney cup product of an n-cochain with itself.
Cochain cup_square(const SimplicialComplex& k, int n, const Cochain& x);
/// Reduction of the integral Bockstein of a mod-2 cocycle.
Cochain bockstein(const SimplicialComplex& k, int n, const Cochain& x);

/// Stands for the spectrum Sigma^{-shift} Sigma^infty K.
struct SpectrumSurrogate {
    SimplicialComplex cells;
    int shift = 0;
    std::string label;
    /// Sphere dimensions of a known stable splitting of K, when one exists.
    std::optional<std::vector<int>> splitting;
};

SpectrumSurrogate suspension_spectrum(SimplicialComplex k, std::string label,
                                      std::optional<std::vector<int>> splitting = {});
SpectrumSurrogate named_surrogate(const std::string& name);

/// H_k(x) = reduced H_{k + shift}(K).
GradedRanks spec_homology(const SpectrumSurrogate& x, Ring ring);
SpectrumSurrogate wedge(const SpectrumSurrogate& x, const SpectrumSurrogate& y);
/// Raises every homology degree by n.
SpectrumSurrogate shift(const SpectrumSurrogate& x, int n);

struct SphereWedge {
    std::vector<int> dims;
    int shift = 0;
};

class TableHorizonExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kStemHorizon = 8;

/// Stable stems pi^s_k(S^0) for k = 0..8.
const std::vector<std::string>& stable_stems();
SphereWedge as_sphere_wedge(const SpectrumSurrogate& x);
/// Summands of pi_k joined with " + "; "0" when every summand vanishes.
std::string pi_s_lookup(const SphereWedge& w, int k);

struct SuspensionVerdict {
    enum class Kind { Possible, Obstructed, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string reason;
    bool homology_level = false;  ///< decided by the degree test alone
    int degree = 0;               ///< spectrum degree of the witness class
    int operation = 0;            ///< i of the offending Sq^i, 0 for the degree test

    std::string summary() const;
};

SuspensionVerdict suspension_obstruction(const SpectrumSurrogate& x);

/// Parses "S1+S1+T2 @shift -1"; summands may be S<n>, T2, RP2, CP2.
SpectrumSurrogate parse_surrogate(const std::string& literal);

struct SpectrumCommand {
    enum class Kind { Homology, Pi, Obstruct };
    Kind kind = Kind::Homology;
    int k = 0;
};

struct SpectrumExpression {
    SpectrumSurrogate value;
    std::vector<SpectrumCommand> commands;
};

/// Expressions such as "desusp 1 CP2 obstruct" or "S1+S1+S2 pi 3".
SpectrumExpression parse_expression(const std::string& text);

}  // namespace gfh
