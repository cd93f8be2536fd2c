#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superschur/superalgebra.hpp"

namespace superschur {

// Degree-2 monomial e_i ^ e_j, i <= j, with i == j only for odd e_i.
struct Wedge2 {
    std::size_t i, j;
    Parity parity;
    bool operator==(const Wedge2&) const = default;
};

// Degree-3 monomial e_i ^ e_j ^ e_k, i <= j <= k, repeats only at odd indices.
struct Wedge3 {
    std::size_t i, j, k;
    Parity parity;
    bool operator==(const Wedge3&) const = default;
};

std::vector<Wedge2> chain2_basis(const LieSuperalgebra& L);
std::vector<Wedge3> chain3_basis(const LieSuperalgebra& L);

struct ChainComplexData {
    std::vector<Wedge2> basis2;
    std::vector<Wedge3> basis3;
    // d2: e_i^e_j -> [e_i,e_j], shape dim(L) x |basis2|.
    Mat d2;
    // d3: x^y^z -> [x,y]^z - (-1)^{|y||z|} [x,z]^y + (-1)^{|x|(|y|+|z|)} [y,z]^x,
    // shape |basis2| x |basis3|.
    Mat d3;
    // Positions of even/odd monomials inside basis2 and basis3 (both maps are
    // parity-preserving, so everything downstream splits blockwise).
    std::vector<std::size_t> block2[2], block3[2];
};

// Builds both differentials; throws std::logic_error if d2 * d3 != 0.
ChainComplexData build_chain_complex(const LieSuperalgebra& L);

// Sparse vector over a degree-2 monomial basis.
struct ChainVector {
    std::vector<std::pair<std::size_t, Rat>> terms;
};

struct MultiplierResult {
    std::size_t even_dim = 0, odd_dim = 0;
    std::vector<Wedge2> basis2;
    // Cycle representatives of a basis of ker d2 / im d3, even classes first.
    std::vector<std::pair<Parity, ChainVector>> representatives;
    std::size_t dim() const { return even_dim + odd_dim; }
};

// Chain engine: ker d2 / im d3 with representatives.
MultiplierResult schur_multiplier(const LieSuperalgebra& L);

// Independent engine: parity-homogeneous super-antisymmetric 2-cocycles
// modulo 2-coboundaries, built directly from the structure constants (no
// shared wedge enumeration). Returns (even, odd) dimensions.
std::pair<std::size_t, std::size_t> cochain_multiplier_dims(const LieSuperalgebra& L);

struct EngineDisagreement : std::logic_error {
    using std::logic_error::logic_error;
};

// Chain result, cross-checked against the cochain engine; throws
// EngineDisagreement if the graded dimensions differ.
MultiplierResult multiplier_checked(const LieSuperalgebra& L);

struct InducedMapResult {
    MultiplierResult source, target;  // multipliers of L and of L/N
    // Row r: coordinates of the image of the r-th representative of the
    // source in the representative basis of the target.
    Mat matrix;
    bool injective = false;
    std::size_t kernel_dim = 0, cokernel_dim = 0;
    std::size_t meet_derived_dim = 0;  // dim(N `intersect` [L,L])
    LieSuperalgebra quotient_algebra;
};

// The map on multipliers induced by the projection L -> L/N; N must be a
// central graded ideal (throws std::invalid_argument otherwise).
InducedMapResult induced_multiplier_map(const LieSuperalgebra& L, const GradedSubspace& n);

std::string format_wedge(const LieSuperalgebra& L, const Wedge2& w);
std::string format_chain_vector(const LieSuperalgebra& L, const std::vector<Wedge2>& basis2,
                                const ChainVector& v);

}  // namespace superschur
