#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superschur/matrix.hpp"

namespace superschur {

enum class Parity : int { even = 0, odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

// Sign picked up when two adjacent wedge/bracket factors of the given
// parities are swapped: -1 unless both factors are odd.
inline int swap_sign(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? 1 : -1;
}

class LieSuperalgebra;

// A parity-graded subspace of the coordinate space Q^(m+n): one RREF row
// matrix supported on the even block [0, m) and one on the odd block
// [m, m+n), both stored at full ambient width.
class GradedSubspace {
  public:
    GradedSubspace() = default;
    static GradedSubspace zero(std::size_t m, std::size_t n);
    static GradedSubspace full(std::size_t m, std::size_t n);
    // Spans the even projections and odd projections of the generators
    // separately (the graded span).
    static GradedSubspace span(const std::vector<RatVec>& generators, std::size_t m,
                               std::size_t n);
    static GradedSubspace from_parts(Mat even_rows, Mat odd_rows, std::size_t m, std::size_t n);

    std::size_t even_dim() const { return even_.rows(); }
    std::size_t odd_dim() const { return odd_.rows(); }
    std::size_t total_dim() const { return even_.rows() + odd_.rows(); }
    std::size_t ambient_m() const { return m_; }
    std::size_t ambient_n() const { return n_; }
    std::size_t ambient() const { return m_ + n_; }
    const Mat& even_rows() const { return even_; }
    const Mat& odd_rows() const { return odd_; }

    bool is_zero() const { return total_dim() == 0; }
    bool contains(const RatVec& v) const;
    bool contains(const GradedSubspace& other) const;
    bool operator==(const GradedSubspace& other) const;
    GradedSubspace intersect(const GradedSubspace& other) const;

    // v minus its projection onto the subspace along the non-pivot
    // coordinates (RREF reduction in both blocks).
    RatVec reduce(RatVec v) const;

  private:
    Mat even_, odd_;  // RREF rows, full width
    std::size_t m_ = 0, n_ = 0;
};

struct ValidationIssue {
    enum class Axiom { homogeneity, antisymmetry, even_square, jacobi };
    Axiom axiom;
    std::vector<std::size_t> indices;  // offending basis indices
    RatVec defect;                     // nonzero witness
};

struct ValidationReport {
    bool homogeneity_ok = true;
    bool antisymmetry_ok = true;
    bool even_square_ok = true;
    bool jacobi_ok = true;
    std::vector<ValidationIssue> issues;
    bool ok() const { return homogeneity_ok && antisymmetry_ok && even_square_ok && jacobi_ok; }
};

// One bracket row of an input table: [left, right] = sum of coeff * basis.
struct BracketDef {
    std::string left, right;
    std::vector<std::pair<std::string, Rat>> terms;
};

struct QuotientResult;

// Finite-dimensional Lie superalgebra over Q given by structure constants on
// a homogeneous basis, even block first. Brackets are stored only for index
// pairs i <= j, with i == j admitted only when e_i is odd; all other values
// follow from graded antisymmetry.
class LieSuperalgebra {
  public:
    LieSuperalgebra(std::string name, std::vector<std::string> even_names,
                    std::vector<std::string> odd_names,
                    std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets);

    static LieSuperalgebra from_table(std::string name, std::vector<std::string> even_names,
                                      std::vector<std::string> odd_names,
                                      const std::vector<BracketDef>& table);

    const std::string& name() const { return name_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return names_.size(); }
    Parity parity(std::size_t i) const { return i < m_ ? Parity::even : Parity::odd; }
    const std::string& basis_name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& basis_names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& basis_name) const;
    const std::map<std::pair<std::size_t, std::size_t>, RatVec>& stored_brackets() const {
        return brackets_;
    }

    // [e_i, e_j] for arbitrary index order (graded antisymmetry applied).
    RatVec bracket_basis(std::size_t i, std::size_t j) const;
    // Bilinear extension to coordinate vectors.
    RatVec bracket(const RatVec& x, const RatVec& y) const;

    ValidationReport validate() const;

    GradedSubspace derived_subalgebra() const;
    // L = L^1 >= L^2 >= ... until two consecutive terms agree or the term is
    // zero; hard cutoff after m+n+1 terms.
    std::vector<GradedSubspace> lower_central_series() const;
    std::optional<unsigned> nilpotency_class() const;  // nullopt: not nilpotent
    bool is_nilpotent() const { return nilpotency_class().has_value(); }
    GradedSubspace center() const;

    bool is_abelian() const { return brackets_.empty(); }
    // dim [L,L] == m+n-2.
    bool is_maximal_class() const;
    // All products of odd basis pairs vanish.
    bool is_trivial_ls() const;

    QuotientResult quotient(const GradedSubspace& ideal) const;
    LieSuperalgebra change_basis(const Mat& s_even, const Mat& s_odd) const;

  private:
    std::string name_;
    std::vector<std::string> names_;
    std::size_t m_ = 0, n_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets_;
};

struct QuotientResult {
    LieSuperalgebra algebra;
    // Original indices surviving into the quotient basis, ascending (so even
    // block first automatically).
    std::vector<std::size_t> complement;
    GradedSubspace ideal;

    // Coordinates of the class of v in the quotient basis.
    RatVec project(const RatVec& v) const;
};

// Ideal-wise sum with all cross brackets zero. Basis names from b that
// collide with names from a are primed until unique.
LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b,
                           const std::string& name);

// Block parity of a vector's support: nullopt for the zero vector and for
// mixed support.
std::optional<Parity> homogeneous_parity(const RatVec& v, std::size_t m);

// Human-readable linear combination over the algebra's basis names.
std::string format_vector(const LieSuperalgebra& L, const RatVec& v);
std::string describe_issue(const LieSuperalgebra& L, const ValidationIssue& issue);

}  // namespace superschur
