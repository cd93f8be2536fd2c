#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superschur/homology.hpp"
#include "superschur/superalgebra.hpp"

namespace superschur {

// One evaluated inequality (or identity). `informative` checks record a
// noteworthy condition without contributing to pass/fail aggregation.
struct BoundCheck {
    std::string id;         // stable slug, e.g. "general-bound"
    std::string statement;  // the inequality with concrete numbers substituted
    bool applicable = false;
    bool holds = true;  // meaningful only when applicable
    bool informative = false;
    std::string note;
};

struct InvariantReport {
    std::size_t m = 0, n = 0;            // algebra dims
    std::size_t r = 0, s = 0;            // graded dims of [L, L]
    std::size_t mult_even = 0, mult_odd = 0;
    long t = 0;
    std::optional<long> s_inv;  // defined for non-abelian nilpotent algebras
    std::vector<BoundCheck> checks;

    std::size_t mult_dim() const { return mult_even + mult_odd; }
    // True when every applicable non-informative check holds.
    bool all_applicable_hold() const;
};

// [(m+n)^2 + (n-m)] / 2: the multiplier dimension of the abelian A(m|n) and
// the universal upper bound for any (m|n) algebra.
long general_bound(std::size_t m, std::size_t n);
// (m+n-2)(m+n-1)/2 + n + 1: the offset defining s(L).
long s_offset(std::size_t m, std::size_t n);

// t(L) = general_bound - dim M(L); always >= 0, and 0 exactly for abelian L.
long t_invariant(const LieSuperalgebra& L, const MultiplierResult& mult);
// s(L) = s_offset - dim M(L); reported only for non-abelian nilpotent L.
std::optional<long> s_invariant(const LieSuperalgebra& L, const MultiplierResult& mult);

// dim M <= general_bound, with equality if and only if L is abelian.
BoundCheck check_general_bound(const LieSuperalgebra& L, const MultiplierResult& mult);
// For nilpotent L with dim [L,L] = r+s >= 1:
//   dim M <= [(m+n+r+s-2)(m+n-r-s-1)]/2 + n + 1.
// When r+s = 1 the equality case is reported, together with whether the
// algebra's invariants match the reference direct sum H(1,0) + A(m-3|n).
BoundCheck check_derived_bound(const LieSuperalgebra& L, const MultiplierResult& mult);
// For nilpotent maximal-class L (dim [L,L] = m+n-2) with m+n > 2 and n >= 1:
//   (n+m)(n+m-3)+4 <= 2t < (n+m)^2 + n - m          ("t-window")
//   (n+m)(n+m-5)+8 <= 2s < (n+m)(n+m-1) - 2m + 4    ("s-window")
//   dim M <= m + 2n - 2                             ("step-bound")
std::vector<BoundCheck> check_maximal_class_bounds(const LieSuperalgebra& L,
                                                   const MultiplierResult& mult);
// Nilpotent L with dim > 1 are expected to have M(L) != 0; a vanishing
// multiplier (it happens for the (1|1) algebra with [al,al] = z) is flagged,
// not failed.
BoundCheck check_nonvanishing(const LieSuperalgebra& L, const MultiplierResult& mult);

// Full report: t, s, and every check above plus the identity t - s = m+n-2.
InvariantReport invariant_report(const LieSuperalgebra& L, const MultiplierResult& mult);

std::string format_bound_check(const BoundCheck& c);
std::string format_invariant_report(const InvariantReport& rep);

}  // namespace superschur
