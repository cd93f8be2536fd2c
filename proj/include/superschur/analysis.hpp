#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superschur/homology.hpp"
#include "superschur/superalgebra.hpp"

namespace superschur {

// Tuple of isomorphism invariants, all stable under parity-preserving
// invertible changes of basis. Fingerprint equality is evidence for (never a
// proof of) isomorphism; inequality disproves it.
struct Fingerprint {
    std::size_t m = 0, n = 0;
    std::size_t r = 0, s = 0;  // graded dims of [L, L]
    std::optional<unsigned> nil_class;
    std::size_t center_even = 0, center_odd = 0;
    std::size_t mult_even = 0, mult_odd = 0;
    bool trivial_ls = false;
    bool operator==(const Fingerprint&) const = default;
};

// Multiplier dims via the dual-engine path (may throw EngineDisagreement).
Fingerprint fingerprint(const LieSuperalgebra& L);
std::string format_fingerprint(const Fingerprint& f);

struct ClassifyResult {
    long bucket = 0;  // computed s(L)
    Fingerprint fp;
    // Catalog entries whose published bucket equals the computed one, and the
    // subset of those with an identical fingerprint.
    std::vector<std::string> bucket_entries;
    std::vector<std::string> fingerprint_matches;
    // Divergences: fingerprint-identical entries published under a different
    // bucket, etc.
    std::vector<std::string> notes;
};

// Places a nilpotent non-abelian maximal-class algebra with 3 <= m+n <= 5 in
// the bucket determined by its computed s(L). Throws std::invalid_argument
// naming the violated precondition otherwise.
ClassifyResult classify_maximal_class(const LieSuperalgebra& L);

struct PredicateResult {
    bool computed_verdict = false;
    std::optional<bool> claimed_verdict;  // when a claimed dim M was supplied
    std::size_t derived_total = 0, mult_total = 0, target = 0;  // target = m+n-2
    // Candidate algebras associated with the predicate when it holds.
    std::vector<std::string> candidate_set;
};

// True iff L is nilpotent with dim [L,L] = dim M(L) = m+n-2 and m+n <= 5.
// When a claimed dim M is supplied, the verdict it would give is reported
// alongside the computed one.
PredicateResult capability_candidate_predicate(const LieSuperalgebra& L,
                                               std::optional<std::size_t> claimed_dim = {});

struct CandidateOutcome {
    RatVec vec;
    Parity parity = Parity::even;
    std::string label;  // formatted vector
    bool injective = false;
    std::size_t kernel_dim = 0;
    std::size_t source_dim = 0, target_dim = 0;  // dim M(L), dim M(L/<x>)
    std::size_t meet_derived_dim = 0;            // dim(<x> `intersect` [L,L])
    // Injectivity forces target - source == meet_derived; checked per
    // candidate where injective.
    bool identity_ok = true;
};

struct CapabilityReport {
    std::size_t center_even = 0, center_odd = 0;
    std::vector<CandidateOutcome> candidates;
    // One of "not capable", "no obstruction found", "inconclusive".
    std::string conclusion;
    bool exhaustive = false;
    std::string note;
};

// Tests central lines <x>: an injective induced map M(L) -> M(L/<x>) puts x
// in the epicenter and settles "not capable". Default candidates are the
// basis directions of the center per parity; extras must be homogeneous
// central vectors (std::invalid_argument otherwise, naming the offense).
CapabilityReport capability_report(const LieSuperalgebra& L,
                                   const std::vector<RatVec>& extra_candidates = {});

std::string format_capability_report(const LieSuperalgebra& L, const CapabilityReport& rep);

}  // namespace superschur
