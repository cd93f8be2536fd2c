#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superschur/invariants.hpp"

namespace superschur {

struct VerifyRow {
    std::string key;
    std::size_t m = 0, n = 0;
    std::optional<std::size_t> claimed_dim;
    std::optional<std::pair<std::size_t, std::size_t>> claimed_type;
    std::optional<long> s_claimed;
    std::size_t computed_even = 0, computed_odd = 0;
    std::optional<long> s_computed;
    std::string status;  // MATCH / MISMATCH / UNTABULATED
    bool valid = true;   // axiom validation of the built algebra
    bool claims_consistent = true;  // claimed bucket == s_offset - claimed dim
    std::string note;

    std::size_t computed_dim() const { return computed_even + computed_odd; }
};

// Claimed-vs-computed reproduction report over the whole catalog. Both
// multiplier engines run on every entry and must agree (EngineDisagreement
// propagates otherwise); every bound check runs on computed dims; the two
// anchor entries (L_{1,2}^{(3)} and (D^{15}+A_{1,1})^4, the fully worked
// computations in the source) must MATCH. Mismatches elsewhere are reported,
// never suppressed, and do not fail the run.
struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::vector<std::pair<std::string, InvariantReport>> invariants;  // per entry
    bool all_valid = true;
    bool bounds_ok = true;
    bool anchors_ok = true;
    std::vector<std::string> notes;

    std::string text() const;
    std::string csv() const;  // deterministic; no timestamps
    int exit_code() const { return all_valid && bounds_ok && anchors_ok ? 0 : 1; }
};

VerifyReport build_verify_report();

}  // namespace superschur
