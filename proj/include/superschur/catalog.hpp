#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superschur/rational.hpp"
#include "superschur/superalgebra.hpp"

namespace superschur {

// Parameters for the parameterized entries: p for the two bracket families
// ("L_{2,2}^{(11)}", "L_{2,2}^{(12)}"), (m, n) for "A" and "H(1,0)+A" (the
// dims of the resulting algebra; "H(1,0)+A" needs m >= 3). Unset dims fall
// back to per-entry defaults: (2|2) for "A", (4|1) for "H(1,0)+A".
struct CatalogParams {
    Rat p = Rat(1);
    std::optional<std::size_t> m, n;
};

struct CatalogEntry {
    std::string key;
    std::string description;  // family / dims summary, display only
    bool takes_p = false;
    bool takes_mn = false;
    // Published claims attached verbatim; absent where the source carries
    // none. claimed_type is (even, odd).
    std::optional<std::size_t> claimed_dim;
    std::optional<std::pair<std::size_t, std::size_t>> claimed_type;
    std::optional<long> claimed_s_bucket;
    std::string source;  // which published table(s) the claims come from
};

// Fixed-order list of all 19 entries.
const std::vector<CatalogEntry>& catalog_list();
// nullptr when the key is unknown.
const CatalogEntry* catalog_find(const std::string& key);
// Throws std::invalid_argument on unknown key or invalid params (p <= 0,
// m < 3 for "H(1,0)+A", m+n = 0 for "A").
LieSuperalgebra catalog_build(const std::string& key, const CatalogParams& params = {});

struct ScanRow {
    Rat p;
    std::size_t even = 0, odd = 0;
    bool exceptional = false;  // differs from the most frequent (generic) dims
};
// Multiplier dims of a p-family across the given values, dual-engine checked;
// rows differing from the generic (modal) dims are flagged. Throws
// std::invalid_argument unless the key is a p-entry.
std::vector<ScanRow> parameter_scan(const std::string& key, const std::vector<Rat>& values);

}  // namespace superschur
