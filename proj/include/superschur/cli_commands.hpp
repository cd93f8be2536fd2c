#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superschur/rational.hpp"

namespace superschur::cli {

// Exit-code contract shared by every verb.
constexpr int kOk = 0;
constexpr int kAxiomFailure = 1;        // graded-axiom violation in the input
constexpr int kParseFailure = 2;        // unreadable/invalid input, bad key or params
constexpr int kEngineDisagreement = 3;  // internal: the two multiplier engines differ

int cmd_validate(const std::string& path);
int cmd_info(const std::string& path);
int cmd_multiplier(const std::string& path, bool representatives);
int cmd_invariants(const std::string& path);
// Candidate expressions: terms over the basis names, e.g. "a", "a - b",
// "1/2*a + 2*b"; every candidate must be a homogeneous central vector.
int cmd_capability(const std::string& path, const std::vector<std::string>& candidate_exprs);
int cmd_classify(const std::string& path);
int cmd_catalog_list();
// Unset params use the entry defaults; out_path empty writes to stdout. A
// scan over p values can be requested for the p-families.
int cmd_catalog_emit(const std::string& key, const std::optional<std::string>& p,
                     std::optional<std::size_t> m, std::optional<std::size_t> n,
                     const std::string& out_path);
int cmd_catalog_scan(const std::string& key, const std::vector<std::string>& p_values);
int cmd_verify_paper(const std::string& out_base);

}  // namespace superschur::cli
