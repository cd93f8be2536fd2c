#include "superschur/catalog.hpp"

#include <map>
#include <stdexcept>

#include "superschur/homology.hpp"

namespace superschur {

namespace {

CatalogEntry entry(std::string key, std::string description,
                   std::optional<std::size_t> dim = {},
                   std::optional<std::pair<std::size_t, std::size_t>> type = {},
                   std::optional<long> bucket = {}, std::string source = {}) {
    CatalogEntry e;
    e.key = std::move(key);
    e.description = std::move(description);
    e.claimed_dim = dim;
    e.claimed_type = type;
    e.claimed_s_bucket = bucket;
    e.source = std::move(source);
    return e;
}

std::vector<CatalogEntry> make_list() {
    using P = std::pair<std::size_t, std::size_t>;
    std::vector<CatalogEntry> v;
    v.push_back(entry("L_{1,2}^{(1)}", "(1|2), non-trivial", 2, P{2, 0}, 2, "tables 1, 7, 8"));
    v.push_back(entry("L_{1,2}^{(2)}", "(1|2), non-trivial", 2, P{2, 0}, 2, "tables 1, 7, 8"));
    v.push_back(entry("L_{1,2}^{(3)}", "(1|2), trivial", 2, P{1, 1}, 2, "tables 1, 7, 8"));
    v.push_back(entry("L_{1,3}^{(5)}", "(1|3), trivial", 3, P{2, 1}, 4, "tables 2, 7, 8"));
    v.push_back(entry("L_{2,2}^{(9)}", "(2|2), non-trivial", 2, P{1, 1}, 4, "tables 3, 7, 8"));
    v.push_back(entry("L_{2,2}^{(10)}", "(2|2), non-trivial", 1, P{1, 0}, 5, "tables 3, 7, 8"));
    {
        CatalogEntry e =
            entry("L_{2,2}^{(11)}", "(2|2), non-trivial, parameter p > 0", 1, P{1, 0}, 5,
                  "tables 3, 7, 8");
        e.takes_p = true;
        v.push_back(std::move(e));
    }
    {
        CatalogEntry e =
            entry("L_{2,2}^{(12)}", "(2|2), non-trivial, parameter p > 0", 1, P{1, 0}, 5,
                  "tables 3, 7, 8");
        e.takes_p = true;
        v.push_back(std::move(e));
    }
    v.push_back(entry("E^{22}", "(1|4), trivial", 6, P{5, 1}, 5, "tables 4, 7, 8"));
    v.push_back(entry("3A_{1,1}+2A", "(3|2), non-trivial", 3, P{1, 2}, 6, "tables 5, 7, 8"));
    v.push_back(
        entry("(D^{15}+A_{1,1})^1", "(2|3), non-trivial", 1, P{0, 1}, 9, "tables 6, 7, 8"));
    v.push_back(
        entry("(D^{15}+A_{1,1})^2", "(2|3), non-trivial", 2, P{1, 1}, 8, "tables 6, 7, 8"));
    v.push_back(
        entry("(D^{15}+A_{1,1})^3", "(2|3), non-trivial", 3, P{2, 1}, 7, "tables 6, 7, 8"));
    v.push_back(
        entry("(D^{15}+A_{1,1})^4", "(2|3), non-trivial", 2, P{1, 1}, 8, "tables 6, 7, 8"));
    // Only a total dimension is claimed for this one (in prose, inside the
    // capability argument); it carries no type or bucket claim.
    v.push_back(entry("L_{3,1}^{(1)}", "(3|1), not nilpotent", 2, {}, {}, "prose claim"));
    v.push_back(entry("H(1,0)", "(3|0) Heisenberg"));
    v.push_back(entry("H(0,1)", "(1|1), [al,al] = z"));
    {
        CatalogEntry e = entry("A", "abelian A(m|n)");
        e.takes_mn = true;
        v.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("H(1,0)+A", "H(1,0) + A(m-3|n), dims of the sum");
        e.takes_mn = true;
        v.push_back(std::move(e));
    }
    return v;
}

LieSuperalgebra build_abelian(std::size_t m, std::size_t n, const std::string& name) {
    std::vector<std::string> even, odd;
    for (std::size_t i = 0; i < m; ++i) even.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) odd.push_back("y" + std::to_string(i + 1));
    return LieSuperalgebra::from_table(name, even, odd, {});
}

}  // namespace

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> list = make_list();
    return list;
}

const CatalogEntry* catalog_find(const std::string& key) {
    for (const auto& e : catalog_list())
        if (e.key == key) return &e;
    return nullptr;
}

LieSuperalgebra catalog_build(const std::string& key, const CatalogParams& params) {
    const CatalogEntry* e = catalog_find(key);
    if (!e) throw std::invalid_argument("unknown catalog key: " + key);
    if (e->takes_p && params.p <= 0)
        throw std::invalid_argument("parameter p must satisfy p > 0 for " + key);

    const Rat& p = params.p;
    using T = std::vector<BracketDef>;
    if (key == "L_{1,2}^{(1)}")
        return LieSuperalgebra::from_table(key, {"a"}, {"al", "be"},
                                           T{{"al", "al", {{"a", Rat(1)}}},
                                             {"be", "be", {{"a", Rat(1)}}}});
    if (key == "L_{1,2}^{(2)}")
        return LieSuperalgebra::from_table(key, {"a"}, {"al", "be"},
                                           T{{"al", "al", {{"a", Rat(1)}}},
                                             {"be", "be", {{"a", Rat(-1)}}}});
    if (key == "L_{1,2}^{(3)}")
        return LieSuperalgebra::from_table(key, {"a"}, {"al", "be"},
                                           T{{"a", "be", {{"al", Rat(1)}}}});
    if (key == "L_{1,3}^{(5)}")
        return LieSuperalgebra::from_table(key, {"a"}, {"al", "be", "ga"},
                                           T{{"a", "be", {{"al", Rat(1)}}},
                                             {"a", "ga", {{"be", Rat(1)}}}});
    if (key == "L_{2,2}^{(9)}")
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be"},
                                           T{{"al", "al", {{"a", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}}});
    if (key == "L_{2,2}^{(10)}")
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be"},
                                           T{{"al", "al", {{"a", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}},
                                             {"al", "be", {{"a", Rat(1)}}}});
    if (key == "L_{2,2}^{(11)}")
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be"},
                                           T{{"al", "al", {{"a", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}},
                                             {"al", "be", {{"a", p}, {"b", p}}}});
    if (key == "L_{2,2}^{(12)}")
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be"},
                                           T{{"al", "al", {{"a", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}},
                                             {"al", "be", {{"a", p}, {"b", -p}}}});
    if (key == "E^{22}")
        return LieSuperalgebra::from_table(key, {"a"}, {"al", "be", "ga", "de"},
                                           T{{"a", "al", {{"be", Rat(1)}}},
                                             {"a", "be", {{"ga", Rat(1)}}},
                                             {"a", "ga", {{"de", Rat(1)}}}});
    if (key == "3A_{1,1}+2A")
        return LieSuperalgebra::from_table(key, {"a", "b", "c"}, {"al", "be"},
                                           T{{"al", "al", {{"a", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}},
                                             {"al", "be", {{"c", Rat(1)}}}});
    if (key == "(D^{15}+A_{1,1})^1")
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be", "ga"},
                                           T{{"a", "be", {{"al", Rat(1)}}},
                                             {"a", "ga", {{"be", Rat(1)}}},
                                             {"ga", "ga", {{"b", Rat(1)}}}});
    if (key == "(D^{15}+A_{1,1})^2")
        // The source prints a second "[a,ga]" value (-b) for this entry; the
        // unique parity-legal reading is [al,ga] = -b, used here.
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be", "ga"},
                                           T{{"a", "be", {{"al", Rat(1)}}},
                                             {"a", "ga", {{"be", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}},
                                             {"al", "ga", {{"b", Rat(-1)}}}});
    if (key == "(D^{15}+A_{1,1})^3")
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be", "ga"},
                                           T{{"a", "be", {{"al", Rat(1)}}},
                                             {"a", "ga", {{"be", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}},
                                             {"ga", "ga", {{"b", Rat(1)}}},
                                             {"al", "ga", {{"b", Rat(-1)}}}});
    if (key == "(D^{15}+A_{1,1})^4")
        return LieSuperalgebra::from_table(key, {"a", "b"}, {"al", "be", "ga"},
                                           T{{"a", "be", {{"al", Rat(1)}}},
                                             {"a", "ga", {{"be", Rat(1)}}},
                                             {"be", "be", {{"b", Rat(1)}}},
                                             {"ga", "ga", {{"b", Rat(-1)}}},
                                             {"al", "ga", {{"b", Rat(-1)}}}});
    if (key == "L_{3,1}^{(1)}")
        return LieSuperalgebra::from_table(key, {"a", "b", "c"}, {"al"},
                                           T{{"b", "c", {{"a", Rat(1)}}},
                                             {"b", "al", {{"al", Rat(1)}}}});
    if (key == "H(1,0)")
        return LieSuperalgebra::from_table(key, {"e1", "e2", "e3"}, {},
                                           T{{"e1", "e2", {{"e3", Rat(1)}}}});
    if (key == "H(0,1)")
        return LieSuperalgebra::from_table(key, {"z"}, {"al"},
                                           T{{"al", "al", {{"z", Rat(1)}}}});
    if (key == "A") {
        std::size_t m = params.m.value_or(2), n = params.n.value_or(2);
        if (m + n == 0) throw std::invalid_argument("abelian algebra needs m + n >= 1");
        return build_abelian(m, n, "A(" + std::to_string(m) + "|" + std::to_string(n) + ")");
    }
    if (key == "H(1,0)+A") {
        std::size_t m = params.m.value_or(4), n = params.n.value_or(1);
        if (m < 3)
            throw std::invalid_argument("H(1,0)+A needs m >= 3 (dims are those of the sum)");
        LieSuperalgebra h = catalog_build("H(1,0)");
        std::string sum_name =
            "H(1,0)+A(" + std::to_string(m - 3) + "|" + std::to_string(n) + ")";
        if (m - 3 + n == 0)  // the abelian summand is the zero algebra
            return LieSuperalgebra::from_table(sum_name, {"e1", "e2", "e3"}, {},
                                               {{"e1", "e2", {{"e3", Rat(1)}}}});
        LieSuperalgebra a = build_abelian(m - 3, n,
                                          "A(" + std::to_string(m - 3) + "|" +
                                              std::to_string(n) + ")");
        return direct_sum(h, a, sum_name);
    }
    throw std::logic_error("catalog entry without builder: " + key);
}

std::vector<ScanRow> parameter_scan(const std::string& key, const std::vector<Rat>& values) {
    const CatalogEntry* e = catalog_find(key);
    if (!e || !e->takes_p)
        throw std::invalid_argument("parameter scan needs a p-family key, got: " + key);
    std::vector<ScanRow> rows;
    for (const Rat& p : values) {
        CatalogParams params;
        params.p = p;
        MultiplierResult mult = multiplier_checked(catalog_build(key, params));
        rows.push_back({p, mult.even_dim, mult.odd_dim, false});
    }
    // Generic dims = the most frequent pair; ties broken toward the pair seen
    // first (scan orders are caller-chosen, results per-row deterministic).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> freq;
    for (const auto& r : rows) ++freq[{r.even, r.odd}];
    std::pair<std::size_t, std::size_t> generic{0, 0};
    std::size_t best = 0;
    for (const auto& r : rows) {
        std::size_t f = freq[{r.even, r.odd}];
        if (f > best) {
            best = f;
            generic = {r.even, r.odd};
        }
    }
    for (auto& r : rows) r.exceptional = std::pair{r.even, r.odd} != generic;
    return rows;
}

}  // namespace superschur
