#include "superschur/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace superschur {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

std::vector<std::string> parse_basis_array(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "must be an array of strings");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& el = j[i];
        if (!el.is_string()) fail(where + "[" + std::to_string(i) + "]", "must be a string");
        std::string name = el.get<std::string>();
        if (name.empty()) fail(where + "[" + std::to_string(i) + "]", "must be non-empty");
        names.push_back(std::move(name));
    }
    return names;
}

}  // namespace

LieSuperalgebra algebra_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("document", "root must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "even_basis" && key != "odd_basis" && key != "brackets")
            fail("document", "unknown key \"" + key + "\"");
    }
    for (const char* key : {"name", "even_basis", "odd_basis", "brackets"})
        if (!j.contains(key)) fail("document", std::string("missing key \"") + key + "\"");

    if (!j["name"].is_string() || j["name"].get<std::string>().empty())
        fail("name", "must be a non-empty string");
    std::string name = j["name"].get<std::string>();

    std::vector<std::string> even = parse_basis_array(j["even_basis"], "even_basis");
    std::vector<std::string> odd = parse_basis_array(j["odd_basis"], "odd_basis");
    if (even.empty() && odd.empty()) fail("document", "basis must be non-empty");

    std::map<std::string, std::size_t> index;
    std::size_t next = 0;
    for (const auto& b : even) {
        if (!index.emplace(b, next++).second) fail("even_basis", "duplicate name \"" + b + "\"");
    }
    for (const auto& b : odd) {
        if (!index.emplace(b, next++).second) fail("odd_basis", "duplicate name \"" + b + "\"");
    }
    std::size_t m = even.size();
    std::size_t dim = even.size() + odd.size();

    if (!j["brackets"].is_array()) fail("brackets", "must be an array");
    std::vector<BracketDef> table;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t b = 0; b < j["brackets"].size(); ++b) {
        std::string where = "brackets[" + std::to_string(b) + "]";
        const auto& jb = j["brackets"][b];
        if (!jb.is_object()) fail(where, "must be an object");
        for (const auto& [key, value] : jb.items()) {
            (void)value;
            if (key != "left" && key != "right" && key != "value")
                fail(where, "unknown key \"" + key + "\"");
        }
        for (const char* key : {"left", "right", "value"})
            if (!jb.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
        if (!jb["left"].is_string() || !jb["right"].is_string())
            fail(where, "\"left\" and \"right\" must be basis-name strings");

        BracketDef def;
        def.left = jb["left"].get<std::string>();
        def.right = jb["right"].get<std::string>();
        auto li = index.find(def.left);
        auto ri = index.find(def.right);
        if (li == index.end()) fail(where + ".left", "unknown basis name \"" + def.left + "\"");
        if (ri == index.end())
            fail(where + ".right", "unknown basis name \"" + def.right + "\"");
        if (li->second > ri->second)
            fail(where, "pair must be ordered left index <= right index (\"" + def.left +
                            "\" comes after \"" + def.right + "\")");
        if (li->second == ri->second && li->second < m)
            fail(where, "diagonal bracket [" + def.left + "," + def.right +
                            "] needs an odd element");
        if (!seen.insert({li->second, ri->second}).second)
            fail(where, "duplicate bracket pair [" + def.left + "," + def.right + "]");

        if (!jb["value"].is_array()) fail(where + ".value", "must be an array");
        std::set<std::string> seen_terms;
        for (std::size_t t = 0; t < jb["value"].size(); ++t) {
            std::string twhere = where + ".value[" + std::to_string(t) + "]";
            const auto& jt = jb["value"][t];
            if (!jt.is_object()) fail(twhere, "must be an object");
            for (const auto& [key, value] : jt.items()) {
                (void)value;
                if (key != "basis" && key != "coeff") fail(twhere, "unknown key \"" + key + "\"");
            }
            for (const char* key : {"basis", "coeff"})
                if (!jt.contains(key)) fail(twhere, std::string("missing key \"") + key + "\"");
            if (!jt["basis"].is_string()) fail(twhere + ".basis", "must be a string");
            std::string basis = jt["basis"].get<std::string>();
            if (!index.count(basis)) fail(twhere + ".basis", "unknown basis name \"" + basis + "\"");
            if (!seen_terms.insert(basis).second)
                fail(twhere, "duplicate term for basis \"" + basis + "\"");
            if (jt["coeff"].is_number())
                fail(twhere + ".coeff",
                     "must be a rational string like \"3\" or \"-1/2\" (floating point not "
                     "accepted)");
            if (!jt["coeff"].is_string()) fail(twhere + ".coeff", "must be a rational string");
            std::string coeff = jt["coeff"].get<std::string>();
            auto rat = parse_rational(coeff);
            if (!rat)
                fail(twhere + ".coeff", "invalid rational \"" + coeff +
                                            "\" (exact \"p\" or \"p/q\" required; floating "
                                            "point not accepted)");
            def.terms.push_back({basis, *rat});
        }
        table.push_back(std::move(def));
    }
    (void)dim;
    try {
        return LieSuperalgebra::from_table(name, even, odd, table);
    } catch (const std::exception& e) {
        throw ParseError(std::string("algebra construction: ") + e.what());
    }
}

LieSuperalgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return algebra_from_json(buf.str());
}

std::string algebra_to_json(const LieSuperalgebra& L) {
    ordered_json j;
    j["name"] = L.name();
    j["even_basis"] = ordered_json::array();
    for (std::size_t i = 0; i < L.m(); ++i) j["even_basis"].push_back(L.basis_name(i));
    j["odd_basis"] = ordered_json::array();
    for (std::size_t i = L.m(); i < L.dim(); ++i) j["odd_basis"].push_back(L.basis_name(i));
    j["brackets"] = ordered_json::array();
    for (const auto& [pair, value] : L.stored_brackets()) {
        ordered_json jb;
        jb["left"] = L.basis_name(pair.first);
        jb["right"] = L.basis_name(pair.second);
        jb["value"] = ordered_json::array();
        for (std::size_t k = 0; k < value.size(); ++k) {
            if (value[k] == 0) continue;
            ordered_json jt;
            jt["basis"] = L.basis_name(k);
            jt["coeff"] = to_string(value[k]);
            jb["value"].push_back(std::move(jt));
        }
        j["brackets"].push_back(std::move(jb));
    }
    return j.dump(2) + "\n";
}

void save_algebra_file(const LieSuperalgebra& L, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << algebra_to_json(L);
}

}  // namespace superschur
