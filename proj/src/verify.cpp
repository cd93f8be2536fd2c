#include "superschur/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "superschur/catalog.hpp"
#include "superschur/homology.hpp"

namespace superschur {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string type_str(std::size_t even, std::size_t odd) {
    return "A(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
}

}  // namespace

VerifyReport build_verify_report() {
    VerifyReport rep;
    for (const auto& e : catalog_list()) {
        LieSuperalgebra L = catalog_build(e.key);
        VerifyRow row;
        row.key = e.key;
        row.m = L.m();
        row.n = L.n();
        row.claimed_dim = e.claimed_dim;
        row.claimed_type = e.claimed_type;
        row.s_claimed = e.claimed_s_bucket;
        if (e.takes_p) row.note = "at p = 1";
        if (e.takes_mn) row.note = "at dims (" + std::to_string(L.m()) + "|" +
                                   std::to_string(L.n()) + ")";

        row.valid = L.validate().ok();
        if (!row.valid) {
            rep.all_valid = false;
            rep.notes.push_back(row.key + ": FAILS axiom validation");
        }

        MultiplierResult mult = multiplier_checked(L);
        row.computed_even = mult.even_dim;
        row.computed_odd = mult.odd_dim;
        row.s_computed = s_invariant(L, mult);

        if (e.claimed_dim && e.claimed_s_bucket) {
            long expect = s_offset(L.m(), L.n()) - static_cast<long>(*e.claimed_dim);
            row.claims_consistent = *e.claimed_s_bucket == expect;
            if (!row.claims_consistent)
                rep.notes.push_back(row.key + ": claimed bucket " +
                                    std::to_string(*e.claimed_s_bucket) +
                                    " is inconsistent with claimed dim (expects " +
                                    std::to_string(expect) + ")");
        }

        if (!e.claimed_dim && !e.claimed_type && !e.claimed_s_bucket) {
            row.status = "UNTABULATED";
        } else {
            bool ok = true;
            if (e.claimed_dim && *e.claimed_dim != mult.dim()) ok = false;
            if (e.claimed_type && *e.claimed_type != std::pair{mult.even_dim, mult.odd_dim})
                ok = false;
            if (e.claimed_s_bucket && row.s_computed && *e.claimed_s_bucket != *row.s_computed)
                ok = false;
            row.status = ok ? "MATCH" : "MISMATCH";
        }

        InvariantReport inv = invariant_report(L, mult);
        if (!inv.all_applicable_hold()) {
            rep.bounds_ok = false;
            rep.notes.push_back(row.key + ": a bound check fails on computed dims");
        }
        rep.invariants.push_back({e.key, std::move(inv)});
        rep.rows.push_back(std::move(row));
    }

    for (const char* anchor : {"L_{1,2}^{(3)}", "(D^{15}+A_{1,1})^4"}) {
        auto it = std::find_if(rep.rows.begin(), rep.rows.end(),
                               [&](const VerifyRow& r) { return r.key == anchor; });
        bool ok = it != rep.rows.end() && it->status == "MATCH";
        if (!ok) rep.anchors_ok = false;
        rep.notes.push_back(std::string("anchor ") + anchor + ": " +
                            (ok ? "reproduced" : "NOT reproduced"));
    }
    return rep;
}

std::string VerifyReport::csv() const {
    std::ostringstream out;
    out << "key,m,n,claimed_dim,claimed_even,claimed_odd,computed_dim,computed_even,"
           "computed_odd,s_claimed,s_computed,status\n";
    for (const auto& r : rows) {
        out << csv_field(r.key) << ',' << r.m << ',' << r.n << ',' << opt_str(r.claimed_dim)
            << ',';
        if (r.claimed_type)
            out << r.claimed_type->first << ',' << r.claimed_type->second << ',';
        else
            out << ",,";
        out << r.computed_dim() << ',' << r.computed_even << ',' << r.computed_odd << ','
            << opt_str(r.s_claimed) << ',' << opt_str(r.s_computed) << ',' << r.status << "\n";
    }
    return out.str();
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    out << "multiplier reproduction report\n";
    out << "==============================\n\n";
    out << "Every entry is built from its published bracket table, validated against the\n";
    out << "graded axioms, and its multiplier is computed twice: once as ker d2 / im d3 on\n";
    out << "the super-exterior chain complex, once from the 2-cocycle/2-coboundary system.\n";
    out << "Both engines agreed on every entry below. Claimed values are compared, never\n";
    out << "consumed by the computation.\n\n";

    out << std::left << std::setw(22) << "entry" << std::setw(8) << "dims" << std::setw(10)
        << "claimed" << std::setw(10) << "computed" << std::setw(6) << "s_cl" << std::setw(6)
        << "s_co" << std::setw(12) << "status" << "note\n";
    out << std::string(78, '-') << "\n";
    for (const auto& r : rows) {
        std::string dims = "(" + std::to_string(r.m) + "|" + std::to_string(r.n) + ")";
        std::string claimed = r.claimed_type
                                  ? type_str(r.claimed_type->first, r.claimed_type->second)
                                  : (r.claimed_dim ? "dim " + std::to_string(*r.claimed_dim)
                                                   : std::string("-"));
        out << std::left << std::setw(22) << r.key << std::setw(8) << dims << std::setw(10)
            << claimed << std::setw(10) << type_str(r.computed_even, r.computed_odd)
            << std::setw(6) << (r.s_claimed ? std::to_string(*r.s_claimed) : "-") << std::setw(6)
            << (r.s_computed ? std::to_string(*r.s_computed) : "-") << std::setw(12) << r.status
            << r.note << "\n";
    }

    out << "\nclaim consistency (published bucket vs published dim):\n";
    bool all_consistent = true;
    for (const auto& r : rows)
        if (!r.claims_consistent) {
            all_consistent = false;
            out << "  " << r.key << ": INCONSISTENT\n";
        }
    if (all_consistent) out << "  consistent for every entry carrying both claims\n";

    out << "\nbound checks on computed dims:\n";
    for (const auto& [key, inv] : invariants) {
        std::vector<std::string> failures;
        for (const auto& c : inv.checks) {
            if (c.applicable && !c.informative && !c.holds)
                failures.push_back(format_bound_check(c));
            if (c.applicable && c.informative && !c.holds)
                failures.push_back(format_bound_check(c));  // flags, printed not failed
        }
        out << "  " << std::left << std::setw(22) << key << "t = " << std::setw(4) << inv.t
            << "s = " << std::setw(4)
            << (inv.s_inv ? std::to_string(*inv.s_inv) : std::string("-"))
            << (inv.all_applicable_hold() ? "all applicable bounds hold" : "BOUND FAILURE");
        out << "\n";
        for (const auto& f : failures) out << "  " << f << "\n";
    }

    out << "\nnotes:\n";
    for (const auto& n : notes) out << "  " << n << "\n";

    out << "\nsummary: " << (all_valid ? "axioms ok" : "AXIOM FAILURE") << "; "
        << (bounds_ok ? "bounds ok" : "BOUND FAILURE") << "; "
        << (anchors_ok ? "anchors reproduced" : "ANCHOR FAILURE") << "; exit " << exit_code()
        << "\n";
    return out.str();
}

}  // namespace superschur
