#include "superschur/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "superschur/catalog.hpp"
#include "superschur/invariants.hpp"

namespace superschur {

Fingerprint fingerprint(const LieSuperalgebra& L) {
    Fingerprint f;
    f.m = L.m();
    f.n = L.n();
    GradedSubspace der = L.derived_subalgebra();
    f.r = der.even_dim();
    f.s = der.odd_dim();
    f.nil_class = L.nilpotency_class();
    GradedSubspace z = L.center();
    f.center_even = z.even_dim();
    f.center_odd = z.odd_dim();
    MultiplierResult mult = multiplier_checked(L);
    f.mult_even = mult.even_dim;
    f.mult_odd = mult.odd_dim;
    f.trivial_ls = L.is_trivial_ls();
    return f;
}

std::string format_fingerprint(const Fingerprint& f) {
    std::ostringstream out;
    out << "dims (" << f.m << "|" << f.n << "), derived (" << f.r << "|" << f.s << "), class ";
    if (f.nil_class)
        out << *f.nil_class;
    else
        out << "-";
    out << ", center (" << f.center_even << "|" << f.center_odd << "), multiplier ("
        << f.mult_even << "|" << f.mult_odd << "), " << (f.trivial_ls ? "trivial" : "non-trivial");
    return out.str();
}

ClassifyResult classify_maximal_class(const LieSuperalgebra& L) {
    if (L.is_abelian()) throw std::invalid_argument("non-abelian required");
    if (!L.is_nilpotent()) throw std::invalid_argument("nilpotent required");
    if (!L.is_maximal_class())
        throw std::invalid_argument("maximal class required (dim [L,L] = m+n-2)");
    std::size_t tot = L.m() + L.n();
    if (tot < 3 || tot > 5)
        throw std::invalid_argument("total dimension must be between 3 and 5");

    MultiplierResult mult = multiplier_checked(L);
    ClassifyResult res;
    res.fp = fingerprint(L);
    res.bucket = *s_invariant(L, mult);

    for (const auto& e : catalog_list()) {
        if (!e.claimed_s_bucket) continue;
        Fingerprint ef = fingerprint(catalog_build(e.key));
        bool same_bucket = *e.claimed_s_bucket == res.bucket;
        if (same_bucket) {
            res.bucket_entries.push_back(e.key);
            if (ef == res.fp) res.fingerprint_matches.push_back(e.key);
        } else if (ef == res.fp) {
            std::ostringstream note;
            note << "fingerprint-identical entry " << e.key << " is published under s = "
                 << *e.claimed_s_bucket << ", but the computed s is " << res.bucket;
            res.notes.push_back(note.str());
        }
    }
    return res;
}

PredicateResult capability_candidate_predicate(const LieSuperalgebra& L,
                                               std::optional<std::size_t> claimed_dim) {
    PredicateResult res;
    res.target = L.m() + L.n() >= 2 ? L.m() + L.n() - 2 : 0;
    res.derived_total = L.derived_subalgebra().total_dim();
    MultiplierResult mult = multiplier_checked(L);
    res.mult_total = mult.dim();
    bool shape_ok = L.is_nilpotent() && L.m() + L.n() <= 5 && res.derived_total == res.target;
    res.computed_verdict = shape_ok && res.mult_total == res.target;
    if (claimed_dim) res.claimed_verdict = shape_ok && *claimed_dim == res.target;
    if (res.computed_verdict || (res.claimed_verdict && *res.claimed_verdict))
        res.candidate_set = {"L_{2,2}^{(9)}", "3A_{1,1}+2A", "(D^{15}+A_{1,1})^3"};
    return res;
}

CapabilityReport capability_report(const LieSuperalgebra& L,
                                   const std::vector<RatVec>& extra_candidates) {
    GradedSubspace z = L.center();
    CapabilityReport rep;
    rep.center_even = z.even_dim();
    rep.center_odd = z.odd_dim();

    std::vector<std::pair<RatVec, Parity>> candidates;
    for (std::size_t r = 0; r < z.even_rows().rows(); ++r)
        candidates.push_back({z.even_rows().row(r), Parity::even});
    for (std::size_t r = 0; r < z.odd_rows().rows(); ++r)
        candidates.push_back({z.odd_rows().row(r), Parity::odd});
    for (const RatVec& v : extra_candidates) {
        if (v.size() != L.dim())
            throw std::invalid_argument("candidate has wrong length for this algebra");
        auto par = homogeneous_parity(v, L.m());
        if (!par)
            throw std::invalid_argument("candidate is not homogeneous (or is zero): " +
                                        format_vector(L, v));
        if (!z.contains(v)) {
            // Name a witness bracket.
            for (std::size_t j = 0; j < L.dim(); ++j) {
                RatVec ej(L.dim());
                ej[j] = 1;
                RatVec w = L.bracket(v, ej);
                if (!is_zero_vec(w)) {
                    throw std::invalid_argument(
                        "candidate is not central: [" + format_vector(L, v) + ", " +
                        L.basis_name(j) + "] = " + format_vector(L, w));
                }
            }
            throw std::invalid_argument("candidate is not central: " + format_vector(L, v));
        }
        candidates.push_back({v, *par});
    }

    bool any_injective = false;
    for (const auto& [v, par] : candidates) {
        GradedSubspace line = GradedSubspace::span({v}, L.m(), L.n());
        InducedMapResult im = induced_multiplier_map(L, line);
        CandidateOutcome out;
        out.vec = v;
        out.parity = par;
        out.label = format_vector(L, v);
        out.injective = im.injective;
        out.kernel_dim = im.kernel_dim;
        out.source_dim = im.source.dim();
        out.target_dim = im.target.dim();
        out.meet_derived_dim = im.meet_derived_dim;
        if (im.injective) {
            out.identity_ok = static_cast<long>(out.target_dim) -
                                  static_cast<long>(out.source_dim) ==
                              static_cast<long>(out.meet_derived_dim);
            any_injective = true;
        }
        rep.candidates.push_back(std::move(out));
    }

    rep.exhaustive = rep.center_even <= 1 && rep.center_odd <= 1;
    if (any_injective) {
        rep.conclusion = "not capable";
        rep.note = "an injective induced map places the candidate in the epicenter";
    } else if (rep.exhaustive) {
        rep.conclusion = "no obstruction found";
        rep.note = "each parity block of the center is at most a line, so the tested "
                   "candidates exhaust the homogeneous central lines";
    } else {
        rep.conclusion = "inconclusive";
        std::ostringstream note;
        note << "no obstruction among tested candidates, but a center block of dimension >= 2 "
             << "admits untested mixed lines (center is (" << rep.center_even << "|"
             << rep.center_odd << "))";
        rep.note = note.str();
    }
    return rep;
}

std::string format_capability_report(const LieSuperalgebra& L, const CapabilityReport& rep) {
    std::ostringstream out;
    out << "center (" << rep.center_even << "|" << rep.center_odd << "), " << rep.candidates.size()
        << " candidate(s)\n";
    for (const auto& c : rep.candidates) {
        out << "  <" << c.label << "> (" << (c.parity == Parity::even ? "even" : "odd") << "): ";
        if (c.injective)
            out << "injective, dim M " << c.source_dim << " -> " << c.target_dim
                << ", dim(<x> `meet` [L,L]) = " << c.meet_derived_dim << ", identity "
                << (c.identity_ok ? "holds" : "VIOLATED");
        else
            out << "not injective (kernel dim " << c.kernel_dim << "), dim M " << c.source_dim
                << " -> " << c.target_dim;
        out << "\n";
    }
    out << "conclusion: " << rep.conclusion << " (" << rep.note << ")\n";
    (void)L;
    return out.str();
}

}  // namespace superschur
