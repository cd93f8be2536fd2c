#include "superschur/cli_commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "superschur/analysis.hpp"
#include "superschur/catalog.hpp"
#include "superschur/homology.hpp"
#include "superschur/invariants.hpp"
#include "superschur/io.hpp"
#include "superschur/verify.hpp"

namespace superschur::cli {

namespace {

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const EngineDisagreement& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kEngineDisagreement;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kEngineDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseFailure;
    }
}

std::optional<LieSuperalgebra> load_valid(const std::string& path, int& ec) {
    LieSuperalgebra L = load_algebra_file(path);
    ValidationReport v = L.validate();
    if (!v.ok()) {
        std::cerr << "axiom failure in " << path << ":\n";
        for (const auto& issue : v.issues) std::cerr << "  " << describe_issue(L, issue) << "\n";
        ec = kAxiomFailure;
        return std::nullopt;
    }
    ec = kOk;
    return L;
}

std::string dims_str(std::size_t even, std::size_t odd) {
    return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
}

// Linear combination over basis names: [sign] [rational '*'] name, joined by
// '+'/'-', e.g. "a", "-b", "1/2*a + 2*b".
RatVec parse_candidate(const LieSuperalgebra& L, const std::string& expr) {
    RatVec v(L.dim());
    std::string compact;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw std::invalid_argument("empty candidate expression");
    std::size_t pos = 0;
    while (pos < compact.size()) {
        Rat sign(1);
        if (compact[pos] == '+' || compact[pos] == '-') {
            if (compact[pos] == '-') sign = -1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
        std::string term = compact.substr(pos, end - pos);
        if (term.empty())
            throw std::invalid_argument("malformed candidate expression: " + expr);
        Rat coeff(1);
        std::string name = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            auto r = parse_rational(term.substr(0, star));
            if (!r)
                throw std::invalid_argument("invalid coefficient \"" + term.substr(0, star) +
                                            "\" in candidate: " + expr);
            coeff = *r;
            name = term.substr(star + 1);
        }
        auto idx = L.index_of(name);
        if (!idx)
            throw std::invalid_argument("unknown basis name \"" + name + "\" in candidate: " +
                                        expr);
        Rat add = sign * coeff;
        v[*idx] += add;
        pos = end;
    }
    return v;
}

}  // namespace

int cmd_validate(const std::string& path) {
    return guarded([&] {
        LieSuperalgebra L = load_algebra_file(path);
        ValidationReport v = L.validate();
        auto line = [](const char* what, bool ok) {
            std::cout << "  " << what << ": " << (ok ? "ok" : "VIOLATED") << "\n";
        };
        std::cout << L.name() << " " << dims_str(L.m(), L.n()) << "\n";
        line("homogeneity", v.homogeneity_ok);
        line("graded antisymmetry", v.antisymmetry_ok);
        line("even squares vanish", v.even_square_ok);
        line("graded Jacobi", v.jacobi_ok);
        for (const auto& issue : v.issues) std::cout << "  " << describe_issue(L, issue) << "\n";
        return v.ok() ? kOk : kAxiomFailure;
    });
}

int cmd_info(const std::string& path) {
    return guarded([&] {
        int ec;
        auto L = load_valid(path, ec);
        if (!L) return ec;
        std::cout << L->name() << "\n";
        std::cout << "  dims: " << dims_str(L->m(), L->n()) << "\n";
        GradedSubspace der = L->derived_subalgebra();
        std::cout << "  derived [L,L]: " << dims_str(der.even_dim(), der.odd_dim()) << "\n";
        std::cout << "  lower central series:";
        for (const auto& term : L->lower_central_series())
            std::cout << " " << dims_str(term.even_dim(), term.odd_dim());
        std::cout << "\n";
        auto cls = L->nilpotency_class();
        std::cout << "  nilpotency class: " << (cls ? std::to_string(*cls) : "not nilpotent")
                  << "\n";
        GradedSubspace z = L->center();
        std::cout << "  center: " << dims_str(z.even_dim(), z.odd_dim()) << "\n";
        std::cout << "  abelian: " << (L->is_abelian() ? "yes" : "no") << "\n";
        std::cout << "  trivial (all odd-odd products vanish): "
                  << (L->is_trivial_ls() ? "yes" : "no") << "\n";
        std::cout << "  maximal class (dim [L,L] = m+n-2): "
                  << (L->is_maximal_class() ? "yes" : "no") << "\n";
        return kOk;
    });
}

int cmd_multiplier(const std::string& path, bool representatives) {
    return guarded([&] {
        int ec;
        auto L = load_valid(path, ec);
        if (!L) return ec;
        MultiplierResult chain = schur_multiplier(*L);
        auto [co_even, co_odd] = cochain_multiplier_dims(*L);
        if (chain.even_dim != co_even || chain.odd_dim != co_odd) {
            std::cerr << "internal error: multiplier engines disagree on '" << L->name()
                      << "': chain " << dims_str(chain.even_dim, chain.odd_dim) << " vs cochain "
                      << dims_str(co_even, co_odd) << "\n";
            return kEngineDisagreement;
        }
        std::cout << "M(" << L->name() << ") = A(" << chain.even_dim << "|" << chain.odd_dim
                  << ")";
        if (representatives) {
            for (Parity p : {Parity::odd, Parity::even}) {
                std::vector<std::string> reps;
                for (const auto& [par, vec] : chain.representatives)
                    if (par == p) reps.push_back(format_chain_vector(*L, chain.basis2, vec));
                if (reps.empty()) continue;
                std::cout << "; " << (p == Parity::odd ? "odd: " : "even: ");
                for (std::size_t i = 0; i < reps.size(); ++i)
                    std::cout << (i ? ", " : "") << reps[i];
            }
        }
        std::cout << "\n";
        std::cout << "engines: chain " << dims_str(chain.even_dim, chain.odd_dim) << ", cochain "
                  << dims_str(co_even, co_odd) << "\n";
        return kOk;
    });
}

int cmd_invariants(const std::string& path) {
    return guarded([&] {
        int ec;
        auto L = load_valid(path, ec);
        if (!L) return ec;
        MultiplierResult mult = multiplier_checked(*L);
        std::cout << L->name() << "\n" << format_invariant_report(invariant_report(*L, mult));
        return kOk;
    });
}

int cmd_capability(const std::string& path, const std::vector<std::string>& candidate_exprs) {
    return guarded([&] {
        int ec;
        auto L = load_valid(path, ec);
        if (!L) return ec;
        std::vector<RatVec> extras;
        for (const auto& expr : candidate_exprs) extras.push_back(parse_candidate(*L, expr));
        CapabilityReport rep = capability_report(*L, extras);
        std::cout << L->name() << "\n" << format_capability_report(*L, rep);
        return kOk;
    });
}

int cmd_classify(const std::string& path) {
    return guarded([&] {
        int ec;
        auto L = load_valid(path, ec);
        if (!L) return ec;
        std::cout << L->name() << "\n";
        // When the algebra is a catalog entry, feed its published multiplier
        // dimension to the predicate so both verdicts can be reported.
        std::optional<std::size_t> published_dim;
        if (const CatalogEntry* e = catalog_find(L->name())) published_dim = e->claimed_dim;
        PredicateResult pred = capability_candidate_predicate(*L, published_dim);
        std::cout << "  dim [L,L] = " << pred.derived_total << ", dim M = " << pred.mult_total
                  << ", m+n-2 = " << pred.target
                  << "; capability-candidate profile (dim [L,L] = dim M = m+n-2): "
                  << (pred.computed_verdict ? "yes" : "no");
        if (pred.claimed_verdict)
            std::cout << " computed, " << (*pred.claimed_verdict ? "yes" : "no")
                      << " with the published dim M";
        if (!pred.candidate_set.empty()) {
            std::cout << "\n  entries associated with this profile:";
            for (const auto& k : pred.candidate_set) std::cout << " " << k;
        }
        std::cout << "\n";
        ClassifyResult res = classify_maximal_class(*L);  // throws on precondition violation
        std::cout << "  fingerprint: " << format_fingerprint(res.fp) << "\n";
        std::cout << "  computed s-bucket: " << res.bucket << "\n";
        std::cout << "  entries published in this bucket:";
        if (res.bucket_entries.empty()) std::cout << " (none)";
        for (const auto& k : res.bucket_entries) std::cout << " " << k;
        std::cout << "\n";
        std::cout << "  fingerprint matches (evidence, not an isomorphism proof):";
        if (res.fingerprint_matches.empty()) std::cout << " (none)";
        for (const auto& k : res.fingerprint_matches) std::cout << " " << k;
        std::cout << "\n";
        for (const auto& note : res.notes) std::cout << "  NOTE: " << note << "\n";
        return kOk;
    });
}

int cmd_catalog_list() {
    return guarded([&] {
        for (const auto& e : catalog_list()) {
            std::cout << e.key << "\n  " << e.description << "\n";
            if (e.claimed_dim || e.claimed_type || e.claimed_s_bucket) {
                std::cout << "  claims:";
                if (e.claimed_dim) std::cout << " dim " << *e.claimed_dim;
                if (e.claimed_type)
                    std::cout << " type A(" << e.claimed_type->first << "|"
                              << e.claimed_type->second << ")";
                if (e.claimed_s_bucket) std::cout << " s-bucket " << *e.claimed_s_bucket;
                std::cout << " [" << e.source << "]\n";
            } else {
                std::cout << "  claims: none\n";
            }
            if (e.takes_p) std::cout << "  parameter: p > 0 (default 1)\n";
            if (e.takes_mn) std::cout << "  parameters: --m, --n\n";
        }
        return kOk;
    });
}

int cmd_catalog_emit(const std::string& key, const std::optional<std::string>& p,
                     std::optional<std::size_t> m, std::optional<std::size_t> n,
                     const std::string& out_path) {
    return guarded([&] {
        CatalogParams params;
        if (p) {
            auto r = parse_rational(*p);
            if (!r) throw std::invalid_argument("invalid rational for --p: " + *p);
            params.p = *r;
        }
        params.m = m;
        params.n = n;
        LieSuperalgebra L = catalog_build(key, params);
        if (out_path.empty())
            std::cout << algebra_to_json(L);
        else
            save_algebra_file(L, out_path);
        return kOk;
    });
}

int cmd_catalog_scan(const std::string& key, const std::vector<std::string>& p_values) {
    return guarded([&] {
        std::vector<Rat> values;
        if (p_values.empty()) {
            values = {rat(1, 4), rat(1, 3), rat(1, 2), Rat(1), Rat(2), Rat(3)};
        } else {
            for (const auto& s : p_values) {
                auto r = parse_rational(s);
                if (!r) throw std::invalid_argument("invalid rational for --p: " + s);
                values.push_back(*r);
            }
        }
        std::cout << key << " multiplier dims by p:\n";
        for (const auto& row : parameter_scan(key, values)) {
            std::cout << "  p = " << to_string(row.p) << ": A(" << row.even << "|" << row.odd
                      << ")" << (row.exceptional ? "  <- differs from the generic dims" : "")
                      << "\n";
        }
        return kOk;
    });
}

int cmd_verify_paper(const std::string& out_base) {
    return guarded([&] {
        VerifyReport rep = build_verify_report();
        std::string text = rep.text();
        std::string csv = rep.csv();
        {
            std::ofstream t(out_base + ".txt", std::ios::binary);
            if (!t) throw ParseError("cannot write " + out_base + ".txt");
            t << text;
            std::ofstream c(out_base + ".csv", std::ios::binary);
            if (!c) throw ParseError("cannot write " + out_base + ".csv");
            c << csv;
        }
        std::cout << text;
        std::cout << "reports written: " << out_base << ".txt, " << out_base << ".csv\n";
        return rep.exit_code();
    });
}

}  // namespace superschur::cli
