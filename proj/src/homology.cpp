#include "superschur/homology.hpp"

#include <map>
#include <sstream>

namespace superschur {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Lookup from an ordered index pair to its position in basis2.
std::vector<std::vector<std::size_t>> index2_table(const LieSuperalgebra& L,
                                                   const std::vector<Wedge2>& basis2) {
    std::vector<std::vector<std::size_t>> idx(L.dim(), std::vector<std::size_t>(L.dim(), kNone));
    for (std::size_t t = 0; t < basis2.size(); ++t) idx[basis2[t].i][basis2[t].j] = t;
    return idx;
}

// acc += coeff * (e_a ^ e_b) after canonical reordering:
// e_b ^ e_a = -(-1)^{|a||b|} e_a ^ e_b, and e_a ^ e_a = 0 for even a.
void add_wedge(const LieSuperalgebra& L, const std::vector<std::vector<std::size_t>>& idx,
               RatVec& acc, std::size_t a, std::size_t b, const Rat& coeff) {
    if (coeff == 0) return;
    if (a == b && L.parity(a) == Parity::even) return;
    if (a <= b) {
        acc[idx[a][b]] += coeff;
    } else {
        acc[idx[b][a]] += coeff * Rat(swap_sign(L.parity(a), L.parity(b)));
    }
}

struct Homology {
    ChainComplexData chain;
    Mat cycles[2];      // RREF rows, width |basis2|
    Mat boundaries[2];  // RREF rows, width |basis2|
    MultiplierResult result;
};

Homology compute_homology(const LieSuperalgebra& L) {
    Homology h;
    h.chain = build_chain_complex(L);
    const ChainComplexData& cc = h.chain;
    std::size_t w = cc.basis2.size();

    for (int p = 0; p < 2; ++p) {
        // Kernel of d2 restricted to the parity-p monomial columns.
        const std::vector<std::size_t>& cols2 = cc.block2[p];
        Mat d2p(L.dim(), cols2.size());
        for (std::size_t r = 0; r < L.dim(); ++r)
            for (std::size_t c = 0; c < cols2.size(); ++c) d2p.at(r, c) = cc.d2.at(r, cols2[c]);
        Mat ker = d2p.kernel();
        Mat cyc(ker.rows(), w);
        for (std::size_t r = 0; r < ker.rows(); ++r)
            for (std::size_t c = 0; c < cols2.size(); ++c) cyc.at(r, cols2[c]) = ker.at(r, c);
        h.cycles[p] = cyc.row_space();

        // Column space of d3 on the parity-p degree-3 monomials.
        const std::vector<std::size_t>& cols3 = cc.block3[p];
        Mat bnd(cols3.size(), w);
        for (std::size_t r = 0; r < cols3.size(); ++r)
            for (std::size_t c = 0; c < w; ++c) bnd.at(r, c) = cc.d3.at(c, cols3[r]);
        h.boundaries[p] = bnd.row_space();
    }

    MultiplierResult& res = h.result;
    res.basis2 = cc.basis2;
    res.even_dim = h.cycles[0].rows() - h.boundaries[0].rows();
    res.odd_dim = h.cycles[1].rows() - h.boundaries[1].rows();
    for (int p = 0; p < 2; ++p) {
        // Extend the boundary basis to the cycle space; every cycle row that
        // adds a new direction represents a class.
        Mat acc = h.boundaries[p];
        for (std::size_t r = 0; r < h.cycles[p].rows(); ++r) {
            RatVec rem = reduce_row(h.cycles[p].row(r), acc);
            if (is_zero_vec(rem)) continue;
            ChainVector rep;
            for (std::size_t c = 0; c < w; ++c)
                if (h.cycles[p].at(r, c) != 0) rep.terms.push_back({c, h.cycles[p].at(r, c)});
            res.representatives.push_back({static_cast<Parity>(p), std::move(rep)});
            acc = Mat::vstack(acc, Mat::from_rows({rem}, w)).row_space();
        }
    }
    std::size_t expected = res.even_dim + res.odd_dim;
    if (res.representatives.size() != expected)
        throw std::logic_error("homology: representative extraction lost a class");
    return h;
}

}  // namespace

std::vector<Wedge2> chain2_basis(const LieSuperalgebra& L) {
    std::vector<Wedge2> basis;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i; j < L.dim(); ++j) {
            if (i == j && L.parity(i) == Parity::even) continue;
            basis.push_back({i, j, parity_sum(L.parity(i), L.parity(j))});
        }
    return basis;
}

std::vector<Wedge3> chain3_basis(const LieSuperalgebra& L) {
    std::vector<Wedge3> basis;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i; j < L.dim(); ++j) {
            if (i == j && L.parity(i) == Parity::even) continue;
            for (std::size_t k = j; k < L.dim(); ++k) {
                if (j == k && L.parity(j) == Parity::even) continue;
                basis.push_back(
                    {i, j, k, parity_sum(parity_sum(L.parity(i), L.parity(j)), L.parity(k))});
            }
        }
    return basis;
}

ChainComplexData build_chain_complex(const LieSuperalgebra& L) {
    ChainComplexData cc;
    cc.basis2 = chain2_basis(L);
    cc.basis3 = chain3_basis(L);
    for (std::size_t t = 0; t < cc.basis2.size(); ++t)
        cc.block2[static_cast<int>(cc.basis2[t].parity)].push_back(t);
    for (std::size_t t = 0; t < cc.basis3.size(); ++t)
        cc.block3[static_cast<int>(cc.basis3[t].parity)].push_back(t);
    auto idx = index2_table(L, cc.basis2);

    cc.d2 = Mat(L.dim(), cc.basis2.size());
    for (std::size_t t = 0; t < cc.basis2.size(); ++t) {
        RatVec v = L.bracket_basis(cc.basis2[t].i, cc.basis2[t].j);
        for (std::size_t r = 0; r < L.dim(); ++r) cc.d2.at(r, t) = v[r];
    }

    cc.d3 = Mat(cc.basis2.size(), cc.basis3.size());
    for (std::size_t t = 0; t < cc.basis3.size(); ++t) {
        auto [x, y, z, par] = cc.basis3[t];
        RatVec col(cc.basis2.size());
        auto term = [&](std::size_t a, std::size_t b, std::size_t c, const Rat& sign) {
            RatVec v = L.bracket_basis(a, b);
            for (std::size_t u = 0; u < L.dim(); ++u)
                if (v[u] != 0) add_wedge(L, idx, col, u, c, sign * v[u]);
        };
        Rat s2(swap_sign(L.parity(y), L.parity(z)));  // -(-1)^{|y||z|}
        bool yz_odd = parity_sum(L.parity(y), L.parity(z)) == Parity::odd;
        Rat s3((L.parity(x) == Parity::odd && yz_odd) ? -1 : 1);  // (-1)^{|x|(|y|+|z|)}
        term(x, y, z, Rat(1));
        term(x, z, y, s2);
        term(y, z, x, s3);
        for (std::size_t r = 0; r < cc.basis2.size(); ++r) cc.d3.at(r, t) = col[r];
    }

    if (!(cc.d2 * cc.d3).is_zero())
        throw std::logic_error("chain complex: d2 * d3 != 0 (graded Jacobi must have failed)");
    return cc;
}

MultiplierResult schur_multiplier(const LieSuperalgebra& L) { return compute_homology(L).result; }

std::pair<std::size_t, std::size_t> cochain_multiplier_dims(const LieSuperalgebra& L) {
    std::size_t N = L.dim();
    std::size_t dims[2];
    for (int p = 0; p < 2; ++p) {
        // Unknowns: values f(e_i, e_j) on pairs i <= j of total parity p
        // (i == j only for odd e_i; even squares are forced to zero).
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) {
                if (i == j && L.parity(i) == Parity::even) continue;
                if (parity_sum(L.parity(i), L.parity(j)) != static_cast<Parity>(p)) continue;
                unknown.emplace(std::make_pair(i, j), unknown.size());
            }
        std::size_t nu = unknown.size();

        // f applied to (e_k, e_l) in terms of the canonical unknowns:
        // f(y, x) = -(-1)^{|x||y|} f(x, y), f vanishing off its parity block.
        auto add_f = [&](RatVec& row, std::size_t k, std::size_t l, const Rat& coeff) {
            if (coeff == 0) return;
            std::size_t a = k, b = l;
            Rat c = coeff;
            if (a == b && L.parity(a) == Parity::even) return;
            if (a > b) {
                std::swap(a, b);
                c *= Rat(swap_sign(L.parity(k), L.parity(l)));
            }
            auto it = unknown.find({a, b});
            if (it == unknown.end()) return;  // other parity block: f == 0 there
            row[it->second] += c;
        };

        // Cocycle condition over every ordered basis triple:
        // f([x,y],z) - (-1)^{|y||z|} f([x,z],y) + (-1)^{|x|(|y|+|z|)} f([y,z],x) = 0
        std::vector<RatVec> rows;
        for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y)
                for (std::size_t z = 0; z < N; ++z) {
                    RatVec row(nu);
                    RatVec v1 = L.bracket_basis(x, y);
                    RatVec v2 = L.bracket_basis(x, z);
                    RatVec v3 = L.bracket_basis(y, z);
                    Rat s2(swap_sign(L.parity(y), L.parity(z)));
                    bool yz_odd = parity_sum(L.parity(y), L.parity(z)) == Parity::odd;
                    Rat s3((L.parity(x) == Parity::odd && yz_odd) ? -1 : 1);
                    for (std::size_t t = 0; t < N; ++t) {
                        add_f(row, t, z, v1[t]);
                        add_f(row, t, y, s2 * v2[t]);
                        add_f(row, t, x, s3 * v3[t]);
                    }
                    if (!is_zero_vec(row)) rows.push_back(std::move(row));
                }
        std::size_t cocycles = nu - Mat::from_rows(rows, nu).rank();

        // Coboundaries: f(x, y) = g([x, y]) for the coordinate functionals g
        // of parity p.
        std::vector<RatVec> cob;
        for (std::size_t k = 0; k < N; ++k) {
            if (L.parity(k) != static_cast<Parity>(p)) continue;
            RatVec row(nu);
            for (const auto& [pair, col] : unknown) row[col] = L.bracket_basis(pair.first, pair.second)[k];
            if (!is_zero_vec(row)) cob.push_back(std::move(row));
        }
        std::size_t cob_rank = Mat::from_rows(cob, nu).rank();
        dims[p] = cocycles - cob_rank;
    }
    return {dims[0], dims[1]};
}

MultiplierResult multiplier_checked(const LieSuperalgebra& L) {
    MultiplierResult chain = schur_multiplier(L);
    auto [even, odd] = cochain_multiplier_dims(L);
    if (chain.even_dim != even || chain.odd_dim != odd) {
        std::ostringstream msg;
        msg << "multiplier engines disagree on '" << L.name() << "': chain (" << chain.even_dim
            << "|" << chain.odd_dim << ") vs cochain (" << even << "|" << odd << ")";
        throw EngineDisagreement(msg.str());
    }
    return chain;
}

InducedMapResult induced_multiplier_map(const LieSuperalgebra& L, const GradedSubspace& n) {
    // N must be central: [v, e_j] = 0 for every generator.
    auto check_central = [&](const Mat& rows) {
        for (std::size_t r = 0; r < rows.rows(); ++r)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                RatVec ej(L.dim());
                ej[j] = 1;
                if (!is_zero_vec(L.bracket(rows.row(r), ej)))
                    throw std::invalid_argument("induced map: subspace is not central");
            }
    };
    check_central(n.even_rows());
    check_central(n.odd_rows());

    QuotientResult q = L.quotient(n);
    Homology hl = compute_homology(L);
    Homology hq = compute_homology(q.algebra);
    {
        // Both algebras go through the independent engine as well.
        auto [el, ol] = cochain_multiplier_dims(L);
        if (el != hl.result.even_dim || ol != hl.result.odd_dim)
            throw EngineDisagreement("multiplier engines disagree on '" + L.name() + "'");
        auto [eq, oq] = cochain_multiplier_dims(q.algebra);
        if (eq != hq.result.even_dim || oq != hq.result.odd_dim)
            throw EngineDisagreement("multiplier engines disagree on '" + q.algebra.name() + "'");
    }

    const LieSuperalgebra& Q = q.algebra;
    auto qidx = index2_table(Q, hq.chain.basis2);
    std::vector<RatVec> proj(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        RatVec ei(L.dim());
        ei[i] = 1;
        proj[i] = q.project(ei);
    }

    // Solve images against [representatives of M(L/N); boundaries] to read
    // off class coordinates.
    std::size_t wq = hq.chain.basis2.size();
    std::vector<RatVec> solve_rows;
    for (const auto& [par, rep] : hq.result.representatives) {
        RatVec dense(wq);
        for (const auto& [t, c] : rep.terms) dense[t] = c;
        solve_rows.push_back(std::move(dense));
    }
    std::size_t nreps_q = solve_rows.size();
    for (int p = 0; p < 2; ++p)
        for (std::size_t r = 0; r < hq.boundaries[p].rows(); ++r)
            solve_rows.push_back(hq.boundaries[p].row(r));
    Mat solve_basis = Mat::from_rows(solve_rows, wq);

    std::size_t nreps_l = hl.result.representatives.size();
    Mat map(nreps_l, nreps_q);
    for (std::size_t r = 0; r < nreps_l; ++r) {
        const ChainVector& rep = hl.result.representatives[r].second;
        RatVec image(wq);
        for (const auto& [t, c] : rep.terms) {
            auto [i, j, par] = hl.chain.basis2[t];
            const RatVec& u = proj[i];
            const RatVec& v = proj[j];
            for (std::size_t a = 0; a < Q.dim(); ++a) {
                if (u[a] == 0) continue;
                for (std::size_t b = 0; b < Q.dim(); ++b)
                    add_wedge(Q, qidx, image, a, b, c * u[a] * v[b]);
            }
        }
        std::optional<RatVec> lambda = solve_row_combination(solve_basis, image);
        if (!lambda)
            throw std::logic_error("induced map: image of a cycle is not a cycle class");
        for (std::size_t c = 0; c < nreps_q; ++c) map.at(r, c) = (*lambda)[c];
    }

    InducedMapResult out{hl.result, hq.result, map, false, 0, 0, 0, Q};
    std::size_t rank = map.rank();
    out.injective = (rank == nreps_l);
    out.kernel_dim = nreps_l - rank;
    out.cokernel_dim = nreps_q - rank;
    out.meet_derived_dim = n.intersect(L.derived_subalgebra()).total_dim();
    return out;
}

std::string format_wedge(const LieSuperalgebra& L, const Wedge2& w) {
    return L.basis_name(w.i) + "∧" + L.basis_name(w.j);
}

std::string format_chain_vector(const LieSuperalgebra& L, const std::vector<Wedge2>& basis2,
                                const ChainVector& v) {
    if (v.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : v.terms) {
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat mag = abs(c);
        if (mag != 1) out << to_string(mag) << " ";
        out << format_wedge(L, basis2[t]);
        first = false;
    }
    return out.str();
}

}  // namespace superschur
