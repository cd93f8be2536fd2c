#include "superschur/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superschur {

namespace {

RatVec even_projection(const RatVec& v, std::size_t m) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < m && i < v.size(); ++i) out[i] = v[i];
    return out;
}

RatVec odd_projection(const RatVec& v, std::size_t m) {
    RatVec out(v.size());
    for (std::size_t i = m; i < v.size(); ++i) out[i] = v[i];
    return out;
}

}  // namespace

GradedSubspace GradedSubspace::zero(std::size_t m, std::size_t n) {
    return from_parts(Mat(0, m + n), Mat(0, m + n), m, n);
}

GradedSubspace GradedSubspace::full(std::size_t m, std::size_t n) {
    Mat even(m, m + n), odd(n, m + n);
    for (std::size_t i = 0; i < m; ++i) even.at(i, i) = 1;
    for (std::size_t i = 0; i < n; ++i) odd.at(i, m + i) = 1;
    return from_parts(even, odd, m, n);
}

GradedSubspace GradedSubspace::span(const std::vector<RatVec>& generators, std::size_t m,
                                    std::size_t n) {
    std::vector<RatVec> even_gens, odd_gens;
    for (const RatVec& g : generators) {
        if (g.size() != m + n) throw std::invalid_argument("span: bad generator width");
        RatVec e = even_projection(g, m), o = odd_projection(g, m);
        if (!is_zero_vec(e)) even_gens.push_back(e);
        if (!is_zero_vec(o)) odd_gens.push_back(o);
    }
    return from_parts(Mat::from_rows(even_gens, m + n), Mat::from_rows(odd_gens, m + n), m, n);
}

GradedSubspace GradedSubspace::from_parts(Mat even_rows, Mat odd_rows, std::size_t m,
                                          std::size_t n) {
    GradedSubspace s;
    s.m_ = m;
    s.n_ = n;
    s.even_ = even_rows.row_space();
    s.odd_ = odd_rows.row_space();
    for (std::size_t r = 0; r < s.even_.rows(); ++r)
        for (std::size_t c = m; c < m + n; ++c)
            if (s.even_.at(r, c) != 0) throw std::invalid_argument("even part leaks into odd block");
    for (std::size_t r = 0; r < s.odd_.rows(); ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (s.odd_.at(r, c) != 0) throw std::invalid_argument("odd part leaks into even block");
    return s;
}

bool GradedSubspace::contains(const RatVec& v) const {
    // A graded subspace contains v iff it contains both parity projections.
    return is_zero_vec(reduce_row(even_projection(v, m_), even_)) &&
           is_zero_vec(reduce_row(odd_projection(v, m_), odd_));
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
    for (std::size_t r = 0; r < other.even_.rows(); ++r)
        if (!contains(other.even_.row(r))) return false;
    for (std::size_t r = 0; r < other.odd_.rows(); ++r)
        if (!contains(other.odd_.row(r))) return false;
    return true;
}

bool GradedSubspace::operator==(const GradedSubspace& other) const {
    return m_ == other.m_ && n_ == other.n_ && even_ == other.even_ && odd_ == other.odd_;
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& other) const {
    return from_parts(intersect_row_spaces(even_, other.even_),
                      intersect_row_spaces(odd_, other.odd_), m_, n_);
}

RatVec GradedSubspace::reduce(RatVec v) const { return reduce_row(reduce_row(v, even_), odd_); }

LieSuperalgebra::LieSuperalgebra(std::string name, std::vector<std::string> even_names,
                                 std::vector<std::string> odd_names,
                                 std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets)
    : name_(std::move(name)), m_(even_names.size()), n_(odd_names.size()) {
    names_ = std::move(even_names);
    names_.insert(names_.end(), odd_names.begin(), odd_names.end());
    if (names_.empty()) throw std::invalid_argument("algebra must have at least one basis element");
    std::set<std::string> seen;
    for (const std::string& nm : names_) {
        if (nm.empty()) throw std::invalid_argument("empty basis name");
        if (!seen.insert(nm).second)
            throw std::invalid_argument("duplicate basis name '" + nm + "'");
    }
    for (auto& [key, value] : brackets) {
        auto [i, j] = key;
        if (j >= dim()) throw std::invalid_argument("bracket index out of range");
        if (i > j) throw std::invalid_argument("bracket pairs must be stored with i <= j");
        if (i == j && parity(i) == Parity::even)
            throw std::invalid_argument("diagonal bracket [" + names_[i] + ", " + names_[i] +
                                        "] is only admitted for odd basis elements");
        if (value.size() != dim()) throw std::invalid_argument("bracket value has wrong width");
        if (!is_zero_vec(value)) brackets_.emplace(key, value);
    }
}

LieSuperalgebra LieSuperalgebra::from_table(std::string name, std::vector<std::string> even_names,
                                            std::vector<std::string> odd_names,
                                            const std::vector<BracketDef>& table) {
    std::vector<std::string> all = even_names;
    all.insert(all.end(), odd_names.begin(), odd_names.end());
    auto find = [&](const std::string& nm) -> std::size_t {
        auto it = std::find(all.begin(), all.end(), nm);
        if (it == all.end()) throw std::invalid_argument("unknown basis name '" + nm + "'");
        return static_cast<std::size_t>(it - all.begin());
    };
    std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets;
    const std::size_t m = even_names.size();
    auto parity_of = [&](std::size_t i) { return i < m ? Parity::even : Parity::odd; };
    for (const BracketDef& def : table) {
        std::size_t i = find(def.left), j = find(def.right);
        RatVec value(all.size());
        for (const auto& [nm, coeff] : def.terms) value[find(nm)] += coeff;
        if (i > j) {  // store as [e_j, e_i]; graded antisymmetry fixes the sign
            int sg = swap_sign(parity_of(i), parity_of(j));
            for (Rat& c : value) c *= sg;
            std::swap(i, j);
        }
        if (!brackets.emplace(std::make_pair(i, j), value).second)
            throw std::invalid_argument("duplicate bracket pair [" + def.left + ", " +
                                        def.right + "]");
    }
    return LieSuperalgebra(std::move(name), std::move(even_names), std::move(odd_names),
                           std::move(brackets));
}

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string& basis_name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == basis_name) return i;
    return std::nullopt;
}

RatVec LieSuperalgebra::bracket_basis(std::size_t i, std::size_t j) const {
    if (i > j) {
        // [e_i, e_j] = -(-1)^{|i||j|} [e_j, e_i]
        RatVec v = bracket_basis(j, i);
        Rat sign(swap_sign(parity(i), parity(j)));
        for (Rat& x : v) x *= sign;
        return v;
    }
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return RatVec(dim());
    return it->second;
}

RatVec LieSuperalgebra::bracket(const RatVec& x, const RatVec& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw std::invalid_argument("bracket: coordinate width mismatch");
    RatVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j] == 0) continue;
            RatVec w = bracket_basis(i, j);
            Rat f = x[i] * y[j];
            for (std::size_t k = 0; k < dim(); ++k) out[k] += f * w[k];
        }
    }
    return out;
}

ValidationReport LieSuperalgebra::validate() const {
    ValidationReport rep;
    // (i) homogeneity: [e_i, e_j] must live in the parity-(|i|+|j|) block.
    for (const auto& [key, value] : brackets_) {
        auto [i, j] = key;
        Parity target = parity_sum(parity(i), parity(j));
        RatVec defect(dim());
        bool bad = false;
        for (std::size_t k = 0; k < dim(); ++k)
            if (value[k] != 0 && parity(k) != target) {
                defect[k] = value[k];
                bad = true;
            }
        if (bad) {
            rep.homogeneity_ok = false;
            rep.issues.push_back({ValidationIssue::Axiom::homogeneity, {i, j}, defect});
        }
    }
    // (ii) graded antisymmetry, re-derived from the stored representatives.
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            // [x,y] = -(-1)^{|x||y|} [y,x], i.e. lhs == swap_sign * rhs.
            RatVec lhs = bracket_basis(i, j), rhs = bracket_basis(j, i);
            Rat sign(swap_sign(parity(i), parity(j)));
            RatVec defect(dim());
            bool bad = false;
            for (std::size_t k = 0; k < dim(); ++k) {
                defect[k] = lhs[k] - sign * rhs[k];
                if (defect[k] != 0) bad = true;
            }
            if (bad) {
                rep.antisymmetry_ok = false;
                rep.issues.push_back({ValidationIssue::Axiom::antisymmetry, {i, j}, defect});
            }
        }
    // (iii) squares of even basis elements vanish (forced by storage; checked).
    for (std::size_t i = 0; i < m_; ++i) {
        RatVec sq = bracket_basis(i, i);
        if (!is_zero_vec(sq)) {
            rep.even_square_ok = false;
            rep.issues.push_back({ValidationIssue::Axiom::even_square, {i, i}, sq});
        }
    }
    // (iv) graded Jacobi on all ordered basis triples:
    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) {
                RatVec ei(dim()), ej(dim()), ek(dim());
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                RatVec lhs = bracket(ei, bracket_basis(j, k));
                RatVec t1 = bracket(bracket_basis(i, j), ek);
                RatVec t2 = bracket(ej, bracket_basis(i, k));
                Rat sign = (parity(i) == Parity::odd && parity(j) == Parity::odd) ? Rat(-1) : Rat(1);
                RatVec defect(dim());
                bool bad = false;
                for (std::size_t c = 0; c < dim(); ++c) {
                    defect[c] = lhs[c] - t1[c] - sign * t2[c];
                    if (defect[c] != 0) bad = true;
                }
                if (bad) {
                    rep.jacobi_ok = false;
                    rep.issues.push_back({ValidationIssue::Axiom::jacobi, {i, j, k}, defect});
                }
            }
    return rep;
}

GradedSubspace LieSuperalgebra::derived_subalgebra() const {
    std::vector<RatVec> gens;
    for (const auto& [key, value] : brackets_) gens.push_back(value);
    return GradedSubspace::span(gens, m_, n_);
}

std::vector<GradedSubspace> LieSuperalgebra::lower_central_series() const {
    std::vector<GradedSubspace> series{GradedSubspace::full(m_, n_)};
    for (std::size_t step = 0; step < dim() + 1; ++step) {
        const GradedSubspace& prev = series.back();
        std::vector<RatVec> gens;
        auto bracket_rows = [&](const Mat& rows) {
            for (std::size_t r = 0; r < rows.rows(); ++r)
                for (std::size_t j = 0; j < dim(); ++j) {
                    RatVec ej(dim());
                    ej[j] = 1;
                    RatVec w = bracket(rows.row(r), ej);
                    if (!is_zero_vec(w)) gens.push_back(w);
                }
        };
        bracket_rows(prev.even_rows());
        bracket_rows(prev.odd_rows());
        GradedSubspace next = GradedSubspace::span(gens, m_, n_);
        bool stable = (next == prev);
        series.push_back(next);
        if (stable || next.is_zero()) break;
    }
    return series;
}

std::optional<unsigned> LieSuperalgebra::nilpotency_class() const {
    std::vector<GradedSubspace> series = lower_central_series();
    if (!series.back().is_zero()) return std::nullopt;
    return static_cast<unsigned>(series.size() - 1);
}

GradedSubspace LieSuperalgebra::center() const {
    // z is central iff [z, e_j] = 0 for all j. The constraints decouple per
    // parity block of z, so solve one kernel per block.
    auto block_kernel = [&](std::size_t lo, std::size_t hi) {
        std::size_t width = hi - lo;
        Mat constraints(dim() * dim(), width);
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t col = 0; col < width; ++col) {
                RatVec w = bracket_basis(lo + col, j);
                for (std::size_t k = 0; k < dim(); ++k) constraints.at(j * dim() + k, col) = w[k];
            }
        return constraints.kernel();
    };
    Mat even_ker = block_kernel(0, m_), odd_ker = block_kernel(m_, dim());
    Mat even_rows(even_ker.rows(), dim()), odd_rows(odd_ker.rows(), dim());
    for (std::size_t r = 0; r < even_ker.rows(); ++r)
        for (std::size_t c = 0; c < m_; ++c) even_rows.at(r, c) = even_ker.at(r, c);
    for (std::size_t r = 0; r < odd_ker.rows(); ++r)
        for (std::size_t c = 0; c < n_; ++c) odd_rows.at(r, m_ + c) = odd_ker.at(r, c);
    return GradedSubspace::from_parts(even_rows, odd_rows, m_, n_);
}

bool LieSuperalgebra::is_maximal_class() const {
    return dim() >= 2 && derived_subalgebra().total_dim() == dim() - 2;
}

bool LieSuperalgebra::is_trivial_ls() const {
    for (const auto& [key, value] : brackets_)
        if (parity(key.first) == Parity::odd && parity(key.second) == Parity::odd) return false;
    return true;
}

QuotientResult LieSuperalgebra::quotient(const GradedSubspace& ideal) const {
    if (ideal.ambient_m() != m_ || ideal.ambient_n() != n_)
        throw std::invalid_argument("quotient: subspace has wrong ambient dimensions");
    // Ideal test: [v, e_j] must stay inside for every generator v.
    auto check_rows = [&](const Mat& rows) {
        for (std::size_t r = 0; r < rows.rows(); ++r)
            for (std::size_t j = 0; j < dim(); ++j) {
                RatVec ej(dim());
                ej[j] = 1;
                if (!ideal.contains(bracket(rows.row(r), ej)))
                    throw std::invalid_argument("quotient: subspace is not an ideal");
            }
    };
    check_rows(ideal.even_rows());
    check_rows(ideal.odd_rows());

    std::vector<bool> killed(dim(), false);
    auto mark_pivots = [&](const Mat& rows) {
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            std::size_t lead = 0;
            while (lead < dim() && rows.at(r, lead) == 0) ++lead;
            killed[lead] = true;
        }
    };
    mark_pivots(ideal.even_rows());
    mark_pivots(ideal.odd_rows());

    std::vector<std::size_t> complement;
    std::vector<std::string> even_names, odd_names;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (killed[i]) continue;
        complement.push_back(i);
        (parity(i) == Parity::even ? even_names : odd_names).push_back(names_[i]);
    }
    if (complement.empty()) throw std::invalid_argument("quotient is zero-dimensional");

    std::map<std::pair<std::size_t, std::size_t>, RatVec> new_brackets;
    for (std::size_t u = 0; u < complement.size(); ++u)
        for (std::size_t v = u; v < complement.size(); ++v) {
            std::size_t i = complement[u], j = complement[v];
            if (i == j && parity(i) == Parity::even) continue;
            RatVec reduced = ideal.reduce(bracket_basis(i, j));
            RatVec coords(complement.size());
            for (std::size_t c = 0; c < complement.size(); ++c) coords[c] = reduced[complement[c]];
            if (!is_zero_vec(coords)) new_brackets.emplace(std::make_pair(u, v), coords);
        }
    LieSuperalgebra q(name_ + "/I", even_names, odd_names, std::move(new_brackets));
    return QuotientResult{std::move(q), std::move(complement), ideal};
}

RatVec QuotientResult::project(const RatVec& v) const {
    RatVec reduced = ideal.reduce(v);
    RatVec coords(complement.size());
    for (std::size_t c = 0; c < complement.size(); ++c) coords[c] = reduced[complement[c]];
    return coords;
}

LieSuperalgebra LieSuperalgebra::change_basis(const Mat& s_even, const Mat& s_odd) const {
    if (s_even.rows() != m_ || s_even.cols() != m_ || s_odd.rows() != n_ || s_odd.cols() != n_)
        throw std::invalid_argument("change_basis: block shapes must match (m|n)");
    Mat s(dim(), dim());
    for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = 0; c < m_; ++c) s.at(r, c) = s_even.at(r, c);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) s.at(m_ + r, m_ + c) = s_odd.at(r, c);
    std::optional<Mat> sinv = s.inverse();
    if (!sinv) throw std::invalid_argument("change_basis: matrix is singular");

    auto column = [&](std::size_t c) {
        RatVec v(dim());
        for (std::size_t r = 0; r < dim(); ++r) v[r] = s.at(r, c);
        return v;
    };
    std::map<std::pair<std::size_t, std::size_t>, RatVec> new_brackets;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) {
            if (i == j && parity(i) == Parity::even) continue;
            RatVec w = bracket(column(i), column(j));
            RatVec coords(dim());
            for (std::size_t r = 0; r < dim(); ++r)
                for (std::size_t k = 0; k < dim(); ++k) coords[r] += sinv->at(r, k) * w[k];
            if (!is_zero_vec(coords)) new_brackets.emplace(std::make_pair(i, j), coords);
        }
    std::vector<std::string> even_names(names_.begin(), names_.begin() + m_);
    std::vector<std::string> odd_names(names_.begin() + m_, names_.end());
    return LieSuperalgebra(name_, even_names, odd_names, std::move(new_brackets));
}

LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b,
                           const std::string& name) {
    std::vector<std::string> even_names, odd_names;
    std::set<std::string> used;
    auto add_name = [&](std::string nm, bool even) {
        while (used.count(nm)) nm += "'";
        used.insert(nm);
        (even ? even_names : odd_names).push_back(nm);
    };
    for (std::size_t i = 0; i < a.m(); ++i) add_name(a.basis_name(i), true);
    for (std::size_t i = 0; i < b.m(); ++i) add_name(b.basis_name(i), true);
    for (std::size_t i = a.m(); i < a.dim(); ++i) add_name(a.basis_name(i), false);
    for (std::size_t i = b.m(); i < b.dim(); ++i) add_name(b.basis_name(i), false);

    std::size_t dim_total = a.dim() + b.dim();
    auto map_a = [&](std::size_t i) { return i < a.m() ? i : a.m() + b.m() + (i - a.m()); };
    auto map_b = [&](std::size_t i) {
        return i < b.m() ? a.m() + i : a.m() + b.m() + a.n() + (i - b.m());
    };
    std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets;
    for (const auto& [key, value] : a.stored_brackets()) {
        RatVec v(dim_total);
        for (std::size_t k = 0; k < a.dim(); ++k) v[map_a(k)] = value[k];
        brackets.emplace(std::make_pair(map_a(key.first), map_a(key.second)), v);
    }
    for (const auto& [key, value] : b.stored_brackets()) {
        RatVec v(dim_total);
        for (std::size_t k = 0; k < b.dim(); ++k) v[map_b(k)] = value[k];
        brackets.emplace(std::make_pair(map_b(key.first), map_b(key.second)), v);
    }
    return LieSuperalgebra(name, even_names, odd_names, std::move(brackets));
}

std::optional<Parity> homogeneous_parity(const RatVec& v, std::size_t m) {
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) (i < m ? has_even : has_odd) = true;
    if (has_even == has_odd) return std::nullopt;  // zero or mixed
    return has_even ? Parity::even : Parity::odd;
}

std::string format_vector(const LieSuperalgebra& L, const RatVec& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rat c = v[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat mag = abs(c);
        if (mag != 1) out << to_string(mag) << " ";
        out << L.basis_name(i);
        first = false;
    }
    if (first) return "0";
    return out.str();
}

std::string describe_issue(const LieSuperalgebra& L, const ValidationIssue& issue) {
    std::ostringstream out;
    auto name = [&](std::size_t i) { return L.basis_name(i); };
    switch (issue.axiom) {
        case ValidationIssue::Axiom::homogeneity:
            out << "homogeneity violated at [" << name(issue.indices[0]) << ", "
                << name(issue.indices[1]) << "]: component outside the target parity block: "
                << format_vector(L, issue.defect);
            break;
        case ValidationIssue::Axiom::antisymmetry:
            out << "graded antisymmetry violated at (" << name(issue.indices[0]) << ", "
                << name(issue.indices[1]) << "): defect " << format_vector(L, issue.defect);
            break;
        case ValidationIssue::Axiom::even_square:
            out << "even square [" << name(issue.indices[0]) << ", " << name(issue.indices[0])
                << "] nonzero: " << format_vector(L, issue.defect);
            break;
        case ValidationIssue::Axiom::jacobi:
            out << "graded Jacobi violated at (" << name(issue.indices[0]) << ", "
                << name(issue.indices[1]) << ", " << name(issue.indices[2]) << "): defect "
                << format_vector(L, issue.defect);
            break;
    }
    return out.str();
}

}  // namespace superschur
