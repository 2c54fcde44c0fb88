#include "darboux3/search.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <set>

#include "darboux3/parse.hpp"
#include "darboux3/unipoly.hpp"

namespace dbx {

namespace {

std::string point_key(const std::array<Rational, 4>& k) {
    return k[0].str() + "," + k[1].str() + "," + k[2].str() + "," + k[3].str();
}

// Appends the nonconstant nullspace polynomials of the Lie matrix at a concrete
// cofactor point, skipping duplicates.
void emit_certificates_at(const VectorField& X, const LieMatrix& lm,
                          const std::array<Rational, 4>& k, SearchReport& report,
                          std::set<std::string>& seen) {
    for (const auto& v : nullspace(lm.instantiate(k))) {
        Polynomial f = polynomial_from_coefficients(lm.col_monomials, v);
        if (f.is_constant()) continue;
        DarbouxCertificate cert;
        cert.kind = DarbouxCertificate::Kind::polynomial;
        cert.f = std::move(f);
        cert.cofactor = {k[0], k[1], k[2], k[3]};
        cert.verified = verify_certificate(X, cert);
        const std::string key = format_polynomial(cert.f) + "|" + point_key(k);
        if (seen.insert(key).second) report.certificates.push_back(std::move(cert));
    }
}

}  // namespace

SearchReport find_polynomial_first_integrals(const VectorField& X, int n) {
    const LieMatrix lm = build_lie_matrix(X, n, CofactorMode::zero);
    SearchReport report;
    report.system = X.description;
    report.degree_bound = n;
    report.mode = "zero";

    const std::array<Rational, 4> zero{Rational(0), Rational(0), Rational(0), Rational(0)};
    BranchRecord rec;
    rec.pinned = true;
    rec.point = zero;
    rec.nullity = static_cast<int>(nullspace(lm.instantiate(zero)).size());
    report.branches.push_back(rec);

    std::set<std::string> seen;
    emit_certificates_at(X, lm, zero, report, seen);
    return report;
}

SearchReport find_darboux_constant_cofactor(const VectorField& X, int n) {
    const LieMatrix lm = build_lie_matrix(X, n, CofactorMode::constant);
    SearchReport report;
    report.system = X.description;
    report.degree_bound = n;
    report.mode = "constant";

    // det(M^T M) is monic of degree 2*cols in k0; recover it exactly from
    // fraction-free determinant evaluations at 2*cols + 1 nodes.
    const Eigen::Index cols = lm.cols();
    const int deg = static_cast<int>(2 * cols);
    std::vector<Rational> nodes, values;
    for (int i = 0; i <= deg; ++i) {
        const long mag = (i + 1) / 2;
        const Rational node(i % 2 == 1 ? mag : -mag);
        const RatMatrix m = lm.instantiate({node, Rational(0), Rational(0), Rational(0)});
        const RatMatrix gram = m.transpose() * m;
        nodes.push_back(node);
        values.push_back(bareiss_determinant(gram));
    }
    const UniPoly det = uni_interpolate(nodes, values);
    if (uni_degree(det) != deg || !det.back().is_one())
        throw Error("internal: cofactor determinant is not monic");

    RationalRoots roots = uni_rational_roots(det);
    std::sort(roots.roots.begin(), roots.roots.end());
    for (const auto& f : roots.unresolved) report.unresolved.push_back(format_unipoly(f, "k0"));
    if (!roots.complete) report.partial = true;

    std::set<std::string> seen;
    for (const auto& r : roots.roots) {
        const std::array<Rational, 4> k{r, Rational(0), Rational(0), Rational(0)};
        BranchRecord rec;
        rec.constraints.push_back((KPoly::variable(0) - KPoly(r)).primitive_normalized().format());
        rec.pinned = true;
        rec.point = k;
        rec.nullity = static_cast<int>(nullspace(lm.instantiate(k)).size());
        report.branches.push_back(rec);
        emit_certificates_at(X, lm, k, report, seen);
    }
    return report;
}

namespace {

UniPoly uni_from_kpoly(const KPoly& p, int var) {
    UniPoly u;
    for (const auto& [e, c] : p.terms()) {
        const std::size_t pow = static_cast<std::size_t>(e[var]);
        if (u.size() <= pow) u.resize(pow + 1, Rational(0));
        u[pow] += c;
    }
    uni_trim(u);
    return u;
}

KPoly kpoly_from_uni(const UniPoly& u, int var) {
    KPoly p;
    for (std::size_t i = 0; i < u.size(); ++i) {
        KPoly::Expo e{0, 0, 0, 0};
        e[var] = static_cast<std::int16_t>(i);
        p.add_term(e, u[i]);
    }
    return p;
}

std::string canon(const KPoly& p) { return p.primitive_normalized().format(); }

// Splits the zero set of p into factors: monomial variables, rational-root linear
// pieces, k^2 - r pieces from even polynomials, constant-discriminant quadratics,
// and whatever chunk resists. Every factor is primitive and nonconstant; the union
// of the factors' zero sets equals the zero set of p.
void collect_factors(const KPoly& p, std::vector<KPoly>& out) {
    KPoly q = p.primitive_normalized();
    if (q.is_constant()) return;

    for (int v = 0; v < 4; ++v) {
        int minexp = INT_MAX;
        for (const auto& [e, c] : q.terms()) minexp = std::min<int>(minexp, e[v]);
        if (minexp > 0) {
            out.push_back(KPoly::variable(v));
            KPoly::Expo me{0, 0, 0, 0};
            me[v] = static_cast<std::int16_t>(minexp);
            KPoly mono;
            mono.add_term(me, Rational(1));
            q = *q.divide_exact(mono);
        }
    }
    if (q.is_constant()) return;

    std::vector<int> vars;
    for (int v = 0; v < 4; ++v)
        if (q.depends_on(v)) vars.push_back(v);

    if (vars.size() == 1) {
        const int v = vars[0];
        if (q.degree() == 1) {
            out.push_back(q.primitive_normalized());
            return;
        }
        const RationalRoots rr = uni_rational_roots(uni_from_kpoly(q, v));
        for (const auto& r : rr.roots) out.push_back((KPoly::variable(v) - KPoly(r)).primitive_normalized());
        for (const auto& uf : rr.unresolved) {
            bool even = true;
            for (std::size_t i = 1; i < uf.size() && even; i += 2)
                if (!uf[i].is_zero()) even = false;
            if (!even) {
                out.push_back(kpoly_from_uni(uf, v).primitive_normalized());
                continue;
            }
            UniPoly half;
            for (std::size_t i = 0; i < uf.size(); i += 2) half.push_back(uf[i]);
            uni_trim(half);
            const RationalRoots hr = uni_rational_roots(half);
            for (const auto& r : hr.roots) {
                KPoly f;
                KPoly::Expo e{0, 0, 0, 0};
                e[v] = 2;
                f.add_term(e, Rational(1));
                f.add_term({0, 0, 0, 0}, -r);
                out.push_back(f.primitive_normalized());
            }
            for (const auto& hf : hr.unresolved) {
                UniPoly lift(2 * hf.size() - 1, Rational(0));
                for (std::size_t i = 0; i < hf.size(); ++i) lift[2 * i] = hf[i];
                out.push_back(kpoly_from_uni(lift, v).primitive_normalized());
            }
        }
        return;
    }

    // Quadratic in one unknown with constant leading coefficient and constant
    // perfect-square discriminant splits into two pieces affine in that unknown.
    for (int v : vars) {
        if (q.degree_in(v) != 2) continue;
        const KPoly A = q.coeff_in(v, 2);
        if (!A.is_constant()) continue;
        const KPoly B = q.coeff_in(v, 1), C = q.coeff_in(v, 0);
        const KPoly disc = B * B - Rational(4) * (A * C);
        if (!disc.is_constant()) continue;
        const auto s = sqrt_rational(disc.constant_value());
        if (!s) continue;
        const Rational a2 = Rational(2) * A.constant_value();
        KPoly f1 = a2 * KPoly::variable(v) + B - KPoly(*s);
        KPoly f2 = a2 * KPoly::variable(v) + B + KPoly(*s);
        collect_factors(f1, out);
        collect_factors(f2, out);
        return;
    }
    out.push_back(q);
}

std::vector<KPoly> split_factors(const KPoly& p) {
    std::vector<KPoly> raw;
    collect_factors(p, raw);
    std::vector<KPoly> out;
    std::set<std::string> seen;
    for (auto& f : raw)
        if (seen.insert(f.format()).second) out.push_back(std::move(f));
    return out;
}

struct BranchState {
    std::vector<KPoly> e;  // row-major over the Lie matrix shape
    std::vector<char> row_used, col_used;
    std::vector<KPoly> residual;  // non-affine constraint factors, conjunction
    std::vector<std::string> constraint_strs;
    std::vector<KPoly> assumptions;
    std::vector<std::string> assumption_strs;
    std::vector<std::string> irrational_strs;  // rootless univariate constraint factors
    std::vector<std::pair<int, KPoly>> solved;  // k_var := expr over still-free vars
    std::array<char, 4> var_solved{0, 0, 0, 0};
    int pivots = 0;
};

class LinearCofactorSearch {
public:
    LinearCofactorSearch(const VectorField& X, const LieMatrix& lm, int max_branches)
        : X_(X), lm_(lm), max_branches_(max_branches), rows_(lm.rows()), cols_(lm.cols()) {}

    SearchReport run() {
        SearchReport report;
        report.system = X_.description;
        report.degree_bound = lm_.degree_bound;
        report.mode = "linear";

        BranchState root;
        root.e = lm_.entries;
        root.row_used.assign(rows_, 0);
        root.col_used.assign(cols_, 0);
        push_branch(std::move(root), report);

        while (!queue_.empty()) {
            BranchState st = std::move(queue_.front());
            queue_.pop_front();
            step(std::move(st), report);
        }

        for (const auto& u : unresolved_) report.unresolved.push_back(u);
        std::set<std::string> seen;
        for (const auto& k : candidate_points_) emit_certificates_at(X_, lm_, k, report, seen);
        return report;
    }

private:
    KPoly& at(BranchState& s, Eigen::Index i, Eigen::Index j) {
        return s.e[static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j)];
    }

    static bool assumed(const BranchState& s, const std::string& key) {
        if (std::find(s.assumption_strs.begin(), s.assumption_strs.end(), key) !=
            s.assumption_strs.end())
            return true;
        for (const auto& a : s.assumptions)
            if (canon(a) == key) return true;
        return false;
    }

    // Applies k_var := expr everywhere. Returns false when the state becomes inconsistent.
    bool substitute(BranchState& s, int var, const KPoly& expr) {
        for (auto& p : s.e)
            if (p.depends_on(var)) p = p.substitute(var, expr);
        for (auto& [v, sol] : s.solved)
            if (sol.depends_on(var)) sol = sol.substitute(var, expr);
        for (auto& p : s.residual)
            if (p.depends_on(var)) p = p.substitute(var, expr);
        for (auto& p : s.assumptions)
            if (p.depends_on(var)) p = p.substitute(var, expr);
        s.solved.emplace_back(var, expr);
        s.var_solved[var] = 1;
        return simplify(s);
    }

    // Normalizes residual constraints and assumptions; promotes residuals that became
    // affine to substitutions. False when a contradiction appears.
    bool simplify(BranchState& s) {
        for (;;) {
            bool changed = false;
            for (std::size_t i = 0; i < s.residual.size(); ++i) {
                KPoly& c = s.residual[i];
                if (c.is_zero()) {
                    s.residual.erase(s.residual.begin() + i);
                    --i;
                    changed = true;
                    continue;
                }
                if (c.is_constant()) return false;
                if (c.is_affine()) {
                    int var = -1;
                    for (int v = 0; v < 4 && var < 0; ++v)
                        if (!c.linear_coeff(v).is_zero()) var = v;
                    const KPoly expr = *c.solve_affine_for(var);
                    s.residual.erase(s.residual.begin() + i);
                    if (!substitute(s, var, expr)) return false;
                    return simplify(s);
                }
            }
            for (std::size_t i = 0; i < s.assumptions.size(); ++i) {
                if (s.assumptions[i].is_zero()) return false;
                if (s.assumptions[i].is_constant()) {
                    s.assumptions.erase(s.assumptions.begin() + i);
                    s.assumption_strs.erase(s.assumption_strs.begin() + i);
                    --i;
                    changed = true;
                }
            }
            if (!changed) return true;
        }
    }

    // Records the constraint factor f = 0. Returns false when inconsistent.
    bool add_single_constraint(BranchState& s, const KPoly& f) {
        const std::string key = canon(f);
        if (assumed(s, key)) return false;
        s.constraint_strs.push_back(key);
        if (f.is_affine()) {
            int var = -1;
            for (int v = 0; v < 4 && var < 0; ++v)
                if (!f.linear_coeff(v).is_zero()) var = v;
            return substitute(s, var, *f.solve_affine_for(var));
        }
        int nvars = 0;
        for (int v = 0; v < 4; ++v)
            if (f.depends_on(v)) ++nvars;
        if (nvars == 1 &&
            std::find(s.irrational_strs.begin(), s.irrational_strs.end(), key) ==
                s.irrational_strs.end())
            s.irrational_strs.push_back(key);
        s.residual.push_back(f.primitive_normalized());
        return simplify(s);
    }

    static void trace(const char* what, const BranchState& s) {
        if (!std::getenv("DBX_TRACE")) return;
        std::string c, a;
        for (const auto& t : s.constraint_strs) c += t + ";";
        for (const auto& t : s.assumption_strs) a += t + ";";
        std::fprintf(stderr, "[%s] C={%s} A={%s} pivots=%d\n", what, c.c_str(), a.c_str(),
                     s.pivots);
    }

    void push_branch(BranchState s, SearchReport& report) {
        if (!simplify(s)) {
            trace("dead-simplify", s);
            return;
        }
        for (const auto& r : s.residual)
            if (assumed(s, canon(r))) {
                trace("dead-residual-assumed", s);
                return;
            }
        std::string key;
        {
            std::vector<std::string> c = s.constraint_strs, a = s.assumption_strs, subs;
            for (const auto& [v, expr] : s.solved)
                subs.push_back("k" + std::to_string(v) + "=" + expr.format());
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            std::sort(subs.begin(), subs.end());
            for (const auto& t : c) key += t + ";";
            key += "|";
            for (const auto& t : a) key += t + ";";
            key += "|";
            for (const auto& t : subs) key += t + ";";
        }
        if (!state_seen_.insert(key).second) {
            trace("dead-dup", s);
            return;
        }
        ++created_;
        queue_.push_back(std::move(s));
        (void)report;
    }

    // Divides the row by rational content, by assumed-nonzero monomial variables,
    // and by assumed-nonzero polynomial factors.
    void reduce_row(BranchState& s, Eigen::Index i) {
        std::vector<Eigen::Index> live;
        for (Eigen::Index j = 0; j < cols_; ++j)
            if (!s.col_used[j] && !at(s, i, j).is_zero()) live.push_back(j);
        if (live.empty()) return;

        mpz_class den_lcm = 1;
        for (Eigen::Index j : live)
            for (const auto& [e, c] : at(s, i, j).terms())
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        mpz_class num_gcd = 0;
        for (Eigen::Index j : live)
            for (const auto& [e, c] : at(s, i, j).terms()) {
                mpz_class scaled = c.num() * (den_lcm / c.den());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
            }
        if (num_gcd != 0) {
            Rational scale(mpq_class(den_lcm, num_gcd));
            if (at(s, i, live.front()).terms().begin()->second.sign() < 0) scale = -scale;
            if (!scale.is_one())
                for (Eigen::Index j : live) at(s, i, j) = scale * at(s, i, j);
        }

        for (int v = 0; v < 4; ++v) {
            if (!assumed(s, "k" + std::to_string(v))) continue;
            int minexp = INT_MAX;
            for (Eigen::Index j : live)
                for (const auto& [e, c] : at(s, i, j).terms()) minexp = std::min<int>(minexp, e[v]);
            if (minexp <= 0) continue;
            KPoly::Expo me{0, 0, 0, 0};
            me[v] = static_cast<std::int16_t>(minexp);
            KPoly mono;
            mono.add_term(me, Rational(1));
            for (Eigen::Index j : live) at(s, i, j) = *at(s, i, j).divide_exact(mono);
        }

        for (const auto& a : s.assumptions) {
            if (a.is_affine() && a.degree() < 1) continue;
            for (int round = 0; round < 3; ++round) {
                std::vector<KPoly> quot(live.size());
                bool all = true;
                for (std::size_t t = 0; t < live.size() && all; ++t) {
                    auto q = at(s, i, live[t]).divide_exact(a);
                    if (!q)
                        all = false;
                    else
                        quot[t] = std::move(*q);
                }
                if (!all) break;
                for (std::size_t t = 0; t < live.size(); ++t) at(s, i, live[t]) = std::move(quot[t]);
            }
        }
    }

    void step(BranchState s, SearchReport& report) {
        if (!simplify(s)) return;
        for (;;) {
            // A residual that factors must branch over its factors.
            for (std::size_t ri = 0; ri < s.residual.size(); ++ri) {
                const KPoly r = s.residual[ri];
                std::vector<KPoly> fs = split_factors(r);
                std::vector<KPoly> live;
                for (auto& f : fs)
                    if (!assumed(s, canon(f))) live.push_back(std::move(f));
                if (live.empty()) return;
                if (live.size() == 1 && canon(live[0]) == canon(r)) {
                    int nvars = 0;
                    for (int v = 0; v < 4; ++v)
                        if (r.depends_on(v)) ++nvars;
                    const std::string key = canon(r);
                    if (nvars == 1 && std::find(s.irrational_strs.begin(),
                                                s.irrational_strs.end(),
                                                key) == s.irrational_strs.end())
                        s.irrational_strs.push_back(key);
                    continue;
                }
                if (created_ + static_cast<long>(live.size()) > max_branches_) {
                    report.partial = true;
                    finalize(std::move(s), report);
                    return;
                }
                s.residual.erase(s.residual.begin() + ri);
                for (std::size_t t = 0; t < live.size(); ++t) {
                    BranchState child = s;
                    if (add_single_constraint(child, live[t])) push_branch(std::move(child), report);
                }
                return;
            }

            // Lowest-degree pivot, ties broken by column then row position. Entries
            // divisible by a constrained-zero factor are themselves zero.
            Eigen::Index bi = -1, bj = -1;
            int bdeg = 0;
            for (Eigen::Index j = 0; j < cols_; ++j) {
                if (s.col_used[j]) continue;
                for (Eigen::Index i = 0; i < rows_; ++i) {
                    if (s.row_used[i]) continue;
                    KPoly& p = at(s, i, j);
                    if (p.is_zero()) continue;
                    if (!p.is_constant()) {
                        bool killed = false;
                        for (const auto& r : s.residual)
                            if (p.divide_exact(r)) {
                                p = KPoly();
                                killed = true;
                                break;
                            }
                        if (killed) continue;
                    }
                    const int d = p.degree();
                    if (bi < 0 || d < bdeg) {
                        bi = i;
                        bj = j;
                        bdeg = d;
                        if (d == 0) break;
                    }
                }
                if (bdeg == 0 && bi >= 0) break;
            }
            if (bi < 0) {
                finalize(std::move(s), report);
                return;
            }
            if (bdeg == 0) {
                eliminate(s, bi, bj);
                continue;
            }

            const KPoly pivot = at(s, bi, bj);
            std::vector<KPoly> fs = split_factors(pivot);
            std::vector<KPoly> live;
            for (auto& f : fs)
                if (!assumed(s, canon(f))) live.push_back(std::move(f));
            if (live.empty()) {
                // Every factor is assumed nonzero: the pivot is a unit.
                eliminate(s, bi, bj);
                continue;
            }
            if (created_ + static_cast<long>(live.size()) + 1 > max_branches_) {
                report.partial = true;
                finalize(std::move(s), report);
                return;
            }
            for (const auto& f : live) {
                BranchState child = s;
                if (!add_single_constraint(child, f)) continue;
                if (!f.is_affine()) at(child, bi, bj) = KPoly();
                push_branch(std::move(child), report);
            }
            for (auto& f : live) {
                s.assumption_strs.push_back(canon(f));
                s.assumptions.push_back(std::move(f));
            }
            eliminate(s, bi, bj);
            push_branch(std::move(s), report);
            return;
        }
    }

    void eliminate(BranchState& s, Eigen::Index pi, Eigen::Index pj) {
        const KPoly pivot = at(s, pi, pj);
        if (pivot.is_constant()) {
            const Rational inv = pivot.constant_value().inverse();
            for (Eigen::Index i = 0; i < rows_; ++i) {
                if (s.row_used[i] || i == pi) continue;
                const KPoly coeff = at(s, i, pj);
                if (coeff.is_zero()) continue;
                const KPoly factor = inv * coeff;
                bool touched = false;
                for (Eigen::Index j = 0; j < cols_; ++j) {
                    if (s.col_used[j]) continue;
                    const KPoly& top = at(s, pi, j);
                    if (!top.is_zero()) {
                        at(s, i, j) -= factor * top;
                        touched = true;
                    }
                }
                at(s, i, pj) = KPoly();
                if (touched) reduce_row(s, i);
            }
        } else {
            for (Eigen::Index i = 0; i < rows_; ++i) {
                if (s.row_used[i] || i == pi) continue;
                const KPoly coeff = at(s, i, pj);
                if (coeff.is_zero()) continue;
                for (Eigen::Index j = 0; j < cols_; ++j) {
                    if (s.col_used[j]) continue;
                    at(s, i, j) = pivot * at(s, i, j) - coeff * at(s, pi, j);
                }
                at(s, i, pj) = KPoly();
                reduce_row(s, i);
            }
        }
        s.row_used[pi] = 1;
        s.col_used[pj] = 1;
        ++s.pivots;
    }

    void add_candidate(const std::array<Rational, 4>& k) {
        if (candidate_seen_.insert(point_key(k)).second) candidate_points_.push_back(k);
    }

    static void dedupe_keep_order(std::vector<std::string>& v) {
        std::set<std::string> seen;
        std::vector<std::string> out;
        for (auto& t : v)
            if (seen.insert(t).second) out.push_back(std::move(t));
        v = std::move(out);
    }

    void finalize(BranchState s, SearchReport& report) {
        trace("terminal", s);
        BranchRecord rec;
        rec.constraints = s.constraint_strs;
        rec.assumptions = s.assumption_strs;
        dedupe_keep_order(rec.constraints);
        dedupe_keep_order(rec.assumptions);

        std::vector<int> free_vars;
        for (int v = 0; v < 4; ++v)
            if (!s.var_solved[v]) free_vars.push_back(v);

        if (free_vars.empty()) {
            std::array<Rational, 4> k{Rational(0), Rational(0), Rational(0), Rational(0)};
            for (const auto& [v, expr] : s.solved) k[v] = expr.constant_value();
            rec.pinned = true;
            rec.point = k;
            rec.nullity = static_cast<int>(cols_ - rank(lm_.instantiate(k)));
            add_candidate(k);
            record_branch(std::move(rec), report);
            return;
        }

        rec.pinned = false;
        rec.nullity = static_cast<int>(cols_) - s.pivots;

        if (!s.irrational_strs.empty()) {
            // Only irrational cofactor values satisfy the constraints.
            if (rec.nullity > 0)
                for (const auto& u : s.irrational_strs) unresolved_.insert(u);
            record_branch(std::move(rec), report);
            return;
        }

        // Back-substitution: free variables range over small canonical values that
        // respect the assumptions; solved variables follow.
        std::vector<std::vector<Rational>> probe_sets(free_vars.size());
        for (std::size_t fi = 0; fi < free_vars.size(); ++fi) {
            const int v = free_vars[fi];
            for (long t = 0; probe_sets[fi].size() < 4 && t <= 12; ++t) {
                for (int sgn : {1, -1}) {
                    if (t == 0 && sgn < 0) continue;
                    const Rational cand(sgn * t);
                    bool ok = true;
                    for (const auto& a : s.assumptions) {
                        bool only_v = a.depends_on(v);
                        for (int w = 0; w < 4 && only_v; ++w)
                            if (w != v && a.depends_on(w)) only_v = false;
                        if (!only_v) continue;
                        std::array<Rational, 4> k{Rational(0), Rational(0), Rational(0),
                                                  Rational(0)};
                        k[v] = cand;
                        if (a.evaluate(k).is_zero()) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok && probe_sets[fi].size() < 4) probe_sets[fi].push_back(cand);
                }
            }
            if (probe_sets[fi].empty()) probe_sets[fi].push_back(Rational(0));
        }

        bool found = false;
        std::vector<std::size_t> odo(free_vars.size(), 0);
        for (;;) {
            std::array<Rational, 4> k{Rational(0), Rational(0), Rational(0), Rational(0)};
            for (std::size_t fi = 0; fi < free_vars.size(); ++fi)
                k[free_vars[fi]] = probe_sets[fi][odo[fi]];
            for (const auto& [v, expr] : s.solved) k[v] = expr.evaluate(k);
            bool ok = true;
            for (const auto& c : s.residual)
                if (!c.evaluate(k).is_zero()) {
                    ok = false;
                    break;
                }
            for (const auto& a : s.assumptions)
                if (ok && a.evaluate(k).is_zero()) ok = false;
            if (ok) {
                add_candidate(k);
                found = true;
            }
            std::size_t d = 0;
            while (d < odo.size() && ++odo[d] == probe_sets[d].size()) odo[d++] = 0;
            if (d == odo.size()) break;
        }
        if (!found && rec.nullity > 0 && !s.residual.empty()) report.partial = true;
        record_branch(std::move(rec), report);
    }

    void record_branch(BranchRecord rec, SearchReport& report) {
        std::string key;
        for (const auto& c : rec.constraints) key += c + ";";
        key += "|";
        for (const auto& a : rec.assumptions) key += a + ";";
        key += "|" + std::to_string(rec.nullity);
        if (branch_seen_.insert(key).second) report.branches.push_back(std::move(rec));
    }

    const VectorField& X_;
    const LieMatrix& lm_;
    const long max_branches_;
    const Eigen::Index rows_, cols_;

    std::deque<BranchState> queue_;
    long created_ = 0;
    std::vector<std::array<Rational, 4>> candidate_points_;
    std::set<std::string> candidate_seen_;
    std::set<std::string> state_seen_;
    std::set<std::string> branch_seen_;
    std::set<std::string> unresolved_;
};

}  // namespace

SearchReport find_darboux_linear_cofactor(const VectorField& X, int n, int max_branches) {
    const LieMatrix lm = build_lie_matrix(X, n, CofactorMode::linear);
    return LinearCofactorSearch(X, lm, max_branches).run();
}

SearchReport find_exponential_factors(const VectorField& X, int d,
                                      const std::optional<DarbouxCertificate>& h) {
    Polynomial hp(Rational(1));
    Cofactor kh{Rational(0), Rational(0), Rational(0), Rational(0)};
    if (h) {
        if (h->kind != DarbouxCertificate::Kind::polynomial || !h->verified)
            throw UnverifiedDenominator("denominator needs a verified polynomial certificate");
        if (!h->cofactor.is_constant())
            throw UnverifiedDenominator("denominator cofactor must be constant");
        if (!verify_certificate(X, *h))
            throw UnverifiedDenominator("denominator certificate failed verification");
        hp = h->f;
        kh = h->cofactor;
    }

    SearchReport report;
    report.system = X.description;
    report.degree_bound = d;
    report.mode = "exponential";
    if (d < 1) throw DegreeError("degree bound must be at least 1");

    const std::int64_t xd = X.degree();
    const std::int64_t rmax =
        std::max<std::int64_t>({d + std::max<std::int64_t>(xd - 1, 0), d, hp.degree() + 1});
    const auto row_monomials = monomials_up_to_degree(static_cast<int>(rmax));
    const auto g_monomials = monomials_up_to_degree(d);
    const Eigen::Index gcols = static_cast<Eigen::Index>(g_monomials.size());

    std::map<Monomial, Eigen::Index, GrlexDescending> row_index;
    for (std::size_t i = 0; i < row_monomials.size(); ++i)
        row_index.emplace(row_monomials[i], static_cast<Eigen::Index>(i));

    RatMatrix m = RatMatrix::Zero(static_cast<Eigen::Index>(row_monomials.size()), gcols + 4);
    const Polynomial khp = kh.to_polynomial();
    for (Eigen::Index j = 0; j < gcols; ++j) {
        const Polynomial gm(g_monomials[static_cast<std::size_t>(j)], Rational(1));
        const Polynomial col = lie_derivative(X, gm) - khp * gm;
        for (const auto& [rm, c] : col.terms()) m(row_index.at(rm), j) += c;
    }
    const Monomial lmons[4] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 4; ++i) {
        const Polynomial col = -(Polynomial(lmons[i], Rational(1)) * hp);
        for (const auto& [rm, c] : col.terms()) m(row_index.at(rm), gcols + i) += c;
    }

    const auto basis = nullspace(m);
    BranchRecord rec;
    rec.nullity = static_cast<int>(basis.size());
    report.branches.push_back(rec);

    for (const auto& v : basis) {
        Polynomial g;
        for (Eigen::Index j = 0; j < gcols; ++j)
            g.add_term(g_monomials[static_cast<std::size_t>(j)], v(j));
        if (g.is_constant()) continue;
        DarbouxCertificate cert;
        cert.kind = DarbouxCertificate::Kind::exponential;
        cert.g = std::move(g);
        cert.h = hp;
        cert.cofactor = {v(gcols + 0), v(gcols + 1), v(gcols + 2), v(gcols + 3)};
        if (!hp.is_constant()) cert.denominator_cofactor = kh;
        cert.verified = verify_certificate(X, cert);
        report.certificates.push_back(std::move(cert));
    }
    return report;
}

}  // namespace dbx
