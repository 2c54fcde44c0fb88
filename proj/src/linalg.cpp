#include "darboux3/linalg.hpp"

namespace dbx {

namespace {

// Scales each row by the lcm of its denominators; returns the per-row factors.
std::vector<Rational> scale_rows_integral(RatMatrix& m) {
    std::vector<Rational> factors;
    factors.reserve(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        const Rational f = Rational(l);
        if (!f.is_one())
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= f;
        factors.push_back(f);
    }
    return factors;
}

}  // namespace

Rational bareiss_determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return Rational(1);

    RatMatrix a = m;
    const auto factors = scale_rows_integral(a);
    Rational denom(1);
    for (const auto& f : factors) denom *= f;

    int sign = 1;
    Rational prev(1);
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k).is_zero()) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (!a(i, k).is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0) return Rational(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Rational(0);
        }
        prev = a(k, k);
    }
    Rational det = a(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det / denom;
}

Echelon row_echelon(const RatMatrix& m) {
    Echelon e;
    e.mat = m;
    scale_rows_integral(e.mat);
    RatMatrix& a = e.mat;
    const Eigen::Index rows = a.rows(), cols = a.cols();

    Rational prev(1);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) a.row(r).swap(a.row(pivot));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = Rational(0);
        }
        prev = a(r, c);
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

Eigen::Index rank(const RatMatrix& m) {
    return row_echelon(m).rank;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    const Echelon e = row_echelon(m);
    const Eigen::Index cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v = RatVector::Zero(cols);
        v(free) = Rational(1);
        // Back-substitute through the echelon rows in reverse.
        for (Eigen::Index r = e.rank - 1; r >= 0; --r) {
            const Eigen::Index pc = e.pivot_cols[r];
            Rational s(0);
            for (Eigen::Index j = pc + 1; j < cols; ++j)
                if (!v(j).is_zero()) s += e.mat(r, j) * v(j);
            v(pc) = -s / e.mat(r, pc);
        }
        // Normalize to coprime integers, first nonzero entry positive.
        mpz_class den_lcm = 1;
        for (Eigen::Index i = 0; i < cols; ++i)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v(i).den().get_mpz_t());
        mpz_class num_gcd = 0;
        for (Eigen::Index i = 0; i < cols; ++i) {
            mpz_class scaled = v(i).num() * (den_lcm / v(i).den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        Rational scale(mpq_class(den_lcm, num_gcd));
        int lead_sign = 0;
        for (Eigen::Index i = 0; i < cols && lead_sign == 0; ++i) lead_sign = v(i).sign();
        if (lead_sign < 0) scale = -scale;
        for (Eigen::Index i = 0; i < cols; ++i) v(i) *= scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
    if (a.empty() && b.empty()) return true;
    const Eigen::Index cols = a.empty() ? b.front().size() : a.front().size();
    RatMatrix ma(static_cast<Eigen::Index>(a.size()), cols);
    for (std::size_t i = 0; i < a.size(); ++i) ma.row(static_cast<Eigen::Index>(i)) = a[i].transpose();
    RatMatrix mb(static_cast<Eigen::Index>(b.size()), cols);
    for (std::size_t i = 0; i < b.size(); ++i) mb.row(static_cast<Eigen::Index>(i)) = b[i].transpose();
    return same_row_space(ma, mb);
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) return false;
    RatMatrix stacked(a.rows() + b.rows(), a.cols());
    stacked.topRows(a.rows()) = a;
    stacked.bottomRows(b.rows()) = b;
    const auto ra = rank(a), rb = rank(b), rs = rank(stacked);
    return ra == rb && rb == rs;
}

}  // namespace dbx
