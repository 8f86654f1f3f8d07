#pragma once

// Exact rational linear algebra: Gaussian elimination with full pivot-free
// rational arithmetic. Sizes here are tiny (d <= 6 rows/cols for the core,
// a few dozen rows for facet systems), so simplicity wins over fraction-free
// tricks.

#include "parvo/rational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace parvo {

inline QVec qvec_zero(int n) { return QVec(static_cast<std::size_t>(n), Rat(0)); }

inline QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec qvec_neg(const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline QVec qvec_scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Rat dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const QVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

inline QMat qmat_identity(int n) {
    QMat m(static_cast<std::size_t>(n), qvec_zero(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMat transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat t(a[0].size(), QVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline QVec matvec(const QMat& a, const QVec& x) {
    QVec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

inline QMat matmul(const QMat& a, const QMat& b) {
    QMat r(a.size(), QVec(b[0].size(), Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline bool is_symmetric(const QMat& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i][j] != a[j][i]) return false;
    return true;
}

/// Row echelon reduction in place; returns pivot column indices.
inline std::vector<int> row_reduce(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int rank(QMat m) { return static_cast<int>(row_reduce(m).size()); }

/// Basis of {x : A x = 0}, one row per kernel vector.
inline QMat kernel(QMat a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    std::vector<int> pivots = row_reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    QMat basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        QVec v = qvec_zero(static_cast<int>(cols));
        v[freec] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Any solution of A x = b, or nullopt when inconsistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (a.empty()) return QVec{};
    const std::size_t cols = a[0].size();
    QMat aug(a.size(), QVec(cols + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    QVec x = qvec_zero(static_cast<int>(cols));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

inline std::optional<QMat> inverse(const QMat& a) {
    const std::size_t n = a.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = row_reduce(aug);
    if (pivots.size() != n || pivots.back() != static_cast<int>(n - 1)) return std::nullopt;
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline Rat det(QMat m) {
    const std::size_t n = m.size();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

/// First k with det(leading k x k minor) <= 0, or nullopt when positive definite.
inline std::optional<int> pd_violation(const QMat& g) {
    const std::size_t n = g.size();
    for (std::size_t k = 1; k <= n; ++k) {
        QMat minor(k, QVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
        if (det(std::move(minor)) <= 0) return static_cast<int>(k);
    }
    return std::nullopt;
}

/// G = L D L^T with L unit lower triangular, D positive diagonal.
/// Rational substitute for Cholesky: no square roots ever appear.
struct Ldlt {
    QMat lower;
    QVec diag;
};

inline Ldlt ldlt(const QMat& g) {
    const std::size_t n = g.size();
    Ldlt f{qmat_identity(static_cast<int>(n)), qvec_zero(static_cast<int>(n))};
    QMat a = g;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) throw std::invalid_argument("ldlt: matrix not positive definite");
        f.diag[k] = a[k][k];
        Rat inv = 1 / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) f.lower[i][k] = a[i][k] * inv;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j <= i; ++j) {
                a[i][j] -= f.lower[i][k] * a[k][j];
                a[j][i] = a[i][j];
            }
    }
    return f;
}

/// Incremental echelon basis over Q. Rows indexed by leading column.
class EchelonBasis {
public:
    explicit EchelonBasis(int dim) : rows_(static_cast<std::size_t>(dim)) {}

    /// Returns true when v was independent of the current span.
    bool insert(QVec v) {
        reduce(v);
        for (std::size_t l = 0; l < v.size(); ++l) {
            if (v[l] == 0) continue;
            Rat inv = 1 / v[l];
            for (std::size_t j = l; j < v.size(); ++j) v[j] *= inv;
            rows_[l] = std::move(v);
            ++rank_;
            return true;
        }
        return false;
    }

    bool contains(QVec v) const {
        reduce(v);
        return is_zero(v);
    }

    int rank() const { return rank_; }

private:
    void reduce(QVec& v) const {
        for (std::size_t l = 0; l < v.size(); ++l) {
            if (v[l] == 0 || rows_[l].empty()) continue;
            Rat f = v[l];
            const QVec& b = rows_[l];
            for (std::size_t j = l; j < v.size(); ++j) v[j] -= f * b[j];
        }
    }

    std::vector<QVec> rows_;  // rows_[l] has leading 1 at column l, or empty
    int rank_ = 0;
};

/// Rank of {p_i - p_0}. Stops as soon as the rank saturates at maxr.
inline int affine_rank(const std::vector<QVec>& pts, int maxr = -1) {
    if (pts.size() <= 1) return 0;
    const int d = static_cast<int>(pts[0].size());
    if (maxr < 0 || maxr > d) maxr = d;
    EchelonBasis basis(d);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        basis.insert(qvec_sub(pts[i], pts[0]));
        if (basis.rank() >= maxr) return maxr;
    }
    return basis.rank();
}

}  // namespace parvo
