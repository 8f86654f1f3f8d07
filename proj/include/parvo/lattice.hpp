#pragma once

// Lattices given by an exact basis and/or Gram matrix. All geometry runs in
// basis coordinates with the Gram matrix as inner product, so nothing ever
// leaves Q. Enumeration uses the LDL^T factorization: no square roots, no
// lattice reduction, desk scale only.

#include "parvo/f2.hpp"
#include "parvo/linalg.hpp"

#include <map>
#include <memory>
#include <optional>

namespace parvo {

class Lattice {
public:
    static Lattice from_gram(QMat gram, std::string name = "") {
        Lattice l;
        l.name_ = std::move(name);
        l.gram_ = std::move(gram);
        l.validate();
        return l;
    }

    static Lattice from_basis(QMat basis, std::string name = "") {
        Lattice l;
        l.name_ = std::move(name);
        l.basis_ = basis;
        QMat bt = transpose(basis);
        l.gram_ = matmul(bt, basis);
        if (det(basis) == 0) throw std::invalid_argument("lattice basis is singular");
        l.validate();
        return l;
    }

    /// Direct sum: block-diagonal Gram.
    static Lattice direct_sum(const Lattice& a, const Lattice& b, std::string name = "") {
        int d = a.dim() + b.dim();
        QMat g(static_cast<std::size_t>(d), qvec_zero(d));
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) g[i][j] = a.gram()[i][j];
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) g[a.dim() + i][a.dim() + j] = b.gram()[i][j];
        return from_gram(std::move(g), std::move(name));
    }

    int dim() const { return static_cast<int>(gram_.size()); }
    const QMat& gram() const { return gram_; }
    const std::optional<QMat>& basis() const { return basis_; }
    const std::string& name() const { return name_; }

    const Ldlt& factorization() const {
        if (!ldlt_) ldlt_ = std::make_shared<Ldlt>(ldlt(gram_));
        return *ldlt_;
    }

    Rat inner(const QVec& x, const QVec& y) const {
        Rat s(0);
        for (int i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim(); ++j) s += x[i] * gram_[i][j] * y[j];
        }
        return s;
    }

    Rat norm2(const QVec& x) const { return inner(x, x); }

    Rat norm2(const ZVec& x) const { return norm2(to_qvec(x)); }

    Rat dist2(const ZVec& x, const QVec& center) const {
        QVec diff(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) diff[i] = Rat(x[i]) - center[i];
        return norm2(diff);
    }

    /// Functional x -> <x, t>_gram as a rational covector (= gram * t).
    QVec gram_times(const ZVec& t) const {
        QVec n(t.size(), Rat(0));
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) n[i] += gram_[i][j] * Rat(t[j]);
        return n;
    }

private:
    void validate() const {
        if (gram_.empty()) throw std::invalid_argument("lattice of dimension zero");
        for (const auto& row : gram_)
            if (row.size() != gram_.size())
                throw std::invalid_argument("gram matrix is not square");
        if (!is_symmetric(gram_)) throw std::invalid_argument("gram matrix is not symmetric");
        if (auto k = pd_violation(gram_))
            throw std::invalid_argument("gram matrix not positive definite: leading minor " +
                                        std::to_string(*k) + " is not positive");
    }

    std::string name_;
    QMat gram_;
    std::optional<QMat> basis_;
    mutable std::shared_ptr<Ldlt> ldlt_;
};

namespace detail {

// Recursive ellipsoid walk over the LDL^T form:
//   |x - c|^2 = sum_i D_i (x_i - c_i + sum_{j>i} L_{ji} (x_j - c_j))^2
// Levels run from d-1 down to 0 so each offset only involves settled
// coordinates. Integer ranges are found by scanning outward from the
// rational center, which is exact and terminates because the quadratic
// constraint defines an interval.
class BallEnumerator {
public:
    BallEnumerator(const Lattice& lat, const QVec& center, const Rat& radius_sq)
        : lat_(lat), f_(lat.factorization()), c_(center), r2_(radius_sq),
          d_(lat.dim()), x_(static_cast<std::size_t>(lat.dim()), 0) {}

    std::vector<ZVec> run() {
        out_.clear();
        if (r2_ >= 0) descend(d_ - 1, r2_);
        std::sort(out_.begin(), out_.end(), [](const ZVec& a, const ZVec& b) {
            return lex_less(a, b);
        });
        return out_;
    }

private:
    void descend(int level, const Rat& budget) {
        if (level < 0) {
            out_.push_back(x_);
            return;
        }
        Rat offset(0);
        for (int j = level + 1; j < d_; ++j)
            offset += f_.lower[j][level] * (Rat(x_[j]) - c_[j]);
        // D * (x - center_here)^2 <= budget, center_here = c[level] - offset
        Rat center_here = c_[level] - offset;
        long base = static_cast<long>(rat_floor(center_here).get_si());
        const Rat& dcoef = f_.diag[level];
        for (long xi = base;; --xi) {
            Rat term = Rat(xi) - center_here;
            Rat used = dcoef * term * term;
            if (used > budget) break;
            x_[level] = xi;
            descend(level - 1, budget - used);
        }
        for (long xi = base + 1;; ++xi) {
            Rat term = Rat(xi) - center_here;
            Rat used = dcoef * term * term;
            if (used > budget) break;
            x_[level] = xi;
            descend(level - 1, budget - used);
        }
    }

    const Lattice& lat_;
    const Ldlt& f_;
    QVec c_;
    Rat r2_;
    int d_;
    ZVec x_;
    std::vector<ZVec> out_;
};

}  // namespace detail

/// All lattice points x with |x - center|^2 <= radius_sq, lexicographically sorted.
inline std::vector<ZVec> points_in_ball(const Lattice& lat, const QVec& center,
                                        const Rat& radius_sq) {
    if (radius_sq < 0) throw std::invalid_argument("points_in_ball: negative radius");
    if (static_cast<int>(center.size()) != lat.dim())
        throw std::invalid_argument("points_in_ball: center dimension mismatch");
    return detail::BallEnumerator(lat, center, radius_sq).run();
}

/// Facet vectors of the Voronoi tiling: v such that +-v are the unique
/// shortest members of the coset v + 2L. Closed under negation, no zero.
inline std::vector<ZVec> relevant_vectors(const Lattice& lat) {
    const int d = lat.dim();
    // Every nonzero coset of L/2L has a representative with 0/1 coordinates,
    // so the largest coset minimum is bounded by the largest such norm.
    Rat bound(0);
    for (std::uint32_t m = 1; m < (1u << d); ++m) {
        ZVec r(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i) r[i] = (m >> i) & 1u;
        Rat n = lat.norm2(r);
        if (n > bound) bound = n;
    }
    std::vector<ZVec> pts = points_in_ball(lat, qvec_zero(d), bound);

    struct Coset {
        Rat min;
        std::vector<ZVec> argmin;
    };
    std::map<std::uint32_t, Coset> cosets;
    for (const ZVec& p : pts) {
        std::uint32_t key = parity_of(p).bits;
        if (key == 0) continue;  // p in 2L, never relevant
        Rat n = lat.norm2(p);
        auto it = cosets.find(key);
        if (it == cosets.end()) {
            cosets.emplace(key, Coset{n, {p}});
        } else if (n < it->second.min) {
            it->second.min = n;
            it->second.argmin = {p};
        } else if (n == it->second.min) {
            it->second.argmin.push_back(p);
        }
    }
    std::vector<ZVec> rel;
    for (auto& [key, c] : cosets) {
        if (c.argmin.size() == 2) {
            rel.push_back(c.argmin[0]);
            rel.push_back(c.argmin[1]);
        }
    }
    std::sort(rel.begin(), rel.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
    return rel;
}

/// Parity class of a lattice point; rational input must be integral.
inline ParityVector parity_class(const ZVec& x) { return parity_of(x); }

inline ParityVector parity_class(const QVec& x) {
    ZVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!is_integer(x[i]))
            throw std::invalid_argument("parity_class: coordinate " + x[i].get_str() +
                                        " is not an integer");
        z[i] = static_cast<long>(x[i].get_num().get_si());
    }
    return parity_of(z);
}

/// Class of a half-lattice point in (L/2)/L; 2x must be integral.
inline HalfClass half_class(const QVec& x) { return half_of(x); }

}  // namespace parvo
