#pragma once

// The two finite quotient spaces attached to a lattice L:
//   parity classes     L/2L        -- written [x1,...,xd], entries 0/1
//   half-lattice space (L/2)/L     -- written <x1,...,xd>, entries 0 or 1/2
// Both are F2^d; they are kept as distinct types because they play different
// roles (exhaustive parity bookkeeping vs. midpoint/contact-face indexing).

#include "parvo/rational.hpp"

#include <cstdint>

namespace parvo {

namespace detail {
inline std::uint32_t bits_mod2(const ZVec& x) {
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        long m = x[i] % 2;
        if (m < 0) m += 2;
        if (m) b |= (1u << i);
    }
    return b;
}
}  // namespace detail

struct ParityVector {
    int dim = 0;
    std::uint32_t bits = 0;

    ParityVector() = default;
    ParityVector(int d, std::uint32_t b) : dim(d), bits(b) {}

    ParityVector operator+(const ParityVector& o) const { return {dim, bits ^ o.bits}; }
    bool operator==(const ParityVector& o) const { return dim == o.dim && bits == o.bits; }
    bool operator!=(const ParityVector& o) const { return !(*this == o); }
    bool operator<(const ParityVector& o) const { return bits < o.bits; }
    bool is_zero() const { return bits == 0; }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < dim; ++i) {
            if (i) s += ",";
            s += ((bits >> i) & 1u) ? "1" : "0";
        }
        return s + "]";
    }
};

struct HalfClass {
    int dim = 0;
    std::uint32_t bits = 0;  // bit set <=> coordinate is 1/2

    HalfClass() = default;
    HalfClass(int d, std::uint32_t b) : dim(d), bits(b) {}

    HalfClass operator+(const HalfClass& o) const { return {dim, bits ^ o.bits}; }
    bool operator==(const HalfClass& o) const { return dim == o.dim && bits == o.bits; }
    bool operator!=(const HalfClass& o) const { return !(*this == o); }
    bool operator<(const HalfClass& o) const { return bits < o.bits; }
    bool is_zero() const { return bits == 0; }

    /// A representative point with coordinates in {0, 1/2}.
    QVec representative() const {
        QVec p(static_cast<std::size_t>(dim), Rat(0));
        for (int i = 0; i < dim; ++i)
            if ((bits >> i) & 1u) p[i] = rat(1, 2);
        return p;
    }

    std::string str() const {
        std::string s = "<";
        for (int i = 0; i < dim; ++i) {
            if (i) s += ",";
            s += ((bits >> i) & 1u) ? "1/2" : "0";
        }
        return s + ">";
    }
};

/// Coordinatewise reduction mod 2 of a lattice point.
inline ParityVector parity_of(const ZVec& x) {
    return {static_cast<int>(x.size()), detail::bits_mod2(x)};
}

/// Class of a half-lattice point: 2x must be integral.
inline HalfClass half_of(const QVec& x) {
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!is_half_integer(x[i]))
            throw std::invalid_argument("half_of: coordinate " + x[i].get_str() +
                                        " is not a half-integer");
        if (x[i].get_den() == 2) b |= (1u << i);
    }
    return {static_cast<int>(x.size()), b};
}

/// Class of (a+b)/2 for lattice points a, b.
inline HalfClass half_of_midpoint(const ZVec& a, const ZVec& b) {
    return {static_cast<int>(a.size()), detail::bits_mod2(zvec_add(a, b))};
}

/// Row-reduced span over F2 with membership and dimension queries.
class F2Span {
public:
    explicit F2Span(int dim) : dim_(dim) {}

    bool insert(std::uint32_t v) {
        v = reduce(v);
        if (v == 0) return false;
        basis_.push_back(v);
        // keep rows sorted by leading (lowest set) bit for canonical form
        std::sort(basis_.begin(), basis_.end(),
                  [](std::uint32_t a, std::uint32_t b) { return lowbit(a) < lowbit(b); });
        return true;
    }

    bool insert(const ParityVector& v) { return insert(v.bits); }
    bool insert(const HalfClass& v) { return insert(v.bits); }

    bool contains(std::uint32_t v) const { return reduce(v) == 0; }
    bool contains(const ParityVector& v) const { return contains(v.bits); }
    bool contains(const HalfClass& v) const { return contains(v.bits); }

    int dimension() const { return static_cast<int>(basis_.size()); }
    int ambient_dim() const { return dim_; }
    const std::vector<std::uint32_t>& basis() const { return basis_; }

    /// All 2^rank elements of the span.
    std::vector<std::uint32_t> elements() const {
        std::vector<std::uint32_t> out{0};
        for (std::uint32_t b : basis_) {
            std::size_t n = out.size();
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static std::uint32_t lowbit(std::uint32_t v) { return v & (~v + 1); }

    std::uint32_t reduce(std::uint32_t v) const {
        for (std::uint32_t b : basis_) {
            std::uint32_t l = lowbit(b);
            if (v & l) v ^= b;
        }
        return v;
    }

    int dim_;
    std::vector<std::uint32_t> basis_;
};

}  // namespace parvo
