#pragma once

// Exact rational scalars. GMP's mpq_class keeps every value canonical
// (reduced, positive denominator), which the equality-based classification
// and symmetry tests in the rest of the toolkit rely on.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace parvo {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Lattice points in basis coordinates. Desk scale (d <= 6, small boxes);
// anything that can grow goes through Rat.
using ZVec = std::vector<long>;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", "p/q". Rejects empty strings, zero denominators and junk.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad rational literal: " + s);
    bool seen_slash = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (seen_slash || k == i || k + 1 == s.size())
                throw std::invalid_argument("bad rational literal: " + s);
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("bad rational literal: " + s);
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
    return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// True when 2r is an integer.
inline bool is_half_integer(const Rat& r) {
    const Int& d = r.get_den();
    return d == 1 || d == 2;
}

inline QVec to_qvec(const ZVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = rat(v[i]);
    return q;
}

inline bool lex_less(const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool lex_less(const QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline ZVec zvec_add(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ZVec zvec_sub(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ZVec zvec_neg(const ZVec& a) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline std::string to_string(const ZVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace parvo
