#pragma once

// Built-in lattice catalog: cubic, root lattices A_d and D_d, their duals,
// direct sums exercising prisms and decomposability, and the body-centered
// tetragonal lattice whose cell is the elongated dodecahedron.

#include "parvo/lattice.hpp"

namespace parvo {

inline Lattice make_Z(int d) {
    return Lattice::from_gram(qmat_identity(d), "Z" + std::to_string(d));
}

/// A_d: Gram is the path Dynkin form, 2 on the diagonal, -1 next to it.
inline Lattice make_A(int d) {
    QMat g(static_cast<std::size_t>(d), qvec_zero(d));
    for (int i = 0; i < d; ++i) {
        g[i][i] = 2;
        if (i + 1 < d) g[i][i + 1] = g[i + 1][i] = -1;
    }
    return Lattice::from_gram(std::move(g), "A" + std::to_string(d));
}

/// A_d* scaled by d+1 to integer entries: g_ij = min(i,j) * (d+1-max(i,j)).
inline Lattice make_A_dual(int d) {
    QMat g(static_cast<std::size_t>(d), qvec_zero(d));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            g[i - 1][j - 1] = std::min(i, j) * (d + 1 - std::max(i, j));
    return Lattice::from_gram(std::move(g), "A" + std::to_string(d) + "*");
}

/// D_d = even-coordinate-sum sublattice of Z^d; basis e1+e2, e_i - e_{i-1}.
inline Lattice make_D(int d) {
    QMat basis(static_cast<std::size_t>(d), qvec_zero(d));  // columns are basis vectors
    basis[0][0] = 1;
    basis[1][0] = 1;
    for (int i = 1; i < d; ++i) {
        basis[i][i] = 1;
        basis[i - 1][i] = -1;
    }
    return Lattice::from_basis(std::move(basis), "D" + std::to_string(d));
}

/// D_d* = Z^d plus the all-halves vector; basis e1..e_{d-1}, (1/2,...,1/2).
inline Lattice make_D_dual(int d) {
    QMat basis(static_cast<std::size_t>(d), qvec_zero(d));
    for (int i = 0; i + 1 < d; ++i) basis[i][i] = 1;
    for (int i = 0; i < d; ++i) basis[i][d - 1] = rat(1, 2);
    return Lattice::from_basis(std::move(basis), "D" + std::to_string(d) + "*");
}

/// Body-centered tetragonal, c/a = 2: Voronoi cell is the elongated
/// dodecahedron (the remaining three-dimensional combinatorial type).
inline Lattice make_ED3() {
    QMat basis(3, qvec_zero(3));
    basis[0][0] = 1;
    basis[1][1] = 1;
    basis[0][2] = rat(1, 2);
    basis[1][2] = rat(1, 2);
    basis[2][2] = 1;
    return Lattice::from_basis(std::move(basis), "ED3");
}

/// Full catalog; dim_filter <= 0 means everything. Stable order.
inline std::vector<Lattice> catalog(int dim_filter = 0) {
    std::vector<Lattice> all;
    for (int d = 2; d <= 5; ++d) all.push_back(make_Z(d));
    for (int d = 2; d <= 5; ++d) all.push_back(make_A(d));
    for (int d = 3; d <= 5; ++d) all.push_back(make_D(d));
    for (int d = 2; d <= 5; ++d) all.push_back(make_A_dual(d));
    for (int d = 3; d <= 5; ++d) all.push_back(make_D_dual(d));
    all.push_back(make_ED3());
    all.push_back(Lattice::direct_sum(make_A(2), make_Z(1), "A2+Z"));
    all.push_back(Lattice::direct_sum(make_A(2), make_Z(3), "A2+Z3"));
    all.push_back(Lattice::direct_sum(Lattice::direct_sum(make_A(2), make_A(2)), make_Z(1),
                                      "A2+A2+Z"));
    all.push_back(Lattice::direct_sum(make_Z(1), make_D(4), "Z+D4"));
    all.push_back(Lattice::direct_sum(make_A(2), make_A(3), "A2+A3"));
    if (dim_filter <= 0) return all;
    std::vector<Lattice> out;
    for (Lattice& l : all)
        if (l.dim() == dim_filter) out.push_back(std::move(l));
    return out;
}

inline Lattice catalog_lookup(const std::string& name) {
    for (Lattice& l : catalog())
        if (l.name() == name) return l;
    throw std::invalid_argument("unknown catalog lattice: " + name);
}

/// Names of catalog members that are direct sums of lower-dimensional lattices.
inline bool is_direct_sum_name(const std::string& name) {
    if (name.find('+') != std::string::npos) return true;
    return name == "Z2" || name == "Z3" || name == "Z4" || name == "Z5";
}

}  // namespace parvo
