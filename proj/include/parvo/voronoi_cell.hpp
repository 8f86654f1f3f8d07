#pragma once

// The Dirichlet-Voronoi cell of a lattice as an exact H/V-polytope, one facet
// per relevant vector, carrying the facet-vector labelling the dual-cell and
// scaling machinery works with.

#include "parvo/lattice.hpp"
#include "parvo/polytope.hpp"

namespace parvo {

struct VoronoiCell {
    Lattice lattice;
    std::vector<ZVec> facet_vectors;  // aligned with poly.facets
    Polytope poly;

    int dim() const { return lattice.dim(); }

    /// Index of the facet with facet vector t, or -1.
    int facet_of_vector(const ZVec& t) const {
        auto it = index_.find(t);
        return it == index_.end() ? -1 : it->second;
    }

    void build_index() {
        index_.clear();
        for (std::size_t i = 0; i < facet_vectors.size(); ++i)
            index_[facet_vectors[i]] = static_cast<int>(i);
    }

private:
    std::map<ZVec, int> index_;
};

/// Halfspace of the bisector between 0 and lattice point t.
inline HalfSpace bisector_halfspace(const Lattice& lat, const ZVec& t) {
    QVec n = lat.gram_times(t);
    Rat off = lat.norm2(t) / 2;
    return {std::move(n), std::move(off)};
}

inline VoronoiCell build_voronoi_cell(const Lattice& lat) {
    VoronoiCell cell;
    cell.lattice = lat;
    cell.facet_vectors = relevant_vectors(lat);
    std::vector<HalfSpace> hs;
    hs.reserve(cell.facet_vectors.size());
    for (const ZVec& t : cell.facet_vectors) hs.push_back(bisector_halfspace(lat, t));
    cell.poly = Polytope::from_halfspaces(lat.dim(), hs);
    if (cell.poly.facet_count() != static_cast<int>(cell.facet_vectors.size()))
        throw std::runtime_error("relevant vector did not produce a facet");
    // from_halfspaces keeps surviving halfspaces in input order and all of
    // them survive here, so index i still matches facet_vectors[i]; check.
    for (int i = 0; i < cell.poly.facet_count(); ++i) {
        HalfSpace want = canonical_halfspace(bisector_halfspace(lat, cell.facet_vectors[i]));
        if (cell.poly.facets[i].normal != want.normal || cell.poly.facets[i].offset != want.offset)
            throw std::runtime_error("facet/halfspace order mismatch");
    }
    cell.build_index();
    return cell;
}

}  // namespace parvo
