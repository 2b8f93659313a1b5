#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qplex/qcomplex.hpp"

namespace qplex {

/// Abstract simplicial complex over integer vertex ids, presented by its
/// maximal faces.  Vertices may carry subspace labels (order complexes do;
/// plain test complexes need not).
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(size_t vertex_count, std::vector<std::vector<int>> facets,
                                         std::vector<Subspace> vertex_labels = {});

    size_t vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; } // each sorted ascending
    const std::vector<Subspace>& vertex_labels() const { return vertex_labels_; }

    /// Max facet cardinality minus one; -1 for the complex with only the empty face.
    int dim() const { return dim_; }
    bool pure() const { return pure_; }

    /// All p-simplices as sorted id tuples, lexicographically ordered.
    std::vector<std::vector<int>> simplices(int p) const;

private:
    SimplicialComplex() = default;

    size_t vertex_count_ = 0;
    std::vector<std::vector<int>> facets_;
    std::vector<Subspace> vertex_labels_;
    int dim_ = -1;
    bool pure_ = true;
};

/// The order complex K: vertices are the faces of c (zero subspace dropped
/// when punctured), simplices are chains under inclusion.  Vertex ids follow
/// the (dimension, cmp_q) order, so boundary matrices are reproducible.
SimplicialComplex order_complex(const QComplex& c, bool punctured);

/// Every maximal chain of c as a complete flag from the zero subspace up to
/// a facet, sorted by cmp_l.  Requires purity.
std::vector<Chain> maximal_chains_sorted(const QComplex& c);

/// Classical shelling check on a pure simplicial complex: each new facet
/// must meet the earlier ones in a nonempty union of codimension-1 faces.
ShellingCertificate is_simplicial_shelling(const SimplicialComplex& k, const std::vector<size_t>& order);

/// Positions of the given chains among the facets of their order complex,
/// so a chain order can be fed to is_simplicial_shelling.
std::vector<size_t> chain_facet_order(const SimplicialComplex& k, const std::vector<Chain>& chains);

struct RestrictionSet {
    size_t chain_index = 0;
    std::vector<size_t> positions; // punctured positions whose removal lands in the earlier complex
    bool full = false;             // positions cover the whole punctured chain
};

/// Restriction of the j-th chain against its cmp_l predecessors: the chain
/// elements whose removal leaves a face of the complex generated so far.
RestrictionSet restriction(size_t j, const std::vector<Chain>& sorted_chains);

/// Number of maximal chains whose restriction is the full chain, straight
/// from the definition (quadratic scan over the sorted chain list).
int64_t count_homology_facets_oracle(const QComplex& c);

/// Same count through the chain characterization: the top hyperplane must
/// reappear in an earlier facet and no interior space may contain the least
/// nonzero vector of the space above it.
int64_t count_homology_facets_characterized(const QComplex& c);

struct BettiBreakdown {
    size_t t = 0; // facet count
    size_t s = 0; // facets containing the global least nonzero vector (an order prefix)
    std::optional<FieldVector> x;
    struct PerFacet {
        size_t j = 0; // 1-based position in the sorted facet order
        std::optional<FieldVector> xj;
        int64_t rj = 0;
    };
    std::vector<PerFacet> per_facet; // one entry per facet beyond the prefix
    BigInt interior_factor = 1;      // q^{(k-1)(k-2)/2}
    BigInt rank = 0;                 // interior_factor * sum of rj
};

/// Closed-form rank of the top reduced homology of the punctured order
/// complex of a lexicographically shellable complex.
BettiBreakdown betti_formula(const QComplex& c);

struct NonMatroidWitness {
    FieldVector x1, x2;
    Subspace plane;                    // 2-dimensional face F with x1 ∈ F
    std::vector<Subspace> long_chain;  // {0, <x1>, F}
    std::vector<Subspace> short_chain; // {0, <x2>}
};

/// A 4-vertex restriction of the order complex with maximal chains of
/// unequal length, certifying that K is not a matroid complex.  Requires
/// dim ≥ 2 and at least two facets; returns nothing otherwise.
std::optional<NonMatroidWitness> non_matroid_witness(const QComplex& c);

} // namespace qplex
