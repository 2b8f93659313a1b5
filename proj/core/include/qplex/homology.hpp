#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qplex/ordercx.hpp"

namespace qplex {

struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<int64_t> a; // row major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    int64_t at(size_t i, size_t j) const { return a[i * cols + j]; }
    void set(size_t i, size_t j, int64_t v) { a[i * cols + j] = v; }
};

/// Boundary map in degree p: columns indexed by p-simplices, rows by
/// (p-1)-simplices, entries the alternating signs.  In reduced mode the
/// degree-0 map sends every vertex to the empty simplex.
struct BoundaryMatrix {
    int degree = 0;
    IntMatrix m;
};

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k, bool reduced);

/// Triplet dump: `p nrows ncols` then `row col value` lines per degree.
void dump_boundary_matrices(const SimplicialComplex& k, bool reduced, std::ostream& out);

struct SnfResult {
    std::vector<BigInt> invariant_factors; // d1 | d2 | ..., all positive
    size_t rank = 0;
};

/// Exact integer Smith normal form by row/column reduction with
/// minimal-absolute-value pivoting.  Runs on native 64-bit integers and
/// transparently redoes the computation in arbitrary precision if any
/// intermediate overflows.
SnfResult smith_normal_form(const IntMatrix& m);

namespace detail {
/// Arbitrary-precision path, exposed so tests can cross-check the fast path.
SnfResult smith_normal_form_bigint(const IntMatrix& m);
} // namespace detail

struct HomologyGroup {
    int degree = 0;
    int64_t rank = 0;
    std::vector<BigInt> torsion; // invariant factors > 1
};

struct HomologyReport {
    std::vector<HomologyGroup> groups; // ascending degree
    int64_t euler = 0;                 // reduced Euler characteristic from face counts
    std::optional<int> concentrated_at; // the unique nontrivial degree, if any
    bool torsion_free = true;

    int64_t rank_at(int degree) const;
};

/// Reduced integral homology of every degree via Smith normal form of the
/// reduced chain complex.
HomologyReport reduced_homology(const SimplicialComplex& k);

struct MVStage {
    size_t stage = 0;                  // facets 1..stage glued, facet stage+1 added
    std::vector<int64_t> before;       // reduced betti numbers by degree, prefix complex
    std::vector<int64_t> after;        // prefix plus the new facet
    std::vector<int64_t> intersection; // new facet against the prefix
    bool new_facet_contractible = false;
    bool intersection_concentrated = false; // nontrivial homology only in degree dim-2
    bool identity_ok = false;               // after_n == before_n + intersection_{n-1} at every degree
    bool torsion_free = false;
};

struct MVReport {
    bool ok = false;
    std::vector<MVStage> stages;
    std::vector<int64_t> final_betti;
};

/// Stage-by-stage gluing check along a shelling order: homology of each
/// partial complex, of the added facet, and of their intersection, with the
/// additivity identity verified at every degree.
MVReport mayer_vietoris_stage_check(const QComplex& c, const std::vector<Subspace>& shelling_order);

} // namespace qplex
