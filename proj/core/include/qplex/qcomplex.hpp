#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "qplex/qorder.hpp"

namespace qplex {

struct ShellingWitness {
    size_t i, j, k; // order positions: F_i ∩ F_j ⊆ F_k ∩ F_j with dim F_k ∩ F_j = r-1
};

struct ShellingCertificate {
    bool ok = false;
    bool pure = false;
    size_t dim = 0;
    std::vector<size_t> order;              // facet indices in the checked order
    std::vector<ShellingWitness> witnesses; // one per pair i < j when ok
    std::optional<std::pair<size_t, size_t>> violation;
};

/// A q-complex presented by its facet list.  Faces are the subspaces of
/// facets; the facet list is kept as an antichain (duplicates and dominated
/// facets dropped at construction).
class QComplex {
public:
    static QComplex from_facets(const FieldPtr& field, size_t n, std::vector<Subspace> facets);
    /// All k-dimensional subspaces of F_q^n as facets.
    static QComplex uniform(const FieldPtr& field, size_t n, size_t k);
    /// All codimension-1 subspaces of `top` as facets.
    static QComplex q_sphere(const Subspace& top);

    /// Facet-list file format: header `q=<spec> n=<n>`, then one facet per
    /// line as semicolon-separated basis vectors (`0` for the zero subspace);
    /// `#` starts a comment.
    static QComplex read_facets(std::istream& in);
    void write_facets(std::ostream& out) const;

    const FieldPtr& field() const { return field_; }
    size_t ambient() const { return n_; }
    size_t dim() const { return dim_; }
    bool pure() const { return pure_; }
    size_t facet_count() const { return facets_.size(); }
    const std::vector<Subspace>& facets() const { return facets_; }

    /// Facets under cmp_q; requires purity.
    std::vector<Subspace> sorted_facets() const;

    bool is_face(const Subspace& u) const;
    /// All k-dimensional faces, cmp_q sorted.
    std::vector<Subspace> faces(size_t k) const;
    /// All faces by ascending dimension (the zero subspace first when included).
    std::vector<Subspace> all_faces(bool include_zero) const;

private:
    QComplex(FieldPtr field, size_t n) : field_(std::move(field)), n_(n) {}

    FieldPtr field_;
    size_t n_;
    std::vector<Subspace> facets_;
    size_t dim_ = 0;
    bool pure_ = true;
};

/// Definitional shelling check: for every i < j some k < j must satisfy
/// F_i ∩ F_j ⊆ F_k ∩ F_j with dim F_k ∩ F_j = r-1.  Witnesses pick the
/// smallest such k.  `order` permutes positions of c.facets().
ShellingCertificate is_shelling(const QComplex& c, const std::vector<size_t>& order);

/// Sorts the facets under cmp_q and runs is_shelling on that order.
std::pair<ShellingCertificate, std::vector<Subspace>> is_lex_shellable(const QComplex& c);

} // namespace qplex
