#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "qplex/gf.hpp"

namespace qplex {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over one field, row major.
class Matrix {
public:
    Matrix(FieldPtr field, size_t rows, size_t cols);
    static Matrix identity(const FieldPtr& field, size_t n);
    static Matrix from_rows(const FieldPtr& field, const std::vector<std::vector<uint32_t>>& rows);
    static Matrix from_row_vectors(const FieldPtr& field, size_t n, const std::vector<FieldVector>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v; }
    FieldVector row(size_t i) const;

    Matrix transposed() const;
    Matrix operator*(const Matrix& other) const;

    /// Lift a matrix over the prime field F_p into an extension of F_p.
    /// Reps are preserved (constants embed as constant polynomials).
    Matrix lifted_to(const FieldPtr& ext) const;

    /// Reduced row echelon form (zero rows kept at the bottom) and rank.
    std::pair<Matrix, size_t> rref() const;
    size_t rank() const;

    /// Canonical basis of the right kernel: one vector per free column in
    /// ascending column order, each scaled so its first nonzero coordinate is 1.
    std::vector<FieldVector> kernel_basis() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

/// An F_q-subspace of F_q^n held in canonical form: the basis is in reduced
/// row echelon form with strictly increasing pivot columns and no zero rows,
/// so subspace equality is representation equality.
class Subspace {
public:
    static Subspace zero(const FieldPtr& field, size_t n);
    static Subspace full(const FieldPtr& field, size_t n);
    static Subspace span(const FieldPtr& field, size_t n, const std::vector<FieldVector>& vectors);
    static Subspace from_basis_matrix(const Matrix& m);

    size_t ambient() const { return n_; }
    size_t dim() const { return basis_.rows(); }
    const FieldPtr& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }

    bool contains(const Subspace& other) const;
    bool contains(const FieldVector& x) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// All q^dim vectors of the subspace (zero included), odometer order
    /// over the basis coefficients.
    std::vector<FieldVector> elements() const;

    /// The least nonzero vector under the lexicographic order.  For any
    /// admissible element order this is the last row of the canonical basis.
    FieldVector min_nonzero_vector() const;

    std::string to_string() const; // "0,1,0,0;0,0,1,0" ("0" for the zero subspace)

    size_t hash() const;
    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(Matrix basis, size_t n) : basis_(std::move(basis)), n_(n) {}

    Matrix basis_;
    size_t n_;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const { return s.hash(); }
};

void require_same_ambient(const Subspace& a, const Subspace& b);

/// Number of k-dimensional subspaces of F_q^n, exact.  Zero when k > n.
BigInt gaussian_binomial(uint64_t n, uint64_t k, uint64_t q);

/// All k-dimensional subspaces of F_q^n, each exactly once, enumerated by
/// echelon profile (pivot column support, then free entries).
std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, size_t n, size_t k);

/// All k-dimensional subspaces of u, via coordinates relative to its basis.
std::vector<Subspace> enumerate_subspaces_of(const Subspace& u, size_t k);

/// All k-dimensional subspaces w with a ⊆ w ⊆ b, via quotient coordinates.
std::vector<Subspace> enumerate_between(const Subspace& a, const Subspace& b, size_t k);

/// The least vector of u that is not in v.  v may be the zero subspace,
/// giving the least nonzero vector of u.
FieldVector min_vector_of_difference(const Subspace& u, const Subspace& v);

} // namespace qplex
