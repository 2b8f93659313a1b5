#pragma once

#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <unordered_map>

#include "qplex/qcomplex.hpp"

namespace qplex {

/// A rank-metric code: a k×n generator matrix of full row rank over an
/// extension F_{q^m} of a prime base field F_q.
class RankMetricCode {
public:
    static RankMetricCode make(FieldPtr base, FieldPtr ext, Matrix generator);

    /// Generator-matrix file: `field gf(p^e):<modulus>`, `base gf(p)`, then
    /// k rows of n elements, each a polynomial in `a` or an integer rep.
    static RankMetricCode read(std::istream& in);
    static RankMetricCode load_file(const std::string& path);

    const FieldPtr& base_field() const { return base_; }
    const FieldPtr& extension_field() const { return ext_; }
    const Matrix& generator() const { return gen_; }
    size_t length() const { return gen_.cols(); }
    size_t code_dim() const { return gen_.rows(); }

    /// G·Yᵀ over the extension field, Y the canonical basis matrix of u.
    Matrix pairing_matrix(const Subspace& u) const;
    /// Rank of the pairing matrix; the rank function of the induced q-matroid.
    size_t rank_of(const Subspace& u) const;

private:
    RankMetricCode(FieldPtr base, FieldPtr ext, Matrix gen)
        : base_(std::move(base)), ext_(std::move(ext)), gen_(std::move(gen)) {}

    FieldPtr base_;
    FieldPtr ext_;
    Matrix gen_;
};

/// A q-matroid given by its rank function.  Queries are memoized over the
/// canonical subspace form; the memo is guarded so concurrent reads stay
/// idempotent.
class QMatroid {
public:
    using RankFn = std::function<size_t(const Subspace&)>;

    QMatroid(FieldPtr field, size_t n, RankFn fn);
    static QMatroid from_code(const RankMetricCode& code);
    /// rho(U) = min(dim U, k).
    static QMatroid uniform(const FieldPtr& field, size_t n, size_t k);
    /// rho(U) = dim U.
    static QMatroid free_matroid(const FieldPtr& field, size_t n);

    const FieldPtr& field() const { return field_; }
    size_t ambient() const { return n_; }

    size_t rank(const Subspace& u) const;
    /// rho of the full space.
    size_t rank() const;

    struct AxiomReport {
        bool ok = true;
        std::string axiom;     // "R1" / "R2" / "R3" when violated
        std::string violation; // human-readable description of the first violation
    };
    /// Exhaustive check of boundedness, monotonicity and submodularity over
    /// the whole subspace lattice.
    AxiomReport verify_axioms() const;

    std::vector<Subspace> independent_spaces() const;
    std::vector<Subspace> bases() const;
    QComplex matroid_complex() const;

private:
    std::vector<std::vector<Subspace>> all_subspaces_by_dim(size_t pair_budget) const;

    FieldPtr field_;
    size_t n_;
    RankFn fn_;
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<Subspace, size_t, SubspaceHash> memo_;
};

} // namespace qplex
