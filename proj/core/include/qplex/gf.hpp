#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qplex/error.hpp"

namespace qplex {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_{p^e} with an explicit monic irreducible modulus
/// (implicit for e = 1).  Elements are reps in [0, q): the base-p digits of
/// the polynomial representative, constant coefficient least significant.
/// So 0 is the additive and 1 the multiplicative identity, and in gf(2^4)
/// with modulus x^4+x+1 the generator `a` has rep 2.
///
/// The field carries the total element order used by every lexicographic
/// comparison downstream.  The default order is the natural order on reps;
/// with_element_order() substitutes any other admissible order (one that
/// keeps 0 first and 1 second).  Fields are immutable; share via FieldPtr.
class Field {
public:
    static constexpr uint64_t max_size = uint64_t(1) << 16;

    /// modulus_coeffs lists c0..ce of a monic degree-e polynomial over F_p;
    /// leave empty for e == 1.
    static FieldPtr make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus_coeffs = {});
    static FieldPtr prime_field(uint32_t p) { return make(p, 1); }

    /// Accepts `gf(p)` or `gf(p^e):<modulus>` with the modulus written like `x^4+x+1`.
    static FieldPtr parse(std::string_view text);

    /// Same field, different admissible element order.  rank_of_rep[r] is the
    /// position of rep r; rank_of_rep[0] must be 0 and rank_of_rep[1] must be 1.
    FieldPtr with_element_order(const std::vector<uint32_t>& rank_of_rep) const;

    uint32_t characteristic() const { return p_; }
    uint32_t extension_degree() const { return e_; }
    uint32_t size() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t k) const;

    /// -1 / 0 / +1 under the element order.
    int cmp(uint32_t a, uint32_t b) const {
        return order_rank_[a] < order_rank_[b] ? -1 : (order_rank_[a] > order_rank_[b] ? 1 : 0);
    }
    uint32_t order_rank(uint32_t rep) const { return order_rank_[rep]; }

    bool same(const Field& other) const;

    std::string to_string() const;
    std::string element_to_string(uint32_t rep, bool polynomial = false) const;
    /// Accepts a plain integer rep or a polynomial in `a` such as `a^3+a+1`.
    uint32_t parse_element(std::string_view text) const;

private:
    struct Tag {};

public:
    explicit Field(Tag) {}

private:
    uint32_t mul_slow(uint32_t a, uint32_t b) const;
    void build_tables();

    uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_;    // c0..ce, empty when e == 1
    std::vector<uint32_t> order_rank_; // rank_of_rep
    std::vector<uint32_t> exp_;        // exp_[i] = g^i, i in [0, q-1)
    std::vector<uint32_t> log_;        // log_[exp_[i]] = i
};

void require_same_field(const Field& a, const Field& b);

/// One element of a fixed field.  Arithmetic across distinct fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, uint32_t rep);

    uint32_t rep() const { return rep_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return rep_ == 0; }

    FieldElement inverse() const { return {field_, field_->inv(rep_)}; }
    FieldElement negated() const { return {field_, field_->neg(rep_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    FieldPtr field_;
    uint32_t rep_;
};

/// Total order with 0 minimal and 1 second.
int elem_cmp(const FieldElement& a, const FieldElement& b);

/// Vector in F_q^n.  Ordered by the lexicographic extension of the element
/// order: the first differing coordinate decides.
class FieldVector {
public:
    FieldVector(FieldPtr field, std::vector<uint32_t> coords);

    /// Parses `0,1,0,0`.
    static FieldVector parse(const FieldPtr& field, std::string_view text);
    static FieldVector zero(const FieldPtr& field, size_t n);
    static FieldVector unit(const FieldPtr& field, size_t n, size_t i);

    size_t size() const { return coords_.size(); }
    uint32_t operator[](size_t i) const { return coords_[i]; }
    const std::vector<uint32_t>& coords() const { return coords_; }
    const FieldPtr& field() const { return field_; }

    bool is_zero() const;
    FieldVector plus(const FieldVector& other) const;
    FieldVector scaled(uint32_t c) const;

    std::string to_string() const; // "0,1,0,0"

    friend bool operator==(const FieldVector& a, const FieldVector& b);
    friend bool operator!=(const FieldVector& a, const FieldVector& b) { return !(a == b); }

private:
    FieldPtr field_;
    std::vector<uint32_t> coords_;
};

int vec_cmp(const FieldVector& a, const FieldVector& b);

} // namespace qplex
