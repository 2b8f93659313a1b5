#pragma once

#include <vector>

#include "qplex/vecspace.hpp"

namespace qplex {

/// A strictly increasing (by containment) sequence of subspaces of one
/// ambient space.  Complete means consecutive dimension gaps are all 1.
class Chain {
public:
    static Chain of(std::vector<Subspace> spaces);

    size_t length() const { return spaces_.size(); }
    const Subspace& at(size_t i) const { return spaces_[i]; }
    const std::vector<Subspace>& spaces() const { return spaces_; }
    const Subspace& top() const { return spaces_.back(); }
    const Subspace& bottom() const { return spaces_.front(); }

    bool complete() const;

    friend bool operator==(const Chain& a, const Chain& b) { return a.spaces_ == b.spaces_; }
    friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

private:
    explicit Chain(std::vector<Subspace> s) : spaces_(std::move(s)) {}
    std::vector<Subspace> spaces_;
};

/// Total order on equidimensional subspaces: u precedes v when the least
/// vector of u \ v is lexicographically below the least vector of v \ u.
int cmp_q(const Subspace& u, const Subspace& v);

/// Total order on complete chains of equal dimension profile, decided by
/// cmp_q at the largest differing position.
int cmp_l(const Chain& a, const Chain& b);

/// The chain with position i replaced by a; requires spaces[i-1] ⊂ a ⊂ spaces[i+1]
/// and dim a = dim spaces[i].
Chain replace_at(const Chain& c, const Subspace& a, size_t i);

/// The complete chain from bottom to top in which every step adjoins the
/// least vector of top not yet covered.  The adjoined minima come out
/// strictly increasing and every interior space is locally minimal.
Chain greedy_min_refinement(const Subspace& bottom, const Subspace& top);

/// True when spaces[i] is the cmp_q-least subspace strictly between its
/// neighbours.  Computed from the definition, by enumeration.
bool is_locally_min(const Chain& c, size_t i);

/// The cmp_q-least space of dimension dim(a)+1 between a and b, computed as
/// a ⊕ <min b \ a> rather than by enumeration.
Subspace min_between(const Subspace& a, const Subspace& b);

std::vector<Subspace> sorted_by_cmp_q(std::vector<Subspace> spaces);

} // namespace qplex
