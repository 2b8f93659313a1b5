#include "qplex/qorder.hpp"

#include <algorithm>

namespace qplex {

Chain Chain::of(std::vector<Subspace> spaces) {
    if (spaces.empty()) fail(errc::bad_args, "a chain needs at least one space");
    for (size_t i = 0; i + 1 < spaces.size(); ++i) {
        require_same_ambient(spaces[i], spaces[i + 1]);
        if (!(spaces[i + 1].contains(spaces[i]) && spaces[i].dim() < spaces[i + 1].dim()))
            fail(errc::not_nested, "chain spaces must strictly increase");
    }
    return Chain(std::move(spaces));
}

bool Chain::complete() const {
    for (size_t i = 0; i + 1 < spaces_.size(); ++i)
        if (spaces_[i + 1].dim() != spaces_[i].dim() + 1) return false;
    return true;
}

int cmp_q(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (u.dim() != v.dim()) fail(errc::dimension_mismatch, "cmp_q compares equidimensional subspaces");
    if (u == v) return 0;
    return vec_cmp(min_vector_of_difference(u, v), min_vector_of_difference(v, u));
}

namespace {

void require_matching_profiles(const Chain& a, const Chain& b) {
    if (a.length() != b.length()) fail(errc::profile_mismatch, "chain lengths differ");
    if (!a.complete() || !b.complete()) fail(errc::profile_mismatch, "cmp_l compares complete chains");
    for (size_t i = 0; i < a.length(); ++i) {
        require_same_ambient(a.at(i), b.at(i));
        if (a.at(i).dim() != b.at(i).dim()) fail(errc::profile_mismatch, "chain dimension profiles differ");
    }
}

} // namespace

int cmp_l(const Chain& a, const Chain& b) {
    require_matching_profiles(a, b);
    for (size_t i = a.length(); i-- > 0;) {
        if (a.at(i) != b.at(i)) return cmp_q(a.at(i), b.at(i));
    }
    return 0;
}

Chain replace_at(const Chain& c, const Subspace& a, size_t i) {
    if (!c.complete()) fail(errc::bad_args, "replacement needs a complete chain");
    if (i == 0 || i + 1 >= c.length()) fail(errc::bad_index, "replacement index needs both neighbours");
    if (a.dim() != c.at(i).dim()) fail(errc::not_between, "replacement has the wrong dimension");
    if (!(a.contains(c.at(i - 1)) && c.at(i + 1).contains(a)))
        fail(errc::not_between, "replacement does not sit between the neighbours");
    std::vector<Subspace> spaces = c.spaces();
    spaces[i] = a;
    return Chain::of(std::move(spaces));
}

Chain greedy_min_refinement(const Subspace& bottom, const Subspace& top) {
    require_same_ambient(bottom, top);
    if (!top.contains(bottom)) fail(errc::not_nested, "bottom is not contained in top");
    std::vector<Subspace> spaces{bottom};
    Subspace current = bottom;
    while (current.dim() < top.dim()) {
        FieldVector m = min_vector_of_difference(top, current);
        current = current.sum(Subspace::span(top.field(), top.ambient(), {m}));
        spaces.push_back(current);
    }
    return Chain::of(std::move(spaces));
}

bool is_locally_min(const Chain& c, size_t i) {
    if (!c.complete()) fail(errc::bad_args, "local minimality needs a complete chain");
    if (i == 0 || i + 1 >= c.length()) fail(errc::bad_index, "interior index required");
    const Subspace& lo = c.at(i - 1);
    const Subspace& hi = c.at(i + 1);
    const Subspace* best = nullptr;
    std::vector<Subspace> between = enumerate_between(lo, hi, c.at(i).dim());
    for (const Subspace& cand : between)
        if (!best || cmp_q(cand, *best) < 0) best = &cand;
    return *best == c.at(i);
}

Subspace min_between(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (!b.contains(a) || b.dim() <= a.dim()) fail(errc::not_nested, "need a strictly below b");
    FieldVector m = min_vector_of_difference(b, a);
    return a.sum(Subspace::span(a.field(), a.ambient(), {m}));
}

std::vector<Subspace> sorted_by_cmp_q(std::vector<Subspace> spaces) {
    std::sort(spaces.begin(), spaces.end(),
              [](const Subspace& u, const Subspace& v) { return cmp_q(u, v) < 0; });
    return spaces;
}

} // namespace qplex
