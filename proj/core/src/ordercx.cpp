#include "qplex/ordercx.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qplex {

namespace {

constexpr uint64_t kVertexGuard = 100000;
constexpr uint64_t kChainGuard = 1000000;

BigInt flag_count(size_t dim, uint64_t q) {
    BigInt c = 1;
    for (size_t i = 1; i <= dim; ++i) c *= gaussian_binomial(i, 1, q);
    return c;
}

// All complete flags 0 = U_0 ⊂ ... ⊂ U_d = top.
void collect_flags(const Subspace& top, std::vector<std::vector<Subspace>>& out) {
    if (top.dim() == 0) {
        out.push_back({top});
        return;
    }
    std::vector<std::vector<Subspace>> below;
    for (const Subspace& w : enumerate_subspaces_of(top, top.dim() - 1)) {
        below.clear();
        collect_flags(w, below);
        for (auto& flag : below) {
            flag.push_back(top);
            out.push_back(std::move(flag));
        }
    }
}

std::vector<std::vector<Subspace>> flags_of(const Subspace& top) {
    std::vector<std::vector<Subspace>> out;
    collect_flags(top, out);
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(size_t vertex_count,
                                                 std::vector<std::vector<int>> facets,
                                                 std::vector<Subspace> vertex_labels) {
    if (!vertex_labels.empty() && vertex_labels.size() != vertex_count)
        fail(errc::bad_args, "label count differs from vertex count");
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    k.vertex_labels_ = std::move(vertex_labels);
    std::set<std::vector<int>> seen;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || size_t(v) >= vertex_count) fail(errc::bad_index, "facet vertex out of range");
        seen.insert(std::move(f));
    }
    for (const auto& f : seen) {
        bool dominated = false;
        for (const auto& g : seen)
            if (&f != &g && f.size() < g.size() &&
                std::includes(g.begin(), g.end(), f.begin(), f.end()))
                dominated = true;
        if (!dominated) k.facets_.push_back(f);
    }
    if (k.facets_.empty()) fail(errc::empty_complex, "a simplicial complex needs at least one facet");
    k.dim_ = -1;
    for (const auto& f : k.facets_) k.dim_ = std::max(k.dim_, int(f.size()) - 1);
    k.pure_ = std::all_of(k.facets_.begin(), k.facets_.end(),
                          [&](const auto& f) { return int(f.size()) - 1 == k.dim_; });
    return k;
}

std::vector<std::vector<int>> SimplicialComplex::simplices(int p) const {
    std::set<std::vector<int>> out;
    if (p < 0) return {};
    for (const auto& f : facets_) {
        if (int(f.size()) < p + 1) continue;
        // all (p+1)-subsets of f
        std::vector<size_t> idx(p + 1);
        for (int i = 0; i <= p; ++i) idx[i] = i;
        while (true) {
            std::vector<int> s(p + 1);
            for (int i = 0; i <= p; ++i) s[i] = f[idx[i]];
            out.insert(std::move(s));
            int i = p;
            while (i >= 0 && idx[i] == f.size() - (p + 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int l = i + 1; l <= p; ++l) idx[l] = idx[l - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

SimplicialComplex order_complex(const QComplex& c, bool punctured) {
    const uint64_t q = c.field()->size();
    BigInt chains = 0;
    for (const Subspace& f : c.facets()) chains += flag_count(f.dim(), q);
    if (chains > kChainGuard) fail(errc::too_large, "order complex has too many maximal chains");

    std::vector<Subspace> verts = c.all_faces(!punctured);
    if (verts.size() > kVertexGuard) fail(errc::too_large, "order complex has too many vertices");
    std::unordered_map<Subspace, int, SubspaceHash> id;
    for (size_t i = 0; i < verts.size(); ++i) id.emplace(verts[i], int(i));

    std::vector<std::vector<int>> facets;
    for (const Subspace& f : c.facets()) {
        for (auto& flag : flags_of(f)) {
            std::vector<int> simplex;
            simplex.reserve(flag.size());
            for (const Subspace& u : flag) {
                if (punctured && u.dim() == 0) continue;
                simplex.push_back(id.at(u));
            }
            facets.push_back(std::move(simplex));
        }
    }
    const size_t vertex_count = verts.size();
    return SimplicialComplex::from_facets(vertex_count, std::move(facets), std::move(verts));
}

std::vector<Chain> maximal_chains_sorted(const QComplex& c) {
    if (!c.pure()) fail(errc::not_pure, "maximal chains are sorted per dimension profile; complex must be pure");
    BigInt chains = flag_count(c.dim(), c.field()->size()) * BigInt(c.facet_count());
    if (chains > kChainGuard) fail(errc::too_large, "too many maximal chains");
    std::vector<Chain> out;
    for (const Subspace& f : c.facets())
        for (auto& flag : flags_of(f)) out.push_back(Chain::of(std::move(flag)));
    std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) { return cmp_l(a, b) < 0; });
    return out;
}

ShellingCertificate is_simplicial_shelling(const SimplicialComplex& k, const std::vector<size_t>& order) {
    if (!k.pure()) fail(errc::not_pure, "shellings are defined for pure complexes");
    if (k.dim() < 0) fail(errc::empty_complex, "shelling check needs a nonempty complex");
    const size_t t = k.facets().size();
    if (order.size() != t) fail(errc::bad_args, "order must permute all facets");
    {
        std::vector<bool> seen(t, false);
        for (size_t idx : order) {
            if (idx >= t || seen[idx]) fail(errc::bad_args, "order is not a permutation");
            seen[idx] = true;
        }
    }

    ShellingCertificate cert;
    cert.pure = true;
    cert.dim = size_t(k.dim());
    cert.order = order;
    const size_t m = size_t(k.dim()) + 1; // facet cardinality

    std::vector<const std::vector<int>*> F;
    F.reserve(t);
    for (size_t idx : order) F.push_back(&k.facets()[idx]);

    std::vector<std::vector<int>> inter(t);
    for (size_t j = 1; j < t; ++j) {
        std::vector<size_t> codim1;
        for (size_t l = 0; l < j; ++l) {
            inter[l].clear();
            std::set_intersection(F[l]->begin(), F[l]->end(), F[j]->begin(), F[j]->end(),
                                  std::back_inserter(inter[l]));
            if (inter[l].size() == m - 1) codim1.push_back(l);
        }
        for (size_t i = 0; i < j; ++i) {
            bool found = false;
            for (size_t l : codim1) {
                if (std::includes(inter[l].begin(), inter[l].end(), inter[i].begin(), inter[i].end())) {
                    cert.witnesses.push_back({i, j, l});
                    found = true;
                    break;
                }
            }
            if (!found) {
                cert.ok = false;
                cert.violation = {i, j};
                cert.witnesses.clear();
                return cert;
            }
        }
    }
    cert.ok = true;
    return cert;
}

std::vector<size_t> chain_facet_order(const SimplicialComplex& k, const std::vector<Chain>& chains) {
    std::map<std::vector<int>, size_t> pos;
    for (size_t i = 0; i < k.facets().size(); ++i) pos.emplace(k.facets()[i], i);
    std::unordered_map<Subspace, int, SubspaceHash> id;
    for (size_t i = 0; i < k.vertex_labels().size(); ++i) id.emplace(k.vertex_labels()[i], int(i));
    std::vector<size_t> order;
    order.reserve(chains.size());
    for (const Chain& c : chains) {
        std::vector<int> simplex;
        for (const Subspace& u : c.spaces()) {
            auto it = id.find(u);
            if (it == id.end()) {
                if (u.dim() == 0) continue; // punctured complex
                fail(errc::bad_args, "chain space is not a vertex of the complex");
            }
            simplex.push_back(it->second);
        }
        std::sort(simplex.begin(), simplex.end());
        auto it = pos.find(simplex);
        if (it == pos.end()) fail(errc::bad_args, "chain is not a facet of the complex");
        order.push_back(it->second);
    }
    return order;
}

namespace {

// Punctured view: positions 1.. of a full flag (the zero subspace sits at 0).
// S ⊆ chain_i tested dimension-aligned: both chains carry one space per dimension.
bool subchain_of(const Chain& chain_j, size_t skip_pos, const Chain& chain_i) {
    for (size_t p = 1; p < chain_j.length(); ++p) {
        if (p == skip_pos) continue;
        if (chain_i.at(p) != chain_j.at(p)) return false;
    }
    return true;
}

} // namespace

RestrictionSet restriction(size_t j, const std::vector<Chain>& sorted_chains) {
    if (j >= sorted_chains.size()) fail(errc::bad_index, "chain index out of range");
    const Chain& chain = sorted_chains[j];
    RestrictionSet out;
    out.chain_index = j;
    const size_t r = chain.length() - 1; // punctured size
    for (size_t pos = 1; pos <= r; ++pos) {
        bool in_earlier = false;
        if (r == 1) {
            // removing the only vertex leaves the empty face, present once any
            // earlier chain exists
            in_earlier = j > 0;
        } else {
            for (size_t i = 0; i < j && !in_earlier; ++i)
                in_earlier = subchain_of(chain, pos, sorted_chains[i]);
        }
        if (in_earlier) out.positions.push_back(pos - 1);
    }
    out.full = out.positions.size() == r;
    return out;
}

int64_t count_homology_facets_oracle(const QComplex& c) {
    if (!c.pure()) fail(errc::not_pure, "restriction counting needs a pure complex");
    if (c.dim() == 0) fail(errc::bad_dimension, "restriction counting needs dimension at least 1");
    std::vector<Chain> chains = maximal_chains_sorted(c);
    int64_t count = 0;
    for (size_t j = 0; j < chains.size(); ++j)
        if (restriction(j, chains).full) ++count;
    return count;
}

namespace {

// Chains below `top` in which no space contains the least nonzero vector of
// the space above it; the count only depends on `top`.
int64_t descent_count(const Subspace& top, std::unordered_map<Subspace, int64_t, SubspaceHash>& memo) {
    if (top.dim() <= 1) return 1;
    auto it = memo.find(top);
    if (it != memo.end()) return it->second;
    FieldVector least = top.min_nonzero_vector();
    int64_t total = 0;
    for (const Subspace& w : enumerate_subspaces_of(top, top.dim() - 1))
        if (!w.contains(least)) total += descent_count(w, memo);
    memo.emplace(top, total);
    return total;
}

} // namespace

int64_t count_homology_facets_characterized(const QComplex& c) {
    if (!c.pure()) fail(errc::not_pure, "restriction counting needs a pure complex");
    const size_t r = c.dim();
    if (r == 0) fail(errc::bad_dimension, "restriction counting needs dimension at least 1");
    std::vector<Subspace> sorted = c.sorted_facets();

    std::unordered_map<Subspace, int64_t, SubspaceHash> memo;
    int64_t count = 0;
    for (size_t j = 0; j < sorted.size(); ++j) {
        const Subspace& fj = sorted[j];
        if (r == 1) {
            if (j > 0) ++count; // the empty hyperplane lies in every earlier facet
            continue;
        }
        FieldVector least = fj.min_nonzero_vector();
        for (const Subspace& hyper : enumerate_subspaces_of(fj, r - 1)) {
            if (hyper.contains(least)) continue;
            bool in_earlier = false;
            for (size_t i = 0; i < j && !in_earlier; ++i) in_earlier = sorted[i].contains(hyper);
            if (!in_earlier) continue;
            count += descent_count(hyper, memo);
        }
    }
    return count;
}

BettiBreakdown betti_formula(const QComplex& c) {
    if (!c.pure()) fail(errc::not_pure, "the rank formula needs a pure complex");
    const size_t k = c.dim();
    if (k == 0) fail(errc::bad_dimension, "the rank formula needs dimension at least 1");
    std::vector<Subspace> sorted = c.sorted_facets();

    BettiBreakdown out;
    out.t = sorted.size();

    std::optional<FieldVector> x;
    for (const Subspace& f : sorted) {
        FieldVector m = f.min_nonzero_vector();
        if (!x || vec_cmp(m, *x) < 0) x = m;
    }
    out.x = x;

    std::vector<bool> has_x(sorted.size());
    size_t s = 0;
    for (size_t j = 0; j < sorted.size(); ++j) {
        has_x[j] = sorted[j].contains(*x);
        if (has_x[j]) ++s;
    }
    for (size_t j = 0; j < s; ++j)
        if (!has_x[j])
            fail(errc::not_prefix, "facets containing the least vector do not form an order prefix");
    out.s = s;

    const uint64_t q = c.field()->size();
    out.interior_factor = boost::multiprecision::pow(BigInt(q), unsigned((k - 1) * (k >= 2 ? k - 2 : 0) / 2));

    BigInt total = 0;
    for (size_t j = s; j < sorted.size(); ++j) {
        const Subspace& fj = sorted[j];
        FieldVector xj = fj.min_nonzero_vector();
        std::unordered_set<Subspace, SubspaceHash> distinct;
        for (size_t i = 0; i < j; ++i) {
            Subspace inter = sorted[i].intersect(fj);
            if (inter.dim() + 1 != k) continue;
            if (inter.contains(xj)) continue;
            distinct.insert(std::move(inter));
        }
        BettiBreakdown::PerFacet pf;
        pf.j = j + 1;
        pf.xj = xj;
        pf.rj = int64_t(distinct.size());
        total += pf.rj;
        out.per_facet.push_back(std::move(pf));
    }
    out.rank = out.interior_factor * total;
    return out;
}

std::optional<NonMatroidWitness> non_matroid_witness(const QComplex& c) {
    if (c.dim() < 2 || c.facet_count() < 2 || !c.pure()) return std::nullopt;
    std::vector<Subspace> sorted = c.sorted_facets();
    const Subspace& f1 = sorted[0];
    const Subspace& f2 = sorted[1];
    FieldVector x1 = min_vector_of_difference(f1, f2);
    FieldVector x2 = min_vector_of_difference(f2, f1);

    const Subspace* plane = nullptr;
    std::vector<Subspace> planes = enumerate_subspaces_of(f1, 2);
    for (const Subspace& p : planes) {
        if (!p.contains(x1)) continue;
        if (!plane || cmp_q(p, *plane) < 0) plane = &p;
    }

    NonMatroidWitness w{x1,
                        x2,
                        *plane,
                        {Subspace::zero(c.field(), c.ambient()),
                         Subspace::span(c.field(), c.ambient(), {x1}), *plane},
                        {Subspace::zero(c.field(), c.ambient()),
                         Subspace::span(c.field(), c.ambient(), {x2})}};
    return w;
}

} // namespace qplex
