#include "qplex/homology.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace qplex {

namespace {

struct Overflow {};

inline int64_t c_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline int64_t c_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline int64_t c_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline int64_t c_abs(int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}

inline BigInt c_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt c_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt c_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt c_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

// Classical Smith reduction: minimal-absolute-value pivoting, gcd-style row
// and column clearing, then the divisibility fixup so each pivot divides the
// rest of the submatrix (which makes the diagonal an invariant-factor chain).
template <typename T>
std::vector<T> snf_diagonal(std::vector<T> a, size_t rows, size_t cols) {
    auto at = [&](size_t i, size_t j) -> T& { return a[i * cols + j]; };
    auto swap_rows = [&](size_t i1, size_t i2) {
        for (size_t j = 0; j < cols; ++j) std::swap(at(i1, j), at(i2, j));
    };
    auto swap_cols = [&](size_t j1, size_t j2) {
        for (size_t i = 0; i < rows; ++i) std::swap(at(i, j1), at(i, j2));
    };

    std::vector<T> diag;
    const size_t lim = std::min(rows, cols);
    for (size_t t = 0; t < lim; ++t) {
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (at(i, j) == 0) continue;
                if (!found || c_abs(at(i, j)) < c_abs(at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        while (true) {
            bool restart = false;
            for (size_t i = t + 1; i < rows && !restart; ++i) {
                if (at(i, t) == 0) continue;
                T q = at(i, t) / at(t, t);
                if (q != 0)
                    for (size_t j = t; j < cols; ++j) at(i, j) = c_sub(at(i, j), c_mul(q, at(t, j)));
                if (at(i, t) != 0) {
                    swap_rows(i, t);
                    restart = true;
                }
            }
            if (restart) continue;
            for (size_t j = t + 1; j < cols && !restart; ++j) {
                if (at(t, j) == 0) continue;
                T q = at(t, j) / at(t, t);
                if (q != 0)
                    for (size_t i = t; i < rows; ++i) at(i, j) = c_sub(at(i, j), c_mul(q, at(i, t)));
                if (at(t, j) != 0) {
                    swap_cols(j, t);
                    restart = true;
                }
            }
            if (restart) continue;
            for (size_t i = t + 1; i < rows && !restart; ++i)
                for (size_t j = t + 1; j < cols && !restart; ++j)
                    if (at(i, j) % at(t, t) != 0) {
                        for (size_t l = t; l < cols; ++l) at(t, l) = c_add(at(t, l), at(i, l));
                        restart = true;
                    }
            if (!restart) break;
        }
        diag.push_back(c_abs(at(t, t)));
    }
    return diag;
}

SnfResult snf_from_diag_int64(const std::vector<int64_t>& diag) {
    SnfResult out;
    out.rank = diag.size();
    for (int64_t d : diag) out.invariant_factors.emplace_back(d);
    return out;
}

} // namespace

namespace detail {

SnfResult smith_normal_form_bigint(const IntMatrix& m) {
    std::vector<BigInt> a(m.a.begin(), m.a.end());
    std::vector<BigInt> diag = snf_diagonal(std::move(a), m.rows, m.cols);
    SnfResult out;
    out.rank = diag.size();
    out.invariant_factors = std::move(diag);
    return out;
}

} // namespace detail

SnfResult smith_normal_form(const IntMatrix& m) {
    try {
        return snf_from_diag_int64(snf_diagonal(m.a, m.rows, m.cols));
    } catch (const Overflow&) {
        return detail::smith_normal_form_bigint(m);
    }
}

namespace {

std::vector<std::vector<std::vector<int>>> simplices_by_degree(const SimplicialComplex& k) {
    std::vector<std::vector<std::vector<int>>> S;
    for (int p = 0; p <= k.dim(); ++p) S.push_back(k.simplices(p));
    return S;
}

} // namespace

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k, bool reduced) {
    std::vector<BoundaryMatrix> out;
    if (k.dim() < 0) return out;
    auto S = simplices_by_degree(k);

    {
        BoundaryMatrix b0;
        b0.degree = 0;
        b0.m = IntMatrix(reduced ? 1 : 0, S[0].size());
        if (reduced)
            for (size_t c = 0; c < S[0].size(); ++c) b0.m.set(0, c, 1);
        out.push_back(std::move(b0));
    }

    for (int p = 1; p <= k.dim(); ++p) {
        std::map<std::vector<int>, size_t> index;
        for (size_t i = 0; i < S[p - 1].size(); ++i) index.emplace(S[p - 1][i], i);
        BoundaryMatrix bp;
        bp.degree = p;
        bp.m = IntMatrix(S[p - 1].size(), S[p].size());
        for (size_t c = 0; c < S[p].size(); ++c) {
            const auto& simplex = S[p][c];
            std::vector<int> face(simplex.begin() + 1, simplex.end());
            int sign = 1;
            for (int l = 0; l <= p; ++l) {
                bp.m.set(index.at(face), c, sign);
                if (l < p) face[l] = simplex[l]; // slide the omitted vertex rightwards
                sign = -sign;
            }
        }
        out.push_back(std::move(bp));
    }
    return out;
}

void dump_boundary_matrices(const SimplicialComplex& k, bool reduced, std::ostream& out) {
    for (const BoundaryMatrix& b : boundary_matrices(k, reduced)) {
        out << b.degree << " " << b.m.rows << " " << b.m.cols << "\n";
        for (size_t i = 0; i < b.m.rows; ++i)
            for (size_t j = 0; j < b.m.cols; ++j)
                if (b.m.at(i, j) != 0) out << i << " " << j << " " << b.m.at(i, j) << "\n";
    }
}

int64_t HomologyReport::rank_at(int degree) const {
    for (const HomologyGroup& g : groups)
        if (g.degree == degree) return g.rank;
    return 0;
}

HomologyReport reduced_homology(const SimplicialComplex& k) {
    HomologyReport report;
    if (k.dim() < 0) {
        // only the empty face: a (-1)-sphere
        report.groups.push_back({-1, 1, {}});
        report.euler = -1;
        report.concentrated_at = -1;
        return report;
    }

    auto B = boundary_matrices(k, true);
    std::vector<SnfResult> snf(B.size());
    for (size_t p = 0; p < B.size(); ++p) snf[p] = smith_normal_form(B[p].m);

    int64_t euler = -1;
    for (int p = 0; p <= k.dim(); ++p) {
        int64_t cp = int64_t(B[p].m.cols);
        euler += (p % 2 == 0 ? cp : -cp);
        int64_t rank_in = int64_t(snf[p].rank);
        int64_t rank_out = p + 1 <= k.dim() ? int64_t(snf[p + 1].rank) : 0;
        HomologyGroup g;
        g.degree = p;
        g.rank = cp - rank_in - rank_out;
        if (p + 1 <= k.dim())
            for (const BigInt& d : snf[p + 1].invariant_factors)
                if (d > 1) g.torsion.push_back(d);
        if (!g.torsion.empty()) report.torsion_free = false;
        report.groups.push_back(std::move(g));
    }
    report.euler = euler;

    int nontrivial = 0;
    for (const HomologyGroup& g : report.groups)
        if (g.rank != 0 || !g.torsion.empty()) {
            ++nontrivial;
            report.concentrated_at = g.degree;
        }
    if (nontrivial != 1) report.concentrated_at.reset();
    return report;
}

namespace {

// Reduced betti numbers indexed by degree+1 (slot 0 holds degree -1).
std::vector<int64_t> betti_vector(const QComplex& c, size_t slots, bool& torsion_free) {
    HomologyReport rep = reduced_homology(order_complex(c, true));
    torsion_free = rep.torsion_free;
    std::vector<int64_t> out(slots, 0);
    for (const HomologyGroup& g : rep.groups)
        if (size_t(g.degree + 1) < slots) out[g.degree + 1] = g.rank;
    return out;
}

} // namespace

MVReport mayer_vietoris_stage_check(const QComplex& c, const std::vector<Subspace>& shelling_order) {
    if (!c.pure()) fail(errc::not_pure, "stage recursion needs a pure complex");
    const size_t k = c.dim();
    if (k < 1) fail(errc::bad_dimension, "stage recursion needs dimension at least 1");
    if (shelling_order.size() != c.facet_count())
        fail(errc::bad_args, "shelling order must list every facet exactly once");

    const size_t slots = k + 1; // degrees -1 .. k-1
    MVReport report;
    report.ok = true;

    bool tf = true;
    std::vector<Subspace> prefix{shelling_order[0]};
    std::vector<int64_t> before =
        betti_vector(QComplex::from_facets(c.field(), c.ambient(), prefix), slots, tf);

    for (size_t j = 1; j < shelling_order.size(); ++j) {
        const Subspace& newf = shelling_order[j];
        MVStage stage;
        stage.stage = j;
        stage.before = before;
        stage.torsion_free = tf;

        // intersection with the prefix: generated by the codimension-1 cuts
        std::vector<Subspace> cuts;
        std::vector<Subspace> all_cuts;
        for (size_t i = 0; i < j; ++i) {
            Subspace inter = shelling_order[i].intersect(newf);
            if (inter.dim() + 1 == k) cuts.push_back(inter);
            all_cuts.push_back(std::move(inter));
        }
        if (cuts.empty())
            fail(errc::shelling_broken,
                 "stage " + std::to_string(j) + ": no codimension-1 intersection with the prefix");
        for (const Subspace& inter : all_cuts) {
            bool covered = false;
            for (const Subspace& cut : cuts)
                if (cut.contains(inter)) {
                    covered = true;
                    break;
                }
            if (!covered)
                fail(errc::shelling_broken,
                     "stage " + std::to_string(j) + ": intersection is not pure of codimension 1");
        }

        bool tf_int = true, tf_new = true, tf_after = true;
        QComplex int_complex = QComplex::from_facets(c.field(), c.ambient(), cuts);
        stage.intersection = betti_vector(int_complex, slots, tf_int);

        std::vector<int64_t> newf_betti =
            betti_vector(QComplex::from_facets(c.field(), c.ambient(), {newf}), slots, tf_new);
        stage.new_facet_contractible =
            std::all_of(newf_betti.begin(), newf_betti.end(), [](int64_t b) { return b == 0; });

        prefix.push_back(newf);
        stage.after = betti_vector(QComplex::from_facets(c.field(), c.ambient(), prefix), slots, tf_after);

        stage.torsion_free = tf && tf_int && tf_new && tf_after;

        stage.intersection_concentrated = true;
        for (size_t slot = 0; slot < slots; ++slot)
            if (stage.intersection[slot] != 0 && slot != k - 1) // slot k-1 is degree k-2
                stage.intersection_concentrated = false;

        stage.identity_ok = true;
        for (size_t slot = 0; slot < slots; ++slot) {
            int64_t inter_below = slot == 0 ? 0 : stage.intersection[slot - 1];
            if (stage.after[slot] != stage.before[slot] + inter_below) stage.identity_ok = false;
        }

        if (!(stage.identity_ok && stage.intersection_concentrated && stage.new_facet_contractible &&
              stage.torsion_free))
            report.ok = false;

        before = stage.after;
        tf = tf_after;
        report.stages.push_back(std::move(stage));
    }

    report.final_betti = before;
    return report;
}

} // namespace qplex
