#include "qplex/vecspace.hpp"

#include <algorithm>
#include <unordered_set>

namespace qplex {

namespace {

constexpr uint64_t kLatticeGuard = uint64_t(1) << 24; // cap on q^dim sweeps
constexpr uint64_t kOutputGuard = uint64_t(1) << 22;  // cap on enumerated subspace lists

uint64_t checked_pow(uint64_t q, uint64_t n, uint64_t cap) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < n; ++i) {
        v *= q;
        if (v > cap) return cap + 1;
    }
    return v;
}

// Walks every vector of the subspace (zero first) without materializing the
// list; stops early when the visitor returns false.
template <typename Visit>
void for_each_element(const Subspace& s, Visit&& visit) {
    const Field& f = *s.field();
    if (checked_pow(f.size(), s.dim(), kLatticeGuard) > kLatticeGuard)
        fail(errc::too_large, "subspace too large to enumerate");
    const size_t n = s.ambient(), d = s.dim();
    const Matrix& basis = s.basis();
    std::vector<uint32_t> coeff(d, 0);
    std::vector<uint32_t> v(n, 0);
    while (true) {
        if (!visit(v)) return;
        size_t pos = 0;
        for (; pos < d; ++pos) {
            uint32_t old = coeff[pos];
            uint32_t next = (old + 1) % f.size();
            coeff[pos] = next;
            uint32_t delta = f.sub(next, old);
            for (size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(delta, basis.at(pos, j)));
            if (next != 0) break;
        }
        if (pos == d) return;
    }
}

} // namespace

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!field_) fail(errc::bad_args, "matrix needs a field");
}

Matrix Matrix::identity(const FieldPtr& field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& field, const std::vector<std::vector<uint32_t>>& rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(errc::dimension_mismatch, "ragged rows");
        for (size_t j = 0; j < cols; ++j) {
            if (rows[i][j] >= field->size()) fail(errc::bad_args, "entry out of range");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

Matrix Matrix::from_row_vectors(const FieldPtr& field, size_t n, const std::vector<FieldVector>& rows) {
    Matrix m(field, rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) {
        require_same_field(*field, *rows[i].field());
        if (rows[i].size() != n) fail(errc::dimension_mismatch, "vector length differs from ambient");
        for (size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

FieldVector Matrix::row(size_t i) const {
    std::vector<uint32_t> c(cols_);
    for (size_t j = 0; j < cols_; ++j) c[j] = at(i, j);
    return {field_, std::move(c)};
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    require_same_field(*field_, *other.field_);
    if (cols_ != other.rows_) fail(errc::dimension_mismatch, "matrix shapes do not multiply");
    Matrix out(field_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t aik = at(i, k);
            if (!aik) continue;
            for (size_t j = 0; j < other.cols_; ++j) {
                uint32_t prod = field_->mul(aik, other.at(k, j));
                out.set(i, j, field_->add(out.at(i, j), prod));
            }
        }
    return out;
}

Matrix Matrix::lifted_to(const FieldPtr& ext) const {
    if (field_->extension_degree() != 1)
        fail(errc::field_mismatch, "only prime-field matrices can be lifted");
    if (ext->characteristic() != field_->characteristic())
        fail(errc::field_mismatch, "extension has a different characteristic");
    Matrix out(ext, rows_, cols_);
    out.a_ = a_; // constants keep their reps
    return out;
}

std::pair<Matrix, size_t> Matrix::rref() const {
    const Field& f = *field_;
    // Packed fast path over gf(2).
    if (f.size() == 2 && cols_ <= 64) {
        std::vector<uint64_t> rows(rows_, 0);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (at(i, j)) rows[i] |= uint64_t(1) << j;
        size_t r = 0;
        for (size_t col = 0; col < cols_ && r < rows_; ++col) {
            uint64_t bit = uint64_t(1) << col;
            size_t pivot = r;
            while (pivot < rows_ && !(rows[pivot] & bit)) ++pivot;
            if (pivot == rows_) continue;
            std::swap(rows[r], rows[pivot]);
            for (size_t i = 0; i < rows_; ++i)
                if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
            ++r;
        }
        Matrix out(field_, rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (rows[i] & (uint64_t(1) << j)) out.set(i, j, 1);
        return {out, r};
    }

    Matrix out = *this;
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t pivot = r;
        while (pivot < rows_ && out.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (size_t j = 0; j < cols_; ++j) {
                uint32_t tmp = out.at(r, j);
                out.set(r, j, out.at(pivot, j));
                out.set(pivot, j, tmp);
            }
        uint32_t scale = f.inv(out.at(r, col));
        for (size_t j = col; j < cols_; ++j) out.set(r, j, f.mul(out.at(r, j), scale));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t c = out.at(i, col);
            if (!c) continue;
            for (size_t j = col; j < cols_; ++j)
                out.set(i, j, f.sub(out.at(i, j), f.mul(c, out.at(r, j))));
        }
        ++r;
    }
    return {out, r};
}

size_t Matrix::rank() const { return rref().second; }

std::vector<FieldVector> Matrix::kernel_basis() const {
    const Field& f = *field_;
    auto [R, rank] = rref();
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    {
        size_t col = 0;
        for (size_t i = 0; i < rank; ++i) {
            while (col < cols_ && R.at(i, col) == 0) ++col;
            pivot_col.push_back(col);
            is_pivot[col] = true;
        }
    }
    std::vector<FieldVector> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(cols_, 0);
        v[free] = 1;
        for (size_t i = 0; i < rank; ++i) v[pivot_col[i]] = f.neg(R.at(i, free));
        size_t lead = 0;
        while (v[lead] == 0) ++lead;
        uint32_t scale = f.inv(v[lead]);
        for (auto& c : v) c = f.mul(c, scale);
        basis.emplace_back(field_, std::move(v));
    }
    return basis;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_->same(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Subspace Subspace::zero(const FieldPtr& field, size_t n) { return {Matrix(field, 0, n), n}; }

Subspace Subspace::full(const FieldPtr& field, size_t n) {
    return {Matrix::identity(field, n), n};
}

Subspace Subspace::from_basis_matrix(const Matrix& m) {
    auto [R, rank] = m.rref();
    Matrix basis(m.field(), rank, m.cols());
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < m.cols(); ++j) basis.set(i, j, R.at(i, j));
    return {std::move(basis), m.cols()};
}

Subspace Subspace::span(const FieldPtr& field, size_t n, const std::vector<FieldVector>& vectors) {
    return from_basis_matrix(Matrix::from_row_vectors(field, n, vectors));
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
    require_same_field(*a.field(), *b.field());
    if (a.ambient() != b.ambient()) fail(errc::ambient_mismatch, "subspaces live in different ambient spaces");
}

bool Subspace::contains(const FieldVector& x) const {
    require_same_field(*field(), *x.field());
    if (x.size() != n_) fail(errc::ambient_mismatch, "vector length differs from ambient");
    const Field& f = *field();
    std::vector<uint32_t> v = x.coords();
    size_t col = 0;
    for (size_t i = 0; i < basis_.rows() && col < n_; ++i) {
        while (col < n_ && basis_.at(i, col) == 0) ++col; // pivot of row i
        if (col == n_) break;
        uint32_t c = v[col];
        if (c) {
            for (size_t j = col; j < n_; ++j) v[j] = f.sub(v[j], f.mul(c, basis_.at(i, j)));
        }
        ++col;
    }
    for (uint32_t c : v)
        if (c) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other);
    if (other.dim() > dim()) return false;
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    require_same_ambient(*this, other);
    Matrix stacked(field(), dim() + other.dim(), n_);
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < n_; ++j) stacked.set(i, j, basis_.at(i, j));
    for (size_t i = 0; i < other.dim(); ++i)
        for (size_t j = 0; j < n_; ++j) stacked.set(dim() + i, j, other.basis_.at(i, j));
    return from_basis_matrix(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
    require_same_ambient(*this, other);
    const Field& f = *field();
    const size_t du = dim(), dv = other.dim();
    if (du == 0 || dv == 0) return Subspace::zero(field(), n_);
    // Columns: basis of this, then negated basis of other; kernel vectors
    // (c, d) satisfy c·B_u = d·B_v, so c·B_u runs over the intersection.
    Matrix m(field(), n_, du + dv);
    for (size_t i = 0; i < du; ++i)
        for (size_t j = 0; j < n_; ++j) m.set(j, i, basis_.at(i, j));
    for (size_t i = 0; i < dv; ++i)
        for (size_t j = 0; j < n_; ++j) m.set(j, du + i, f.neg(other.basis_.at(i, j)));
    std::vector<FieldVector> gens;
    for (const FieldVector& k : m.kernel_basis()) {
        std::vector<uint32_t> w(n_, 0);
        for (size_t i = 0; i < du; ++i) {
            uint32_t c = k[i];
            if (!c) continue;
            for (size_t j = 0; j < n_; ++j) w[j] = f.add(w[j], f.mul(c, basis_.at(i, j)));
        }
        gens.emplace_back(field(), std::move(w));
    }
    return Subspace::span(field(), n_, gens);
}

std::vector<FieldVector> Subspace::elements() const {
    uint64_t count = checked_pow(field()->size(), dim(), uint64_t(1) << 20);
    if (count > (uint64_t(1) << 20)) fail(errc::too_large, "subspace too large to materialize");
    std::vector<FieldVector> out;
    out.reserve(size_t(count));
    for_each_element(*this, [&](const std::vector<uint32_t>& v) {
        out.emplace_back(field(), v);
        return true;
    });
    return out;
}

FieldVector Subspace::min_nonzero_vector() const {
    if (dim() == 0) fail(errc::empty_difference, "the zero subspace has no nonzero vector");
    // Rows of the canonical basis have strictly increasing pivots, so every
    // nonzero vector outside the last row's span has an earlier leading
    // coordinate; the least vector is the last row itself (pivot entry 1,
    // and 1 is minimal among nonzero elements in any admissible order).
    return basis_.row(dim() - 1);
}

std::string Subspace::to_string() const {
    if (dim() == 0) return "0";
    std::string out;
    for (size_t i = 0; i < dim(); ++i) {
        if (i) out += ';';
        out += basis_.row(i).to_string();
    }
    return out;
}

size_t Subspace::hash() const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(n_);
    mix(dim());
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < n_; ++j) mix(basis_.at(i, j) + 0x9e37);
    return h;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
}

BigInt gaussian_binomial(uint64_t n, uint64_t k, uint64_t q) {
    if (q < 2) fail(errc::bad_args, "q must be at least 2");
    if (k > n) return 0;
    BigInt num = 1, den = 1;
    BigInt qn = boost::multiprecision::pow(BigInt(q), unsigned(n));
    BigInt qk = boost::multiprecision::pow(BigInt(q), unsigned(k));
    BigInt qi = 1;
    for (uint64_t i = 0; i < k; ++i) {
        num *= qn - qi;
        den *= qk - qi;
        qi *= q;
    }
    return num / den; // exact
}

std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, size_t n, size_t k) {
    if (k > n) fail(errc::bad_dimension, "k exceeds the ambient dimension");
    const uint64_t q = field->size();
    if (checked_pow(q, n, kLatticeGuard) > kLatticeGuard)
        fail(errc::too_large, "q^n exceeds the sweep guard (2^24)");
    if (gaussian_binomial(n, k, q) > kOutputGuard)
        fail(errc::too_large, "Grassmannian too large to materialize");

    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(field, n));
        return out;
    }

    // One echelon profile per pivot support; free entries sit to the right of
    // their row's pivot and outside pivot columns.
    std::vector<size_t> pivots(k);
    for (size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<std::pair<size_t, size_t>> free_pos;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        Matrix m(field, k, n);
        for (size_t i = 0; i < k; ++i) m.set(i, pivots[i], 1);
        std::vector<uint32_t> digits(free_pos.size(), 0);
        while (true) {
            Matrix basis = m;
            for (size_t t = 0; t < free_pos.size(); ++t)
                basis.set(free_pos[t].first, free_pos[t].second, digits[t]);
            out.emplace_back(Subspace::from_basis_matrix(basis));
            size_t pos = 0;
            for (; pos < digits.size(); ++pos) {
                digits[pos] = (digits[pos] + 1) % uint32_t(q);
                if (digits[pos] != 0) break;
            }
            if (pos == digits.size()) break;
        }

        // next pivot support in lexicographic order
        size_t i = k;
        while (i-- > 0) {
            if (pivots[i] + (k - i) < n) {
                ++pivots[i];
                for (size_t l = i + 1; l < k; ++l) pivots[l] = pivots[l - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::vector<Subspace> enumerate_subspaces_of(const Subspace& u, size_t k) {
    if (k > u.dim()) fail(errc::bad_dimension, "k exceeds the subspace dimension");
    const FieldPtr& f = u.field();
    if (k == u.dim()) return {u};
    std::vector<Subspace> out;
    for (const Subspace& s : enumerate_grassmannian(f, u.dim(), k)) {
        // rows of s are coefficient vectors relative to u's basis
        std::vector<FieldVector> gens;
        Matrix lifted = s.basis() * u.basis();
        for (size_t i = 0; i < lifted.rows(); ++i) gens.push_back(lifted.row(i));
        out.push_back(Subspace::span(f, u.ambient(), gens));
    }
    return out;
}

std::vector<Subspace> enumerate_between(const Subspace& a, const Subspace& b, size_t k) {
    require_same_ambient(a, b);
    if (!b.contains(a)) fail(errc::not_nested, "lower space is not contained in the upper one");
    if (k < a.dim() || k > b.dim()) fail(errc::bad_dimension, "k outside [dim a, dim b]");
    if (k == a.dim()) return {a};
    if (k == b.dim()) return {b};

    const size_t n = a.ambient();
    // complement of a inside b: residuals of b's basis rows mod a
    std::vector<FieldVector> comp;
    for (size_t i = 0; i < b.dim(); ++i) {
        FieldVector r = b.basis().row(i);
        if (!a.contains(r)) comp.push_back(r);
    }
    Subspace comp_space = Subspace::span(a.field(), n, comp);
    // residuals may overlap a; reduce to an actual complement basis
    std::vector<FieldVector> comp_basis;
    Subspace acc = a;
    for (size_t i = 0; i < comp_space.dim() && acc.dim() < b.dim(); ++i) {
        FieldVector r = comp_space.basis().row(i);
        if (!acc.contains(r)) {
            comp_basis.push_back(r);
            acc = acc.sum(Subspace::span(a.field(), n, {r}));
        }
    }
    const size_t d = b.dim() - a.dim();
    Matrix comp_matrix = Matrix::from_row_vectors(a.field(), n, comp_basis);

    std::vector<Subspace> out;
    for (const Subspace& s : enumerate_grassmannian(a.field(), d, k - a.dim())) {
        std::vector<FieldVector> gens;
        for (size_t i = 0; i < a.dim(); ++i) gens.push_back(a.basis().row(i));
        Matrix lifted = s.basis() * comp_matrix;
        for (size_t i = 0; i < lifted.rows(); ++i) gens.push_back(lifted.row(i));
        out.push_back(Subspace::span(a.field(), n, gens));
    }
    return out;
}

FieldVector min_vector_of_difference(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v);
    if (v.contains(u)) fail(errc::empty_difference, "u is contained in v");
    const Field& f = *u.field();
    std::optional<std::vector<uint32_t>> best;
    auto below = [&](const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
        for (size_t i = 0; i < x.size(); ++i) {
            int c = f.cmp(x[i], y[i]);
            if (c) return c < 0;
        }
        return false;
    };
    for_each_element(u, [&](const std::vector<uint32_t>& x) {
        bool zero = true;
        for (uint32_t c : x)
            if (c) {
                zero = false;
                break;
            }
        if (!zero && !v.contains(FieldVector(u.field(), x)) && (!best || below(x, *best))) best = x;
        return true;
    });
    return {u.field(), std::move(*best)};
}

} // namespace qplex
