#include "qplex/qmatroid.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace qplex {

RankMetricCode RankMetricCode::make(FieldPtr base, FieldPtr ext, Matrix generator) {
    if (!base || !ext) fail(errc::bad_args, "code needs base and extension fields");
    if (base->extension_degree() != 1)
        fail(errc::bad_args, "only a prime base field is supported");
    if (ext->characteristic() != base->characteristic())
        fail(errc::field_mismatch, "extension characteristic differs from the base field");
    require_same_field(*ext, *generator.field());
    if (generator.rows() == 0 || generator.cols() == 0)
        fail(errc::bad_args, "generator matrix must be nonempty");
    if (generator.rank() != generator.rows())
        fail(errc::bad_args, "generator matrix must have full row rank");
    return {std::move(base), std::move(ext), std::move(generator)};
}

RankMetricCode RankMetricCode::read(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    FieldPtr ext, base;
    std::vector<std::vector<uint32_t>> rows;
    size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        try {
            if (!ext) {
                if (token != "field") fail(errc::parse_error, "expected `field gf(...)`");
                std::string spec;
                if (!(ls >> spec)) fail(errc::parse_error, "missing field spec");
                ext = Field::parse(spec);
                continue;
            }
            if (!base) {
                if (token != "base") fail(errc::parse_error, "expected `base gf(p)`");
                std::string spec;
                if (!(ls >> spec)) fail(errc::parse_error, "missing base field spec");
                base = Field::parse(spec);
                continue;
            }
            std::vector<uint32_t> row;
            row.push_back(ext->parse_element(token));
            while (ls >> token) row.push_back(ext->parse_element(token));
            if (width == 0) width = row.size();
            if (row.size() != width) fail(errc::parse_error, "ragged generator row");
            rows.push_back(std::move(row));
        } catch (const Error& e) {
            if (e.code() == errc::parse_error || e.code() == errc::bad_args ||
                e.code() == errc::unsupported_size || e.code() == errc::non_prime ||
                e.code() == errc::reducible_modulus)
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
            throw;
        }
    }
    if (!ext || !base) fail(errc::parse_error, "missing `field` or `base` header");
    if (rows.empty()) fail(errc::parse_error, "missing generator rows");
    return make(std::move(base), std::move(ext), Matrix::from_rows(ext, rows));
}

RankMetricCode RankMetricCode::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    return read(in);
}

Matrix RankMetricCode::pairing_matrix(const Subspace& u) const {
    require_same_field(*base_, *u.field());
    if (u.ambient() != length()) fail(errc::dimension_mismatch, "subspace length differs from the code length");
    Matrix y = u.basis().lifted_to(ext_);
    return gen_ * y.transposed();
}

size_t RankMetricCode::rank_of(const Subspace& u) const {
    if (u.dim() == 0) return 0;
    return pairing_matrix(u).rank();
}

QMatroid::QMatroid(FieldPtr field, size_t n, RankFn fn)
    : field_(std::move(field)), n_(n), fn_(std::move(fn)) {
    if (!field_ || !fn_) fail(errc::bad_args, "matroid needs a field and a rank function");
    if (n_ == 0) fail(errc::bad_args, "ambient dimension must be positive");
}

QMatroid QMatroid::from_code(const RankMetricCode& code) {
    return {code.base_field(), code.length(),
            [code](const Subspace& u) { return code.rank_of(u); }};
}

QMatroid QMatroid::uniform(const FieldPtr& field, size_t n, size_t k) {
    if (k > n) fail(errc::bad_dimension, "uniform matroid rank exceeds the ambient dimension");
    return {field, n, [k](const Subspace& u) { return std::min(u.dim(), k); }};
}

QMatroid QMatroid::free_matroid(const FieldPtr& field, size_t n) {
    return {field, n, [](const Subspace& u) { return u.dim(); }};
}

size_t QMatroid::rank(const Subspace& u) const {
    require_same_field(*field_, *u.field());
    if (u.ambient() != n_) fail(errc::ambient_mismatch, "subspace has the wrong ambient dimension");
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(u);
        if (it != memo_.end()) return it->second;
    }
    size_t r = fn_(u);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return memo_.emplace(u, r).first->second;
}

size_t QMatroid::rank() const { return rank(Subspace::full(field_, n_)); }

std::vector<std::vector<Subspace>> QMatroid::all_subspaces_by_dim(size_t pair_budget) const {
    BigInt total = 0;
    for (size_t k = 0; k <= n_; ++k) total += gaussian_binomial(n_, k, field_->size());
    if (total > 100000) fail(errc::too_large, "subspace lattice exceeds the enumeration guard");
    if (pair_budget && total * total > BigInt(pair_budget))
        fail(errc::too_large, "subspace lattice too large for pairwise checks");
    std::vector<std::vector<Subspace>> by_dim(n_ + 1);
    for (size_t k = 0; k <= n_; ++k) by_dim[k] = enumerate_grassmannian(field_, n_, k);
    return by_dim;
}

QMatroid::AxiomReport QMatroid::verify_axioms() const {
    auto by_dim = all_subspaces_by_dim(size_t(1) << 24);
    AxiomReport report;

    std::vector<Subspace> all;
    for (auto& v : by_dim) all.insert(all.end(), v.begin(), v.end());

    for (const Subspace& u : all) {
        size_t r = rank(u);
        if (r > u.dim()) {
            report.ok = false;
            report.axiom = "R1";
            report.violation = "rho(" + u.to_string() + ") = " + std::to_string(r) +
                               " exceeds dim = " + std::to_string(u.dim());
            return report;
        }
    }
    for (const Subspace& u : all) {
        for (const Subspace& v : all) {
            if (&u == &v) continue;
            if (u.dim() < v.dim() && v.contains(u) && rank(u) > rank(v)) {
                report.ok = false;
                report.axiom = "R2";
                report.violation = "rho drops from " + u.to_string() + " to " + v.to_string();
                return report;
            }
        }
    }
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            const Subspace& u = all[i];
            const Subspace& v = all[j];
            size_t lhs = rank(u.sum(v)) + rank(u.intersect(v));
            size_t rhs = rank(u) + rank(v);
            if (lhs > rhs) {
                report.ok = false;
                report.axiom = "R3";
                report.violation = "submodularity fails for " + u.to_string() + " and " + v.to_string();
                return report;
            }
        }
    }
    return report;
}

std::vector<Subspace> QMatroid::independent_spaces() const {
    auto by_dim = all_subspaces_by_dim(0);
    std::vector<Subspace> out;
    for (auto& level : by_dim)
        for (Subspace& u : level)
            if (rank(u) == u.dim()) out.push_back(std::move(u));
    return out;
}

std::vector<Subspace> QMatroid::bases() const {
    std::vector<Subspace> indep = independent_spaces();
    std::unordered_set<Subspace, SubspaceHash> indep_set(indep.begin(), indep.end());
    std::vector<Subspace> out;
    for (const Subspace& u : indep) {
        bool maximal = true;
        if (u.dim() < n_) {
            for (const Subspace& w : enumerate_between(u, Subspace::full(field_, n_), u.dim() + 1)) {
                if (indep_set.count(w)) {
                    maximal = false;
                    break;
                }
            }
        }
        if (maximal) out.push_back(u);
    }
    if (out.empty()) fail(errc::empty_complex, "matroid has no bases");
    size_t r = out.front().dim();
    for (const Subspace& b : out)
        if (b.dim() != r) fail(errc::not_pure, "rank function is not a q-matroid: bases of unequal dimension");
    return out;
}

QComplex QMatroid::matroid_complex() const { return QComplex::from_facets(field_, n_, bases()); }

} // namespace qplex
