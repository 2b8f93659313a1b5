#include "qplex/qcomplex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace qplex {

QComplex QComplex::from_facets(const FieldPtr& field, size_t n, std::vector<Subspace> facets) {
    QComplex c(field, n);
    std::unordered_set<Subspace, SubspaceHash> seen;
    std::vector<Subspace> unique;
    for (Subspace& s : facets) {
        require_same_field(*field, *s.field());
        if (s.ambient() != n) fail(errc::ambient_mismatch, "facet lives in a different ambient space");
        if (seen.insert(s).second) unique.push_back(std::move(s));
    }
    if (unique.empty()) fail(errc::empty_complex, "a q-complex needs at least one facet");
    for (size_t i = 0; i < unique.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < unique.size() && !dominated; ++j)
            if (i != j && unique[j].contains(unique[i])) dominated = true;
        if (!dominated) c.facets_.push_back(unique[i]);
    }
    c.dim_ = 0;
    for (const Subspace& s : c.facets_) c.dim_ = std::max(c.dim_, s.dim());
    c.pure_ = std::all_of(c.facets_.begin(), c.facets_.end(),
                          [&](const Subspace& s) { return s.dim() == c.dim_; });
    return c;
}

QComplex QComplex::uniform(const FieldPtr& field, size_t n, size_t k) {
    if (k == 0 || k > n) fail(errc::bad_dimension, "uniform complex needs 0 < k <= n");
    return from_facets(field, n, enumerate_grassmannian(field, n, k));
}

QComplex QComplex::q_sphere(const Subspace& top) {
    if (top.dim() < 1) fail(errc::bad_dimension, "sphere needs a top space of dimension at least 1");
    return from_facets(top.field(), top.ambient(), enumerate_subspaces_of(top, top.dim() - 1));
}

std::vector<Subspace> QComplex::sorted_facets() const {
    if (!pure_) fail(errc::not_pure, "facet sorting under cmp_q needs a pure complex");
    return sorted_by_cmp_q(facets_);
}

bool QComplex::is_face(const Subspace& u) const {
    for (const Subspace& f : facets_)
        if (f.contains(u)) return true;
    return false;
}

std::vector<Subspace> QComplex::faces(size_t k) const {
    if (k > dim_) fail(errc::bad_dimension, "face dimension exceeds the complex dimension");
    if (k == 0) return {Subspace::zero(field_, n_)};
    std::unordered_set<Subspace, SubspaceHash> seen;
    std::vector<Subspace> out;
    for (const Subspace& f : facets_) {
        if (f.dim() < k) continue;
        for (Subspace& s : enumerate_subspaces_of(f, k))
            if (seen.insert(s).second) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return cmp_q(a, b) < 0; });
    return out;
}

std::vector<Subspace> QComplex::all_faces(bool include_zero) const {
    std::vector<Subspace> out;
    if (include_zero) out.push_back(Subspace::zero(field_, n_));
    for (size_t k = 1; k <= dim_; ++k) {
        auto fk = faces(k);
        out.insert(out.end(), fk.begin(), fk.end());
    }
    return out;
}

QComplex QComplex::read_facets(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    FieldPtr field;
    size_t n = 0;
    std::vector<Subspace> facets;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue; // blank or comment
        try {
            if (!field) {
                if (token.rfind("q=", 0) != 0) fail(errc::parse_error, "expected header q=<spec> n=<n>");
                field = Field::parse(token.substr(2));
                std::string ntok;
                if (!(ls >> ntok) || ntok.rfind("n=", 0) != 0)
                    fail(errc::parse_error, "expected n=<n> in header");
                n = std::stoul(ntok.substr(2));
                if (n == 0 || n > 64) fail(errc::parse_error, "ambient dimension out of range");
                continue;
            }
            if (token == "0") {
                facets.push_back(Subspace::zero(field, n));
                continue;
            }
            std::vector<FieldVector> gens;
            size_t start = 0;
            while (start <= token.size()) {
                size_t semi = token.find(';', start);
                std::string part = token.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
                gens.push_back(FieldVector::parse(field, part));
                if (gens.back().size() != n) fail(errc::parse_error, "vector length differs from header n");
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            facets.push_back(Subspace::span(field, n, gens));
        } catch (const Error& e) {
            if (e.code() == errc::parse_error || e.code() == errc::bad_args ||
                e.code() == errc::unsupported_size || e.code() == errc::non_prime ||
                e.code() == errc::reducible_modulus)
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
            throw;
        }
    }
    if (!field) fail(errc::parse_error, "missing header line q=<spec> n=<n>");
    return from_facets(field, n, std::move(facets));
}

void QComplex::write_facets(std::ostream& out) const {
    out << "q=" << field_->to_string() << " n=" << n_ << "\n";
    for (const Subspace& f : facets_) out << f.to_string() << "\n";
}

ShellingCertificate is_shelling(const QComplex& c, const std::vector<size_t>& order) {
    if (!c.pure()) fail(errc::not_pure, "shellings are defined for pure complexes");
    const size_t t = c.facet_count();
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
    cert.dim = c.dim();
    cert.order = order;
    const size_t r = c.dim();

    std::vector<const Subspace*> F;
    F.reserve(t);
    for (size_t idx : order) F.push_back(&c.facets()[idx]);

    for (size_t j = 1; j < t; ++j) {
        std::vector<Subspace> inter;
        inter.reserve(j);
        std::vector<size_t> codim1;
        for (size_t k = 0; k < j; ++k) {
            inter.push_back(F[k]->intersect(*F[j]));
            if (inter.back().dim() + 1 == r) codim1.push_back(k);
        }
        for (size_t i = 0; i < j; ++i) {
            bool found = false;
            for (size_t k : codim1) {
                if (inter[k].contains(inter[i])) {
                    cert.witnesses.push_back({i, j, k});
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

std::pair<ShellingCertificate, std::vector<Subspace>> is_lex_shellable(const QComplex& c) {
    std::vector<Subspace> sorted = c.sorted_facets();
    std::unordered_map<Subspace, size_t, SubspaceHash> pos;
    for (size_t i = 0; i < c.facet_count(); ++i) pos[c.facets()[i]] = i;
    std::vector<size_t> order;
    order.reserve(sorted.size());
    for (const Subspace& s : sorted) order.push_back(pos.at(s));
    return {is_shelling(c, order), std::move(sorted)};
}

} // namespace qplex
