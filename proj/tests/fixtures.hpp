#pragma once

#include <array>

#include "qplex/qmatroid.hpp"

namespace fixtures {

using namespace qplex;

inline FieldPtr gf2() { return Field::prime_field(2); }
inline FieldPtr gf16() { return Field::parse("gf(2^4):x^4+x+1"); }

/// Length-4 rank-metric code over gf(2^4) whose induced q-matroid complex has
/// 14 of the 15 three-dimensional subspaces of F_2^4 as facets.
inline RankMetricCode sample_code_f16() {
    FieldPtr ext = gf16();
    auto e = [&](const char* s) { return ext->parse_element(s); };
    std::vector<std::vector<uint32_t>> rows = {
        {e("a^2+a+1"), e("a^2"), e("a^3+a+1"), e("a^3+a^2+a+1")},
        {e("a^2+a+1"), e("a^3+1"), e("a"), e("a+1")},
        {e("a^2+1"), e("1"), e("a^2+1"), e("a^3+1")},
    };
    return RankMetricCode::make(gf2(), ext, Matrix::from_rows(ext, rows));
}

inline QComplex sample_complex_f16() {
    return QMatroid::from_code(sample_code_f16()).matroid_complex();
}

/// The 14 facets of sample_complex_f16 in cmp_q order, by generator rows.
inline std::vector<Subspace> sample_facets_sorted() {
    static const std::array<std::array<std::array<uint32_t, 4>, 3>, 14> gens = {{
        {{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
        {{{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
        {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}},
        {{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}},
        {{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}},
        {{{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}},
        {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}},
        {{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}},
        {{{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}},
        {{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}}},
        {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}},
        {{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 1}}},
        {{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}},
        {{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}},
    }};
    FieldPtr f = gf2();
    std::vector<Subspace> out;
    for (const auto& facet : gens) {
        std::vector<FieldVector> rows;
        for (const auto& row : facet)
            rows.emplace_back(f, std::vector<uint32_t>(row.begin(), row.end()));
        out.push_back(Subspace::span(f, 4, rows));
    }
    return out;
}

/// Smaller instance: a 2x3 code over gf(2^3) with a rank-2 q-matroid on F_2^3.
inline RankMetricCode sample_code_f8() {
    FieldPtr ext = Field::parse("gf(2^3):x^3+x+1");
    auto e = [&](const char* s) { return ext->parse_element(s); };
    std::vector<std::vector<uint32_t>> rows = {
        {e("1"), e("a"), e("a^2")},
        {e("a"), e("a^2"), e("1")},
    };
    return RankMetricCode::make(gf2(), ext, Matrix::from_rows(ext, rows));
}

inline Subspace unit_span(const FieldPtr& f, size_t n, std::initializer_list<size_t> axes) {
    std::vector<FieldVector> rows;
    for (size_t i : axes) rows.push_back(FieldVector::unit(f, n, i));
    return Subspace::span(f, n, rows);
}

inline FieldVector vec(const FieldPtr& f, std::initializer_list<uint32_t> coords) {
    return {f, std::vector<uint32_t>(coords)};
}

} // namespace fixtures
