#include "qplex/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qplex {

const char* errc_name(errc code) {
    switch (code) {
    case errc::non_prime: return "NonPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::unsupported_size: return "UnsupportedSize";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::too_large: return "TooLarge";
    case errc::bad_dimension: return "BadDimension";
    case errc::not_nested: return "NotNested";
    case errc::empty_difference: return "EmptyDifference";
    case errc::profile_mismatch: return "ProfileMismatch";
    case errc::not_between: return "NotBetween";
    case errc::bad_index: return "BadIndex";
    case errc::not_pure: return "NotPure";
    case errc::empty_complex: return "Empty";
    case errc::not_prefix: return "NotPrefix";
    case errc::shelling_broken: return "ShellingBroken";
    case errc::method_unavailable: return "MethodUnavailable";
    case errc::parse_error: return "ParseError";
    case errc::unknown_id: return "UnknownId";
    case errc::bad_args: return "BadArgs";
    }
    return "Error";
}

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<uint32_t>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, uint32_t p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = (h[i + j] + uint64_t(f[i]) * g[j]) % p;
    poly_trim(h);
    return h;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
    poly_trim(f);
    const size_t dg = g.size() - 1;
    while (f.size() > dg) {
        uint32_t lead = f.back();
        size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (size_t i = 0; i < g.size(); ++i) {
                uint64_t sub = uint64_t(lead) * g[i] % p;
                uint32_t& c = f[shift + i];
                c = uint32_t((c + p - sub) % p);
            }
        }
        poly_trim(f);
        if (f.size() <= dg) break;
    }
    return f;
}

uint32_t poly_to_rep(const Poly& f, uint32_t p) {
    uint32_t rep = 0;
    for (size_t i = f.size(); i-- > 0;) rep = rep * p + f[i];
    return rep;
}

Poly rep_to_poly(uint32_t rep, uint32_t p) {
    Poly f;
    while (rep) {
        f.push_back(rep % p);
        rep /= p;
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, uint32_t p) {
    const size_t deg = f.size() - 1;
    if (deg == 1) return true;
    if (f[0] == 0) return false; // divisible by x
    for (size_t d = 1; 2 * d <= deg; ++d) {
        // monic divisors of degree d: d free coefficients
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) {
                g[i] = uint32_t(c % p);
                c /= p;
            }
            g[d] = 1;
            Poly r = poly_mod(f, g, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
}

// Parses a polynomial like `x^4+x+1`, `a^2`, `2x+1`, or a bare integer, in the
// named variable; returns coefficients c0.. with values reduced mod p.
Poly parse_poly(std::string_view text, char var, uint32_t p) {
    skip_ws(text);
    if (text.empty()) fail(errc::parse_error, "empty polynomial");
    Poly coeffs;
    size_t pos = 0;
    auto bump = [&](size_t deg, uint64_t c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = uint32_t((coeffs[deg] + c) % p);
    };
    while (pos < text.size()) {
        if (text[pos] == '+') {
            ++pos;
            continue;
        }
        uint64_t coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff = coeff * 10 + (text[pos] - '0');
                if (coeff > (uint64_t(1) << 32)) fail(errc::parse_error, "coefficient too large");
                ++pos;
            }
            have_coeff = true;
        }
        if (pos < text.size() && text[pos] == '*') ++pos;
        if (pos < text.size() && text[pos] == var) {
            ++pos;
            uint64_t deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    fail(errc::parse_error, "missing exponent in polynomial");
                deg = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    deg = deg * 10 + (text[pos] - '0');
                    if (deg > 64) fail(errc::parse_error, "exponent too large");
                    ++pos;
                }
            }
            bump(size_t(deg), coeff % p);
        } else if (have_coeff) {
            bump(0, coeff % p);
        } else {
            fail(errc::parse_error, std::string("unexpected character in polynomial: ") + text[pos]);
        }
    }
    poly_trim(coeffs);
    return coeffs;
}

std::string poly_to_string(const Poly& f, char var) {
    if (f.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << f[i];
        } else {
            if (f[i] != 1) out << f[i];
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace

FieldPtr Field::make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus_coeffs) {
    if (!is_prime(p)) fail(errc::non_prime, std::to_string(p) + " is not prime");
    if (e == 0) fail(errc::bad_args, "extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > max_size) fail(errc::unsupported_size, "field size exceeds 2^16");
    }

    auto field = std::make_shared<Field>(Tag{});
    field->p_ = p;
    field->e_ = e;
    field->q_ = uint32_t(q);

    if (e == 1) {
        if (!modulus_coeffs.empty()) fail(errc::bad_args, "prime fields take no modulus");
    } else {
        if (modulus_coeffs.size() != size_t(e) + 1)
            fail(errc::bad_args, "modulus must have degree equal to the extension degree");
        for (uint32_t c : modulus_coeffs)
            if (c >= p) fail(errc::bad_args, "modulus coefficient out of range");
        if (modulus_coeffs.back() != 1) fail(errc::bad_args, "modulus must be monic");
        if (!poly_irreducible(modulus_coeffs, p))
            fail(errc::reducible_modulus, "modulus factors over the prime field");
        field->modulus_ = modulus_coeffs;
    }

    field->order_rank_.resize(field->q_);
    for (uint32_t i = 0; i < field->q_; ++i) field->order_rank_[i] = i;
    field->build_tables();
    return field;
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    if (e_ == 1) return uint32_t(uint64_t(a) * b % p_);
    Poly f = rep_to_poly(a, p_);
    Poly g = rep_to_poly(b, p_);
    Poly h = poly_mod(poly_mul(f, g, p_), modulus_, p_);
    return poly_to_rep(h, p_);
}

void Field::build_tables() {
    exp_.assign(q_ - 1, 1);
    log_.assign(q_, 0);
    if (q_ == 2) {
        exp_[0] = 1;
        log_[1] = 0;
        return;
    }
    for (uint32_t g = 2; g < q_; ++g) {
        uint32_t x = 1;
        uint32_t order = 0;
        do {
            x = mul_slow(x, g);
            ++order;
        } while (x != 1 && order <= q_);
        if (order == q_ - 1) {
            x = 1;
            for (uint32_t i = 0; i + 1 < q_; ++i) {
                exp_[i] = x;
                log_[x] = i;
                x = mul_slow(x, g);
            }
            return;
        }
    }
    fail(errc::bad_args, "no multiplicative generator found"); // unreachable for true prime powers
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (a + b) % p_;
    uint32_t rep = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        rep += (da + db) % p_ * mult;
        mult *= p_;
    }
    return rep;
}

uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t rep = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = a % p_;
        a /= p_;
        rep += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
    }
    return rep;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t Field::pow(uint32_t a, uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    return exp_[uint32_t(uint64_t(log_[a]) * (k % (q_ - 1)) % (q_ - 1))];
}

bool Field::same(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_ &&
           order_rank_ == other.order_rank_;
}

FieldPtr Field::with_element_order(const std::vector<uint32_t>& rank_of_rep) const {
    if (rank_of_rep.size() != q_) fail(errc::bad_args, "order table size must equal the field size");
    std::vector<bool> seen(q_, false);
    for (uint32_t r : rank_of_rep) {
        if (r >= q_ || seen[r]) fail(errc::bad_args, "order table is not a permutation");
        seen[r] = true;
    }
    if (rank_of_rep[0] != 0 || rank_of_rep[1] != 1)
        fail(errc::bad_args, "element order must keep 0 first and 1 second");
    auto field = std::make_shared<Field>(Tag{});
    *field = *this;
    field->order_rank_ = rank_of_rep;
    return field;
}

std::string Field::to_string() const {
    std::ostringstream out;
    out << "gf(" << p_;
    if (e_ > 1) out << "^" << e_ << "):" << poly_to_string(modulus_, 'x');
    else out << ")";
    return out.str();
}

std::string Field::element_to_string(uint32_t rep, bool polynomial) const {
    if (!polynomial || e_ == 1) return std::to_string(rep);
    return poly_to_string(rep_to_poly(rep, p_), 'a');
}

uint32_t Field::parse_element(std::string_view text) const {
    skip_ws(text);
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        // bare integer: the rep itself (base-p digit encoding)
        uint64_t rep = 0;
        for (char c : text) {
            rep = rep * 10 + (c - '0');
            if (rep >= q_) fail(errc::parse_error, "element out of range");
        }
        return uint32_t(rep);
    }
    Poly f = parse_poly(text, 'a', p_);
    if (f.size() > e_) {
        if (modulus_.empty()) fail(errc::parse_error, "element out of range");
        f = poly_mod(f, modulus_, p_);
    }
    uint32_t rep = poly_to_rep(f, p_);
    if (rep >= q_) fail(errc::parse_error, "element out of range");
    return rep;
}

FieldPtr Field::parse(std::string_view text) {
    skip_ws(text);
    if (text.substr(0, 3) != "gf(") fail(errc::parse_error, "field spec must start with gf(");
    size_t close = text.find(')');
    if (close == std::string_view::npos) fail(errc::parse_error, "unterminated field spec");
    std::string_view inside = text.substr(3, close - 3);
    std::string_view rest = text.substr(close + 1);

    uint32_t p = 0, e = 1;
    size_t caret = inside.find('^');
    auto parse_uint = [](std::string_view s, const char* what) -> uint32_t {
        if (s.empty()) fail(errc::parse_error, std::string("missing ") + what);
        uint64_t v = 0;
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                fail(errc::parse_error, std::string("bad ") + what);
            v = v * 10 + (ch - '0');
            if (v > Field::max_size) fail(errc::unsupported_size, "field size exceeds 2^16");
        }
        return uint32_t(v);
    };
    if (caret == std::string_view::npos) {
        p = parse_uint(inside, "characteristic");
    } else {
        p = parse_uint(inside.substr(0, caret), "characteristic");
        e = parse_uint(inside.substr(caret + 1), "extension degree");
    }

    if (e == 1) {
        if (!rest.empty()) fail(errc::parse_error, "prime field spec takes no modulus");
        return make(p, 1);
    }
    if (rest.empty() || rest.front() != ':') fail(errc::parse_error, "extension field spec needs :<modulus>");
    rest.remove_prefix(1);
    Poly modulus = parse_poly(rest, 'x', p);
    return make(p, e, modulus);
}

void require_same_field(const Field& a, const Field& b) {
    if (&a == &b) return;
    if (!a.same(b)) fail(errc::field_mismatch, "operands live in different fields");
}

FieldElement::FieldElement(FieldPtr field, uint32_t rep) : field_(std::move(field)), rep_(rep) {
    if (!field_) fail(errc::bad_args, "element needs a field");
    if (rep_ >= field_->size()) fail(errc::bad_args, "element rep out of range");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->add(a.rep_, b.rep_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->sub(a.rep_, b.rep_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->mul(a.rep_, b.rep_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->mul(a.rep_, b.field_->inv(b.rep_))};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return a.rep_ == b.rep_;
}

int elem_cmp(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field(), *b.field());
    return a.field()->cmp(a.rep(), b.rep());
}

FieldVector::FieldVector(FieldPtr field, std::vector<uint32_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) fail(errc::bad_args, "vector needs a field");
    for (uint32_t c : coords_)
        if (c >= field_->size()) fail(errc::bad_args, "vector coordinate out of range");
}

FieldVector FieldVector::zero(const FieldPtr& field, size_t n) {
    return {field, std::vector<uint32_t>(n, 0)};
}

FieldVector FieldVector::unit(const FieldPtr& field, size_t n, size_t i) {
    std::vector<uint32_t> c(n, 0);
    if (i >= n) fail(errc::bad_index, "unit coordinate out of range");
    c[i] = 1;
    return {field, std::move(c)};
}

FieldVector FieldVector::parse(const FieldPtr& field, std::string_view text) {
    std::vector<uint32_t> coords;
    size_t start = 0;
    std::string s(text);
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        coords.push_back(field->parse_element(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return {field, std::move(coords)};
}

bool FieldVector::is_zero() const {
    for (uint32_t c : coords_)
        if (c) return false;
    return true;
}

FieldVector FieldVector::plus(const FieldVector& other) const {
    require_same_field(*field_, *other.field_);
    if (size() != other.size()) fail(errc::dimension_mismatch, "vector lengths differ");
    std::vector<uint32_t> out(size());
    for (size_t i = 0; i < size(); ++i) out[i] = field_->add(coords_[i], other.coords_[i]);
    return {field_, std::move(out)};
}

FieldVector FieldVector::scaled(uint32_t c) const {
    std::vector<uint32_t> out(size());
    for (size_t i = 0; i < size(); ++i) out[i] = field_->mul(coords_[i], c);
    return {field_, std::move(out)};
}

std::string FieldVector::to_string() const {
    std::string out;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    return out;
}

bool operator==(const FieldVector& a, const FieldVector& b) {
    require_same_field(*a.field_, *b.field_);
    return a.coords_ == b.coords_;
}

int vec_cmp(const FieldVector& a, const FieldVector& b) {
    require_same_field(*a.field(), *b.field());
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector lengths differ");
    for (size_t i = 0; i < a.size(); ++i) {
        int c = a.field()->cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace qplex
