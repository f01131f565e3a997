#include "permcx/field.hpp"

#include <algorithm>
#include <sstream>

namespace permcx {

namespace {

constexpr int kTableCap = 1024;   // q*q tables up to this size
constexpr int kFieldCap = 32768;  // hard limit on q, keeps codes in fq_t

int mod_p(long long v, int p) {
    long long m = v % p;
    return static_cast<int>(m < 0 ? m + p : m);
}

// Polynomials over F_p: ascending coefficients, index i = coefficient of t^i.
std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = mod_p(c[i + j] + static_cast<long long>(a[i]) * b[j], p);
    return poly_trim(std::move(c));
}

// Remainder of a by monic m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = poly_trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int c = a[da];
        if (c != 0) {
            for (int k = 0; k <= dm; ++k)
                a[da - dm + k] = mod_p(a[da - dm + k] - static_cast<long long>(c) * m[k], p);
        }
        a.pop_back();
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// Inverse of a modulo monic m, via extended Euclid over F_p[t].
std::vector<int> poly_inv_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    auto inv_scalar = [&](int x) {
        for (int y = 1; y < p; ++y)
            if (mod_p(static_cast<long long>(x) * y, p) == 1) return y;
        throw Error("field: scalar has no inverse (nonprime characteristic?)");
    };
    std::vector<int> r0 = m, r1 = poly_trim(std::move(a));
    std::vector<int> s0 = {}, s1 = {1};
    if (r1.empty()) throw Error("field: inverse of zero");
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<int> quot;
        std::vector<int> rem = r0;
        const int d1 = static_cast<int>(r1.size()) - 1;
        const int lead_inv = inv_scalar(r1.back());
        while (static_cast<int>(rem.size()) - 1 >= d1 && !rem.empty()) {
            const int dr = static_cast<int>(rem.size()) - 1;
            const int c = mod_p(static_cast<long long>(rem.back()) * lead_inv, p);
            if (static_cast<int>(quot.size()) < dr - d1 + 1) quot.resize(dr - d1 + 1, 0);
            quot[dr - d1] = c;
            for (int k = 0; k <= d1; ++k)
                rem[dr - d1 + k] = mod_p(rem[dr - d1 + k] - static_cast<long long>(c) * r1[k], p);
            rem = poly_trim(std::move(rem));
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - quot*s1)
        std::vector<int> qs = poly_mul(quot, s1, p);
        std::vector<int> s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i) {
            int v0 = i < s0.size() ? s0[i] : 0;
            int v1 = i < qs.size() ? qs[i] : 0;
            s2[i] = mod_p(v0 - v1, p);
        }
        r0 = r1; r1 = rem;
        s0 = s1; s1 = poly_trim(std::move(s2));
    }
    // r0 = gcd, must be a nonzero constant
    if (r0.size() != 1) throw Error("field: modulus not irreducible (gcd has positive degree)");
    const int scale = inv_scalar(r0[0]);
    for (int& c : s0) c = mod_p(static_cast<long long>(c) * scale, p);
    return poly_mod(std::move(s0), m, p);
}

std::string poly_to_string(const std::vector<int>& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i];
        if (i >= 1) {
            if (a[i] != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
    const auto f = poly_trim(poly);
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    if (f.back() != 1) throw Error("is_irreducible_mod_p: polynomial must be monic");
    if (d == 1) return true;
    for (int k = 1; k <= d / 2; ++k) {
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            std::vector<int> g(k + 1, 0);
            long long t = v;
            for (int i = 0; i < k; ++i) { g[i] = static_cast<int>(t % p); t /= p; }
            g[k] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> find_irreducible(int p, int e) {
    if (!is_prime(p)) throw Error("find_irreducible: characteristic must be prime");
    if (e < 1) throw Error("find_irreducible: degree must be positive");
    if (e == 1) return {0, 1};
    long long count = 1;
    for (int i = 0; i < e; ++i) {
        count *= p;
        if (count > kFieldCap) throw Error("find_irreducible: field too large");
    }
    // Enumerate ascending coefficient lists in lexicographic order:
    // c_0 is the most significant digit of v, c_{e-1} the least.
    for (long long v = 0; v < count; ++v) {
        std::vector<int> f(e + 1, 0);
        long long t = v;
        for (int i = e - 1; i >= 0; --i) { f[i] = static_cast<int>(t % p); t /= p; }
        f[e] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw Error("find_irreducible: no irreducible polynomial found"); // unreachable
}

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    long long q = 1;
    for (int i = 0; i < e_; ++i) {
        q *= p_;
        if (q > kFieldCap) throw Error("Field: order p^e exceeds supported size");
    }
    q_ = static_cast<int>(q);
    build_tables();
}

FieldPtr Field::make(int p, int e) {
    return with_modulus(p, find_irreducible(p, e));
}

FieldPtr Field::with_modulus(int p, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw Error("Field: characteristic must be prime");
    const auto m = poly_trim(modulus);
    const int e = static_cast<int>(m.size()) - 1;
    if (e < 1 || m.back() != 1) throw Error("Field: modulus must be monic of positive degree");
    for (int c : m)
        if (c < 0 || c >= p) throw Error("Field: modulus coefficients must be residues mod p");
    if (e == 1) {
        if (m != std::vector<int>{0, 1})
            throw Error("Field: degree-1 modulus must be the polynomial t");
    } else if (!is_irreducible_mod_p(m, p)) {
        throw Error("Field: modulus is reducible over F_p");
    }
    return FieldPtr(new Field(p, e, m));
}

void Field::build_tables() {
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        // digitwise negation
        int code = 0, scale = 1, t = a;
        for (int i = 0; i < e_; ++i) {
            code += mod_p(-(t % p_), p_) * scale;
            scale *= p_;
            t /= p_;
        }
        neg_tab_[a] = static_cast<fq_t>(code);
    }
    for (int a = 1; a < q_; ++a)
        inv_tab_[a] = inv_generic(static_cast<fq_t>(a));
    if (q_ <= kTableCap) {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                add_tab_[static_cast<std::size_t>(a) * q_ + b] = add_generic(static_cast<fq_t>(a), static_cast<fq_t>(b));
                mul_tab_[static_cast<std::size_t>(a) * q_ + b] = mul_generic(static_cast<fq_t>(a), static_cast<fq_t>(b));
            }
        tabled_ = true;
    }
}

fq_t Field::add_generic(fq_t a, fq_t b) const {
    int code = 0, scale = 1, ta = a, tb = b;
    for (int i = 0; i < e_; ++i) {
        code += mod_p(ta % p_ + tb % p_, p_) * scale;
        scale *= p_;
        ta /= p_;
        tb /= p_;
    }
    return static_cast<fq_t>(code);
}

fq_t Field::mul_generic(fq_t a, fq_t b) const {
    if (e_ == 1) return static_cast<fq_t>(mod_p(static_cast<long long>(a) * b, p_));
    std::vector<int> ca = coeffs(a), cb = coeffs(b);
    auto prod = poly_mod(poly_mul(ca, cb, p_), modulus_, p_);
    prod.resize(e_, 0);
    return from_coeffs(prod);
}

fq_t Field::inv_generic(fq_t a) const {
    if (a == 0) throw Error("field: inverse of zero");
    if (e_ == 1) {
        for (int y = 1; y < p_; ++y)
            if (mod_p(static_cast<long long>(a) * y, p_) == 1) return static_cast<fq_t>(y);
        throw Error("field: no inverse found");
    }
    auto r = poly_inv_mod(coeffs(a), modulus_, p_);
    r.resize(e_, 0);
    return from_coeffs(r);
}

fq_t Field::inv(fq_t a) const {
    if (a == 0) throw Error("field: inverse of zero");
    return inv_tab_[a];
}

fq_t Field::pow(fq_t a, long long n) const {
    if (n < 0) return pow(inv(a), -n);
    fq_t result = one(), base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

fq_t Field::from_int(long long n) const {
    return static_cast<fq_t>(mod_p(n, p_));
}

fq_t Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != e_)
        throw Error("field: coefficient vector must have length e");
    int code = 0, scale = 1;
    for (int i = 0; i < e_; ++i) {
        code += mod_p(c[i], p_) * scale;
        scale *= p_;
    }
    return static_cast<fq_t>(code);
}

std::vector<int> Field::coeffs(fq_t a) const {
    std::vector<int> c(e_, 0);
    int t = a;
    for (int i = 0; i < e_; ++i) { c[i] = t % p_; t /= p_; }
    return c;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (e_ > 1) os << " (" << poly_to_string(modulus_) << ")";
    return os.str();
}

std::string Field::to_string(fq_t a) const {
    if (e_ == 1) return std::to_string(static_cast<int>(a));
    return poly_to_string(coeffs(a));
}

void check_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b) throw Error("field mismatch: missing field");
    if (!a->same(*b))
        throw Error("field mismatch: " + a->describe() + " vs " + b->describe());
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    check_same_field(a.field, b.field);
    return {a.field, a.field->add(a.value, b.value)};
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    check_same_field(a.field, b.field);
    return {a.field, a.field->mul(a.value, b.value)};
}

Scalar scalar_neg(const Scalar& a) {
    if (!a.field) throw Error("scalar: missing field");
    return {a.field, a.field->neg(a.value)};
}

Scalar scalar_inv(const Scalar& a) {
    if (!a.field) throw Error("scalar: missing field");
    return {a.field, a.field->inv(a.value)};
}

} // namespace permcx
