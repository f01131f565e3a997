#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace permcx {

/// Error type for precondition and domain failures across the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Code of a finite-field element. The base-p digits of a code are the
/// coefficients of the polynomial residue, constant term first, so codes
/// range over [0, p^e).
using fq_t = std::uint16_t;

bool is_prime(long long n);

/// Irreducibility over F_p by trial division against every monic polynomial
/// of degree at most deg/2. Coefficients ascending, leading coefficient 1.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

/// Smallest monic irreducible of degree e over F_p, where "smallest" is
/// lexicographic on the ascending coefficient list (constant term first).
/// Degree 1 uses the convention t, i.e. coefficients {0, 1}.
std::vector<int> find_irreducible(int p, int e);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The field F_{p^e}, arithmetic modulo a fixed monic irreducible polynomial.
/// Immutable after construction; shared by every value built over it. Small
/// fields precompute full add/mul tables, larger ones fall back to digit
/// arithmetic.
class Field {
public:
    static FieldPtr make(int p, int e = 1);
    static FieldPtr with_modulus(int p, const std::vector<int>& modulus);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    fq_t zero() const { return 0; }
    fq_t one() const { return 1; }

    fq_t add(fq_t a, fq_t b) const {
        return tabled_ ? add_tab_[static_cast<std::size_t>(a) * q_ + b] : add_generic(a, b);
    }
    fq_t neg(fq_t a) const { return neg_tab_[a]; }
    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }
    fq_t mul(fq_t a, fq_t b) const {
        return tabled_ ? mul_tab_[static_cast<std::size_t>(a) * q_ + b] : mul_generic(a, b);
    }
    fq_t inv(fq_t a) const;
    fq_t pow(fq_t a, long long n) const;

    /// Integers embed through the prime subfield.
    fq_t from_int(long long n) const;
    fq_t from_coeffs(const std::vector<int>& c) const;
    std::vector<int> coeffs(fq_t a) const;

    /// Row of the multiplication table for a fixed left factor, or nullptr
    /// when the field is not tabled. Hot loops use this to skip a multiply.
    const fq_t* mul_row(fq_t a) const {
        return tabled_ ? &mul_tab_[static_cast<std::size_t>(a) * q_] : nullptr;
    }
    bool tabled() const { return tabled_; }

    bool same(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    std::string describe() const;
    std::string to_string(fq_t a) const;

private:
    Field(int p, int e, std::vector<int> modulus);
    void build_tables();
    fq_t add_generic(fq_t a, fq_t b) const;
    fq_t mul_generic(fq_t a, fq_t b) const;
    fq_t inv_generic(fq_t a) const;

    int p_ = 2, e_ = 1, q_ = 2;
    std::vector<int> modulus_;
    bool tabled_ = false;
    std::vector<fq_t> add_tab_, mul_tab_;
    std::vector<fq_t> neg_tab_, inv_tab_;
};

/// Throws unless both fields are present and structurally equal.
void check_same_field(const FieldPtr& a, const FieldPtr& b);

/// A field element paired with its field, for API-level arithmetic where the
/// operands may come from independent sources.
struct Scalar {
    FieldPtr field;
    fq_t value = 0;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Scalar scalar_inv(const Scalar& a);

} // namespace permcx
