#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qtgc/errors.hpp"

namespace qtgc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient domain of an instance: the rationals, or the rationals extended
// by a primitive N-th root of unity (written `zeta` in the textual grammar).
// rational is the same field as cyclotomic of order 1; the kind only controls
// whether `zeta` is legal in scalar expressions.
struct FieldSpec {
    enum class Kind { rational, cyclotomic };

    Kind kind = Kind::rational;
    unsigned order = 1;

    bool operator==(const FieldSpec&) const = default;
};

// N-th cyclotomic polynomial, monic, ascending integer coefficients.
std::vector<Int> cyclotomic_polynomial(unsigned n);

class CycloField;
using Field = std::shared_ptr<const CycloField>;

// Immutable arithmetic context shared by every Scalar of one instance.
// Precomputes the reductions of powers of zeta modulo the cyclotomic
// polynomial so that products reduce by table lookup.
class CycloField {
  public:
    static Field make(const FieldSpec& spec);
    static Field rationals() { return make({FieldSpec::Kind::rational, 1}); }
    static Field cyclotomic(unsigned n) { return make({FieldSpec::Kind::cyclotomic, n}); }

    const FieldSpec& spec() const { return spec_; }
    unsigned order() const { return spec_.order; }
    std::size_t degree() const { return degree_; }
    bool allows_zeta() const { return spec_.kind == FieldSpec::Kind::cyclotomic; }

    // Reduction of x^k modulo the cyclotomic polynomial, 0 <= k <= max_pow().
    const std::vector<Rat>& xpow(std::size_t k) const;
    std::size_t max_pow() const { return xpow_.size() - 1; }

  private:
    explicit CycloField(const FieldSpec& spec);

    FieldSpec spec_;
    std::size_t degree_;
    std::vector<Rat> modulus_;             // monic, length degree_ + 1
    std::vector<std::vector<Rat>> xpow_;   // x^k reduced, k = 0 .. max
};

// Element of the coefficient field in canonical reduced form: a polynomial in
// zeta of degree < deg(Phi_N) with normalized rational coefficients.
// Structural equality is field equality. Immutable value type.
class Scalar {
  public:
    Scalar() = default; // null scalar; any use throws

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long v);
    static Scalar from_rational(const Field& f, Rat v);
    static Scalar zeta_pow(const Field& f, long k);

    const Field& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_null() const { return field_ == nullptr; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inverse() const; // throws DivisionByZero on zero
    Scalar operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Canonical textual form; parse_scalar(str()) round-trips exactly.
    std::string str() const;

  private:
    Scalar(Field f, std::vector<Rat> coeffs)
        : field_(std::move(f)), coeffs_(std::move(coeffs)) {}

    void require_valid() const;
    static const Field& common_field(const Scalar& a, const Scalar& b);

    Field field_;
    std::vector<Rat> coeffs_; // length = field_->degree()
};

// Parses the scalar expression grammar:
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := rational | "zeta" ("^" integer)? | "(" expr ")" | "-" factor
//   rational := natural ("/" positive-natural)?
// Whitespace is insignificant. `zeta` is legal only in cyclotomic fields.
Scalar parse_scalar(std::string_view text, const Field& field);

} // namespace qtgc
