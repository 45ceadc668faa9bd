#include "qtgc/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace qtgc {

namespace {

// Dense integer polynomials, ascending coefficients, no trailing zeros.

void trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact division by a monic divisor.
std::vector<Int> div_exact_monic(std::vector<Int> num, const std::vector<Int>& den) {
    trim(num);
    std::vector<Int> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !num.empty()) {
        Int lead = num.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= lead * den[i];
        trim(num);
    }
    if (!num.empty())
        throw Error("internal: inexact cyclotomic division");
    return quot;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(unsigned n) {
    if (n < 1)
        throw IndexOutOfRange("cyclotomic order must be >= 1");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            num = div_exact_monic(std::move(num), cyclotomic_polynomial(d));
    return num;
}

CycloField::CycloField(const FieldSpec& spec) : spec_(spec) {
    if (spec.order < 1)
        throw IndexOutOfRange("field order must be >= 1");
    if (spec.kind == FieldSpec::Kind::rational && spec.order != 1)
        throw FieldMismatch("rational field must have order 1");
    auto phi = cyclotomic_polynomial(spec.order);
    degree_ = phi.size() - 1;
    modulus_.assign(phi.begin(), phi.end());

    // x^k reduced modulo the (monic) modulus, for every power any product or
    // zeta power can produce.
    std::size_t max = std::max<std::size_t>(2 * degree_ - 2, spec.order);
    xpow_.reserve(max + 1);
    for (std::size_t k = 0; k <= max; ++k) {
        if (k < degree_) {
            std::vector<Rat> e(degree_, Rat(0));
            e[k] = 1;
            xpow_.push_back(std::move(e));
        } else {
            // x^k = x * x^(k-1); substitute x^d = -(c_0 + ... + c_{d-1} x^{d-1}).
            const auto& prev = xpow_[k - 1];
            std::vector<Rat> e(degree_, Rat(0));
            for (std::size_t i = 0; i + 1 < degree_; ++i)
                e[i + 1] = prev[i];
            Rat top = prev[degree_ - 1];
            if (top != 0)
                for (std::size_t i = 0; i < degree_; ++i)
                    e[i] -= top * modulus_[i];
            xpow_.push_back(std::move(e));
        }
    }
}

Field CycloField::make(const FieldSpec& spec) {
    return Field(new CycloField(spec));
}

const std::vector<Rat>& CycloField::xpow(std::size_t k) const {
    if (k >= xpow_.size())
        throw IndexOutOfRange("power table exceeded");
    return xpow_[k];
}

void Scalar::require_valid() const {
    if (!field_)
        throw FieldMismatch("operation on null scalar");
}

const Field& Scalar::common_field(const Scalar& a, const Scalar& b) {
    a.require_valid();
    b.require_valid();
    if (a.field_->order() != b.field_->order())
        throw FieldMismatch("cyclotomic orders " + std::to_string(a.field_->order()) + " and " +
                            std::to_string(b.field_->order()) + " differ");
    return a.field_;
}

Scalar Scalar::zero(const Field& f) {
    return Scalar(f, std::vector<Rat>(f->degree(), Rat(0)));
}

Scalar Scalar::one(const Field& f) {
    auto c = std::vector<Rat>(f->degree(), Rat(0));
    c[0] = 1;
    return Scalar(f, std::move(c));
}

Scalar Scalar::from_int(const Field& f, long v) {
    auto c = std::vector<Rat>(f->degree(), Rat(0));
    c[0] = v;
    return Scalar(f, std::move(c));
}

Scalar Scalar::from_rational(const Field& f, Rat v) {
    auto c = std::vector<Rat>(f->degree(), Rat(0));
    c[0] = std::move(v);
    return Scalar(f, std::move(c));
}

Scalar Scalar::zeta_pow(const Field& f, long k) {
    long n = static_cast<long>(f->order());
    long r = ((k % n) + n) % n;
    return Scalar(f, f->xpow(static_cast<std::size_t>(r)));
}

bool Scalar::is_zero() const {
    require_valid();
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Scalar::is_one() const {
    require_valid();
    if (coeffs_[0] != 1)
        return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    const Field& f = common_field(*this, rhs);
    std::vector<Rat> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += rhs.coeffs_[i];
    return Scalar(f, std::move(c));
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    const Field& f = common_field(*this, rhs);
    std::vector<Rat> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= rhs.coeffs_[i];
    return Scalar(f, std::move(c));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    common_field(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    common_field(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Scalar Scalar::operator-() const {
    require_valid();
    std::vector<Rat> c(coeffs_);
    for (auto& x : c)
        x = -x;
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    const Field& f = common_field(*this, rhs);
    std::size_t d = f->degree();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] == 0)
                continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rat> c(d, Rat(0));
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0)
            continue;
        const auto& red = f->xpow(k);
        for (std::size_t i = 0; i < d; ++i)
            c[i] += prod[k] * red[i];
    }
    return Scalar(f, std::move(c));
}

Scalar Scalar::inverse() const {
    require_valid();
    if (is_zero())
        throw DivisionByZero();
    std::size_t d = field_->degree();
    if (d == 1)
        return Scalar(field_, {Rat(1) / coeffs_[0]});

    // Extended Euclid in Q[x] against the (irreducible) modulus:
    // maintain r = u * a mod modulus; ends with r constant.
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) -> long {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<std::size_t>(i)] != 0)
                return i;
        return -1;
    };
    Poly r0;
    { // modulus as rationals
        auto phi = cyclotomic_polynomial(field_->order());
        r0.assign(phi.size(), Rat(0));
        for (std::size_t i = 0; i < phi.size(); ++i)
            r0[i] = Rat(phi[i]);
    }
    Poly r1(coeffs_.begin(), coeffs_.end());
    Poly u0(1, Rat(0)), u1(1, Rat(1));

    while (deg(r1) > 0) {
        // r0 = q*r1 + rem
        Poly q(static_cast<std::size_t>(deg(r0) - deg(r1)) + 1, Rat(0));
        Poly rem = r0;
        long dr1 = deg(r1);
        Rat lead1 = r1[static_cast<std::size_t>(dr1)];
        while (deg(rem) >= dr1) {
            long shift = deg(rem) - dr1;
            Rat coef = rem[static_cast<std::size_t>(deg(rem))] / lead1;
            q[static_cast<std::size_t>(shift)] += coef;
            for (long i = 0; i <= dr1; ++i)
                rem[static_cast<std::size_t>(shift + i)] -= coef * r1[static_cast<std::size_t>(i)];
        }
        // u_next = u0 - q*u1
        Poly un(std::max(u0.size(), q.size() + u1.size()), Rat(0));
        for (std::size_t i = 0; i < u0.size(); ++i)
            un[i] = u0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < u1.size(); ++j)
                un[i + j] -= q[i] * u1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
    if (deg(r1) != 0)
        throw DivisionByZero(); // can only happen for the zero element
    Rat g = r1[0];
    std::vector<Rat> c(d, Rat(0));
    for (std::size_t i = 0; i < u1.size() && i < 2 * d; ++i) {
        if (u1[i] == 0)
            continue;
        const auto& red = field_->xpow(i);
        for (std::size_t k = 0; k < d; ++k)
            c[k] += (u1[i] / g) * red[k];
    }
    return Scalar(field_, std::move(c));
}

bool Scalar::operator==(const Scalar& rhs) const {
    common_field(*this, rhs);
    return coeffs_ == rhs.coeffs_;
}

namespace {

std::string rat_str(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace

std::string Scalar::str() const {
    require_valid();
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0)
            continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        std::string term;
        if (i == 0) {
            term = rat_str(a);
        } else {
            std::string z = (i == 1) ? "zeta" : "zeta^" + std::to_string(i);
            term = (a == 1) ? z : rat_str(a) + "*" + z;
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return first ? "0" : out;
}

namespace {

// Recursive-descent parser for the scalar grammar.
class ScalarParser {
  public:
    ScalarParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("end of input, '+', '-' or '*'");
        return v;
    }

  private:
    std::string_view text_;
    const Field& field_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        std::string found;
        if (pos_ < text_.size())
            found = std::string(1, text_[pos_]);
        throw ParseError(pos_, expected, found);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Int natural() {
        skip_ws();
        if (!peek_digit())
            fail("digit");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        while (eat('*'))
            v = v * factor();
        return v;
    }

    Scalar factor() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("rational, 'zeta', '(' or '-'");
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')'))
                fail("')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = natural();
            if (eat('/')) {
                Int den = natural();
                if (den == 0)
                    throw ParseError(pos_, "positive denominator", "0");
                return Scalar::from_rational(field_, Rat(num, den));
            }
            return Scalar::from_rational(field_, Rat(num));
        }
        if (text_.substr(pos_, 4) == "zeta") {
            if (!field_->allows_zeta())
                throw FieldMismatch("'zeta' is not legal in a rational field (byte " +
                                    std::to_string(pos_) + ")");
            pos_ += 4;
            long k = 1;
            if (eat('^')) {
                skip_ws();
                bool neg = false;
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    neg = true;
                    ++pos_;
                }
                Int e = natural();
                long ev = static_cast<long>(e % Int(field_->order()));
                k = neg ? -ev : ev;
            }
            return Scalar::zeta_pow(field_, k);
        }
        fail("rational, 'zeta', '(' or '-'");
    }
};

} // namespace

Scalar parse_scalar(std::string_view text, const Field& field) {
    return ScalarParser(text, field).parse();
}

} // namespace qtgc
