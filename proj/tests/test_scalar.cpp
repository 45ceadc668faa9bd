#include <doctest.h>

#include <random>

#include "qtgc/scalar.hpp"

using namespace qtgc;

namespace {

std::string poly_str(const std::vector<Int>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += p[i].str();
        if (i + 1 < p.size())
            s += ",";
    }
    return s;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(poly_str(cyclotomic_polynomial(1)) == "-1,1");        // x - 1
    CHECK(poly_str(cyclotomic_polynomial(2)) == "1,1");         // x + 1
    CHECK(poly_str(cyclotomic_polynomial(3)) == "1,1,1");       // x^2 + x + 1
    CHECK(poly_str(cyclotomic_polynomial(4)) == "1,0,1");       // x^2 + 1
    CHECK(poly_str(cyclotomic_polynomial(6)) == "1,-1,1");      // x^2 - x + 1
    CHECK(poly_str(cyclotomic_polynomial(8)) == "1,0,0,0,1");   // x^4 + 1

    // product over divisors reproduces x^n - 1
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        std::vector<Int> prod = {1};
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0)
                continue;
            auto phi = cyclotomic_polynomial(d);
            std::vector<Int> next(prod.size() + phi.size() - 1, Int(0));
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j)
                    next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        std::vector<Int> want(n + 1, Int(0));
        want[0] = -1;
        want[n] = 1;
        CHECK(prod == want);
    }
}

TEST_CASE("rational arithmetic") {
    Field f = CycloField::rationals();
    Scalar half = parse_scalar("1/2", f);
    CHECK((half + half).is_one());
    CHECK((half - half).is_zero());
    CHECK((half * Scalar::from_int(f, 2)).is_one());
    CHECK(half.inverse() == Scalar::from_int(f, 2));
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), DivisionByZero);
}

TEST_CASE("roots of unity") {
    for (unsigned n : {1u, 2u, 3u, 4u, 6u, 8u}) {
        Field f = CycloField::cyclotomic(n);
        Scalar z = Scalar::zeta_pow(f, 1);
        // zeta^n = 1
        Scalar pow = Scalar::one(f);
        for (unsigned k = 0; k < n; ++k)
            pow = pow * z;
        CHECK(pow.is_one());
        CHECK((z * Scalar::zeta_pow(f, static_cast<long>(n) - 1)).is_one());
        // Phi_n(zeta) = 0
        auto phi = cyclotomic_polynomial(n);
        Scalar acc = Scalar::zero(f);
        for (std::size_t i = 0; i < phi.size(); ++i)
            acc += Scalar::from_rational(f, Rat(phi[i])) * Scalar::zeta_pow(f, static_cast<long>(i));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("inverse in a cyclotomic extension") {
    Field f = CycloField::cyclotomic(3);
    Scalar x = Scalar::one(f) + Scalar::zeta_pow(f, 1); // 1 + zeta
    Scalar inv = x.inverse();
    CHECK((x * inv).is_one());
    CHECK(inv == -Scalar::zeta_pow(f, 1)); // frozen: extended Euclid against x^2+x+1
}

TEST_CASE("scalar parsing and printing") {
    Field f4 = CycloField::cyclotomic(4);
    CHECK(parse_scalar("3/4", CycloField::rationals()).str() == "3/4");
    CHECK(parse_scalar("zeta^2", f4) == Scalar::from_int(f4, -1));
    CHECK(parse_scalar("zeta^-1", f4) == -Scalar::zeta_pow(f4, 1));
    CHECK(parse_scalar("(1 + zeta)*(1 - zeta)", f4) == Scalar::from_int(f4, 2));
    CHECK(parse_scalar(" - 2 * zeta ", f4).str() == "-2*zeta");

    // zeta is illegal under a rational field spec
    CHECK_THROWS_AS(parse_scalar("1 - 2*zeta", CycloField::rationals()), FieldMismatch);

    // parse errors carry the byte offset
    try {
        parse_scalar("1 + ", f4);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
    try {
        parse_scalar("1 ) 2", f4);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_scalar("1/0", f4), ParseError);

    // round-trip on assorted values
    for (const char* s : {"0", "1", "-1", "7/3", "zeta", "-zeta^3", "1/2 + zeta^2",
                          "-3/2 + zeta - 5*zeta^3"}) {
        Scalar v = parse_scalar(s, CycloField::cyclotomic(8));
        CHECK(parse_scalar(v.str(), CycloField::cyclotomic(8)) == v);
        CHECK(v.str() == parse_scalar(v.str(), CycloField::cyclotomic(8)).str());
    }
}

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = 0; i < f->degree(); ++i)
        acc += Scalar::from_rational(f, Rat(num(rng), den(rng))) *
               Scalar::zeta_pow(f, static_cast<long>(i));
    return acc;
}

} // namespace

TEST_CASE("field axiom properties") {
    std::mt19937_64 rng(20240811);
    const unsigned orders[] = {1, 2, 3, 4, 6, 8};
    for (int iter = 0; iter < 3000; ++iter) {
        Field f = CycloField::cyclotomic(orders[static_cast<std::size_t>(iter) % 6]);
        Scalar a = random_scalar(f, rng);
        Scalar b = random_scalar(f, rng);
        Scalar c = random_scalar(f, rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + Scalar::zero(f) == a);
        REQUIRE(a * Scalar::one(f) == a);
        REQUIRE((a - a).is_zero());
        if (!a.is_zero()) {
            REQUIRE((a * a.inverse()).is_one());
            // canonical form: equality is structural
            REQUIRE((a - b).is_zero() == (a.coeffs() == b.coeffs()));
        }
    }
}
