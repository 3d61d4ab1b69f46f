#include <catch_amalgamated.hpp>

#include <random>

#include "vogel/exact/rational.hpp"

using vogel::BigInt;
using vogel::Rational;

TEST_CASE("rational normalizes sign and common factors") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0");
  CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
}

TEST_CASE("rational arithmetic") {
  const Rational a(BigInt(1), BigInt(3)), b(BigInt(1), BigInt(6));
  CHECK(a + b == Rational(BigInt(1), BigInt(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(BigInt(1), BigInt(18)));
  CHECK(a / b == Rational(2));
  CHECK(-a < b);
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(a.is_integer());
  CHECK(Rational(-5).sign() == -1);
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), vogel::DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), vogel::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("3/0"), vogel::DivisionByZero);
}

TEST_CASE("rational parse round trip") {
  for (const char* s : {"0", "5", "-5", "7/3", "-22/7", "123456789012345678901234567891/7"})
    CHECK(Rational::parse(s).str() == s);
  CHECK(Rational::parse("+4/6").str() == "2/3");
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "x", "1/2/3"})
    CHECK_THROWS_AS(Rational::parse(bad), vogel::ParseError);
}

TEST_CASE("rational arithmetic agrees with cross-multiplied 128-bit integers") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const long long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
    const Rational x{BigInt(p), BigInt(q)}, y{BigInt(r), BigInt(s)};
    const Rational sum = x + y, prod = x * y;
    // sum = (ps + rq) / qs, compared by cross-multiplication
    CHECK(sum.num() * BigInt(q) * BigInt(s) == (BigInt(p) * s + BigInt(r) * q) * sum.den());
    CHECK(prod.num() * BigInt(q) * BigInt(s) == BigInt(p) * r * prod.den());
    CHECK(vogel::big_gcd(boost::multiprecision::abs(sum.num()), sum.den()) == 1);
    CHECK(((x < y) == (static_cast<__int128>(p) * s < static_cast<__int128>(r) * q)));
    CHECK(x + y - y == x);
  }
}

TEST_CASE("to_int64 is checked") {
  CHECK(vogel::to_int64(BigInt(-42)) == -42);
  CHECK_THROWS_AS(vogel::to_int64(BigInt(1) << 70), vogel::InputError);
}
