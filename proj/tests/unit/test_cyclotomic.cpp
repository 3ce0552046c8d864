#include "doctest.h"

#include "jumploci/cyclotomic.hpp"
#include "jumploci/errors.hpp"
#include "random.hpp"

using jumploci::Cyclo;
using jumploci::ErrorCode;
using testsupport::Rng;

TEST_CASE("products and sums of roots of unity") {
  CHECK(Cyclo::zeta(4) * Cyclo::zeta(4) == Cyclo(-1));
  CHECK(Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo(-1));
  const Cyclo a = Cyclo(1) + Cyclo::zeta(8);
  CHECK(a / a == Cyclo(1));
  CHECK((a / a).is_rational());
}

TEST_CASE("numbers of different conductors meet at the lcm") {
  // zeta_6 = -zeta_3^2
  CHECK(Cyclo::zeta(6) == -Cyclo::zeta(3, 2));
  CHECK(Cyclo::zeta(12, 3) == Cyclo::zeta(4));
  const Cyclo s = Cyclo::zeta(3) + Cyclo::zeta(4);
  CHECK(s.conductor() == 12);
  CHECK(s - Cyclo::zeta(4) == Cyclo::zeta(3));
}

TEST_CASE("zeta powers wrap around") {
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(Cyclo::zeta(n).pow(static_cast<long>(n)) == Cyclo(1));
    CHECK(Cyclo::zeta(n, -1) == Cyclo::zeta(n, static_cast<long>(n) - 1));
    CHECK(Cyclo::zeta(n).pow(-1) == Cyclo::zeta(n).conj());
  }
}

TEST_CASE("sum of all n-th roots of unity vanishes") {
  for (unsigned n = 2; n <= 12; ++n) {
    Cyclo s(0);
    for (unsigned k = 0; k < n; ++k) s += Cyclo::zeta(n, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("division by zero raises") {
  try {
    (void)(Cyclo::zeta(5) / Cyclo(0));
    FAIL("expected an error");
  } catch (const jumploci::Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS((void)Cyclo(0).inverse(), jumploci::Error);
}

TEST_CASE("field axioms on random elements") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Cyclo a = testsupport::random_cyclo(rng), b = testsupport::random_cyclo(rng),
                c = testsupport::random_cyclo(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclo(0));
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("conjugation is an involution and fixes rationals") {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const Cyclo a = testsupport::random_cyclo(rng);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).conj() == a * a.conj());
  }
  CHECK(Cyclo(jumploci::Rational(3, 7)).conj() == Cyclo(jumploci::Rational(3, 7)));
}

TEST_CASE("rational parsing and formatting round trip") {
  CHECK(jumploci::format_rational(jumploci::parse_rational("-6/4")) == "-3/2");
  CHECK(jumploci::format_rational(jumploci::parse_rational("5")) == "5");
}

TEST_CASE("cyclotomic polynomials have degree phi(n)") {
  for (unsigned n = 1; n <= 30; ++n) CHECK(jumploci::cyclotomic_polynomial(n).size() == jumploci::euler_phi(n) + 1);
}

TEST_CASE("fused multiply-accumulate agrees with separate operations") {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    // mix in rationals and zeros so every shortcut is reached
    auto pick = [&] {
      switch (rng.below(4)) {
        case 0: return Cyclo();
        case 1: return Cyclo(jumploci::Rational(static_cast<long>(rng.range(-5, 5)), 3));
        default: return testsupport::random_cyclo(rng);
      }
    };
    const Cyclo a = pick(), b = pick(), c = pick();
    Cyclo s = c, t = c;
    s.sub_mul(a, b);
    t.add_mul(a, b);
    CHECK(s == c - a * b);
    CHECK(t == c + a * b);
    CHECK(s.is_zero() == (s == Cyclo(0)));
    CHECK((s - s).coeffs().empty());
  }
  CHECK(Cyclo().is_zero());
  CHECK(Cyclo().rational_value() == 0);
  CHECK(Cyclo(0) == Cyclo(jumploci::Rational(0)));
  CHECK((Cyclo::zeta(3) - Cyclo::zeta(3)).is_rational());
}
