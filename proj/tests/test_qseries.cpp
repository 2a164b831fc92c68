#include <doctest.h>

#include <random>
#include <stdexcept>

#include "crystalq/qseries.hpp"
#include "crystalq/zeta.hpp"

using crystalq::QSeries;
using crystalq::Rat;

namespace {

QSeries random_series(std::mt19937_64& gen, long trunc, long min_exp,
                      bool unit = false) {
  std::vector<Rat> c;
  for (long n = min_exp; n <= trunc; ++n)
    c.emplace_back(static_cast<long>(gen() % 11) - 5,
                   static_cast<long>(gen() % 4) + 1);
  for (auto& x : c) x.canonicalize();
  if (unit) c[-min_exp] = 1;
  return QSeries(min_exp, trunc, std::move(c));
}

}  // namespace

TEST_CASE("constructor invariants") {
  CHECK_THROWS_AS(QSeries(0, 3, {Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(QSeries(2, 1, {}), std::invalid_argument);
  QSeries s(-1, 2, {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(s.coeff(-1) == 1);
  CHECK(s.coeff(-2) == 0);  // below min_exp: known zero
  CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
}

TEST_CASE("basic arithmetic: (1+q)(1-q) = 1-q^2") {
  QSeries a(0, 5, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  QSeries b(0, 5, {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0)});
  QSeries p = a * b;
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.coeff(3) == 0);
  CHECK(p.trunc() == 5);
}

TEST_CASE("product truncation accounts for min_exp shifts") {
  // (q^2 * exact-to-5) * (exact-to-3) is exact to min(5+0, 3+2) = 5.
  QSeries a = QSeries::monomial(Rat(1), 2, 5);
  QSeries b = QSeries::constant(Rat(1), 3);
  CHECK((a * b).trunc() == 5);
  CHECK((a * b).min_exp() == 2);
}

TEST_CASE("mcmahon coefficients") {
  QSeries m = crystalq::mcmahon(6);
  long expected[] = {1, 1, 3, 6, 13, 24, 48};
  for (long n = 0; n <= 6; ++n) CHECK(m.coeff(n) == expected[n]);
}

TEST_CASE("mcmahon times its inverse is 1") {
  QSeries m = crystalq::mcmahon(10);
  QSeries p = m * m.inverse();
  CHECK(p == QSeries::constant(Rat(1), 10));
}

TEST_CASE("inverse requires unit leading coefficient") {
  QSeries s(0, 3, {Rat(2), Rat(1), Rat(1), Rat(1)});
  CHECK_THROWS_AS(s.inverse(), std::domain_error);
}

TEST_CASE("inverse handles Laurent leading monomial") {
  // q^{-1}(1 + q) -> inverse q (1 - q + q^2 - ...)
  QSeries s(-1, 2, {Rat(1), Rat(1), Rat(0), Rat(0)});
  QSeries inv = s.inverse();
  CHECK(inv.min_exp() == 1);
  CHECK(inv.coeff(1) == 1);
  CHECK(inv.coeff(2) == -1);
  CHECK(inv.coeff(3) == 1);
}

TEST_CASE("pow round trip") {
  QSeries m = crystalq::mcmahon(8);
  CHECK(m.pow(Rat(3, 2)).pow(Rat(2, 3)) == m);
  CHECK(m.pow(Rat(0)) == QSeries::constant(Rat(1), 8));
  CHECK(m.pow(Rat(2)) == m * m);
  CHECK(m.pow(Rat(-1)) == m.inverse());
}

TEST_CASE("log and exp are inverse") {
  std::mt19937_64 gen(7);
  for (int rep = 0; rep < 20; ++rep) {
    QSeries f = random_series(gen, 8, 0, /*unit=*/true);
    CHECK(f.log().exp() == f);
  }
}

TEST_CASE("eisenstein_odd coefficients") {
  QSeries e3 = crystalq::eisenstein_odd(1, 6);
  long sigma2[] = {0, 1, 5, 10, 21, 26, 50};
  for (long n = 1; n <= 6; ++n) CHECK(e3.coeff(n) == sigma2[n]);
  QSeries e5 = crystalq::eisenstein_odd(2, 4);
  long sigma4[] = {0, 1, 17, 82, 273};
  for (long n = 1; n <= 4; ++n) CHECK(e5.coeff(n) == sigma4[n]);
}

TEST_CASE("E3 = q d/dq log M") {
  QSeries m = crystalq::mcmahon(10);
  CHECK(m.log().q_ddq() == crystalq::eisenstein_odd(1, 10));
}

TEST_CASE("q_ddq and at_neg_q") {
  QSeries s(-2, 2, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  QSeries d = s.q_ddq();
  CHECK(d.coeff(-2) == -2);
  CHECK(d.coeff(0) == 0);
  CHECK(d.coeff(2) == 2);
  QSeries n = s.at_neg_q();
  CHECK(n.coeff(-2) == 1);
  CHECK(n.coeff(-1) == -1);
  CHECK(n.coeff(1) == -1);
  // q d/dq commutes with q -> -q.
  CHECK(s.q_ddq().at_neg_q() == s.at_neg_q().q_ddq());
}

TEST_CASE("div_unit matches multiplication by inverse") {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 20; ++rep) {
    QSeries a = random_series(gen, 9, -2);
    QSeries b = random_series(gen, 9, 0, /*unit=*/true);
    QSeries q = QSeries::div_unit(a, b);
    CHECK(q * b == a.truncated(q.trunc() + 0));
    for (long n = q.min_exp(); n <= q.trunc(); ++n)
      CHECK(q.coeff(n) == (a * b.inverse()).coeff(n));
  }
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 15; ++rep) {
    QSeries a = random_series(gen, 7, -1);
    QSeries b = random_series(gen, 7, 0);
    QSeries c = random_series(gen, 7, -2);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    QSeries lhs = (a * b) * c;
    QSeries rhs = a * (b * c);
    CHECK(lhs.trunc() == rhs.trunc());
    for (long n = std::min(lhs.min_exp(), rhs.min_exp()); n <= lhs.trunc(); ++n)
      CHECK(lhs.coeff(n) == rhs.coeff(n));
    QSeries d1 = a * (b + c);
    QSeries d2 = a * b + a * c;
    for (long n = d1.min_exp(); n <= std::min(d1.trunc(), d2.trunc()); ++n)
      CHECK(d1.coeff(n) == d2.coeff(n));
  }
}

TEST_CASE("zeta_negative values") {
  CHECK(crystalq::zeta_negative(0) == Rat(-1, 2));
  CHECK(crystalq::zeta_negative(1) == Rat(-1, 12));
  CHECK(crystalq::zeta_negative(2) == 0);
  CHECK(crystalq::zeta_negative(3) == Rat(1, 120));
  CHECK(crystalq::zeta_negative(4) == 0);
  CHECK(crystalq::zeta_negative(5) == Rat(-1, 252));
}

TEST_CASE("bernoulli numbers") {
  CHECK(crystalq::bernoulli(0) == 1);
  CHECK(crystalq::bernoulli(1) == Rat(-1, 2));
  CHECK(crystalq::bernoulli(2) == Rat(1, 6));
  CHECK(crystalq::bernoulli(3) == 0);
  CHECK(crystalq::bernoulli(12) == Rat(-691, 2730));
}
