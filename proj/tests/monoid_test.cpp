#include <doctest.h>

#include <algorithm>
#include <functional>

#include "test_support.hpp"

using namespace posmon;
using posmon::testing::q;
using posmon::testing::qs;
using posmon::testing::qx;
using posmon::testing::qxs;
using posmon::testing::Rng;

namespace {

FinMonoid mq(std::initializer_list<const char*> gens) { return FinMonoid::build(Field::kQ, qs(gens)); }
FinMonoid mqx(std::initializer_list<const char*> gens) { return FinMonoid::build(Field::kQX, qxs(gens)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kDomain;
}

}  // namespace

TEST_SUITE("monoid-core") {

TEST_CASE("build sorts, deduplicates and finds atoms") {
  CHECK(mq({"10", "4", "6"}).atoms() == qs({"4", "6"}));
  CHECK(mqx({"X^3", "X+X^2", "X+2*X^2"}).atoms() == qxs({"X+X^2", "X+2*X^2", "X^3"}));
  CHECK(mq({"3/2"}).atoms() == qs({"3/2"}));
  const auto m = mq({"5", "0", "3", "5", "6/2"});
  CHECK(m.generators() == qs({"3", "5"}));
  CHECK(m.atom_positions() == std::vector<std::size_t>{0, 1});
  CHECK(code_of([] { mq({"3", "-1"}); }) == ErrorCode::kInvalidGenerator);
  CHECK(code_of([] {
          std::vector<FieldElem> mixed{q("1"), qx("X")};
          FinMonoid::build(Field::kQX, mixed);
        }) == ErrorCode::kTagMismatch);
}

TEST_CASE("membership") {
  const auto m = mq({"3", "5"});
  CHECK_FALSE(m.member(q("7")));
  CHECK(m.member(q("8")));
  CHECK(m.member(q("0")));
  CHECK(mq({}).member(q("0")));
  CHECK_FALSE(m.member(q("1/2")));
  CHECK(code_of([&] { m.member(q("-3")); }) == ErrorCode::kDomain);
  CHECK(mqx({"X", "1"}).member(qx("2*X+7")));
  CHECK_FALSE(mqx({"X", "1"}).member(qx("X^2")));
  CHECK_FALSE(mqx({"X", "2"}).member(qx("X+1")));
}

TEST_CASE("factorizations") {
  const auto m = mq({"3", "5"});
  const auto z15 = m.factorizations(q("15"));
  REQUIRE(z15.size() == 2);
  CHECK(z15[0].exponents == std::vector<std::uint64_t>{5, 0});
  CHECK(z15[1].exponents == std::vector<std::uint64_t>{0, 3});

  const auto p = mqx({"2*X", "X+1", "1"});
  REQUIRE(p.atoms() == qxs({"1", "X+1", "2*X"}));
  const auto z = p.factorizations(qx("3*X+2"));
  REQUIRE(z.size() == 1);
  CHECK(z[0].exponents == std::vector<std::uint64_t>{1, 1, 1});

  const auto z0 = m.factorizations(q("0"));
  REQUIRE(z0.size() == 1);
  CHECK(z0[0].length() == 0);
  CHECK(m.factorizations(q("7")).empty());
}

TEST_CASE("factorizations stop early when asked") {
  const auto m = mq({"2", "3"});
  int seen = 0;
  const bool complete = m.for_each_factorization(q("30"), [&](const Factorization&) { return ++seen < 4; });
  CHECK_FALSE(complete);
  CHECK(seen == 4);
}

TEST_CASE("length sets") {
  CHECK(mq({"1/2", "1/3"}).length_set(q("1")) == std::set<std::uint64_t>{2, 3});
  CHECK(mq({"3", "5"}).length_set(q("12")) == std::set<std::uint64_t>{4});
  CHECK(mq({"3", "5"}).length_set(q("0")) == std::set<std::uint64_t>{0});
}

TEST_CASE("divisibility") {
  const auto m = mq({"3", "5"});
  CHECK(m.divides(q("3"), q("8")));
  CHECK_FALSE(m.divides(q("5"), q("6")));
  CHECK(m.divides(q("0"), q("8")));
  CHECK_FALSE(m.divides(q("9"), q("8")));
  CHECK(code_of([&] { m.divides(q("7"), q("8")); }) == ErrorCode::kNotAnElement);
  CHECK(code_of([&] { m.divides(q("3"), q("7")); }) == ErrorCode::kNotAnElement);
}

TEST_CASE("strata") {
  const auto p = mqx({"X+X^2", "X+2*X^2", "X^3"});
  const auto s = p.strata();
  REQUIRE(s.size() == 2);
  CHECK(s[0].generators() == qxs({"X+X^2", "X+2*X^2"}));
  CHECK(s[1].generators() == p.generators());

  REQUIRE(mq({"3", "5"}).strata().size() == 1);

  const auto t = mqx({"1", "X", "X^2"}).strata();
  REQUIRE(t.size() == 3);
  CHECK(t[0].generators() == qxs({"1"}));
  CHECK(t[1].generators() == qxs({"1", "X"}));
  CHECK(t[2].generators() == qxs({"1", "X", "X^2"}));
}

TEST_CASE("divisor-closed certificates") {
  const auto p = mqx({"X+X^2", "X+2*X^2", "X^3"});
  const auto f1 = p.strata()[0];
  const std::vector<FieldElem> sample{qx("2*X+3*X^2")};
  CHECK(check_divisor_closed(p, f1, sample));

  const auto m = mq({"3", "5"});
  const auto n = mq({"3"});
  CHECK(check_divisor_closed(m, n, qs({"6"})));
  CHECK_FALSE(check_divisor_closed(m, mq({"15"}), qs({"15"})));
  CHECK(code_of([&] { check_divisor_closed(m, mq({"7"}), qs({"7"})); }) == ErrorCode::kNotASubmonoid);
  CHECK(code_of([&] { check_divisor_closed(m, n, qs({"5"})); }) == ErrorCode::kNotAnElement);
}

TEST_CASE("enumerate_below") {
  const auto m = mq({"3", "5"});
  const auto below = m.enumerate_below(q("20"));
  CHECK(below == qs({"0", "3", "5", "6", "8", "9", "10", "11", "12", "13", "14", "15", "16", "17", "18", "19", "20"}));
  CHECK(m.enumerate_below(q("2")) == qs({"0"}));
  CHECK(code_of([] { mqx({"1", "X"}).enumerate_below(qx("2*X")); }) == ErrorCode::kInfiniteSet);
  CHECK(code_of([&] { m.enumerate_below(q("-1")); }) == ErrorCode::kDomain);
  // Same-class generators only: finite even over Q(X).
  CHECK(mqx({"X", "X+1"}).enumerate_below(qx("2*X+1")) == qxs({"0", "X", "X+1", "2*X", "2*X+1"}));
  CHECK(mqx({"X^2"}).enumerate_below(qx("X")) == qxs({"0"}));
}

TEST_CASE("fg_upper_bound") {
  CHECK(mqx({"X", "X+1"}).fg_upper_bound() == qx("(X+1)^2"));
  CHECK(mqx({"3/2", "5/2"}).fg_upper_bound() == qx("X"));
  CHECK(mqx({"1/X"}).fg_upper_bound() == qx("X"));
  CHECK_FALSE(mq({"3", "5"}).fg_upper_bound().has_value());
}

TEST_CASE("restricted factorization homomorphism") {
  const auto m = mq({"3", "5", "7"});
  for (const auto& z : m.factorizations(q("30"))) {
    const std::vector<std::size_t> a{0, 2};
    const std::vector<std::size_t> rest{1};
    CHECK(m.value_over(z, a) + m.value_over(z, rest) == m.value(z));
    CHECK(z.length_over(a) + z.length_over(rest) == z.length());
  }
}

TEST_CASE("random Q monoids: soundness, oracle agreement, atom rule, BF bound") {
  Rng rng(99);
  for (int iter = 0; iter < 120; ++iter) {
    std::vector<FieldElem> gens;
    const long k = rng.uniform(1, 5);
    for (long i = 0; i < k; ++i) gens.push_back(FieldElem::rational(rng.rational(12, 6)));
    const auto m = FinMonoid::build(Field::kQ, gens);

    // Atom rule against "no factorization of length >= 2 over all generators".
    const auto all = posmon::testing::rationals(m.generators());
    for (const auto& g : m.generators()) {
      const auto reps = oracle::factorizations_q(all, g.as_rational());
      const bool has_long = std::any_of(reps.begin(), reps.end(), [](const auto& v) {
        std::uint64_t len = 0;
        for (auto c : v) len += c;
        return len >= 2;
      });
      const bool is_atom = std::find(m.atoms().begin(), m.atoms().end(), g) != m.atoms().end();
      CHECK(is_atom == !has_long);
    }

    FieldElem x = q("0");
    for (const auto& a : m.atoms()) x += posmon::testing::scalar(Field::kQ, rng.uniform(0, 3)) * a;
    const auto zs = m.factorizations(x);
    for (const auto& z : zs) CHECK(m.value(z) == x);
    CHECK(posmon::testing::as_vectors(zs) ==
          oracle::factorizations_q(posmon::testing::rationals(m.atoms()), x.as_rational()));

    const Integer bf = (x.as_rational() / m.generators().front().as_rational()).floor();
    for (auto len : m.length_set(x)) CHECK(Integer(len) <= bf);
  }
}

TEST_CASE("random Q(X) monoids: strata are divisor-closed on samples") {
  Rng rng(5);
  for (int iter = 0; iter < 15; ++iter) {
    std::vector<FieldElem> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(rng.positive_poly(2, 3));
    const auto m = FinMonoid::build(Field::kQX, gens);
    for (const auto& f : m.strata()) {
      std::vector<FieldElem> samples;
      for (const auto& a : f.generators()) {
        for (const auto& b : f.generators()) samples.push_back(a + b);
      }
      CHECK(check_divisor_closed(m, f, samples));
    }
  }
}

TEST_CASE("enumerate_below: increasing, closed, no long decreasing chains") {
  Rng rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<FieldElem> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(FieldElem::rational(rng.rational(10, 4)));
    const auto m = FinMonoid::build(Field::kQ, gens);
    const FieldElem bound = FieldElem::rational(rng.rational(20, 1));
    const auto below = m.enumerate_below(bound);
    for (std::size_t i = 1; i < below.size(); ++i) CHECK(compare(below[i - 1], below[i]) < 0);
    for (const auto& e : below) {
      CHECK(m.member(e));
      for (const auto& g : m.generators()) {
        const FieldElem d = e - g;
        if (d.sign() >= 0 && m.member(d)) {
          CHECK(std::binary_search(below.begin(), below.end(), d, FieldLess{}));
        }
      }
    }
    // Brute force: every combination of the three generators up to the bound.
    std::set<FieldElem, FieldLess> expected;
    const auto& g = m.generators();
    std::function<void(std::size_t, const FieldElem&)> walk = [&](std::size_t i, const FieldElem& sum) {
      if (compare(sum, bound) > 0) return;
      if (i == g.size()) {
        expected.insert(sum);
        return;
      }
      for (FieldElem s = sum; compare(s, bound) <= 0; s += g[i]) walk(i + 1, s);
    };
    walk(0, q("0"));
    CHECK(std::vector<FieldElem>(expected.begin(), expected.end()) == below);

    // Any strictly decreasing chain inside the set uses distinct elements.
    std::vector<FieldElem> chain;
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
      if (rng.coin()) chain.push_back(*it);
    }
    for (std::size_t i = 1; i < chain.size(); ++i) CHECK(compare(chain[i - 1], chain[i]) > 0);
    CHECK(chain.size() <= below.size());
  }
}

}  // TEST_SUITE
