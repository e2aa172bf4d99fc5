#include <doctest.h>

#include "test_support.hpp"

using namespace posmon;
using posmon::testing::q;
using posmon::testing::qs;
using posmon::testing::qx;
using posmon::testing::qxs;

namespace {

GeneratorFamily fam(Field f, std::initializer_list<const char*> terms) {
  std::vector<Expr> exprs;
  for (const char* t : terms) exprs.push_back(parse_expr(t));
  return GeneratorFamily::parametric(f, std::move(exprs));
}

const char* kInfZ3a = "(p(n)+floor(p(n)/2))/p(n)";
const char* kInfZ3b = "(2*p(n)-floor(p(n)/2))/p(n)";

}  // namespace

TEST_SUITE("families") {

TEST_CASE("truncate") {
  CHECK(truncate(fam(Field::kQ, {"(p(n)^2+1)/p(n)"}), 3).generators() == qs({"5/2", "10/3", "26/5"}));
  CHECK(truncate(fam(Field::kQ, {"1/p(n)"}), 3).generators() == qs({"1/5", "1/3", "1/2"}));
  CHECK(truncate(fam(Field::kQ, {kInfZ3a, kInfZ3b}), 1).generators() == qs({"3/2"}));
  CHECK(fam(Field::kQ, {kInfZ3a, kInfZ3b}).sequence(1).size() == 2);
  CHECK_THROWS_AS(truncate(fam(Field::kQ, {"1/p(n)"}), 0), Error);
}

TEST_CASE("family evaluation errors") {
  try {
    truncate(fam(Field::kQ, {"n-2"}), 3);
    FAIL("expected family evaluation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFamilyEvaluation);
  }
  CHECK_THROWS_AS(truncate(fam(Field::kQX, {"floor(X/2)"}), 1), Error);
  CHECK_THROWS_AS(truncate(fam(Field::kQ, {"1/(n-1)"}), 1), Error);
}

TEST_CASE("classify_monotone") {
  CHECK(classify_monotone(fam(Field::kQ, {"(p(n)^2+1)/p(n)"}), 5) == Monotonicity::kIncreasing);
  CHECK(classify_monotone(fam(Field::kQ, {"1/p(n)"}), 5) == Monotonicity::kDecreasing);
  CHECK(classify_monotone(paper_example("ff-not-increasing").family, 6) == Monotonicity::kNeither);
  CHECK(classify_monotone(fam(Field::kQ, {"7"}), 4) == Monotonicity::kConstant);
  CHECK(classify_monotone(fam(Field::kQ, {"floor(n/2)+1"}), 6) == Monotonicity::kIncreasing);
}

TEST_CASE("finite sets admit both monotone enumerations") {
  posmon::testing::Rng rng(1);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<FieldElem> set;
    for (int i = 0; i < 5; ++i) set.push_back(FieldElem::rational(rng.rational(9, 4)));
    const auto e = monotone_enumerations(set, 12);
    const auto inc = classify_sequence(e.increasing);
    const auto dec = classify_sequence(e.decreasing);
    CHECK((inc == Monotonicity::kIncreasing || inc == Monotonicity::kConstant));
    CHECK((dec == Monotonicity::kDecreasing || dec == Monotonicity::kConstant));
    std::set<FieldElem, FieldLess> a(set.begin(), set.end());
    CHECK(std::set<FieldElem, FieldLess>(e.increasing.begin(), e.increasing.end()).size() == a.size());
    CHECK(std::set<FieldElem, FieldLess>(e.decreasing.begin(), e.decreasing.end()).size() == a.size());
  }
  CHECK_THROWS_AS(monotone_enumerations({}, 3), Error);
}

TEST_CASE("atom stability") {
  const auto halving = atom_stability(fam(Field::kQ, {"1/2^n"}), 1, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(halving.atoms_by_n.at(n) == std::vector<FieldElem>{q("1/" + std::to_string(1 << n))});
  }
  REQUIRE(halving.generators.size() == 5);
  for (const auto& g : halving.generators) CHECK(g.status == AtomStatus::kUnstable);

  const auto classic = atom_stability(fam(Field::kQ, {"(p(n)^2+1)/p(n)"}), 1, 5);
  for (const auto& g : classic.generators) CHECK(g.status == AtomStatus::kStable);

  const auto nha = atom_stability(paper_example("not-hereditarily-atomic").family, 1, 4);
  for (const auto& g : nha.generators) CHECK(g.status == AtomStatus::kStable);

  const auto with_nonatom = atom_stability(GeneratorFamily::explicit_list(Field::kQ, qs({"2", "3", "4"})), 1, 3);
  CHECK(with_nonatom.generators.back().status == AtomStatus::kNonAtom);
}

TEST_CASE("increasing families have window-stable atoms") {
  for (const char* term : {"(p(n)^2+1)/p(n)", "n+1/2", "2*n+3", "X^n"}) {
    const auto f = fam(Field::kQX, {term});
    REQUIRE(classify_monotone(f, 6) != Monotonicity::kNeither);
    for (const auto& g : atom_stability(f, 1, 6).generators) {
      CHECK(g.status != AtomStatus::kUnstable);
    }
  }
}

TEST_CASE("growth") {
  const auto rows = growth(fam(Field::kQ, {kInfZ3a, kInfZ3b}), q("3"), 1, 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == i + 1);
    CHECK(rows[i].count == i + 1);
  }

  const auto recip = growth(fam(Field::kQ, {"1/p(n)"}), q("1"), 1, 4);
  std::vector<std::uint64_t> maxima;
  for (const auto& r : recip) maxima.push_back(*r.max_length);
  CHECK(maxima == std::vector<std::uint64_t>{2, 3, 5, 7});

  for (const auto& r : growth(fam(Field::kQ, {"(p(n)^2+1)/p(n)"}), q("5/2"), 1, 6)) CHECK(r.count == 1);

  const auto missing = growth(fam(Field::kQ, {"2*n+1"}), q("1"), 1, 3);
  CHECK(missing[0].count == 0);
  CHECK_FALSE(missing[0].max_length.has_value());

  // The FF example stabilizes once the window passes the target's bound.
  const auto ff = growth(paper_example("ff-not-increasing").family, q("12"), 1, 6);
  for (std::size_t i = 1; i < ff.size(); ++i) CHECK(ff[i].count >= ff[i - 1].count);
  CHECK(ff[4].count == ff[5].count);
}

TEST_CASE("puiseux_normalize") {
  const auto a = puiseux_normalize(qxs({"3*X/2", "5*X/7"}));
  REQUIRE(a.has_value());
  CHECK(a->scale == qx("2/(3*X)"));
  CHECK(a->gens == std::vector<Rational>{Rational(1), Rational::parse("10/21")});
  CHECK_FALSE(puiseux_normalize(qxs({"X", "X^2"})).has_value());
  const auto b = puiseux_normalize(qs({"3", "5"}));
  REQUIRE(b.has_value());
  CHECK(b->scale == q("1"));
  CHECK(b->gens == std::vector<Rational>{Rational(3), Rational(5)});
  const auto empty = puiseux_normalize({});
  REQUIRE(empty.has_value());
  CHECK(empty->gens.empty());

  // Scaling back reproduces the input.
  posmon::testing::Rng rng(2);
  for (int iter = 0; iter < 20; ++iter) {
    const FieldElem base = rng.positive_poly(3, 4);
    std::vector<FieldElem> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(FieldElem::constant(Field::kQX, rng.rational(9, 9)) * base);
    const auto n = puiseux_normalize(gens);
    REQUIRE(n.has_value());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      CHECK(FieldElem::constant(Field::kQX, n->gens[i]) / n->scale == gens[i]);
    }
  }
}

TEST_CASE("denominator_boundedness") {
  const auto r = denominator_boundedness(fam(Field::kQ, {"1/p(n)"}), 4);
  CHECK(r.max_denominator == 7);
  CHECK_FALSE(r.bounded_trend);
  CHECK(r.min_valuation == std::map<Integer, long>{{2, -1}, {3, -1}, {5, -1}, {7, -1}});

  const auto c = denominator_boundedness(fam(Field::kQ, {"(p(n)^2+1)/p(n)"}), 3);
  CHECK(c.min_valuation.size() == 3);
  CHECK(c.min_valuation.count(Integer(2)) == 1);
  CHECK(c.min_valuation.count(Integer(5)) == 1);

  const auto nat = denominator_boundedness(fam(Field::kQ, {"n/1"}), 5);
  CHECK(nat.max_denominator == 1);
  CHECK(nat.min_valuation.empty());
  CHECK(nat.bounded_trend);

  const auto scaled = denominator_boundedness(fam(Field::kQX, {"X/p(n)"}), 3);
  CHECK(scaled.max_denominator == 5);
  try {
    denominator_boundedness(fam(Field::kQX, {"X^n"}), 3);
    FAIL("expected not applicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotApplicable);
  }
}

TEST_CASE("registry") {
  for (const auto& id : paper_example_ids()) CHECK(paper_example(id).id == id);

  const auto pp = truncate(paper_example("qx-Pprime").family, 4);
  CHECK(pp.atoms() == qxs({"X+X^2", "X+2*X^2", "X+3*X^2", "X+4*X^2", "X^3"}));

  const auto halving = paper_example("halving").family;
  REQUIRE(halving.terms().size() == 1);
  CHECK(render(halving.terms()[0]) == "1/2^n");

  try {
    paper_example("nope");
    FAIL("expected registry error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRegistry);
  }
}

TEST_CASE("families from documents") {
  const auto spec = parse_spec(R"j({"field":"Q","family":{"terms":["1/p(n)"]}})j");
  const auto f = GeneratorFamily::from_spec(spec);
  CHECK(classify_monotone(f, 4) == Monotonicity::kDecreasing);
  const auto ex = GeneratorFamily::from_spec(parse_spec(R"j({"field":"QX","generators":["X^3","X+1*X^2","X+2*X^2"]})j"));
  CHECK(ex.is_explicit());
  CHECK(truncate(ex, 3).atoms().size() == 3);
}

}  // TEST_SUITE
