#include "posmon/registry.hpp"

#include "posmon/error.hpp"

namespace posmon {
namespace {

GeneratorFamily terms(Field field, std::initializer_list<const char*> srcs) {
  std::vector<Expr> exprs;
  for (const char* s : srcs) exprs.push_back(parse_expr(s));
  return GeneratorFamily::parametric(field, std::move(exprs));
}

FieldElem value(Field field, const char* src) { return eval_expr(parse_expr(src), 1, field); }

}  // namespace

const std::vector<std::string>& paper_example_ids() {
  static const std::vector<std::string> ids = {
      "inf-z3",  "classic-strongly-increasing", "decreasing-not-bf", "ff-not-increasing",
      "qx-P",    "qx-Pprime",                   "halving",           "not-hereditarily-atomic",
  };
  return ids;
}

PaperExample paper_example(std::string_view id) {
  using F = Field;
  if (id == "inf-z3") {
    return {"inf-z3",
            "Puiseux monoid with atoms in (1,2); 3 = (p+floor(p/2))/p + (2p-floor(p/2))/p for every prime p",
            terms(F::kQ, {"(p(n)+floor(p(n)/2))/p(n)", "(2*p(n)-floor(p(n)/2))/p(n)"}),
            5,
            {value(F::kQ, "3")},
            "atomic, 0 is not a limit point, BF, not FF (|Z(3)| is infinite)"};
  }
  if (id == "classic-strongly-increasing") {
    return {"classic-strongly-increasing",
            "<(p_n^2+1)/p_n>",
            terms(F::kQ, {"(p(n)^2+1)/p(n)"}),
            5,
            {value(F::kQ, "5/2"), value(F::kQ, "5")},
            "strongly increasing over Q; bounded by X (not strongly increasing) inside Q(X)"};
  }
  if (id == "decreasing-not-bf") {
    return {"decreasing-not-bf",
            "<1/p_n>: 1 is the sum of p_n copies of 1/p_n",
            terms(F::kQ, {"1/p(n)"}),
            8,
            {value(F::kQ, "1")},
            "decreasing, atomic, hereditarily atomic, not BF"};
  }
  if (id == "ff-not-increasing") {
    return {"ff-not-increasing",
            "<(p_{2n}^2+1)/p_{2n}, (p_{2n+1}+1)/p_{2n+1}>",
            terms(F::kQ, {"(p(2*n)^2+1)/p(2*n)", "(p(2*n+1)+1)/p(2*n+1)"}),
            6,
            {value(F::kQ, "68/15"), value(F::kQ, "12")},
            "FF, not increasing (atoms unbounded with 1 as a limit point)"};
  }
  if (id == "qx-P") {
    return {"qx-P",
            "<X^n> in Q(X)",
            terms(F::kQX, {"X^n"}),
            5,
            {value(F::kQX, "X^3+2*X")},
            "strongly increasing in Q(X)"};
  }
  if (id == "qx-Pprime") {
    return {"qx-Pprime",
            "<X^3, X+nX^2> in Q(X)",
            terms(F::kQX, {"X^3", "X+n*X^2"}),
            4,
            {value(F::kQX, "X^3+3*X^2+2*X"), value(F::kQX, "5*X^2+2*X")},
            "atoms {X^3} and every X+nX^2; not increasing (infinitely many atoms below X^3)"};
  }
  if (id == "halving") {
    return {"halving",
            "<1/2^n>",
            terms(F::kQ, {"1/2^n"}),
            8,
            {value(F::kQ, "1")},
            "antimatter: 1/2^k = 2*(1/2^(k+1))"};
  }
  if (id == "not-hereditarily-atomic") {
    return {"not-hereditarily-atomic",
            "<1/(2^n q_n)> with q_n the n-th odd prime",
            terms(F::kQ, {"1/(2^n*p(n+1))"}),
            4,
            {value(F::kQ, "1")},
            "atomic, not BF, not hereditarily atomic (contains <1/2^n>)"};
  }
  throw Error(ErrorCode::kRegistry, "unknown example id '" + std::string(id) + "'");
}

}  // namespace posmon
