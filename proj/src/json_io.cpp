#include "polymon/json_io.hpp"

namespace polymon {

using nlohmann::json;

void to_json(json& j, const Word& w) { j = w.letters(); }

void to_json(json& j, const WordSet& s) { j = s.members(); }

void to_json(json& j, const PElement& x) {
  if (x.is_zero()) {
    j = json{{"kind", "zero"}};
  } else {
    j = json{{"kind", "pair"}, {"u", x.left()}, {"v", x.right()}};
  }
}

void to_json(json& j, const BElement& x) {
  if (x.is_zero()) {
    j = json{{"kind", "zero"}};
  } else {
    j = json{{"kind", "unit"}, {"i", x.i()}, {"j", x.j()}};
  }
}

void to_json(json& j, const BasicNbhd& a) { j = json{{"A", a.words()}}; }

void to_json(json& j, const ChainSpec& s) {
  j = json{{"preperiod", s.preperiod}, {"period", s.period}};
}

void to_json(json& j, const FilterDesc& f) {
  j = json{{"a", f.a()}, {"b", f.b()}};
}

void to_json(json& j, const SElement& x) {
  if (x.is_finite()) {
    j = json{{"kind", "finite"}, {"elem", x.finite()}};
  } else {
    j = json{{"kind", "filter"}, {"a", x.filter().a()}, {"b", x.filter().b()}};
  }
}

void to_json(json& j, const SuiteReport& r) {
  j = json{{"suite", r.suite},
           {"cases", r.cases},
           {"failures", r.failures},
           {"seed", r.seed}};
}

void to_json(json& j, const CheckResult& r) {
  j = json{{"ok", r.ok}};
  if (!r.ok) {
    if (r.counterexample) {
      j["counterexample"] = *r.counterexample;
    }
    if (!r.detail.empty()) {
      j["detail"] = r.detail;
    }
  }
}

void to_json(json& j, const ChainIntersection& c) {
  j = json{{"hits", c.hits}, {"misses", c.misses}};
}

}  // namespace polymon
