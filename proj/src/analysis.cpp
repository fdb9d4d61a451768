#include "polymon/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polymon {

namespace {

constexpr std::size_t kMaxFailures = 32;

}  // namespace

void SuiteReport::fail(std::string message) {
  if (failures.size() < kMaxFailures) {
    failures.push_back(std::move(message));
  }
}

SuiteReport check_zero_e_unitary(
    const std::vector<PElement>& ball,
    const std::function<bool(const PElement&, const PElement&)>& leq,
    const std::function<bool(const PElement&)>& idem) {
  using Leq = std::function<bool(const PElement&, const PElement&)>;
  using Idem = std::function<bool(const PElement&)>;
  const Leq leq_fn =
      leq ? leq : Leq([](const PElement& a, const PElement& b) { return nat_leq(a, b); });
  const Idem idem_fn =
      idem ? idem : Idem([](const PElement& a) { return is_idempotent(a); });
  SuiteReport report;
  report.suite = "zero-e-unitary";
  for (const PElement& e : ball) {
    if (e.is_zero() || !idem_fn(e)) continue;
    for (const PElement& x : ball) {
      ++report.cases;
      if (leq_fn(e, x) && !idem_fn(x)) {
        report.fail("idempotent " + e.str() + " <= non-idempotent " + x.str());
      }
    }
  }
  return report;
}

std::size_t CongruenceState::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

std::size_t CongruenceState::intern(const PElement& x) {
  auto [it, inserted] = index_.try_emplace(x, elements_.size());
  if (inserted) {
    parent_.push_back(elements_.size());
    elements_.push_back(x);
  }
  return it->second;
}

bool CongruenceState::merge(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  parent_[b] = a;
  return true;
}

bool CongruenceState::same_class(const PElement& u, const PElement& v) const {
  if (u == v) return true;
  if (status_ == CongruenceStatus::Collapsed) {
    const auto in_ball = [&](const PElement& e) {
      return e.is_zero() ||
             (e.left().size() <= ball_len_ && e.right().size() <= ball_len_);
    };
    if (in_ball(u) && in_ball(v)) return true;
  }
  auto iu = index_.find(u);
  auto iv = index_.find(v);
  if (iu == index_.end() || iv == index_.end()) return false;
  return find(iu->second) == find(iv->second);
}

CongruenceState congruence_saturate(const PElement& x, const PElement& y,
                                    std::size_t ball_len, std::size_t mult_len) {
  if (x == y) {
    throw std::invalid_argument("congruence_saturate requires a distinct pair");
  }
  if (x.alphabet() != y.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  const Letter alphabet = x.alphabet();

  CongruenceState state;
  state.ball_len_ = ball_len;
  const std::size_t zero_id = state.intern(PElement::zero(alphabet));
  const std::size_t one_id = state.intern(PElement::one(alphabet));

  const auto in_ball = [&](const PElement& e) {
    return e.is_zero() ||
           (e.left().size() <= ball_len && e.right().size() <= ball_len);
  };
  const auto collapsed = [&] { return state.find(zero_id) == state.find(one_id); };

  // Non-zero multipliers, small words first so that collapsing pairs are
  // found early when iterating in order.
  std::vector<PElement> multipliers = enumerate_ball(alphabet, mult_len);
  multipliers.erase(multipliers.begin());  // drop zero: 0.u.0 merges nothing
  std::sort(multipliers.begin(), multipliers.end(),
            [](const PElement& a, const PElement& b) {
              const std::size_t la = a.left().size() + a.right().size();
              const std::size_t lb = b.left().size() + b.right().size();
              return la != lb ? la < lb : a < b;
            });

  // Right multipliers <tau|e> looked up by tau, for the targeted pass.
  std::unordered_map<Word, std::size_t> tau_index;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    if (multipliers[i].right().empty()) {
      tau_index.emplace(multipliers[i].left(), i);
    }
  }

  struct Event {
    std::size_t u, v;
    std::size_t depth;
  };
  std::vector<Event> events;

  const auto push_merge = [&](const PElement& u, const PElement& v,
                              std::size_t depth) {
    if (u == v || !in_ball(u) || !in_ball(v)) return;
    const std::size_t iu = state.intern(u);
    const std::size_t iv = state.intern(v);
    if (state.merge(iu, iv)) {
      events.push_back(Event{iu, iv, depth});
      if (state.depth_ == 0 && collapsed()) {
        state.status_ = CongruenceStatus::Collapsed;
        state.depth_ = depth;
      }
    }
  };

  // When a.u has the form <e|tau>, the single right multiplier <tau|e>
  // takes it to the identity; trying those pairs first finds the collapse
  // without sweeping the full multiplier grid. The grid sweep below keeps
  // the closure complete when the targeted pass stalls.
  const auto targeted_pass = [&](const Event& e) {
    const PElement u = state.elements_[e.u];
    const PElement v = state.elements_[e.v];
    for (const PElement& a : multipliers) {
      const PElement au = multiply(a, u);
      const PElement av = multiply(a, v);
      for (const PElement* side : {&au, &av}) {
        if (side->is_zero() || !side->left().empty()) continue;
        const auto it = tau_index.find(side->right());
        if (it == tau_index.end()) continue;
        const PElement& b = multipliers[it->second];
        push_merge(multiply(au, b), multiply(av, b), e.depth + 1);
        if (state.status_ == CongruenceStatus::Collapsed) return;
      }
    }
  };

  const auto full_pass = [&](const Event& e) {
    const PElement u = state.elements_[e.u];
    const PElement v = state.elements_[e.v];
    for (const PElement& a : multipliers) {
      const PElement au = multiply(a, u);
      const PElement av = multiply(a, v);
      for (const PElement& b : multipliers) {
        push_merge(multiply(au, b), multiply(av, b), e.depth + 1);
        if (state.status_ == CongruenceStatus::Collapsed) return;
      }
    }
  };

  push_merge(x, y, 1);
  std::size_t fast_cursor = 0;
  std::size_t full_cursor = 0;
  while (state.status_ != CongruenceStatus::Collapsed) {
    if (fast_cursor < events.size()) {
      targeted_pass(events[fast_cursor++]);
    } else if (full_cursor < events.size()) {
      full_pass(events[full_cursor++]);
    } else {
      break;
    }
  }
  return state;
}

}  // namespace polymon
