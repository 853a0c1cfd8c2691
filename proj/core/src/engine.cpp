#include "torushom/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <mutex>
#include <unordered_set>

#include "torushom/errors.hpp"
#include "torushom/format.hpp"

namespace torushom {

namespace {

constexpr std::string_view kConvention =
    "torushom-recursion/1;compose=apply-right-first;cyc(l)=i->i+1;"
    "r4=compose(sigma,cyc(l));r5=compose(inverse(cyc(l)),sigma);"
    "r7-embed=front;r2r3-test=sigma(|sigma|)==|sigma|";

// Variable slots playing the roles of Q and T: the row theory is the
// column theory with Q and T exchanged.
struct Roles {
  std::size_t q;
  std::size_t t;
};

Roles roles(Theory theory) {
  return theory == Theory::Column ? Roles{kVarQ, kVarT} : Roles{kVarT, kVarQ};
}

RatFunc x_power_plus_a(std::size_t var, std::int32_t power) {
  return RatFunc(LaurentPoly::var(var, power) + LaurentPoly::var(kVarA));
}

}  // namespace

std::string_view to_string(RuleId r) {
  switch (r) {
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
    case RuleId::R3: return "R3";
    case RuleId::R4: return "R4";
    case RuleId::R5: return "R5";
    case RuleId::R6: return "R6";
    case RuleId::R7: return "R7";
    case RuleId::Base: return "Base";
  }
  return "?";
}

RuleId dispatch(const State& state) {
  const Word& v = state.v();
  const Word& w = state.w();
  if (v.empty() && w.empty()) return RuleId::Base;
  if (v.empty() || w.empty()) throw InvalidState("exactly one word is empty in " + state.to_string());
  const char a = v.back();
  const char b = w.back();
  if (a == '1' && b == '1') {
    if (state.ones() == 1) return RuleId::R1;
    return state.sigma().fixes_last() ? RuleId::R2 : RuleId::R3;
  }
  if (a == '0' && b == '1') return RuleId::R4;
  if (a == '1' && b == '0') return RuleId::R5;
  return state.ones() >= 1 ? RuleId::R7 : RuleId::R6;
}

Expansion expand(const State& state) {
  const RuleId rule = dispatch(state);
  const Roles r = roles(state.theory());
  const Theory th = state.theory();
  const Word& v = state.v();
  const Word& w = state.w();
  const Permutation& sigma = state.sigma();
  const std::size_t ones = state.ones();
  const auto l = static_cast<std::int32_t>(ones);

  Expansion out{rule, {}};
  switch (rule) {
    case RuleId::Base:
      break;
    case RuleId::R1: {
      RatFunc c = RatFunc(LaurentPoly(1) + LaurentPoly::var(kVarA)) *
                  RatFunc::inverse_one_minus(Monomial::var(kVarQ)) *
                  RatFunc::inverse_one_minus(Monomial::var(kVarT));
      out.children.push_back({std::move(c), State(v.drop_last(), w.drop_last(), Permutation(), th)});
      break;
    }
    case RuleId::R2: {
      RatFunc c = x_power_plus_a(r.q, l - 1) * RatFunc::inverse_one_minus(Monomial::var(r.q));
      out.children.push_back({std::move(c), State(v.drop_last(), w.drop_last(), sigma.trace_last(), th)});
      break;
    }
    case RuleId::R3:
      out.children.push_back(
          {x_power_plus_a(r.q, l - 1), State(v.drop_last(), w.drop_last(), sigma.trace_last(), th)});
      break;
    case RuleId::R4:
      out.children.push_back(
          {RatFunc(1), State(v.drop_last(), w.drop_last().prepend('1'), compose(sigma, cyc(ones)), th)});
      break;
    case RuleId::R5:
      out.children.push_back({RatFunc(1), State(v.drop_last().prepend('1'), w.drop_last(),
                                                compose(cyc(ones).inverse(), sigma), th)});
      break;
    case RuleId::R6:
      out.children.push_back({RatFunc(1), State(Word("1").concat(Word::repeat('0', v.size() - 1)),
                                                Word("1").concat(Word::repeat('0', w.size() - 1)),
                                                Permutation::identity(1), th)});
      break;
    case RuleId::R7: {
      const RatFunc shift = RatFunc::monomial(Monomial::var(r.q, -l));
      out.children.push_back(
          {shift, State(v.drop_last().prepend('1'), w.drop_last().prepend('1'), sigma.embed_front(), th)});
      out.children.push_back({shift * RatFunc::monomial(Monomial::var(r.t)),
                              State(v.drop_last().prepend('0'), w.drop_last().prepend('0'), sigma, th)});
      break;
    }
  }
  return out;
}

std::string_view convention_descriptor() { return kConvention; }

std::string convention_fingerprint() {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : kConvention) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

MemoKey MemoKey::of(const State& s) {
  return {s.theory(), s.v().str(), s.w().str(), s.sigma().images()};
}

State MemoKey::to_state() const { return State(Word(v), Word(w), Permutation(sigma), theory); }

std::size_t MemoKeyHash::operator()(const MemoKey& k) const noexcept {
  std::size_t h = std::hash<std::string>{}(k.v);
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<std::string>{}(k.w));
  mix(static_cast<std::size_t>(k.theory));
  for (auto s : k.sigma) mix(s);
  return h;
}

std::optional<RatFunc> MemoTable::get(const MemoKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

bool MemoTable::insert(const MemoKey& key, RatFunc value) {
  std::unique_lock lock(mutex_);
  return map_.try_emplace(key, std::move(value)).second;
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

std::vector<std::pair<MemoKey, RatFunc>> MemoTable::entries() const {
  std::vector<std::pair<MemoKey, RatFunc>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

struct Engine::Frame {
  std::unordered_set<MemoKey, MemoKeyHash> on_stack;
  std::size_t depth = 0;
  std::size_t limit = 0;
};

Engine::Engine(EngineOptions options) : Engine(std::make_shared<MemoTable>(), options) {}

Engine::Engine(std::shared_ptr<MemoTable> memo, EngineOptions options)
    : memo_(std::move(memo)), options_(options) {
  if (!memo_) memo_ = std::make_shared<MemoTable>();
}

RatFunc Engine::evaluate(const State& state) const {
  Frame frame;
  if (options_.depth_limit) {
    frame.limit = *options_.depth_limit;
  } else {
    const std::size_t n = state.v().size() + state.w().size() + 1;
    frame.limit = n * n * n;
  }
  return eval(state, frame);
}

RatFunc Engine::eval(const State& state, Frame& frame) const {
  MemoKey key = MemoKey::of(state);
  if (options_.memoize) {
    if (auto hit = memo_->get(key)) return *hit;
  }
  if (frame.depth >= frame.limit) {
    throw DepthExceeded("recursion depth " + std::to_string(frame.depth) + " reached at " +
                        state.to_string());
  }
  if (!frame.on_stack.insert(key).second) {
    throw CycleDetected("state recurs on the evaluation stack: " + state.to_string());
  }
  ++frame.depth;
  expansions_.fetch_add(1, std::memory_order_relaxed);

  const Expansion step = expand(state);
  RatFunc value = step.rule == RuleId::Base ? RatFunc(1) : RatFunc();
  for (const auto& child : step.children) value += child.coefficient * eval(child.next, frame);

  --frame.depth;
  frame.on_stack.erase(key);
  if (options_.memoize) memo_->insert(key, value);
  return value;
}

RatFunc p_column(const State& state, const Engine& engine) {
  if (state.theory() != Theory::Column) throw InvalidInput("p_column expects a column-theory state");
  return engine.evaluate(state);
}

RatFunc p_row(const State& state, const Engine& engine) {
  if (state.theory() != Theory::Row) throw InvalidInput("p_row expects a row-theory state");
  return engine.evaluate(state);
}

DerivationNode explain(const State& state, std::size_t max_nodes) {
  std::size_t count = 0;
  std::function<DerivationNode(const State&, const RatFunc&)> build =
      [&](const State& s, const RatFunc& coeff) {
        if (++count > max_nodes) {
          throw DepthExceeded("derivation tree exceeds " + std::to_string(max_nodes) + " nodes");
        }
        Expansion step = expand(s);
        DerivationNode node{s, step.rule, coeff, {}};
        for (const auto& child : step.children) node.children.push_back(build(child.next, child.coefficient));
        return node;
      };
  return build(state, RatFunc(1));
}

std::string render_derivation(const DerivationNode& root) {
  std::string out;
  std::function<void(const DerivationNode&, std::size_t)> walk = [&](const DerivationNode& n,
                                                                     std::size_t indent) {
    out += std::string(2 * indent, ' ');
    out += std::string(to_string(n.rule)) + " \"" + n.state.v().str() + "\" \"" + n.state.w().str() +
           "\" [" + n.state.sigma().to_string() + "]";
    if (indent > 0) out += "  * " + to_text(n.coefficient);
    out += '\n';
    for (const auto& c : n.children) walk(c, indent + 1);
  };
  walk(root, 0);
  return out;
}

}  // namespace torushom
