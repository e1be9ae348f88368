#include "hopf/sweedler.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>

namespace hopf {

// ---------------------------------------------------------------- lexer

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t{Token::Kind::Punct, {}, line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Int;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
    } else if (std::string_view(":;,().*").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      advance();
    } else {
      throw SweedlerError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::Kind::End, {}, line, col});
  return out;
}

const std::set<std::string, std::less<>> kReserved = {"in",  "scalar", "out", "pair", "S",
                                                      "Sinv", "eps",  "one", "Alg", "Dual"};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  SweedlerExpr run() {
    expect_ident("in");
    while (!at_punct(";")) {
      const Token& name = next();
      if (name.kind != Token::Kind::Ident) fail(name, "expected an input name");
      if (kReserved.count(name.text)) fail(name, "reserved word used as input name");
      for (const auto& d : e_.inputs)
        if (d.name == name.text) fail(name, "input '" + name.text + "' declared twice");
      expect_punct(":");
      const Token& sort = next();
      InputDecl d{name.text, Sort::Alg, 0};
      if (sort.text == "Alg")
        d.sort = Sort::Alg;
      else if (sort.text == "Dual")
        d.sort = Sort::Dual;
      else
        fail(sort, "sort must be Alg or Dual");
      e_.inputs.push_back(d);
      decl_pos_.push_back(&name);
      if (at_punct(",")) next();
    }
    next();
    if (e_.inputs.empty()) fail(peek(), "no inputs declared");
    uses_.resize(e_.inputs.size());

    if (at_ident("scalar")) {
      next();
      while (!at_punct(";")) {
        const Token& kw = next();
        if (kw.text != "pair") fail(kw, "expected pair(...)");
        expect_punct("(");
        LegExpr a = product();
        expect_punct(",");
        LegExpr b = product();
        expect_punct(")");
        if (a.sort == b.sort)
          fail(kw, std::string("pairing of two ") + (a.sort == Sort::Alg ? "Alg" : "Dual") +
                       "-sorted expressions");
        if (a.sort == Sort::Alg) std::swap(a, b);
        e_.scalars.push_back({std::move(a), std::move(b)});
      }
      next();
    }
    if (at_ident("out")) {
      next();
      if (!at_punct(";") && peek().kind != Token::Kind::End) {
        e_.outputs.push_back(product());
        while (at_punct(",")) {
          next();
          e_.outputs.push_back(product());
        }
      }
      if (at_punct(";")) next();
    }
    if (peek().kind != Token::Kind::End) fail(peek(), "unexpected '" + peek().text + "'");
    check_indices();
    return std::move(e_);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw SweedlerError(t.line, t.column, what);
  }
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::Kind::End) ++pos_;
    return t;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }
  bool at_ident(std::string_view p) const {
    return peek().kind == Token::Kind::Ident && peek().text == p;
  }
  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
    next();
  }
  void expect_ident(std::string_view p) {
    if (!at_ident(p)) fail(peek(), "expected '" + std::string(p) + "'");
    next();
  }

  LegExpr product() {
    LegExpr e;
    const Token& first = peek();
    e.factors.push_back(term());
    while (at_punct("*")) {
      next();
      e.factors.push_back(term());
    }
    e.sort = e.factors.front().sort;
    for (const auto& f : e.factors)
      if (f.sort != e.sort) fail(first, "product mixes Alg and Dual factors");
    return e;
  }

  Factor term() {
    const Token& t = next();
    if (t.kind != Token::Kind::Ident) fail(t, "expected a leg expression");
    if (t.text == "S" || t.text == "Sinv") {
      expect_punct("(");
      Factor f = term();
      expect_punct(")");
      f.inverse_ops.push_back(t.text == "Sinv");
      return f;
    }
    Factor f;
    if (t.text == "eps") {
      f.kind = Factor::Kind::Eps;
      f.sort = Sort::Dual;
      return f;
    }
    if (t.text == "one") {
      f.kind = Factor::Kind::One;
      f.sort = Sort::Alg;
      return f;
    }
    auto it = std::find_if(e_.inputs.begin(), e_.inputs.end(),
                           [&](const InputDecl& d) { return d.name == t.text; });
    if (it == e_.inputs.end()) fail(t, "unknown identifier '" + t.text + "'");
    f.input = static_cast<int>(it - e_.inputs.begin());
    f.sort = it->sort;
    f.index = 1;
    if (at_punct(".")) {
      next();
      const Token& k = next();
      if (k.kind != Token::Kind::Int) fail(k, "expected a Sweedler index");
      if (k.text.size() > 3 || std::stoi(k.text) < 1) fail(k, "Sweedler index out of range");
      f.index = std::stoi(k.text);
    }
    uses_[f.input].push_back({f.index, &t});
    return f;
  }

  void check_indices() {
    for (std::size_t i = 0; i < e_.inputs.size(); ++i) {
      auto& u = uses_[i];
      if (u.empty()) fail(*decl_pos_[i], "input '" + e_.inputs[i].name + "' is never used");
      std::sort(u.begin(), u.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k].first == static_cast<int>(k + 1)) continue;
        if (k > 0 && u[k].first == u[k - 1].first)
          fail(*u[k].second, "Sweedler index " + std::to_string(u[k].first) + " of '" +
                                 e_.inputs[i].name + "' used twice");
        fail(*u[k].second, "Sweedler indices of '" + e_.inputs[i].name +
                               "' are not contiguous from 1");
      }
      e_.inputs[i].arity = static_cast<int>(u.size());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SweedlerExpr e_;
  std::vector<const Token*> decl_pos_;
  std::vector<std::vector<std::pair<int, const Token*>>> uses_;
};

std::string factor_text(const SweedlerExpr& e, const Factor& f) {
  std::string s;
  switch (f.kind) {
    case Factor::Kind::Eps: s = "eps"; break;
    case Factor::Kind::One: s = "one"; break;
    case Factor::Kind::Leg:
      s = e.inputs[f.input].name + "." + std::to_string(f.index);
      break;
  }
  for (bool inv : f.inverse_ops) s = (inv ? "Sinv(" : "S(") + s + ")";
  return s;
}

std::string leg_text(const SweedlerExpr& e, const LegExpr& l) {
  std::string s;
  for (std::size_t k = 0; k < l.factors.size(); ++k)
    s += (k ? "*" : "") + factor_text(e, l.factors[k]);
  return s;
}

}  // namespace

SweedlerExpr parse_sweedler(std::string_view source) { return Parser(source).run(); }

std::string SweedlerExpr::to_string() const {
  std::string s = "in";
  for (const auto& d : inputs) s += " " + d.name + (d.sort == Sort::Alg ? ":Alg" : ":Dual");
  s += ";";
  if (!scalars.empty()) {
    s += " scalar";
    for (const auto& p : scalars)
      s += " pair(" + leg_text(*this, p.dual) + ", " + leg_text(*this, p.alg) + ")";
    s += ";";
  }
  s += " out";
  for (std::size_t k = 0; k < outputs.size(); ++k)
    s += (k ? ", " : " ") + leg_text(*this, outputs[k]);
  return s;
}

std::string PlanStep::describe() const {
  switch (kind) {
    case Kind::Load: return "load input " + std::to_string(input);
    case Kind::Coproduct:
      return "coproduct input " + std::to_string(input) + " into " + std::to_string(leg) + " legs";
    case Kind::Antipode:
      return "antipode on input " + std::to_string(input) + " leg " + std::to_string(leg);
    case Kind::Pair: return "contract pairing " + std::to_string(index);
    case Kind::Fold: return "fold output leg " + std::to_string(index);
    case Kind::Assemble: return "assemble " + std::to_string(index) + " output legs";
  }
  return {};
}

// ---------------------------------------------------------------- compile

ContractionPlan ContractionPlan::compile(SweedlerExpr e, CoproductScheme scheme) {
  ContractionPlan p;
  p.scheme_ = scheme;
  const int ninputs = static_cast<int>(e.inputs.size());
  p.slot_base_.resize(ninputs);
  for (int i = 0; i < ninputs; ++i) {
    p.slot_base_[i] = p.slots_;
    p.slots_ += e.inputs[i].arity;
  }

  // Inputs of each pairing.
  std::vector<std::vector<int>> pair_inputs(e.scalars.size());
  for (std::size_t s = 0; s < e.scalars.size(); ++s) {
    for (const auto* side : {&e.scalars[s].dual, &e.scalars[s].alg})
      for (const auto& f : side->factors)
        if (f.kind == Factor::Kind::Leg) pair_inputs[s].push_back(f.input);
  }
  // Greedy schedule: load the input that completes the most pairings, then
  // the one leaving the fewest pairings half-open, so that paired legs are
  // contracted early and the state count stays small.
  std::vector<bool> loaded(ninputs, false);
  auto complete_with = [&](std::size_t s, int extra) {
    for (int in : pair_inputs[s])
      if (!loaded[in] && in != extra) return false;
    return true;
  };
  std::vector<bool> done(e.scalars.size(), false);
  p.pair_after_.assign(ninputs + 1, {});
  for (std::size_t s = 0; s < e.scalars.size(); ++s)
    if (pair_inputs[s].empty()) {
      done[s] = true;
      p.pair_after_[0].push_back(static_cast<int>(s));
    }
  // Output legs are folded into a single index as soon as their inputs are loaded.
  std::vector<std::vector<int>> out_inputs(e.outputs.size());
  for (std::size_t o = 0; o < e.outputs.size(); ++o)
    for (const auto& f : e.outputs[o].factors)
      if (f.kind == Factor::Kind::Leg) out_inputs[o].push_back(f.input);
  std::vector<bool> folded(e.outputs.size(), false);
  p.fold_after_.assign(ninputs + 1, {});
  auto fold_ready = [&](int k) {
    for (std::size_t o = 0; o < e.outputs.size(); ++o) {
      if (folded[o]) continue;
      bool ready = std::all_of(out_inputs[o].begin(), out_inputs[o].end(), [&](int in) { return loaded[in]; });
      if (!ready) continue;
      folded[o] = true;
      p.fold_after_[k].push_back(static_cast<int>(o));
    }
  };
  fold_ready(0);
  for (int k = 0; k < ninputs; ++k) {
    int best = -1, best_done = -1, best_open = 0;
    for (int i = 0; i < ninputs; ++i) {
      if (loaded[i]) continue;
      int completes = 0, open = 0;
      for (std::size_t s = 0; s < e.scalars.size(); ++s) {
        if (done[s]) continue;
        bool uses = std::find(pair_inputs[s].begin(), pair_inputs[s].end(), i) != pair_inputs[s].end();
        if (!uses) continue;
        if (complete_with(s, i)) ++completes;
        else ++open;
      }
      if (completes > best_done || (completes == best_done && open < best_open)) {
        best = i;
        best_done = completes;
        best_open = open;
      }
    }
    loaded[best] = true;
    p.order_.push_back(best);
    for (std::size_t s = 0; s < e.scalars.size(); ++s)
      if (!done[s] && complete_with(s, -1)) {
        done[s] = true;
        p.pair_after_[k + 1].push_back(static_cast<int>(s));
      }
    fold_ready(k + 1);
  }

  auto collect_ops = [&](int input, std::vector<std::pair<int, const Factor*>>& out) {
    auto visit = [&](const LegExpr& l) {
      for (const auto& f : l.factors)
        if (f.input == input && !f.inverse_ops.empty()) out.emplace_back(f.index, &f);
    };
    for (const auto& pr : e.scalars) {
      visit(pr.dual);
      visit(pr.alg);
    }
    for (const auto& o : e.outputs) visit(o);
  };

  for (int s : p.pair_after_[0]) p.steps_.push_back({PlanStep::Kind::Pair, -1, 0, s});
  for (int o : p.fold_after_[0]) p.steps_.push_back({PlanStep::Kind::Fold, -1, 0, o});
  for (int k = 0; k < ninputs; ++k) {
    const int i = p.order_[k];
    p.steps_.push_back({PlanStep::Kind::Load, i, 0, -1});
    if (e.inputs[i].arity > 1)
      p.steps_.push_back({PlanStep::Kind::Coproduct, i, e.inputs[i].arity, -1});
    std::vector<std::pair<int, const Factor*>> ops;
    collect_ops(i, ops);
    std::sort(ops.begin(), ops.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [leg, f] : ops)
      for (std::size_t k = 0; k < f->inverse_ops.size(); ++k)
        p.steps_.push_back({PlanStep::Kind::Antipode, i, leg, -1});
    for (int s : p.pair_after_[k + 1]) p.steps_.push_back({PlanStep::Kind::Pair, -1, 0, s});
    for (int o : p.fold_after_[k + 1]) p.steps_.push_back({PlanStep::Kind::Fold, -1, 0, o});
  }
  p.steps_.push_back(
      {PlanStep::Kind::Assemble, -1, 0, static_cast<int>(e.outputs.size())});
  p.expr_ = std::move(e);
  return p;
}

std::vector<Sort> ContractionPlan::input_sorts() const {
  std::vector<Sort> s;
  for (const auto& d : expr_.inputs) s.push_back(d.sort);
  return s;
}

std::vector<Sort> ContractionPlan::output_sorts() const {
  std::vector<Sort> s;
  for (const auto& o : expr_.outputs) s.push_back(o.sort);
  return s;
}

std::vector<std::size_t> ContractionPlan::output_shape(std::size_t n) const {
  if (expr_.outputs.empty()) return {1};
  return std::vector<std::size_t>(expr_.outputs.size(), n);
}

// ---------------------------------------------------------------- evaluate

namespace {

CoproductTerms left_comb_terms(const SortOps& ops, std::uint32_t i, int k) {
  std::map<std::vector<std::uint32_t>, Scalar> cur;
  cur.emplace(std::vector<std::uint32_t>{i}, Scalar::one(ops.field));
  for (int step = 1; step < k; ++step) {
    std::map<std::vector<std::uint32_t>, Scalar> next;
    for (const auto& [legs, c] : cur)
      for (const auto& t : ops.comult[legs.front()]) {
        std::vector<std::uint32_t> nl{t.left, t.right};
        nl.insert(nl.end(), legs.begin() + 1, legs.end());
        auto [it, fresh] = next.try_emplace(std::move(nl), c * t.coeff);
        if (!fresh) it->second += c * t.coeff;
      }
    cur.clear();
    for (auto& [legs, c] : next)
      if (!c.is_zero()) cur.emplace(legs, c);
  }
  return {cur.begin(), cur.end()};
}

struct State {
  std::vector<std::uint32_t> slots;
  Scalar coeff;
};

// Sorts states by slots and merges equal ones, dropping zero coefficients.
void merge_states(std::vector<State>& states) {
  std::sort(states.begin(), states.end(),
            [](const State& a, const State& b) { return a.slots < b.slots; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < states.size(); ++r) {
    if (w > 0 && states[w - 1].slots == states[r].slots) {
      states[w - 1].coeff += states[r].coeff;
      continue;
    }
    if (w != r) states[w] = std::move(states[r]);
    ++w;
  }
  states.resize(w);
  std::erase_if(states, [](const State& s) { return s.coeff.is_zero(); });
}

}  // namespace

SparseVec ContractionPlan::evaluate(const HopfData& h, std::span<const SparseVec> inputs) const {
  if (inputs.size() != expr_.inputs.size())
    throw std::invalid_argument("Sweedler plan: expected " + std::to_string(expr_.inputs.size()) +
                                " inputs, got " + std::to_string(inputs.size()));
  const std::size_t n = h.dim();
  const Field f = h.field();
  for (const auto& v : inputs)
    if (!v.empty() && v.entries.back().first >= n)
      throw std::invalid_argument("Sweedler plan: input vector longer than the algebra");

  auto leg_vec = [&](const State& st, const Factor& fac) -> SparseVec {
    switch (fac.kind) {
      case Factor::Kind::Eps: return h.ops(Sort::Dual).unit;
      case Factor::Kind::One: return h.ops(Sort::Alg).unit;
      case Factor::Kind::Leg: break;
    }
    return SparseVec::unit(st.slots[slot_base_[fac.input] + fac.index - 1], f);
  };
  auto product = [&](const State& st, const LegExpr& l) {
    const SortOps& ops = h.ops(l.sort);
    SparseVec v = leg_vec(st, l.factors.front());
    if (l.factors.front().kind != Factor::Kind::Leg)
      for (bool inv : l.factors.front().inverse_ops) v = ops.apply_antipode(v, inv);
    for (std::size_t k = 1; k < l.factors.size(); ++k) {
      SparseVec w = leg_vec(st, l.factors[k]);
      if (l.factors[k].kind != Factor::Kind::Leg)
        for (bool inv : l.factors[k].inverse_ops) w = ops.apply_antipode(w, inv);
      v = ops.multiply(v, w);
    }
    return v;
  };
  auto pair_all = [&](std::vector<State>& states, const std::vector<int>& which) {
    if (which.empty()) return;
    for (auto& st : states)
      for (int s : which) {
        const Pairing& pr = expr_.scalars[s];
        st.coeff *= dot(product(st, pr.dual), product(st, pr.alg), f);
        if (st.coeff.is_zero()) break;
      }
    // Paired legs are consumed; clearing them lets equal remainders merge.
    for (auto& st : states)
      for (int s : which)
        for (const auto* side : {&expr_.scalars[s].dual, &expr_.scalars[s].alg})
          for (const auto& fac : side->factors)
            if (fac.kind == Factor::Kind::Leg) st.slots[slot_base_[fac.input] + fac.index - 1] = 0;
    merge_states(states);
  };

  // Antipode chain per (input, leg); each leg occurs exactly once in the expression.
  std::vector<const std::vector<bool>*> chain(static_cast<std::size_t>(slots_), nullptr);
  auto note = [&](const LegExpr& l) {
    for (const auto& fac : l.factors)
      if (fac.kind == Factor::Kind::Leg && !fac.inverse_ops.empty())
        chain[slot_base_[fac.input] + fac.index - 1] = &fac.inverse_ops;
  };
  for (const auto& pr : expr_.scalars) {
    note(pr.dual);
    note(pr.alg);
  }
  for (const auto& o : expr_.outputs) note(o);

  // Folded output legs live in the slots after the input legs.
  const std::size_t m = expr_.outputs.size();
  auto fold_all = [&](std::vector<State>& states, const std::vector<int>& which) {
    if (which.empty()) return;
    for (int o : which) {
      std::vector<State> next;
      for (const auto& st : states) {
        SparseVec v = product(st, expr_.outputs[o]);
        for (const auto& [j, c] : v.entries) {
          State ns{st.slots, st.coeff * c};
          ns.slots[static_cast<std::size_t>(slots_) + o] = j;
          for (const auto& fac : expr_.outputs[o].factors)
            if (fac.kind == Factor::Kind::Leg) ns.slots[slot_base_[fac.input] + fac.index - 1] = 0;
          next.push_back(std::move(ns));
        }
      }
      states = std::move(next);
    }
    merge_states(states);
  };

  std::vector<State> states;
  states.push_back({std::vector<std::uint32_t>(static_cast<std::size_t>(slots_) + m, 0),
                    Scalar::one(f)});
  pair_all(states, pair_after_[0]);
  fold_all(states, fold_after_[0]);

  for (std::size_t k = 0; k < order_.size(); ++k) {
    const auto i = static_cast<std::size_t>(order_[k]);
    const InputDecl& d = expr_.inputs[i];
    const SortOps& ops = h.ops(d.sort);
    const int base = slot_base_[i];
    std::vector<State> next;
    for (const auto& st : states)
      for (const auto& [b, c] : inputs[i].entries) {
        CoproductTerms local;
        const CoproductTerms* terms;
        if (scheme_ == CoproductScheme::LeftComb && d.arity > 2) {
          local = left_comb_terms(ops, b, d.arity);
          terms = &local;
        } else {
          terms = &h.coproduct_terms(d.sort, b, d.arity);
        }
        Scalar cc = st.coeff * c;
        for (const auto& [legs, tc] : *terms) {
          State ns{st.slots, cc * tc};
          for (int k = 0; k < d.arity; ++k) ns.slots[base + k] = legs[k];
          next.push_back(std::move(ns));
        }
      }
    // Antipodes branch each state over the sparse image of the leg.
    for (int k = 0; k < d.arity; ++k) {
      const auto* ch = chain[base + k];
      if (!ch) continue;
      std::vector<State> branched;
      for (auto& st : next) {
        SparseVec v = SparseVec::unit(st.slots[base + k], f);
        for (bool inv : *ch) v = ops.apply_antipode(v, inv);
        for (const auto& [j, c] : v.entries) {
          State ns{st.slots, st.coeff * c};
          ns.slots[base + k] = j;
          branched.push_back(std::move(ns));
        }
      }
      next = std::move(branched);
    }
    merge_states(next);
    states = std::move(next);
    pair_all(states, pair_after_[k + 1]);
    fold_all(states, fold_after_[k + 1]);
    if (states.empty()) break;
  }

  // Output assembly: every output leg has been folded to an index.
  std::vector<SparseVec::Entry> out;
  out.reserve(states.size());
  for (auto& st : states) {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) {
      idx = idx * n + st.slots[static_cast<std::size_t>(slots_) + k];
      if (idx > 0xffffffffULL) throw std::overflow_error("Sweedler plan: output index overflow");
    }
    out.emplace_back(static_cast<std::uint32_t>(idx), std::move(st.coeff));
  }
  return SparseVec::from_terms(std::move(out));
}

SparseVec ContractionPlan::evaluate_basis(const HopfData& h,
                                          std::span<const std::uint32_t> basis) const {
  std::vector<SparseVec> in;
  in.reserve(basis.size());
  for (auto b : basis) in.push_back(SparseVec::unit(b, h.field()));
  return evaluate(h, in);
}

Tensor ContractionPlan::evaluate(const HopfData& h, std::span<const Tensor> inputs) const {
  std::vector<SparseVec> in;
  for (const auto& t : inputs) {
    if (t.legs() != 1 || t.size() != h.dim())
      throw std::invalid_argument("Sweedler plan: input tensor shape mismatch");
    in.push_back(t.to_sparse());
  }
  return Tensor::from_sparse(output_shape(h.dim()), evaluate(h, std::span<const SparseVec>(in)),
                             h.field());
}

std::vector<SparseVec> ContractionPlan::columns(const HopfData& h) const {
  const std::size_t n = h.dim(), k = expr_.inputs.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n;
  std::vector<SparseVec> cols(total);
  std::vector<std::uint32_t> idx(k, 0);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t r = c;
    for (std::size_t i = k; i-- > 0;) {
      idx[i] = static_cast<std::uint32_t>(r % n);
      r /= n;
    }
    cols[c] = evaluate_basis(h, idx);
  }
  return cols;
}

Matrix ContractionPlan::to_matrix(const HopfData& h) const {
  auto cols = columns(h);
  std::size_t rows = 1;
  for (auto d : output_shape(h.dim())) rows *= d;
  return Matrix::from_columns(cols, rows, h.field());
}

// ---------------------------------------------------------------- library

const ContractionPlan& formula(std::string_view name) {
  static std::mutex m;
  static std::map<std::string, ContractionPlan, std::less<>> cache;
  std::lock_guard lock(m);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& src : formula_library())
    if (name == src.name) {
      try {
        return cache.emplace(std::string(name), ContractionPlan::compile(src.text)).first->second;
      } catch (const SweedlerError& e) {
        throw SweedlerError(e.line(), e.column(),
                            "in formula '" + std::string(name) + "': " + e.what());
      }
    }
  throw std::out_of_range("unknown formula '" + std::string(name) + "'");
}

}  // namespace hopf
