#include "posslog/c1.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "posslog/errors.hpp"

namespace posslog {

namespace {
constexpr int kUnset = -1;
}

struct EvaluationSet::Impl {
  std::vector<Formula> members;  // sorted by (size, render)
  std::unordered_map<Formula, std::size_t, FormulaHash> index;

  // Per-member structure (indices into members; -1 where absent).
  std::vector<Kind> kind;
  std::vector<int> lhs;   // And/Or/Implies left, Not child
  std::vector<int> rhs;   // And/Or/Implies right
  std::vector<int> neg;   // index of !member, if a member

  // v(!!f) tied to v(f): pairs (double-negation member, f).
  struct DoubleNeg {
    int dneg;
    int inner;
  };
  std::vector<DoubleNeg> dneg_pairs;

  // Well-behavedness instances: e = !(f & !f) a member. v(e)=1 forbids
  // v(f)=v(!f)=1.
  struct Circ {
    int circ;      // e
    int base;      // f
    int neg_base;  // !f
  };
  std::vector<Circ> circ_instances;

  // Propagation of well-behavedness over binary connectives, in the composed
  // member-only form: for every binary member b = l # r with !b a member,
  //   min(v(l), v(!l)) = 0 and min(v(r), v(!r)) = 0  =>  min(v(b), v(!b)) = 0.
  // A zero minimum is exactly what pins v(!(f & !f)) to 1, so this is the
  // join condition with the expansions eliminated; it fires even when the
  // expansions themselves are not members.
  struct CircJoin {
    int lhs;
    int neg_lhs;
    int rhs;
    int neg_rhs;
    int bin;
    int neg_bin;
  };
  std::vector<CircJoin> circ_joins;

  // Occurrence lists: constraints to re-examine when a member is assigned.
  std::vector<std::vector<int>> binary_parents;  // member -> binary members using it
  std::vector<std::vector<int>> dneg_occ;        // member -> indices into dneg_pairs
  std::vector<std::vector<int>> circ_occ;        // member -> indices into circ_instances
  std::vector<std::vector<int>> join_occ;        // member -> indices into circ_joins

  std::vector<std::size_t> decision_order;  // atoms first, then negations
};

EvaluationSet EvaluationSet::build(std::span<const Formula> inputs, const C1Options& opts) {
  auto impl = std::make_shared<Impl>();

  // Subformula closure.
  std::unordered_set<Formula, FormulaHash> closure;
  std::vector<Formula> stack(inputs.begin(), inputs.end());
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!closure.insert(f).second) continue;
    switch (f.kind()) {
      case Kind::Atom:
        break;
      case Kind::Not:
        stack.push_back(f.child());
        break;
      default:
        stack.push_back(f.left());
        stack.push_back(f.right());
        break;
    }
  }
  // One negation layer over the closure.
  std::unordered_set<Formula, FormulaHash> all(closure);
  for (Formula f : closure) all.insert(Formula::negation(f));

  if (all.size() > opts.max_members)
    throw ResourceLimitError("evaluation set bound exceeded: " + std::to_string(all.size()) +
                             " > " + std::to_string(opts.max_members) + " members");

  impl->members.assign(all.begin(), all.end());
  std::sort(impl->members.begin(), impl->members.end(), FormulaLess{});
  const std::size_t n = impl->members.size();
  for (std::size_t i = 0; i < n; ++i) impl->index[impl->members[i]] = i;

  auto lookup = [&](Formula f) -> int {
    auto it = impl->index.find(f);
    return it == impl->index.end() ? -1 : static_cast<int>(it->second);
  };

  impl->kind.resize(n);
  impl->lhs.assign(n, -1);
  impl->rhs.assign(n, -1);
  impl->neg.assign(n, -1);
  impl->binary_parents.resize(n);
  impl->dneg_occ.resize(n);
  impl->circ_occ.resize(n);
  impl->join_occ.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    Formula f = impl->members[i];
    impl->kind[i] = f.kind();
    impl->neg[i] = lookup(Formula::negation(f));
    switch (f.kind()) {
      case Kind::Atom:
        break;
      case Kind::Not: {
        impl->lhs[i] = lookup(f.child());
        Formula inner = f.child();
        if (inner.kind() == Kind::Not) {
          int base = lookup(inner.child());
          if (base >= 0) impl->dneg_pairs.push_back({static_cast<int>(i), base});
        }
        break;
      }
      default: {
        impl->lhs[i] = lookup(f.left());
        impl->rhs[i] = lookup(f.right());
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (impl->kind[i] != Kind::Atom && impl->kind[i] != Kind::Not) {
      impl->binary_parents[impl->lhs[i]].push_back(static_cast<int>(i));
      impl->binary_parents[impl->rhs[i]].push_back(static_cast<int>(i));
    }
  }

  // Well-behavedness expansions present among the members.
  std::unordered_map<Formula, int, FormulaHash> circ_of;  // base -> circ index
  for (std::size_t i = 0; i < n; ++i) {
    Formula f = impl->members[i];
    int e = lookup(expand_circ(f));
    if (e >= 0) {
      int neg_f = lookup(Formula::negation(f));
      impl->circ_instances.push_back({e, static_cast<int>(i), neg_f});
      circ_of[f] = e;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Formula f = impl->members[i];
    if (f.kind() != Kind::And && f.kind() != Kind::Or && f.kind() != Kind::Implies) continue;
    const int nb = lookup(Formula::negation(f));
    if (nb < 0) continue;
    const int l = lookup(f.left());
    const int r = lookup(f.right());
    const int nl = lookup(Formula::negation(f.left()));
    const int nr = lookup(Formula::negation(f.right()));
    if (nl < 0 || nr < 0) continue;
    impl->circ_joins.push_back({l, nl, r, nr, static_cast<int>(i), nb});
  }

  for (std::size_t k = 0; k < impl->dneg_pairs.size(); ++k) {
    impl->dneg_occ[impl->dneg_pairs[k].dneg].push_back(static_cast<int>(k));
    impl->dneg_occ[impl->dneg_pairs[k].inner].push_back(static_cast<int>(k));
  }
  for (std::size_t k = 0; k < impl->circ_instances.size(); ++k) {
    const auto& c = impl->circ_instances[k];
    impl->circ_occ[c.circ].push_back(static_cast<int>(k));
    impl->circ_occ[c.base].push_back(static_cast<int>(k));
    impl->circ_occ[c.neg_base].push_back(static_cast<int>(k));
  }
  for (std::size_t k = 0; k < impl->circ_joins.size(); ++k) {
    const auto& j = impl->circ_joins[k];
    for (int member : {j.lhs, j.neg_lhs, j.rhs, j.neg_rhs, j.bin, j.neg_bin})
      impl->join_occ[member].push_back(static_cast<int>(k));
  }

  // Decision order: atoms (already first in member order), then negations.
  // Binary members are functionally determined and never decided.
  for (std::size_t i = 0; i < n; ++i)
    if (impl->kind[i] == Kind::Atom) impl->decision_order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (impl->kind[i] == Kind::Not) impl->decision_order.push_back(i);

  return EvaluationSet(std::move(impl));
}

const std::vector<Formula>& EvaluationSet::members() const { return impl_->members; }

std::optional<std::size_t> EvaluationSet::index_of(Formula f) const {
  auto it = impl_->index.find(f);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t EvaluationSet::size() const { return impl_->members.size(); }

Bivaluation::Bivaluation(EvaluationSet es, std::vector<std::uint8_t> values)
    : es_(std::move(es)), values_(std::move(values)) {}

int Bivaluation::value(Formula f) const {
  auto idx = es_.index_of(f);
  if (!idx) throw MissingEntryError("formula '" + render(f) + "' not in evaluation set");
  return values_[*idx];
}

std::string Bivaluation::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < es_.size(); ++i) {
    out += render(es_.members()[i]);
    out += " = ";
    out += values_[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

// Constraint propagation and backtracking search over one evaluation set.
class Solver {
 public:
  Solver(const EvaluationSet& es, const C1Options& opts)
      : es_(es), t_(es.impl()), opts_(opts), values_(t_.members.size(), kUnset) {}

  bool require(std::size_t index, int value) { return assign(index, value) && propagate(); }

  // Runs the search; calls sink for every total constraint-satisfying
  // assignment. Returns false if sink ever returned false (stop request).
  template <typename Sink>
  bool search(Sink&& sink) {
    if (!propagate()) return true;
    return dfs(0, sink);
  }

 private:
  bool assign(std::size_t index, int value) {
    if (values_[index] != kUnset) return values_[index] == value;
    values_[index] = value;
    trail_.push_back(index);
    queue_.push_back(index);
    return true;
  }

  bool examine_binary(int b) {
    const int l = t_.lhs[b], r = t_.rhs[b];
    const int vl = values_[l], vr = values_[r], vb = values_[b];
    int computed = kUnset;
    switch (t_.kind[b]) {
      case Kind::And:
        if (vl == 1 && vr == 1) computed = 1;
        else if (vl == 0 || vr == 0) computed = 0;
        break;
      case Kind::Or:
        if (vl == 1 || vr == 1) computed = 1;
        else if (vl == 0 && vr == 0) computed = 0;
        break;
      case Kind::Implies:
        if (vl == 0 || vr == 1) computed = 1;
        else if (vl == 1 && vr == 0) computed = 0;
        break;
      default:
        return true;
    }
    if (computed != kUnset && !assign(b, computed)) return false;
    if (vb == kUnset) return true;
    // Backward rules.
    switch (t_.kind[b]) {
      case Kind::And:
        if (vb == 1) return assign(l, 1) && assign(r, 1);
        if (vl == 1 && !assign(r, 0)) return false;
        if (vr == 1 && !assign(l, 0)) return false;
        return true;
      case Kind::Or:
        if (vb == 0) return assign(l, 0) && assign(r, 0);
        if (vl == 0 && !assign(r, 1)) return false;
        if (vr == 0 && !assign(l, 1)) return false;
        return true;
      case Kind::Implies:
        if (vb == 0) return assign(l, 1) && assign(r, 0);
        if (vl == 1 && !assign(r, 1)) return false;
        if (vr == 0 && !assign(l, 0)) return false;
        return true;
      default:
        return true;
    }
  }

  bool propagate() {
    while (!queue_.empty()) {
      const int i = static_cast<int>(queue_.back());
      queue_.pop_back();
      const int v = values_[i];

      // v(f)=0 forces v(!f)=1.
      if (v == 0 && t_.neg[i] >= 0 && !assign(t_.neg[i], 1)) return false;
      if (t_.kind[i] == Kind::Not && v == 0 && !assign(t_.lhs[i], 1)) return false;

      // Double negation.
      for (int k : t_.dneg_occ[i]) {
        const auto& p = t_.dneg_pairs[k];
        const int vd = values_[p.dneg], vi = values_[p.inner];
        if (opts_.weak_double_negation) {
          if (vd == 1 && !assign(p.inner, 1)) return false;
          if (vi == 0 && !assign(p.dneg, 0)) return false;
        } else {
          if (vd != kUnset && !assign(p.inner, vd)) return false;
          if (vi != kUnset && !assign(p.dneg, vi)) return false;
        }
      }

      // Truth-functional connectives, forward and backward.
      if (t_.kind[i] != Kind::Atom && t_.kind[i] != Kind::Not && !examine_binary(i)) return false;
      for (int b : t_.binary_parents[i])
        if (!examine_binary(b)) return false;

      // Well-behavedness: v(e)=1 forbids v(f)=v(!f)=1.
      for (int k : t_.circ_occ[i]) {
        const auto& c = t_.circ_instances[k];
        const int ve = values_[c.circ], vf = values_[c.base], vn = values_[c.neg_base];
        if (ve == 1 && vf == 1 && !assign(c.neg_base, 0)) return false;
        if (ve == 1 && vn == 1 && !assign(c.base, 0)) return false;
        if (vf == 1 && vn == 1 && !assign(c.circ, 0)) return false;
      }

      // well-behaved children make the compound well-behaved
      for (int k : t_.join_occ[i]) {
        const auto& j = t_.circ_joins[k];
        const bool left_min0 = values_[j.lhs] == 0 || values_[j.neg_lhs] == 0;
        const bool right_min0 = values_[j.rhs] == 0 || values_[j.neg_rhs] == 0;
        const bool bin_misbehaves = values_[j.bin] == 1 && values_[j.neg_bin] == 1;
        if (left_min0 && right_min0) {
          if (bin_misbehaves) return false;
          if (values_[j.bin] == 1 && !assign(j.neg_bin, 0)) return false;
          if (values_[j.neg_bin] == 1 && !assign(j.bin, 0)) return false;
        } else if (bin_misbehaves) {
          if (left_min0 && (!assign(j.rhs, 1) || !assign(j.neg_rhs, 1))) return false;
          if (right_min0 && (!assign(j.lhs, 1) || !assign(j.neg_lhs, 1))) return false;
        }
      }
    }
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
    queue_.clear();
  }

  template <typename Sink>
  bool dfs(std::size_t pos, Sink&& sink) {
    while (pos < t_.decision_order.size() && values_[t_.decision_order[pos]] != kUnset) ++pos;
    if (pos == t_.decision_order.size()) {
      // All decisions made; every binary member is functionally determined by
      // now, so the assignment is total.
      std::vector<std::uint8_t> out(values_.size());
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == kUnset) throw std::logic_error("partial assignment at a search leaf");
        out[i] = static_cast<std::uint8_t>(values_[i]);
      }
      return sink(std::move(out));
    }
    const std::size_t var = t_.decision_order[pos];
    // Atoms try 0 first; free negations try 1 first (favoring paraconsistent
    // assignments, which is where countermodels live).
    const int first = t_.kind[var] == Kind::Atom ? 0 : 1;
    for (int attempt = 0; attempt < 2; ++attempt) {
      const int v = attempt == 0 ? first : 1 - first;
      const std::size_t mark = trail_.size();
      if (assign(var, v) && propagate()) {
        if (!dfs(pos + 1, sink)) return false;
      }
      unwind(mark);
    }
    return true;
  }

  const EvaluationSet& es_;
  const EvaluationSet::Impl& t_;
  C1Options opts_;
  std::vector<int> values_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
};

}  // namespace

std::optional<Bivaluation> find_countermodel(std::span<const Formula> premises, Formula goal,
                                             const C1Options& opts) {
  std::vector<Formula> inputs(premises.begin(), premises.end());
  inputs.push_back(goal);
  EvaluationSet es = EvaluationSet::build(inputs, opts);

  Solver solver(es, opts);
  for (Formula p : premises)
    if (!solver.require(*es.index_of(p), 1)) return std::nullopt;
  if (!solver.require(*es.index_of(goal), 0)) return std::nullopt;

  std::optional<Bivaluation> found;
  solver.search([&](std::vector<std::uint8_t> values) {
    found = Bivaluation(es, std::move(values));
    return false;  // stop at the first (deterministic) solution
  });
  return found;
}

bool c1_entails(std::span<const Formula> premises, Formula goal, const C1Options& opts) {
  return !find_countermodel(premises, goal, opts).has_value();
}

bool c1_valid(Formula goal, const C1Options& opts) { return c1_entails({}, goal, opts); }

std::vector<Bivaluation> enumerate_bivaluations(const EvaluationSet& es, const C1Options& opts) {
  Solver solver(es, opts);
  std::vector<Bivaluation> out;
  solver.search([&](std::vector<std::uint8_t> values) {
    out.emplace_back(es, std::move(values));
    return true;
  });
  return out;
}

}  // namespace posslog
