#include "cfx/reach.hpp"

#include <deque>

namespace cfx {

Regex plus_set(const RegexSet& rs) {
  if (rs.empty()) return Regex::phi();
  auto it = rs.rbegin();
  Regex sum = *it;
  for (++it; it != rs.rend(); ++it) sum = Regex::alt(*it, sum);
  return simp(sum);
}

ReachTable::ReachTable(Cfe root, Alphabet sigma)
    : root_(std::move(root)), sigma_(sigma.merged(symbols_of(root_))) {
  binders_ = mu_of_binder(root_);
  for (const auto& [_, m] : binders_) mus_.insert(m);
}

void ReachTable::ensure(const Regex& s) {
  if (universe_.count(s)) return;
  RegexSet fresh = descendants(s, sigma_);
  for (const Regex& d : fresh) {
    if (!universe_.insert(d).second) continue;
    for (const Cfe& m : mus_) mu_entries_.try_emplace({m, d});
  }
  solve();
}

// Round-robin Kleene iteration. Each pass evaluates every μ body against
// the entries of the previous pass, so one memo serves the whole pass.
void ReachTable::solve() {
  bool changed = true;
  while (changed) {
    changed = false;
    ++passes_;
    Memo memo;
    ReachAssignment next = mu_entries_;
    for (const Cfe& m : mus_) {
      for (const Regex& s : universe_) {
        const RegexSet& body = step(m.body(), s, memo);
        RegexSet& cur = next[{m, s}];
        std::size_t before = cur.size();
        cur.insert(body.begin(), body.end());
        changed |= cur.size() != before;
      }
    }
    mu_entries_ = std::move(next);
  }
  final_.clear();
}

const RegexSet& ReachTable::step(const Cfe& f, const Regex& s, Memo& memo) {
  ReachKey key{f, s};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  RegexSet out;
  switch (f.kind()) {
    case Cfe::Kind::Phi:
      break;
    case Cfe::Kind::Eps:
      out.insert(s);
      break;
    case Cfe::Kind::Sym:
      out.insert(simp(deriv(s, f.symbol())));
      break;
    case Cfe::Kind::Alt: {
      const RegexSet& l = step(f.left(), s, memo);
      const RegexSet& r = step(f.right(), s, memo);
      out.insert(l.begin(), l.end());
      out.insert(r.begin(), r.end());
      break;
    }
    case Cfe::Kind::Cat:
      for (const Regex& mid : RegexSet(step(f.left(), s, memo))) {
        const RegexSet& r = step(f.right(), mid, memo);
        out.insert(r.begin(), r.end());
      }
      break;
    case Cfe::Kind::Var:
      out = mu_entries_.at({binders_.at(f.name()), s});
      break;
    case Cfe::Kind::Mu:
      out = step(f.body(), s, memo);
      break;
  }
  return memo.insert_or_assign(std::move(key), std::move(out)).first->second;
}

RegexSet ReachTable::reach(const Cfe& f, const Regex& s) {
  Regex c = simp(s);
  ensure(c);
  return step(f, c, final_);
}

Regex ReachTable::plus(const Cfe& f, const Regex& s) { return plus_set(reach(f, s)); }

std::map<ReachKey, RegexSet> ReachTable::entries() {
  std::map<ReachKey, RegexSet> out;
  for (const Cfe& f : subterms(root_)) {
    for (const Regex& s : universe_) out.emplace(ReachKey{f, s}, step(f, s, final_));
  }
  return out;
}

ReachTable reach_table(const Cfe& e, const Regex& r, const Alphabet& sigma) {
  ReachTable table(e, sigma.merged(symbols_of(r)));
  table.reach(e, r);
  return table;
}

RegexSet reach(const Cfe& e, const Regex& r, const Alphabet& sigma) {
  return reach_table(e, r, sigma).reach(e, r);
}

bool contains(const Cfe& e, const Regex& r, const Alphabet& sigma) {
  for (const Regex& s : reach(e, r, sigma)) {
    if (!re_nullable(s)) return false;
  }
  return true;
}

namespace {

class JudgmentChecker {
 public:
  JudgmentChecker(const ReachAssignment& assignment, const Cfe& root)
      : assignment_(assignment), binders_(mu_of_binder(root)) {}

  // Reach(s, f) where every μ-subterm is answered by the assignment (rule
  // Hyp) and queued for its own Rec check.
  std::optional<RegexSet> derive(const Cfe& f, const Regex& s) {
    switch (f.kind()) {
      case Cfe::Kind::Phi:
        return RegexSet{};
      case Cfe::Kind::Eps:
        return RegexSet{s};
      case Cfe::Kind::Sym:
        return RegexSet{simp(deriv(s, f.symbol()))};
      case Cfe::Kind::Alt: {
        auto l = derive(f.left(), s);
        auto r = derive(f.right(), s);
        if (!l || !r) return std::nullopt;
        l->insert(r->begin(), r->end());
        return l;
      }
      case Cfe::Kind::Cat: {
        auto l = derive(f.left(), s);
        if (!l) return std::nullopt;
        RegexSet out;
        for (const Regex& mid : *l) {
          auto r = derive(f.right(), mid);
          if (!r) return std::nullopt;
          out.insert(r->begin(), r->end());
        }
        return out;
      }
      case Cfe::Kind::Var:
        return assumed(binders_.at(f.name()), s);
      case Cfe::Kind::Mu:
        return assumed(f, s);
    }
    return std::nullopt;
  }

  // Rule Rec for every queued key: the body must reproduce the assumption.
  bool validate(std::set<ReachKey>& visited) {
    while (!pending_.empty()) {
      ReachKey key = pending_.front();
      pending_.pop_front();
      visited.insert(key);
      auto body = derive(key.first.body(), key.second);
      if (!body || *body != assignment_.at(key)) return false;
    }
    return true;
  }

 private:
  std::optional<RegexSet> assumed(const Cfe& m, const Regex& s) {
    ReachKey key{m, s};
    auto it = assignment_.find(key);
    if (it == assignment_.end()) return std::nullopt;
    if (queued_.insert(key).second) pending_.push_back(key);
    return it->second;
  }

  const ReachAssignment& assignment_;
  std::map<std::string, Cfe> binders_;
  std::set<ReachKey> queued_;
  std::deque<ReachKey> pending_;
};

}  // namespace

std::optional<RegexSet> check_judgment(const ReachAssignment& assignment, const Cfe& e,
                                       const Regex& r, std::set<ReachKey>* visited) {
  JudgmentChecker checker(assignment, e);
  auto result = checker.derive(e, simp(r));
  std::set<ReachKey> seen;
  bool ok = result && checker.validate(seen);
  if (visited) *visited = std::move(seen);
  if (!ok) return std::nullopt;
  return result;
}

}  // namespace cfx
