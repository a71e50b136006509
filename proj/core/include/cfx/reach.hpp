#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "cfx/cfe.hpp"
#include "cfx/regex.hpp"

namespace cfx {

/// ⊕R: canonical sum of a set of regexes, φ for the empty set.
Regex plus_set(const RegexSet& rs);

/// A (μ-subterm, canonical regex) pair.
using ReachKey = std::pair<Cfe, Regex>;
/// Assignment of reachability sets to μ-subterms, as read by the proof system.
using ReachAssignment = std::map<ReachKey, RegexSet>;

/// Least fixpoint of the reachability equations of one root expression.
///
/// Queries may name any subterm of the root (open subterms read the entry
/// of the μ that binds their placeholders) and any regex. A regex outside the
/// current universe extends it with its descendants; entries computed so far
/// stay valid because the equations of a pair only mention descendants of
/// its regex.
class ReachTable {
 public:
  ReachTable(Cfe root, Alphabet sigma);

  const Cfe& root() const { return root_; }
  const Alphabet& sigma() const { return sigma_; }
  /// Canonical regexes the table is closed over.
  const RegexSet& universe() const { return universe_; }

  /// reach(f, s) for a subterm f of the root.
  RegexSet reach(const Cfe& f, const Regex& s);
  /// ⊕reach(f, s).
  Regex plus(const Cfe& f, const Regex& s);

  /// The μ entries of the fixpoint over the current universe.
  const ReachAssignment& mu_entries() const { return mu_entries_; }
  /// Entries for every subterm of the root and every regex of the universe.
  std::map<ReachKey, RegexSet> entries();

  /// Binder name → μ-subterm.
  const std::map<std::string, Cfe>& binders() const { return binders_; }
  /// Number of fixpoint passes run so far.
  std::size_t passes() const { return passes_; }

 private:
  struct KeyHash {
    std::size_t operator()(const ReachKey& k) const {
      return k.first.hash() * 1000003u ^ k.second.hash();
    }
  };
  using Memo = std::unordered_map<ReachKey, RegexSet, KeyHash>;

  void ensure(const Regex& s);
  void solve();
  const RegexSet& step(const Cfe& f, const Regex& s, Memo& memo);

  Cfe root_;
  Alphabet sigma_;
  std::map<std::string, Cfe> binders_;
  std::set<Cfe> mus_;
  RegexSet universe_;
  ReachAssignment mu_entries_;
  Memo final_;
  std::size_t passes_ = 0;
};

/// Builds the table for e and the descendants of r. Σ defaults to the
/// symbols of e and r; a given Σ is extended by them.
ReachTable reach_table(const Cfe& e, const Regex& r, const Alphabet& sigma = {});

RegexSet reach(const Cfe& e, const Regex& r, const Alphabet& sigma = {});

/// e ≤ r: every element of reach(e, r) is nullable.
bool contains(const Cfe& e, const Regex& r, const Alphabet& sigma = {});

/// Checks `assignment` against the coinductive reachability proof system.
///
/// Every μ-key met while deriving Reach(r, e) must be assigned, and the set
/// derived for its body, reading μ-subterms and placeholders from the
/// assignment, must equal the assigned set. Returns the set derived for e,
/// or nothing when some key is missing or fails its check. `visited`, when
/// given, receives every μ-key that was checked.
std::optional<RegexSet> check_judgment(const ReachAssignment& assignment, const Cfe& e,
                                       const Regex& r, std::set<ReachKey>* visited = nullptr);

}  // namespace cfx
