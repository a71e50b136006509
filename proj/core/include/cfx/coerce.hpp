#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "cfx/cfe.hpp"
#include "cfx/coercion.hpp"
#include "cfx/reach.hpp"
#include "cfx/regex.hpp"
#include "cfx/tree.hpp"

namespace cfx {

/// (Σ)*, the star of the canonical sum of all symbols. Throws EmptyAlphabet.
Regex sigma_star(const Alphabet& sigma);

/// A regular coercion registered as a primitive.
///
/// Up: source ≤ target, maps trees of source to trees of target.
/// Down: maps trees of target to `Just` a tree of source, or `Nothing` when
/// the yield is not in L(source).
/// Both keep the yield and re-parse it with `re_parse`.
struct RegCoercion {
  std::string id;
  RegularSignature signature;
  Value::Native fn;

  Term term() const { return Term::prim(id); }
  void register_in(PrimRegistry& prims) const { prims.add(id, fn, signature); }
};

/// Deterministic primitive identifier, e.g. `up(x*,(x+y)*)`.
std::string prim_id(const RegularSignature& signature);
/// The native function of a signature.
Value::Native regular_fn(const RegularSignature& signature);
/// Registry holding the primitives of the given signatures.
PrimRegistry registry_from(const std::vector<RegularSignature>& signatures);

/// Upcast from r to s. Throws NotContained unless L(r) ⊆ L(s).
RegCoercion re_upcast(const Regex& r, const Regex& s);
/// Downcast from s to r.
RegCoercion re_downcast(const Regex& r, const Regex& s);

/// Coercion assumptions: (μ-subterm, canonical regex) → variable.
using CoercionEnv = std::map<ReachKey, std::string>;

/// A closed coercion term together with the primitives it refers to.
struct Coercion {
  Term term;
  std::shared_ptr<const PrimRegistry> prims;
};

enum class CastDirection { Up, Down };

/// Syntax-directed synthesis of reachability coercions for the subterms of
/// one root expression.
///
/// Upcasts of f at r have type (f × ⊕reach(f, r)) → r; downcasts have type
/// r → Maybe (f × ⊕reach(f, r)). Subterms may be open: a placeholder stands
/// for the unfolding of its μ. A recursive coercion is synthesized once per
/// (μ, r) and reused afterwards; a reuse outside the scope of the
/// assumptions it relies on re-binds them to their own cached coercions.
class Synthesizer {
 public:
  explicit Synthesizer(Cfe root, Alphabet sigma = {});

  Term upcast_derive(const CoercionEnv& env, const Cfe& f, const Regex& r);
  Term downcast_derive(const CoercionEnv& env, const Cfe& f, const Regex& r);

  /// Variable name of the assumption for (μ, r).
  static std::string variable_name(const Cfe& mu, const Regex& r);

  ReachTable& reach() { return reach_; }
  const Cfe& root() const { return root_; }
  std::shared_ptr<const PrimRegistry> prims() const { return prims_; }

  /// How often the Rec rule ran for each key.
  const std::map<ReachKey, std::size_t>& rec_count(CastDirection d) const {
    return d == CastDirection::Up ? up_.count : down_.count;
  }

 private:
  struct RecCache {
    std::map<ReachKey, Term> terms;
    std::map<std::string, ReachKey> keys;
    std::map<ReachKey, std::size_t> count;
  };

  Term derive(CastDirection d, CoercionEnv& env, const Cfe& f, const Regex& r);
  Term derive_up(CoercionEnv& env, const Cfe& f, const Regex& r);
  Term derive_down(CoercionEnv& env, const Cfe& f, const Regex& r);
  Term recursive(CastDirection d, CoercionEnv& env, const Cfe& mu, const Regex& r);
  Term instantiate(RecCache& cache, const ReachKey& key, const CoercionEnv& env);
  Term prim(const RegCoercion& b);

  Cfe root_;
  ReachTable reach_;
  std::map<std::string, Cfe> binders_;
  std::shared_ptr<PrimRegistry> prims_;
  RecCache up_;
  RecCache down_;
};

/// Upcast e → r: `λx. c' (x, mkEmpty(⊕reach(e, r)))`.
/// Throws NotContained, and EmptyLanguage when reach(e, r) is empty.
Coercion cfe_upcast(const Cfe& e, const Regex& r, const Alphabet& sigma = {});

/// Downcast r → Maybe (e × ⊕reach(e, r)), the derived term itself.
Coercion cfe_downcast(const Cfe& e, const Regex& r, const Alphabet& sigma = {});

/// Runs an upcast on a parse tree of e.
ParseTree run_upcast(const Coercion& c, const ParseTree& p,
                     std::optional<std::uint64_t> fuel = std::nullopt);
/// Runs a downcast on a regular parse tree; nothing stands for `Nothing`.
std::optional<std::pair<ParseTree, ParseTree>> run_downcast(
    const Coercion& c, const ParseTree& t, std::optional<std::uint64_t> fuel = std::nullopt);

/// Predictive parser of a guarded expression, derived from the downcast of
/// e against Σ*.
class PredictiveParser {
 public:
  /// Σ is extended by the symbols of e. Throws NotGuarded.
  PredictiveParser(const Cfe& e, const Alphabet& sigma = {});

  /// The parse tree of w, or nothing when w ∉ L(e). A successful downcast
  /// that leaves a nonempty residue counts as a failure.
  std::optional<ParseTree> parse(std::string_view w) const;
  /// The raw downcast result, residue included.
  std::optional<std::pair<ParseTree, ParseTree>> downcast(std::string_view w) const;

  const Coercion& coercion() const { return coercion_; }
  const Regex& source() const { return source_; }

 private:
  Cfe e_;
  Regex source_;
  Coercion coercion_;
};

}  // namespace cfx
