#pragma once

#include "fuzzyfo/budget.hpp"
#include "fuzzyfo/chain.hpp"
#include "fuzzyfo/semantics.hpp"
#include "fuzzyfo/syntax.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuzzyfo {

/// A finite, explicitly listed class of chains. An infinite class is
/// approximated by the members listed here.
class ChainClass {
 public:
  // Throws InvalidSize when empty.
  explicit ChainClass(std::vector<FiniteChain> chains);
  const std::vector<FiniteChain>& chains() const { return chains_; }
  std::string describe() const;

 private:
  std::vector<FiniteChain> chains_;
};

struct SearchOptions {
  std::size_t max_domain = 2;
  std::uint64_t budget = search_budget();
  // Worker threads for structure searches. The result never depends on it.
  unsigned jobs = 1;
};

// A structure (or, for propositional procedures, an atom valuation) together
// with the value the sentence takes there.
struct Witness {
  std::size_t chain_index = 0;
  std::string chain_label;
  std::optional<Structure> structure;
  PropositionalValuation<Rank> valuation;
  Rank value = 0;
};

struct HerbrandWitness {
  std::size_t depth = 0;
  std::vector<std::vector<Term>> instances;  // one tuple of closed terms per matrix copy
  Formula conjunction = Formula::top();  // meet of the instantiated matrices
};

struct Verdict {
  enum class Kind { MemberWitness, Refuted, Exhausted, Decided };

  Kind kind = Kind::Exhausted;
  std::string procedure;
  std::string bounds;  // exactly what was searched
  std::optional<Witness> witness;
  std::optional<HerbrandWitness> herbrand;
  bool decision = false;  // meaningful for Decided
  std::string reason;
  std::uint64_t examined = 0;  // structures or valuations evaluated
};

std::string to_string(Verdict::Kind kind);

// Bounded searches over every chain in K (in listed order) and every structure
// with domain size 1..max_domain (in StructureSpace order). The first hit in
// that order is returned. Sentences without atoms are decided structurally.
Verdict taut0_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts);
Verdict sat_pos_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts);
Verdict taut_lt1_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts);
Verdict sat1_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts);

// Exact propositional-level decisions: every chain of K and every valuation
// of the atoms of a quantifier-free formula. Decided(true) when no valuation
// gives a nonzero value; otherwise Refuted with the first such valuation.
Verdict taut0_propositional(const ChainClass& k, const Formula& qf, std::uint64_t budget);

inline constexpr std::size_t kTruthTableAtomCap = 24;

// Truth table over the distinct closed atoms (at most `atom_cap`).
bool is_classical_contradiction_prop(const Formula& qf, std::size_t atom_cap = kTruthTableAtomCap);

// Classical satisfiability of a quantifier-free formula by backtracking with
// three-valued pruning (no atom cap). On success `model` receives a satisfying
// valuation (atoms the search never fixed are 1).
bool propositionally_satisfiable(const Formula& qf, PropositionalValuation<Rank>* model = nullptr);

struct ExistsForallPrefix {
  std::vector<std::string> existentials;
  std::vector<std::string> universals;
  Formula matrix = Formula::top();
};

// Prenex ∃*∀* form of a relational sentence after classical NNF, or
// FragmentError when some existential lies under a universal.
ExistsForallPrefix exists_forall_prefix(const Formula& sentence);

// Finite-model bound of the relational ∃*∀* fragment without equality.
std::size_t bsr_domain_bound(const Formula& sentence);

/// Classical satisfiability of a relational ∃*∀* sentence, decided by
/// exhaustive search at the single domain size max(1, #∃ + #constants).
/// Decided(true) carries a B₂ witness structure.
Verdict bsr_decide(const Formula& sentence);

inline constexpr std::size_t kHerbrandInstanceCap = 4096;

/// Searches for a propositionally contradictory conjunction of matrix
/// instances over the Herbrand universe, depth 0..max_depth. A found witness
/// is reduced to an irredundant set of instances. Exhausted only means "not
/// found within the depth".
Verdict dual_herbrand_search(const Formula& purely_universal, std::size_t max_depth,
                             std::size_t instance_cap = kHerbrandInstanceCap);

/// Relational input: exact decision through bsr_decide. Otherwise a
/// semi-decision via dual_herbrand_search.
Verdict purely_universal_contradiction(const Formula& purely_universal, std::size_t max_depth);

}  // namespace fuzzyfo
