#pragma once

#include "fuzzyfo/budget.hpp"
#include "fuzzyfo/chain.hpp"
#include "fuzzyfo/semantics.hpp"
#include "fuzzyfo/syntax.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace fuzzyfo {

// exists x. (P(x) <-> ~P(x)) & forall x_1. exists y. (P(x_1) <-> (P(y) & P(y)))
Formula phi_sentence();

/// The attained values of P in a structure over a Łukasiewicz chain.
class ValueSet {
 public:
  // Throws UnsupportedChain for a non-Łukasiewicz chain and InvalidSize for
  // an empty set or a value outside the carrier.
  ValueSet(FiniteChain chain, std::set<Rank> values);

  const FiniteChain& chain() const { return chain_; }
  const std::set<Rank>& values() const { return values_; }

 private:
  FiniteChain chain_;
  std::set<Rank> values_;
};

// Value of the separating sentence in any structure whose P-values are
// exactly vs.values(), computed from the set alone.
Rank eval_phi_on_valueset(const ValueSet& vs);

inline constexpr std::size_t kPhiChainCap = 12;

struct PhiChainRow {
  std::size_t k = 0;
  std::uint64_t sets_scanned = 0;
  Rank max_value = 0;
  std::set<Rank> argmax;  // first set attaining max_value, in bitmask order
  bool all_below_top = true;
  bool negation_positive = true;  // the negated sentence is above 0 on every set
};

struct PhiRefutation {
  std::vector<PhiChainRow> rows;  // k = 2..max_k
  bool holds() const;
};

// Scans every nonempty value set over Łₖ for k = 2..max_k. Throws
// InvalidSize when max_k exceeds `cap` or is below 2.
PhiRefutation phi_fin_refutation(std::size_t max_k, std::size_t cap = kPhiChainCap);

struct ValueSetConsistency {
  std::size_t k = 0;
  std::size_t domain_size = 0;
  std::uint64_t structures = 0;
  std::optional<Structure> mismatch;  // first structure where the two values differ
  bool pass() const { return !mismatch; }
};

// Compares direct evaluation with eval_phi_on_valueset on every structure
// over Łₖ with the given domain size.
ValueSetConsistency consistency_check_valuesets(std::size_t k, std::size_t domain_size,
                                                std::uint64_t budget = search_budget());

// P(j) = 1 - 2^{-(j+1)} for j = 0..n-1.
std::vector<StdRational> witness_family(std::size_t n);

struct TruncatedWitness {
  StdStructure structure;
  StdRational value;
};

// Domain 0..n-1 carrying witness_family(n), evaluated over the standard chain.
TruncatedWitness phi_truncated_witness(std::size_t n);

}  // namespace fuzzyfo
