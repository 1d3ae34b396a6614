#pragma once

#include "fuzzyfo/decision.hpp"
#include "fuzzyfo/syntax.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fuzzyfo {

struct ReductionTrace {
  Formula input = Formula::top();
  Formula negation = Formula::top();
  Formula herbrand_form = Formula::top();  // purely existential, equi-valid with the negation
  Formula purely_universal_form = Formula::top();
  Formula lattice_matrix_form = Formula::top();
  Formula star_output = Formula::top();
  std::vector<std::pair<std::string, std::size_t>> fresh_symbols;  // name, arity
  Vocabulary vocabulary;                                           // input plus fresh symbols
};

struct PurelyUniversal {
  Formula formula = Formula::top();
  Vocabulary vocabulary;
  std::vector<std::pair<std::string, std::size_t>> fresh;
};

// Skolemizes the classical negation normal form of a sentence into a purely
// universal sentence that is a contradiction iff the input is. Throws
// VocabularyViolation when `vocab` is relational and a Skolem function is
// needed, FragmentError for a non-sentence or one that normalizes to a truth
// constant.
PurelyUniversal to_purely_universal(const Formula& sentence, const Vocabulary& vocab);
PurelyUniversal to_purely_universal(const Formula& sentence);

// Same prefix, matrix in classical negation normal form.
Formula matrix_to_lattice_literals(const Formula& purely_universal);

ReductionTrace hardness_reduce(const Formula& sentence, const Vocabulary& vocab);
ReductionTrace hardness_reduce(const Formula& sentence);

struct ReductionBounds {
  std::size_t max_depth = 2;   // Herbrand depth for the certificate
  std::size_t max_domain = 2;  // structure searches over K
  std::uint64_t budget = search_budget();
  unsigned jobs = 1;
};

struct ReductionReport {
  enum class Status { Contradiction, NonContradiction, Undetermined };

  Status status = Status::Undetermined;
  Verdict certificate;              // on the purely universal form
  std::optional<Verdict> countermodel;  // B2 search when the certificate is inconclusive
  std::optional<Verdict> taut0;     // bounded search on star_output over K
  std::optional<Verdict> lemma;     // star of the witness conjunction over K, all valuations
  std::vector<Witness> lifted;      // per chain of K: the B2 model read into the chain
  std::vector<Verdict> sat_pos;     // per chain of K
  std::vector<std::string> notes;
};

std::string to_string(ReductionReport::Status status);

/// Certifies the input independently, then checks the side of the
/// three-way correspondence that applies. Throws ConsistencyFailure when a
/// certificate and a search disagree.
ReductionReport verify_reduction_instance(const ReductionTrace& trace, const ChainClass& k,
                                          const ReductionBounds& bounds);

}  // namespace fuzzyfo
