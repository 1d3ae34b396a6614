#include "fuzzyfo/reduction.hpp"

#include "fuzzyfo/errors.hpp"

#include <algorithm>

namespace fuzzyfo {

std::string to_string(ReductionReport::Status status) {
  switch (status) {
    case ReductionReport::Status::Contradiction:
      return "contradiction";
    case ReductionReport::Status::NonContradiction:
      return "non-contradiction";
    case ReductionReport::Status::Undetermined:
      return "undetermined";
  }
  return "?";
}

PurelyUniversal to_purely_universal(const Formula& sentence, const Vocabulary& vocab) {
  if (!is_sentence(sentence)) throw FragmentError("expected a sentence: " + to_string(sentence));
  const Formula nnf = classical_nnf(sentence);
  if (nnf.is_truth_constant())
    throw FragmentError("sentence normalizes to the truth constant " + to_string(nnf) +
                        "; the reduction needs at least one literal");
  SkolemResult s = skolemize(nnf, vocab);
  if (!classify(s.formula).is_purely_universal)
    throw std::logic_error("skolemization left an existential quantifier");
  return {std::move(s.formula), std::move(s.vocabulary), std::move(s.fresh)};
}

PurelyUniversal to_purely_universal(const Formula& sentence) {
  return to_purely_universal(sentence, infer_vocabulary(sentence));
}

Formula matrix_to_lattice_literals(const Formula& purely_universal) {
  const auto form = split_universal(purely_universal);
  if (!form) throw FragmentError("expected a purely universal formula: " + to_string(purely_universal));
  return close_universally(form->variables, classical_nnf(form->matrix));
}

ReductionTrace hardness_reduce(const Formula& sentence, const Vocabulary& vocab) {
  ReductionTrace t;
  t.input = sentence;
  t.negation = Formula::neg(sentence);
  PurelyUniversal pu = to_purely_universal(sentence, vocab);
  t.purely_universal_form = pu.formula;
  t.herbrand_form = classical_nnf(Formula::neg(pu.formula));
  t.lattice_matrix_form = matrix_to_lattice_literals(pu.formula);
  t.star_output = star_translate(t.lattice_matrix_form);
  t.fresh_symbols = std::move(pu.fresh);
  t.vocabulary = std::move(pu.vocabulary);
  if (!is_sentence(t.star_output)) throw std::logic_error("star output is not a sentence");
  return t;
}

ReductionTrace hardness_reduce(const Formula& sentence) {
  return hardness_reduce(sentence, infer_vocabulary(sentence));
}

namespace {

Formula instantiate(const UniversalForm& form, const std::vector<Term>& tuple) {
  Formula out = form.matrix;
  for (std::size_t i = 0; i < form.variables.size(); ++i)
    out = substitute(out, form.variables[i], tuple[i]);
  return out;
}

void check_contradiction(const ReductionTrace& trace, const ChainClass& k,
                         const ReductionBounds& bounds, ReductionReport& r) {
  const SearchOptions opts{bounds.max_domain, bounds.budget, bounds.jobs};
  try {
    Verdict t = taut0_bounded(k, trace.star_output, opts);
    if (t.kind == Verdict::Kind::Refuted)
      throw ConsistencyFailure("certified contradiction, yet the star output takes value " +
                               std::to_string(t.witness->value) + " on " + t.witness->chain_label);
    r.taut0 = std::move(t);
  } catch (const BudgetExceeded& e) {
    r.notes.push_back(std::string("bounded structure search skipped: ") + e.what());
  }

  if (!r.certificate.herbrand) {
    r.notes.push_back("no instance witness within the instance cap; propositional check not run");
    return;
  }
  const auto form = split_universal(trace.lattice_matrix_form);
  std::vector<Formula> parts;
  for (const auto& tuple : r.certificate.herbrand->instances) parts.push_back(instantiate(*form, tuple));
  Formula conj = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) conj = Formula::meet(conj, parts[i]);

  if (atoms_of(conj).size() <= kTruthTableAtomCap) {
    if (!is_classical_contradiction_prop(conj))
      throw ConsistencyFailure("instance conjunction of the lattice form is not a contradiction");
  } else if (propositionally_satisfiable(conj)) {
    throw ConsistencyFailure("instance conjunction of the lattice form is satisfiable");
  }
  Verdict lemma = taut0_propositional(k, star_translate(conj), bounds.budget);
  if (lemma.kind != Verdict::Kind::Decided)
    throw ConsistencyFailure("star of a contradictory conjunction takes value " +
                             std::to_string(lemma.witness->value) + " on " + lemma.witness->chain_label);
  r.lemma = std::move(lemma);

  if (r.taut0 && r.taut0->kind == Verdict::Kind::Exhausted) {
    r.taut0->kind = Verdict::Kind::Decided;
    r.taut0->decision = true;
    r.taut0->reason =
        "no refutation within the bounds; the star of a contradictory instance conjunction is 0 "
        "under every valuation into every listed chain (propositional lemma), and the sentence "
        "is bounded above by that conjunction in every structure";
  }
}

void check_non_contradiction(const ReductionTrace& trace, const ChainClass& k,
                             const ReductionBounds& bounds, const Structure& model,
                             ReductionReport& r) {
  const FiniteChain b2 = make_lukasiewicz_chain(2);
  if (eval(b2, model, trace.star_output) != b2.top())
    throw ConsistencyFailure("classical model of the purely universal form does not give the star "
                             "output the value 1");
  for (std::size_t i = 0; i < k.chains().size(); ++i) {
    const FiniteChain& c = k.chains()[i];
    Structure lifted = lift_boolean(model, c);
    const Rank v = eval(c, lifted, trace.star_output);
    if (v != c.top())
      throw ConsistencyFailure("lifted model takes value " + std::to_string(v) + " on " + c.label());
    r.lifted.push_back(Witness{i, c.label(), std::move(lifted), {}, v});

    const SearchOptions opts{std::max(bounds.max_domain, model.domain_size), bounds.budget, bounds.jobs};
    try {
      Verdict sp = sat_pos_bounded(ChainClass({c}), trace.star_output, opts);
      if (sp.kind != Verdict::Kind::MemberWitness && sp.kind != Verdict::Kind::Decided)
        throw ConsistencyFailure("no positive witness on " + c.label() +
                                 " although a lifted model exists within the bounds");
      r.sat_pos.push_back(std::move(sp));
    } catch (const BudgetExceeded& e) {
      r.notes.push_back("positive witness search on " + c.label() + " skipped: " + e.what());
    }
  }
}

}  // namespace

ReductionReport verify_reduction_instance(const ReductionTrace& trace, const ChainClass& k,
                                          const ReductionBounds& bounds) {
  ReductionReport r;
  r.certificate = purely_universal_contradiction(trace.purely_universal_form, bounds.max_depth);
  const bool decided = r.certificate.kind == Verdict::Kind::Decided;

  if (decided && r.certificate.decision) {
    r.status = ReductionReport::Status::Contradiction;
    check_contradiction(trace, k, bounds, r);
    return r;
  }

  std::optional<Structure> model;
  if (decided) {
    model = r.certificate.witness->structure;
  } else {
    const FiniteChain b2 = make_lukasiewicz_chain(2).with_label("B2");
    try {
      r.countermodel = sat1_bounded(ChainClass({b2}), trace.purely_universal_form,
                                    SearchOptions{bounds.max_domain, bounds.budget, bounds.jobs});
      if (r.countermodel->kind == Verdict::Kind::MemberWitness) model = r.countermodel->witness->structure;
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(std::string("classical model search skipped: ") + e.what());
    }
  }
  if (!model) {
    r.notes.push_back("neither a contradiction witness nor a classical model was found within the bounds");
    return r;
  }
  r.status = ReductionReport::Status::NonContradiction;
  check_non_contradiction(trace, k, bounds, *model, r);
  return r;
}

}  // namespace fuzzyfo
