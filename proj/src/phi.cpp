#include "fuzzyfo/phi.hpp"

#include "fuzzyfo/errors.hpp"

#include <algorithm>

namespace fuzzyfo {

Formula phi_sentence() {
  auto p = [](const char* v) { return Formula::atom("P", {Term::variable(v)}); };
  const Formula first = Formula::exists("x", Formula::biimpl(p("x"), Formula::neg(p("x"))));
  const Formula second = Formula::forall(
      "x_1", Formula::exists("y", Formula::biimpl(p("x_1"), Formula::square(p("y")))));
  return Formula::strong_conj(first, second);
}

ValueSet::ValueSet(FiniteChain chain, std::set<Rank> values)
    : chain_(std::move(chain)), values_(std::move(values)) {
  if (!is_lukasiewicz(chain_))
    throw UnsupportedChain("value sets are defined for Lukasiewicz chains only, got " + chain_.label());
  if (values_.empty()) throw InvalidSize("a value set must be nonempty");
  if (*values_.rbegin() >= chain_.size()) throw InvalidSize("value outside the chain");
}

Rank eval_phi_on_valueset(const ValueSet& vs) {
  const FiniteChain& c = vs.chain();
  Rank first = c.bottom();
  for (Rank a : vs.values()) first = FiniteChain::join(first, c.biimpl(a, c.neg(a)));
  Rank second = c.top();
  for (Rank a : vs.values()) {
    Rank best = c.bottom();
    for (Rank b : vs.values()) best = FiniteChain::join(best, c.biimpl(a, c.square(b)));
    second = FiniteChain::meet(second, best);
  }
  return c.mult(first, second);
}

bool PhiRefutation::holds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const PhiChainRow& r) { return r.all_below_top && r.negation_positive; });
}

PhiRefutation phi_fin_refutation(std::size_t max_k, std::size_t cap) {
  if (max_k < 2) throw InvalidSize("chains have at least 2 elements");
  if (max_k > cap)
    throw InvalidSize("chain size " + std::to_string(max_k) + " exceeds the cap " +
                      std::to_string(cap) + " (2^k value sets per chain)");
  PhiRefutation out;
  for (std::size_t k = 2; k <= max_k; ++k) {
    const FiniteChain c = make_lukasiewicz_chain(k);
    PhiChainRow row;
    row.k = k;
    bool first = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::set<Rank> values;
      for (Rank r = 0; r < k; ++r)
        if (mask >> r & 1) values.insert(r);
      const Rank v = eval_phi_on_valueset(ValueSet(c, values));
      ++row.sets_scanned;
      if (v == c.top()) row.all_below_top = false;
      if (c.neg(v) == c.bottom()) row.negation_positive = false;
      if (first || v > row.max_value) {
        row.max_value = v;
        row.argmax = values;
        first = false;
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

ValueSetConsistency consistency_check_valuesets(std::size_t k, std::size_t domain_size,
                                                std::uint64_t budget) {
  const FiniteChain c = make_lukasiewicz_chain(k);
  const Formula phi = phi_sentence();
  Vocabulary vocab;
  vocab.declare_predicate("P", 1);
  const StructureSpace space(vocab, k, domain_size);
  require_within_budget("value-set consistency check", space.size(), budget);

  ValueSetConsistency out;
  out.k = k;
  out.domain_size = domain_size;
  space.for_each([&](const Structure& m) {
    ++out.structures;
    const auto& table = m.predicates.at("P").values;
    const std::set<Rank> values(table.begin(), table.end());
    if (eval(c, m, phi) != eval_phi_on_valueset(ValueSet(c, values))) {
      out.mismatch = m;
      return false;
    }
    return true;
  });
  return out;
}

std::vector<StdRational> witness_family(std::size_t n) {
  std::vector<StdRational> out;
  BigRational gap(1, 2);
  for (std::size_t j = 0; j < n; ++j) {
    out.emplace_back(BigRational(1) - gap);
    gap /= 2;
  }
  return out;
}

TruncatedWitness phi_truncated_witness(std::size_t n) {
  if (n == 0) throw InvalidSize("the witness needs a nonempty domain");
  StdStructure m;
  m.domain_size = n;
  m.predicates["P"] = {1, witness_family(n)};
  const StdRational value = eval(StandardChain{}, m, phi_sentence());
  return {std::move(m), value};
}

}  // namespace fuzzyfo
