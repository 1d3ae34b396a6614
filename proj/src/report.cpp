#include "fuzzyfo/report.hpp"

#include "fuzzyfo/errors.hpp"

#include <cctype>
#include <sstream>

namespace fuzzyfo {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slug(const std::string& s) {
  std::string out;
  for (char ch : s) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) {
      out += static_cast<char>(std::tolower(u));
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_rank_set(const std::set<Rank>& s, std::size_t k) {
  std::string out = "{";
  bool first = true;
  for (Rank r : s) {
    if (!first) out += ", ";
    out += rank_to_std(r, k).str();
    first = false;
  }
  return out + "}";
}

std::string format_tuple(const std::vector<Term>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    out += to_string(tuple[i]);
  }
  return out + ")";
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "records") return ReportFormat::Records;
  throw Error("unknown report format '" + name + "' (expected text or records)");
}

Report::Section& Report::current() {
  if (sections_.empty()) sections_.push_back({"report", {}});
  return sections_.back();
}

Report& Report::section(std::string title) {
  sections_.push_back({std::move(title), {}});
  return *this;
}

Report& Report::field(std::string key, std::string value) {
  current().entries.push_back({std::move(key), {std::move(value)}, false});
  return *this;
}

Report& Report::block(std::string key, const std::string& text) {
  current().entries.push_back({std::move(key), split_lines(text), true});
  return *this;
}

Report& Report::append(const Report& other) {
  sections_.insert(sections_.end(), other.sections_.begin(), other.sections_.end());
  return *this;
}

std::string Report::render(ReportFormat format) const {
  std::ostringstream os;
  for (std::size_t s = 0; s < sections_.size(); ++s) {
    const Section& sec = sections_[s];
    if (format == ReportFormat::Text) {
      if (s) os << "\n";
      os << "== " << sec.title << " ==\n";
      for (const Entry& e : sec.entries) {
        if (!e.is_block) {
          os << e.key << ": " << e.lines.front() << "\n";
          continue;
        }
        os << e.key << ":\n";
        for (const auto& line : e.lines) os << "  " << line << "\n";
      }
    } else {
      const std::string prefix = slug(sec.title) + ".";
      for (const Entry& e : sec.entries) {
        os << prefix << slug(e.key) << ": ";
        for (std::size_t i = 0; i < e.lines.size(); ++i) os << (i ? "; " : "") << e.lines[i];
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string format_value(Rank r, std::size_t chain_size) {
  return "#" + std::to_string(r) + " (" + rank_to_std(r, chain_size).str() + ")";
}

void add_verdict(Report& out, const std::string& title, const Verdict& v, const ChainClass* chains) {
  out.section(title);
  out.field("procedure", v.procedure);
  out.field("bounds", v.bounds);
  out.field("outcome", to_string(v.kind));
  if (v.kind == Verdict::Kind::Decided) out.field("decision", v.decision ? "true" : "false");
  if (!v.reason.empty()) out.field("reason", v.reason);
  out.field("examined", std::to_string(v.examined));
  if (v.witness) {
    const Witness& w = *v.witness;
    std::size_t size = 2;
    if (chains && w.chain_index < chains->chains().size()) size = chains->chains()[w.chain_index].size();
    out.field("witness chain", w.chain_label);
    out.field("witness value", format_value(w.value, size));
    if (w.structure) out.block("witness structure", format_structure(*w.structure));
    if (!w.valuation.empty()) {
      std::string text;
      for (const auto& [atom, r] : w.valuation) text += atom + " = #" + std::to_string(r) + "\n";
      out.block("witness valuation", text);
    }
  }
  if (v.herbrand) {
    const HerbrandWitness& h = *v.herbrand;
    out.field("herbrand depth", std::to_string(h.depth));
    out.field("instances", std::to_string(h.instances.size()));
    std::string text;
    for (const auto& tuple : h.instances) text += format_tuple(tuple) + "\n";
    out.block("instance tuples", text);
    out.field("conjunction", to_string(h.conjunction));
  }
}

void add_trace(Report& out, const ReductionTrace& t) {
  out.section("reduction trace");
  out.field("input", to_string(t.input));
  out.field("negation", to_string(t.negation));
  out.field("herbrand form", to_string(t.herbrand_form));
  out.field("purely universal form", to_string(t.purely_universal_form));
  out.field("lattice matrix form", to_string(t.lattice_matrix_form));
  out.field("star output", to_string(t.star_output));
  out.section("fresh symbols");
  out.field("count", std::to_string(t.fresh_symbols.size()));
  if (!t.fresh_symbols.empty()) {
    std::string decls;
    for (const auto& [name, arity] : t.fresh_symbols)
      decls += arity == 0 ? "const " + name + "\n" : "fun " + name + "/" + std::to_string(arity) + "\n";
    out.block("declarations", decls);
  }
}

void add_reduction_report(Report& out, const ReductionReport& r, const ChainClass& k) {
  out.section("verification");
  out.field("status", to_string(r.status));
  out.field("chains", k.describe());
  for (std::size_t i = 0; i < r.notes.size(); ++i) out.field("note " + std::to_string(i + 1), r.notes[i]);
  add_verdict(out, "certificate", r.certificate);
  if (r.countermodel) add_verdict(out, "classical countermodel search", *r.countermodel);
  if (r.taut0) add_verdict(out, "bounded taut0 search", *r.taut0, &k);
  if (r.lemma) add_verdict(out, "propositional lemma check", *r.lemma, &k);
  if (!r.lifted.empty()) {
    out.section("lifted model");
    for (const Witness& w : r.lifted)
      out.field(w.chain_label, format_value(w.value, k.chains()[w.chain_index].size()));
  }
  for (std::size_t i = 0; i < r.sat_pos.size(); ++i) {
    // Each search ran on a one-chain class; find that chain by label.
    const Verdict& v = r.sat_pos[i];
    std::vector<FiniteChain> own;
    for (const auto& c : k.chains())
      if (v.witness && c.label() == v.witness->chain_label) own = {c};
    const ChainClass single(own.empty() ? k.chains() : own);
    add_verdict(out, "positive witness search " + std::to_string(i + 1), v, &single);
  }
}

void add_phi_refutation(Report& out, const PhiRefutation& r) {
  out.section("finite refutation");
  out.field("chains", "L2..L" + std::to_string(r.rows.empty() ? 2 : r.rows.back().k));
  out.field("result", r.holds() ? "value below 1 and negation above 0 on every value set"
                                : "FAILED");
  std::string table = "k  sets  max  argmax  below_top  negation_positive\n";
  for (const PhiChainRow& row : r.rows)
    table += std::to_string(row.k) + "  " + std::to_string(row.sets_scanned) + "  " +
             rank_to_std(row.max_value, row.k).str() + "  " + format_rank_set(row.argmax, row.k) +
             "  " + yes_no(row.all_below_top) + "  " + yes_no(row.negation_positive) + "\n";
  out.block("table", table);
}

void add_witness_table(Report& out, std::size_t max_n) {
  out.section("standard chain witness family");
  out.field("family", "P(j) = 1 - 2^-(j+1), j < N");
  std::string table = "N  value\n";
  for (std::size_t n = 1; n <= max_n; ++n)
    table += std::to_string(n) + "  " + phi_truncated_witness(n).value.str() + "\n";
  out.block("table", table);
}

void add_phi_witness(Report& out, std::size_t n, const TruncatedWitness& w) {
  out.section("truncated witness");
  out.field("N", std::to_string(n));
  out.field("value", w.value.str());
  out.block("structure", format_structure(w.structure));
}

void add_chain(Report& out, const FiniteChain& chain) {
  out.section("chain " + chain.label());
  out.field("size", std::to_string(chain.size()));
  out.field("lukasiewicz", yes_no(is_lukasiewicz(chain)));
  const auto law = check_square_meet_law(chain);
  out.field("square meet law", law ? "fails at #" + std::to_string(*law) : "pass");
  out.block("tnorm", format_chain(chain));
}

}  // namespace fuzzyfo
