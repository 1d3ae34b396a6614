#pragma once

#include "fuzzyfo/decision.hpp"
#include "fuzzyfo/phi.hpp"
#include "fuzzyfo/reduction.hpp"

#include <string>
#include <vector>

namespace fuzzyfo {

enum class ReportFormat { Text, Records };

// Parses "text" or "records"; throws Error otherwise.
ReportFormat parse_report_format(const std::string& name);

/// Ordered sections of key/value fields. Text output:
///
///   == title ==
///   key: value
///   key:
///     block line
///
/// Records output puts one `section.key: value` per line, with section and
/// key lowercased and non-alphanumerics mapped to '_'; block lines are
/// joined by "; ".
class Report {
 public:
  Report& section(std::string title);
  Report& field(std::string key, std::string value);
  Report& block(std::string key, const std::string& text);
  Report& append(const Report& other);

  std::string render(ReportFormat format) const;

 private:
  struct Entry {
    std::string key;
    std::vector<std::string> lines;
    bool is_block = false;
  };
  struct Section {
    std::string title;
    std::vector<Entry> entries;
  };
  Section& current();
  std::vector<Section> sections_;
};

// "#r (p/q)" for rank r of a chain with `chain_size` elements.
std::string format_value(Rank r, std::size_t chain_size);

// Adds a section describing `v`. Witness values are read in `chains` by
// chain_index; without it the witness is taken to live in B2.
void add_verdict(Report& out, const std::string& title, const Verdict& v,
                 const ChainClass* chains = nullptr);

void add_trace(Report& out, const ReductionTrace& trace);
void add_reduction_report(Report& out, const ReductionReport& r, const ChainClass& k);

void add_phi_refutation(Report& out, const PhiRefutation& r);
void add_witness_table(Report& out, std::size_t max_n);
void add_phi_witness(Report& out, std::size_t n, const TruncatedWitness& w);

void add_chain(Report& out, const FiniteChain& chain);

}  // namespace fuzzyfo
