#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fuzzyfo {

// Index of an element in a finite chain; 0 is the bottom, size-1 the top.
using Rank = unsigned;

using TnormTable = std::vector<std::vector<Rank>>;

/// A finite MTL-chain: the carrier 0 < 1 < ... < size-1 with a
/// commutative, associative, monotone t-norm whose unit is the top. The
/// residuum is derived from the t-norm and never supplied by callers.
///
/// Instances are immutable; the only ways to obtain one are the factory
/// functions below, all of which validate.
class FiniteChain {
 public:
  using value_type = Rank;

  std::size_t size() const { return size_; }
  Rank bottom() const { return 0; }
  Rank top() const { return static_cast<Rank>(size_ - 1); }

  Rank mult(Rank x, Rank y) const { return tnorm_[x * size_ + y]; }
  Rank impl(Rank x, Rank y) const { return residuum_[x * size_ + y]; }
  Rank neg(Rank x) const { return impl(x, 0); }
  static Rank meet(Rank x, Rank y) { return x < y ? x : y; }
  static Rank join(Rank x, Rank y) { return x < y ? y : x; }
  Rank square(Rank x) const { return mult(x, x); }
  Rank biimpl(Rank x, Rank y) const { return meet(impl(x, y), impl(y, x)); }

  bool contains(Rank x) const { return x < size_; }

  TnormTable tnorm_table() const;
  TnormTable residuum_table() const;

  // Short human label, e.g. "luk:3", "godel:4", "table:4#2".
  const std::string& label() const { return label_; }
  FiniteChain with_label(std::string label) const;

  friend bool operator==(const FiniteChain& a, const FiniteChain& b) {
    return a.size_ == b.size_ && a.tnorm_ == b.tnorm_;
  }

  friend FiniteChain make_chain_from_table(const TnormTable& table, std::string label);

 private:
  FiniteChain(std::size_t size, std::vector<Rank> tnorm, std::vector<Rank> residuum,
              std::string label)
      : size_(size), tnorm_(std::move(tnorm)), residuum_(std::move(residuum)),
        label_(std::move(label)) {}

  std::size_t size_;
  std::vector<Rank> tnorm_;
  std::vector<Rank> residuum_;
  std::string label_;
};

// Łukasiewicz chain with k elements {0, 1/(k-1), ..., 1}.
FiniteChain make_lukasiewicz_chain(std::size_t k);
FiniteChain make_godel_chain(std::size_t k);

// Validates every chain axiom and derives the residuum. Throws
// ChainValidationError naming the first violated axiom with a witness.
FiniteChain make_chain_from_table(const TnormTable& table, std::string label = {});

// True when `chain` has exactly the Łukasiewicz tables of its size.
bool is_lukasiewicz(const FiniteChain& chain);

inline constexpr std::size_t kDefaultEnumerationCap = 7;

// Every MTL-chain of the given size, each exactly once, in lexicographic
// order of the free table entries t[i][j] (1 <= i <= j <= size-2, row-major).
std::vector<FiniteChain> enumerate_mtl_chains(std::size_t size,
                                              std::size_t cap = kDefaultEnumerationCap);

// Visits the chains in the same order without materializing them all.
void for_each_mtl_chain(std::size_t size, const std::function<void(const FiniteChain&)>& visit,
                        std::size_t cap = kDefaultEnumerationCap);

// Least rank a with meet(a², (¬a)²) != 0, or nullopt when the law holds.
std::optional<Rank> check_square_meet_law(const FiniteChain& chain);

// Chain text format: "chain <size>" then size rows of the t-norm table.
FiniteChain parse_chain(const std::string& text, std::string label = {});
std::string format_chain(const FiniteChain& chain);

// ---------------------------------------------------------------------------
// The standard Łukasiewicz chain on [0,1], with exact rational values.

using BigRational = boost::multiprecision::cpp_rational;

class StdRational {
 public:
  StdRational() = default;
  // Throws InvalidSize when value lies outside [0,1].
  explicit StdRational(BigRational value);
  StdRational(long long num, long long den);

  static StdRational zero() { return {}; }
  static StdRational one() { return StdRational(1, 1); }

  const BigRational& value() const { return value_; }
  std::string str() const;

  friend bool operator==(const StdRational&, const StdRational&) = default;
  friend auto operator<=>(const StdRational& a, const StdRational& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : b.value_ < a.value_ ? std::strong_ordering::greater
                                  : std::strong_ordering::equal;
  }

 private:
  BigRational value_{0};
};

std::ostream& operator<<(std::ostream& os, const StdRational& v);

// Parses "p/q" or an integer; the value must lie in [0,1].
StdRational parse_std_rational(const std::string& text);

/// Operations of the standard MV-chain. Stateless; mirrors the FiniteChain
/// interface so the evaluator can be written once for both.
struct StandardChain {
  using value_type = StdRational;

  static StdRational bottom() { return StdRational::zero(); }
  static StdRational top() { return StdRational::one(); }
  static StdRational mult(const StdRational& x, const StdRational& y);
  static StdRational impl(const StdRational& x, const StdRational& y);
  static StdRational neg(const StdRational& x);
  static StdRational meet(const StdRational& x, const StdRational& y) { return x < y ? x : y; }
  static StdRational join(const StdRational& x, const StdRational& y) { return x < y ? y : x; }
  static StdRational square(const StdRational& x) { return mult(x, x); }
  static StdRational biimpl(const StdRational& x, const StdRational& y);

  std::string label() const { return "std"; }
};

// Value r/(k-1) of rank r in the k-element Łukasiewicz chain.
StdRational rank_to_std(Rank r, std::size_t k);

}  // namespace fuzzyfo
