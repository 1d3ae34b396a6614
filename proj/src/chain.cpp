#include "fuzzyfo/chain.hpp"

#include "fuzzyfo/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fuzzyfo {

ChainValidationError::ChainValidationError(std::string axiom_name, unsigned x_, unsigned y_,
                                           unsigned z_)
    : Error("t-norm violates " + axiom_name + " at (" + std::to_string(x_) + ", " +
            std::to_string(y_) + ", " + std::to_string(z_) + ")"),
      axiom(std::move(axiom_name)), x(x_), y(y_), z(z_) {}

ParseError::ParseError(const std::string& message, std::size_t pos)
    : Error(message + " at position " + std::to_string(pos)), position(pos) {}

namespace {

std::string budget_message(const std::string& what, long double space, std::uint64_t budget) {
  std::ostringstream os;
  os.precision(6);
  os << what << ": search space " << space << " exceeds budget " << budget;
  return os.str();
}

void require_size(std::size_t k) {
  if (k < 2) throw InvalidSize("a chain needs at least 2 elements, got " + std::to_string(k));
}

}  // namespace

BudgetExceeded::BudgetExceeded(const std::string& what, long double space_, std::uint64_t budget_)
    : Error(budget_message(what, space_, budget_)), space(space_), budget(budget_) {}

TnormTable FiniteChain::tnorm_table() const {
  TnormTable t(size_, std::vector<Rank>(size_));
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y) t[x][y] = tnorm_[x * size_ + y];
  return t;
}

TnormTable FiniteChain::residuum_table() const {
  TnormTable t(size_, std::vector<Rank>(size_));
  for (std::size_t x = 0; x < size_; ++x)
    for (std::size_t y = 0; y < size_; ++y) t[x][y] = residuum_[x * size_ + y];
  return t;
}

FiniteChain FiniteChain::with_label(std::string label) const {
  FiniteChain copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

FiniteChain make_chain_from_table(const TnormTable& table, std::string label) {
  const std::size_t n = table.size();
  require_size(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw InvalidSize("t-norm row " + std::to_string(x) + " has " +
                        std::to_string(table[x].size()) + " entries, expected " +
                        std::to_string(n));
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] >= n) throw ChainValidationError("range", x, y, 0);
  }
  const Rank top = static_cast<Rank>(n - 1);
  for (Rank x = 0; x < n; ++x)
    if (table[x][top] != x) throw ChainValidationError("identity", x, top, 0);
  for (Rank x = 0; x < n; ++x)
    for (Rank y = x + 1; y < n; ++y)
      if (table[x][y] != table[y][x]) throw ChainValidationError("commutativity", x, y, 0);
  for (Rank y = 0; y < n; ++y)
    for (Rank x = 0; x + 1 < n; ++x)
      if (table[x][y] > table[x + 1][y]) throw ChainValidationError("monotonicity", x, x + 1, y);
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y)
      for (Rank z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw ChainValidationError("associativity", x, y, z);

  std::vector<Rank> tnorm(n * n), residuum(n * n);
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y) {
      tnorm[x * n + y] = table[x][y];
      Rank best = 0;
      for (Rank z = 0; z < n; ++z)
        if (table[x][z] <= y) best = z;
      residuum[x * n + y] = best;
    }
  for (Rank x = 0; x < n; ++x)
    for (Rank y = 0; y < n; ++y)
      for (Rank z = 0; z < n; ++z)
        if ((table[x][z] <= y) != (z <= residuum[x * n + y]))
          throw ChainValidationError("residuation", x, y, z);

  if (label.empty()) label = "table:" + std::to_string(n);
  return FiniteChain(n, std::move(tnorm), std::move(residuum), std::move(label));
}

FiniteChain make_lukasiewicz_chain(std::size_t k) {
  require_size(k);
  const long top = static_cast<long>(k) - 1;
  TnormTable t(k, std::vector<Rank>(k));
  for (long x = 0; x < static_cast<long>(k); ++x)
    for (long y = 0; y < static_cast<long>(k); ++y)
      t[x][y] = static_cast<Rank>(std::max(0L, x + y - top));
  return make_chain_from_table(t, "luk:" + std::to_string(k));
}

FiniteChain make_godel_chain(std::size_t k) {
  require_size(k);
  TnormTable t(k, std::vector<Rank>(k));
  for (Rank x = 0; x < k; ++x)
    for (Rank y = 0; y < k; ++y) t[x][y] = std::min(x, y);
  return make_chain_from_table(t, "godel:" + std::to_string(k));
}

bool is_lukasiewicz(const FiniteChain& chain) {
  return chain == make_lukasiewicz_chain(chain.size());
}

namespace {

// Backtracking over the free entries with monotonicity bounds and partial
// associativity checks. Entries on the border rows are forced: t[0][y] = 0
// and t[top][y] = y.
class ChainEnumerator {
 public:
  ChainEnumerator(std::size_t n, const std::function<void(const FiniteChain&)>& visit)
      : n_(n), visit_(visit), table_(n, std::vector<Rank>(n, 0)), known_(n, std::vector<bool>(n)) {
    const Rank top = static_cast<Rank>(n - 1);
    for (Rank x = 0; x < n; ++x) {
      table_[top][x] = table_[x][top] = x;
      table_[0][x] = table_[x][0] = 0;
      known_[top][x] = known_[x][top] = known_[0][x] = known_[x][0] = true;
    }
    for (Rank i = 1; i + 1 < n; ++i)
      for (Rank j = i; j + 1 < n; ++j) free_.emplace_back(i, j);
  }

  void run() { step(0); }

 private:
  void step(std::size_t pos) {
    if (pos == free_.size()) {
      visit_(make_chain_from_table(table_, "mtl:" + std::to_string(n_) + "#" +
                                               std::to_string(index_++)));
      return;
    }
    const auto [i, j] = free_[pos];
    // Monotone in both arguments; t[i][j] <= t[i][top] = i.
    Rank lo = std::max(table_[i - 1][j], table_[i][j - 1]);
    for (Rank v = lo; v <= i; ++v) {
      table_[i][j] = table_[j][i] = v;
      known_[i][j] = known_[j][i] = true;
      if (associative_so_far()) step(pos + 1);
      known_[i][j] = known_[j][i] = false;
    }
  }

  bool associative_so_far() const {
    for (Rank x = 1; x + 1 < n_; ++x)
      for (Rank y = 1; y + 1 < n_; ++y) {
        if (!known_[x][y]) continue;
        const Rank xy = table_[x][y];
        for (Rank z = 1; z + 1 < n_; ++z) {
          if (!known_[y][z] || !known_[xy][z]) continue;
          const Rank yz = table_[y][z];
          if (!known_[x][yz]) continue;
          if (table_[xy][z] != table_[x][yz]) return false;
        }
      }
    return true;
  }

  std::size_t n_;
  const std::function<void(const FiniteChain&)>& visit_;
  TnormTable table_;
  std::vector<std::vector<bool>> known_;
  std::vector<std::pair<Rank, Rank>> free_;
  std::size_t index_ = 0;
};

}  // namespace

void for_each_mtl_chain(std::size_t size, const std::function<void(const FiniteChain&)>& visit,
                        std::size_t cap) {
  require_size(size);
  if (size > cap)
    throw InvalidSize("refusing to enumerate chains of size " + std::to_string(size) +
                      " (cap " + std::to_string(cap) +
                      "); the number of t-norm tables grows combinatorially");
  ChainEnumerator(size, visit).run();
}

std::vector<FiniteChain> enumerate_mtl_chains(std::size_t size, std::size_t cap) {
  std::vector<FiniteChain> out;
  for_each_mtl_chain(size, [&](const FiniteChain& c) { out.push_back(c); }, cap);
  return out;
}

std::optional<Rank> check_square_meet_law(const FiniteChain& chain) {
  for (Rank a = 0; a < chain.size(); ++a)
    if (FiniteChain::meet(chain.square(a), chain.square(chain.neg(a))) != chain.bottom())
      return a;
  return std::nullopt;
}

FiniteChain parse_chain(const std::string& text, std::string label) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<long>> rows;
  long size = -1;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (size < 0) {
      if (word != "chain" || !(ls >> size) || size < 2)
        throw ParseError("chain file must start with 'chain <size>' (size >= 2)", line_no);
      continue;
    }
    std::vector<long> row;
    std::istringstream rs(line);
    long v;
    while (rs >> v) row.push_back(v);
    if (!rs.eof()) throw ParseError("non-numeric entry in chain table", line_no);
    if (static_cast<long>(row.size()) != size)
      throw ParseError("chain table row has " + std::to_string(row.size()) + " entries", line_no);
    rows.push_back(std::move(row));
  }
  if (size < 0) throw ParseError("empty chain file", 1);
  if (static_cast<long>(rows.size()) != size)
    throw ParseError("chain table has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(size),
                     line_no);
  TnormTable table(size, std::vector<Rank>(size));
  for (long x = 0; x < size; ++x)
    for (long y = 0; y < size; ++y) {
      if (rows[x][y] < 0 || rows[x][y] >= size)
        throw ChainValidationError("range", x, y, 0);
      table[x][y] = static_cast<Rank>(rows[x][y]);
    }
  return make_chain_from_table(table, std::move(label));
}

std::string format_chain(const FiniteChain& chain) {
  std::ostringstream os;
  os << "chain " << chain.size() << "\n";
  for (const auto& row : chain.tnorm_table()) {
    for (std::size_t y = 0; y < row.size(); ++y) os << (y ? " " : "") << row[y];
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

StdRational::StdRational(BigRational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1)
    throw InvalidSize("standard-chain value " + value_.str() + " is outside [0,1]");
}

StdRational::StdRational(long long num, long long den) : StdRational(BigRational(num, den)) {}

std::string StdRational::str() const { return value_.str(); }

std::ostream& operator<<(std::ostream& os, const StdRational& v) { return os << v.str(); }

StdRational parse_std_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument("");
    long long den = 1;
    if (slash != std::string::npos) {
      const std::string d = text.substr(slash + 1);
      den = std::stoll(d, &used);
      if (used != d.size() || den <= 0) throw std::invalid_argument("");
    }
    return StdRational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + text + "'", 1);
  } catch (const std::out_of_range&) {
    throw ParseError("rational '" + text + "' out of range", 1);
  }
}

StdRational StandardChain::mult(const StdRational& x, const StdRational& y) {
  BigRational v = x.value() + y.value() - 1;
  return StdRational(v < 0 ? BigRational(0) : v);
}

StdRational StandardChain::impl(const StdRational& x, const StdRational& y) {
  BigRational v = 1 - x.value() + y.value();
  return StdRational(v > 1 ? BigRational(1) : v);
}

StdRational StandardChain::neg(const StdRational& x) { return StdRational(1 - x.value()); }

StdRational StandardChain::biimpl(const StdRational& x, const StdRational& y) {
  BigRational d = x.value() - y.value();
  return StdRational(1 - (d < 0 ? BigRational(-d) : d));
}

StdRational rank_to_std(Rank r, std::size_t k) {
  return StdRational(static_cast<long long>(r), static_cast<long long>(k) - 1);
}

}  // namespace fuzzyfo
