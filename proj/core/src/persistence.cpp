#include "pgph/persistence.hpp"

#include <algorithm>

#include "pgph/error.hpp"

namespace pgph {

std::size_t PersistenceMatrix::at(std::size_t i, std::size_t j) const noexcept {
  if (i < 1 || j < i || j > entries.size()) return 0;
  return entries[i - 1][j - 1];
}

std::optional<std::string> verify_matrix(const PersistenceMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m.entries[i].size() != n) return "row " + std::to_string(i + 1) + " has the wrong length";
    for (std::size_t j = 0; j < i; ++j)
      if (m.entries[i][j] != 0) return "nonzero entry below the diagonal";
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k)
        if (m.at(i, k) > m.at(i, j) || m.at(i, k) > m.at(j, k))
          return "p(" + std::to_string(i) + "," + std::to_string(k) + ") exceeds a factor through column " +
                 std::to_string(j);
  return std::nullopt;
}

std::size_t Barcode::total() const noexcept {
  std::size_t t = 0;
  for (const auto& b : bars) t += b.multiplicity;
  return t;
}

Barcode barcode(const PersistenceMatrix& m) {
  Barcode b{m.degree, m.size(), {}};
  const std::size_t n = m.size();
  auto p = [&](std::size_t i, std::size_t j) { return static_cast<long long>(m.at(i, j)); };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      const long long mu = (p(i, j) - p(i, j + 1)) - (p(i - 1, j) - p(i - 1, j + 1));
      if (mu < 0)
        throw DataError("persistence matrix of " + m.group + " has negative multiplicity at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      if (mu > 0) b.bars.push_back({i, j, static_cast<std::size_t>(mu)});
    }
  return b;
}

PersistenceMatrix matrix_from_barcode(const Barcode& b) {
  PersistenceMatrix m;
  m.degree = b.degree;
  m.entries.assign(b.columns, std::vector<std::size_t>(b.columns, 0));
  for (const auto& bar : b.bars) {
    if (bar.birth < 1 || bar.death < bar.birth || bar.death > b.columns)
      throw DataError("bar (" + std::to_string(bar.birth) + "," + std::to_string(bar.death) + ") out of range");
    for (std::size_t i = bar.birth; i <= bar.death; ++i)
      for (std::size_t j = i; j <= bar.death; ++j) m.entries[i - 1][j - 1] += bar.multiplicity;
  }
  return m;
}

PersistenceSequence persistence_sequence(const GroupPtr& g, Functor functor, int t, bool allow_partial) {
  if (t < 1) throw InvariantViolation("persistence_sequence: degree must be positive");
  PersistenceSequence out{quotient_chain(g, functor), {}, t, false, {}};
  const auto& chain = out.chain;
  const std::size_t n = chain.size();
  const unsigned p = g->prime();

  std::vector<MinimalResolution> res;
  int reach = t;
  for (std::size_t i = 0; i < n; ++i) {
    res.push_back(minimal_resolution(chain.groups[i], p, i == 0 ? t - 1 : t, true));
    const auto& r = res.back();
    // diagonals need b_n, links into this term need its solvers
    const int term_reach = i == 0 ? r.max_degree() + 1 : r.max_degree();
    if (term_reach < reach) {
      reach = term_reach;
      out.note = "budget reached at chain term " + std::to_string(i + 1) + " (order " +
                 std::to_string(chain.groups[i]->order()) + ")";
    }
  }
  reach = std::max(reach, 0);
  if (reach < t) {
    if (!allow_partial)
      throw BudgetExceeded(to_string(functor).data() + std::string("-persistence of ") + g->name() + ": " + out.note,
                           reach);
    out.partial = true;
  }
  if (reach == 0) return out;

  // link_maps[i][d] is the degree-d matrix of Q_i -> Q_{i+1}
  std::vector<std::vector<InducedHomologyMap>> link_maps;
  for (std::size_t i = 0; i + 1 < n; ++i) link_maps.push_back(induced_maps(chain.links[i], reach, res[i], res[i + 1]));

  for (int d = 1; d <= reach; ++d) {
    PersistenceMatrix m;
    m.group = g->name();
    m.functor = functor;
    m.degree = d;
    m.prime = p;
    m.term_orders = chain.orders();
    m.entries.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m.entries[i][i] = res[i].rank(d);
      if (i + 1 == n) continue;
      FpMatrix prod = link_maps[i][static_cast<std::size_t>(d)].matrix;
      m.entries[i][i + 1] = rank(prod);
      for (std::size_t j = i + 2; j < n; ++j) {
        prod = prod * link_maps[j - 1][static_cast<std::size_t>(d)].matrix;
        m.entries[i][j] = rank(prod);
      }
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

PersistenceMatrix persistence_matrix(const GroupPtr& g, Functor functor, int n) {
  auto s = persistence_sequence(g, functor, n);
  return std::move(s.matrices.back());
}

namespace {

void check_pair(const PersistenceMatrix& p1, const PersistenceMatrix& p2) {
  if (p1.functor != Functor::Lp && p1.functor != Functor::Zp)
    throw DataError("order recovery needs an Lp or Zp chain");
  if (p1.functor != p2.functor || p1.size() != p2.size() || p1.prime != p2.prime || p1.degree != 1 ||
      p2.degree != 2)
    throw DataError("order recovery needs the degree 1 and 2 matrices of one chain");
  if (p1.size() == 0) throw DataError("empty persistence matrix");
}

// dim of the kernel of Q_t -> Q_{t+1} from the five-term sequence (t one-based).
std::size_t kernel_dimension(const PersistenceMatrix& p1, const PersistenceMatrix& p2, std::size_t t) {
  const long long h2 = static_cast<long long>(p2.at(t + 1, t + 1)) - static_cast<long long>(p2.at(t, t + 1));
  const long long h1 = static_cast<long long>(p1.at(t, t)) - static_cast<long long>(p1.at(t, t + 1));
  if (h2 < 0 || h1 < 0 || h1 + h2 == 0)
    throw DataError("inconsistent persistence matrices at column " + std::to_string(t));
  return static_cast<std::size_t>(h1 + h2);
}

}  // namespace

std::uint64_t recover_order(const PersistenceMatrix& p1, const PersistenceMatrix& p2) {
  check_pair(p1, p2);
  const std::size_t n = p1.size();
  std::size_t exponent = p1.at(n, n);  // Q_N is elementary abelian
  for (std::size_t t = 1; t < n; ++t) exponent += kernel_dimension(p1, p2, t);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < exponent; ++i) order *= p1.prime;
  return order;
}

std::vector<std::uint64_t> recover_abelian_invariants(const PersistenceMatrix& p1, const PersistenceMatrix& p2) {
  check_pair(p1, p2);
  if (p1.functor != Functor::Zp) throw DataError("abelian invariants are recovered from the Zp chain");
  const std::size_t n = p1.size();
  const std::uint64_t p = p1.prime;
  std::vector<std::uint64_t> inv(p1.at(n, n), p);
  for (std::size_t t = n - 1; t >= 1; --t) {
    const std::size_t d = kernel_dimension(p1, p2, t);
    if (d < inv.size()) throw DataError("inconsistent persistence matrices: kernel smaller than the rank");
    // pad with trivial invariants, then multiply the d highest by p
    inv.insert(inv.begin(), d - inv.size(), 1);
    for (auto& x : inv) x *= p;
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

LowerCentralReport check_lower_central_structure(const GroupPtr& g) {
  LowerCentralReport r;
  r.group = g->name();
  const auto seq = persistence_sequence(g, Functor::L, 2);
  const std::size_t n = seq.chain.size();
  const Barcode b1 = barcode(seq.matrices[0]);
  const Barcode b2 = barcode(seq.matrices[1]);

  const std::size_t d = min_generators(*g);
  const bool full = b1.bars.size() == 1 && b1.bars[0] == Bar{1, n, d};
  if (!full) {
    r.full_bars = false;
    r.failures.push_back("degree 1 barcode is not " + std::to_string(d) + " bars spanning " + std::to_string(n) +
                         " columns");
  }
  for (const auto& bar : b2.bars)
    if (bar.birth >= 2 && bar.death > bar.birth) {
      r.births_in_first_column = false;
      r.failures.push_back("degree 2 bar (" + std::to_string(bar.birth) + "," + std::to_string(bar.death) +
                           ") starts after column 1");
    }

  const NormalSeries s = series(*g, Functor::L);
  const std::size_t c = s.terms.size() - 1;
  const Subgroup all = whole_group(*g);
  for (std::size_t j = 2; j <= n; ++j) {
    const std::size_t jp = c + 2 - j;  // one-based series index
    const Subgroup& lj = s.terms[jp - 1];
    const Subgroup frattini = agemo_closure(*g, lj, all);  // L_{j'+1} L_{j'}^p
    std::size_t expected = 0;
    for (std::size_t q = lj.size() / frattini.size(); q > 1; q /= g->prime()) ++expected;
    std::size_t isolated = 0;
    for (const auto& bar : b2.bars)
      if (bar.birth == j && bar.death == j) isolated += bar.multiplicity;
    if (isolated != expected) {
      r.isolated_counts = false;
      r.failures.push_back("column " + std::to_string(j) + " has " + std::to_string(isolated) +
                           " isolated vertices, expected " + std::to_string(expected));
    }
  }
  return r;
}

std::vector<IntegralPersistenceMatrix> integral_persistence_sequence(const GroupPtr& g, Functor functor, int t) {
  const QuotientChain chain = quotient_chain(g, functor);
  const std::size_t n = chain.size();
  std::vector<IntegralPersistenceMatrix> out;
  for (int d = 1; d <= t; ++d) {
    IntegralPersistenceMatrix m;
    m.group = g->name();
    m.functor = functor;
    m.degree = d;
    m.term_orders = chain.orders();
    m.entries.assign(n, std::vector<IntegralTriple>(n));
    std::vector<IntegralHomology> h;
    for (const auto& q : chain.groups) h.push_back(integral_homology(q, d));
    for (std::size_t i = 0; i < n; ++i) {
      m.entries[i][i] = {h[i].invariants, h[i].invariants, {}};
      GroupHom composite = GroupHom::identity(chain.groups[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        composite = composite.then(chain.links[j - 1]);
        m.entries[i][j] = {h[i].invariants, h[j].invariants, integral_cokernel(composite, d, h[j])};
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

IntegralPersistenceMatrix integral_persistence_matrix(const GroupPtr& g, Functor functor, int n) {
  auto s = integral_persistence_sequence(g, functor, n);
  return std::move(s.back());
}

}  // namespace pgph
