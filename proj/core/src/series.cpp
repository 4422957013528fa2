#include "pgph/series.hpp"

#include "pgph/error.hpp"

namespace pgph {

std::string_view to_string(Functor f) noexcept {
  switch (f) {
    case Functor::L: return "L";
    case Functor::Lp: return "Lp";
    case Functor::D: return "D";
    case Functor::Z: return "Z";
    case Functor::Zp: return "Zp";
  }
  return "?";
}

std::optional<Functor> parse_functor(std::string_view s) noexcept {
  for (Functor f : all_functors)
    if (to_string(f) == s) return f;
  return std::nullopt;
}

namespace {

Subgroup next_term(const FiniteGroup& g, Functor f, const Subgroup& current) {
  const Subgroup all = whole_group(g);
  switch (f) {
    case Functor::L: return commutator_subgroup(g, current, all);
    case Functor::Lp: return agemo_closure(g, current, all);
    case Functor::D: return commutator_subgroup(g, current, current);
    case Functor::Z: return center_preimage(g, current, false);
    case Functor::Zp: return center_preimage(g, current, true);
  }
  throw InvariantViolation("unknown functor");
}

}  // namespace

NormalSeries series(const FiniteGroup& g, Functor functor) {
  NormalSeries s{functor, {}};
  const bool up = is_ascending(functor);
  s.terms.push_back(up ? Subgroup() : whole_group(g));
  const std::size_t end = up ? g.order() : 1;
  // a strictly monotone chain in a group of order p^k has at most k+1 terms
  const std::size_t limit = g.rank_exponent() + 2;
  while (s.terms.back().size() != end) {
    Subgroup next = next_term(g, functor, s.terms.back());
    if (next == s.terms.back() || s.terms.size() > limit)
      throw InvariantViolation(std::string(to_string(functor)) + "-series of " + g.name() +
                               " does not terminate; group is not nilpotent");
    s.terms.push_back(std::move(next));
  }
  return s;
}

std::optional<std::string> verify_series(const FiniteGroup& g, const NormalSeries& s) {
  if (s.terms.empty()) return "empty series";
  const bool up = is_ascending(s.functor);
  const Subgroup first = up ? Subgroup() : whole_group(g);
  if (!(s.terms.front() == first)) return "series does not start at the right end";
  if (s.terms.back().size() != (up ? g.order() : 1)) return "series does not end at the right end";
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    const auto& t = s.terms[i];
    if (!is_subgroup(g, t)) return "term " + std::to_string(i) + " is not a subgroup";
    if (!is_normal(g, t)) return "term " + std::to_string(i) + " is not normal";
    if (i + 1 < s.terms.size()) {
      if (!(next_term(g, s.functor, t) == s.terms[i + 1]))
        return "term " + std::to_string(i + 1) + " does not satisfy the recurrence";
      if (s.terms[i + 1].size() == t.size()) return "series is not strictly monotone";
    }
  }
  return std::nullopt;
}

unsigned nilpotency_class(const FiniteGroup& g) {
  return static_cast<unsigned>(series(g, Functor::L).terms.size() - 1);
}

std::vector<std::size_t> QuotientChain::orders() const {
  std::vector<std::size_t> out;
  for (const auto& q : groups) out.push_back(q->order());
  return out;
}

QuotientChain quotient_chain(const GroupPtr& g, Functor functor) {
  if (g->order() == 1) throw DataError("quotient chain of the trivial group is empty");
  const NormalSeries s = series(*g, functor);
  QuotientChain chain{functor, {}, {}, {}, {}};
  const std::size_t k = s.terms.size();

  // Subgroups to quotient by, column 1 first.
  std::vector<const Subgroup*> kernels;
  if (is_ascending(functor)) {
    for (std::size_t t = 0; t + 1 < k; ++t) {
      kernels.push_back(&s.terms[t]);
      chain.term_index.push_back(t);
    }
  } else {
    for (std::size_t t = 1; t < k; ++t) {
      kernels.push_back(&s.terms[k - t]);
      chain.term_index.push_back(k + 1 - t);
    }
  }

  for (const Subgroup* n : kernels) {
    if (n->size() == 1) {
      chain.groups.push_back(g);
      chain.projections.push_back(GroupHom::identity(g));
    } else {
      auto q = quotient(g, *n);
      chain.groups.push_back(q.group);
      chain.projections.push_back(std::move(q.projection));
    }
  }

  for (std::size_t t = 0; t + 1 < chain.groups.size(); ++t) {
    const auto& from = chain.projections[t];
    const auto& to = chain.projections[t + 1];
    const auto& q = *chain.groups[t];
    constexpr Elem unset = ~Elem{0};
    std::vector<Elem> map(q.order(), unset);
    for (std::size_t x = 0; x < g->order(); ++x) {
      const Elem a = from(static_cast<Elem>(x));
      if (map[a] == unset) map[a] = to(static_cast<Elem>(x));
    }
    chain.links.emplace_back(chain.groups[t], chain.groups[t + 1], std::move(map));
  }
  return chain;
}

}  // namespace pgph
