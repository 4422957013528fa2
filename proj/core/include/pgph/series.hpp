#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgph/group.hpp"

namespace pgph {

/// The five normal series.
enum class Functor {
  L,   ///< lower central: L_1 = G, L_{i+1} = [L_i, G]
  Lp,  ///< lower p-central: L_{i+1} = [L_i, G] L_i^p
  D,   ///< derived: D_{i+1} = [D_i, D_i]
  Z,   ///< upper central: Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i)
  Zp,  ///< upper p-central: Z_{i+1}/Z_i = central elements of order <= p in G/Z_i
};

inline constexpr std::array<Functor, 5> all_functors{Functor::L, Functor::Lp, Functor::D, Functor::Z,
                                                     Functor::Zp};

std::string_view to_string(Functor f) noexcept;
std::optional<Functor> parse_functor(std::string_view s) noexcept;
/// Z and Zp grow from the trivial subgroup; the others shrink from G.
constexpr bool is_ascending(Functor f) noexcept { return f == Functor::Z || f == Functor::Zp; }

/// Terms in series order: descending series start at G and end at 1,
/// ascending series start at 1 and end at G.
struct NormalSeries {
  Functor functor;
  std::vector<Subgroup> terms;
};

NormalSeries series(const FiniteGroup& g, Functor functor);

/// Recomputes every term from its predecessor and checks normality.
/// Returns a description of the first failure, or nullopt.
std::optional<std::string> verify_series(const FiniteGroup& g, const NormalSeries& s);

/// Number of nontrivial steps of the lower central series.
unsigned nilpotency_class(const FiniteGroup& g);

/// G = Q_1 ->> Q_2 ->> ... ->> Q_N for one normal series; trivial quotients dropped.
///
/// Descending series G = F_1 > ... > F_k = 1 give Q_t = G/F_{k+1-t};
/// ascending series 1 = S_0 < ... < S_c = G give Q_t = G/S_{t-1}.
/// Column 1 is always G itself.
struct QuotientChain {
  Functor functor;
  std::vector<GroupPtr> groups;
  std::vector<GroupHom> links;        ///< Q_t -> Q_{t+1}
  std::vector<GroupHom> projections;  ///< G -> Q_t
  std::vector<std::size_t> term_index;  ///< series index quotiented out at each t (1-based for descending)

  std::size_t size() const noexcept { return groups.size(); }
  std::vector<std::size_t> orders() const;
};

/// Throws DataError for the trivial group (empty chain).
QuotientChain quotient_chain(const GroupPtr& g, Functor functor);

}  // namespace pgph
