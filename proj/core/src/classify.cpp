#include "pgph/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "pgph/error.hpp"

namespace pgph {

namespace {

void put_list(std::ostringstream& os, const std::vector<std::uint64_t>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
}

// Class id of each key, numbered by first appearance.
std::vector<std::size_t> class_ids(const std::vector<std::string>& keys) {
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> ids;
  ids.reserve(keys.size());
  for (const auto& k : keys) ids.push_back(seen.emplace(k, seen.size()).first->second);
  return ids;
}

PartitionStats stats_of(const std::vector<std::size_t>& ids) {
  PartitionStats s;
  std::vector<std::size_t> sizes;
  for (std::size_t id : ids) {
    if (id >= sizes.size()) sizes.resize(id + 1, 0);
    ++sizes[id];
  }
  s.classes = sizes.size();
  for (std::size_t c : sizes) s.max_class_size = std::max(s.max_class_size, c);
  return s;
}

}  // namespace

std::string serialize(const PersistenceMatrix& m) {
  std::ostringstream os;
  os << to_string(m.functor) << ':' << m.size() << ':';
  for (std::size_t i = 1; i <= m.size(); ++i)
    for (std::size_t j = i; j <= m.size(); ++j) os << (i == 1 && j == 1 ? "" : ",") << m.at(i, j);
  return os.str();
}

std::string serialize(const IntegralPersistenceMatrix& m) {
  std::ostringstream os;
  os << to_string(m.functor) << ':' << m.size() << ':';
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) {
      if (i || j) os << ';';
      const auto& t = m.entries[i][j];
      put_list(os, t.source);
      os << '/';
      put_list(os, t.target);
      os << '/';
      put_list(os, t.cokernel);
    }
  return os.str();
}

std::string Fingerprint::prefix(int t) const {
  std::string key;
  for (int d = 0; d < t && d < static_cast<int>(degrees.size()); ++d) {
    key += degrees[static_cast<std::size_t>(d)];
    key += '|';
  }
  return key;
}

Fingerprint fingerprint(const GroupPtr& g, Functor functor, int t, bool integral) {
  Fingerprint f{g->name(), functor, integral, {}};
  if (integral) {
    for (const auto& m : integral_persistence_sequence(g, functor, t)) f.degrees.push_back(serialize(m));
  } else {
    for (const auto& m : persistence_sequence(g, functor, t).matrices) f.degrees.push_back(serialize(m));
  }
  return f;
}

ClassificationReport classify(const std::vector<GroupPtr>& groups, Functor functor, int t, bool integral,
                              unsigned threads) {
  if (t < 1) throw InvariantViolation("classify: degree must be positive");
  ClassificationReport r;
  r.functor = functor;
  r.max_degree = t;
  r.integral = integral;

  std::vector<std::optional<Fingerprint>> prints(groups.size());
  std::vector<std::string> errors(groups.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      try {
        prints[i] = fingerprint(groups[i], functor, t, integral);
      } catch (const BudgetExceeded& e) {
        errors[i] = e.what();
      } catch (const DataError& e) {
        errors[i] = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(groups.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  pool.clear();

  std::vector<const Fingerprint*> ok;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (prints[i]) ok.push_back(&*prints[i]);
    else r.failures.push_back(groups[i]->name() + ": " + errors[i]);
  }
  r.partial = !r.failures.empty();

  auto keys_for = [&](auto&& key) {
    std::vector<std::string> keys;
    for (const auto* f : ok) keys.push_back(key(*f));
    return keys;
  };
  const auto full = class_ids(keys_for([&](const Fingerprint& f) { return f.prefix(t); }));
  r.stats = stats_of(full);
  r.strongest_t = t;
  std::size_t best = 0;
  for (int d = 1; d <= t; ++d) {
    const auto ids = class_ids(keys_for([&](const Fingerprint& f) { return f.prefix(d); }));
    r.cumulative.push_back(stats_of(ids));
    if (ids == full && r.strongest_t == t) r.strongest_t = d;
    const auto single = class_ids(keys_for([&](const Fingerprint& f) {
      return d <= static_cast<int>(f.degrees.size()) ? f.degrees[static_cast<std::size_t>(d) - 1] : std::string();
    }));
    r.single.push_back(stats_of(single));
    best = std::max(best, r.single.back().classes);
  }
  r.stable_confirmed = r.strongest_t < t;
  r.stable_t = r.stable_confirmed ? r.strongest_t + 1 : t;
  auto pick = [&](int from) {
    for (int d = from; d <= t; ++d)
      if (r.single[static_cast<std::size_t>(d) - 1].classes == best) return d;
    return 0;
  };
  r.single_degree = pick(r.stable_t);
  if (r.single_degree == 0) r.single_degree = pick(1);

  r.classes.resize(r.stats.classes);
  for (std::size_t i = 0; i < ok.size(); ++i) r.classes[full[i]].push_back(ok[i]->group);
  return r;
}

std::string csv_summary(const std::vector<ClassificationReport>& reports) {
  std::ostringstream os;
  os << "functor,classes,max,t,single_classes,single_max,d\n";
  for (const auto& r : reports) {
    const auto& s = r.single[static_cast<std::size_t>(r.single_degree) - 1];
    os << to_string(r.functor) << (r.integral ? "-integral" : "") << ',' << r.stats.classes << ','
       << r.stats.max_class_size << ',' << r.stable_t << ',' << s.classes << ',' << s.max_class_size << ','
       << r.single_degree << '\n';
  }
  return os.str();
}

}  // namespace pgph
