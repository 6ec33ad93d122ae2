#ifndef MONOCOVER_SEARCH_HPP
#define MONOCOVER_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "monocover/cover_solver.hpp"
#include "monocover/criticality.hpp"
#include "monocover/downset.hpp"
#include "monocover/permutation.hpp"

namespace monocover {

// Symmetry reduction.
//
// D(reverse pi) and D(complement pi) are the transpose of D(pi); inverse and
// reverse-complement keep D(pi). So {id, inverse, rc, inverse∘rc} always
// preserves A-coverability, and the full group of 8 does when A is symmetric.

inline std::vector<Permutation> target_images(const Permutation& pi, const Downset& target) {
  const Permutation inv = symmetry(pi, Symmetry::inverse);
  const Permutation rc = symmetry(symmetry(pi, Symmetry::reverse), Symmetry::complement);
  std::vector<Permutation> images{pi, inv, rc, symmetry(rc, Symmetry::inverse)};
  if (target.transpose() == target) {
    const std::size_t base = images.size();
    for (std::size_t i = 0; i < base; ++i)
      images.push_back(symmetry(images[i], Symmetry::reverse));
  }
  return images;
}

/// Order of the symmetry group used for `target` (4 or 8).
inline std::size_t symmetry_group_order(const Downset& target) {
  return target.transpose() == target ? 8 : 4;
}

inline Permutation canonical_representative(const Permutation& pi, const Downset& target) {
  const auto images = target_images(pi, target);
  return *std::min_element(images.begin(), images.end());
}

inline std::set<Permutation> expand_orbit(const Permutation& pi, const Downset& target) {
  const auto images = target_images(pi, target);
  return {images.begin(), images.end()};
}

struct SearchJob {
  Downset target;
  std::size_t max_len = 0;
  bool use_symmetry = true;
  std::size_t parallelism = 1;
  /// Refuses max_len above this unless raised explicitly.
  std::size_t safety_cap = 11;
  /// Prefix length at which the DFS is cut into independent tasks.
  std::size_t split_length = 3;
  /// Coverability results are cached for patterns up to this length.
  std::size_t cache_max_length = 8;
  SolverLimits limits{};
  /// Wall-clock limit for the whole run; on expiry a checkpoint is written.
  std::optional<double> time_budget;
  std::optional<std::string> checkpoint_path;
  bool resume = false;
  /// Receives each hit as soon as its task completes. Called under a lock.
  std::function<void(const Permutation&, const CriticalityReport&)> sink;
};

struct SearchResult {
  /// Sorted by length, then lexicographically.
  std::vector<Permutation> hits;
  bool complete = true;
  std::size_t nodes = 0;
  std::size_t tasks_total = 0;
  std::size_t tasks_done = 0;
};

/// Frontier of a resumable run: the split prefixes and whether each is done.
struct SearchCheckpoint {
  Downset target;
  std::size_t max_len = 0;
  std::size_t split_length = 0;
  bool use_symmetry = true;
  std::vector<std::pair<Permutation, bool>> prefixes;  // (prefix, done)
};

inline std::string serialize(const SearchCheckpoint& cp) {
  std::ostringstream out;
  out << "# monocover search checkpoint\n";
  out << "target=" << cp.target << '\n';
  out << "max_len=" << cp.max_len << '\n';
  out << "split_length=" << cp.split_length << '\n';
  out << "symmetry=" << (cp.use_symmetry ? 1 : 0) << '\n';
  for (const auto& [prefix, done] : cp.prefixes)
    out << (done ? "done " : "pending ") << prefix << '\n';
  return out.str();
}

inline SearchCheckpoint parse_checkpoint(std::istream& in) {
  SearchCheckpoint cp;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto value_of = [&](std::string_view key) -> std::optional<std::string> {
      if (line.rfind(key, 0) == 0) return line.substr(key.size());
      return std::nullopt;
    };
    if (auto v = value_of("target=")) cp.target = parse_downset(*v);
    else if (auto v = value_of("max_len=")) cp.max_len = std::stoul(*v);
    else if (auto v = value_of("split_length=")) cp.split_length = std::stoul(*v);
    else if (auto v = value_of("symmetry=")) cp.use_symmetry = *v == "1";
    else if (auto v = value_of("done ")) cp.prefixes.emplace_back(parse_permutation(*v), true);
    else if (auto v = value_of("pending ")) cp.prefixes.emplace_back(parse_permutation(*v), false);
    else throw std::invalid_argument("unrecognized checkpoint line: " + line);
  }
  return cp;
}

namespace detail {

inline std::uint64_t pack_pattern(const std::vector<int>& values) {
  std::uint64_t key = static_cast<std::uint64_t>(values.size()) << 60;
  for (std::size_t i = 0; i < values.size(); ++i)
    key |= static_cast<std::uint64_t>(values[i] - 1) << (4 * i);
  return key;
}

/// Appends value v to pi, shifting values >= v up by one.
inline std::vector<int> extend(const std::vector<int>& pi, int v) {
  std::vector<int> out;
  out.reserve(pi.size() + 1);
  for (int x : pi) out.push_back(x >= v ? x + 1 : x);
  out.push_back(v);
  return out;
}

inline std::vector<int> delete_value_at(const std::vector<int>& pi, std::size_t pos) {
  std::vector<int> out;
  out.reserve(pi.size() - 1);
  const int removed = pi[pos];
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (i != pos) out.push_back(pi[i] > removed ? pi[i] - 1 : pi[i]);
  return out;
}

class SearchWorker {
public:
  using Clock = std::chrono::steady_clock;

  SearchWorker(const SearchJob& job, const std::atomic<bool>& stop,
               std::optional<Clock::time_point> deadline)
      : job_(job), solver_(job.limits), stop_(stop), deadline_(deadline) {
    cache_max_ = std::min<std::size_t>(job.cache_max_length, 15);
  }

  std::size_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

  bool coverable(const std::vector<int>& values) {
    if (values.size() <= cache_max_) {
      const auto key = pack_pattern(values);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
      const bool result = solver_.coverable(Permutation::from_trusted(values), job_.target);
      cache_.emplace(key, result);
      return result;
    }
    return solver_.coverable(Permutation::from_trusted(values), job_.target);
  }

  /// For a non-coverable node whose prefix (all but the last entry) is coverable.
  bool deletions_coverable(const std::vector<int>& values) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
      if (!coverable(delete_value_at(values, i))) return false;
    return true;
  }

  /// Explores all extensions of a coverable node; hits are appended to `out`.
  void explore(const std::vector<int>& node, std::vector<Permutation>& out) {
    if (aborted_) return;
    if (node.size() >= job_.max_len) return;
    ++nodes_;
    if ((nodes_ & 255u) == 0 &&
        (stop_.load(std::memory_order_relaxed) || (deadline_ && Clock::now() > *deadline_))) {
      aborted_ = true;
      return;
    }
    for (int v = 1; v <= static_cast<int>(node.size()) + 1; ++v) {
      std::vector<int> child = extend(node, v);
      if (coverable(child)) {
        explore(child, out);
        if (aborted_) return;
      } else if (deletions_coverable(child)) {
        out.push_back(Permutation::from_trusted(std::move(child)));
      }
    }
  }

  /// Runs the DFS below `prefix` (assumed coverable). Returns false if aborted.
  bool run_task(const Permutation& prefix, std::vector<Permutation>& out) {
    try {
      explore(prefix.values(), out);
    } catch (const resource_exhausted&) {
      aborted_ = true;
    }
    return !aborted_;
  }

  /// Walks the tree down to `split` entries, collecting task prefixes and
  /// the hits shorter than or equal to the split length.
  void collect_prefixes(const std::vector<int>& node, std::size_t split,
                        std::vector<Permutation>& prefixes, std::vector<Permutation>& hits) {
    if (node.size() == split || node.size() >= job_.max_len) {
      if (node.size() < job_.max_len) prefixes.push_back(Permutation::from_trusted(node));
      return;
    }
    for (int v = 1; v <= static_cast<int>(node.size()) + 1; ++v) {
      std::vector<int> child = extend(node, v);
      if (coverable(child)) collect_prefixes(child, split, prefixes, hits);
      else if (deletions_coverable(child)) hits.push_back(Permutation::from_trusted(std::move(child)));
    }
  }

private:
  const SearchJob& job_;
  CoverSolver solver_;
  std::unordered_map<std::uint64_t, bool> cache_;
  std::size_t cache_max_ = 8;
  const std::atomic<bool>& stop_;
  std::optional<Clock::time_point> deadline_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

inline bool length_then_lex(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace detail

/**
 * All A-critical permutations of length <= max_len.
 *
 * Every prefix of an A-critical permutation is a proper pattern of it and
 * hence A-coverable, so the DFS extends only coverable prefixes (appending a
 * new last value). A non-coverable child is a hit when all its one-point
 * deletions are coverable; it is never extended. With use_symmetry only the
 * canonical representative of each orbit is reported.
 */
inline SearchResult search_critical(const SearchJob& job) {
  using Clock = std::chrono::steady_clock;
  if (job.target.empty()) throw std::invalid_argument("search target must be nonempty");
  if (job.max_len > job.safety_cap)
    throw std::invalid_argument("max_len " + std::to_string(job.max_len) +
                                " exceeds the safety cap " + std::to_string(job.safety_cap));
  if (job.split_length == 0) throw std::invalid_argument("split_length must be positive");

  std::optional<Clock::time_point> deadline;
  if (job.time_budget)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*job.time_budget));
  std::atomic<bool> stop{false};

  SearchResult result;
  std::mutex sink_mutex;
  auto deliver = [&](std::vector<Permutation>& found) {
    std::lock_guard<std::mutex> lock(sink_mutex);
    for (auto& pi : found) {
      if (job.use_symmetry && canonical_representative(pi, job.target) != pi) continue;
      if (job.sink) {
        CriticalityReport rep{pi, job.target, CriticalStatus::critical, {}, {}, {}};
        job.sink(pi, rep);
      }
      result.hits.push_back(std::move(pi));
    }
  };

  // Shallow levels and the task list.
  std::vector<Permutation> prefixes;
  std::vector<Permutation> shallow_hits;
  {
    detail::SearchWorker root(job, stop, std::nullopt);
    const std::vector<int> single{1};
    if (job.max_len >= 1) {
      if (!root.coverable(single)) {
        // Target {(0,0)}: the single point is the only critical permutation.
        shallow_hits.push_back(Permutation{1});
      } else {
        root.collect_prefixes(single, std::max<std::size_t>(job.split_length, 1), prefixes,
                              shallow_hits);
      }
    }
    result.nodes += root.nodes();
  }

  std::vector<char> done(prefixes.size(), 0);
  bool skip_shallow = false;
  if (job.resume) {
    if (!job.checkpoint_path) throw std::invalid_argument("resume needs a checkpoint path");
    std::ifstream in(*job.checkpoint_path);
    if (!in) throw std::invalid_argument("cannot read checkpoint " + *job.checkpoint_path);
    const SearchCheckpoint cp = parse_checkpoint(in);
    if (cp.target != job.target || cp.max_len != job.max_len ||
        cp.split_length != job.split_length || cp.use_symmetry != job.use_symmetry)
      throw std::invalid_argument("checkpoint does not match this search job");
    if (cp.prefixes.size() != prefixes.size())
      throw std::invalid_argument("checkpoint prefix list does not match this search job");
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      if (cp.prefixes[i].first != prefixes[i])
        throw std::invalid_argument("checkpoint prefix list does not match this search job");
      done[i] = cp.prefixes[i].second ? 1 : 0;
    }
    skip_shallow = true;
  }
  if (!skip_shallow) deliver(shallow_hits);

  result.tasks_total = prefixes.size();
  std::atomic<std::size_t> next_task{0};
  std::mutex progress_mutex;
  std::size_t nodes_total = 0;

  auto work = [&]() {
    detail::SearchWorker worker(job, stop, deadline);
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= prefixes.size()) break;
      if (done[i]) continue;
      std::vector<Permutation> found;
      if (!worker.run_task(prefixes[i], found)) {
        stop.store(true);
        break;
      }
      deliver(found);
      std::lock_guard<std::mutex> lock(progress_mutex);
      done[i] = 1;
    }
    std::lock_guard<std::mutex> lock(progress_mutex);
    nodes_total += worker.nodes();
  };

  const std::size_t threads = std::max<std::size_t>(1, job.parallelism);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  result.nodes += nodes_total;

  result.tasks_done = static_cast<std::size_t>(std::count(done.begin(), done.end(), 1));
  result.complete = result.tasks_done == result.tasks_total;
  if (job.checkpoint_path && (!result.complete || job.resume)) {
    SearchCheckpoint cp{job.target, job.max_len, job.split_length, job.use_symmetry, {}};
    for (std::size_t i = 0; i < prefixes.size(); ++i) cp.prefixes.emplace_back(prefixes[i], done[i] != 0);
    std::ofstream out(*job.checkpoint_path);
    out << serialize(cp);
  }

  std::sort(result.hits.begin(), result.hits.end(), detail::length_then_lex);
  return result;
}

}  // namespace monocover

#endif  // MONOCOVER_SEARCH_HPP
