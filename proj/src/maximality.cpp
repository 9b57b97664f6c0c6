#include "epist/maximality.hpp"

#include "epist/error.hpp"
#include "epist/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace epist {

bool window_distinct(const DirectiveWord& w) {
  const std::size_t len = std::min<std::size_t>(w.d, w.letters.size());
  if (len < 2) return true;
  std::vector<std::ptrdiff_t> last(w.d, -1);
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    std::ptrdiff_t prev = last[w.letters[j]];
    if (prev >= 0 && j - static_cast<std::size_t>(prev) < len) return false;
    last[w.letters[j]] = static_cast<std::ptrdiff_t>(j);
  }
  return true;
}

DirectiveWord canonicalize(const DirectiveWord& w) {
  // Rename letters in order of first appearance; this is the lex-least
  // permutation image.
  std::vector<int> rename(w.d, -1);
  int next = 0;
  DirectiveWord out{w.d, {}};
  out.letters.reserve(w.letters.size());
  for (Letter l : w.letters) {
    if (rename[l] < 0) rename[l] = next++;
    out.letters.push_back(static_cast<Letter>(rename[l]));
  }
  return out;
}

std::vector<DirectiveWord> permutation_orbit(const DirectiveWord& w) {
  if (w.d > 8) throw Error("permutation orbits are enumerated only for d <= 8");
  std::vector<Letter> perm(w.d);
  std::iota(perm.begin(), perm.end(), Letter{0});
  std::set<std::vector<Letter>> seen;
  do {
    std::vector<Letter> img;
    img.reserve(w.letters.size());
    for (Letter l : w.letters) img.push_back(perm[l]);
    seen.insert(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<DirectiveWord> out;
  out.reserve(seen.size());
  for (auto& v : seen) out.push_back({w.d, v});
  return out;
}

namespace {

struct TaskResult {
  BigInt max_value;
  std::vector<std::vector<Letter>> argmax;
  std::int64_t explored = 0;
  std::int64_t steps = 0;
};

// DFS over canonical words only: with u letters used so far, the next letter
// is one of 0..u-1 (reuse) or u (fresh), never more.
void dfs(int d, std::int64_t n, const BigVec& x, int used, std::vector<Letter>& path,
         TaskResult& res) {
  if (static_cast<std::int64_t>(path.size()) == n) {
    BigInt s = vec_sum(x);
    ++res.explored;
    if (s > res.max_value) {
      res.max_value = std::move(s);
      res.argmax.clear();
      res.argmax.push_back(path);
    } else if (s == res.max_value) {
      res.argmax.push_back(path);
    }
    return;
  }
  const int limit = std::min(used + 1, d);
  for (int l = 0; l < limit; ++l) {
    BigVec y = x;
    row_apply(y, static_cast<Letter>(l));
    ++res.steps;
    path.push_back(static_cast<Letter>(l));
    dfs(d, n, y, std::max(used, l + 1), path, res);
    path.pop_back();
  }
}

void merge(TaskResult& into, TaskResult&& part) {
  into.explored += part.explored;
  into.steps += part.steps;
  if (part.max_value > into.max_value) {
    into.max_value = std::move(part.max_value);
    into.argmax = std::move(part.argmax);
  } else if (part.max_value == into.max_value) {
    for (auto& w : part.argmax) into.argmax.push_back(std::move(w));
  }
}

// Projected number of row updates over the canonical DFS tree, for the
// budget precondition: nodes[n][u] counts canonical prefixes of length n
// using u distinct letters.
BigInt projected_steps(int d, std::int64_t n) {
  std::vector<BigInt> cur(d + 1);
  cur[0] = 1;
  BigInt total = 0;
  for (std::int64_t depth = 1; depth <= n; ++depth) {
    std::vector<BigInt> next(d + 1);
    for (int u = 0; u <= d; ++u) {
      if (cur[u] == 0) continue;
      next[u] += cur[u] * u;
      if (u < d) next[u + 1] += cur[u];
    }
    cur = std::move(next);
    for (int u = 0; u <= d; ++u) total += cur[u];
  }
  return total;
}

struct PrefixState {
  std::vector<Letter> path;
  BigVec x;
  int used;
};

void enumerate_prefixes(int d, int depth, const BigVec& x, int used,
                        std::vector<Letter>& path, std::vector<PrefixState>& out,
                        std::int64_t& steps) {
  if (depth == 0) {
    out.push_back({path, x, used});
    return;
  }
  const int limit = std::min(used + 1, d);
  for (int l = 0; l < limit; ++l) {
    BigVec y = x;
    row_apply(y, static_cast<Letter>(l));
    ++steps;
    path.push_back(static_cast<Letter>(l));
    enumerate_prefixes(d, depth - 1, y, std::max(used, l + 1), path, out, steps);
    path.pop_back();
  }
}

SearchResult run_search(int d, std::int64_t n, const SearchOptions& opt, bool parallel) {
  if (d < 2 || d > kMaxAlphabet) throw Error("alphabet size out of range");
  if (n < 1) throw Error("word length must be at least 1");
  BigInt projected = projected_steps(d, n);
  if (projected > opt.budget)
    throw BudgetError("search needs " + projected.str() + " row updates, budget is " +
                      std::to_string(opt.budget));

  // Fan-out depth: enough canonical prefixes to keep workers busy, chosen
  // from (d, n) only so results and counters never depend on thread count.
  int fanout = 0;
  if (parallel) {
    std::int64_t count = 1;
    while (fanout < n && count < 256) {
      count *= std::min<std::int64_t>(d, fanout + 1);
      ++fanout;
    }
  }

  TaskResult total;
  std::vector<PrefixState> prefixes;
  {
    std::vector<Letter> path;
    BigVec ones(d, 1);
    enumerate_prefixes(d, fanout, ones, 0, path, prefixes, total.steps);
  }

  std::vector<TaskResult> parts(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    auto& p = prefixes[i];
    std::vector<Letter> path = p.path;
    dfs(d, n, p.x, p.used, path, parts[i]);
  }
  for (auto& part : parts) merge(total, std::move(part));

  SearchResult res;
  res.d = d;
  res.n = n;
  res.max_value = std::move(total.max_value);
  res.explored = total.explored;
  res.steps = total.steps;
  std::sort(total.argmax.begin(), total.argmax.end());
  res.argmax.reserve(total.argmax.size());
  for (auto& letters : total.argmax) res.argmax.push_back({d, std::move(letters)});
  return res;
}

}  // namespace

SearchResult enumerate_max(int d, std::int64_t n, SearchOptions opt) {
  return run_search(d, n, opt, opt.parallel);
}

SearchResult enumerate_max_serial(int d, std::int64_t n, SearchOptions opt) {
  return run_search(d, n, opt, false);
}

}  // namespace epist
