#include "toto/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "toto/error.hpp"

namespace toto {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation from_trusted(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::Unchecked{});
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  return from_trusted(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
      throw std::invalid_argument("bad permutation entry '" + std::string(field) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Permutation(std::move(values));
}

namespace {

bool extend_match(std::span<const int> sigma, std::span<const int> pattern, std::size_t start,
                  std::vector<int>& chosen) {
  const std::size_t depth = chosen.size();
  if (depth == pattern.size()) return true;
  const std::size_t needed = pattern.size() - depth;
  for (std::size_t i = start; i + needed <= sigma.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < depth && ok; ++j)
      ok = (sigma[chosen[j]] < sigma[i]) == (pattern[j] < pattern[depth]);
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (extend_match(sigma, pattern, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
  if (pattern.size() > sigma.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return extend_match(sigma.values(), pattern.values(), 0, chosen);
}

bool avoids_231(const Permutation& sigma) {
  // A value popped by a larger later value acts as the "2"; anything
  // smaller arriving afterwards completes a 231.
  std::vector<int> stack;
  int bound = 0;
  for (int x : sigma.values()) {
    if (x < bound) return false;
    while (!stack.empty() && stack.back() < x) {
      bound = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return true;
}

Permutation direct_sum(const Permutation& tau, const Permutation& pi) {
  std::vector<int> v(tau.values().begin(), tau.values().end());
  const int shift = static_cast<int>(tau.size());
  for (int x : pi.values()) v.push_back(x + shift);
  return from_trusted(std::move(v));
}

Permutation skew_sum(const Permutation& tau, const Permutation& pi) {
  std::vector<int> v;
  v.reserve(tau.size() + pi.size());
  const int shift = static_cast<int>(pi.size());
  for (int x : tau.values()) v.push_back(x + shift);
  for (int x : pi.values()) v.push_back(x);
  return from_trusted(std::move(v));
}

Permutation compose_at_max(const Permutation& tau, const Permutation& pi) {
  const int a = static_cast<int>(tau.size());
  const int b = static_cast<int>(pi.size());
  std::vector<int> v;
  v.reserve(a + b + 1);
  for (int x : tau.values()) v.push_back(x);
  v.push_back(a + b + 1);
  for (int x : pi.values()) v.push_back(x + a);
  return from_trusted(std::move(v));
}

namespace {

// Relabels a sequence of distinct integers to 1..m preserving order.
Permutation standardize(std::span<const int> seq) {
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin()) + 1;
  return from_trusted(std::move(out));
}

}  // namespace

Decomposition split_at_max(const Permutation& sigma) {
  auto v = sigma.values();
  const auto top = std::max_element(v.begin(), v.end()) - v.begin();
  return {standardize(v.subspan(0, top)), standardize(v.subspan(top + 1))};
}

Decomposition decompose(const Permutation& sigma) {
  if (sigma.empty()) throw Error("decompose: empty permutation");
  if (!avoids_231(sigma)) throw Error("decompose: " + sigma.to_string() + " contains 231");
  return split_at_max(sigma);
}

namespace {

// Lexicographic DFS over 231-avoiding prefixes. `bound` is the stack-check
// threshold; a prefix is extendable only if every unused value exceeds it.
template <class Emit>
bool av231_dfs(std::size_t n, std::vector<int>& prefix, std::vector<int>& stack, int bound,
               std::vector<bool>& used, Emit& emit) {
  if (prefix.size() == n) return emit(prefix);
  for (int x = 1; x <= static_cast<int>(n); ++x) {
    if (used[x]) continue;
    if (x < bound) continue;
    std::vector<int> saved;
    int new_bound = bound;
    while (!stack.empty() && stack.back() < x) {
      new_bound = stack.back();
      saved.push_back(stack.back());
      stack.pop_back();
    }
    bool viable = true;
    for (int y = 1; y < new_bound && viable; ++y) viable = used[y] || y == x;
    if (viable) {
      stack.push_back(x);
      used[x] = true;
      prefix.push_back(x);
      const bool more = av231_dfs(n, prefix, stack, new_bound, used, emit);
      prefix.pop_back();
      used[x] = false;
      stack.pop_back();
      if (!more) {
        stack.insert(stack.end(), saved.rbegin(), saved.rend());
        return false;
      }
    }
    stack.insert(stack.end(), saved.rbegin(), saved.rend());
  }
  return true;
}

}  // namespace

std::vector<Permutation> first_av231(std::size_t n, std::size_t count) {
  std::vector<Permutation> out;
  if (count == 0) return out;
  std::vector<int> prefix, stack;
  std::vector<bool> used(n + 1, false);
  auto emit = [&](const std::vector<int>& p) {
    out.push_back(from_trusted(p));
    return out.size() < count;
  };
  av231_dfs(n, prefix, stack, 0, used, emit);
  return out;
}

std::vector<Permutation> enumerate_av231(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("enumerate_av231: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  return first_av231(n, static_cast<std::size_t>(-1));
}

std::vector<Permutation> enumerate_all(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  std::vector<Permutation> out;
  do {
    out.push_back(from_trusted(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace toto
