#include "toto/logic_types.hpp"

#include <algorithm>

#include "toto/error.hpp"

namespace toto {
namespace {

class EfGame {
 public:
  EfGame(const Permutation& alpha, const Permutation& beta) : a_(alpha), b_(beta) {}

  bool duplicator_wins(std::size_t rounds) {
    if (rounds == 0) return true;
    for (int side = 0; side < 2; ++side) {
      const Permutation& board = side == 0 ? a_ : b_;
      for (std::size_t x = 0; x < board.size(); ++x)
        if (!has_answer(side, x, rounds)) return false;
    }
    return true;
  }

 private:
  bool has_answer(int side, std::size_t pick, std::size_t rounds) {
    const Permutation& other = side == 0 ? b_ : a_;
    for (std::size_t y = 0; y < other.size(); ++y) {
      const std::size_t pa = side == 0 ? pick : y;
      const std::size_t pb = side == 0 ? y : pick;
      if (!consistent(pa, pb)) continue;
      picks_a_.push_back(pa);
      picks_b_.push_back(pb);
      const bool ok = duplicator_wins(rounds - 1);
      picks_a_.pop_back();
      picks_b_.pop_back();
      if (ok) return true;
    }
    return false;
  }

  // The extended map must still be a partial isomorphism.
  bool consistent(std::size_t pa, std::size_t pb) const {
    for (std::size_t i = 0; i < picks_a_.size(); ++i) {
      const std::size_t qa = picks_a_[i], qb = picks_b_[i];
      if ((pa == qa) != (pb == qb)) return false;
      if ((pa < qa) != (pb < qb)) return false;
      if ((a_[pa] < a_[qa]) != (b_[pb] < b_[qb])) return false;
    }
    return true;
  }

  const Permutation& a_;
  const Permutation& b_;
  std::vector<std::size_t> picks_a_, picks_b_;
};

void append_diagram(const Permutation& sigma, const std::vector<std::size_t>& marks, std::string& out) {
  for (std::size_t i = 0; i < marks.size(); ++i)
    for (std::size_t j = i + 1; j < marks.size(); ++j) {
      const std::size_t p = marks[i], q = marks[j];
      if (p == q) {
        out += 'e';
      } else {
        const int code = (p < q ? 2 : 0) + (sigma[p] < sigma[q] ? 1 : 0);
        out += static_cast<char>('a' + code);
      }
    }
}

void append_length(std::size_t n, std::string& out) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((n >> (8 * i)) & 0xff);
}

std::string rank_encoding(const Permutation& sigma, std::vector<std::size_t>& marks, std::size_t rank) {
  std::string out;
  append_diagram(sigma, marks, out);
  if (rank == 0) return out;
  std::vector<std::string> children;
  children.reserve(sigma.size());
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    marks.push_back(x);
    children.push_back(rank_encoding(sigma, marks, rank - 1));
    marks.pop_back();
  }
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  out += '{';
  for (const auto& c : children) {
    append_length(c.size(), out);
    out += c;
  }
  out += '}';
  return out;
}

}  // namespace

EfWinner ef_winner(const Permutation& alpha, const Permutation& beta, std::size_t rounds, const EfLimits& limits) {
  if (alpha.size() > limits.max_size || beta.size() > limits.max_size || rounds > limits.max_rounds)
    throw CapExceeded("ef_winner: instance exceeds caps (size " + std::to_string(limits.max_size) + ", rounds " +
                      std::to_string(limits.max_rounds) + ")");
  EfGame game(alpha, beta);
  return game.duplicator_wins(rounds) ? EfWinner::Duplicator : EfWinner::Spoiler;
}

TypeFingerprint fingerprint(const Permutation& sigma, std::size_t k, const FingerprintLimits& limits) {
  if (sigma.size() > limits.max_size || k > limits.max_depth)
    throw CapExceeded("fingerprint: size " + std::to_string(sigma.size()) + " or depth " + std::to_string(k) +
                      " exceeds caps (" + std::to_string(limits.max_size) + ", " +
                      std::to_string(limits.max_depth) + ")");
  std::vector<std::size_t> marks;
  marks.reserve(k);
  std::string bytes = "T";
  bytes += static_cast<char>('0' + k);
  bytes += rank_encoding(sigma, marks, k);
  return TypeFingerprint(std::move(bytes));
}

bool k_equivalent(const Permutation& alpha, const Permutation& beta, std::size_t k, const FingerprintLimits& limits) {
  return fingerprint(alpha, k, limits) == fingerprint(beta, k, limits);
}

std::size_t FingerprintInterner::intern(const TypeFingerprint& fp) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = ids_.try_emplace(fp.bytes(), entries_.size());
  if (inserted) entries_.push_back(fp);
  return it->second;
}

std::size_t FingerprintInterner::find(const TypeFingerprint& fp) const {
  std::lock_guard lock(mutex_);
  auto it = ids_.find(fp.bytes());
  return it == ids_.end() ? entries_.size() : it->second;
}

std::size_t FingerprintInterner::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

TypeFingerprint FingerprintInterner::at(std::size_t id) const {
  std::lock_guard lock(mutex_);
  return entries_.at(id);
}

}  // namespace toto
