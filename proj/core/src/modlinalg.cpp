#include "twistkit/modlinalg.hpp"

#include <deque>

#include "twistkit/error.hpp"
#include "twistkit/scalars.hpp"

namespace twistkit {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// u with u * a = gcd(a, N) (mod N) and gcd(u, N) = 1.
std::int64_t normalizing_unit(std::int64_t a, std::int64_t N) {
  std::int64_t g = gcd64(a, N);
  std::int64_t Ng = N / g, ag = a / g;
  std::int64_t s = 0, t = 0;
  ext_gcd(mod64(ag, Ng), Ng, &s, &t);
  std::int64_t u = mod64(s, Ng);
  if (Ng == 1) u = 1;
  for (std::int64_t k = 0;; ++k) {
    std::int64_t cand = u + k * Ng;
    if (cand >= N && N > 1) break;
    if (gcd64(cand, N) == 1) return cand;
  }
  throw InvariantError("no normalizing unit");
}

}  // namespace

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t* s, std::int64_t* t) {
  std::int64_t old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * ss;
    old_s = ss;
    ss = tmp;
    tmp = old_t - q * tt;
    old_t = tt;
    tt = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  *s = old_s;
  *t = old_t;
  return old_r;
}

ModularSystem::ModularSystem(int variables, std::int64_t modulus) : n_(variables), N_(modulus) {
  if (variables < 0 || modulus < 1) throw PreconditionError("ModularSystem: bad dimensions");
  pivots_.resize(static_cast<std::size_t>(n_));
}

void ModularSystem::add(const std::vector<std::pair<int, std::int64_t>>& terms, std::int64_t rhs) {
  Row row(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [j, c] : terms) {
    if (j < 0 || j >= n_) throw PreconditionError("ModularSystem: variable out of range");
    row[j] = mod64(row[j] + mod64(c, N_), N_);
  }
  row[n_] = mod64(rhs, N_);
  ++added_;
  insert(std::move(row));
}

void ModularSystem::insert(Row first) {
  if (N_ == 1) return;
  std::deque<Row> queue;
  queue.push_back(std::move(first));
  while (!queue.empty()) {
    Row r = std::move(queue.front());
    queue.pop_front();
    bool placed = false;
    for (int c = 0; c < n_ && !placed; ++c) {
      if (r[c] == 0) continue;
      Row& p = pivots_[c];
      if (p.empty()) {
        std::int64_t u = normalizing_unit(r[c], N_);
        for (auto& v : r) v = mulmod(v, u, N_);
        std::int64_t g = r[c];
        if (g != 1) {
          Row ann(r.size());
          for (std::size_t k = 0; k < r.size(); ++k) ann[k] = mulmod(r[k], N_ / g, N_);
          queue.push_back(std::move(ann));
        }
        p = std::move(r);
        placed = true;
      } else if (r[c] % p[c] == 0) {
        std::int64_t f = r[c] / p[c];
        for (std::size_t k = c; k < r.size(); ++k) r[k] = mod64(r[k] - mulmod(f, p[k], N_), N_);
      } else {
        std::int64_t s = 0, t = 0;
        std::int64_t d = ext_gcd(p[c], r[c], &s, &t);
        s = mod64(s, N_);
        t = mod64(t, N_);
        std::int64_t fp = r[c] / d, fr = p[c] / d;
        Row np(r.size()), other(r.size());
        for (std::size_t k = c; k < r.size(); ++k) {
          np[k] = mod64(mulmod(s, p[k], N_) + mulmod(t, r[k], N_), N_);
          other[k] = mod64(mulmod(fp, p[k], N_) - mulmod(fr, r[k], N_), N_);
        }
        Row ann(r.size());
        for (std::size_t k = c; k < r.size(); ++k) ann[k] = mulmod(np[k], N_ / d, N_);
        p = std::move(np);
        queue.push_back(std::move(other));
        queue.push_back(std::move(ann));
        placed = true;
      }
    }
    if (!placed && r[n_] != 0 && consistent_) {
      consistent_ = false;
      certificate_ = "row " + std::to_string(added_) + " reduces to 0 = " + std::to_string(r[n_]) + " (mod " +
                     std::to_string(N_) + ")";
    }
  }
}

std::optional<std::vector<std::int64_t>> ModularSystem::solve() const {
  if (!consistent_) return std::nullopt;
  std::vector<std::int64_t> x(static_cast<std::size_t>(n_), 0);
  if (N_ == 1) return x;
  for (int c = n_ - 1; c >= 0; --c) {
    const Row& p = pivots_[c];
    if (p.empty()) continue;
    std::int64_t v = p[n_];
    for (int j = c + 1; j < n_; ++j) {
      if (p[j] != 0 && x[j] != 0) v = mod64(v - mulmod(p[j], x[j], N_), N_);
    }
    if (v % p[c] != 0) throw InvariantError("Howell back substitution failed");
    x[c] = v / p[c];
  }
  return x;
}

int ModularSystem::rank() const {
  int r = 0;
  for (const auto& p : pivots_) r += p.empty() ? 0 : 1;
  return r;
}

}  // namespace twistkit
