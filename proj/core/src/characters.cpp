#include "twistkit/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "twistkit/error.hpp"

namespace twistkit {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 of(std::int64_t v) const { return static_cast<u64>(mod64(v, static_cast<std::int64_t>(p))); }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(const Fp& F) {
  std::vector<u64> fac;
  u64 m = F.p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fac.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : fac) ok = ok && F.pow(g, (F.p - 1) / q) != 1;
    if (ok) return g;
  }
}

// Rows of the returned matrix form a reduced row echelon basis of span(rows).
Mat rref(Mat rows, const Fp& F, std::vector<int>* pivots) {
  pivots->clear();
  if (rows.empty()) return rows;
  const int cols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    u64 iv = F.inv(rows[r][c]);
    for (auto& v : rows[r]) v = F.mul(v, iv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 f = rows[i][c];
      for (int k = 0; k < cols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    pivots->push_back(c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Basis of {c : A c = 0}.
Mat nullspace(Mat A, const Fp& F) {
  const int n = static_cast<int>(A.size());
  std::vector<int> piv;
  Mat R = rref(std::move(A), F, &piv);
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat out;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.sub(0, R[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (low degree first) by Hessenberg reduction.
Vec charpoly(Mat H, const Fp& F) {
  const int d = static_cast<int>(H.size());
  for (int c = 0; c + 2 < d; ++c) {
    int piv = -1;
    for (int i = c + 1; i < d; ++i) {
      if (H[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != c + 1) {
      std::swap(H[piv], H[c + 1]);
      for (int i = 0; i < d; ++i) std::swap(H[i][piv], H[i][c + 1]);
    }
    u64 iv = F.inv(H[c + 1][c]);
    for (int i = c + 2; i < d; ++i) {
      if (H[i][c] == 0) continue;
      u64 u = F.mul(H[i][c], iv);
      for (int k = 0; k < d; ++k) H[i][k] = F.sub(H[i][k], F.mul(u, H[c + 1][k]));
      for (int k = 0; k < d; ++k) H[k][c + 1] = F.add(H[k][c + 1], F.mul(u, H[k][i]));
    }
  }
  std::vector<Vec> P(d + 1);
  P[0] = {1};
  for (int k = 1; k <= d; ++k) {
    Vec q(k + 1, 0);
    for (int i = 0; i < k; ++i) {
      q[i + 1] = F.add(q[i + 1], P[k - 1][i]);
      q[i] = F.sub(q[i], F.mul(H[k - 1][k - 1], P[k - 1][i]));
    }
    u64 t = 1;
    for (int i = k - 1; i >= 1; --i) {
      t = F.mul(t, H[i][i - 1]);
      u64 f = F.mul(t, H[i - 1][k - 1]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < P[i - 1].size(); ++j) q[j] = F.sub(q[j], F.mul(f, P[i - 1][j]));
    }
    P[k] = std::move(q);
  }
  return P[d];
}

struct ClassData {
  int r = 0;
  std::vector<int> reps, sizes, inv_class;
  // coef[j][k][l] = #{x in C_j : x^-1 z_l in C_k}
  std::vector<std::vector<std::vector<int>>> coef;
};

ClassData class_data(const FiniteGroup& K) {
  ClassData D;
  const auto& cls = K.classes();
  D.r = static_cast<int>(cls.size());
  for (const auto& c : cls) {
    D.reps.push_back(c.representative);
    D.sizes.push_back(static_cast<int>(c.elements.size()));
  }
  for (int l = 0; l < D.r; ++l) D.inv_class.push_back(K.class_of(K.inv(D.reps[l])));
  D.coef.assign(D.r, std::vector<std::vector<int>>(D.r, std::vector<int>(D.r, 0)));
  for (int j = 0; j < D.r; ++j) {
    for (int x : cls[j].elements) {
      int xi = K.inv(x);
      for (int l = 0; l < D.r; ++l) ++D.coef[j][K.class_of(K.mul(xi, D.reps[l]))][l];
    }
  }
  return D;
}

// Splits every subspace into eigenspaces of the operator w -> M w.
bool split_all(std::vector<Mat>& spaces, const Mat& M, const Fp& F) {
  bool changed = false;
  std::vector<Mat> next;
  for (auto& V : spaces) {
    const int d = static_cast<int>(V.size());
    if (d == 1) {
      next.push_back(std::move(V));
      continue;
    }
    const int r = static_cast<int>(V[0].size());
    std::vector<int> piv;
    V = rref(std::move(V), F, &piv);
    // A[i][k]: coefficient of V[k] in M V[i]
    Mat A(d, Vec(d, 0));
    for (int i = 0; i < d; ++i) {
      Vec w(r, 0);
      for (int a = 0; a < r; ++a) {
        u64 s = 0;
        for (int b = 0; b < r; ++b) s = F.add(s, F.mul(M[a][b], V[i][b]));
        w[a] = s;
      }
      for (int k = 0; k < d; ++k) A[i][k] = w[piv[k]];
    }
    Mat At(d, Vec(d, 0));
    for (int i = 0; i < d; ++i) {
      for (int k = 0; k < d; ++k) At[k][i] = A[i][k];
    }
    Vec cp = charpoly(At, F);
    std::vector<u64> roots;
    for (u64 lam = 0; lam < F.p; ++lam) {
      u64 v = 0;
      for (int i = static_cast<int>(cp.size()) - 1; i >= 0; --i) v = F.add(F.mul(v, lam), cp[i]);
      if (v == 0) roots.push_back(lam);
    }
    if (roots.size() <= 1) {
      next.push_back(std::move(V));
      continue;
    }
    int covered = 0;
    std::vector<Mat> parts;
    for (u64 lam : roots) {
      Mat B = At;
      for (int i = 0; i < d; ++i) B[i][i] = F.sub(B[i][i], lam);
      Mat ns = nullspace(B, F);
      Mat part;
      for (const auto& c : ns) {
        Vec v(r, 0);
        for (int i = 0; i < d; ++i) {
          if (c[i] == 0) continue;
          for (int a = 0; a < r; ++a) v[a] = F.add(v[a], F.mul(c[i], V[i][a]));
        }
        part.push_back(std::move(v));
      }
      covered += static_cast<int>(part.size());
      parts.push_back(std::move(part));
    }
    if (covered != d) {
      // not diagonalizable over F_p on this subspace; leave it for another operator
      next.push_back(std::move(V));
      continue;
    }
    for (auto& p : parts) next.push_back(std::move(p));
    changed = true;
  }
  spaces = std::move(next);
  return changed;
}

std::optional<CharacterTable> dixon_at_prime(const FiniteGroup& K, const ClassData& D, u64 p) {
  Fp F{p};
  const int r = D.r;
  const int n = K.order();
  const std::int64_t e = K.exponent();
  std::vector<Mat> ops(r, Mat(r, Vec(r, 0)));
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) ops[j][k][l] = static_cast<u64>(D.coef[j][k][l]) % p;
    }
  }
  Mat ident(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) ident[i][i] = 1;
  std::vector<Mat> spaces{ident};
  std::mt19937_64 rng(0x7157ULL + p);
  Mat comb(r, Vec(r, 0));
  for (int j = 0; j < r; ++j) {
    u64 c = rng() % p;
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) comb[k][l] = F.add(comb[k][l], F.mul(c, ops[j][k][l]));
    }
  }
  split_all(spaces, comb, F);
  auto done = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Mat& V) { return V.size() == 1; });
  };
  for (int round = 0; round < 3 && !done(); ++round) {
    for (int j = 1; j < r && !done(); ++j) split_all(spaces, ops[j], F);
  }
  if (!done() || static_cast<int>(spaces.size()) != r) return std::nullopt;

  u64 z = F.pow(primitive_root(F), (p - 1) / static_cast<u64>(e));
  CharacterTable T;
  T.group_order = n;
  T.conductor = e;
  T.class_reps = D.reps;
  T.class_sizes = D.sizes;
  T.class_of.resize(n);
  for (int g = 0; g < n; ++g) T.class_of[g] = K.class_of(g);

  for (auto& V : spaces) {
    Vec w = V[0];
    if (w[0] == 0) return std::nullopt;
    u64 w0 = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, w0);
    u64 s = 0;
    for (int l = 0; l < r; ++l) s = F.add(s, F.mul(F.mul(w[l], w[D.inv_class[l]]), F.inv(static_cast<u64>(D.sizes[l]) % p)));
    if (s == 0) return std::nullopt;
    u64 d2 = F.mul(static_cast<u64>(n) % p, F.inv(s));
    int deg = -1;
    for (int d = 1; d * d <= n; ++d) {
      if (static_cast<u64>(d * d) % p == d2) {
        deg = d;
        break;
      }
    }
    if (deg < 0) return std::nullopt;
    // character values mod p per class
    Vec chi(r);
    for (int l = 0; l < r; ++l) chi[l] = F.mul(F.mul(w[l], static_cast<u64>(deg)), F.inv(static_cast<u64>(D.sizes[l]) % p));
    std::vector<Cyclotomic> row(r);
    for (int l = 0; l < r; ++l) {
      int g = D.reps[l];
      int o = K.element_order(g);
      u64 zo = F.pow(z, static_cast<u64>(e / o));
      std::vector<Rational> by_power(e);
      int total = 0;
      for (int k = 0; k < o; ++k) {
        u64 acc = 0;
        int gt = 0;
        for (int t = 0; t < o; ++t) {
          u64 root = F.pow(zo, static_cast<u64>((static_cast<std::int64_t>(o) * o - static_cast<std::int64_t>(t) * k) % o));
          acc = F.add(acc, F.mul(chi[K.class_of(gt)], root));
          gt = K.mul(gt, g);
        }
        u64 mk = F.mul(acc, F.inv(static_cast<u64>(o) % p));
        if (mk > static_cast<u64>(deg)) return std::nullopt;
        total += static_cast<int>(mk);
        by_power[static_cast<std::size_t>(k) * (e / o)] = Rational(static_cast<std::int64_t>(mk));
      }
      if (total != deg) return std::nullopt;
      row[l] = Cyclotomic::from_powers(e, by_power);
    }
    T.degrees.push_back(deg);
    T.values.push_back(std::move(row));
  }
  return T;
}

bool lex_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t l = 0; l < a.size(); ++l) {
    const auto& x = a[l].coefficients();
    const auto& y = b[l].coefficients();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (x[i] != y[i]) return x[i] < y[i];
    }
  }
  return false;
}

void verify_orthogonality(const CharacterTable& T) {
  const int r = static_cast<int>(T.class_reps.size());
  if (T.size() != r) throw InvariantError("character table: number of characters differs from number of classes");
  std::int64_t sq = 0;
  for (int d : T.degrees) sq += static_cast<std::int64_t>(d) * d;
  if (sq != T.group_order) throw InvariantError("character table: sum of squared degrees differs from |K|");
  std::vector<std::vector<Cyclotomic>> conj(r);
  for (int i = 0; i < r; ++i) {
    for (int l = 0; l < r; ++l) conj[i].push_back(T.values[i][l].conj());
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      Cyclotomic s(Rational(0), T.conductor);
      for (int l = 0; l < r; ++l) s += T.values[i][l] * conj[j][l] * Rational(T.class_sizes[l]);
      Cyclotomic want(Rational(i == j ? T.group_order : 0), T.conductor);
      if (s != want) throw InvariantError("character table: orthogonality fails");
    }
  }
}

// Degree, then the trivial character first, then values.
CharacterTable canonical_order(CharacterTable T) {
  std::vector<int> order(T.size());
  std::iota(order.begin(), order.end(), 0);
  auto trivial = [&](int i) {
    for (const auto& v : T.values[i]) {
      if (v != Cyclotomic(Rational(1), T.conductor)) return false;
    }
    return true;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
    bool ta = trivial(a), tb = trivial(b);
    if (ta != tb) return ta;
    return lex_less(T.values[a], T.values[b]);
  });
  CharacterTable S = T;
  S.degrees.clear();
  S.values.clear();
  for (int i : order) {
    S.degrees.push_back(T.degrees[i]);
    S.values.push_back(std::move(T.values[i]));
  }
  return S;
}

// chi_k(g) = zeta_e^(sum_i k_i g_i e / n_i) against the invariant factors.
CharacterTable abelian_table(const FiniteGroup& K) {
  const int n = K.order();
  const std::int64_t e = K.exponent();
  auto A = abelian_structure(K, whole_group(K));
  CharacterTable T;
  T.group_order = n;
  T.conductor = e;
  for (const auto& c : K.classes()) {
    T.class_reps.push_back(c.representative);
    T.class_sizes.push_back(1);
  }
  T.class_of.resize(n);
  for (int g = 0; g < n; ++g) T.class_of[g] = K.class_of(g);
  std::vector<Cyclotomic> powers(e);
  for (std::int64_t k = 0; k < e; ++k) powers[k] = Cyclotomic::zeta(e, k);
  for (int idx = 0; idx < n; ++idx) {
    const auto& k = A.coords[A.by_index[idx]];
    std::vector<Cyclotomic> row;
    row.reserve(n);
    for (int g : T.class_reps) {
      std::int64_t x = 0;
      for (int i = 0; i < A.rank(); ++i) x += static_cast<std::int64_t>(k[i]) * A.coords[g][i] * (e / A.factors[i]);
      row.push_back(powers[mod64(x, e)]);
    }
    T.degrees.push_back(1);
    T.values.push_back(std::move(row));
  }
  return T;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& K, int bound) {
  if (K.order() > bound) throw BoundError("character_table: group order " + std::to_string(K.order()) + " exceeds bound " + std::to_string(bound));
  if (K.is_abelian()) return canonical_order(abelian_table(K));
  ClassData D = class_data(K);
  const u64 e = static_cast<u64>(K.exponent());
  u64 start = std::max<u64>(2 * static_cast<u64>(K.order()) + 1, 50);
  u64 p = ((start - 1) / e + 1) * e + 1;
  for (int attempt = 0; attempt < 12; ++attempt, p += e) {
    while (!is_prime(p)) p += e;
    auto T = dixon_at_prime(K, D, p);
    if (!T) continue;
    CharacterTable S = canonical_order(std::move(*T));
    verify_orthogonality(S);
    return S;
  }
  throw InvariantError("character_table: eigenvector splitting failed for every tried prime");
}

FiniteGroup twisted_extension(const FiniteGroup& K, const Cochain& beta) {
  const int n = K.order();
  Cochain b = beta.reduced();
  const std::int64_t m = b.modulus();
  const int N = n * static_cast<int>(m);
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  for (int X = 0; X < N; ++X) {
    int x = X % n, s = X / n;
    for (int Y = 0; Y < N; ++Y) {
      int y = Y % n, t = Y / n;
      int u = static_cast<int>(mod64(s + t + b.num(x, y), m));
      table[static_cast<std::size_t>(X) * N + Y] = K.mul(x, y) + n * u;
    }
  }
  try {
    return FiniteGroup::from_table(N, std::move(table), {}, {}, "extension");
  } catch (const PreconditionError&) {
    throw PreconditionError("twisted_extension: beta is not a normalized 2-cocycle");
  }
}

ProjectiveCharacterTable projective_character_table(const FiniteGroup& K, const Cochain& beta, int bound) {
  const int n = K.order();
  ProjectiveCharacterTable P;
  P.group_order = n;
  P.cocycle = beta;
  if (beta.is_zero()) {
    CharacterTable T = character_table(K, bound);
    P.conductor = T.conductor;
    P.degrees = T.degrees;
    for (int i = 0; i < T.size(); ++i) {
      std::vector<Cyclotomic> row(n);
      for (int g = 0; g < n; ++g) row[g] = T.value(i, g);
      P.values.push_back(std::move(row));
    }
    return P;
  }
  for (int x = 0; x < n; ++x) {
    if (beta.num(0, x) % beta.modulus() != 0 || beta.num(x, 0) % beta.modulus() != 0) {
      throw PreconditionError("projective_character_table: cocycle is not normalized");
    }
  }
  const std::int64_t m = beta.reduced().modulus();
  if (static_cast<std::int64_t>(n) * m > bound) throw BoundError("projective_character_table: extension exceeds bound");
  FiniteGroup Kt = twisted_extension(K, beta);
  CharacterTable T = character_table(Kt, bound);
  P.conductor = T.conductor;
  const Cyclotomic zm = Cyclotomic::zeta(m, 1);
  std::int64_t sq = 0;
  for (int i = 0; i < T.size(); ++i) {
    const int d = T.degrees[i];
    if (T.value(i, n) != zm * Rational(d)) continue;
    std::vector<Cyclotomic> row(n);
    for (int g = 0; g < n; ++g) row[g] = T.value(i, g);
    P.degrees.push_back(d);
    P.values.push_back(std::move(row));
    sq += static_cast<std::int64_t>(d) * d;
  }
  if (sq != n) throw InvariantError("projective_character_table: sum of squared degrees differs from |K|");
  return P;
}

}  // namespace twistkit
