#include "twistkit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace twistkit {

namespace {

using Key = std::vector<int>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : k) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
    return h;
  }
};

// Enumerates the group generated by gens inside some ambient monoid of keys.
FiniteGroup closure_group(const Key& identity, const std::vector<Key>& gens, const std::vector<std::string>& gen_names,
                          const std::function<Key(const Key&, const Key&)>& mul,
                          const std::function<std::string(const Key&)>& namer, int bound, const std::string& label) {
  std::vector<Key> elems{identity};
  std::unordered_map<Key, int, KeyHash> index{{identity, 0}};
  std::vector<int> parent{-1}, pgen{-1};
  std::vector<std::vector<int>> right;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<int> row(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Key y = mul(elems[i], gens[s]);
      auto it = index.find(y);
      if (it == index.end()) {
        int id = static_cast<int>(elems.size());
        if (id >= bound) throw BoundError("group order exceeds bound " + std::to_string(bound) + " (" + label + ")");
        index.emplace(y, id);
        elems.push_back(y);
        parent.push_back(static_cast<int>(i));
        pgen.push_back(static_cast<int>(s));
        row[s] = id;
      } else {
        row[s] = it->second;
      }
    }
    right.push_back(std::move(row));
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    table[static_cast<std::size_t>(x) * n] = x;
    for (int y = 1; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = right[table[static_cast<std::size_t>(x) * n + parent[y]]][pgen[y]];
    }
  }
  std::vector<NamedGenerator> named;
  for (std::size_t s = 0; s < gens.size(); ++s) named.push_back({gen_names[s], index.at(gens[s])});
  std::vector<std::string> names;
  if (namer) {
    for (const auto& k : elems) names.push_back(namer(k));
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(named), std::move(names), label);
}

std::string cycle_notation(const Key& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ",";
      first = false;
      out += std::to_string(j + 1);
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Key compose(const Key& x, const Key& y) {
  // apply x first, then y
  Key r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

Key cycle_perm(int degree, const std::vector<int>& cycle) {
  Key p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<NamedGenerator> merged_generators(const FiniteGroup& G, const FiniteGroup& H,
                                              const std::function<int(int)>& embed_g,
                                              const std::function<int(int)>& embed_h) {
  std::vector<NamedGenerator> out;
  for (const auto& g : G.generators()) out.push_back({g.name, embed_g(g.element)});
  for (const auto& h : H.generators()) {
    std::string nm = h.name;
    bool clash = true;
    while (clash) {
      clash = false;
      for (const auto& o : out) {
        if (o.name == nm) clash = true;
      }
      if (clash) nm += "'";
    }
    out.push_back({nm, embed_h(h.element)});
  }
  return out;
}

}  // namespace

FiniteGroup abelian_group(const std::vector<int>& factors) {
  int n = 1;
  for (int f : factors) {
    if (f < 1) throw PreconditionError("abelian factors must be positive");
    n *= f;
    if (n > kDefaultGroupBound * 64) throw BoundError("abelian group too large");
  }
  std::vector<int> fs;
  for (int f : factors) {
    if (f > 1) fs.push_back(f);
  }
  const int r = static_cast<int>(fs.size());
  auto decode = [&](int idx) {
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) {
      c[i] = idx % fs[i];
      idx /= fs[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = r - 1; i >= 0; --i) idx = idx * fs[i] + c[i];
    return idx;
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto cx = decode(x);
    for (int y = 0; y < n; ++y) {
      auto cy = decode(y);
      for (int i = 0; i < r; ++i) cy[i] = (cx[i] + cy[i]) % fs[i];
      table[static_cast<std::size_t>(x) * n + y] = encode(cy);
    }
  }
  std::vector<NamedGenerator> gens;
  int stride = 1;
  for (int i = 0; i < r; ++i) {
    gens.push_back({std::string(1, static_cast<char>('a' + i)), stride});
    stride *= fs[i];
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(gens), {}, "abelian " + join_ints(factors));
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup G = abelian_group({n});
  G.set_label("cyclic " + std::to_string(n));
  return G;
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw PreconditionError("dihedral: n must be positive");
  const int N = 2 * n;
  if (N > kDefaultGroupBound) throw BoundError("dihedral group too large");
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  // element r^i s^j at index i + n j
  for (int x = 0; x < N; ++x) {
    int i1 = x % n, j1 = x / n;
    for (int y = 0; y < N; ++y) {
      int i2 = y % n, j2 = y / n;
      int i = ((i1 + (j1 ? -i2 : i2)) % n + n) % n;
      int j = (j1 + j2) % 2;
      table[static_cast<std::size_t>(x) * N + y] = i + n * j;
    }
  }
  std::vector<NamedGenerator> gens{{"r", n > 1 ? 1 : 0}, {"s", n}};
  return FiniteGroup::from_table(N, std::move(table), std::move(gens), {}, "dihedral " + std::to_string(n));
}

FiniteGroup metacyclic_group(int n, int m, int k, int t, const std::string& a, const std::string& b) {
  if (n < 1 || m < 1) throw PreconditionError("metacyclic: bad parameters");
  const int N = n * m;
  if (N > kDefaultGroupBound) throw BoundError("metacyclic group too large");
  std::vector<int> kp(m + 1, 1);
  for (int j = 1; j <= m; ++j) kp[j] = static_cast<int>((static_cast<long long>(kp[j - 1]) * k) % n);
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  for (int x = 0; x < N; ++x) {
    int i1 = x % n, j1 = x / n;
    for (int y = 0; y < N; ++y) {
      int i2 = y % n, j2 = y / n;
      long long i = i1 + static_cast<long long>(kp[j1]) * i2 + (j1 + j2 >= m ? t : 0);
      int ii = static_cast<int>(((i % n) + n) % n);
      table[static_cast<std::size_t>(x) * N + y] = ii + n * ((j1 + j2) % m);
    }
  }
  std::vector<NamedGenerator> gens{{a, n > 1 ? 1 : 0}, {b, m > 1 ? n : 0}};
  std::ostringstream label;
  label << "metacyclic " << n << " " << m << " " << k << " " << t;
  return FiniteGroup::from_table(N, std::move(table), std::move(gens), {}, label.str());
}

FiniteGroup quaternion_group() {
  FiniteGroup G = metacyclic_group(4, 2, 3, 2, "i", "j");
  G.set_label("quaternion");
  return G;
}

FiniteGroup dicyclic_group(int n) {
  FiniteGroup G = metacyclic_group(2 * n, 2, 2 * n - 1, n);
  G.set_label("dicyclic " + std::to_string(n));
  return G;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens, int bound) {
  int degree = 0;
  for (const auto& g : gens) degree = std::max(degree, static_cast<int>(g.size()));
  std::vector<Key> keys;
  std::vector<std::string> names;
  for (const auto& g : gens) {
    Key p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<char> hit(degree, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] < 0 || g[i] >= static_cast<int>(g.size()) || hit[g[i]]) {
        throw PreconditionError("generator is not a permutation");
      }
      hit[g[i]] = 1;
      p[i] = g[i];
    }
    std::string nm = cycle_notation(p);
    if (nm == "e" || std::find(names.begin(), names.end(), nm) != names.end()) continue;
    keys.push_back(p);
    names.push_back(nm);
  }
  Key id(degree);
  std::iota(id.begin(), id.end(), 0);
  return closure_group(id, keys, names, compose, cycle_notation, bound, "perm");
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw PreconditionError("sym: n must be positive");
  if (n > 7) throw BoundError("sym: n > 7 not supported");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(cycle_perm(n, cyc));
    gens.push_back(cycle_perm(n, {0, 1}));
  }
  FiniteGroup G = permutation_group(gens, 6000);
  G.set_label("sym " + std::to_string(n));
  return G;
}

FiniteGroup alternating_group(int n) {
  if (n < 1) throw PreconditionError("alt: n must be positive");
  if (n > 7) throw BoundError("alt: n > 7 not supported");
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {0, 1, k}));
  FiniteGroup G = permutation_group(gens, 6000);
  G.set_label("alt " + std::to_string(n));
  return G;
}

FiniteGroup special_linear_group(int n, int q, int bound) {
  bool prime = q >= 2;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) prime = false;
  }
  if (!prime) throw BoundError("sl: q must be prime");
  if (n != 2 && n != 3) throw BoundError("sl: only n = 2 or 3 supported");
  long long order = 1;
  long long qp = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) order *= q;
  for (int i = 1; i <= n; ++i) {
    qp *= q;
    if (i >= 2) order *= (qp - 1);
  }
  if (order > bound) throw BoundError("sl " + std::to_string(n) + " " + std::to_string(q) + " has order " +
                                      std::to_string(order) + " above bound " + std::to_string(bound));
  auto mul = [n, q](const Key& x, const Key& y) {
    Key r(n * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < n; ++k) s += static_cast<long long>(x[i * n + k]) * y[k * n + j];
        r[i * n + j] = static_cast<int>(s % q);
      }
    }
    return r;
  };
  auto namer = [n](const Key& x) {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        s += std::to_string(x[i * n + j]);
        if (j + 1 < n) s += ",";
      }
      if (i + 1 < n) s += ";";
    }
    return s + "]";
  };
  Key id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  std::vector<Key> gens;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Key e = id;
      e[i * n + j] = 1;
      gens.push_back(e);
      names.push_back(namer(e));
    }
  }
  return closure_group(id, gens, names, mul, namer, bound + 1,
                       "sl " + std::to_string(n) + " " + std::to_string(q));
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const int a = G.order(), b = H.order(), n = a * b;
  if (n > kDefaultGroupBound * 4) throw BoundError("direct product too large");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = G.mul(x / b, y / b) * b + H.mul(x % b, y % b);
    }
  }
  auto gens = merged_generators(
      G, H, [b](int g) { return g * b; }, [](int h) { return h; });
  std::vector<std::string> names;
  if (gens.empty()) {
    for (int x = 0; x < n; ++x) names.push_back("(" + G.name(x / b) + "," + H.name(x % b) + ")");
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(gens), std::move(names),
                                 "(" + G.label() + ") x (" + H.label() + ")");
}

FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& K, const std::vector<std::vector<int>>& action) {
  const int a = N.order(), b = K.order(), n = a * b;
  if (static_cast<int>(action.size()) != b) throw PreconditionError("semidirect: need one automorphism per element");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    int n1 = x % a, k1 = x / a;
    for (int y = 0; y < n; ++y) {
      int n2 = y % a, k2 = y / a;
      table[static_cast<std::size_t>(x) * n + y] = N.mul(n1, action[k1][n2]) + a * K.mul(k1, k2);
    }
  }
  auto gens = merged_generators(
      N, K, [](int g) { return g; }, [a](int k) { return k * a; });
  return FiniteGroup::from_table(n, std::move(table), std::move(gens), {},
                                 "(" + N.label() + ") x| (" + K.label() + ")");
}

FiniteGroup generalized_dihedral(const std::vector<int>& factors) {
  FiniteGroup A = abelian_group(factors);
  FiniteGroup Z2 = cyclic_group(2);
  std::vector<std::vector<int>> action(2, std::vector<int>(A.order()));
  for (int x = 0; x < A.order(); ++x) {
    action[0][x] = x;
    action[1][x] = A.inv(x);
  }
  // rename the Z2 generator to s
  FiniteGroup G = semidirect_product(A, Z2, action);
  std::vector<NamedGenerator> gens = G.generators();
  gens.back().name = "s";
  FiniteGroup out = FiniteGroup::from_table(G.order(), G.table(), gens, {}, "gdih " + join_ints(factors));
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw PreconditionError("quotient by a non-normal subgroup");
  auto cosets = right_cosets(G, N);
  const int q = static_cast<int>(cosets.size());
  std::vector<int> proj(G.order());
  for (int c = 0; c < q; ++c) {
    for (int x : cosets[c]) proj[x] = c;
  }
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) table[static_cast<std::size_t>(i) * q + j] = proj[G.mul(cosets[i][0], cosets[j][0])];
  }
  std::vector<NamedGenerator> gens;
  for (const auto& g : G.generators()) {
    if (proj[g.element] != 0) gens.push_back({g.name, proj[g.element]});
  }
  QuotientGroup out{FiniteGroup::from_table(q, std::move(table), std::move(gens), {}, G.label() + " / N"),
                    std::move(proj)};
  return out;
}

FiniteGroup abelian_extension(const FiniteGroup& A, const FiniteGroup& Q, const std::vector<std::vector<int>>& right_action,
                              const std::vector<int>& nu) {
  const int a = A.order(), b = Q.order(), n = a * b;
  if (static_cast<int>(right_action.size()) != b || static_cast<int>(nu.size()) != b * b) {
    throw PreconditionError("abelian_extension: wrong data sizes");
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    int a1 = x % a, q1 = x / a;
    for (int y = 0; y < n; ++y) {
      int a2 = y % a, q2 = y / a;
      int v = A.mul(A.mul(right_action[q2][a1], a2), nu[q1 * b + q2]);
      table[static_cast<std::size_t>(x) * n + y] = v + a * Q.mul(q1, q2);
    }
  }
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) names.push_back("(" + A.name(x % a) + "," + Q.name(x / a) + ")");
  return FiniteGroup::from_table(n, std::move(table), {}, std::move(names), "extension");
}

// ---------------------------------------------------------------- catalog

namespace {

FiniteGroup pauli_group() {
  FiniteGroup P = direct_product(cyclic_group(4), dihedral_group(4));
  int z = P.parse_element("a2r2");
  QuotientGroup Q = quotient_group(P, generated_subgroup(P, {z}));
  return Q.group;
}

FiniteGroup z4z2_semidirect_z2() {
  FiniteGroup N = abelian_group({4, 2});
  int a = N.parse_element("a"), b = N.parse_element("b");
  auto phi = extend_homomorphism(N, {a, b}, {N.mul(a, b), b}, N);
  if (!phi) throw InvariantError("catalog: bad automorphism");
  std::vector<std::vector<int>> action{std::vector<int>(N.order()), *phi};
  std::iota(action[0].begin(), action[0].end(), 0);
  return semidirect_product(N, cyclic_group(2), action);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&c](const std::string& name, const std::string& spec, FiniteGroup G) {
    G.set_label(spec);
    c.push_back({name, spec, std::move(G)});
  };
  // ordered to match the standard small-group numbering within each order
  add("1", "abelian 1", abelian_group({1}));
  add("Z2", "cyclic 2", cyclic_group(2));
  add("Z3", "cyclic 3", cyclic_group(3));
  add("Z4", "cyclic 4", cyclic_group(4));
  add("Z2^2", "abelian 2 2", abelian_group({2, 2}));
  add("Z5", "cyclic 5", cyclic_group(5));
  add("D6", "dihedral 3", dihedral_group(3));
  add("Z6", "cyclic 6", cyclic_group(6));
  add("Z7", "cyclic 7", cyclic_group(7));
  add("Z8", "cyclic 8", cyclic_group(8));
  add("Z4xZ2", "abelian 4 2", abelian_group({4, 2}));
  add("D8", "dihedral 4", dihedral_group(4));
  add("Q8", "quaternion", quaternion_group());
  add("Z2^3", "abelian 2 2 2", abelian_group({2, 2, 2}));
  add("Z9", "cyclic 9", cyclic_group(9));
  add("Z3^2", "abelian 3 3", abelian_group({3, 3}));
  add("D10", "dihedral 5", dihedral_group(5));
  add("Z10", "cyclic 10", cyclic_group(10));
  add("Z11", "cyclic 11", cyclic_group(11));
  add("Dic12", "dicyclic 3", dicyclic_group(3));
  add("Z12", "cyclic 12", cyclic_group(12));
  add("A4", "alt 4", alternating_group(4));
  add("D12", "dihedral 6", dihedral_group(6));
  add("Z6xZ2", "abelian 6 2", abelian_group({6, 2}));
  add("Z13", "cyclic 13", cyclic_group(13));
  add("D14", "dihedral 7", dihedral_group(7));
  add("Z14", "cyclic 14", cyclic_group(14));
  add("Z15", "cyclic 15", cyclic_group(15));
  add("Z16", "cyclic 16", cyclic_group(16));
  add("Z4^2", "abelian 4 4", abelian_group({4, 4}));
  add("(Z4xZ2):Z2", "small 16 3", z4z2_semidirect_z2());
  add("Z4:Z4", "metacyclic 4 4 3 0", metacyclic_group(4, 4, 3, 0));
  add("Z8xZ2", "abelian 8 2", abelian_group({8, 2}));
  add("M16", "metacyclic 8 2 5 0", metacyclic_group(8, 2, 5, 0));
  add("D16", "dihedral 8", dihedral_group(8));
  add("SD16", "metacyclic 8 2 3 0", metacyclic_group(8, 2, 3, 0));
  add("Q16", "metacyclic 8 2 7 4", metacyclic_group(8, 2, 7, 4));
  add("Z4xZ2^2", "abelian 4 2 2", abelian_group({4, 2, 2}));
  add("Z2xD8", "small 16 11", direct_product(cyclic_group(2), dihedral_group(4)));
  add("Z2xQ8", "small 16 12", direct_product(cyclic_group(2), quaternion_group()));
  add("Z4oD8", "small 16 13", pauli_group());
  add("Z2^4", "abelian 2 2 2 2", abelian_group({2, 2, 2, 2}));
  return c;
}

std::vector<std::pair<std::string, FiniteGroup>> build_extras() {
  std::vector<std::pair<std::string, FiniteGroup>> e;
  e.emplace_back("S4", symmetric_group(4));
  e.emplace_back("SL(2,3)", special_linear_group(2, 3));
  e.emplace_back("Z2xA4", direct_product(cyclic_group(2), alternating_group(4)));
  e.emplace_back("A5", alternating_group(5));
  e.emplace_back("SL(2,5)", special_linear_group(2, 5));
  e.emplace_back("Z2xA5", direct_product(cyclic_group(2), alternating_group(5)));
  e.emplace_back("S5", symmetric_group(5));
  e.emplace_back("Dih(Z3^2)", generalized_dihedral({3, 3}));
  e.emplace_back("Dih(Z6xZ2)", generalized_dihedral({6, 2}));
  e.emplace_back("Z2xD8xZ2", direct_product(cyclic_group(2), direct_product(cyclic_group(2), dihedral_group(4))));
  return e;
}

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size() || v < -1000000 || v > 1000000) throw ParseError("");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in group spec '" + spec + "'");
  }
}

FiniteGroup read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file " + path);
  int n = 0;
  if (!(in >> n) || n < 1) throw ParseError("table file: bad order");
  if (n > kDefaultGroupBound) throw BoundError("table file: order above bound");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (auto& v : t) {
    if (!(in >> v)) throw ParseError("table file: expected " + std::to_string(n * n) + " entries");
    if (v < 0 || v >= n) throw ParseError("table file: entry out of range");
  }
  try {
    return FiniteGroup::from_table(n, std::move(t), {}, {}, "table " + path);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("table file: ") + e.what());
  }
}

FiniteGroup read_perm_file(const std::string& path, int bound) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open permutation file " + path);
  std::vector<std::vector<std::vector<int>>> gens;  // cycles per generator, 0-based
  int degree = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::string s;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty() || s[0] == '#') continue;
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != '(') throw ParseError("permutation file: expected '(' in " + line);
      std::size_t j = s.find(')', i);
      if (j == std::string::npos) throw ParseError("permutation file: unclosed cycle in " + line);
      std::vector<int> cyc;
      std::stringstream ss(s.substr(i + 1, j - i - 1));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        int v = to_int(tok, line);
        if (v < 1) throw ParseError("permutation points are 1-based");
        cyc.push_back(v - 1);
        degree = std::max(degree, v);
      }
      cycles.push_back(cyc);
      i = j + 1;
    }
    gens.push_back(cycles);
  }
  if (degree > 64) throw BoundError("permutation degree above 64");
  std::vector<std::vector<int>> perms;
  for (const auto& cycles : gens) {
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (used[c[k]]) throw ParseError("permutation file: point repeated within a generator");
        used[c[k]] = 1;
        p[c[k]] = c[(k + 1) % c.size()];
      }
    }
    perms.push_back(p);
  }
  FiniteGroup G = permutation_group(perms, bound + 1);
  if (G.order() > bound) throw BoundError("permutation group above bound");
  G.set_label("perm " + path);
  return G;
}

}  // namespace

const std::vector<CatalogEntry>& small_group_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::string abelian_name(std::vector<int> factors) {
  factors.erase(std::remove(factors.begin(), factors.end(), 1), factors.end());
  if (factors.empty()) return "1";
  std::sort(factors.rbegin(), factors.rend());
  std::string out;
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += "x";
    out += "Z" + std::to_string(factors[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::optional<std::string> identify(const FiniteGroup& G) {
  if (G.is_abelian()) return abelian_name(abelian_structure(G, whole_group(G)).factors);
  if (G.order() <= 16) {
    for (const auto& e : small_group_catalog()) {
      if (e.group.order() == G.order() && is_isomorphic(G, e.group, 512).isomorphic) return e.name;
    }
    return std::nullopt;
  }
  if (G.order() % 2 == 0 && G.order() <= kDefaultGroupBound) {
    FiniteGroup D = dihedral_group(G.order() / 2);
    if (G.order() <= 512 && is_isomorphic(G, D, 512).isomorphic) return "D" + std::to_string(G.order());
  }
  static const auto extras = build_extras();
  for (const auto& [name, H] : extras) {
    if (H.order() == G.order() && G.order() <= 512 && is_isomorphic(G, H, 512).isomorphic) return name;
  }
  return std::nullopt;
}

FiniteGroup build_group(const std::string& spec, int bound) {
  auto t = tokenize(spec);
  if (t.empty()) throw ParseError("empty group spec");
  const std::string& head = t[0];
  auto need = [&](std::size_t n) {
    if (t.size() != n) throw ParseError("group spec '" + spec + "' expects " + std::to_string(n - 1) + " argument(s)");
  };
  auto check = [&](FiniteGroup G) {
    if (G.order() > bound) throw BoundError("group order " + std::to_string(G.order()) + " above bound " + std::to_string(bound));
    return G;
  };
  auto guard = [&](long long order) {
    if (order > bound) throw BoundError("group order " + std::to_string(order) + " above bound " + std::to_string(bound));
  };
  FiniteGroup G;
  if (head == "dihedral") {
    need(2);
    int n = to_int(t[1], spec);
    if (n < 1) throw ParseError("dihedral needs n >= 1");
    guard(2LL * n);
    G = dihedral_group(n);
  } else if (head == "quaternion" || head == "quaternion8") {
    need(1);
    G = quaternion_group();
  } else if (head == "sym") {
    need(2);
    int n = to_int(t[1], spec);
    if (n < 1) throw ParseError("sym needs n >= 1");
    long long f = 1;
    for (int i = 2; i <= n && f <= bound; ++i) f *= i;
    guard(f);
    G = symmetric_group(n);
  } else if (head == "alt") {
    need(2);
    int n = to_int(t[1], spec);
    if (n < 1) throw ParseError("alt needs n >= 1");
    long long f = 1;
    for (int i = 3; i <= n && f <= bound; ++i) f *= i;
    guard(f);
    G = alternating_group(n);
  } else if (head == "sl") {
    need(3);
    G = special_linear_group(to_int(t[1], spec), to_int(t[2], spec), bound);
  } else if (head == "abelian") {
    if (t.size() < 2) throw ParseError("abelian needs at least one factor");
    std::vector<int> f;
    long long n = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
      int v = to_int(t[i], spec);
      if (v < 1) throw ParseError("abelian factors must be positive");
      f.push_back(v);
      n *= v;
      guard(n);
    }
    G = abelian_group(f);
  } else if (head == "cyclic") {
    need(2);
    int n = to_int(t[1], spec);
    if (n < 1) throw ParseError("cyclic needs n >= 1");
    guard(n);
    G = cyclic_group(n);
  } else if (head == "dicyclic") {
    need(2);
    int n = to_int(t[1], spec);
    if (n < 1) throw ParseError("dicyclic needs n >= 1");
    guard(4LL * n);
    G = dicyclic_group(n);
  } else if (head == "metacyclic") {
    need(5);
    int n = to_int(t[1], spec), m = to_int(t[2], spec);
    if (n < 1 || m < 1) throw ParseError("metacyclic needs positive n, m");
    guard(1LL * n * m);
    try {
      G = metacyclic_group(n, m, to_int(t[3], spec), to_int(t[4], spec));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("metacyclic parameters do not define a group: ") + e.what());
    }
  } else if (head == "gdih") {
    std::vector<int> f;
    long long n = 2;
    for (std::size_t i = 1; i < t.size(); ++i) {
      int v = to_int(t[i], spec);
      if (v < 1) throw ParseError("gdih factors must be positive");
      f.push_back(v);
      n *= v;
      guard(n);
    }
    G = generalized_dihedral(f);
  } else if (head == "small") {
    need(3);
    int order = to_int(t[1], spec), k = to_int(t[2], spec);
    int seen = 0;
    for (const auto& e : small_group_catalog()) {
      if (e.group.order() == order && ++seen == k) G = e.group;
    }
    if (seen < k || k < 1) throw ParseError("no catalog group 'small " + t[1] + " " + t[2] + "'");
  } else if (head == "table") {
    need(2);
    G = read_table_file(t[1]);
  } else if (head == "perm") {
    need(2);
    G = read_perm_file(t[1], bound);
  } else {
    bool found = false;
    for (const auto& e : small_group_catalog()) {
      if (e.name == spec) {
        G = e.group;
        found = true;
      }
    }
    if (!found) throw ParseError("unknown group spec '" + spec + "'");
    return check(G);
  }
  G = check(std::move(G));
  if (head != "table" && head != "perm" && head != "small") {
    std::string canon;
    for (std::size_t i = 0; i < t.size(); ++i) canon += (i ? " " : "") + t[i];
    if (head == "quaternion8") canon = "quaternion";
    G.set_label(canon);
  }
  return G;
}

}  // namespace twistkit
