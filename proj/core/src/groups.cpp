#include "twistkit/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace twistkit {

namespace {

std::string compress_word(const std::vector<int>& word, const std::vector<NamedGenerator>& gens) {
  if (word.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    out += gens[word[i]].name;
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

bool check_associative(int n, const std::vector<int>& t, const std::vector<int>& right_gens) {
  auto m = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  if (n <= 512) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int ab = m(a, b);
        for (int c = 0; c < n; ++c) {
          if (m(ab, c) != m(a, m(b, c))) return false;
        }
      }
    }
    return true;
  }
  // Light's test: the elements c with (ab)c = a(bc) for all a, b form a submagma.
  for (int c : right_gens) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (m(m(a, b), c) != m(a, m(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup() : n_(1), table_{0}, inv_{0} {
  names_ = {"e"};
  finish();
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table, std::vector<NamedGenerator> gens,
                                    std::vector<std::string> names, std::string label) {
  const int n = order;
  if (n < 1) throw PreconditionError("group order must be positive");
  if (table.size() != static_cast<std::size_t>(n) * n) throw PreconditionError("table has wrong size");
  for (int v : table) {
    if (v < 0 || v >= n) throw PreconditionError("table entry out of range");
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw PreconditionError("table has no identity element");
  if (e != 0) {
    // swap labels 0 and e
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[0], p[e]);
    std::vector<int> t2(table.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) t2[static_cast<std::size_t>(p[a]) * n + p[b]] = p[at(a, b)];
    }
    table.swap(t2);
    for (auto& g : gens) g.element = p[g.element];
    if (!names.empty()) std::swap(names[0], names[e]);
  }
  // Latin square
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = table[static_cast<std::size_t>(a) * n + b];
      if (seen[v]) throw PreconditionError("table row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = table[static_cast<std::size_t>(b) * n + a];
      if (seen[v]) throw PreconditionError("table column is not a permutation");
      seen[v] = 1;
    }
  }
  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);
  G.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (G.mul(a, b) == 0) {
        if (G.mul(b, a) != 0) throw PreconditionError("left and right inverses differ");
        G.inv_[a] = b;
        break;
      }
    }
  }
  std::vector<int> light_gens;
  for (const auto& g : gens) light_gens.push_back(g.element);
  if (n > 512) {
    // make sure the supplied generators generate before relying on them
    std::vector<char> in(n, 0);
    std::deque<int> q{0};
    in[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int s : light_gens) {
        int y = G.mul(x, s);
        if (!in[y]) {
          in[y] = 1;
          ++count;
          q.push_back(y);
        }
      }
    }
    if (count != n) {
      light_gens.resize(n);
      std::iota(light_gens.begin(), light_gens.end(), 0);
    }
  }
  if (!check_associative(n, G.table_, light_gens)) throw PreconditionError("table is not associative");

  G.gens_ = std::move(gens);
  G.label_ = std::move(label);
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != n) throw PreconditionError("wrong number of element names");
    G.names_ = std::move(names);
  } else {
    G.names_.assign(n, "");
    if (!G.gens_.empty()) {
      std::vector<std::vector<int>> words(n);
      std::vector<char> done(n, 0);
      done[0] = 1;
      std::deque<int> q{0};
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < G.gens_.size(); ++i) {
          int y = G.mul(x, G.gens_[i].element);
          if (done[y]) continue;
          done[y] = 1;
          words[y] = words[x];
          words[y].push_back(static_cast<int>(i));
          q.push_back(y);
        }
      }
      for (int a = 0; a < n; ++a) {
        G.names_[a] = done[a] ? compress_word(words[a], G.gens_) : "g" + std::to_string(a);
      }
    } else {
      for (int a = 0; a < n; ++a) G.names_[a] = a == 0 ? "e" : "g" + std::to_string(a);
    }
  }
  std::unordered_set<std::string> uniq(G.names_.begin(), G.names_.end());
  if (static_cast<int>(uniq.size()) != n) {
    for (int a = 0; a < n; ++a) G.names_[a] = a == 0 ? "e" : "g" + std::to_string(a);
  }
  G.finish();
  return G;
}

void FiniteGroup::finish() {
  const int n = n_;
  orders_.assign(n, 1);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a) {
    for (int b = a + 1; b < n && abelian_; ++b) abelian_ = mul(a, b) == mul(b, a);
  }
  classes_.clear();
  class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    ConjugacyClass c;
    c.representative = a;
    int idx = static_cast<int>(classes_.size());
    for (int g = 0; g < n; ++g) {
      int y = conj(g, a);
      if (class_of_[y] < 0) {
        class_of_[y] = idx;
        c.elements.push_back(y);
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    classes_.push_back(std::move(c));
  }
}

int FiniteGroup::pow(int a, std::int64_t k) const {
  std::int64_t o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  int result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::find(const std::string& name) const {
  for (int a = 0; a < n_; ++a) {
    if (names_[a] == name) return a;
  }
  return -1;
}

int FiniteGroup::parse_element(const std::string& text) const {
  int direct = find(text);
  if (direct >= 0) return direct;
  if (text == "e" || text == "1") return 0;
  int acc = 0;
  std::size_t i = 0;
  if (text.empty()) throw ParseError("empty element word");
  while (i < text.size()) {
    // longest generator-name match
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const auto& nm = gens_[g].name;
      if (nm.size() > best_len && text.compare(i, nm.size(), nm) == 0) {
        best = static_cast<int>(g);
        best_len = nm.size();
      }
    }
    if (best < 0) throw ParseError("cannot parse element word '" + text + "' in group " + label_);
    i += best_len;
    if (i < text.size() && text[i] == '^') ++i;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
      neg = true;
      ++i;
    }
    std::int64_t e = 0;
    bool digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i] - '0');
      if (e > 1000000) throw ParseError("exponent too large in '" + text + "'");
      digits = true;
      ++i;
    }
    if (!digits) e = 1;
    if (neg) e = -e;
    acc = mul(acc, pow(gens_[best].element, e));
  }
  return acc;
}

// ---------------------------------------------------------------- subgroups

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
  return a.elements < b.elements;
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup H;
  H.member.assign(G.order(), 0);
  for (int x : elements) {
    if (x < 0 || x >= G.order()) throw PreconditionError("subgroup element out of range");
    H.member[x] = 1;
  }
  if (elements.empty() || !H.member[0]) throw PreconditionError("subgroup must contain the identity");
  for (int a : elements) {
    if (!H.member[G.inv(a)]) throw PreconditionError("subset is not closed under inverses");
    for (int b : elements) {
      if (!H.member[G.mul(a, b)]) throw PreconditionError("subset is not closed under multiplication");
    }
  }
  H.elements = std::move(elements);
  return H;
}

Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
  Subgroup H;
  H.member.assign(G.order(), 0);
  H.member[0] = 1;
  std::vector<int> elems{0};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    for (int s : gens) {
      int y = G.mul(x, s);
      if (!H.member[y]) {
        H.member[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  H.elements = std::move(elems);
  return H;
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.elements.resize(G.order());
  std::iota(H.elements.begin(), H.elements.end(), 0);
  H.member.assign(G.order(), 1);
  return H;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup H;
  H.elements = {0};
  H.member.assign(G.order(), 0);
  H.member[0] = 1;
  return H;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& G) { return G.classes(); }

Subgroup centralizer(const FiniteGroup& G, int a) {
  std::vector<int> elems;
  for (int g = 0; g < G.order(); ++g) {
    if (G.mul(g, a) == G.mul(a, g)) elems.push_back(g);
  }
  Subgroup H;
  H.member.assign(G.order(), 0);
  for (int x : elems) H.member[x] = 1;
  H.elements = std::move(elems);
  return H;
}

Subgroup center(const FiniteGroup& G) {
  std::vector<int> elems;
  for (const auto& c : G.classes()) {
    if (c.elements.size() == 1) elems.push_back(c.representative);
  }
  Subgroup H;
  H.member.assign(G.order(), 0);
  for (int x : elems) H.member[x] = 1;
  std::sort(elems.begin(), elems.end());
  H.elements = std::move(elems);
  return H;
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<int> comms;
  for (int a = 0; a < G.order(); ++a) {
    for (int b = 0; b < G.order(); ++b) {
      int c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return generated_subgroup(G, comms);
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (int g = 0; g < G.order(); ++g) {
    for (int h : H.elements) {
      if (!H.contains(G.conj(g, h))) return false;
    }
  }
  return true;
}

bool is_abelian(const FiniteGroup& G, const Subgroup& H) {
  for (std::size_t i = 0; i < H.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < H.elements.size(); ++j) {
      int a = H.elements[i], b = H.elements[j];
      if (G.mul(a, b) != G.mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<Subgroup> normal_abelian_subgroups(const FiniteGroup& G) {
  const auto& classes = G.classes();
  std::set<std::vector<int>> found;
  std::vector<Subgroup> queue{trivial_subgroup(G)};
  found.insert(queue[0].elements);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup N = queue[i];
    for (const auto& c : classes) {
      if (N.contains(c.representative)) continue;
      bool commute = true;
      for (int x : c.elements) {
        for (int y : c.elements) {
          if (G.mul(x, y) != G.mul(y, x)) {
            commute = false;
            break;
          }
        }
        if (!commute) break;
        for (int y : N.elements) {
          if (G.mul(x, y) != G.mul(y, x)) {
            commute = false;
            break;
          }
        }
        if (!commute) break;
      }
      if (!commute) continue;
      std::vector<int> gens = N.elements;
      gens.insert(gens.end(), c.elements.begin(), c.elements.end());
      Subgroup M = generated_subgroup(G, gens);
      if (found.insert(M.elements).second) queue.push_back(std::move(M));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  if (G.order() > 64) throw BoundError("full subgroup lattice only supported up to order 64");
  std::set<std::vector<int>> found;
  std::vector<Subgroup> queue{trivial_subgroup(G)};
  found.insert(queue[0].elements);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup S = queue[i];
    for (int g = 0; g < G.order(); ++g) {
      if (S.contains(g)) continue;
      std::vector<int> gens = S.elements;
      gens.push_back(g);
      Subgroup T = generated_subgroup(G, gens);
      if (found.insert(T.elements).second) queue.push_back(std::move(T));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<int>> right_cosets(const FiniteGroup& G, const Subgroup& H) {
  std::vector<char> done(G.order(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < G.order(); ++x) {
    if (done[x]) continue;
    std::vector<int> c;
    for (int h : H.elements) {
      int y = G.mul(h, x);
      done[y] = 1;
      c.push_back(y);
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- abelian structure

int AbelianGroupData::order() const {
  int o = 1;
  for (int f : factors) o *= f;
  return o;
}

int AbelianGroupData::index_of(const std::vector<int>& c) const {
  int idx = 0;
  for (int i = rank() - 1; i >= 0; --i) idx = idx * factors[i] + ((c[i] % factors[i]) + factors[i]) % factors[i];
  return idx;
}

namespace {

int order_mod(const FiniteGroup& G, int x, const std::vector<char>& S) {
  int k = 1, y = x;
  while (!S[y]) {
    y = G.mul(y, x);
    ++k;
  }
  return k;
}

// Basis of the p-group P modulo its subgroup S, as (element, order mod S) pairs.
std::vector<int> pgroup_basis(const FiniteGroup& G, const std::vector<int>& P, const std::vector<char>& S) {
  int best = -1, best_order = 1;
  for (int x : P) {
    int o = order_mod(G, x, S);
    if (o > best_order) {
      best_order = o;
      best = x;
    }
  }
  if (best < 0) return {};
  std::vector<int> gens;
  for (int x = 0; x < G.order(); ++x) {
    if (S[x]) gens.push_back(x);
  }
  gens.push_back(best);
  Subgroup S2 = generated_subgroup(G, gens);
  std::vector<int> rest = pgroup_basis(G, P, S2.member);
  std::vector<int> out{best};
  for (int y : rest) {
    int o = order_mod(G, y, S2.member);
    int yo = G.pow(y, o);
    int t = -1;
    for (int k = 0; k < best_order; ++k) {
      if (S[G.mul(yo, G.inv(G.pow(best, k)))]) {
        t = k;
        break;
      }
    }
    if (t < 0 || t % o != 0) throw InvariantError("abelian basis lifting failed");
    out.push_back(G.mul(y, G.inv(G.pow(best, t / o))));
  }
  return out;
}

}  // namespace

AbelianGroupData abelian_structure(const FiniteGroup& G, const Subgroup& H) {
  if (!is_abelian(G, H)) throw PreconditionError("abelian_structure: subgroup is not abelian");
  AbelianGroupData D;
  int n = H.order();
  std::vector<int> primes;
  for (int p = 2, m = n; m > 1; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  std::vector<std::vector<int>> per_prime;  // elements sorted by decreasing order
  std::vector<char> triv(G.order(), 0);
  triv[0] = 1;
  for (int p : primes) {
    std::vector<int> P;
    for (int x : H.elements) {
      int o = G.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) P.push_back(x);
    }
    std::vector<int> b = pgroup_basis(G, P, triv);
    std::stable_sort(b.begin(), b.end(),
                     [&](int x, int y) { return G.element_order(x) > G.element_order(y); });
    per_prime.push_back(std::move(b));
  }
  std::size_t r = 0;
  for (const auto& b : per_prime) r = std::max(r, b.size());
  std::vector<int> gens, factors;
  for (std::size_t j = 0; j < r; ++j) {
    int g = 0, f = 1;
    for (const auto& b : per_prime) {
      if (j < b.size()) {
        g = G.mul(g, b[j]);
        f *= G.element_order(b[j]);
      }
    }
    gens.push_back(g);
    factors.push_back(f);
  }
  std::reverse(gens.begin(), gens.end());
  std::reverse(factors.begin(), factors.end());
  D.factors = factors;
  D.generators = gens;
  D.coords.assign(G.order(), {});
  D.index.assign(G.order(), -1);
  D.by_index.assign(n, -1);
  std::vector<int> c(r, 0);
  for (int idx = 0; idx < n; ++idx) {
    int rem = idx, g = 0;
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = rem % factors[i];
      rem /= factors[i];
      g = G.mul(g, G.pow(gens[i], c[i]));
    }
    if (D.index[g] >= 0) throw InvariantError("abelian basis is not independent");
    D.coords[g] = c;
    D.index[g] = idx;
    D.by_index[idx] = g;
  }
  for (int x : H.elements) {
    if (D.index[x] < 0) throw InvariantError("abelian basis does not generate");
  }
  return D;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H, std::vector<int>* embedding) {
  const int n = H.order();
  std::vector<int> local(G.order(), -1);
  for (int i = 0; i < n; ++i) local[H.elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = local[G.mul(H.elements[i], H.elements[j])];
      if (v < 0) throw PreconditionError("subgroup_as_group: subset not closed");
      table[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  std::vector<std::string> names;
  for (int x : H.elements) names.push_back(G.name(x));
  if (embedding != nullptr) *embedding = H.elements;
  return FiniteGroup::from_table(n, std::move(table), {}, std::move(names));
}

std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& G, const std::vector<int>& gens,
                                                    const std::vector<int>& images, const FiniteGroup& H) {
  if (gens.size() != images.size()) throw PreconditionError("generator/image count mismatch");
  std::vector<int> phi(G.order(), -1);
  phi[0] = 0;
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = G.mul(x, gens[k]);
      int img = H.mul(phi[x], images[k]);
      if (phi[y] < 0) {
        phi[y] = img;
        order.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

std::vector<int> small_generating_set(const FiniteGroup& G) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(G);
  while (cur.order() < G.order()) {
    int best = -1, best_size = 0;
    for (int g = 0; g < G.order(); ++g) {
      if (cur.contains(g)) continue;
      std::vector<int> trial = gens;
      trial.push_back(g);
      int sz = generated_subgroup(G, trial).order();
      if (sz > best_size) {
        best_size = sz;
        best = g;
      }
      if (sz == G.order()) break;
    }
    gens.push_back(best);
    cur = generated_subgroup(G, gens);
  }
  return gens;
}

namespace {

struct GroupInvariants {
  std::vector<std::pair<int, int>> order_class;  // sorted (element order, class size)
  int center = 0;
  int derived = 0;
  int classes = 0;
  bool operator==(const GroupInvariants& o) const {
    return order_class == o.order_class && center == o.center && derived == o.derived && classes == o.classes;
  }
};

GroupInvariants invariants(const FiniteGroup& G) {
  GroupInvariants inv;
  for (int a = 0; a < G.order(); ++a) {
    inv.order_class.emplace_back(G.element_order(a),
                                 static_cast<int>(G.classes()[G.class_of(a)].elements.size()));
  }
  std::sort(inv.order_class.begin(), inv.order_class.end());
  inv.center = center(G).order();
  inv.derived = derived_subgroup(G).order();
  inv.classes = static_cast<int>(G.classes().size());
  return inv;
}

}  // namespace

IsomorphismResult is_isomorphic(const FiniteGroup& G1, const FiniteGroup& G2, int bound) {
  if (G1.order() > bound || G2.order() > bound) {
    throw BoundError("is_isomorphic: order exceeds bound " + std::to_string(bound));
  }
  IsomorphismResult res;
  if (G1.order() != G2.order()) return res;
  if (G1.table() == G2.table()) {
    res.isomorphic = true;
    res.map.resize(G1.order());
    std::iota(res.map.begin(), res.map.end(), 0);
    return res;
  }
  if (!(invariants(G1) == invariants(G2))) return res;
  std::vector<int> gens = small_generating_set(G1);
  auto key = [](const FiniteGroup& G, int a) {
    return std::make_pair(G.element_order(a), static_cast<int>(G.classes()[G.class_of(a)].elements.size()));
  };
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int b = 0; b < G2.order(); ++b) {
      if (key(G2, b) == key(G1, gens[i])) cands[i].push_back(b);
    }
  }
  std::vector<int> images(gens.size());
  std::vector<int> prefix_gens;
  // depth-first search over generator images with consistency checks on prefixes
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      auto phi = extend_homomorphism(G1, gens, images, G2);
      if (!phi) return false;
      std::vector<char> hit(G2.order(), 0);
      for (int v : *phi) {
        if (v < 0 || hit[v]) return false;
        hit[v] = 1;
      }
      res.map = *phi;
      return true;
    }
    for (int b : cands[k]) {
      images[k] = b;
      std::vector<int> g(gens.begin(), gens.begin() + static_cast<long>(k) + 1);
      std::vector<int> im(images.begin(), images.begin() + static_cast<long>(k) + 1);
      auto phi = extend_homomorphism(G1, g, im, G2);
      if (!phi) continue;
      // injectivity on the generated prefix
      std::vector<char> hit(G2.order(), 0);
      bool inj = true;
      for (int v : *phi) {
        if (v < 0) continue;
        if (hit[v]) {
          inj = false;
          break;
        }
        hit[v] = 1;
      }
      if (!inj) continue;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  res.isomorphic = rec(0);
  return res;
}

}  // namespace twistkit
