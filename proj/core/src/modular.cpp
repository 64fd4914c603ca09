#include "twistkit/modular.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "twistkit/error.hpp"
#include "twistkit/parallel.hpp"

namespace twistkit {

namespace {

CentralizerData centralizer_data(const FiniteGroup& G, const Cochain& omega, int a, int bound) {
  const int n = G.order();
  CentralizerData c;
  c.rep = a;
  c.C = centralizer(G, a);
  c.local = subgroup_as_group(G, c.C, &c.embedding);
  c.local_of.assign(n, -1);
  for (int i = 0; i < static_cast<int>(c.embedding.size()); ++i) c.local_of[c.embedding[i]] = i;
  c.beta = omega.is_zero() ? Cochain(2, n, 1) : beta(G, omega, a);
  const int k = c.local.order();
  Cochain local_beta(2, k, c.beta.modulus());
  if (!c.beta.is_zero()) {
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) local_beta.set(x, y, c.beta.num(c.embedding[x], c.embedding[y]));
    }
  }
  c.table = projective_character_table(c.local, local_beta.reduced(), bound);
  c.transversal.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int g = G.conj(G.inv(x), a);
    if (c.transversal[g] < 0) c.transversal[g] = x;
  }
  return c;
}

struct Build {
  Cochain omega;
  std::vector<CentralizerData> cents;
  std::vector<SimpleObject> objects;
  std::int64_t conductor = 1;
};

Build build_objects(const FiniteGroup& G, const Cochain& omega_in, int bound) {
  Build b;
  b.omega = standard_cocycle(G, omega_in);
  const auto& cls = G.classes();
  const int r = static_cast<int>(cls.size());
  b.cents.resize(r);
  parallel_for(r, [&](int i) { b.cents[i] = centralizer_data(G, b.omega, cls[i].representative, bound); });
  std::int64_t L = lcm64(b.omega.modulus(), G.exponent());
  for (const auto& c : b.cents) L = lcm64(L, c.table.conductor);
  b.conductor = L;
  for (int i = 0; i < r; ++i) {
    auto& c = b.cents[i];
    for (auto& row : c.table.values) {
      for (auto& v : row) v = v.lift(L);
    }
    c.table.conductor = L;
    const std::int64_t ksize = static_cast<std::int64_t>(cls[i].elements.size());
    for (int chi = 0; chi < c.table.size(); ++chi) {
      SimpleObject o;
      o.rep = c.rep;
      o.class_index = i;
      o.chi = chi;
      o.degree = c.table.degrees[chi];
      o.dim = ksize * o.degree;
      if (!c.table.value(chi, c.local_of[c.rep]).as_scaled_root(Rational(o.degree), &o.twist)) {
        throw InvariantError("simple_objects: chi(a)/deg chi is not a root of unity");
      }
      b.objects.push_back(o);
    }
  }
  std::int64_t sq = 0;
  for (const auto& o : b.objects) sq += o.dim * o.dim;
  const std::int64_t n = G.order();
  if (sq != n * n) throw InvariantError("simple_objects: sum of squared dimensions differs from |G|^2");
  return b;
}

// Aggregated summands of one class pair: mult * e(r / M) * chi(u) * chi'(v), then conjugated and scaled.
struct Term {
  int u = 0;
  int v = 0;
  std::int64_t r = 0;
  std::int64_t mult = 0;
};

struct PairTerms {
  std::vector<Term> terms;
  std::int64_t M = 1;
  Rational scale{1};
};

PairTerms untwisted_terms(const ModularData& d, int i, int j) {
  const FiniteGroup& G = d.G;
  const auto& ca = d.centralizers[i];
  const auto& cb = d.centralizers[j];
  const int a = ca.rep, b = cb.rep;
  std::map<std::pair<int, int>, std::int64_t> agg;
  for (int g = 0; g < G.order(); ++g) {
    int gb = G.conj(g, b);
    if (G.mul(a, gb) != G.mul(gb, a)) continue;
    int ga = G.conj(G.inv(g), a);
    ++agg[{ca.local_of[gb], cb.local_of[ga]}];
  }
  PairTerms P;
  P.scale = Rational(G.order(), static_cast<std::int64_t>(ca.C.order()) * cb.C.order());
  for (const auto& [k, m] : agg) P.terms.push_back(Term{k.first, k.second, 0, m});
  return P;
}

PairTerms twisted_terms(const ModularData& d, int i, int j) {
  const FiniteGroup& G = d.G;
  const auto& ca = d.centralizers[i];
  const auto& cb = d.centralizers[j];
  const std::int64_t M = lcm64(ca.beta.modulus(), cb.beta.modulus());
  const Cochain ba = ca.beta.lifted(M), bb = cb.beta.lifted(M);
  const auto& Ka = G.classes()[i].elements;
  const auto& Kb = G.classes()[j].elements;
  std::map<std::tuple<int, int, std::int64_t>, std::int64_t> agg;
  for (int g : Ka) {
    const int x = ca.transversal[g], xi = G.inv(x);
    for (int gp : Kb) {
      if (G.mul(g, gp) != G.mul(gp, g)) continue;
      const int y = cb.transversal[gp], yi = G.inv(y);
      std::int64_t r = ba.num(x, gp) + ba.num(G.mul(x, gp), xi) - ba.num(x, xi) + bb.num(y, g) + bb.num(G.mul(y, g), yi) -
                       bb.num(y, yi);
      ++agg[{ca.local_of[G.conj(x, gp)], cb.local_of[G.conj(y, g)], mod64(r, M)}];
    }
  }
  PairTerms P;
  P.M = M;
  for (const auto& [k, m] : agg) P.terms.push_back(Term{std::get<0>(k), std::get<1>(k), std::get<2>(k), m});
  return P;
}

Cyclotomic evaluate(const ModularData& d, const PairTerms& P, int i, int chi, int j, int chip) {
  const auto& ta = d.centralizers[i].table;
  const auto& tb = d.centralizers[j].table;
  Cyclotomic s(Rational(0), d.conductor);
  for (const auto& t : P.terms) {
    Cyclotomic v = ta.value(chi, t.u) * tb.value(chip, t.v);
    if (t.r != 0) v = v.times_root(RootOfUnity(t.r, P.M));
    s += v * Rational(t.mult);
  }
  return s.conj() * P.scale;
}

std::vector<int> object_offsets(const ModularData& d) {
  std::vector<int> off(d.centralizers.size() + 1, 0);
  for (std::size_t i = 0; i < d.centralizers.size(); ++i) off[i + 1] = off[i] + d.centralizers[i].table.size();
  return off;
}

void fill_s(ModularData& d) {
  const int n = d.size();
  const int r = static_cast<int>(d.centralizers.size());
  const bool twisted = !d.omega.is_zero();
  const auto off = object_offsets(d);
  d.S.assign(n, std::vector<Cyclotomic>(n));
  parallel_for(r * r, [&](int idx) {
    const int i = idx / r, j = idx % r;
    PairTerms P = twisted ? twisted_terms(d, i, j) : untwisted_terms(d, i, j);
    const auto& ta = d.centralizers[i].table;
    const auto& tb = d.centralizers[j].table;
    for (int chi = 0; chi < ta.size(); ++chi) {
      // pre-multiply the chi factor once per term
      std::vector<Cyclotomic> A;
      A.reserve(P.terms.size());
      for (const auto& t : P.terms) {
        Cyclotomic v = ta.value(chi, t.u) * Rational(t.mult);
        if (t.r != 0) v = v.times_root(RootOfUnity(t.r, P.M));
        A.push_back(std::move(v));
      }
      for (int chip = 0; chip < tb.size(); ++chip) {
        Cyclotomic s(Rational(0), d.conductor);
        for (std::size_t k = 0; k < A.size(); ++k) s += A[k] * tb.value(chip, P.terms[k].v);
        d.S[off[i] + chi][off[j] + chip] = s.conj() * P.scale;
      }
    }
  });
}

Cyclotomic int_cyc(std::int64_t v, std::int64_t L) { return Cyclotomic(Rational(v), L); }

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits(static_cast<std::size_t>((n + 63) / 64), 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool get_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] & ~b[k]) return false;
  }
  return true;
}
std::vector<int> members(const Bits& b, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (get_bit(b, i)) out.push_back(i);
  }
  return out;
}

std::vector<Bits> centralize_rows(const ModularData& d) {
  const int n = d.size();
  std::vector<Bits> rows(n, make_bits(n));
  parallel_for(n, [&](int X) {
    for (int Y = 0; Y < n; ++Y) {
      if (centralize(d, X, Y)) set_bit(rows[X], Y);
    }
  });
  return rows;
}

Bits centralizer_of(const std::vector<Bits>& rows, const Bits& D, int n) {
  Bits out(rows.empty() ? 0 : rows[0].size(), ~std::uint64_t{0});
  for (int X = 0; X < n; ++X) {
    if (!get_bit(D, X)) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] &= rows[X][k];
  }
  // clear padding
  for (int i = n; i < static_cast<int>(out.size()) * 64; ++i) out[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  return out;
}

std::vector<int> all_duals(const ModularData& d) {
  const int n = d.size();
  std::unordered_multimap<std::size_t, int> by_hash;
  std::vector<std::size_t> h(n);
  for (int X = 0; X < n; ++X) {
    std::size_t v = 0;
    for (int x = 0; x < n; ++x) v = v * 1315423911u ^ d.S[X][x].hash();
    h[X] = v;
    by_hash.emplace(v, X);
  }
  std::vector<int> dual(n, -1);
  for (int X = 0; X < n; ++X) {
    std::vector<Cyclotomic> c(n);
    std::size_t v = 0;
    for (int x = 0; x < n; ++x) {
      c[x] = d.S[X][x].conj();
      v = v * 1315423911u ^ c[x].hash();
    }
    auto range = by_hash.equal_range(v);
    for (auto it = range.first; it != range.second && dual[X] < 0; ++it) {
      int Y = it->second;
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = d.S[Y][x] == c[x];
      if (ok) dual[X] = Y;
    }
    if (dual[X] < 0) throw InvariantError("dual_object: no object has the conjugate S-row");
  }
  return dual;
}

std::string fail_name(const LagrangianCheck& c) {
  if (!c.contains_unit) return "unit object missing";
  if (!c.twists_trivial) return "Proposition L: twist is not identically 1";
  if (!c.centralizing) return "Proposition L: objects do not centralize each other";
  if (!c.dimension) return "Proposition L: dim(L) differs from |G|";
  if (!c.fusion_closed) return "not closed under fusion";
  if (!c.duality_closed) return "not closed under duality";
  return "";
}

}  // namespace

Cyclotomic ModularData::chi(int X, int element) const {
  const auto& o = objects[X];
  const auto& c = centralizers[o.class_index];
  const int l = c.local_of[element];
  if (l < 0) throw PreconditionError("ModularData::chi: element is not in the centralizer");
  return c.table.value(o.chi, l);
}

std::vector<SimpleObject> simple_objects(const FiniteGroup& G, const Cochain& omega, int bound) {
  return build_objects(G, omega, bound).objects;
}

ModularData s_matrix(const FiniteGroup& G, const Cochain& omega, int bound) {
  Build b = build_objects(G, omega, bound);
  ModularData d;
  d.G = G;
  d.omega = std::move(b.omega);
  d.centralizers = std::move(b.cents);
  d.objects = std::move(b.objects);
  d.conductor = b.conductor;
  fill_s(d);
  return d;
}

Cyclotomic s_entry_untwisted(const ModularData& d, int X, int Y) {
  const auto& x = d.objects[X];
  const auto& y = d.objects[Y];
  return evaluate(d, untwisted_terms(d, x.class_index, y.class_index), x.class_index, x.chi, y.class_index, y.chi);
}

Cyclotomic s_entry_twisted(const ModularData& d, int X, int Y) {
  const auto& x = d.objects[X];
  const auto& y = d.objects[Y];
  return evaluate(d, twisted_terms(d, x.class_index, y.class_index), x.class_index, x.chi, y.class_index, y.chi);
}

bool centralize(const ModularData& d, int X, int Y) {
  return d.S[X][Y] == int_cyc(d.objects[X].dim * d.objects[Y].dim, d.conductor);
}

bool centralize_by_conditions(const ModularData& d, int X, int Y) {
  const FiniteGroup& G = d.G;
  const auto& ox = d.objects[X];
  const auto& oy = d.objects[Y];
  const auto& Ka = G.classes()[ox.class_index].elements;
  const auto& Kb = G.classes()[oy.class_index].elements;
  for (int g : Ka) {
    for (int h : Kb) {
      if (G.mul(g, h) != G.mul(h, g)) return false;
    }
  }
  const int a = ox.rep, b = oy.rep;
  const Cyclotomic want = int_cyc(static_cast<std::int64_t>(ox.degree) * oy.degree, d.conductor);
  if (d.omega.is_zero()) {
    for (int g = 0; g < G.order(); ++g) {
      if (d.chi(X, G.conj(g, b)) * d.chi(Y, G.conj(G.inv(g), a)) != want) return false;
    }
    return true;
  }
  const auto& ca = d.centralizers[ox.class_index];
  const auto& cb = d.centralizers[oy.class_index];
  const std::int64_t M = lcm64(ca.beta.modulus(), cb.beta.modulus());
  const Cochain ba = ca.beta.lifted(M), bb = cb.beta.lifted(M);
  for (int x = 0; x < G.order(); ++x) {
    const int xi = G.inv(x);
    const int g = G.conj(xi, a);
    for (int y = 0; y < G.order(); ++y) {
      const int yi = G.inv(y);
      const int gp = G.conj(yi, b);
      std::int64_t r = ba.num(x, gp) + ba.num(G.mul(x, gp), xi) - ba.num(x, xi) + bb.num(y, g) + bb.num(G.mul(y, g), yi) -
                       bb.num(y, yi);
      Cyclotomic v = d.chi(X, G.conj(x, gp)) * d.chi(Y, G.conj(y, g));
      v = v.times_root(RootOfUnity(mod64(r, M), M));
      if (v != want) return false;
    }
  }
  return true;
}

int dual_object(const ModularData& d, int X) { return all_duals(d)[X]; }

LagrangianCheck check_lagrangian(const ModularData& d, const ObjectSet& L) {
  LagrangianCheck c;
  const int n = d.size();
  std::vector<char> in(n, 0);
  for (int X : L) in[X] = 1;
  c.contains_unit = n > 0 && in[0];
  c.twists_trivial = std::all_of(L.begin(), L.end(), [&](int X) { return d.objects[X].twist.is_one(); });
  c.centralizing = true;
  for (std::size_t i = 0; i < L.size() && c.centralizing; ++i) {
    for (std::size_t j = i; j < L.size() && c.centralizing; ++j) c.centralizing = centralize(d, L[i], L[j]);
  }
  std::int64_t sq = 0;
  for (int X : L) sq += d.objects[X].dim * d.objects[X].dim;
  c.dimension = sq == d.G.order();
  // X (x) R_L = d(X) R_L with R_L the regular element, tested on the characters of the fusion ring.
  c.fusion_closed = true;
  for (int x = 0; x < n && c.fusion_closed; ++x) {
    Cyclotomic s(Rational(0), d.conductor);
    for (int Y : L) s += d.S[Y][x] * Rational(d.objects[Y].dim);
    if (s.is_zero()) continue;
    for (int X : L) {
      if (!(d.S[X][x] == int_cyc(d.objects[X].dim * d.objects[x].dim, d.conductor))) {
        c.fusion_closed = false;
        break;
      }
    }
  }
  const auto dual = all_duals(d);
  c.duality_closed = std::all_of(L.begin(), L.end(), [&](int X) { return in[dual[X]] != 0; });
  c.failure = fail_name(c);
  return c;
}

ObjectSet build_subcategory(const ModularData& d, const LagrangianLabel& label, bool check) {
  ObjectSet out;
  for (int X = 0; X < d.size(); ++X) {
    const auto& o = d.objects[X];
    if (!label.H.contains(o.rep)) continue;
    bool ok = true;
    for (int h : label.H.elements) {
      RootOfUnity r;
      if (!d.chi(X, h).as_scaled_root(Rational(o.degree), &r) || r != label.B(o.rep, h)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(X);
  }
  if (check) {
    LagrangianCheck c = check_lagrangian(d, out);
    if (!c.ok()) throw InvariantError("build_subcategory: " + c.failure);
  }
  return out;
}

LagrangianLabel extract_label(const ModularData& d, const ObjectSet& L) {
  const FiniteGroup& G = d.G;
  const int n = G.order();
  std::vector<int> elems;
  std::vector<std::vector<int>> by_class(G.classes().size());
  for (int X : L) by_class[d.objects[X].class_index].push_back(X);
  for (std::size_t i = 0; i < by_class.size(); ++i) {
    if (!by_class[i].empty()) {
      for (int g : G.classes()[i].elements) elems.push_back(g);
    }
  }
  std::sort(elems.begin(), elems.end());
  Subgroup H = make_subgroup(G, elems);
  const std::int64_t M = lcm64(d.conductor, d.omega.modulus());
  Cochain B(2, n, M);
  for (int h1 : H.elements) {
    const int i = G.class_of(h1);
    const auto& c = d.centralizers[i];
    const int a = c.rep;
    const Cochain ba = c.beta.lifted(lcm64(M, c.beta.modulus()));
    for (int h2 : H.elements) {
      bool first = true;
      std::int64_t value = 0;
      for (int x = 0; x < n; ++x) {
        if (G.conj(x, h1) != a) continue;
        const int xi = G.inv(x);
        const std::int64_t part = ba.num(x, h2) + ba.num(G.mul(x, h2), xi) - ba.num(x, xi);
        for (int X : by_class[i]) {
          RootOfUnity r;
          if (!d.chi(X, G.conj(x, h2)).as_scaled_root(Rational(d.objects[X].degree), &r)) {
            throw PreconditionError("extract_label: chi(x h x^-1)/deg chi is not a root of unity");
          }
          std::int64_t v = mod64(part + r.over(M), M);
          if (first) {
            value = v;
            first = false;
          } else if (v != value) {
            throw PreconditionError("extract_label: B_L is not well defined");
          }
        }
      }
      B.set(h1, h2, value);
    }
  }
  LagrangianLabel label;
  label.H = H;
  label.B = Bicharacter{H, B.reduced(), d.omega.is_zero() ? BicharFlavor::plain : BicharFlavor::omega};
  if (!is_abelian(G, H) || !is_normal(G, H)) throw PreconditionError("extract_label: H_L is not a normal abelian subgroup");
  const bool valid = d.omega.is_zero() ? is_alternating(G, label.B) && is_g_invariant(G, d.omega, label.B, true)
                                       : is_omega_bicharacter(G, d.omega, label.B) && is_g_invariant(G, d.omega, label.B, true);
  if (!valid) throw PreconditionError("extract_label: B_L is not a G-invariant alternating bicharacter");
  return label;
}

std::vector<ObjectSet> brute_force_lagrangians(const ModularData& d) {
  const int n = d.size();
  const std::int64_t target = d.G.order();
  const auto rows = centralize_rows(d);
  Bits theta1 = make_bits(n);
  for (int X = 0; X < n; ++X) {
    if (d.objects[X].twist.is_one()) set_bit(theta1, X);
  }
  auto weight = [&](const Bits& b) {
    std::int64_t w = 0;
    for (int X = 0; X < n; ++X) {
      if (get_bit(b, X)) w += d.objects[X].dim * d.objects[X].dim;
    }
    return w;
  };
  // The fusion subcategory generated by a set D is its double centralizer D''.
  auto closure = [&](const Bits& D) { return centralizer_of(rows, centralizer_of(rows, D, n), n); };

  Bits unit = make_bits(n);
  set_bit(unit, 0);
  Bits start = closure(unit);
  std::set<Bits> seen{start};
  std::deque<Bits> queue{start};
  std::vector<ObjectSet> found;
  while (!queue.empty()) {
    Bits S = std::move(queue.front());
    queue.pop_front();
    if (weight(S) == target) {
      found.push_back(members(S, n));
      continue;
    }
    const Bits Sc = centralizer_of(rows, S, n);
    for (int v = 0; v < n; ++v) {
      if (get_bit(S, v) || !get_bit(Sc, v) || !get_bit(theta1, v)) continue;
      Bits T = S;
      set_bit(T, v);
      T = closure(T);
      if (seen.count(T)) continue;
      seen.insert(T);
      if (!subset_of(T, theta1)) continue;
      if (!subset_of(T, centralizer_of(rows, T, n))) continue;
      // dim(D)^2 <= dim(C) for isotropic D
      if (weight(T) > target) continue;
      queue.push_back(std::move(T));
    }
  }
  std::vector<ObjectSet> out;
  for (auto& L : found) {
    LagrangianCheck c = check_lagrangian(d, L);
    if (!c.ok()) throw InvariantError("brute_force_lagrangians: candidate fails check: " + c.failure);
    out.push_back(std::move(L));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FusionRules fusion_coefficients(const ModularData& d, int max_objects) {
  const int n = d.size();
  if (n > max_objects) {
    throw BoundError("fusion_coefficients: " + std::to_string(n) + " objects exceed bound " + std::to_string(max_objects));
  }
  ObjectSet all(n);
  std::iota(all.begin(), all.end(), 0);
  return fusion_restricted(d, all);
}

FusionRules fusion_restricted(const ModularData& d, const ObjectSet& L) {
  const int n = d.size();
  const int k = static_cast<int>(L.size());
  const std::int64_t G2 = static_cast<std::int64_t>(d.G.order()) * d.G.order();
  std::vector<std::vector<Cyclotomic>> conjS(k, std::vector<Cyclotomic>(n));
  for (int c = 0; c < k; ++c) {
    for (int x = 0; x < n; ++x) conjS[c][x] = d.S[L[c]][x].conj();
  }
  FusionRules F;
  F.n = k;
  F.N.assign(static_cast<std::size_t>(k) * k * k, 0);
  parallel_for(k, [&](int a) {
    for (int b = a; b < k; ++b) {
      std::vector<Cyclotomic> P(n);
      for (int x = 0; x < n; ++x) P[x] = d.S[L[a]][x] * d.S[L[b]][x] * Rational(1, d.objects[x].dim * G2);
      for (int c = 0; c < k; ++c) {
        Cyclotomic s(Rational(0), d.conductor);
        for (int x = 0; x < n; ++x) s += P[x] * conjS[c][x];
        if (!s.is_rational()) throw InvariantError("fusion_coefficients: irrational Verlinde coefficient");
        Rational q = s.rational();
        if (q.den() != 1 || q.num() < 0) throw InvariantError("fusion_coefficients: non-integral Verlinde coefficient");
        F.N[(static_cast<std::size_t>(a) * k + b) * k + c] = q.num();
        F.N[(static_cast<std::size_t>(b) * k + a) * k + c] = q.num();
      }
    }
  });
  return F;
}

EquivalenceResult modular_equivalent(const ModularData& d1, const ModularData& d2) {
  EquivalenceResult res;
  const int n = d1.size();
  if (n != d2.size()) {
    res.reason = "object counts differ";
    return res;
  }
  if (twist_spectrum(d1) != twist_spectrum(d2)) {
    res.reason = "T-spectrum multisets differ";
    return res;
  }
  auto dims = [](const ModularData& d) {
    std::vector<std::int64_t> v;
    for (const auto& o : d.objects) v.push_back(o.dim);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (dims(d1) != dims(d2)) {
    res.reason = "dimension multisets differ";
    return res;
  }
  const std::int64_t L = lcm64(d1.conductor, d2.conductor);
  auto lifted = [&](const ModularData& d) {
    std::vector<std::vector<Cyclotomic>> S(n, std::vector<Cyclotomic>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) S[i][j] = d.S[i][j].lift(L);
    }
    return S;
  };
  const auto S1 = lifted(d1), S2 = lifted(d2);
  auto keys = [&](const ModularData& d, const std::vector<std::vector<Cyclotomic>>& S) {
    std::vector<std::tuple<std::int64_t, std::string, std::vector<std::size_t>>> k(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::size_t> row;
      for (int j = 0; j < n; ++j) row.push_back(S[i][j].hash());
      std::sort(row.begin(), row.end());
      k[i] = {d.objects[i].dim, d.objects[i].twist.str(), std::move(row)};
    }
    return k;
  };
  const auto k1 = keys(d1, S1), k2 = keys(d2, S2);
  {
    auto a = k1, b = k2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      res.reason = "S-row multisets differ";
      return res;
    }
  }
  std::vector<std::vector<int>> cand(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (k1[i] == k2[j]) cand[i].push_back(j);
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cand[a].size() < cand[b].size(); });
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::int64_t nodes = 0;
  const std::int64_t limit = 50'000'000;
  std::function<bool(int)> go = [&](int pos) {
    if (pos == n) return true;
    if (++nodes > limit) throw BoundError("modular_equivalent: search limit exceeded");
    const int i = order[pos];
    for (int j : cand[i]) {
      if (used[j]) continue;
      bool ok = S1[i][i] == S2[j][j];
      for (int q = 0; q < pos && ok; ++q) {
        const int k = order[q];
        ok = S1[i][k] == S2[j][perm[k]];
      }
      if (!ok) continue;
      perm[i] = j;
      used[j] = 1;
      if (go(pos + 1)) return true;
      used[j] = 0;
      perm[i] = -1;
    }
    return false;
  };
  if (go(0)) {
    res.equivalent = true;
    res.permutation = perm;
  } else {
    res.reason = "no S-preserving bijection of simple objects";
  }
  return res;
}

std::optional<CocycleMatch> find_matching_cocycle(const ModularData& target, const FiniteGroup& A) {
  if (!A.is_abelian()) throw PreconditionError("find_matching_cocycle: group is not abelian");
  const AbelianCocycleBasis basis = abelian_cocycle_basis(A);
  const auto want = twist_spectrum(target);
  std::vector<std::int64_t> params(basis.ranges.size(), 0);
  int tried = 0;
  while (true) {
    ++tried;
    const Cochain omega = abelian_cocycle(A, basis, params);
    const auto objs = simple_objects(A, omega);
    if (static_cast<int>(objs.size()) == target.size()) {
      std::vector<std::string> tw;
      for (const auto& o : objs) tw.push_back(o.twist.str());
      std::sort(tw.begin(), tw.end());
      if (tw == want) {
        ModularData d = s_matrix(A, omega);
        EquivalenceResult eq = modular_equivalent(target, d);
        if (eq.equivalent) return CocycleMatch{params, omega, eq, tried};
      }
    }
    std::size_t i = 0;
    while (i < params.size() && ++params[i] == basis.ranges[i]) params[i++] = 0;
    if (i == params.size()) break;
  }
  return std::nullopt;
}

std::vector<std::string> twist_spectrum(const ModularData& d) {
  std::vector<std::string> out;
  for (const auto& o : d.objects) out.push_back(o.twist.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twistkit
