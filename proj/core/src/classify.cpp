#include "twistkit/classify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "twistkit/catalog.hpp"
#include "twistkit/characters.hpp"
#include "twistkit/error.hpp"
#include "twistkit/parallel.hpp"

namespace twistkit {

namespace {

std::string element_list(const FiniteGroup& G, const Subgroup& H) {
  std::string s = "{";
  for (std::size_t i = 0; i < H.elements.size(); ++i) {
    if (i) s += ",";
    s += G.name(H.elements[i]);
  }
  return s + "}";
}

std::string group_name(const FiniteGroup& K) {
  auto id = identify(K);
  return id ? *id : "order " + std::to_string(K.order());
}

// Characters of an abelian subgroup H against its invariant factors.
struct CharacterGroup {
  const FiniteGroup* G = nullptr;
  AbelianGroupData A;
  std::int64_t E = 1;  // exponent of H
  int size = 1;

  std::vector<int> coords(int k) const {
    std::vector<int> c(A.factors.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      c[j] = k % A.factors[j];
      k /= A.factors[j];
    }
    return c;
  }
  int index(const std::vector<int>& c) const {
    int k = 0;
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) k = k * A.factors[j] + c[j];
    return k;
  }
  // Value over E of character k at h in H.
  std::int64_t value(int k, int h) const {
    const auto c = coords(k);
    std::int64_t v = 0;
    for (std::size_t j = 0; j < c.size(); ++j) v += static_cast<std::int64_t>(c[j]) * A.coords[h][j] * (E / A.factors[j]);
    return mod64(v, E);
  }
  // Index of the character h -> f(h)/N; throws InvariantError if f is not a character.
  int from_values(const std::vector<std::int64_t>& f, std::int64_t N, const Subgroup& H) const {
    for (int h1 : H.elements) {
      for (int h2 : H.elements) {
        if (mod64(f[h1] + f[h2] - f[G->mul(h1, h2)], N) != 0) throw InvariantError("dual_group: nu(c,d) is not a character of H");
      }
    }
    std::vector<int> c(A.factors.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      const std::int64_t t = f[A.generators[j]] * A.factors[j];
      if (mod64(t, N) != 0) throw InvariantError("dual_group: character value has the wrong order");
      c[j] = static_cast<int>(mod64(t / N, A.factors[j]));
    }
    return index(c);
  }
};

}  // namespace

std::vector<LagrangianLabel> lagrangian_labels(const FiniteGroup& G, const Cochain& omega) {
  const Cochain w = standard_cocycle(G, omega);
  const auto Hs = normal_abelian_subgroups(G);
  std::vector<std::vector<LagrangianLabel>> per(Hs.size());
  parallel_for(static_cast<int>(Hs.size()), [&](int i) {
    const Subgroup& H = Hs[i];
    if (w.is_zero()) {
      const AbelianGroupData A = abelian_structure(G, H);
      for (const auto& form : alternating_forms(G, A)) {
        Bicharacter B{H, form.reduced(), BicharFlavor::plain};
        if (is_g_invariant(G, w, B)) per[i].push_back(LagrangianLabel{H, B, alt_inverse(G, A, form)});
      }
    } else {
      MuSolution s = solve_mu(G, w, H);
      if (!s.cls) return;
      for (const auto& cls : omega_set(G, w, *s.cls)) {
        Bicharacter B = alt_prime(G, w, cls);
        if (is_g_invariant(G, w, B)) per[i].push_back(LagrangianLabel{H, B, cls.mu});
      }
    }
    std::sort(per[i].begin(), per[i].end(), [](const LagrangianLabel& a, const LagrangianLabel& b) { return a.B < b.B; });
  });
  std::vector<LagrangianLabel> out;
  for (auto& v : per) {
    for (auto& l : v) out.push_back(std::move(l));
  }
  return out;
}

std::vector<ModuleCatLabel> module_categories_pointed_dual(const FiniteGroup& G, const Cochain& omega) {
  const Cochain w = standard_cocycle(G, omega);
  const auto Hs = normal_abelian_subgroups(G);
  std::vector<std::vector<ModuleCatLabel>> per(Hs.size());
  parallel_for(static_cast<int>(Hs.size()), [&](int i) {
    const Subgroup& H = Hs[i];
    OmegaClass mu0{H, Cochain(2, G.order(), 1)};
    if (!w.is_zero()) {
      MuSolution s = solve_mu(G, w, H);
      if (!s.cls) return;
      mu0 = *s.cls;
    }
    for (auto& ic : invariant_classes(G, w, omega_set(G, w, mu0))) {
      per[i].push_back(ModuleCatLabel{std::move(ic.cls), std::move(ic.generators), std::move(ic.witnesses)});
    }
  });
  std::vector<ModuleCatLabel> out;
  for (auto& v : per) {
    for (auto& m : v) out.push_back(std::move(m));
  }
  return out;
}

std::vector<int> label_correspondence(const FiniteGroup& G, const Cochain& omega, const std::vector<LagrangianLabel>& labels,
                                      const std::vector<ModuleCatLabel>& modules) {
  const Cochain w = standard_cocycle(G, omega);
  if (labels.size() != modules.size()) {
    throw InvariantError("label_correspondence: " + std::to_string(modules.size()) + " module categories vs " +
                         std::to_string(labels.size()) + " Lagrangian labels");
  }
  std::vector<int> map(modules.size(), -1);
  std::vector<char> hit(labels.size(), 0);
  for (std::size_t m = 0; m < modules.size(); ++m) {
    const Bicharacter B = alt_prime(G, w, modules[m].mu);
    for (std::size_t l = 0; l < labels.size(); ++l) {
      if (labels[l].H == modules[m].mu.H && labels[l].B == B) {
        if (map[m] >= 0 || hit[l]) throw InvariantError("label_correspondence: pairing is not injective");
        map[m] = static_cast<int>(l);
        hit[l] = 1;
      }
    }
    if (map[m] < 0) throw InvariantError("label_correspondence: alt'(mu) is not a Lagrangian label");
  }
  return map;
}

DualGroupData dual_group(const FiniteGroup& G, const Cochain& omega, const Subgroup& H, const Cochain& mu_in,
                         std::uint64_t witness_seed) {
  DualGroupData D;
  D.H = H;
  D.mu = mu_in;
  const Cochain w = standard_cocycle(G, omega);
  if (!w.is_zero()) {
    D.note = "unsupported: dual groups are computed for trivial omega only";
    return D;
  }
  if (!is_normal(G, H) || !is_abelian(G, H)) throw PreconditionError("dual_group: H is not normal abelian");
  const int n = G.order();

  CharacterGroup X;
  X.G = &G;
  X.A = abelian_structure(G, H);
  X.E = X.A.factors.empty() ? 1 : X.A.factors.back();
  X.size = H.order();
  D.hat_H = abelian_group(X.A.factors);

  QuotientGroup Q = quotient_group(G, H);
  D.quotient = Q.group;
  const int q = Q.group.order();
  D.coset_reps.assign(q, -1);
  for (int g = 0; g < n; ++g) {
    if (D.coset_reps[Q.projection[g]] < 0) D.coset_reps[Q.projection[g]] = g;
  }
  const auto& xr = D.coset_reps;

  Cochain mu = mu_in.is_zero() ? Cochain(2, n, 1) : mu_in;
  // psi_c with d psi_c = mu - mu^{x_c} on H
  std::vector<Cochain> psi(q, Cochain(1, n, 1));
  for (int c = 1; c < q; ++c) {
    Cochain target = mu - conjugate_cochain(G, mu, xr[c]);
    auto eta = solve_coboundary1(G, H, target);
    if (!eta) throw PreconditionError("dual_group: mu is not G-invariant up to coboundary");
    psi[c] = *eta;
  }
  std::int64_t N = lcm64(mu.modulus(), X.E);
  for (const auto& p : psi) N = lcm64(N, p.modulus());
  std::vector<std::vector<std::int64_t>> pv(q, std::vector<std::int64_t>(n, 0));
  std::mt19937_64 rng(witness_seed);
  for (int c = 0; c < q; ++c) {
    const Cochain p = psi[c].lifted(N);
    const int shift = (witness_seed != 0 && c != 0) ? static_cast<int>(rng() % static_cast<std::uint64_t>(X.size)) : 0;
    for (int h : H.elements) pv[c][h] = p.num(h) + (shift ? X.value(shift, h) * (N / X.E) : 0);
  }
  const Cochain m = mu.lifted(N);
  auto alt_mu = [&](int a, int b) { return m.num(b, a) - m.num(a, b); };

  D.right_action.assign(q, std::vector<int>(X.size));
  for (int d = 0; d < q; ++d) {
    for (int k = 0; k < X.size; ++k) {
      std::vector<std::int64_t> f(n, 0);
      for (int h : H.elements) f[h] = X.value(k, G.conj(xr[d], h)) * (N / X.E);
      D.right_action[d][k] = X.from_values(f, N, H);
    }
  }
  D.nu.assign(static_cast<std::size_t>(q) * q, 0);
  for (int c = 0; c < q; ++c) {
    for (int d = 0; d < q; ++d) {
      const int cd = Q.group.mul(c, d);
      const int hcd = G.mul(G.mul(xr[c], xr[d]), G.inv(xr[cd]));
      if (!H.contains(hcd)) throw InvariantError("dual_group: coset representatives are inconsistent");
      std::vector<std::int64_t> f(n, 0);
      for (int k : H.elements) {
        f[k] = pv[d][k] + pv[c][G.conj(xr[d], k)] + alt_mu(hcd, G.conj(xr[cd], k)) - pv[cd][k];
      }
      D.nu[static_cast<std::size_t>(c) * q + d] = X.from_values(f, N, H);
    }
  }
  try {
    D.group = abelian_extension(D.hat_H, Q.group, D.right_action, D.nu);
  } catch (const PreconditionError& e) {
    throw InvariantError(std::string("dual_group: extension data do not define a group: ") + e.what());
  }
  if (D.group.order() != n) throw InvariantError("dual_group: order differs from |G|");
  D.iso_name = identify(D.group);
  D.supported = true;
  return D;
}

DualGroupData dual_group(const FiniteGroup& G, const Cochain& omega, const LagrangianLabel& label, std::uint64_t witness_seed) {
  const Cochain mu = label.mu ? *label.mu : alt_inverse(G, abelian_structure(G, label.H), label.B.values);
  return dual_group(G, omega, label.H, mu, witness_seed);
}

FusionFingerprint fusion_fingerprint(const ModularData& data, const LagrangianLabel& label) {
  const ObjectSet L = build_subcategory(data, label);
  const FusionRules F = fusion_restricted(data, L);
  FusionFingerprint fp;
  const int k = static_cast<int>(L.size());
  for (int X : L) fp.dims.push_back(data.objects[X].dim);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        const std::int64_t v = F.at(a, b, c);
        if (v > 0) fp.products.push_back({fp.dims[a], fp.dims[b], fp.dims[c], v});
      }
    }
  }
  std::sort(fp.dims.begin(), fp.dims.end());
  std::sort(fp.products.begin(), fp.products.end());
  return fp;
}

FusionFingerprint representation_fingerprint(const FiniteGroup& K) {
  const CharacterTable T = character_table(K, std::max(kDefaultCharacterBound, K.order()));
  const int r = T.size();
  FusionFingerprint fp;
  for (int d : T.degrees) fp.dims.push_back(d);
  std::vector<std::vector<Cyclotomic>> conj(r);
  for (int c = 0; c < r; ++c) {
    for (const auto& v : T.values[c]) conj[c].push_back(v.conj());
  }
  const int classes = static_cast<int>(T.class_reps.size());
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        Cyclotomic s(Rational(0), T.conductor);
        for (int l = 0; l < classes; ++l) s += T.values[a][l] * T.values[b][l] * conj[c][l] * Rational(T.class_sizes[l]);
        s *= Rational(1, K.order());
        if (!s.is_rational() || s.rational().den() != 1) throw InvariantError("representation_fingerprint: non-integral multiplicity");
        const std::int64_t v = s.rational().num();
        if (v > 0) fp.products.push_back({T.degrees[a], T.degrees[b], T.degrees[c], v});
      }
    }
  }
  std::sort(fp.dims.begin(), fp.dims.end());
  std::sort(fp.products.begin(), fp.products.end());
  return fp;
}

RigidityReport is_morita_rigid(const FiniteGroup& G, int max_objects) {
  RigidityReport R;
  const Cochain zero(3, G.order(), 1);
  const auto labels = lagrangian_labels(G, zero);
  std::optional<ModularData> data;
  std::optional<FusionFingerprint> own;
  if (G.order() <= 64) {
    if (static_cast<int>(simple_objects(G, zero).size()) <= max_objects) {
      data = s_matrix(G, zero);
      own = representation_fingerprint(G);
    }
  }
  for (const auto& label : labels) {
    DualGroupData D = dual_group(G, zero, label);
    const bool iso = is_isomorphic(D.group, G, std::max(256, G.order())).isomorphic;
    std::ostringstream line;
    line << "H=" << element_list(G, label.H) << " dual=" << (D.iso_name ? *D.iso_name : group_name(D.group))
         << (iso ? " isomorphic" : " not isomorphic");
    if (data) {
      const FusionFingerprint fp = fusion_fingerprint(*data, label);
      if (!(fp == representation_fingerprint(D.group))) {
        throw InvariantError("is_morita_rigid: fusion fingerprint of L differs from Rep of the dual group");
      }
      line << (fp == *own ? " fingerprint=Rep(G)" : " fingerprint differs from Rep(G)");
    }
    if (!iso) R.rigid = false;
    R.evidence.push_back(line.str());
  }
  return R;
}

std::string to_string(MoritaEvidence e) {
  switch (e) {
    case MoritaEvidence::equivalent:
      return "equivalent";
    case MoritaEvidence::distinguished:
      return "distinguished";
    case MoritaEvidence::undecided:
      return "undecided";
  }
  return "undecided";
}

MoritaClassReport morita_classes(const std::vector<MoritaInput>& in, int modular_bound) {
  const int k = static_cast<int>(in.size());
  MoritaClassReport R;
  for (const auto& x : in) R.names.push_back(x.name);
  R.matrix.assign(k, std::vector<MoritaEntry>(k));
  std::vector<std::vector<LagrangianLabel>> labels(k);
  std::vector<std::optional<ModularData>> data(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = lagrangian_labels(in[i].G, in[i].omega);
    if (in[i].G.order() <= modular_bound) data[i] = s_matrix(in[i].G, in[i].omega);
  }
  // label of `from` (untwisted) whose dual group is isomorphic to `to`
  auto witness = [&](int from, int to) -> std::optional<std::string> {
    const Cochain w = standard_cocycle(in[from].G, in[from].omega);
    if (!w.is_zero() || in[from].G.order() != in[to].G.order()) return std::nullopt;
    for (const auto& label : labels[from]) {
      DualGroupData D = dual_group(in[from].G, w, label);
      if (is_isomorphic(D.group, in[to].G, std::max(256, D.group.order())).isomorphic) {
        return "label H=" + element_list(in[from].G, label.H) + " of " + in[from].name + " has dual group isomorphic to " +
               in[to].name;
      }
    }
    return std::nullopt;
  };
  for (int i = 0; i < k; ++i) {
    R.matrix[i][i] = MoritaEntry{MoritaEvidence::equivalent, "identity (label H={e})"};
    for (int j = i + 1; j < k; ++j) {
      MoritaEntry e;
      const int ni = in[i].G.order(), nj = in[j].G.order();
      if (ni != nj) {
        e = {MoritaEvidence::distinguished, "group orders differ: " + std::to_string(ni) + " vs " + std::to_string(nj)};
      } else if (labels[i].size() != labels[j].size()) {
        e = {MoritaEvidence::distinguished, "Lagrangian counts differ: " + std::to_string(labels[i].size()) + " vs " +
                                                std::to_string(labels[j].size())};
      } else {
        std::optional<bool> modular;
        if (data[i] && data[j]) {
          EquivalenceResult eq = modular_equivalent(*data[i], *data[j]);
          modular = eq.equivalent;
          if (!eq.equivalent) e = {MoritaEvidence::distinguished, "modular data: " + eq.reason};
        }
        if (!modular || *modular) {
          auto wit = witness(i, j);
          if (!wit) wit = witness(j, i);
          if (wit && modular) {
            e = {MoritaEvidence::equivalent, *wit + "; modular data match"};
          } else if (wit) {
            e = {MoritaEvidence::undecided, *wit + "; modular data not computed, the associated cocycle is not certified"};
          } else if (modular) {
            e = {MoritaEvidence::undecided, "modular data consistent; no untwisted label witness"};
          } else {
            e = {MoritaEvidence::undecided, "no witness and no distinguishing invariant"};
          }
        }
      }
      R.matrix[i][j] = e;
      R.matrix[j][i] = e;
    }
  }
  return R;
}

}  // namespace twistkit
