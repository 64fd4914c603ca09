#include "twistkit/atlas.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "twistkit/bichar.hpp"
#include "twistkit/catalog.hpp"
#include "twistkit/classify.hpp"
#include "twistkit/error.hpp"
#include "twistkit/modular.hpp"

namespace twistkit::atlas {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kVerifyUntwisted = 16;
constexpr int kVerifyTwisted = 8;
constexpr int kModularSummaryBound = 32;
constexpr int kOracleBound = 16;
constexpr int kVerlindeObjects = 48;

const std::set<std::string> kCommands = {"classify", "verify", "examples", "morita", "modular"};

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int to_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size() || v < INT32_MIN || v > INT32_MAX) throw ParseError("");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError("expected an integer in '" + context + "', got '" + s + "'");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string omega_spec_at(const JobSpec& job, std::size_t i) {
  return i < job.omegas.size() ? job.omegas[i] : std::string("trivial");
}

bool trivial_spec(const std::string& s) {
  auto t = words(s);
  return t.empty() || (t.size() == 1 && t[0] == "trivial");
}

// The cocycle k/n of Z/n pulled back along proj: G -> Q with Q cyclic of order n.
Cochain pull_cyclic(const FiniteGroup& G, const FiniteGroup& Q, const std::vector<int>& proj, int n, int k) {
  if (n < 1) throw ParseError("cyclic order must be positive");
  if (Q.order() != n) {
    throw PreconditionError("target is of order " + std::to_string(Q.order()) + ", not cyclic of order " +
                            std::to_string(n));
  }
  int q = -1;
  for (int x = 0; x < Q.order() && q < 0; ++x) {
    if (Q.element_order(x) == n) q = x;
  }
  if (q < 0) throw PreconditionError("target of order " + std::to_string(n) + " is not cyclic");
  std::vector<int> log(n, 0);
  for (int i = 0, x = 0; i < n; ++i, x = Q.mul(x, q)) log[x] = i;
  std::vector<int> pi(G.order());
  for (int g = 0; g < G.order(); ++g) pi[g] = log[proj[g]];
  int kk = ((k % n) + n) % n;
  return inflate(G, cyclic_group(n), cyclic_cocycle(n, kk), pi);
}

struct Input {
  std::string group_spec;
  std::string omega_spec;
  FiniteGroup G;
  Cochain omega;
};

Input load(const JobSpec& job, std::size_t i, int default_bound) {
  if (i >= job.groups.size()) throw ParseError("missing --group");
  Input in;
  in.group_spec = job.groups[i];
  in.omega_spec = omega_spec_at(job, i);
  in.G = build_group(in.group_spec, job.bound.value_or(default_bound));
  in.omega = parse_omega(in.G, in.omega_spec);
  return in;
}

// ---- JSON pieces ----------------------------------------------------------------

Json group_json(const std::string& spec, const FiniteGroup& G) {
  Json j;
  j["spec"] = spec;
  j["order"] = G.order();
  auto name = identify(G);
  j["name"] = name ? Json(*name) : Json(nullptr);
  return j;
}

Json omega_json(const std::string& spec, const Cochain& omega) {
  Json j;
  j["spec"] = spec;
  j["trivial"] = omega.is_zero();
  j["modulus"] = omega.modulus();
  return j;
}

Json names_of(const FiniteGroup& G, const std::vector<int>& xs) {
  Json a = Json::array();
  for (int x : xs) a.push_back(G.name(x));
  return a;
}

Json subgroup_json(const FiniteGroup& G, const Subgroup& H) {
  Json j;
  j["order"] = H.order();
  j["generators"] = names_of(G, abelian_structure(G, H).generators);
  j["elements"] = names_of(G, H.elements);
  return j;
}

// Nonzero values of a 2-cochain on H x H as [h1, h2, "q/M"].
Json table_json(const FiniteGroup& G, const Subgroup& H, const Cochain& c) {
  Json a = Json::array();
  for (int x : H.elements) {
    for (int y : H.elements) {
      RootOfUnity v = c.value(x, y);
      if (v.num() == 0) continue;
      a.push_back(Json::array({G.name(x), G.name(y), v.str()}));
    }
  }
  return a;
}

std::string label_name(const FiniteGroup& G, const LagrangianLabel& L) {
  auto gens = abelian_structure(G, L.H).generators;
  std::string s = "<";
  if (gens.empty()) s += "1";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + G.name(gens[i]);
  s += ">";
  bool trivial_b = true;
  for (int x : L.H.elements) {
    for (int y : L.H.elements) trivial_b = trivial_b && L.B(x, y).num() == 0;
  }
  return trivial_b ? s : s + " B!=0";
}

Json dual_json(const DualGroupData& d) {
  Json j;
  j["supported"] = d.supported;
  if (d.supported) {
    j["order"] = d.group.order();
    j["iso_name"] = d.iso_name ? Json(*d.iso_name) : Json(nullptr);
  } else {
    j["order"] = nullptr;
    j["iso_name"] = nullptr;
    j["note"] = d.note;
  }
  return j;
}

std::string dual_name(const DualGroupData& d) {
  if (!d.supported) return "unsupported";
  return d.iso_name ? *d.iso_name : "order " + std::to_string(d.group.order());
}

Json modular_summary(const ModularData& data) {
  Json j;
  j["objects"] = data.size();
  j["conductor"] = data.conductor;
  j["t_spectrum"] = twist_spectrum(data);
  return j;
}

std::vector<ObjectSet> sorted_sets(std::vector<ObjectSet> v) {
  for (auto& s : v) std::sort(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::uint64_t witness_seed(std::uint64_t seed) { return seed ? seed : 1; }

}  // namespace

// ---- JobSpec ----------------------------------------------------------------------

std::string format_job(const JobSpec& job) {
  std::ostringstream os;
  os << job.command;
  for (const auto& g : job.groups) os << " --group " << std::quoted(g);
  for (const auto& w : job.omegas) os << " --omega " << std::quoted(w);
  if (job.bound) os << " --bound " << *job.bound;
  if (!job.out.empty()) os << " --out " << std::quoted(job.out);
  if (job.seed != 0) os << " --seed " << job.seed;
  return os.str();
}

JobSpec parse_job(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tok;
  for (std::string t; is >> std::quoted(t);) tok.push_back(t);
  if (tok.empty()) throw ParseError("empty job");
  JobSpec job;
  job.command = tok[0];
  if (!kCommands.count(job.command)) throw ParseError("unknown command '" + job.command + "'");
  for (std::size_t i = 1; i < tok.size(); i += 2) {
    const std::string& opt = tok[i];
    if (i + 1 >= tok.size()) throw ParseError("option " + opt + " needs a value");
    const std::string& val = tok[i + 1];
    if (opt == "--group") {
      job.groups.push_back(val);
    } else if (opt == "--omega") {
      job.omegas.push_back(val);
    } else if (opt == "--bound") {
      job.bound = to_int(val, text);
    } else if (opt == "--out") {
      job.out = val;
    } else if (opt == "--seed") {
      try {
        std::size_t used = 0;
        job.seed = std::stoull(val, &used);
        if (used != val.size() || val[0] == '-') throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad seed '" + val + "'");
      }
    } else {
      throw ParseError("unknown option '" + opt + "'");
    }
  }
  return job;
}

// ---- cocycle DSL --------------------------------------------------------------------

Cochain parse_omega(const FiniteGroup& G, const std::string& spec) {
  auto t = words(spec);
  const int n = G.order();
  if (trivial_spec(spec)) return Cochain(3, n, 1);
  const std::string& head = t[0];
  Cochain raw;
  if (head == "cyclic") {
    if (t.size() != 3) throw ParseError("expected 'cyclic n k' in '" + spec + "'");
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    raw = pull_cyclic(G, G, id, to_int(t[1], spec), to_int(t[2], spec));
  } else if (head == "inflate") {
    if (t.size() != 6 || t[1] != "cyclic" || t[4] != "via" || t[5].rfind("mod-", 0) != 0) {
      throw ParseError("expected 'inflate cyclic n k via mod-W1-W2...' in '" + spec + "'");
    }
    std::vector<int> gens;
    std::istringstream ws(t[5].substr(4));
    for (std::string w; std::getline(ws, w, '-');) {
      if (w.empty()) throw ParseError("empty generator word in '" + t[5] + "'");
      gens.push_back(G.parse_element(w));
    }
    Subgroup N = generated_subgroup(G, gens);
    if (!is_normal(G, N)) throw PreconditionError("kernel " + t[5] + " is not normal");
    auto Q = quotient_group(G, N);
    raw = pull_cyclic(G, Q.group, Q.projection, to_int(t[2], spec), to_int(t[3], spec));
  } else if (head == "abelian") {
    if (!G.is_abelian()) throw PreconditionError("'abelian' cocycle specs need an abelian group");
    auto basis = abelian_cocycle_basis(G);
    if (t.size() - 1 != basis.ranges.size()) {
      throw ParseError("abelian cocycle on this group takes " + std::to_string(basis.ranges.size()) +
                       " parameter(s)");
    }
    std::vector<std::int64_t> p;
    for (std::size_t i = 1; i < t.size(); ++i) {
      int v = to_int(t[i], spec);
      if (v < 0 || v >= basis.ranges[i - 1]) throw ParseError("parameter " + t[i] + " out of range");
      p.push_back(v);
    }
    raw = abelian_cocycle(G, basis, p);
  } else if (head == "file") {
    if (t.size() < 2) throw ParseError("expected 'file PATH'");
    raw = read_cochain_file(spec.substr(spec.find("file") + 5), G);
  } else {
    throw ParseError("unknown cocycle spec '" + spec + "'");
  }
  return standard_cocycle(G, raw);
}

// ---- commands -----------------------------------------------------------------------

Outcome cmd_classify(const JobSpec& job) {
  Input in = load(job, 0, kDefaultGroupBound);
  const auto& G = in.G;
  const auto& omega = in.omega;
  auto labels = lagrangian_labels(G, omega);
  auto modules = module_categories_pointed_dual(G, omega);

  Json rec;
  rec["kind"] = "classify";
  rec["job"] = format_job(job);
  rec["group"] = group_json(in.group_spec, G);
  rec["omega"] = omega_json(in.omega_spec, omega);

  Json cross;
  bool ok = true;
  auto verdict = [&](const char* key, bool pass) {
    cross[key] = pass ? "pass" : "fail";
    ok = ok && pass;
  };

  try {
    label_correspondence(G, omega, labels, modules);
    verdict("label_module_bijection", true);
  } catch (const InvariantError&) {
    verdict("label_module_bijection", false);
  }

  Json jl = Json::array();
  std::map<int, int> by_order;
  bool witness_ok = true;
  for (const auto& L : labels) {
    Json e;
    e["H"] = subgroup_json(G, L.H);
    e["B"] = table_json(G, L.H, L.B.values);
    e["mu"] = L.mu ? table_json(G, L.H, *L.mu) : Json(nullptr);
    auto d = dual_group(G, omega, L);
    if (d.supported) {
      auto d2 = dual_group(G, omega, L, witness_seed(job.seed));
      witness_ok = witness_ok && is_isomorphic(d.group, d2.group, std::max(256, G.order())).isomorphic;
    }
    e["dual_group"] = dual_json(d);
    jl.push_back(e);
    ++by_order[L.H.order()];
  }
  if (omega.is_zero()) {
    verdict("dual_group_witness_independence", witness_ok);
  } else {
    cross["dual_group_witness_independence"] = "skipped";
  }

  Json summary = nullptr;
  const int oracle_bound = omega.is_zero() ? kOracleBound : kVerifyTwisted;
  if (G.order() <= kModularSummaryBound) {
    auto data = s_matrix(G, omega);
    summary = modular_summary(data);
    if (G.order() <= oracle_bound) {
      std::vector<ObjectSet> built;
      bool lag = true;
      for (const auto& L : labels) {
        auto S = build_subcategory(data, L, false);
        lag = lag && check_lagrangian(data, S).ok();
        built.push_back(S);
      }
      verdict("lagrangian_subcategories", lag);
      verdict("oracle_equivalence", sorted_sets(built) == sorted_sets(brute_force_lagrangians(data)));
    }
  }
  if (!cross.contains("oracle_equivalence")) {
    cross["lagrangian_subcategories"] = "skipped";
    cross["oracle_equivalence"] = "skipped";
  }

  Json counts;
  counts["labels"] = labels.size();
  counts["module_categories"] = modules.size();
  Json bo = Json::object();
  for (auto [k, v] : by_order) bo[std::to_string(k)] = v;
  counts["by_subgroup_order"] = bo;

  rec["labels"] = jl;
  rec["counts"] = counts;
  rec["modular"] = summary;
  rec["cross_checks"] = cross;

  Outcome out;
  out.exit_code = ok ? 0 : 1;
  out.json = dump(rec);
  std::ostringstream rep;
  rep << "classify " << in.group_spec << ": " << labels.size() << " label(s), cross-checks "
      << (ok ? "pass" : "FAIL") << "\n";
  out.report = rep.str();
  return out;
}

Outcome cmd_verify(const JobSpec& job) {
  if (job.groups.empty()) throw ParseError("missing --group");
  const bool twisted = !trivial_spec(omega_spec_at(job, 0));
  const int bound = job.bound.value_or(twisted ? kVerifyTwisted : kVerifyUntwisted);
  Input in = load(job, 0, bound);
  const auto& G = in.G;
  const auto& omega = in.omega;

  Json steps = Json::array();
  std::string failure;
  auto step = [&](const std::string& name, bool pass, const std::string& detail) {
    Json s;
    s["name"] = name;
    s["verdict"] = pass ? "pass" : "fail";
    s["detail"] = detail;
    steps.push_back(s);
    if (!pass && failure.empty()) failure = detail;
    return pass;
  };
  auto skip = [&](const std::string& name, const std::string& detail) {
    Json s;
    s["name"] = name;
    s["verdict"] = "skipped";
    s["detail"] = detail;
    steps.push_back(s);
  };

  std::size_t n_labels = 0, n_brute = 0;
  [&] {
    auto bad = pentagon_failure(G, omega);
    std::string where;
    if (bad) {
      where = "3-cocycle identity fails at (";
      for (std::size_t i = 0; i < bad->size(); ++i) where += (i ? "," : "") + G.name((*bad)[i]);
      where += ")";
    }
    if (!step("3-cocycle identity", !bad, bad ? where : "all quadruples")) return;

    auto data = s_matrix(G, omega);
    bool sym = true, unit = true;
    for (int x = 0; x < data.size(); ++x) {
      unit = unit && data.S[0][x] == Cyclotomic(Rational(data.objects[x].dim));
      for (int y = 0; y < x; ++y) sym = sym && data.S[x][y] == data.S[y][x];
    }
    if (!step("modular data", sym && unit,
              !sym ? "Modular data: S is not symmetric"
                   : !unit ? "Modular data: unit row differs from dimensions"
                           : std::to_string(data.size()) + " objects"))
      return;

    auto labels = lagrangian_labels(G, omega);
    n_labels = labels.size();
    auto modules = module_categories_pointed_dual(G, omega);
    try {
      label_correspondence(G, omega, labels, modules);
      step("Theorem bijection", true, std::to_string(labels.size()) + " labels, " + std::to_string(modules.size()) +
                                          " module categories");
    } catch (const InvariantError& e) {
      step("Theorem bijection", false, std::string("Theorem bijection: ") + e.what());
      return;
    }

    std::vector<ObjectSet> built;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto S = build_subcategory(data, labels[i], false);
      auto chk = check_lagrangian(data, S);
      if (!chk.ok()) {
        step("Proposition L", false, chk.failure + " (label " + label_name(G, labels[i]) + ")");
        return;
      }
      built.push_back(S);
    }
    step("Proposition L", true, std::to_string(built.size()) + " subcategories: unit, theta = 1, centralizing, dim = |G|");

    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::string why;
      try {
        auto back = extract_label(data, built[i]);
        if (!(back.H == labels[i].H) || back.B != labels[i].B) why = "label differs";
      } catch (const PreconditionError& e) {
        why = e.what();
      }
      if (!why.empty()) {
        step("round trip", false, "Proposition L 1: extract_label(build_subcategory) fails for " +
                                      label_name(G, labels[i]) + ": " + why);
        return;
      }
    }
    step("round trip", true, "extract_label o build_subcategory = id");

    if (data.size() <= kVerlindeObjects) {
      try {
        fusion_coefficients(data, kVerlindeObjects);
        step("Verlinde", true, "fusion coefficients are non-negative integers");
      } catch (const InvariantError& e) {
        step("Verlinde", false, std::string("Verlinde formula: ") + e.what());
        return;
      }
    } else {
      skip("Verlinde", "more than " + std::to_string(kVerlindeObjects) + " objects");
    }

    if (omega.is_zero()) {
      for (const auto& L : labels) {
        auto d = dual_group(G, omega, L);
        auto d2 = dual_group(G, omega, L, witness_seed(job.seed));
        if (!is_isomorphic(d.group, d2.group, std::max(256, G.order())).isomorphic) {
          step("dual groups", false, "Theorem dual group: G' depends on the witnesses for " + label_name(G, L));
          return;
        }
        if (!(fusion_fingerprint(data, L) == representation_fingerprint(d.group))) {
          step("dual groups", false, "Theorem dual group: L(H,B) is not Rep(G') for " + label_name(G, L));
          return;
        }
      }
      step("dual groups", true, "Rep(G') matches L(H,B) for every label");
    } else {
      skip("dual groups", "twisted dual groups are not constructed");
    }

    auto brute = brute_force_lagrangians(data);
    n_brute = brute.size();
    bool same = sorted_sets(built) == sorted_sets(brute);
    step("oracle equivalence", same,
         same ? std::to_string(n_labels) + " = " + std::to_string(n_brute)
              : "Oracle equivalence: labels give " + std::to_string(n_labels) + " subcategories, brute force finds " +
                    std::to_string(n_brute));
  }();

  Json rec;
  rec["kind"] = "verify";
  rec["job"] = format_job(job);
  rec["group"] = group_json(in.group_spec, G);
  rec["omega"] = omega_json(in.omega_spec, omega);
  rec["steps"] = steps;
  rec["labels"] = n_labels;
  rec["brute_force"] = n_brute;
  rec["verdict"] = failure.empty() ? "pass" : "fail";
  rec["failure"] = failure.empty() ? Json(nullptr) : Json(failure);

  Outcome out;
  out.exit_code = failure.empty() ? 0 : 1;
  out.json = dump(rec);
  out.report = failure.empty() ? "pass, " + std::to_string(n_labels) + " = " + std::to_string(n_brute) + "\n"
                               : "FAIL: " + failure + "\n";
  return out;
}

namespace {

struct ExampleRow {
  std::string name;
  std::string group;
  std::string omega = "trivial";
  std::optional<int> expected;  // nullopt: the brute-force count is the expectation
  std::string source;
  int dihedral_n = 0;           // check the Dih(Z_{n/k} x Z_k) duals
  bool center_dual_z2_a5 = false;
  std::string remark;           // printed when the row fails
};

Json run_row(const ExampleRow& row, bool& all_ok, std::ostringstream& table) {
  FiniteGroup G = build_group(row.group);
  Cochain omega = parse_omega(G, row.omega);
  auto labels = lagrangian_labels(G, omega);
  std::vector<std::string> notes;

  std::optional<int> oracle;
  if (G.order() <= kOracleBound) oracle = static_cast<int>(brute_force_lagrangians(s_matrix(G, omega)).size());
  int expected = row.expected ? *row.expected : oracle.value_or(-1);
  bool ok = static_cast<int>(labels.size()) == expected;
  if (oracle && *oracle != static_cast<int>(labels.size())) {
    ok = false;
    notes.push_back("brute force finds " + std::to_string(*oracle));
  }

  Json duals = Json::array();
  Json names = Json::array();
  for (const auto& L : labels) names.push_back(label_name(G, L));
  for (const auto& L : labels) {
    auto d = dual_group(G, omega, L);
    duals.push_back(dual_name(d));
    if (!d.supported) continue;
    if (row.dihedral_n) {
      const int n = row.dihedral_n;
      const int k = n / L.H.order();
      const int rk = G.pow(G.parse_element("r"), k);
      std::vector<int> f;
      for (int v : {n / k, k}) {
        if (v > 1) f.push_back(v);
      }
      if (f.empty()) f.push_back(1);
      bool good = L.H == generated_subgroup(G, {rk}) && is_isomorphic(d.group, generalized_dihedral(f)).isomorphic;
      if (!good) {
        ok = false;
        notes.push_back("dual of " + label_name(G, L) + " is not Dih(Z" + std::to_string(n / k) + "xZ" +
                        std::to_string(k) + ")");
      }
    }
    if (row.center_dual_z2_a5 && L.H == center(G) && L.H.order() > 1) {
      if (!is_isomorphic(d.group, direct_product(cyclic_group(2), alternating_group(5))).isomorphic) {
        ok = false;
        notes.push_back("dual of the center label is not Z2xA5");
      }
    }
  }
  if (!row.expected && !oracle) {
    ok = false;
    notes.push_back("no expectation available");
  }
  if (row.expected && static_cast<int>(labels.size()) != expected) {
    notes.push_back("computed count differs from the stated count");
    if (!row.remark.empty()) notes.push_back(row.remark);
  }

  all_ok = all_ok && ok;
  Json j;
  j["name"] = row.name;
  j["group"] = row.group;
  j["omega"] = row.omega;
  j["expected"] = expected;
  j["source"] = row.source;
  j["computed"] = labels.size();
  j["oracle"] = oracle ? Json(*oracle) : Json(nullptr);
  j["labels"] = names;
  j["duals"] = duals;
  j["status"] = ok ? "pass" : "fail";
  j["notes"] = notes;

  table << std::left << std::setw(16) << row.name << std::setw(10) << expected << std::setw(10) << labels.size()
        << std::setw(8) << (oracle ? std::to_string(*oracle) : "-") << std::setw(6) << (ok ? "ok" : "FAIL");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    table << (i ? ", " : "") << names[i].get<std::string>() << " -> " << duals[i].get<std::string>();
  }
  table << "\n";
  for (const auto& n : notes) table << std::string(16, ' ') << "note: " << n << "\n";
  return j;
}

}  // namespace

Outcome cmd_examples(const JobSpec& job) {
  (void)job;
  const std::vector<ExampleRow> rows = {
      {"D4 = Z2xZ2", "abelian 2 2", "trivial", 6, "stated", 0, false, ""},
      {"D8", "dihedral 4", "trivial", 7, "stated", 0, false, ""},
      {"D6", "dihedral 3", "trivial", 2, "stated: <r^k>, k | n", 3, false, ""},
      {"D10", "dihedral 5", "trivial", 2, "stated: <r^k>, k | n", 5, false, ""},
      {"D12", "dihedral 6", "trivial", 4, "stated: <r^k>, k | n", 6, false, ""},
      {"A4", "alt 4", "trivial", 3, "stated", 0, false, ""},
      {"S4", "sym 4", "trivial", 3, "stated", 0, false, ""},
      {"A5", "alt 5", "trivial", 1, "stated", 0, false, ""},
      {"SL(2,3)", "sl 2 3", "trivial", 2, "derived: divisors of gcd(n, q-1)", 0, false, ""},
      {"SL(2,5)", "sl 2 5", "trivial", 2, "stated: divisors of gcd(n, q-1)", 0, true, ""},
      {"Q8", "quaternion", "trivial", std::nullopt, "derived: brute force", 0, false, ""},
      {"D8 twisted", "dihedral 4", "inflate cyclic 2 1 via mod-r2-s", 4, "stated: H in {1, <r2>, <r2,s> x2}", 0, false,
       "omega restricted to <r> = Z4 is a coboundary (pullback of the Z2 generator is (2u)^2 = 0), so <r> also "
       "carries a label; brute force agrees"},
  };

  bool all_ok = true;
  std::ostringstream table;
  table << std::left << std::setw(16) << "group" << std::setw(10) << "expected" << std::setw(10) << "computed"
        << std::setw(8) << "oracle" << std::setw(6) << "" << "labels -> dual groups\n";
  Json jrows = Json::array();
  for (const auto& r : rows) jrows.push_back(run_row(r, all_ok, table));

  // Doubles of D8 and Q8.
  Cochain zero;
  auto D8 = build_group("dihedral 4");
  auto Q8 = build_group("quaternion");
  auto eq = modular_equivalent(s_matrix(D8, zero), s_matrix(Q8, zero));
  auto mc = morita_classes({{"D8", D8, zero}, {"Q8", Q8, zero}});
  bool morita_ok = !eq.equivalent && mc.matrix[0][1].evidence == MoritaEvidence::distinguished;
  all_ok = all_ok && morita_ok;
  Json morita;
  morita["pair"] = Json::array({"D8", "Q8"});
  morita["expected"] = "distinguished";
  morita["computed"] = to_string(mc.matrix[0][1].evidence);
  morita["detail"] = mc.matrix[0][1].detail;
  morita["modular_equivalent"] = eq.equivalent;
  morita["status"] = morita_ok ? "pass" : "fail";
  table << "\nRep(D(D8)) vs Rep(D(Q8)): " << to_string(mc.matrix[0][1].evidence) << " (" << mc.matrix[0][1].detail
        << ") " << (morita_ok ? "ok" : "FAIL") << "\n";

  Json rigidity = Json::array();
  table << "\nMorita rigidity\n";
  for (auto [spec, expect] : std::vector<std::pair<std::string, bool>>{
           {"alt 4", true}, {"sym 4", true}, {"dihedral 3", true}, {"dihedral 5", true}, {"dihedral 4", false}}) {
    auto r = is_morita_rigid(build_group(spec));
    bool ok = r.rigid == expect;
    all_ok = all_ok && ok;
    Json j;
    j["group"] = spec;
    j["expected"] = expect;
    j["computed"] = r.rigid;
    j["status"] = ok ? "pass" : "fail";
    rigidity.push_back(j);
    table << "  " << std::left << std::setw(14) << spec << (r.rigid ? "rigid" : "not rigid") << (ok ? "  ok" : "  FAIL")
          << "\n";
  }

  Json rec;
  rec["kind"] = "examples";
  rec["rows"] = jrows;
  rec["morita"] = morita;
  rec["rigidity"] = rigidity;
  rec["verdict"] = all_ok ? "pass" : "fail";

  Outcome out;
  out.exit_code = all_ok ? 0 : 1;
  out.json = dump(rec);
  out.report = table.str();
  return out;
}

Outcome cmd_morita(const JobSpec& job) {
  if (job.groups.size() < 2) throw PreconditionError("morita needs at least two --group specs");
  const int modular_bound = job.bound.value_or(kModularSummaryBound);
  std::vector<MoritaInput> inputs;
  Json jin = Json::array();
  std::optional<ModularData> first;
  for (std::size_t i = 0; i < job.groups.size(); ++i) {
    std::string wspec = omega_spec_at(job, i);
    Json search;
    MoritaInput mi;
    mi.G = build_group(job.groups[i], std::max(modular_bound, kDefaultGroupBound));
    if (words(wspec) == std::vector<std::string>{"search"}) {
      if (i == 0) throw ParseError("'search' cannot be used for the first spec");
      if (!mi.G.is_abelian()) throw PreconditionError("'search' needs an abelian group");
      if (!first) first = s_matrix(inputs[0].G, inputs[0].omega);
      auto m = find_matching_cocycle(*first, mi.G);
      if (!m) throw PreconditionError("no cocycle on " + job.groups[i] + " matches " + inputs[0].name);
      mi.omega = m->omega;
      search["params"] = m->params;
      search["tried"] = m->tried;
    } else {
      mi.omega = parse_omega(mi.G, wspec);
    }
    mi.name = job.groups[i] + (trivial_spec(wspec) ? "" : " / " + wspec);
    Json e;
    e["name"] = mi.name;
    e["group"] = group_json(job.groups[i], mi.G);
    e["omega"] = omega_json(wspec, mi.omega);
    if (!search.is_null()) e["search"] = search;
    jin.push_back(e);
    inputs.push_back(std::move(mi));
  }
  auto rep = morita_classes(inputs, modular_bound);

  Json matrix = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < rep.matrix.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rep.matrix[i].size(); ++j) {
      Json e;
      e["evidence"] = to_string(rep.matrix[i][j].evidence);
      e["detail"] = rep.matrix[i][j].detail;
      row.push_back(e);
      if (j > i) {
        text << rep.names[i] << " vs " << rep.names[j] << ": " << to_string(rep.matrix[i][j].evidence) << " ("
             << rep.matrix[i][j].detail << ")\n";
      }
    }
    matrix.push_back(row);
  }
  Json rec;
  rec["kind"] = "morita";
  rec["job"] = format_job(job);
  rec["inputs"] = jin;
  rec["matrix"] = matrix;

  Outcome out;
  out.json = dump(rec);
  out.report = text.str();
  return out;
}

Outcome cmd_modular(const JobSpec& job) {
  const int bound = job.bound.value_or(kModularSummaryBound);
  Input in = load(job, 0, bound);
  auto data = s_matrix(in.G, in.omega);

  Json objs = Json::array();
  for (const auto& o : data.objects) {
    Json j;
    j["rep"] = in.G.name(o.rep);
    j["class_index"] = o.class_index;
    j["char_index"] = o.chi;
    j["degree"] = o.degree;
    j["dim"] = o.dim;
    j["twist"] = o.twist.str();
    objs.push_back(j);
  }
  Json S = Json::array();
  for (const auto& row : data.S) {
    Json r = Json::array();
    for (const auto& z : row) {
      Json c = Json::array();
      const Cyclotomic lifted = z.lift(data.conductor);
      for (const auto& q : lifted.coefficients()) c.push_back(q.str());
      r.push_back(c);
    }
    S.push_back(r);
  }
  Json rec;
  rec["kind"] = "modular";
  rec["job"] = format_job(job);
  rec["group"] = group_json(in.group_spec, in.G);
  rec["omega"] = omega_json(in.omega_spec, in.omega);
  rec["conductor"] = data.conductor;
  rec["objects"] = objs;
  rec["t_spectrum"] = twist_spectrum(data);
  rec["S"] = S;

  Outcome out;
  out.json = dump(rec);
  out.report = "modular " + in.group_spec + ": " + std::to_string(data.size()) + " objects, conductor " +
               std::to_string(data.conductor) + "\n";
  return out;
}

Outcome run(const JobSpec& job) {
  if (job.command == "classify") return cmd_classify(job);
  if (job.command == "verify") return cmd_verify(job);
  if (job.command == "examples") return cmd_examples(job);
  if (job.command == "morita") return cmd_morita(job);
  if (job.command == "modular") return cmd_modular(job);
  throw ParseError("unknown command '" + job.command + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const PreconditionError*>(&e)) return 2;
  if (dynamic_cast<const BoundError*>(&e)) return 3;
  return 1;
}

}  // namespace twistkit::atlas
