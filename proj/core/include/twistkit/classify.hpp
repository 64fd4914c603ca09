#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/bichar.hpp"
#include "twistkit/cohomology.hpp"
#include "twistkit/groups.hpp"
#include "twistkit/modular.hpp"

namespace twistkit {

/// Lagrangian labels (H, B): H normal abelian with omega|_H a coboundary, B a G-invariant
/// alternating (omega-)bicharacter on H. Ordered by H (size, then elements), then B.
/// Every label carries a witness mu with alt'(mu) = B.
std::vector<LagrangianLabel> lagrangian_labels(const FiniteGroup& G, const Cochain& omega);

/// Module categories M(H, mu) with pointed dual: H normal abelian, mu a G-invariant class.
struct ModuleCatLabel {
  OmegaClass mu;
  std::vector<int> generators;     // generating set used for the invariance test
  std::vector<Cochain> witnesses;  // d eta_x = (mu <| x) - mu on H, one per generator
};

std::vector<ModuleCatLabel> module_categories_pointed_dual(const FiniteGroup& G, const Cochain& omega);

/// index in `modules` -> index in `labels`, pairing (H, mu) with (H, alt'(mu)).
/// Throws InvariantError unless the pairing is a bijection.
std::vector<int> label_correspondence(const FiniteGroup& G, const Cochain& omega, const std::vector<LagrangianLabel>& labels,
                                      const std::vector<ModuleCatLabel>& modules);

/// G' = H^ x_nu (H\\G) for omega trivial.
struct DualGroupData {
  bool supported = false;
  std::string note;                         // reason when unsupported
  Subgroup H;
  Cochain mu;
  FiniteGroup hat_H;                        // characters of H, abelian_group(factors)
  FiniteGroup quotient;                     // H\\G with cosets ordered by minimal element
  std::vector<int> coset_reps;              // minimal element per coset
  std::vector<std::vector<int>> right_action;  // [coset][character]
  std::vector<int> nu;                      // [c |Q| + d] -> character index
  FiniteGroup group;
  std::optional<std::string> iso_name;
};

/// witness_seed != 0 shifts each coset witness by a pseudo-random character; the
/// result must be isomorphic for every seed.
DualGroupData dual_group(const FiniteGroup& G, const Cochain& omega, const Subgroup& H, const Cochain& mu,
                         std::uint64_t witness_seed = 0);
DualGroupData dual_group(const FiniteGroup& G, const Cochain& omega, const LagrangianLabel& label,
                         std::uint64_t witness_seed = 0);

/// Dimension multiset plus the multiset of (d_a, d_b, d_c, N_ab^c) with N > 0.
struct FusionFingerprint {
  std::vector<std::int64_t> dims;
  std::vector<std::vector<std::int64_t>> products;

  friend bool operator==(const FusionFingerprint& a, const FusionFingerprint& b) {
    return a.dims == b.dims && a.products == b.products;
  }
};

FusionFingerprint fusion_fingerprint(const ModularData& data, const LagrangianLabel& label);
/// The same data for Rep(K) from the character table of K.
FusionFingerprint representation_fingerprint(const FiniteGroup& K);

struct RigidityReport {
  bool rigid = true;
  std::vector<std::string> evidence;  // one line per label
};

/// Every label's dual group is isomorphic to G; fingerprints are compared when the modular
/// data has at most max_objects objects.
RigidityReport is_morita_rigid(const FiniteGroup& G, int max_objects = 256);

enum class MoritaEvidence { equivalent, distinguished, undecided };

std::string to_string(MoritaEvidence e);

struct MoritaEntry {
  MoritaEvidence evidence = MoritaEvidence::undecided;
  std::string detail;  // witness or mismatched invariant
};

struct MoritaInput {
  std::string name;
  FiniteGroup G;
  Cochain omega;
};

struct MoritaClassReport {
  std::vector<std::string> names;
  std::vector<std::vector<MoritaEntry>> matrix;
};

/// Pairwise evidence. Equivalence needs a label of an untwisted side whose dual group is
/// isomorphic to the other group together with matching modular data; distinction uses the
/// group order, the Lagrangian count or a modular-data mismatch. Modular data are built only
/// for |G| <= modular_bound.
MoritaClassReport morita_classes(const std::vector<MoritaInput>& inputs, int modular_bound = 32);

}  // namespace twistkit
