#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/cohomology.hpp"
#include "twistkit/groups.hpp"

namespace twistkit::atlas {

/// One CLI invocation. `omegas[i]` belongs to `groups[i]`; missing entries are trivial.
struct JobSpec {
  std::string command;  // classify | verify | examples | morita | modular
  std::vector<std::string> groups;
  std::vector<std::string> omegas;
  std::optional<int> bound;
  std::string out;
  std::uint64_t seed = 0;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Command line form with quoted arguments, options in a fixed order.
std::string format_job(const JobSpec& job);
/// Inverse of format_job. Throws ParseError.
JobSpec parse_job(const std::string& text);

/// Cocycle DSL:
///   trivial
///   cyclic n k                          G cyclic of order n, via its first generator of order n
///   inflate cyclic n k via mod-W1-W2    pullback along G -> G/<W1,W2> (cyclic of order n)
///   abelian p1 p2 ...                   abelian_cocycle_basis parameters
///   file PATH                           cochain text format
/// The result is in standard form. Throws ParseError on malformed text and
/// PreconditionError when the data do not fit G.
Cochain parse_omega(const FiniteGroup& G, const std::string& spec);

struct Outcome {
  int exit_code = 0;
  std::string json;    // the record, newline terminated
  std::string report;  // human-readable lines
};

Outcome cmd_classify(const JobSpec& job);
Outcome cmd_verify(const JobSpec& job);
Outcome cmd_examples(const JobSpec& job);
Outcome cmd_morita(const JobSpec& job);
Outcome cmd_modular(const JobSpec& job);

/// Dispatch on job.command; library errors propagate.
Outcome run(const JobSpec& job);

/// 0 pass, 1 invariant failure, 2 parse or unusable input, 3 bound exceeded.
int exit_code_for(const std::exception& e);

}  // namespace twistkit::atlas
