// twistkit command-line front end.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twistkit/atlas.hpp"
#include "twistkit/error.hpp"

int main(int argc, char** argv) {
  using namespace twistkit;
  CLI::App app{"Lagrangian subcategories and Morita classes of twisted Drinfeld doubles"};
  app.require_subcommand(1, 1);

  atlas::JobSpec job;
  int bound = 0;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", job.groups, "group spec, repeatable (morita)");
    sub->add_option("--omega", job.omegas, "cocycle spec for the group at the same position");
    sub->add_option("--bound", bound, "order bound");
    sub->add_option("--out", job.out, "write JSON here instead of stdout");
    sub->add_option("--seed", job.seed, "seed for witness and sampled checks");
    sub->callback([&job, name] { job.command = name; });
    return sub;
  };
  add("classify", "Lagrangian labels, dual groups and cross-checks");
  add("verify", "labels against the brute-force search of the modular data");
  add("examples", "reproduce the worked examples");
  add("morita", "pairwise Morita evidence for two or more specs");
  add("modular", "S-matrix and twists of the double");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (bound != 0) job.bound = bound;

  try {
    auto out = atlas::run(job);
    if (job.out.empty()) {
      std::cout << out.json;
    } else {
      std::ofstream f(job.out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << job.out << "\n";
        return 2;
      }
      f << out.json;
    }
    std::cerr << out.report;
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return atlas::exit_code_for(e);
  }
}
