// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linrel/commands.hpp"

namespace
{

void add_common(CLI::App *cmd, linrel::cli::Options &opt, bool with_out = true)
{
  cmd->add_option("--tol-rank", opt.cfg.rank_tol, "relative singular-value cutoff")->capture_default_str();
  cmd->add_option("--tol-angle", opt.cfg.angle_tol, "largest principal angle (rad) for subspace equality")
      ->capture_default_str();
  cmd->add_option("--psd-floor", opt.cfg.psd_floor, "smallest eigenvalue accepted as nonnegative")
      ->capture_default_str();
  cmd->add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();
  if (with_out)
    cmd->add_option("--out", opt.out, "write the result to this file instead of stdout");
}

} // namespace

int main(int argc, char **argv)
{
  using namespace linrel::cli;

  CLI::App app{"linrel: linear relations, their selfadjoint extensions and boundary triplets"};
  app.set_version_flag("--version", std::string(linrel::kVersion));
  app.require_subcommand(1);

  Options opt;
  std::string spec, theta, triplet = "main";
  std::vector<std::string> lambdas;
  std::vector<double> cs;
  double delta = 1.0;

  CLI::App *analyze = app.add_subcommand("analyze", "parts, symmetry classes and adjoint of a relation (JSON)");
  analyze->add_option("spec", spec, "relation spec (JSON)")->required();
  add_common(analyze, opt);

  CLI::App *extensions = app.add_subcommand("extensions", "lift, distinguished extensions and their checks (JSON)");
  extensions->add_option("spec", spec, "relation spec (JSON)")->required();
  add_common(extensions, opt);

  CLI::App *weyl = app.add_subcommand("weyl", "Weyl function on a lambda grid (CSV)");
  weyl->add_option("spec", spec, "relation spec (JSON)")->required();
  weyl->add_option("--triplet", triplet, "boundary triplet")
      ->check(CLI::IsMember({"main", "basic", "tilde"}))
      ->capture_default_str();
  weyl->add_option("--lambda", lambdas, "grid point, re or re,im (repeatable; default -10,-1,-0.1,i,1+i,2)")
      ->allow_extra_args(false);
  add_common(weyl, opt);

  CLI::App *extend = app.add_subcommand("extend", "extension A_theta for a boundary parameter (JSON)");
  extend->add_option("spec", spec, "relation spec (JSON)")->required();
  extend->add_option("--theta", theta, "parameter relation in the boundary space (JSON spec)")->required();
  extend->add_option("--triplet", triplet, "boundary triplet")
      ->check(CLI::IsMember({"main", "basic", "tilde"}))
      ->capture_default_str();
  add_common(extend, opt);

  CLI::App *demo = app.add_subcommand("semibound-demo", "lower bounds of A for Theta = -delta along graph(c) (CSV)");
  demo->add_option("--delta", delta, "size of the negative parameter")->capture_default_str();
  demo->add_option("--c", cs, "increasing nonnegative scalars (repeatable; default 0,1,2,4,8,16,32)")
      ->allow_extra_args(false);
  add_common(demo, opt);

  CLI::App *verify = app.add_subcommand("verify", "oracle-backed property suite on one relation");
  verify->add_option("spec", spec, "relation spec (JSON)")->required();
  add_common(verify, opt);

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  if (analyze->parsed())
    return cmd_analyze(spec, opt, std::cout, std::cerr);
  if (extensions->parsed())
    return cmd_extensions(spec, opt, std::cout, std::cerr);
  if (weyl->parsed())
  {
    std::vector<linrel::Scalar> grid;
    try
    {
      for (const std::string &s : lambdas)
        grid.push_back(parse_lambda(s));
    }
    catch (const linrel::io::InputError &e)
    {
      std::cerr << "input error: " << e.what() << "\n";
      return exit_input_error;
    }
    return cmd_weyl(spec, triplet, grid, opt, std::cout, std::cerr);
  }
  if (extend->parsed())
    return cmd_extend(spec, theta, triplet, opt, std::cout, std::cerr);
  if (demo->parsed())
    return cmd_semibound_demo(delta, cs, opt, std::cout, std::cerr);
  if (verify->parsed())
    return cmd_verify(spec, opt, std::cout, std::cerr);
  return exit_input_error;
}
