// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "linrel/blockcalc.hpp"
#include "linrel/io.hpp"
#include "linrel/oracle.hpp"

namespace linrel::cli
{

using io::json;

enum ExitCode : int
{
  exit_ok = 0,
  exit_verification_failure = 1,
  exit_input_error = 2,
  exit_precondition = 3
};

struct Options
{
  ToleranceConfig cfg;
  std::uint64_t seed = 0x5eedULL;
  std::string out; // empty: standard output
};

inline TripletKind parse_triplet(const std::string &name)
{
  if (name == "main")
    return TripletKind::main;
  if (name == "basic")
    return TripletKind::basic;
  if (name == "basic_op" || name == "basic-op")
    return TripletKind::basic_op;
  if (name == "tilde")
    return TripletKind::tilde;
  throw io::InputError("unknown triplet \"" + name + "\" (expected main, basic or tilde)");
}

// "a" or "a,b" (real and imaginary part).
inline Scalar parse_lambda(const std::string &text)
{
  const auto comma = text.find(',');
  try
  {
    std::size_t used = 0;
    if (comma == std::string::npos)
    {
      const double re = std::stod(text, &used);
      if (used != text.size())
        throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    std::size_t ua = 0, ub = 0;
    const double re = std::stod(a, &ua), im = std::stod(b, &ub);
    if (ua != a.size() || ub != b.size())
      throw std::invalid_argument(text);
    return {re, im};
  }
  catch (const std::logic_error &)
  {
    throw io::InputError("cannot parse lambda \"" + text + "\" (expected re or re,im)");
  }
}

inline const std::vector<Scalar> &default_lambda_grid()
{
  static const std::vector<Scalar> grid = {Scalar(-10), Scalar(-1), Scalar(-0.1),
                                           Scalar(0, 1), Scalar(1, 1), Scalar(2)};
  return grid;
}

// Runs `body` and maps library exceptions onto exit codes, printing the diagnostic to `err`.
inline int guarded(const std::function<int()> &body, std::ostream &err)
{
  try
  {
    return body();
  }
  catch (const io::InputError &e)
  {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
  catch (const DimensionMismatch &e)
  {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
  catch (const InvariantViolation &e)
  {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
  catch (const PreconditionViolated &e)
  {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << "\n";
    return exit_verification_failure;
  }
}

namespace detail
{
inline void write_text(const Options &opt, const std::string &text, std::ostream &out)
{
  if (opt.out.empty())
  {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f)
    throw io::InputError("cannot write " + opt.out);
  f << text;
}

inline json header(const std::string &command, const Options &opt)
{
  json cfg = io::to_json(opt.cfg);
  cfg["seed"] = opt.seed;
  return {{"tool", "linrel"}, {"version", kVersion}, {"command", command}, {"config", cfg}};
}

inline json parts_json(const RelationParts &p)
{
  return {{"dom", io::to_json(p.dom)}, {"ran", io::to_json(p.ran)}, {"ker", io::to_json(p.ker)},
          {"mul", io::to_json(p.mul)}};
}

inline json symmetry_json(const SymmetryReport &r)
{
  if (!r.square)
    return {{"applicable", false}};
  return {{"applicable", true},
          {"is_symmetric", r.is_symmetric},
          {"is_selfadjoint", r.is_selfadjoint},
          {"is_nonnegative", r.is_nonnegative},
          {"dom_perp_ran", r.dom_perp_ran},
          {"cross_gram_max", r.cross_gram_max},
          {"lower_bound", io::number(r.lower_bound)},
          {"numerical_range_radius", r.numerical_range_radius}};
}

inline json check(bool pass, double residual)
{
  return {{"pass", pass}, {"residual", residual}};
}

inline json relation_check(const LinearRelation &a, const LinearRelation &b, const ToleranceConfig &cfg)
{
  const SubspaceComparison c = relate(a, b, cfg);
  return check(c.verdict == Inclusion::equal, c.max_angle);
}
} // namespace detail

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

inline json analyze_report(const io::RelationSpec &spec, const Options &opt)
{
  json rep = detail::header("analyze", opt);
  rep["input"] = spec.source;
  const RelationParts p = parts(spec.relation, opt.cfg);
  rep["dims"] = {{"n1", spec.relation.n1()}, {"n2", spec.relation.n2()}, {"graph", spec.relation.dim()}};
  rep["parts"] = detail::parts_json(p);
  rep["symmetry"] = detail::symmetry_json(classify(spec.relation, opt.cfg, kDefaultRangeSamples, opt.seed));
  rep["adjoint"] = io::to_json(adjoint(spec.relation), "adjoint");
  rep["operator_part_norm"] = operator_part_norm(spec.relation, opt.cfg);
  return rep;
}

inline int cmd_analyze(const std::string &spec_path, const Options &opt, std::ostream &out, std::ostream &err)
{
  return guarded(
      [&] {
        opt.cfg.validate();
        const io::RelationSpec spec = io::load_spec(spec_path, opt.cfg);
        detail::write_text(opt, analyze_report(spec, opt).dump(2) + "\n", out);
        return int(exit_ok);
      },
      err);
}

// ---------------------------------------------------------------------------
// extensions
// ---------------------------------------------------------------------------

inline json triplet_json(const BoundaryTriplet &t, const LiftBundle &b, const Options &opt, std::mt19937_64 &rng)
{
  const ToleranceConfig &cfg = opt.cfg;
  json j;
  j["g"] = t.g();
  j["green_residual"] = green_residual_sampled(t, 100, rng);
  j["green_residual_all_pairs"] = green_residual(t);
  j["rank"] = boundary_rank(t, cfg);
  j["surjective"] = is_surjective(t, cfg);
  const LinearRelation *k0 = nullptr, *k1 = nullptr;
  switch (t.kind)
  {
  case TripletKind::main:
    k0 = &b.H, k1 = &b.K;
    break;
  case TripletKind::basic:
    k0 = &b.S_F, k1 = &b.S_K;
    break;
  case TripletKind::tilde:
    k0 = &b.S_F, k1 = &b.K;
    break;
  case TripletKind::basic_op:
    break;
  }
  if (k0)
  {
    j["ker_gamma0"] = detail::relation_check(kernel_gamma0(t, cfg), *k0, cfg);
    j["ker_gamma1"] = detail::relation_check(kernel_gamma1(t, cfg), *k1, cfg);
  }
  return j;
}

inline json extensions_report(const io::RelationSpec &spec, const Options &opt, bool &all_pass)
{
  const ToleranceConfig &cfg = opt.cfg;
  std::mt19937_64 rng(opt.seed);
  json rep = detail::header("extensions", opt);
  rep["input"] = spec.source;
  const LiftBundle b = lift(spec.relation, cfg);

  json rel;
  rel["S"] = io::to_json(b.S, "S");
  rel["S_star"] = io::to_json(b.S_star, "S*");
  rel["H"] = io::to_json(b.H, "H");
  rel["K"] = io::to_json(b.K, "K");
  rel["S_F"] = io::to_json(b.S_F, "S_F");
  rel["S_K"] = io::to_json(b.S_K, "S_K");
  rel["S0"] = io::to_json(b.S0, "S0");
  rel["S0_star"] = io::to_json(b.S0_star, "S0*");
  rel["S_tilde"] = io::to_json(b.S_tilde, "S~");
  rel["S_tilde_star"] = io::to_json(b.S_tilde_star, "S~*");
  rep["relations"] = rel;
  rep["boundary_spaces"] = {{"G", io::to_json(b.G)}, {"G0", io::to_json(b.G0)}, {"G_tilde", io::to_json(b.G_tilde)}};

  json checks;
  checks["S_star_closed_form"] = detail::relation_check(adjoint(b.S), b.S_star, cfg);
  checks["S_tilde_star_closed_form"] = detail::relation_check(adjoint(b.S_tilde), b.S_tilde_star, cfg);
  checks["friedrichs_generic"] = detail::relation_check(friedrichs_generic(b.S, cfg), b.S_F, cfg);
  checks["krein_generic"] = detail::relation_check(krein_generic(b.S, cfg), b.S_K, cfg);
  checks["S0_is_meet_of_S_F_and_S_K"] = detail::relation_check(intersection(b.S_F, b.S_K, cfg), b.S0, cfg);
  const S0AdjointCheck s0 = s0_adjoint_decomposition_check(b, cfg);
  checks["S0_star_closed_form"] = {{"pass", s0.matches_closed_form}};
  checks["S0_star_is_S_F_plus_S_K"] = {{"pass", s0.is_sum_of_extremes}};
  checks["S_star_is_H_plus_K"] = {{"pass", s0.transversal}};
  const SymmetryReport sym = classify(b.S, cfg, kDefaultRangeSamples, opt.seed);
  checks["lift_dom_perp_ran"] = json{{"pass", sym.dom_perp_ran && sym.is_nonnegative}};
  rep["S_F_equals_S_K"] = equal(b.S_F, b.S_K, cfg);

  json trip;
  trip["main"] = triplet_json(triplet_main(b), b, opt, rng);
  trip["basic"] = triplet_json(triplet_basic(b), b, opt, rng);
  trip["tilde"] = triplet_json(triplet_tilde(b), b, opt, rng);
  rep["triplets"] = trip;

  json order = json::array();
  const Index g0 = b.G0.dim();
  random::Engine trng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 3 && g0 > 0; ++i)
  {
    const LinearRelation theta = random::selfadjoint_relation(g0, trng, true);
    const KreinOrder k = krein_order_check(nonneg_extension(b, theta, cfg), b, cfg);
    order.push_back({{"pass", k.holds},
                     {"lower_gap_min_eig", k.lower_gap_min_eig},
                     {"upper_gap_min_eig", k.upper_gap_min_eig}});
  }
  checks["krein_order_samples"] = order;

  json family = json::array();
  for (const bool whole : {false, true})
  {
    const Subspace L = whole ? Subspace::full(g0) : Subspace(g0);
    const LinearRelation A = extremal_family(b, L, cfg);
    family.push_back({{"L", whole ? "G0" : "{0}"},
                      {"extremal", is_extremal(A, b, cfg)},
                      {"equals_S_F", equal(A, b.S_F, cfg)},
                      {"equals_S_K", equal(A, b.S_K, cfg)}});
  }
  rep["extremal_family"] = family;
  rep["G0_dim"] = g0;
  rep["checks"] = checks;

  all_pass = true;
  for (auto &[name, c] : checks.items())
  {
    if (c.is_array())
    {
      for (auto &e : c)
        all_pass = all_pass && e["pass"].get<bool>();
    }
    else
      all_pass = all_pass && c["pass"].get<bool>();
  }
  for (auto &[name, t] : trip.items())
  {
    all_pass = all_pass && t["surjective"].get<bool>() && t["green_residual"].get<double>() < 1e-10;
    if (t.contains("ker_gamma0"))
      all_pass = all_pass && t["ker_gamma0"]["pass"].get<bool>() && t["ker_gamma1"]["pass"].get<bool>();
  }
  for (auto &f : family)
    all_pass = all_pass && f["extremal"].get<bool>();
  rep["all_checks_pass"] = all_pass;
  return rep;
}

inline int cmd_extensions(const std::string &spec_path, const Options &opt, std::ostream &out, std::ostream &err)
{
  return guarded(
      [&] {
        opt.cfg.validate();
        const io::RelationSpec spec = io::load_spec(spec_path, opt.cfg);
        bool pass = false;
        const json rep = extensions_report(spec, opt, pass);
        detail::write_text(opt, rep.dump(2) + "\n", out);
        if (!pass)
          err << "one or more extension checks failed\n";
        return int(pass ? exit_ok : exit_verification_failure);
      },
      err);
}

// ---------------------------------------------------------------------------
// weyl
// ---------------------------------------------------------------------------

inline std::string weyl_csv(const BoundaryTriplet &t, const std::vector<Scalar> &lambdas, const ToleranceConfig &cfg)
{
  const Index g = t.g();
  std::ostringstream os;
  std::vector<std::string> head = {"re_lambda", "im_lambda"};
  for (Index i = 0; i < g; ++i)
    for (Index j = 0; j < g; ++j)
    {
      const std::string tag = "M_" + std::to_string(i) + "_" + std::to_string(j);
      head.push_back(tag + "_re");
      head.push_back(tag + "_im");
    }
  head.push_back("status");
  io::write_csv_row(os, head);
  for (const WeylPoint &p : weyl_grid(t, lambdas, cfg))
  {
    std::vector<std::string> row = {io::format_double(p.lambda.real()), io::format_double(p.lambda.imag())};
    for (Index i = 0; i < g; ++i)
      for (Index j = 0; j < g; ++j)
      {
        row.push_back(p.singular ? "" : io::format_double(p.matrix(i, j).real()));
        row.push_back(p.singular ? "" : io::format_double(p.matrix(i, j).imag()));
      }
    row.push_back(p.singular ? "singular" : "ok");
    io::write_csv_row(os, row);
  }
  return os.str();
}

inline int cmd_weyl(const std::string &spec_path, const std::string &triplet, const std::vector<Scalar> &lambdas,
                    const Options &opt, std::ostream &out, std::ostream &err)
{
  return guarded(
      [&] {
        opt.cfg.validate();
        const TripletKind kind = parse_triplet(triplet);
        const io::RelationSpec spec = io::load_spec(spec_path, opt.cfg);
        const LiftBundle b = lift(spec.relation, opt.cfg);
        const BoundaryTriplet t = make_triplet(b, kind);
        detail::write_text(opt, weyl_csv(t, lambdas.empty() ? default_lambda_grid() : lambdas, opt.cfg), out);
        return int(exit_ok);
      },
      err);
}

// ---------------------------------------------------------------------------
// extend
// ---------------------------------------------------------------------------

inline json extend_report(const io::RelationSpec &spec, const io::RelationSpec &theta_spec, TripletKind kind,
                          const Options &opt)
{
  const ToleranceConfig &cfg = opt.cfg;
  const LiftBundle b = lift(spec.relation, cfg);
  const BoundaryTriplet t = make_triplet(b, kind);
  const LinearRelation &theta = theta_spec.relation;
  if (theta.n1() != t.g() || theta.n2() != t.g())
    throw DimensionMismatch("theta must act in the boundary space of dimension " + std::to_string(t.g()));
  if (!is_selfadjoint(theta, cfg))
    throw PreconditionViolated("theta is not selfadjoint");
  const LinearRelation A = extension_from_boundary(t, theta, cfg);

  json rep = detail::header("extend", opt);
  rep["input"] = spec.source;
  rep["theta"] = theta_spec.source;
  rep["triplet"] = to_string(kind);
  rep["boundary_space"] = io::to_json(t.boundary_space);
  rep["extension"] = io::to_json(A, "A_theta");
  const SymmetryReport sym = classify(A, cfg, kDefaultRangeSamples, opt.seed);
  rep["selfadjoint"] = sym.is_selfadjoint;
  rep["nonnegative"] = sym.is_nonnegative;
  rep["lower_bound"] = io::number(sym.lower_bound);
  rep["extends_S"] = contains(A, b.S, cfg);
  const bool nonneg_ext = sym.is_selfadjoint && sym.is_nonnegative && contains(A, b.S, cfg);
  if (nonneg_ext)
  {
    rep["extremal"] = is_extremal(A, b, cfg);
    const KreinOrder k = krein_order_check(A, b, cfg);
    rep["krein_order"] = {{"pass", k.holds},
                          {"lower_gap_min_eig", k.lower_gap_min_eig},
                          {"upper_gap_min_eig", k.upper_gap_min_eig}};
  }
  else
  {
    rep["extremal"] = nullptr;
    rep["krein_order"] = nullptr;
  }
  rep["equals"] = {{"H", equal(A, b.H, cfg)},     {"K", equal(A, b.K, cfg)},
                   {"S_F", equal(A, b.S_F, cfg)}, {"S_K", equal(A, b.S_K, cfg)}};
  return rep;
}

inline int cmd_extend(const std::string &spec_path, const std::string &theta_path, const std::string &triplet,
                      const Options &opt, std::ostream &out, std::ostream &err)
{
  return guarded(
      [&] {
        opt.cfg.validate();
        const TripletKind kind = parse_triplet(triplet);
        const io::RelationSpec spec = io::load_spec(spec_path, opt.cfg);
        const io::RelationSpec theta = io::load_spec(theta_path, opt.cfg);
        detail::write_text(opt, extend_report(spec, theta, kind, opt).dump(2) + "\n", out);
        return int(exit_ok);
      },
      err);
}

// ---------------------------------------------------------------------------
// semibound-demo
// ---------------------------------------------------------------------------

inline const std::vector<double> &default_c_list()
{
  static const std::vector<double> cs = {0, 1, 2, 4, 8, 16, 32};
  return cs;
}

inline std::string semibound_csv(const AlternativeReport &rep)
{
  std::ostringstream os;
  io::write_csv_row(os, {"c", "lower_bound", "closed_form", "abs_error", "bound_x", "bound_holds"});
  for (const AlternativeRow &r : rep.rows)
    io::write_csv_row(os, {io::format_double(r.c), io::format_double(r.lower_bound), io::format_double(r.closed_form),
                           io::format_double(std::abs(r.lower_bound - r.closed_form)), io::format_double(r.bound_x),
                           r.bound_holds ? "true" : "false"});
  return os.str();
}

inline std::string semibound_verdict(const AlternativeReport &rep)
{
  std::ostringstream os;
  os << "alternative: each finite member is semibounded; m(A) "
     << (rep.strictly_decreasing ? "decreases strictly" : "does NOT decrease strictly") << " along c (last "
     << io::format_double(rep.rows.back().lower_bound) << " at c = " << io::format_double(rep.rows.back().c)
     << "), bounded-case bound " << (rep.part_i_holds ? "holds" : "FAILS") << ", max |generic - closed form| = "
     << io::format_double(rep.max_abs_error);
  return os.str();
}

inline int cmd_semibound_demo(double delta, const std::vector<double> &c_list, const Options &opt, std::ostream &out,
                              std::ostream &err)
{
  return guarded(
      [&] {
        opt.cfg.validate();
        const AlternativeReport rep =
            alternative_experiment(c_list.empty() ? default_c_list() : c_list, delta, opt.cfg);
        detail::write_text(opt, semibound_csv(rep), out);
        const std::string verdict = semibound_verdict(rep);
        (opt.out.empty() ? err : out) << verdict << "\n";
        const bool pass = rep.strictly_decreasing && rep.part_i_holds && rep.max_abs_error < 1e-8;
        return int(pass ? exit_ok : exit_verification_failure);
      },
      err);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyLine
{
  std::string name;
  bool pass;
  std::string detail;
};

// Oracle-backed property suite on one relation.
inline std::vector<VerifyLine> verify_relation(const LinearRelation &R, const Options &opt)
{
  const ToleranceConfig &cfg = opt.cfg;
  std::vector<VerifyLine> lines;
  auto add = [&](const std::string &name, bool pass, const std::string &detail = "") {
    lines.push_back({name, pass, detail});
  };
  auto angle_line = [&](const std::string &name, const LinearRelation &a, const LinearRelation &b) {
    const SubspaceComparison c = relate(a, b, cfg);
    add(name, c.verdict == Inclusion::equal, std::string(to_string(c.verdict)) + ", max angle " +
                                                 io::format_double(c.max_angle));
  };

  angle_line("adjoint_matches_definition", adjoint(R), oracle::adjoint_definitional(R, cfg.rank_tol));
  angle_line("adjoint_involution", adjoint(adjoint(R)), R);
  {
    const RelationParts p = parts(R, cfg), q = parts(inverse(R), cfg);
    add("parts_nested", contains(p.dom, p.ker, cfg) && contains(p.ran, p.mul, cfg));
    add("inverse_swaps_parts",
        equal(p.dom, q.ran, cfg) && equal(p.ran, q.dom, cfg) && equal(p.ker, q.mul, cfg) && equal(p.mul, q.ker, cfg));
  }

  const LiftBundle b = lift(R, cfg);
  angle_line("lift_adjoint_closed_form", oracle::adjoint_definitional(b.S, cfg.rank_tol), b.S_star);
  angle_line("lift_tilde_adjoint_closed_form", oracle::adjoint_definitional(b.S_tilde, cfg.rank_tol), b.S_tilde_star);
  {
    const SymmetryReport s = classify(b.S, cfg, kDefaultRangeSamples, opt.seed);
    add("lift_dom_perp_ran", s.dom_perp_ran && s.is_nonnegative && s.is_symmetric);
  }
  angle_line("friedrichs_generic", friedrichs_generic(b.S, cfg), b.S_F);
  angle_line("krein_generic", krein_generic(b.S, cfg), b.S_K);
  angle_line("S0_is_meet", intersection(b.S_F, b.S_K, cfg), b.S0);
  {
    const S0AdjointCheck s = s0_adjoint_decomposition_check(b, cfg);
    add("S0_star_closed_form", s.matches_closed_form);
    add("S0_star_is_S_F_plus_S_K", s.is_sum_of_extremes);
    add("S_star_is_H_plus_K", s.transversal);
  }

  std::mt19937_64 rng(opt.seed);
  for (const TripletKind kind : {TripletKind::main, TripletKind::basic, TripletKind::tilde})
  {
    const BoundaryTriplet t = make_triplet(b, kind);
    const std::string tag = std::string("triplet_") + to_string(kind);
    const double gr = green_residual_sampled(t, 100, rng);
    add(tag + "_green", gr < 1e-10, "residual " + io::format_double(gr));
    add(tag + "_surjective", is_surjective(t, cfg),
        "rank " + std::to_string(boundary_rank(t, cfg)) + " of " + std::to_string(2 * t.g()));
    const LinearRelation &k0 = kind == TripletKind::main ? b.H : b.S_F;
    const LinearRelation &k1 = kind == TripletKind::basic ? b.S_K : b.K;
    angle_line(tag + "_ker_gamma0", kernel_gamma0(t, cfg), k0);
    angle_line(tag + "_ker_gamma1", kernel_gamma1(t, cfg), k1);
    double worst = 0.0, sym = 0.0;
    for (const Scalar lam : default_lambda_grid())
    {
      const Mat M = weyl(t, lam, cfg).matrix;
      worst = std::max(worst, (M - weyl_closed_form(t, lam, b.n1()).matrix).norm());
      sym = std::max(sym, ::linrel::detail::max_abs(M.adjoint() - weyl(t, std::conj(lam), cfg).matrix));
    }
    add(tag + "_weyl_closed_form", worst < 1e-9, "frobenius " + io::format_double(worst));
    add(tag + "_weyl_symmetry", sym < 1e-9, "max entry " + io::format_double(sym));
  }

  {
    const BoundaryTriplet t = triplet_main(b);
    const oracle::SweepReport sw = oracle::extension_sweep(t, oracle::theta_grid(t.g(), 8, opt.seed, 2), cfg);
    add("extension_sweep_selfadjoint_correspondence", sw.correspondence_ok);
    add("extension_sweep_between_S_and_S_star", sw.all_between);
    add("extension_sweep_injective", sw.injective);
  }

  const Index g0 = b.G0.dim();
  if (g0 > 0)
  {
    random::Engine trng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    const BoundaryTriplet tb = triplet_basic(b);
    bool order = true, same = true;
    for (int i = 0; i < 5; ++i)
    {
      const LinearRelation theta = random::selfadjoint_relation(g0, trng, true);
      const LinearRelation A = nonneg_extension(b, theta, cfg);
      order = order && krein_order_check(A, b, cfg).holds;
      same = same && equal(A, extension_from_boundary(tb, theta, cfg), cfg);
    }
    add("krein_order", order);
    add("block_formula_matches_boundary_parametrization", same);
  }
  return lines;
}

inline int cmd_verify(const std::string &spec_path, const Options &opt, std::ostream &out, std::ostream &err)
{
  try
  {
    opt.cfg.validate();
    const io::RelationSpec spec = io::load_spec(spec_path, opt.cfg);
    const std::vector<VerifyLine> lines = verify_relation(spec.relation, opt);
    std::ostringstream os;
    bool ok = true;
    for (const VerifyLine &l : lines)
    {
      ok = ok && l.pass;
      os << (l.pass ? "PASS " : "FAIL ") << l.name;
      if (!l.detail.empty())
        os << ": " << l.detail;
      os << "\n";
    }
    os << (ok ? "verify: all properties hold\n" : "verify: FAILED\n");
    detail::write_text(opt, os.str(), out);
    return ok ? exit_ok : exit_verification_failure;
  }
  catch (const InvariantViolation &e)
  {
    err << "FAIL input invariant: " << e.what() << "\n";
    return exit_verification_failure;
  }
  catch (const io::InputError &e)
  {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
  catch (const DimensionMismatch &e)
  {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
  catch (const PreconditionViolated &e)
  {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  }
  catch (const std::exception &e)
  {
    err << "FAIL " << e.what() << "\n";
    return exit_verification_failure;
  }
}

} // namespace linrel::cli
