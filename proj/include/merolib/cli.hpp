#pragma once

// Command dispatch shared by the `mero` binary and the test suites. Exit
// code contract: 0 success, 1 rejected precondition (e.g. the positivity
// gate), 2 caps exhausted / undecided, 64 usage errors.

#include "merolib/cli_parsers.hpp"
#include "merolib/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace mero::cli {

using io::Json;

struct DispatchResult {
  int exit_code = 0;
  Json report;
  std::string format = "json";
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitUsage = 64;

namespace detail {

inline Json conventions() {
  Json j;
  j["braid"] = braidvar::kConventionTag;
  j["trace"] = "walk a1..am acts by M(am)*...*M(a1); cycle traces are rotation invariant";
  j["positivity"] = "crossing words reduce cyclically; geometric gate requires all +";
  return j;
}

inline Json envelope(const std::string& command, Json config, Json result) {
  Json j;
  j["command"] = command;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  j["conventions"] = conventions();
  return j;
}

}  // namespace detail

inline DispatchResult dispatch(const std::vector<std::string>& args,
                               const Caps& caps = Caps::from_env()) {
  DispatchResult out;

  CLI::App app{"exact computations for trace spaces, braid varieties and holonomies"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  // hh0
  auto* hh0 = app.add_subcommand("hh0", "trace space of a quiver path algebra");
  hh0->fallthrough();
  std::string hh0_quiver;
  int hh0_len = 0;
  hh0->add_option("--quiver", hh0_quiver)->required();
  hh0->add_option("--max-len", hh0_len)->required();

  // ho
  auto* ho = app.add_subcommand("ho", "trace pairing of a chain with a representation");
  ho->fallthrough();
  std::string ho_quiver, ho_chain, ho_rep;
  ho->add_option("--quiver", ho_quiver)->required();
  ho->add_option("--chain", ho_chain)->required();
  ho->add_option("--rep", ho_rep)->required();

  // braid
  auto* braid = app.add_subcommand("braid", "braid words and braid varieties");
  braid->require_subcommand(1);
  braid->fallthrough();
  auto* braid_dem = braid->add_subcommand("demazure", "Demazure product of a word");
  braid_dem->fallthrough();
  auto* braid_var = braid->add_subcommand("variety", "variety presentation of a word");
  braid_var->fallthrough();
  auto* braid_count = braid->add_subcommand("count", "F_q point count of a presentation");
  braid_count->fallthrough();
  int braid_strands = 2;
  std::string braid_word, braid_out, braid_pres;
  std::uint32_t braid_q = 5;
  braid_dem->add_option("--strands", braid_strands)->required();
  braid_dem->add_option("--word", braid_word)->required();
  braid_var->add_option("--strands", braid_strands)->required();
  braid_var->add_option("--word", braid_word)->required();
  braid_var->add_option("--out", braid_out);
  braid_count->add_option("--pres", braid_pres)->required();
  braid_count->add_option("--q", braid_q)->required();

  // lift
  auto* lift = app.add_subcommand("lift", "local Hochschild lift of a crossing word");
  lift->fallthrough();
  std::string lift_crossings;
  int lift_disks = 0;
  lift->add_option("--crossings", lift_crossings);
  lift->add_option("--disks", lift_disks);

  // merodromy
  auto* mer = app.add_subcommand("merodromy", "parallel transport along a homology class");
  mer->fallthrough();
  std::string mer_chart, mer_cycle;
  mer->add_option("--chart", mer_chart)->required();
  mer->add_option("--cycle", mer_cycle)->required();

  // regular
  auto* reg = app.add_subcommand("regular", "global regularity of a rational section");
  reg->fallthrough();
  std::string reg_ring, reg_num, reg_den, reg_caps;
  reg->add_option("--ring", reg_ring)->required();
  reg->add_option("--num", reg_num)->required();
  reg->add_option("--den", reg_den)->required();
  reg->add_option("--caps", reg_caps);

  // hopf
  auto* hopf = app.add_subcommand("hopf", "Hopf link moduli");
  hopf->require_subcommand(1);
  hopf->fallthrough();
  auto* hopf_census = hopf->add_subcommand("census", "orbit census of X(F_q)");
  hopf_census->fallthrough();
  std::uint32_t hopf_q = 3;
  hopf_census->add_option("--q", hopf_q)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "local-to-global regularity verification");
  verify->fallthrough();
  int verify_spikes = 1, verify_rank = 1;
  std::uint32_t verify_q = 5;
  std::uint64_t verify_seed = 42;
  verify->add_option("--spikes", verify_spikes)->required();
  verify->add_option("--rank", verify_rank)->required();
  verify->add_option("--q", verify_q);
  verify->add_option("--seed", verify_seed);

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance or oracles battery");
  suite_cmd->fallthrough();
  std::string suite_name;
  std::uint64_t suite_seed = 42;
  suite_cmd->add_option("name", suite_name)->required()
      ->check(CLI::IsMember({"acceptance", "oracles"}));
  suite_cmd->add_option("--seed", suite_seed);

  std::vector<const char*> argv;
  argv.push_back("mero");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out.report = Json{{"help", app.help()}};
    out.exit_code = kExitOk;
    return out;
  } catch (const CLI::ParseError& e) {
    out.report = Json{{"error", e.what()}};
    out.exit_code = kExitUsage;
    return out;
  }
  out.format = format;

  try {
    if (*hh0) {
      auto quiver = parse_quiver_spec(hh0_quiver);
      auto ts = quiverhh::trace_space(quiver, hh0_len, caps.walk);
      Json basis = Json::array();
      for (const auto& b : ts.basis) basis.push_back(b.str(quiver));
      out.report = detail::envelope(
          "hh0", Json{{"quiver", hh0_quiver}, {"max_len", hh0_len}},
          Json{{"dimension", ts.dimension()}, {"basis", basis}});
    } else if (*ho) {
      auto quiver = parse_quiver_spec(ho_quiver);
      auto parsed = parse_rep_spec(ho_rep, quiver);
      auto chain = parse_chain_spec(ho_chain, quiver);
      Json result;
      if (parsed.symbolic) {
        auto value = quiverhh::ho_trace_symbolic(chain, parsed.symbolic_rep);
        result["value"] = value.str();
        result["symbolic"] = true;
      } else {
        auto value = quiverhh::ho_trace(chain, parsed.numeric_rep);
        result["value"] = value.str();
        result["symbolic"] = false;
      }
      out.report = detail::envelope(
          "ho", Json{{"quiver", ho_quiver}, {"chain", ho_chain}, {"rep", ho_rep}}, result);
    } else if (*braid_dem) {
      braidvar::BraidWord w{braid_strands, parse_csv_ints(braid_word)};
      auto d = braidvar::demazure(w);
      out.report = detail::envelope(
          "braid demazure", Json{{"strands", braid_strands}, {"word", w.letters}},
          Json{{"image", d.img},
               {"length", d.length()},
               {"is_longest", d.is_longest()}});
    } else if (*braid_var) {
      braidvar::BraidWord w{braid_strands, parse_csv_ints(braid_word)};
      auto pres = braidvar::variety_presentation(w);
      Json pj = io::presentation_to_json(pres);
      if (!braid_out.empty()) {
        std::ofstream f(braid_out);
        if (!f) throw exactalg::PreconditionError("cannot write " + braid_out);
        f << pj.dump(2) << "\n";
      }
      out.report = detail::envelope(
          "braid variety", Json{{"strands", braid_strands}, {"word", w.letters}}, pj);
    } else if (*braid_count) {
      auto pres = io::load_presentation(braid_pres);
      auto n = braidvar::count_points(pres, braid_q, caps.enumeration);
      out.report = detail::envelope(
          "braid count", Json{{"pres", braid_pres}, {"q", braid_q}}, Json{{"count", n}});
    } else if (*lift) {
      auto w = holonomy::CrossingWord::parse(lift_crossings, lift_disks);
      Json config{{"crossings", lift_crossings}, {"disks", w.disks}};
      try {
        auto l = holonomy::local_lift(w);
        std::string cls = l.chain.terms.front().second.str(l.quiver);
        auto iv = holonomy::intersection_vector(w);
        out.report = detail::envelope(
            "lift", config,
            Json{{"reduced_length", l.reduced_length},
                 {"quiver", l.reduced_length == 0
                                ? std::string("loop")
                                : "cyclic:" + std::to_string(l.reduced_length)},
                 {"class", cls},
                 {"chart_restriction", holonomy::restrict_to_chart(l).str()},
                 {"intersection_vector", iv},
                 {"homologically_positive",
                  holonomy::is_positive(w, holonomy::PositivityMode::Homological)}});
      } catch (const holonomy::PositivityError& e) {
        out.report = detail::envelope(
            "lift", config,
            Json{{"error", "positivity"}, {"offending_index", e.offending_index}});
        out.exit_code = kExitRejected;
      }
    } else if (*mer) {
      holonomy::ChartPoint point{parse_csv_scalars(mer_chart)};
      std::vector<long> cls;
      for (int v : parse_csv_ints(mer_cycle)) cls.push_back(v);
      auto value = holonomy::merodromy(point, cls);
      out.report = detail::envelope(
          "merodromy", Json{{"chart", mer_chart}, {"cycle", mer_cycle}},
          Json{{"value", value.str()}});
    } else if (*reg) {
      Caps rcaps = caps;
      if (!reg_caps.empty()) apply_regular_caps(rcaps, reg_caps);
      auto ring = io::load_ring(reg_ring);
      groebner::RationalSection section{exactalg::parse_poly(reg_num, ring.vars),
                                        exactalg::parse_poly(reg_den, ring.vars), ring};
      auto res = groebner::is_regular(section, rcaps);
      Json result;
      switch (res.status) {
        case groebner::RegularityStatus::Regular:
          result["status"] = "regular";
          result["witness"] = Json{{"h", res.witness->str()},
                                   {"unit_cofactor", res.unit_cofactor->str()}};
          break;
        case groebner::RegularityStatus::NotRegular:
          result["status"] = "not_regular";
          result["certificate"] =
              Json{{"q", res.certificate->q}, {"point", res.certificate->point}};
          break;
        case groebner::RegularityStatus::Undecided:
          result["status"] = "undecided";
          result["note"] = res.note;
          out.exit_code = kExitUndecided;
          break;
      }
      out.report = detail::envelope(
          "regular",
          Json{{"ring", reg_ring}, {"num", reg_num}, {"den", reg_den},
               {"caps", Json{{"degree", rcaps.degree},
                             {"unit_multiplicity", rcaps.unit_multiplicity}}}},
          result);
    } else if (*hopf_census) {
      auto census = holonomy::hopf_orbit_census(hopf_q, caps.enumeration);
      out.report = detail::envelope(
          "hopf census", Json{{"q", hopf_q}},
          Json{{"total", census.total},
               {"free_alpha_orbits", census.free_alpha_orbits},
               {"free_alpha_orbit_size", census.free_alpha_orbit_size},
               {"orbit_x_size", census.orbit_x_size},
               {"orbit_y_size", census.orbit_y_size},
               {"fixed_points", census.fixed_points}});
    } else if (*verify) {
      auto report = holonomy::verify_local_to_global(verify_spikes, verify_rank, verify_q,
                                                     verify_seed);
      bool ok = report.matches == report.checks && report.nonnegative_exponents;
      out.report = detail::envelope(
          "verify",
          Json{{"spikes", verify_spikes}, {"rank", verify_rank}, {"q", verify_q},
               {"seed", verify_seed}},
          Json{{"polynomial", report.polynomial.str()},
               {"nonnegative_exponents", report.nonnegative_exponents},
               {"tally", std::to_string(report.matches) + "/" +
                             std::to_string(report.checks)},
               {"pass", ok}});
      if (!ok) out.exit_code = kExitRejected;
    } else if (*suite_cmd) {
      std::vector<suite::CriterionResult> results;
      if (suite_name == "acceptance") {
        auto hook = [&caps](const std::vector<std::string>& a) {
          auto res = dispatch(a, caps);
          return std::make_pair(res.exit_code, res.report);
        };
        results = suite::run_acceptance(suite_seed, hook);
      } else {
        results = suite::run_oracles(suite_seed);
      }
      Json report = suite::suite_report(suite_name, suite_seed, results);
      bool all = report["all_pass"].get<bool>();
      out.report = detail::envelope(
          "suite", Json{{"name", suite_name}, {"seed", suite_seed}}, std::move(report));
      if (!all) out.exit_code = kExitRejected;
    }
  } catch (const holonomy::PositivityError& e) {
    out.report = Json{{"error", e.what()}};
    out.exit_code = kExitRejected;
  } catch (const exactalg::CapExceededError& e) {
    out.report = Json{{"error", e.what()}};
    out.exit_code = kExitUndecided;
  } catch (const exactalg::PreconditionError& e) {
    out.report = Json{{"error", e.what()}};
    out.exit_code = kExitRejected;
  } catch (const exactalg::ArithmeticError& e) {
    out.report = Json{{"error", e.what()}};
    out.exit_code = kExitRejected;
  }
  return out;
}

}  // namespace mero::cli
