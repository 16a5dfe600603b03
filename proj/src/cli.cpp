#include "slopenorm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "slopenorm/families.hpp"
#include "slopenorm/manifold_io.hpp"
#include "slopenorm/plot.hpp"
#include "slopenorm/verify.hpp"

namespace slopenorm {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string manifold_path;
  std::vector<std::string> slopes;
  std::int64_t range = 0;
  std::int64_t n = 0;
  std::int64_t crossings = 0;
  std::string out_path;
  std::string format = "text";
  std::string level;
  std::string target;
};

ManifoldData require_manifold(const Options& opt) {
  if (opt.manifold_path.empty()) throw UsageError("-m/--manifold is required");
  return load(opt.manifold_path);
}

std::vector<Slope> parsed_slopes(const Options& opt) {
  std::vector<Slope> slopes;
  for (const std::string& s : opt.slopes) slopes.push_back(parse_slope(s));
  return slopes;
}

std::pair<Slope, Slope> slope_pair(const Options& opt, const ManifoldData& m) {
  const std::vector<Slope> given = parsed_slopes(opt);
  if (given.size() == 2) return {given[0], given[1]};
  if (!given.empty()) throw UsageError("expected exactly two -r slopes");
  const std::vector<Slope> finite = m.boundary_slopes.finite_sorted();
  if (finite.size() < 2) throw UsageError("give two -r slopes");
  return {finite.back(), finite.front()};
}

json to_json(const VerifyReport& r) {
  json doc = {{"statement", r.statement}, {"status", to_string(r.status)},
              {"lhs", r.lhs},             {"rhs", r.rhs},
              {"witnesses", r.witnesses}};
  if (!r.note.empty()) doc["note"] = r.note;
  if (r.margin) doc["margin"] = to_string(*r.margin);
  if (!r.details.empty()) {
    json details = json::array();
    for (const VerifyReport& d : r.details) details.push_back(to_json(d));
    doc["details"] = std::move(details);
  }
  return doc;
}

std::string sweep_line(const VerifyReport& r) {
  if (r.status == Status::not_applicable) return summary_line(r);
  std::string line = to_string(r.status) + ": " + r.lhs + "/" + r.rhs + " slopes";
  if (!r.witnesses.empty()) line += " (first failure " + r.witnesses.front() + ")";
  return line;
}

int emit(const std::vector<VerifyReport>& reports, const Options& opt, std::ostream& out,
         bool sweep = false) {
  if (opt.format == "json") {
    json doc = json::array();
    for (const VerifyReport& r : reports) doc.push_back(to_json(r));
    out << doc.dump(2) << '\n';
  } else {
    for (const VerifyReport& r : reports) {
      const std::string line = sweep ? sweep_line(r) : summary_line(r);
      if (reports.size() == 1) {
        out << line << '\n';
      } else {
        out << r.statement << ": " << line << '\n';
      }
    }
  }
  return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return passed(r); })
             ? 0
             : 1;
}

int run_eval(const Options& opt, std::ostream& out) {
  const std::vector<Slope> slopes = parsed_slopes(opt);
  if (opt.target == "distance") {
    if (slopes.size() != 2) throw UsageError("eval distance needs exactly two -r slopes");
    out << distance(slopes[0], slopes[1]) << '\n';
    return 0;
  }
  if (slopes.empty()) throw UsageError("eval needs at least one -r slope");
  const ManifoldData m = require_manifold(opt);
  json doc = json::array();
  for (const Slope& r : slopes) {
    std::string value;
    if (opt.target == "norm") {
      if (!m.norm) throw std::invalid_argument("manifold has no Culler-Shalen norm");
      value = std::to_string(evaluate(*m.norm, r));
      doc.push_back({{"slope", to_string(r)}, {"norm", evaluate(*m.norm, r)}});
    } else {
      if (!m.cusp) throw std::invalid_argument("manifold has no cusp");
      const Rational len2 = squared_length(*m.cusp, r);
      value = to_string(len2) + " (length ≈ " + sqrt_decimal(len2) + ")";
      doc.push_back({{"slope", to_string(r)},
                     {"squared_length", to_string(len2)},
                     {"length_decimal", sqrt_decimal(len2)}});
    }
    if (opt.format == "text") out << (slopes.size() > 1 ? to_string(r) + ": " : "") << value << '\n';
  }
  if (opt.format == "json") out << doc.dump(2) << '\n';
  return 0;
}

std::vector<VerifyReport> surface_pairs(const ManifoldData& m, bool euler_form) {
  std::vector<VerifyReport> reports;
  for (std::size_t i = 0; i < m.surfaces.size(); ++i) {
    for (std::size_t j = 0; j < m.surfaces.size(); ++j) {
      const SurfaceData& a = m.surfaces[i];
      const SurfaceData& b = m.surfaces[j];
      if (euler_form) {
        if (a.slope.is_meridian() || b.slope.is_meridian() || a.euler >= 0 || b.euler >= 0) continue;
        if (!numeric_less(b.slope, a.slope)) continue;
        reports.push_back(corollary_euler(a.slope, b.slope, a, b));
      } else if (i < j && a.slope != b.slope) {
        reports.push_back(prop6_condition(a, b));
      }
    }
  }
  return reports;
}

int run_verify(const Options& opt, std::ostream& out) {
  const ManifoldData m = require_manifold(opt);
  const std::string& check = opt.target;
  std::vector<VerifyReport> reports;

  if (check == "thm1") {
    if (opt.range > 0) return emit({sweep_norm_ge_length(m, opt.range)}, opt, out, true);
    const std::vector<Slope> slopes = parsed_slopes(opt);
    if (slopes.empty()) throw UsageError("thm1 needs -r slopes or --range N");
    for (const Slope& r : slopes) reports.push_back(verify_norm_ge_length(m, r));
  } else if (check == "thm2") {
    if (opt.range > 0) {
      const std::vector<Slope> finite = m.boundary_slopes.finite_sorted();
      const std::int64_t hi = ceil_to_int(numeric_value(finite.back()));
      const std::int64_t lo = floor_to_int(numeric_value(finite.front()));
      std::int64_t checked = 0;
      std::int64_t holding = 0;
      VerifyReport sweep;
      sweep.statement = "thm2 integral sweep " + std::to_string(opt.range);
      for (std::int64_t p1 = hi; p1 <= opt.range; ++p1) {
        for (std::int64_t p2 = -opt.range; p2 <= lo; ++p2) {
          ++checked;
          const VerifyReport r =
              verify_thm_length_norm(m, normalize_slope(p1, 1), normalize_slope(p2, 1));
          if (passed(r)) {
            ++holding;
          } else if (sweep.witnesses.empty()) {
            sweep.witnesses.push_back(r.statement);
          }
        }
      }
      sweep.lhs = std::to_string(holding);
      sweep.rhs = std::to_string(checked);
      sweep.status = holding == checked ? Status::holds : Status::fails;
      return emit({sweep}, opt, out, true);
    }
    const auto [r1, r2] = slope_pair(opt, m);
    reports.push_back(verify_thm_length_norm(m, r1, r2));
  } else if (check == "thm3") {
    std::vector<Slope> slopes = parsed_slopes(opt);
    if (slopes.empty()) slopes = m.boundary_slopes.finite_sorted();
    for (const Slope& r : slopes) reports.push_back(verify_thm_diam(m, r));
  } else if (check == "prop-length") {
    if (!m.cusp) throw std::invalid_argument("manifold has no cusp");
    const auto [r1, r2] = slope_pair(opt, m);
    reports.push_back(verify_prop_length(*m.cusp, r1, r2));
  } else if (check == "prop-norm") {
    if (!m.norm) throw std::invalid_argument("manifold has no Culler-Shalen norm");
    const auto [r1, r2] = slope_pair(opt, m);
    reports.push_back(verify_prop_norm(*m.norm, r1, r2, m.boundary_slopes));
  } else if (check == "prop4") {
    reports.push_back(prop4_hypothesis(m));
  } else if (check == "prop6") {
    reports = surface_pairs(m, false);
  } else if (check == "cor-ubdiam") {
    reports.push_back(verify_cor_ubdiam(m));
  } else if (check == "cor-euler") {
    reports = surface_pairs(m, true);
  } else {  // all
    reports = verify_all(m, opt.range > 0 ? opt.range : 20);
  }
  if (reports.empty()) throw std::invalid_argument("nothing to check for " + check);
  return emit(reports, opt, out);
}

int run_family(const Options& opt, std::ostream& out) {
  ManifoldData m = [&] {
    if (opt.target == "fig8") return fig8_dataset();
    if (opt.target == "pretzel") {
      if (opt.n == 0) throw UsageError("pretzel needs --n K");
      return pretzel_dataset(opt.n);
    }
    if (opt.crossings == 0) throw UsageError("twobridge needs --crossings C");
    // Balanced split of chi1 + chi2 = 2 - C.
    const std::int64_t total = opt.crossings - 2;
    return twobridge_dataset(opt.crossings, -(total / 2), -(total - total / 2));
  }();
  if (opt.out_path.empty()) {
    out << dump_manifold(m);
  } else {
    save(m, opt.out_path);
  }
  return 0;
}

int run_plot(const Options& opt, std::ostream& out) {
  const ManifoldData m = require_manifold(opt);
  std::optional<Rational> level;
  if (!opt.level.empty()) level = parse_rational(opt.level);
  const std::string svg = unit_ball_svg(m, level);
  if (opt.out_path.empty()) {
    out << svg;
    return 0;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << svg)) throw std::runtime_error("cannot write " + opt.out_path);
  return 0;
}

int run_report(const Options& opt, std::ostream& out) {
  const ManifoldData m = require_manifold(opt);
  const std::vector<VerifyReport> reports = verify_all(m, opt.range > 0 ? opt.range : 20);
  if (opt.format == "json") return emit(reports, opt, out);

  out << "manifold: " << m.name << '\n';
  out << "boundary slopes:";
  for (const Slope& s : m.boundary_slopes.slopes()) out << ' ' << s;
  out << '\n';
  if (m.boundary_slopes.finite_sorted().size() >= 2) {
    out << "diameter: " << to_string(diam(m.boundary_slopes)) << '\n';
  }
  if (m.cusp) {
    const auto sys = systole_squared(*m.cusp);
    out << "cusp Gram: (" << to_string(m.cusp->g_mm()) << ", " << to_string(m.cusp->g_ml())
        << ", " << to_string(m.cusp->g_ll()) << ")" << (m.cusp->maximal ? " maximal" : "")
        << ", area^2 " << to_string(area_squared(*m.cusp)) << '\n';
    out << "systole^2: " << to_string(sys.value) << " at " << sys.slope << '\n';
  }
  if (m.norm) {
    const MinNorm least = min_norm_nontrivial(*m.norm);
    out << "norm(m): " << meridian_norm(*m.norm) << ", least non-meridional norm " << least.value
        << " at " << least.slope << '\n';
    out << "unit ball vertices:";
    for (const Point2Q& v : unit_ball_vertices(*m.norm)) {
      out << " (" << to_string(v(0)) << ", " << to_string(v(1)) << ")";
    }
    out << '\n';
  }
  if (m.certified_meridian_norm) {
    out << "certified norm(m): " << *m.certified_meridian_norm
        << ", so norm(m)/len(m) >= " << to_string(Rational(*m.certified_meridian_norm, 6)) << '\n';
  }
  out << "checks:\n";
  bool ok = true;
  for (const VerifyReport& r : reports) {
    const bool sweep = r.statement.rfind("thm1 sweep", 0) == 0;
    out << "  " << r.statement << ": " << (sweep ? sweep_line(r) : summary_line(r)) << '\n';
    ok = ok && passed(r);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact slope lengths and Culler-Shalen norms on a cusp torus", "slopenorm"};
  app.require_subcommand(1);
  Options opt;

  const auto add_manifold = [&](CLI::App* cmd) {
    cmd->add_option("-m,--manifold", opt.manifold_path, "Manifold document (JSON)");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "Exact squared length, norm or distance");
  eval->add_option("quantity", opt.target)->required()->check(CLI::IsMember({"length", "norm", "distance"}));
  add_manifold(eval);
  eval->add_option("-r,--slope", opt.slopes, "Slope p/q (repeatable)");
  add_format(eval);

  CLI::App* verify = app.add_subcommand("verify", "Run a verifier");
  verify->add_option("check", opt.target)
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "prop-length", "prop-norm", "prop4", "prop6",
                             "cor-ubdiam", "cor-euler", "all"}));
  add_manifold(verify);
  verify->add_option("-r,--slope", opt.slopes, "Slope p/q (repeatable)");
  verify->add_option("--range", opt.range, "Sweep |p| <= N, 1 <= q <= N")->check(CLI::PositiveNumber);
  add_format(verify);

  CLI::App* family = app.add_subcommand("family", "Emit a built-in dataset");
  family->add_option("kind", opt.target)->required()->check(CLI::IsMember({"fig8", "pretzel", "twobridge"}));
  family->add_option("--n", opt.n, "Pretzel parameter (odd, >= 7)");
  family->add_option("--crossings", opt.crossings, "Crossing number for the two-bridge pair");
  family->add_option("--out", opt.out_path, "Write to PATH instead of stdout");

  CLI::App* plot = app.add_subcommand("plot", "Static SVG of the unit ball and a length ellipse");
  plot->add_option("figure", opt.target)->required()->check(CLI::IsMember({"unit-ball"}));
  add_manifold(plot);
  plot->add_option("--out", opt.out_path, "SVG output path");
  plot->add_option("--level", opt.level, "Squared-length level of the ellipse (rational)");

  CLI::App* report = app.add_subcommand("report", "Summary of every verifier on a manifold");
  add_manifold(report);
  report->add_option("--range", opt.range, "Sweep bound for the slope sweep")->check(CLI::PositiveNumber);
  add_format(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(opt, out);
    if (verify->parsed()) return run_verify(opt, out);
    if (family->parsed()) return run_family(opt, out);
    if (plot->parsed()) return run_plot(opt, out);
    return run_report(opt, out);
  } catch (const ManifoldFormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace slopenorm
