#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtc/character_table.hpp"
#include "mtc/error.hpp"
#include "mtc/fixedpoint.hpp"
#include "mtc/fusion.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/orbifold_z2.hpp"
#include "mtc/perm_group.hpp"
#include "mtc/spectrum.hpp"
#include "mtc/theories.hpp"
#include "report.hpp"

namespace mtc::cli {

namespace {

struct CommonOpts {
  bool json = false;
  std::uint64_t seed = 0;
};

RenderMode mode_of(const CommonOpts& opts) {
  return opts.json ? RenderMode::json : RenderMode::text;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < 1e-9 ? r : x;
}

std::string fmt_complex(const Complex& z) {
  char buf[96];
  const double re = snap(z.real());
  const double im = snap(z.imag());
  if (im == 0.0) {
    std::snprintf(buf, sizeof(buf), "%.6g", re + 0.0);
  } else {
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", re + 0.0, im + 0.0);
  }
  return buf;
}

ModularData load_spec_arg(const std::string& arg, std::ostream& err) {
  std::vector<std::string> warnings;
  const ModularData md = load_theory(parse_theory_spec(arg), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return md;
}

std::vector<std::size_t> resolve_insertions(const ModularData& md, const std::string& csv) {
  std::vector<std::size_t> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (std::size_t i = 0; i < md.rank(); ++i)
      if (md.labels[i] == item) {
        out.push_back(i);
        found = true;
        break;
      }
    if (!found) {
      try {
        const std::size_t idx = std::stoul(item);
        if (idx < md.rank()) {
          out.push_back(idx);
          found = true;
        }
      } catch (const std::exception&) {
      }
    }
    if (!found) fail(errc::usage, "unknown insertion label '" + item + "'");
  }
  return out;
}

int cmd_validate(const std::string& spec, const CommonOpts& opts, std::ostream& out,
                 std::ostream& err) {
  const ModularData md = load_spec_arg(spec, err);
  const ValidationReport report = validate(md);
  ReportDoc doc;
  doc.title = "validation of " + (md.name.empty() ? spec : md.name);
  doc.columns = {"check", "status", "residual"};
  for (const auto& c : report.checks) doc.add_row({c.name, c.pass, c.residual});
  out << render_report(doc, mode_of(opts));
  return report.all_pass() ? 0 : 2;
}

int cmd_fuse(const std::string& spec, const CommonOpts& opts, std::ostream& out,
             std::ostream& err) {
  const ModularData md = load_spec_arg(spec, err);
  const ValidationReport report = validate(md);
  if (!report.all_pass()) {
    out << report.summary();
    return 2;
  }
  const FusionRing fr = verlinde_fusion(md);
  ReportDoc doc;
  doc.title = "fusion rules of " + md.name;
  doc.columns = {"a", "b", "c", "N"};
  for (std::size_t a = 0; a < fr.rank(); ++a)
    for (std::size_t b = a; b < fr.rank(); ++b)
      for (std::size_t c = 0; c < fr.rank(); ++c)
        if (fr.coeff(a, b, c) != 0)
          doc.add_row({fr.labels[a], fr.labels[b], fr.labels[c], fr.coeff(a, b, c)});
  out << render_report(doc, mode_of(opts));
  return 0;
}

int cmd_orbifold(const std::string& spec, const CommonOpts& opts, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  const ModularData md = load_spec_arg(spec, err);
  const ValidationReport input_report = validate(md);
  if (!input_report.all_pass()) {
    out << "input theory fails validation:\n" << input_report.summary();
    return 2;
  }
  const ModularData orb = z2_assemble(md);
  const ValidationReport report = validate(orb);

  ReportDoc doc;
  doc.title = "Z2 orbifold of " + md.name;
  doc.columns = {"quantity", "value"};
  doc.add_row({std::string("labels"), static_cast<std::int64_t>(orb.rank())});
  doc.add_row({std::string("mu-index"), mu_index(orb)});
  doc.add_row({std::string("central charge"), orb.central_charge.str()});
  doc.add_row({std::string("gauss c0"), gauss_sum_c0(orb)});
  doc.add_row({std::string("all checks pass"), report.all_pass()});
  doc.add_row({std::string("worst residual"), report.worst_residual()});
  out << render_report(doc, mode_of(opts));

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) fail(errc::usage, "cannot write to '" + out_path + "'");
    file << serialize_theory(orb);
    err << "wrote " << out_path << "\n";
  }
  return report.all_pass() ? 0 : 2;
}

int cmd_spectrum(const std::string& spec, const CommonOpts& opts, std::size_t n,
                 const std::string& group_name, bool force, std::ostream& out,
                 std::ostream& err) {
  const ModularData md = load_spec_arg(spec, err);
  const ValidationReport input_report = validate(md);
  if (!input_report.all_pass()) {
    out << "input theory fails validation:\n" << input_report.summary();
    return 2;
  }
  const OrbifoldGroup group =
      group_name == "cyclic" ? OrbifoldGroup::cyclic : OrbifoldGroup::full;
  if (group_name != "cyclic" && group_name != "full")
    fail(errc::usage, "--group must be cyclic or full");
  SpectrumOptions sopts;
  sopts.seed = opts.seed;
  sopts.override_guard = force;
  if (force) err << "warning: size guard overridden; enumeration may be slow\n";

  const auto entries = enumerate_spectrum(md, n, group, sopts);
  double dim_sq = 0.0;
  for (const auto& e : entries) dim_sq += e.dim * e.dim;
  const double order = group == OrbifoldGroup::cyclic
                           ? static_cast<double>(n)
                           : std::tgamma(static_cast<double>(n) + 1.0);
  const double target = order * order * std::pow(mu_index(md), static_cast<double>(n));

  auto psi_names = [&](const SpectrumEntry& e) {
    std::string s;
    for (std::size_t i = 0; i < e.seed.psi.size(); ++i)
      s += (i ? ";" : "") + md.labels[e.seed.psi[i]];
    return s;
  };

  if (opts.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
      nlohmann::ordered_json row;
      row["p"] = cycle_string(e.seed.p);
      row["psi"] = psi_names(e);
      row["stabilizer_order"] = e.stabilizer.order();
      row["sigma_dim"] = e.sigma_dim;
      row["dim"] = e.dim;
      row["orbit_size"] = e.orbit_size;
      arr.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["entries"] = std::move(arr);
    doc["dim_sq_sum"] = dim_sq;
    doc["dim_sq_target"] = target;
    out << doc.dump(2) << "\n";
  } else {
    ReportDoc doc;
    doc.title = "sectors of the " + group_name + " n=" + std::to_string(n) + " orbifold of " +
                md.name;
    doc.columns = {"p", "psi", "stabilizer_order", "sigma", "sigma_dim", "dim", "orbit_size"};
    for (const auto& e : entries)
      doc.add_row({cycle_string(e.seed.p), psi_names(e),
                   static_cast<std::int64_t>(e.stabilizer.order()),
                   static_cast<std::int64_t>(e.sigma), e.sigma_dim, e.dim,
                   static_cast<std::int64_t>(e.orbit_size)});
    out << render_report(doc, RenderMode::text);
    out << "sectors: " << entries.size() << "\n";
    out << "sum(dim^2) = " << fmt(dim_sq) << " (target " << fmt(target) << ")\n";
  }
  return std::abs(dim_sq - target) / target < 1e-6 ? 0 : 2;
}

int cmd_integrality(const std::string& spec, const CommonOpts& opts, std::ostream& out,
                    std::ostream& err) {
  const ModularData md = load_spec_arg(spec, err);
  const ValidationReport input_report = validate(md);
  if (!input_report.all_pass()) {
    out << "input theory fails validation:\n" << input_report.summary();
    return 2;
  }
  const auto rows = integrality_report(md);
  bool all_ok = true;
  if (opts.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["l1"] = md.labels[r.l1];
      row["l2"] = md.labels[r.l2];
      row["l3"] = md.labels[r.l3];
      row["sign"] = r.sign;
      row["value"] = r.value;
      row["nearest"] = r.rounded;
      row["residual"] = r.residual;
      row["integral"] = r.integral;
      row["non_negative"] = r.non_negative;
      arr.push_back(std::move(row));
      all_ok = all_ok && r.integral && r.non_negative;
    }
    out << arr.dump(2) << "\n";
  } else {
    ReportDoc doc;
    doc.title = "integrality sweep of " + md.name;
    doc.columns = {"l1", "l2", "l3", "sign", "value", "nearest", "residual", "ok"};
    for (const auto& r : rows) {
      const bool ok = r.integral && r.non_negative;
      doc.add_row({md.labels[r.l1], md.labels[r.l2], md.labels[r.l3],
                   static_cast<std::int64_t>(r.sign), r.value, r.rounded, r.residual, ok});
      all_ok = all_ok && ok;
    }
    out << render_report(doc, RenderMode::text);
  }
  return all_ok ? 0 : 2;
}

int cmd_genus_blocks(const std::string& spec, const CommonOpts& opts, std::size_t genus,
                     const std::string& insertions_csv, std::ostream& out, std::ostream& err) {
  const ModularData md = load_spec_arg(spec, err);
  const ValidationReport input_report = validate(md);
  if (!input_report.all_pass()) {
    out << "input theory fails validation:\n" << input_report.summary();
    return 2;
  }
  const auto insertions = resolve_insertions(md, insertions_csv);
  const std::int64_t value = genus_blocks(md, insertions, genus);
  if (opts.json) {
    nlohmann::ordered_json doc;
    doc["genus"] = genus;
    auto names = nlohmann::ordered_json::array();
    for (std::size_t i : insertions) names.push_back(md.labels[i]);
    doc["insertions"] = std::move(names);
    doc["blocks"] = value;
    out << doc.dump(2) << "\n";
  } else {
    out << "genus " << genus << " blocks with " << insertions.size()
        << " insertion(s): " << value << "\n";
  }
  return 0;
}

int cmd_fixedpoint(const std::string& input_path, const std::string& example,
                   std::int64_t level, const CommonOpts& opts, std::ostream& out,
                   std::ostream& err) {
  if (!example.empty()) {
    if (example != "h8") fail(errc::usage, "unknown fixedpoint example '" + example + "'");
    const auto rows = h8_example(level);
    ReportDoc doc;
    doc.title = "H8 fixed-point resolution at level " + std::to_string(2 * level);
    doc.columns = {"sigma", "pieces"};
    for (const auto& r : rows)
      doc.add_row({(r.sigma_exponent >= 0 ? std::to_string(r.sigma_exponent)
                                          : "-" + std::to_string(-r.sigma_exponent)),
                   static_cast<std::int64_t>(r.count)});
    out << render_report(doc, mode_of(opts));
    return 0;
  }
  if (input_path.empty())
    fail(errc::usage, "fixedpoint needs a ResolutionInput JSON file or --example h8");
  std::ifstream in(input_path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + input_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const ResolutionInput inp = parse_resolution_input(buf.str(), opts.seed);
  const auto fixed = fixed_set(inp);
  const std::size_t count = resolution_count(inp);
  ReportDoc doc;
  doc.title = "fixed-point resolution";
  doc.columns = {"quantity", "value"};
  doc.add_row({std::string("fixed-set order"), static_cast<std::int64_t>(fixed.size())});
  doc.add_row({std::string("irreducible pieces"), static_cast<std::int64_t>(count)});
  out << render_report(doc, mode_of(opts));
  (void)err;
  return 0;
}

int cmd_chartable(const std::string& spec, const CommonOpts& opts, std::ostream& out,
                  std::ostream& err) {
  const PermGroup g = build_group(spec);
  const CharacterTable table = character_table(g, opts.seed);
  ReportDoc doc;
  doc.title = "character table of " + spec + " (order " + std::to_string(g.order()) + ")";
  doc.columns = {"irrep"};
  for (std::size_t c = 0; c < table.num_classes(); ++c)
    doc.columns.push_back(cycle_string(table.class_reps[c]) + " x" +
                          std::to_string(table.class_sizes[c]));
  for (std::size_t i = 0; i < table.num_classes(); ++i) {
    std::vector<Cell> row;
    row.push_back("chi_" + std::to_string(i) + " (dim " + std::to_string(table.dims[i]) + ")");
    for (std::size_t c = 0; c < table.num_classes(); ++c)
      row.push_back(fmt_complex(table.chi[i][c]));
    doc.add_row(std::move(row));
  }
  out << render_report(doc, mode_of(opts));
  (void)err;
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"modular data, fusion rules and permutation orbifolds"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string theory_spec;
  std::string group_spec;
  std::string out_path;
  std::string group_name = "full";
  std::string insertions;
  std::string example;
  std::string input_path;
  std::size_t n = 2;
  std::size_t genus = 0;
  std::int64_t level = 1;
  bool force = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", common.json, "machine-readable output");
    cmd->add_option("--seed", common.seed, "seed for randomized character-table splitting");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "run the eight modular checks");
  validate_cmd->add_option("theory", theory_spec, "builtin: URI or file path")->required();
  add_common(validate_cmd);

  CLI::App* fuse_cmd = app.add_subcommand("fuse", "Verlinde fusion rules");
  fuse_cmd->add_option("theory", theory_spec)->required();
  add_common(fuse_cmd);

  CLI::App* orb_cmd = app.add_subcommand("orbifold-z2", "assemble and verify the Z2 orbifold");
  orb_cmd->add_option("theory", theory_spec)->required();
  orb_cmd->add_option("-o,--output", out_path, "write the orbifold theory document");
  add_common(orb_cmd);

  CLI::App* spec_cmd = app.add_subcommand("spectrum", "irreducible sectors of D^{Z_n} or D^{P_n}");
  spec_cmd->add_option("theory", theory_spec)->required();
  spec_cmd->add_option("--n", n, "number of tensor factors")->required();
  spec_cmd->add_option("--group", group_name, "cyclic or full (default full)");
  spec_cmd->add_flag("--force", force, "override the combinatorial size guard");
  add_common(spec_cmd);

  CLI::App* int_cmd = app.add_subcommand("integrality", "non-negative-integer sweep over triples");
  int_cmd->add_option("theory", theory_spec)->required();
  add_common(int_cmd);

  CLI::App* genus_cmd = app.add_subcommand("genus-blocks", "conformal block counting sums");
  genus_cmd->add_option("theory", theory_spec)->required();
  genus_cmd->add_option("--genus", genus, "genus g in S^{2-2g}")->required();
  genus_cmd->add_option("--insertions", insertions, "comma-separated labels");
  add_common(genus_cmd);

  CLI::App* fix_cmd = app.add_subcommand("fixedpoint", "fixed-point resolution counting");
  fix_cmd->add_option("input", input_path, "ResolutionInput JSON file");
  fix_cmd->add_option("--example", example, "named preset (h8)");
  fix_cmd->add_option("--level", level, "k1 for the h8 preset");
  add_common(fix_cmd);

  CLI::App* chart_cmd = app.add_subcommand("chartable", "numeric character table of a finite group");
  chart_cmd->add_option("group", group_spec, "cyclic:n | sym:n | gens:<cycles> | quaternion")
      ->required();
  add_common(chart_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(theory_spec, common, out, err);
    if (fuse_cmd->parsed()) return cmd_fuse(theory_spec, common, out, err);
    if (orb_cmd->parsed()) return cmd_orbifold(theory_spec, common, out_path, out, err);
    if (spec_cmd->parsed())
      return cmd_spectrum(theory_spec, common, n, group_name, force, out, err);
    if (int_cmd->parsed()) return cmd_integrality(theory_spec, common, out, err);
    if (genus_cmd->parsed())
      return cmd_genus_blocks(theory_spec, common, genus, insertions, out, err);
    if (fix_cmd->parsed()) return cmd_fixedpoint(input_path, example, level, common, out, err);
    if (chart_cmd->parsed()) return cmd_chartable(group_spec, common, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case errc::usage:
      case errc::parse_error:
      case errc::schema_error:
      case errc::shape_error:
      case errc::size_guard:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 1;
}

}  // namespace mtc::cli
