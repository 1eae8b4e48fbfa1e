// liestab: exact stabilizer Lie algebras of bilinear forms, congruence
// normal forms, graded derivation algebras, and the verification grid.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "liestab/classical.hpp"
#include "liestab/gradedalg.hpp"
#include "liestab/grid.hpp"
#include "liestab/json_io.hpp"
#include "liestab/stabilizer.hpp"

namespace {

using namespace liestab;

struct CommonOpts {
  std::string input;
  std::string output;
  std::string field_override;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_input = true) {
  auto* in = cmd->add_option("-i,--input", opts.input, "matrix JSON file");
  if (need_input) in->required();
  cmd->add_option("-o,--output", opts.output, "output JSON file");
  cmd->add_option("--field", opts.field_override, "reinterpret entries over this field");
  cmd->add_option("--format", opts.format, "stdout format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
}

ExactMatrix load_matrix(const CommonOpts& opts) {
  std::ifstream in(opts.input);
  if (!in) throw SyntaxError("cannot open input file: " + opts.input);
  nlohmann::json j = nlohmann::json::parse(in);
  std::optional<FieldSpec> field;
  if (!opts.field_override.empty()) field = FieldSpec::parse(opts.field_override);
  return matrix_from_json(j, field);
}

void emit(const CommonOpts& opts, const Json& j, const std::string& text_summary) {
  if (!opts.output.empty()) {
    std::ofstream out(opts.output);
    if (!out) throw SyntaxError("cannot open output file: " + opts.output);
    out << j.dump(2) << "\n";
  }
  if (opts.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_summary;
  }
}

std::string describe_class(const FormClass& fc) {
  switch (fc.kind) {
    case FormKind::Zero: return "zero form (o = gl_" + std::to_string(fc.normal_gram.rows()) + ")";
    case FormKind::Symplectic:
      if (fc.m == 0) return "sp_" + std::to_string(2 * fc.n);
      return "0_" + std::to_string(fc.m) + " + Pi_" + std::to_string(2 * fc.n);
    case FormKind::Diagonal: {
      std::string ds;
      for (std::size_t i = 0; i < fc.diagonal.size(); ++i) {
        if (i) ds += ",";
        ds += fc.diagonal[i].to_string();
      }
      if (fc.m == 0) return "o(diag(" + ds + "))";
      return "0_" + std::to_string(fc.m) + " + diag(" + ds + ")";
    }
  }
  return "?";
}

std::string report_text(const StructureReport& rpt) {
  std::string out = rpt.subject + "\n";
  for (const auto& row : rpt.rows) {
    out += "  [" + to_string(row.status) + "] " + row.name;
    if (row.status == CheckStatus::Pass || row.status == CheckStatus::Fail ||
        row.status == CheckStatus::Advisory) {
      out += ": predicted " + row.predicted + ", computed " + row.computed;
    }
    out += "\n";
  }
  out += rpt.all_passed() ? "all checks passed\n"
                          : std::to_string(rpt.failures()) + " check(s) FAILED\n";
  return out;
}

int cmd_normal_form(const CommonOpts& opts, bool rescale) {
  ExactMatrix M = load_matrix(opts);
  FormClass fc = normal_form(BilinearForm(M));
  if (rescale) fc = rescale_squares(fc);
  std::string text = "class: " + describe_class(fc) + "\nm = " + std::to_string(fc.m);
  if (fc.kind == FormKind::Symplectic) text += ", n = " + std::to_string(fc.n);
  text += "\n";
  emit(opts, formclass_to_json(fc), text);
  return 0;
}

int cmd_stab(const CommonOpts& opts, bool bar) {
  ExactMatrix M = load_matrix(opts);
  std::string text;
  Json j;
  if (!bar) {
    LieSubalgebra o = stab(M);
    j = algebra_to_json(o);
    text = "dim o = " + std::to_string(o.dim());
  } else {
    StabilizerPair pair = stab_bar(M);
    j["o"] = algebra_to_json(pair.o);
    j["obar"] = algebra_to_json(pair.obar);
    j["codim"] = pair.codim;
    Json lambda = Json::array();
    for (const auto& t : pair.lambda) lambda.push_back(t.to_string());
    j["lambda"] = std::move(lambda);
    text = "dim o = " + std::to_string(pair.o.dim()) +
           ", dim obar = " + std::to_string(pair.obar.dim()) +
           ", codim = " + std::to_string(pair.codim);
  }
  SymmetryClass sym = classify_symmetry(BilinearForm(M));
  if (sym != SymmetryClass::Neither) {
    text += " (" + describe_class(normal_form(BilinearForm(M))) + ")";
  }
  emit(opts, j, text + "\n");
  return 0;
}

int cmd_structure(const CommonOpts& opts) {
  ExactMatrix M = load_matrix(opts);
  StructureReport rpt = verify_structure(M);
  emit(opts, report_to_json(rpt), report_text(rpt));
  return rpt.all_passed() ? 0 : 1;
}

int cmd_derivations(const CommonOpts& opts) {
  ExactMatrix M = load_matrix(opts);
  GradedDerivationAlgebra gd = graded_pieces(M);
  bool witt = expected_minus1_dim(M) > 0 && classify_symmetry(BilinearForm(M)) != SymmetryClass::Neither;
  Json j;
  j["d"] = gd.d;
  j["dims"] = {{"minus1", gd.dim_minus1}, {"zero", gd.dim_zero}, {"plus1", gd.dim_plus1}};
  j["total_dim"] = gd.total.dim();
  j["witt_branch"] = witt;
  Json lambda = Json::array();
  for (const auto& t : gd.lambda) lambda.push_back(t.to_string());
  j["lambda"] = std::move(lambda);
  j["total"] = algebra_to_json(gd.total);
  std::string text = "graded piece dims: (" + std::to_string(gd.dim_minus1) + ", " +
                     std::to_string(gd.dim_zero) + ", " + std::to_string(gd.dim_plus1) +
                     "), total " + std::to_string(gd.total.dim()) +
                     (witt ? " [Witt shape]" : "") + "\n";
  emit(opts, j, text);
  return 0;
}

int cmd_classical(const CommonOpts& opts, const std::string& spec_text) {
  if (opts.field_override.empty()) throw SyntaxError("classical needs --field");
  FieldSpec field = FieldSpec::parse(opts.field_override);
  ClassicalSpec spec = ClassicalSpec::parse(spec_text);
  LieSubalgebra g = build_classical(spec, field);
  emit(opts, algebra_to_json(g),
       spec.to_string() + " over " + field.to_string() + ": dim " + std::to_string(g.dim()) +
           "\n");
  return 0;
}

int cmd_verify(const std::string& config_path, const std::string& output, bool no_timings,
               const std::string& format) {
  GridConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file: " + config_path);
    cfg = grid_config_from_json(nlohmann::json::parse(in));
  }
  AggregateReport agg = run_verify(cfg);
  Json j = aggregate_to_json(agg, !no_timings);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw ConfigError("cannot open output file: " + output);
    out << j.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : agg.cells) {
      std::size_t fails = 0;
      for (const auto& r : c.reports) fails += r.failures();
      std::cout << (fails == 0 ? "pass " : "FAIL ") << c.key << "\n";
    }
    for (const auto& c : agg.classical) {
      std::size_t fails = 0;
      for (const auto& r : c.reports) fails += r.failures();
      std::cout << (fails == 0 ? "pass " : "FAIL ") << c.key << "\n";
    }
    std::cout << agg.checks << " checks, " << agg.failed << " failed, " << agg.advisories
              << " advisories\n";
  }
  return agg.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie algebra stabilizers of bilinear forms"};
  app.require_subcommand(1);

  CommonOpts nf_opts, stab_opts, structure_opts, der_opts, classical_opts;
  bool bar = false;
  bool rescale = false;
  std::string classical_spec;
  std::string verify_config, verify_output, verify_format = "text";
  bool no_timings = false;

  auto* nf = app.add_subcommand("normal-form", "congruence normal form of a Gram matrix");
  add_common(nf, nf_opts);
  nf->add_flag("--rescale-squares", rescale,
               "over GF(p), rescale diagonal entries with square values to 1");

  auto* st = app.add_subcommand("stab", "stabilizer Lie algebra o(M), or obar(M) with --bar");
  add_common(st, stab_opts);
  st->add_flag("--bar", bar, "also compute the line stabilizer obar(M)");

  auto* str = app.add_subcommand("structure", "full structural check battery for M");
  add_common(str, structure_opts);

  auto* der = app.add_subcommand("derivations", "graded derivation algebra of the algebra of M");
  add_common(der, der_opts);

  auto* cls = app.add_subcommand("classical", "explicit classical-algebra constructors");
  add_common(cls, classical_opts, /*need_input=*/false);
  cls->add_option("--spec", classical_spec, "family, e.g. gl(3), o(1,2,1), sp(6), witt(2)")
      ->required();

  auto* ver = app.add_subcommand("verify", "run the verification grid");
  ver->add_option("--config", verify_config, "grid config JSON (defaults apply if omitted)");
  ver->add_option("-o,--output", verify_output, "aggregate report JSON file");
  ver->add_flag("--no-timings", no_timings, "omit timing fields for byte-stable output");
  ver->add_option("--format", verify_format, "stdout format: json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (nf->parsed()) return cmd_normal_form(nf_opts, rescale);
    if (st->parsed()) return cmd_stab(stab_opts, bar);
    if (str->parsed()) return cmd_structure(structure_opts);
    if (der->parsed()) return cmd_derivations(der_opts);
    if (cls->parsed()) return cmd_classical(classical_opts, classical_spec);
    if (ver->parsed()) return cmd_verify(verify_config, verify_output, no_timings, verify_format);
  } catch (const liestab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
