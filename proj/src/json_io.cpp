#include "liestab/json_io.hpp"

namespace liestab {

namespace {

std::string entry_to_string(const nlohmann::json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  throw SyntaxError("matrix entries must be scalar strings or integers");
}

}  // namespace

Json matrix_to_json(const ExactMatrix& m) {
  Json j;
  j["field"] = m.field().to_string();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).to_string());
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ExactMatrix matrix_from_json(const nlohmann::json& j, std::optional<FieldSpec> field_override) {
  if (!j.is_object() || !j.contains("rows")) {
    throw SyntaxError("matrix JSON needs an object with a \"rows\" array");
  }
  FieldSpec field;
  if (field_override) {
    field = *field_override;
  } else if (j.contains("field")) {
    field = FieldSpec::parse(j.at("field").get<std::string>());
  } else {
    throw SyntaxError("matrix JSON needs a \"field\" entry (or an explicit override)");
  }
  const auto& rows = j.at("rows");
  if (!rows.is_array()) throw SyntaxError("\"rows\" must be an array of arrays");
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.at(0).size();
  ExactMatrix m(r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != c) throw SyntaxError("ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) {
      m.at(i, k) = Scalar::parse(field, entry_to_string(row.at(k)));
    }
  }
  return m;
}

Json algebra_to_json(const LieSubalgebra& g) {
  Json j;
  j["ambient_dim"] = g.ambient_dim();
  j["field"] = g.field().to_string();
  j["dim"] = g.dim();
  Json basis = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) basis.push_back(matrix_to_json(g.basis_matrix(i)));
  j["basis"] = std::move(basis);
  return j;
}

Json formclass_to_json(const FormClass& fc) {
  Json j;
  switch (fc.kind) {
    case FormKind::Zero: j["kind"] = "zero"; break;
    case FormKind::Diagonal: j["kind"] = "diagonal"; break;
    case FormKind::Symplectic: j["kind"] = "symplectic"; break;
  }
  j["m"] = fc.m;
  if (fc.kind == FormKind::Symplectic) j["n"] = fc.n;
  if (fc.kind == FormKind::Diagonal) {
    Json diag = Json::array();
    for (const auto& s : fc.diagonal) diag.push_back(s.to_string());
    j["D"] = std::move(diag);
  }
  j["g"] = matrix_to_json(fc.transform);
  j["normal_gram"] = matrix_to_json(fc.normal_gram);
  return j;
}

Json report_to_json(const StructureReport& r) {
  Json j;
  j["subject"] = r.subject;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json rj;
    rj["name"] = row.name;
    rj["claim"] = row.claim;
    rj["predicted"] = row.predicted;
    rj["computed"] = row.computed;
    rj["status"] = to_string(row.status);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  j["failures"] = r.failures();
  return j;
}

Json grid_config_to_json(const GridConfig& cfg) {
  Json j;
  j["fields"] = cfg.fields;
  j["max_m"] = cfg.max_m;
  j["max_n"] = cfg.max_n;
  Json kinds = Json::array();
  if (cfg.diagonal) kinds.push_back("diagonal");
  if (cfg.symplectic) kinds.push_back("symplectic");
  j["form_kinds"] = std::move(kinds);
  j["diag_pool"] = cfg.diag_pool;
  j["seed"] = cfg.seed;
  j["parallel"] = cfg.parallel;
  j["der_max_dim"] = cfg.der_max_dim;
  return j;
}

GridConfig grid_config_from_json(const nlohmann::json& j) {
  GridConfig cfg;
  try {
    if (j.contains("fields")) cfg.fields = j.at("fields").get<std::vector<std::string>>();
    if (j.contains("max_m")) cfg.max_m = j.at("max_m").get<int>();
    if (j.contains("max_n")) cfg.max_n = j.at("max_n").get<int>();
    if (j.contains("form_kinds")) {
      cfg.diagonal = false;
      cfg.symplectic = false;
      for (const auto& k : j.at("form_kinds")) {
        std::string s = k.get<std::string>();
        if (s == "diagonal") cfg.diagonal = true;
        else if (s == "symplectic") cfg.symplectic = true;
        else throw ConfigError("unknown form kind: \"" + s + "\"");
      }
    }
    if (j.contains("diag_pool")) cfg.diag_pool = j.at("diag_pool").get<std::vector<std::string>>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("parallel")) cfg.parallel = j.at("parallel").get<bool>();
    if (j.contains("der_max_dim")) cfg.der_max_dim = j.at("der_max_dim").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad grid config: ") + e.what());
  }
  if (cfg.max_m < 0 || cfg.max_n < 0) throw ConfigError("max_m and max_n must be >= 0");
  return cfg;
}

Json aggregate_to_json(const AggregateReport& agg, bool include_timings) {
  Json j;
  j["config"] = grid_config_to_json(agg.config);
  auto cell_to_json = [&](const CellResult& c) {
    Json cj;
    cj["key"] = c.key;
    cj["field"] = c.field;
    cj["kind"] = c.kind;
    if (c.kind != "classical") {
      cj["m"] = c.m;
      cj["n"] = c.n;
      cj["d"] = c.d;
      if (!c.diag_entries.empty()) cj["D"] = c.diag_entries;
    }
    Json reports = Json::array();
    for (const auto& r : c.reports) reports.push_back(report_to_json(r));
    cj["reports"] = std::move(reports);
    if (include_timings) cj["seconds"] = c.seconds;
    return cj;
  };
  Json cells = Json::array();
  for (const auto& c : agg.cells) cells.push_back(cell_to_json(c));
  j["cells"] = std::move(cells);
  Json cls = Json::array();
  for (const auto& c : agg.classical) cls.push_back(cell_to_json(c));
  j["classical"] = std::move(cls);
  Json summary;
  summary["checks"] = agg.checks;
  summary["failed"] = agg.failed;
  summary["advisories"] = agg.advisories;
  summary["all_passed"] = agg.all_passed();
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace liestab
