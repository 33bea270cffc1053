#include "secmat/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "secmat/errors.hpp"

namespace secmat {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

std::string optional_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "inf";
}

std::vector<std::vector<std::int64_t>> clip(const std::vector<std::vector<std::int64_t>>& rows,
                                            int last_column) {
  if (last_column < 0) return rows;
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& r : rows) {
    const auto keep = std::min(r.size(), static_cast<std::size_t>(last_column) + 1);
    out.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(keep));
  }
  return out;
}

}  // namespace

std::string format_matrix(const std::vector<std::vector<std::int64_t>>& all_rows,
                          int last_column) {
  const auto rows = clip(all_rows, last_column);
  if (rows.empty()) return "";
  const std::size_t columns = rows.front().size();
  std::vector<std::size_t> width(columns);
  for (std::size_t d = 0; d < columns; ++d) {
    width[d] = 1 + std::to_string(d).size();
    for (const auto& r : rows) width[d] = std::max(width[d], std::to_string(r[d]).size());
  }
  const std::size_t label = std::to_string(rows.size()).size() + 1;
  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) {
    out << std::string(w - s.size(), ' ') << s;
  };
  out << std::string(label, ' ');
  for (std::size_t d = 0; d < columns; ++d) {
    out << ' ';
    pad("_" + std::to_string(d), width[d]);
  }
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pad(std::to_string(i + 1) + ":", label);
    for (std::size_t d = 0; d < columns; ++d) {
      out << ' ';
      pad(std::to_string(rows[i][d]), width[d]);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_report(const AnalysisReport& r) {
  std::ostringstream out;
  out << format_matrix(r.matrix);
  out << "seed=" << r.seed << '\n';
  std::string gin;
  for (const auto& g : r.rgin) gin += (gin.empty() ? "" : ", ") + g;
  out << "rgin=(" << (gin.empty() ? "0" : gin) << ")\n";
  out << "reg=" << r.reg << '\n';
  out << "dim=" << r.dim << '\n';
  out << "deg=" << r.deg << '\n';
  out << "dim_deg.delta=" << r.dim_deg_delta << '\n';
  if (r.early_delta) out << "dim_deg.early_delta=" << *r.early_delta << '\n';
  for (std::size_t s = 0; s < r.reduction_numbers.size(); ++s) {
    out << 'r' << s << '=' << optional_text(r.reduction_numbers[s]) << '\n';
  }
  out << "r=" << (r.reduction_number ? std::to_string(*r.reduction_number) : "undefined")
      << '\n';
  for (std::size_t i = 0; i < r.first_persistent_degree.size(); ++i) {
    const auto& p = r.first_persistent_degree[i];
    out << "growth(" << i + 1 << ").persistent_from=" << (p ? std::to_string(*p) : "none")
        << '\n';
    if (!r.predicted[i].empty()) {
      out << "growth(" << i + 1 << ").predicted=";
      for (std::size_t k = 0; k < r.predicted[i].size(); ++k) {
        out << (k ? "," : "") << r.predicted[i][k];
      }
      out << '\n';
    }
  }
  if (!r.potential_gcd_degrees.empty()) {
    out << "potential_gcd_degree=";
    for (std::size_t k = 0; k < r.potential_gcd_degrees.size(); ++k) {
      const auto& p = r.potential_gcd_degrees[k];
      out << (k ? " " : "") << p.delta << ':' << p.degree;
    }
    out << '\n';
  }
  if (r.gcd) {
    out << "gcd=" << r.gcd->polynomial << '\n';
    out << "gcd.delta=" << r.gcd->delta << '\n';
  } else {
    out << "gcd=none\n";
  }
  out << "saturated=" << (r.saturated ? "true" : "false") << '\n';
  for (const auto& t : r.truncations) {
    const std::string key = "truncation(" + std::to_string(t.delta) + ")";
    out << key << ".saturated=" << (t.saturated ? "true" : "false") << '\n';
    if (t.dim) out << key << ".dim=" << *t.dim << '\n';
    if (t.deg) out << key << ".deg=" << *t.deg << '\n';
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  return out.str();
}

std::string report_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["variables"] = r.variables;
  j["generators"] = r.generators;
  j["seed"] = r.seed;
  j["trials_used"] = r.trials_used;
  j["rgin"] = r.rgin;
  j["reg"] = r.reg;
  j["generator_degree"] = r.generator_degree;
  j["matrix"] = r.matrix;
  j["dim"] = r.dim;
  j["deg"] = r.deg;
  j["dim_deg_delta"] = r.dim_deg_delta;
  j["early_delta"] = optional_json(r.early_delta);
  json reductions = json::array();
  for (const auto& v : r.reduction_numbers) reductions.push_back(optional_json(v));
  j["reduction_numbers"] = reductions;
  j["reduction_number"] = optional_json(r.reduction_number);
  json growth;
  growth["maximal"] = r.maximal_growth;
  json persistent = json::array();
  for (const auto& v : r.first_persistent_degree) persistent.push_back(optional_json(v));
  growth["first_persistent_degree"] = persistent;
  growth["predicted"] = r.predicted;
  j["growth"] = growth;
  json potential = json::array();
  for (const auto& p : r.potential_gcd_degrees) {
    potential.push_back({{"delta", p.delta}, {"degree", p.degree}});
  }
  j["potential_gcd_degrees"] = potential;
  j["gcd"] = r.gcd ? json{{"delta", r.gcd->delta},
                          {"degree", r.gcd->degree},
                          {"polynomial", r.gcd->polynomial}}
                   : json(nullptr);
  j["saturated"] = r.saturated;
  json truncations = json::array();
  for (const auto& t : r.truncations) {
    truncations.push_back({{"delta", t.delta},
                           {"saturated", t.saturated},
                           {"lemma_hypothesis", t.lemma_hypothesis},
                           {"dim", optional_json(t.dim)},
                           {"deg", optional_json(t.deg)}});
  }
  j["truncations"] = truncations;
  if (const auto& d = r.discrepancy) {
    j["discrepancy"] = {{"delta", d->delta},
                        {"i", d->i},
                        {"n_minus_i", d->n_minus_i},
                        {"n_minus_i_plus_1", d->n_minus_i_plus_1},
                        {"computed", d->computed}};
  } else {
    j["discrepancy"] = nullptr;
  }
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw SemanticError("unsupported report schema " + j.at("schema").get<std::string>());
    }
    AnalysisReport r;
    r.variables = j.at("variables").get<std::vector<std::string>>();
    r.generators = j.at("generators").get<std::vector<std::string>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials_used = j.at("trials_used").get<int>();
    r.rgin = j.at("rgin").get<std::vector<std::string>>();
    r.reg = j.at("reg").get<int>();
    r.generator_degree = j.at("generator_degree").get<int>();
    r.matrix = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
    r.dim = j.at("dim").get<int>();
    r.deg = j.at("deg").get<std::int64_t>();
    r.dim_deg_delta = j.at("dim_deg_delta").get<int>();
    r.early_delta = optional_from<int>(j.at("early_delta"));
    for (const auto& v : j.at("reduction_numbers")) r.reduction_numbers.push_back(optional_from<int>(v));
    r.reduction_number = optional_from<int>(j.at("reduction_number"));
    const json& growth = j.at("growth");
    r.maximal_growth = growth.at("maximal").get<std::vector<std::vector<bool>>>();
    for (const auto& v : growth.at("first_persistent_degree")) {
      r.first_persistent_degree.push_back(optional_from<int>(v));
    }
    r.predicted = growth.at("predicted").get<std::vector<std::vector<std::int64_t>>>();
    for (const auto& p : j.at("potential_gcd_degrees")) {
      r.potential_gcd_degrees.push_back({p.at("delta").get<int>(), p.at("degree").get<std::int64_t>()});
    }
    if (const json& g = j.at("gcd"); !g.is_null()) {
      r.gcd = GcdFinding{g.at("delta").get<int>(), g.at("degree").get<std::int64_t>(),
                         g.at("polynomial").get<std::string>()};
    }
    r.saturated = j.at("saturated").get<bool>();
    for (const auto& t : j.at("truncations")) {
      r.truncations.push_back({t.at("delta").get<int>(), t.at("saturated").get<bool>(),
                               t.at("lemma_hypothesis").get<bool>(),
                               optional_from<int>(t.at("dim")),
                               optional_from<std::int64_t>(t.at("deg"))});
    }
    if (const json& d = j.at("discrepancy"); !d.is_null()) {
      r.discrepancy = DimensionDiscrepancy{d.at("delta").get<int>(), d.at("i").get<std::size_t>(),
                                           d.at("n_minus_i").get<int>(),
                                           d.at("n_minus_i_plus_1").get<int>(),
                                           d.at("computed").get<int>()};
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw SemanticError(std::string("malformed report: ") + e.what());
  }
}

std::string matrix_to_json(const SectionalMatrix& m, const Ring& ring, const GinResult& gin,
                           int last_column) {
  json j;
  j["schema"] = kMatrixSchema;
  j["variables"] = ring.names();
  j["seed"] = gin.seed;
  j["trials_used"] = gin.trials_used;
  std::vector<std::string> gens;
  for (const auto& t : m.source().generators()) gens.push_back(to_string(t, ring));
  j["rgin"] = gens;
  j["reg"] = m.reg();
  j["matrix"] = clip(m.rows(), last_column);
  return j.dump(2) + "\n";
}

std::string ideal_to_json(const MonomialIdeal& ideal, const Ring& ring, std::string_view kind,
                          std::string_view order, const GinResult* gin) {
  json j;
  j["schema"] = kIdealSchema;
  j["kind"] = kind;
  j["order"] = order;
  j["variables"] = ring.names();
  std::vector<std::string> gens;
  for (const auto& t : ideal.generators()) gens.push_back(to_string(t, ring));
  j["generators"] = gens;
  if (gin != nullptr) {
    j["seed"] = gin->seed;
    j["trials_used"] = gin->trials_used;
  }
  return j.dump(2) + "\n";
}

}  // namespace secmat
