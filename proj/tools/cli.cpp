#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "secmat/analysis.hpp"
#include "secmat/errors.hpp"
#include "secmat/gin.hpp"
#include "secmat/groebner.hpp"
#include "secmat/oracle.hpp"
#include "secmat/parser.hpp"
#include "secmat/report.hpp"

namespace secmat::cli {

namespace {

struct Flags {
  std::string file;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_degree;
  std::optional<std::string> order;
  std::optional<int> truncate;
  bool json = false;
  bool oracle = false;
};

InputDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

std::uint64_t seed_of(const Flags& f, const InputDocument& doc) {
  return f.seed.value_or(doc.seed.value_or(42));
}

TermOrder order_of(const Flags& f, const InputDocument& doc) {
  if (f.order) return term_order_from_name(*f.order);
  return doc.order.value_or(TermOrder::DegRevLex);
}

void require_degrevlex(const Flags& f, const InputDocument& doc) {
  if (order_of(f, doc) != TermOrder::DegRevLex) {
    throw SemanticError("generic initial ideals are only defined here for degrevlex");
  }
}

void oracle_check(const IdealPresentation& ideal, const SectionalMatrix& m, std::uint64_t seed,
                  std::ostream& out) {
  int cells = 0;
  const int top = std::min(m.max_degree(), m.reg() + 1);
  for (std::size_t i = 1; i <= m.arity(); ++i) {
    for (int d = 0; d <= top; ++d) {
      const std::int64_t direct = sectional_matrix_direct_oracle(ideal, i, d, seed);
      if (direct != m(i, d)) {
        throw InvariantViolation("oracle disagrees at (" + std::to_string(i) + "," +
                                 std::to_string(d) + "): " + std::to_string(direct) +
                                 " vs " + std::to_string(m(i, d)));
      }
      ++cells;
    }
  }
  out << "oracle=agrees(" << cells << ")\n";
}

void cmd_secmat(const Flags& f, std::ostream& out) {
  const InputDocument doc = load(f.file);
  require_degrevlex(f, doc);
  const std::uint64_t seed = seed_of(f, doc);
  IdealPresentation ideal = doc.ideal();
  require_homogeneous(ideal);
  if (f.truncate) ideal = truncation_ideal(ideal, *f.truncate);
  const GinResult gin = rgin(ideal, seed);
  const std::optional<int> limit = f.max_degree ? f.max_degree : doc.max_degree;
  const int extent = limit ? *limit : regularity(gin.rgin) + 1;
  const SectionalMatrix m =
      sectional_matrix(ideal, gin, std::max(extent, regularity(gin.rgin) + 1));
  if (f.json) {
    out << matrix_to_json(m, *ideal.ring, gin, extent);
  } else {
    out << format_matrix(m.rows(), extent);
  }
  if (f.oracle) oracle_check(ideal, m, seed, out);
}

void cmd_analyze(const Flags& f, std::ostream& out) {
  const InputDocument doc = load(f.file);
  require_degrevlex(f, doc);
  AnalysisOptions options;
  options.seed = seed_of(f, doc);
  options.max_degree = f.max_degree ? f.max_degree : doc.max_degree;
  options.truncations = doc.truncations;
  if (f.truncate) options.truncations.push_back(*f.truncate);
  options.oracle = f.oracle;
  const AnalysisReport report = analyze(doc.ideal(), options);
  out << (f.json ? report_to_json(report) : format_report(report));
}

void cmd_rgin(const Flags& f, std::ostream& out) {
  const InputDocument doc = load(f.file);
  require_degrevlex(f, doc);
  const GinResult gin = rgin(doc.ideal(), seed_of(f, doc));
  if (f.json) {
    out << ideal_to_json(gin.rgin, *doc.ring, "rgin", "degrevlex", &gin);
  } else {
    out << gin.rgin.to_string(*doc.ring) << '\n';
    out << "seed=" << gin.seed << '\n';
  }
}

void cmd_lt(const Flags& f, std::ostream& out) {
  const InputDocument doc = load(f.file);
  const TermOrder order = order_of(f, doc);
  const MonomialIdeal lt = leading_term_ideal(buchberger(doc.ideal(), order));
  if (f.json) {
    out << ideal_to_json(lt, *doc.ring, "lt", term_order_name(order), nullptr);
  } else {
    out << lt.to_string(*doc.ring) << '\n';
    out << "order=" << term_order_name(order) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sectional matrices of homogeneous ideals"};
  app.require_subcommand(1);
  Flags flags;
  auto add_common = [&flags](CLI::App* sub) {
    sub->add_option("file", flags.file, "ideal description file")->required();
    sub->add_option("--seed", flags.seed, "random seed (default 42)");
    sub->add_option("--max-degree", flags.max_degree, "last matrix column");
    sub->add_option("--order", flags.order, "degrevlex, lex or deglex");
    sub->add_option("--truncate", flags.truncate, "work with <I_{<=delta}>");
    sub->add_flag("--json", flags.json, "structured output");
    sub->add_flag("--oracle", flags.oracle, "cross-check with linear algebra");
  };
  CLI::App* secmat = app.add_subcommand("secmat", "print the sectional matrix");
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  CLI::App* rgin_cmd = app.add_subcommand("rgin", "generic initial ideal (degrevlex)");
  CLI::App* lt_cmd = app.add_subcommand("lt", "leading-term ideal for --order");
  for (CLI::App* sub : {secmat, analyze_cmd, rgin_cmd, lt_cmd}) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    std::ostringstream buffer;
    if (secmat->parsed()) cmd_secmat(flags, buffer);
    if (analyze_cmd->parsed()) cmd_analyze(flags, buffer);
    if (rgin_cmd->parsed()) cmd_rgin(flags, buffer);
    if (lt_cmd->parsed()) cmd_lt(flags, buffer);
    out << buffer.str();
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GenericityError& e) {
    err << "genericity error: " << e.what() << '\n';
    return kGenericityError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  }
}

}  // namespace secmat::cli
