#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "posmon/posmon.hpp"

namespace posmon::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::size_t kDefaultFamilyTruncation = 10;

// Bad flag values or combinations; mapped to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  ojson result = ojson::object();
  std::vector<Table> tables;
};

struct CommonOptions {
  std::string spec_file;
  std::string example;
  std::string gens;
  std::string field = "Q";
  std::size_t truncate = 0;
  std::string format = "table";
};

struct Source {
  GeneratorFamily family;
  std::size_t truncation = 0;
  ojson summary;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

ojson render_all(std::span<const FieldElem> elems) {
  ojson arr = ojson::array();
  for (const auto& e : elems) arr.push_back(e.to_string());
  return arr;
}

std::string join(std::span<const FieldElem> elems) {
  std::string out;
  for (const auto& e : elems) out += (out.empty() ? "" : ", ") + e.to_string();
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like A..B, got '" + s + "'");
  try {
    std::size_t used = 0;
    const std::string a = s.substr(0, dots);
    const std::string b = s.substr(dots + 2);
    const unsigned long first = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const unsigned long last = std::stoul(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (first == 0 || first > last) throw std::invalid_argument(s);
    return {first, last};
  } catch (const std::logic_error&) {
    throw UsageError("--range must be A..B with 1 <= A <= B, got '" + s + "'");
  }
}

Source resolve_source(const CommonOptions& opt) {
  const int given = !opt.spec_file.empty() + !opt.example.empty() + !opt.gens.empty();
  if (given == 0) throw UsageError("one of --spec, --example or --gens is required");
  if (given > 1) throw UsageError("--spec, --example and --gens are mutually exclusive");

  Source src;
  if (!opt.example.empty()) {
    PaperExample ex = paper_example(opt.example);
    src.family = ex.family;
    src.truncation = opt.truncate != 0 ? opt.truncate : ex.default_truncation;
    src.summary["source"] = "example";
    src.summary["example"] = ex.id;
  } else {
    MonoidSpec spec;
    if (!opt.spec_file.empty()) {
      std::ifstream in(opt.spec_file);
      if (!in) throw UsageError("cannot read spec file '" + opt.spec_file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      spec = parse_spec(buf.str());
      src.summary["source"] = "spec";
    } else {
      ojson doc;
      doc["field"] = opt.field;
      doc["generators"] = split_commas(opt.gens);
      spec = parse_spec(doc.dump());
      src.summary["source"] = "gens";
    }
    src.family = GeneratorFamily::from_spec(spec);
    if (opt.truncate != 0) {
      src.truncation = opt.truncate;
    } else if (src.family.is_explicit()) {
      src.truncation = std::get<MonoidSpec::Explicit>(spec.generators).exprs.size();
    } else {
      src.truncation = kDefaultFamilyTruncation;
    }
  }
  src.summary["field"] = to_string(src.family.field());
  src.summary["family"] = src.family.describe();
  src.summary["truncation"] = str(src.truncation);
  return src;
}

FieldElem parse_value(const std::string& text, Field field, const char* flag) {
  const Expr e = parse_expr(text);
  if (e.mentions_n()) throw UsageError(std::string(flag) + ": index variable n is not allowed here");
  if (field == Field::kQ && e.mentions_x()) throw UsageError(std::string(flag) + ": X is not allowed in field Q");
  return eval_expr(e, 1, field);
}

std::vector<std::string> exponent_strings(const Factorization& z) {
  std::vector<std::string> out;
  for (auto c : z.exponents) out.push_back(str(c));
  return out;
}

std::string formal_sum(const Factorization& z, std::span<const FieldElem> atoms) {
  std::string out;
  for (std::size_t i = 0; i < z.exponents.size(); ++i) {
    if (z.exponents[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += (z.exponents[i] == 1 ? "" : str(z.exponents[i]) + "*") + "(" + atoms[i].to_string() + ")";
  }
  return out.empty() ? "0" : out;
}

Table atom_table(std::span<const FieldElem> atoms) {
  Table t{"atoms", {"index", "atom"}, {}};
  for (std::size_t i = 0; i < atoms.size(); ++i) t.rows.push_back({str(i), atoms[i].to_string()});
  return t;
}

Table growth_table(const std::vector<GrowthRow>& rows, const std::string& title) {
  Table t{title, {"N", "count", "max_length"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({str(r.n), str(r.count), r.max_length ? str(*r.max_length) : "-"});
  }
  return t;
}

ojson growth_json(const std::vector<GrowthRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    arr.push_back({{"N", str(r.n)},
                   {"count", str(r.count)},
                   {"max_length", r.max_length ? ojson(str(*r.max_length)) : ojson(nullptr)}});
  }
  return arr;
}

void add_stability(Output& out, const AtomStabilityReport& report) {
  ojson atoms_by_n = ojson::object();
  Table per_n{"atoms by truncation", {"N", "atoms"}, {}};
  for (const auto& [n, atoms] : report.atoms_by_n) {
    atoms_by_n[str(n)] = render_all(atoms);
    per_n.rows.push_back({str(n), join(atoms)});
  }
  ojson gens = ojson::array();
  Table flags{"atom stability", {"generator", "first_N", "status"}, {}};
  for (const auto& g : report.generators) {
    gens.push_back({{"generator", g.generator.to_string()},
                    {"first_N", str(g.first_seen)},
                    {"status", to_string(g.status)}});
    flags.rows.push_back({g.generator.to_string(), str(g.first_seen), to_string(g.status)});
  }
  out.result["atoms_by_N"] = std::move(atoms_by_n);
  out.result["stability"] = std::move(gens);
  out.tables.push_back(std::move(per_n));
  out.tables.push_back(std::move(flags));
}

// Generators of the stratum plus their pairwise sums, all elements of it.
std::vector<FieldElem> stratum_samples(const FinMonoid& stratum) {
  const auto& g = stratum.generators();
  std::vector<FieldElem> samples(g.begin(), g.end());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) samples.push_back(g[i] + g[j]);
  }
  return samples;
}

void print_table_format(std::ostream& os, const std::vector<Table>& tables) {
  bool first = true;
  for (const auto& t : tables) {
    if (!first) os << "\n";
    first = false;
    if (!t.title.empty()) os << "# " << t.title << "\n";
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& r : t.rows) {
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      os << s << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
  }
}

void print_csv_format(std::ostream& os, const std::vector<Table>& tables) {
  bool first = true;
  for (const auto& t : tables) {
    if (!first) os << "\n";
    first = false;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cells[c];
      os << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
  }
}

void add_common(CLI::App* sub, CommonOptions& opt, bool with_source = true) {
  if (with_source) {
    sub->add_option("--spec", opt.spec_file, "Monoid document (JSON)");
    sub->add_option("--example", opt.example, "Registered example id");
    sub->add_option("--gens", opt.gens, "Comma-separated generator expressions");
    sub->add_option("--truncate", opt.truncate, "Number of family indices to use")->check(CLI::PositiveNumber);
  }
  sub->add_option("--field", opt.field, "Ambient field")->check(CLI::IsMember({"Q", "QX"}));
  sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"posmon: atoms, factorizations and length sets of positive monoids over Q and Q(X)"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CommonOptions opt;
  std::string target, a_value, bound_value, range, expr_text;
  std::size_t max_count = 10000;
  std::uint64_t n_value = 1;
  bool report = false;

  std::function<Output()> action;
  std::string command;

  auto need_target = [&](CLI::App* sub) { sub->add_option("--target", target, "Element expression")->required(); };

  auto* atoms_cmd = app.add_subcommand("atoms", "Atoms of the truncation");
  add_common(atoms_cmd, opt);
  auto* member_cmd = app.add_subcommand("member", "Membership of --target");
  add_common(member_cmd, opt);
  need_target(member_cmd);
  auto* factor_cmd = app.add_subcommand("factor", "All factorizations of --target");
  add_common(factor_cmd, opt);
  need_target(factor_cmd);
  factor_cmd->add_option("--max-count", max_count, "Stop after this many factorizations")->check(CLI::PositiveNumber);
  auto* lengths_cmd = app.add_subcommand("lengths", "Length set of --target");
  add_common(lengths_cmd, opt);
  need_target(lengths_cmd);
  auto* divides_cmd = app.add_subcommand("divides", "Whether --a divides --target in the monoid");
  add_common(divides_cmd, opt);
  divides_cmd->add_option("--a", a_value, "Divisor expression")->required();
  need_target(divides_cmd);
  auto* strata_cmd = app.add_subcommand("strata", "Archimedean strata with divisor-closed certificates");
  add_common(strata_cmd, opt);
  auto* below_cmd = app.add_subcommand("below", "Elements of the monoid not exceeding --bound");
  add_common(below_cmd, opt);
  below_cmd->add_option("--bound", bound_value, "Bound expression")->required();
  auto* growth_cmd = app.add_subcommand("growth", "|Z(target)| and max L(target) per truncation");
  add_common(growth_cmd, opt);
  need_target(growth_cmd);
  growth_cmd->add_option("--range", range, "Truncation range A..B")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Monotonicity and atom stability over a window");
  add_common(classify_cmd, opt);
  classify_cmd->add_option("--range", range, "Truncation range A..B")->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "Rescale into a Puiseux monoid when possible");
  add_common(normalize_cmd, opt);
  auto* bound_cmd = app.add_subcommand("bound", "Upper-bound witness for a f.g. monoid of Q(X)");
  add_common(bound_cmd, opt);
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression at index n");
  add_common(eval_cmd, opt, false);
  eval_cmd->add_option("--expr", expr_text, "Expression")->required();
  eval_cmd->add_option("--n", n_value, "Index value")->check(CLI::PositiveNumber);
  auto* paper_cmd = app.add_subcommand("paper", "Run a registered example scenario");
  paper_cmd->add_option("--example", opt.example, "Example id")->required();
  paper_cmd->add_option("--truncate", opt.truncate, "Truncation size")->check(CLI::PositiveNumber);
  paper_cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  paper_cmd->add_flag("--report", report, "Include growth, monotonicity and stability evidence");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force factorizations (debugging)");
  oracle_cmd->group("");
  add_common(oracle_cmd, opt);
  need_target(oracle_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Output result;
  try {
    const CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    const Field flag_field = parse_field(opt.field);
    ojson summary = ojson::object();

    auto monoid_from = [&](Source& src) {
      FinMonoid m = truncate(src.family, src.truncation);
      src.summary["generators"] = render_all(m.generators());
      src.summary["atoms"] = render_all(m.atoms());
      summary = src.summary;
      return m;
    };

    if (command == "eval") {
      const Expr e = parse_expr(expr_text);
      const FieldElem v = eval_expr(e, n_value, flag_field);
      result.result = {{"expr", render(e)}, {"n", str(n_value)}, {"field", opt.field}, {"value", v.to_string()}};
      result.tables.push_back({"", {"expr", "n", "value"}, {{render(e), str(n_value), v.to_string()}}});
    } else if (command == "paper") {
      const PaperExample ex = paper_example(opt.example);
      const std::size_t n = opt.truncate != 0 ? opt.truncate : ex.default_truncation;
      const FinMonoid m = truncate(ex.family, n);
      summary = {{"source", "example"},
                 {"example", ex.id},
                 {"field", to_string(ex.family.field())},
                 {"family", ex.family.describe()},
                 {"truncation", str(n)},
                 {"generators", render_all(m.generators())},
                 {"atoms", render_all(m.atoms())}};
      result.result["description"] = ex.description;
      result.result["known_classification"] = ex.known_classification;
      result.tables.push_back({"example " + ex.id,
                               {"key", "value"},
                               {{"description", ex.description},
                                {"family", ex.family.describe()},
                                {"known", ex.known_classification},
                                {"truncation", str(n)}}});
      result.tables.push_back(atom_table(m.atoms()));
      result.result["atoms"] = render_all(m.atoms());
      if (report) {
        const TruncationReport rep = truncation_report(ex.family, ex.targets, 1, n);
        ojson growth = ojson::array();
        for (const auto& [t, rows] : rep.growth) {
          growth.push_back({{"target", t.to_string()}, {"rows", growth_json(rows)}});
          result.tables.push_back(growth_table(rows, "growth of Z(" + t.to_string() + ")"));
        }
        result.result["growth"] = std::move(growth);
        ojson mono = ojson::object();
        Table mt{"monotonicity of the raw sequence", {"N", "classification"}, {}};
        for (const auto& [k, cls] : rep.monotone_by_n) {
          mono[str(k)] = to_string(cls);
          mt.rows.push_back({str(k), to_string(cls)});
        }
        result.result["monotone_by_N"] = std::move(mono);
        result.tables.push_back(std::move(mt));
        add_stability(result, {rep.atoms_by_n, rep.stability});
      }
    } else {
      Source src = resolve_source(opt);
      const Field field = src.family.field();
      if (command == "atoms") {
        const FinMonoid m = monoid_from(src);
        result.result["atoms"] = render_all(m.atoms());
        result.tables.push_back(atom_table(m.atoms()));
      } else if (command == "member") {
        const FinMonoid m = monoid_from(src);
        const FieldElem x = parse_value(target, field, "--target");
        const bool in = m.member(x);
        result.result = {{"target", x.to_string()}, {"member", in}};
        result.tables.push_back({"", {"target", "member"}, {{x.to_string(), in ? "true" : "false"}}});
      } else if (command == "factor") {
        const FinMonoid m = monoid_from(src);
        const FieldElem x = parse_value(target, field, "--target");
        ojson list = ojson::array();
        Table t{"factorizations of " + x.to_string(), {"exponents", "length", "sum"}, {}};
        std::size_t count = 0;
        const bool complete = m.for_each_factorization(x, [&](const Factorization& z) {
          if (count == max_count) return false;
          ++count;
          const auto exps = exponent_strings(z);
          list.push_back({{"exponents", exps}, {"length", str(z.length())}, {"sum", formal_sum(z, m.atoms())}});
          std::string vec = "(";
          for (std::size_t i = 0; i < exps.size(); ++i) vec += (i ? "," : "") + exps[i];
          t.rows.push_back({vec + ")", str(z.length()), formal_sum(z, m.atoms())});
          return true;
        });
        result.result = {{"target", x.to_string()},
                         {"atoms", render_all(m.atoms())},
                         {"factorizations", std::move(list)},
                         {"count", str(count)},
                         {"truncated", !complete}};
        result.tables.push_back(atom_table(m.atoms()));
        if (!complete) t.title += " (truncated after " + str(count) + ")";
        result.tables.push_back(std::move(t));
      } else if (command == "lengths") {
        const FinMonoid m = monoid_from(src);
        const FieldElem x = parse_value(target, field, "--target");
        const auto lengths = m.length_set(x);
        ojson arr = ojson::array();
        Table t{"L(" + x.to_string() + ")", {"length"}, {}};
        for (auto l : lengths) {
          arr.push_back(str(l));
          t.rows.push_back({str(l)});
        }
        result.result = {{"target", x.to_string()}, {"lengths", std::move(arr)}};
        result.tables.push_back(std::move(t));
      } else if (command == "divides") {
        const FinMonoid m = monoid_from(src);
        const FieldElem a = parse_value(a_value, field, "--a");
        const FieldElem x = parse_value(target, field, "--target");
        const bool d = m.divides(a, x);
        result.result = {{"a", a.to_string()}, {"target", x.to_string()}, {"divides", d}};
        result.tables.push_back({"", {"a", "target", "divides"}, {{a.to_string(), x.to_string(), d ? "true" : "false"}}});
      } else if (command == "strata") {
        const FinMonoid m = monoid_from(src);
        const auto strata = m.strata();
        ojson arr = ojson::array();
        Table t{"strata", {"n", "class_degree", "generators", "samples", "divisor_closed"}, {}};
        for (std::size_t i = 0; i < strata.size(); ++i) {
          const auto samples = stratum_samples(strata[i]);
          const bool ok = check_divisor_closed(m, strata[i], samples);
          const std::string deg = m.classes().empty() ? "0" : std::to_string(m.classes()[i].deg);
          arr.push_back({{"n", str(i + 1)},
                         {"class_degree", deg},
                         {"generators", render_all(strata[i].generators())},
                         {"samples", str(samples.size())},
                         {"divisor_closed", ok}});
          t.rows.push_back({str(i + 1), deg, join(strata[i].generators()), str(samples.size()), ok ? "true" : "false"});
        }
        result.result["strata"] = std::move(arr);
        result.tables.push_back(std::move(t));
      } else if (command == "below") {
        const FinMonoid m = monoid_from(src);
        const FieldElem b = parse_value(bound_value, field, "--bound");
        const auto elems = m.enumerate_below(b);
        result.result = {{"bound", b.to_string()}, {"count", str(elems.size())}, {"elements", render_all(elems)}};
        Table t{"elements <= " + b.to_string(), {"element"}, {}};
        for (const auto& e : elems) t.rows.push_back({e.to_string()});
        result.tables.push_back(std::move(t));
      } else if (command == "growth") {
        const auto [first, last] = parse_range(range);
        summary = src.summary;
        const FieldElem x = parse_value(target, field, "--target");
        const auto rows = growth(src.family, x, first, last);
        result.result = {{"target", x.to_string()}, {"rows", growth_json(rows)}};
        result.tables.push_back(growth_table(rows, "growth of Z(" + x.to_string() + ")"));
      } else if (command == "classify") {
        const auto [first, last] = parse_range(range);
        summary = src.summary;
        const auto seq = src.family.sequence(last);
        const std::string cls = last >= 2 ? to_string(classify_sequence(seq)) : "constant";
        result.result["window"] = str(last);
        result.result["monotonicity"] = cls;
        result.tables.push_back({"", {"window", "monotonicity"}, {{str(last), cls}}});
        add_stability(result, atom_stability(src.family, first, last));
      } else if (command == "normalize") {
        const FinMonoid m = monoid_from(src);
        const auto norm = puiseux_normalize(m.generators());
        if (norm) {
          ojson gens = ojson::array();
          Table t{"normalized generators (scale " + norm->scale.to_string() + ")", {"original", "scaled"}, {}};
          for (std::size_t i = 0; i < norm->gens.size(); ++i) {
            gens.push_back(norm->gens[i].to_string());
            t.rows.push_back({m.generators()[i].to_string(), norm->gens[i].to_string()});
          }
          result.result = {{"normalizable", true}, {"scale", norm->scale.to_string()}, {"generators", std::move(gens)}};
          result.tables.push_back(std::move(t));
        } else {
          result.result = {{"normalizable", false}};
          result.tables.push_back({"", {"normalizable"}, {{"false"}}});
        }
      } else if (command == "bound") {
        const FinMonoid m = monoid_from(src);
        const auto b = m.fg_upper_bound();
        result.result["bound"] = b ? ojson(b->to_string()) : ojson(nullptr);
        result.tables.push_back({"", {"bound"}, {{b ? b->to_string() : "none"}}});
      } else if (command == "oracle") {
        const FinMonoid m = monoid_from(src);
        const FieldElem x = parse_value(target, field, "--target");
        std::set<oracle::ExponentVector> found;
        if (field == Field::kQ) {
          std::vector<Rational> atoms;
          for (const auto& a : m.atoms()) atoms.push_back(a.as_rational());
          found = oracle::factorizations_q(atoms, x.as_rational());
        } else {
          found = oracle::factorizations_qx(m.atoms(), x);
        }
        ojson list = ojson::array();
        Table t{"oracle factorizations of " + x.to_string(), {"exponents"}, {}};
        for (const auto& v : found) {
          std::vector<std::string> exps;
          for (auto c : v) exps.push_back(str(c));
          list.push_back(exps);
          std::string vec = "(";
          for (std::size_t i = 0; i < exps.size(); ++i) vec += (i ? "," : "") + exps[i];
          t.rows.push_back({vec + ")"});
        }
        result.result = {{"target", x.to_string()}, {"factorizations", std::move(list)}, {"count", str(found.size())}};
        result.tables.push_back(std::move(t));
      }
    }

    if (opt.format == "json") {
      ojson doc;
      doc["command"] = command;
      doc["args"] = args;
      doc["spec"] = summary;
      doc["result"] = result.result;
      out << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
      print_csv_format(out, result.tables);
    } else {
      print_table_format(out, result.tables);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "posmon " << command << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "posmon " << command << ": " << to_string(e.code()) << " error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kSyntax || e.code() == ErrorCode::kSchema ||
                       e.code() == ErrorCode::kRegistry;
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "posmon " << command << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace posmon::cli
