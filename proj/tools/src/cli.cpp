#include "gallai/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gallai/bounds.hpp"
#include "gallai/certificate.hpp"
#include "gallai/cnf.hpp"
#include "gallai/coloring.hpp"
#include "gallai/construct.hpp"
#include "gallai/detect.hpp"
#include "gallai/errors.hpp"
#include "gallai/euclid.hpp"
#include "gallai/search.hpp"

namespace gallai::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BicliquePattern parse_pattern(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view part) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v == 0) {
      throw UsageError(std::string(flag) + " expects \"s,t\" with positive integers, got '" +
                       text + "'");
    }
    return v;
  };
  if (comma == std::string::npos) {
    throw UsageError(std::string(flag) + " expects \"s,t\", got '" + text + "'");
  }
  const std::string_view view(text);
  return BicliquePattern(number(view.substr(0, comma)), number(view.substr(comma + 1)));
}

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::string join_one_based(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(idx[k] + 1);
  }
  return s;
}

std::string format_certificate(const BicliqueCertificate& cert) {
  std::string s = std::string(to_string(cert.kind)) + " rows=" + join_one_based(cert.rows) +
                  " cols=" + join_one_based(cert.cols) + "\n";
  for (const auto& row : cert.colors) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) s += ' ';
      s += std::to_string(row[k]);
    }
    s += '\n';
  }
  return s;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

struct Options {
  std::string input = "-";
  std::string rainbow;
  std::string mono;
  std::string format = "text";
  std::string check_cert;

  std::size_t n1 = 0, n2 = 0, n2_max = 0;
  Color r = 0;
  std::uint64_t budget = SearchOptions{}.node_budget;
  bool stats = false;

  std::string formula;
  std::string kind;
  std::map<std::string, std::int64_t> ints;

  std::optional<std::uint64_t> seed;
  double a = 1.0, b = 1.0;
  double tol = kGeometricTolerance;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  void verify(const Options& o) {
    const std::string text = slurp(o.input, in_);
    const auto coloring = read_coloring(text);
    if (!o.check_cert.empty()) {
      const auto doc = read_certificate(slurp(o.check_cert, in_));
      if (doc.source_hash != sha256_hex(text) && doc.source_hash != coloring_digest(coloring)) {
        out_ << "invalid: source_hash does not match the coloring\n";
      } else if (!verify_certificate(coloring, doc.certificate)) {
        out_ << "invalid: certificate does not hold in the coloring\n";
      } else {
        out_ << "valid\n";
      }
      return;
    }
    const auto cert =
        find_any(coloring, parse_pattern(o.rainbow, "--rainbow"), parse_pattern(o.mono, "--mono"));
    if (!cert) {
      out_ << (o.format == "json" ? "null\n" : "none\n");
    } else if (o.format == "json") {
      out_ << write_certificate(*cert, coloring);
    } else {
      out_ << format_certificate(*cert);
    }
  }

  void search_exists(const Options& o) {
    const auto result = exists_avoiding(o.n1, o.n2, o.r, parse_pattern(o.rainbow, "--rainbow"),
                                        parse_pattern(o.mono, "--mono"), {o.budget});
    out_ << to_string(result.outcome) << '\n';
    if (result.witness) out_ << write_coloring(*result.witness);
    if (o.stats) {
      out_ << "nodes_expanded=" << result.nodes_expanded
           << " canonical_prunes=" << result.canonical_prunes << '\n';
    }
  }

  void search_frontier(const Options& o) {
    const auto n2 = min_forcing_n2(o.n1, o.r, parse_pattern(o.rainbow, "--rainbow"),
                                   parse_pattern(o.mono, "--mono"), o.n2_max, {o.budget});
    if (n2) {
      out_ << "n2=" << *n2 << '\n';
    } else {
      out_ << "none\n";
    }
  }

  void bounds(const Options& o) {
    const FormulaId id = parse_formula_id(o.formula);
    BoundReport report;
    if (id == FormulaId::euclid_dims) {
      if (o.kind.empty()) throw UsageError("bounds euclid-dims needs --kind");
      const EuclidKind kind = parse_euclid_kind(o.kind);
      static const std::map<EuclidKind, std::vector<std::string>> names = {
          {EuclidKind::simplex_pair, {"p", "q"}},
          {EuclidKind::prism, {"t", "r"}},
          {EuclidKind::product, {"s", "t", "r"}},
      };
      report = evaluate_euclid_dims(kind, collect(o, "euclid-dims --kind " + o.kind,
                                                  names.at(kind)));
    } else {
      if (!o.kind.empty()) throw UsageError("--kind only applies to euclid-dims");
      report = evaluate_bound(id, collect(o, o.formula, formula_inputs(id)));
    }
    out_ << (o.format == "json" ? to_json(report) : format_text(report));
  }

  void construct(const Options& o) {
    auto need = [&](const char* name) {
      auto it = o.ints.find(name);
      if (it == o.ints.end()) {
        throw UsageError("construct --kind " + o.kind + " needs --" + name);
      }
      if (it->second <= 0) throw UsageError(std::string("--") + name + " must be positive");
      return static_cast<std::size_t>(it->second);
    };
    if (o.kind == "block") {
      out_ << write_coloring(block_coloring(need("t"), static_cast<Color>(need("r"))));
    } else if (o.kind == "random") {
      if (!o.seed) throw UsageError("construct --kind random needs an explicit --seed");
      out_ << write_coloring(
          random_coloring(need("n1"), need("n2"), static_cast<Color>(need("r")), *o.seed));
    } else if (o.kind == "star") {
      out_ << write_coloring(star_avoiding_coloring(need("p"), need("q")));
    } else {
      throw UsageError("unknown construction '" + o.kind + "'");
    }
  }

  void zarankiewicz(const Options& o) {
    auto get = [&](const char* name) {
      auto it = o.ints.find(name);
      if (it == o.ints.end()) throw UsageError(std::string("zarankiewicz needs --") + name);
      if (it->second <= 0) throw UsageError(std::string("--") + name + " must be positive");
      return it->second;
    };
    const auto m = get("m"), n = get("n"), s = get("s"), t = get("t");
    const std::uint64_t z = zarankiewicz_exact(static_cast<std::size_t>(m),
                                               static_cast<std::size_t>(n),
                                               static_cast<std::size_t>(s),
                                               static_cast<std::size_t>(t), {o.budget});
    std::optional<double> bound;
    bool below = false;
    if (s >= 2) {
      bound = zarankiewicz_bound(m, n, s, t);
      below = below_zarankiewicz_bound(BigInt(z), m, n, s, t);
    }
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["m"] = m;
      j["n"] = n;
      j["s"] = s;
      j["t"] = t;
      j["exact"] = z;
      j["bound"] = bound ? nlohmann::ordered_json(*bound) : nlohmann::ordered_json(nullptr);
      j["below"] = bound ? nlohmann::ordered_json(below) : nlohmann::ordered_json(nullptr);
      out_ << j.dump() << '\n';
      return;
    }
    out_ << "exact=" << z;
    if (bound) {
      out_ << " bound=" << format_double(*bound) << " below=" << (below ? "true" : "false");
    } else {
      out_ << " bound=n/a";
    }
    out_ << '\n';
  }

  void embed(const Options& o) {
    const auto coloring = read_coloring(slurp(o.input, in_));
    const auto colored = embed_coloring(coloring, o.a, o.b);
    out_ << write_points(colored.config, &colored.colors);
  }

  void check_translation(const Options& o) {
    const auto coloring = read_coloring(slurp(o.input, in_));
    const auto report =
        verify_translation(coloring, parse_pattern(o.rainbow, "--rainbow"),
                           parse_pattern(o.mono, "--mono"), o.a, o.b, o.tol);
    out_ << "branch=" << to_string(report.branch);
    if (report.branch != TranslationReport::Branch::none) {
      out_ << " congruent=" << (report.congruent ? "true" : "false")
           << " colors_ok=" << (report.colors_ok ? "true" : "false");
    }
    out_ << " holds=" << (report.holds() ? "true" : "false") << '\n';
    if (report.certificate) out_ << format_certificate(*report.certificate);
    if (report.correspondence && report.image) {
      const auto& labels = report.image->config.labels();
      for (std::size_t p = 0; p < report.correspondence->size(); ++p) {
        out_ << labels[p] << " -> " << (*report.correspondence)[p] + 1 << '\n';
      }
    }
  }

  void export_sat(const Options& o) {
    out_ << export_cnf(o.n1, o.n2, o.r, parse_pattern(o.rainbow, "--rainbow"),
                       parse_pattern(o.mono, "--mono"));
  }

  void decode_sat(const Options& o) {
    const auto model = parse_model(slurp(o.input, in_));
    const auto coloring = decode_model(o.n1, o.n2, o.r, model);
    if (o.rainbow.empty() != o.mono.empty()) {
      throw UsageError("give both --rainbow and --mono, or neither");
    }
    if (!o.rainbow.empty()) {
      const auto cert = find_any(coloring, parse_pattern(o.rainbow, "--rainbow"),
                                 parse_pattern(o.mono, "--mono"));
      if (cert) {
        throw Error(Errc::inconsistent_model,
                    "decoded coloring is not avoiding: " + format_certificate(*cert));
      }
    }
    out_ << write_coloring(coloring);
  }

 private:
  static std::vector<std::int64_t> collect(const Options& o, const std::string& what,
                                           const std::vector<std::string>& names) {
    std::vector<std::int64_t> values;
    for (const auto& name : names) {
      auto it = o.ints.find(name);
      if (it == o.ints.end()) throw UsageError(what + " needs --" + name);
      values.push_back(it->second);
    }
    for (const auto& [name, value] : o.ints) {
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw UsageError(what + " does not take --" + name);
      }
    }
    return values;
  }

  std::istream& in_;
  std::ostream& out_;
};

void add_patterns(CLI::App* sub, Options& o, bool required = true) {
  auto* rb = sub->add_option("--rainbow", o.rainbow, "Rainbow pattern \"s,t\"");
  auto* mo = sub->add_option("--mono", o.mono, "Monochromatic pattern \"s,t\"");
  if (required) {
    rb->required();
    mo->required();
  }
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_int(CLI::App* sub, Options& o, const std::string& name, const std::string& help) {
  sub->add_option_function<std::int64_t>(
      "--" + name, [&o, name](const std::int64_t& v) { o.ints[name] = v; }, help);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Bipartite Gallai-Ramsey workbench", "gallai"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Find a mono or rainbow biclique in a coloring");
  verify->add_option("file", o.input, "Coloring file (default: stdin)");
  add_patterns(verify, o, false);
  add_format(verify, o);
  verify->add_option("--check-cert", o.check_cert, "Validate a certificate file instead");

  auto* search = app.add_subcommand("search", "Exhaustive avoidance search");
  search->require_subcommand(1);
  auto* exists = search->add_subcommand("exists", "Does an avoiding coloring exist?");
  exists->add_option("--n1", o.n1)->required();
  exists->add_option("--n2", o.n2)->required();
  exists->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_patterns(exists, o);
  exists->add_option("--budget", o.budget, "Node budget")->capture_default_str();
  exists->add_flag("--stats", o.stats, "Print node counts");
  auto* frontier = search->add_subcommand("frontier", "Smallest forcing n2 for fixed n1");
  frontier->add_option("--n1", o.n1)->required();
  frontier->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_patterns(frontier, o);
  frontier->add_option("--n2-max", o.n2_max)->required();
  frontier->add_option("--budget", o.budget, "Node budget per size")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound formula");
  bounds->add_option("formula", o.formula,
                     "zarankiewicz | size-bound | lemma-condition | main-n | main-md | "
                     "union-bound | star | k2t | lower-bound | euclid-dims")
      ->required();
  for (const char* name : {"m", "n", "k", "d", "s", "t", "r", "p", "q"}) {
    add_int(bounds, o, name, "Formula input");
  }
  bounds->add_option("--kind", o.kind, "euclid-dims kind: simplex_pair | prism | product");
  add_format(bounds, o);

  auto* construct = app.add_subcommand("construct", "Write a generated coloring");
  construct->add_option("--kind", o.kind, "block | random | star")->required();
  for (const char* name : {"t", "r", "n1", "n2", "p", "q"}) add_int(construct, o, name, "");
  construct->add_option("--seed", o.seed, "Seed (required for random)");

  auto* zaran = app.add_subcommand("zarankiewicz", "Exact z(m,n;s,t) next to the bound");
  for (const char* name : {"m", "n", "s", "t"}) add_int(zaran, o, name, "");
  zaran->add_option("--budget", o.budget, "Node budget")->capture_default_str();
  add_format(zaran, o);

  auto* embed = app.add_subcommand("embed", "Map a coloring onto Q_{n1,a} * Q_{n2,b}");
  embed->add_option("file", o.input, "Coloring file (default: stdin)");
  embed->add_option("--a", o.a)->check(CLI::PositiveNumber)->capture_default_str();
  embed->add_option("--b", o.b)->check(CLI::PositiveNumber)->capture_default_str();

  auto* translate = app.add_subcommand("check-translation", "Carry a witness through phi");
  translate->add_option("file", o.input, "Coloring file (default: stdin)");
  add_patterns(translate, o);
  translate->add_option("--a", o.a)->check(CLI::PositiveNumber)->capture_default_str();
  translate->add_option("--b", o.b)->check(CLI::PositiveNumber)->capture_default_str();
  translate->add_option("--tol", o.tol)->check(CLI::PositiveNumber)->capture_default_str();

  auto* export_sat = app.add_subcommand("export-sat", "Write the avoidance instance as DIMACS");
  export_sat->add_option("--n1", o.n1)->required();
  export_sat->add_option("--n2", o.n2)->required();
  export_sat->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_patterns(export_sat, o);

  auto* decode_sat = app.add_subcommand("decode-sat", "Turn a solver model into a coloring");
  decode_sat->add_option("file", o.input, "Model file (default: stdin)");
  decode_sat->add_option("--n1", o.n1)->required();
  decode_sat->add_option("--n2", o.n2)->required();
  decode_sat->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_patterns(decode_sat, o, false);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("gallai");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  CLI::App* active = &app;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (auto* sub : app.get_subcommands()) {
      active = sub;
      for (auto* nested : sub->get_subcommands()) active = nested;
    }

    Runner runner(in, out);
    if (verify->parsed()) {
      if (o.check_cert.empty() && (o.rainbow.empty() || o.mono.empty())) {
        throw UsageError("verify needs --rainbow and --mono (or --check-cert)");
      }
      runner.verify(o);
    } else if (exists->parsed()) {
      runner.search_exists(o);
    } else if (frontier->parsed()) {
      runner.search_frontier(o);
    } else if (bounds->parsed()) {
      runner.bounds(o);
    } else if (construct->parsed()) {
      runner.construct(o);
    } else if (zaran->parsed()) {
      runner.zarankiewicz(o);
    } else if (embed->parsed()) {
      runner.embed(o);
    } else if (translate->parsed()) {
      runner.check_translation(o);
    } else if (export_sat->parsed()) {
      runner.export_sat(o);
    } else if (decode_sat->parsed()) {
      runner.decode_sat(o);
    }
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << active->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands()) {
      active = sub;
      for (auto* nested : sub->get_subcommands()) active = nested;
    }
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what()
        << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gallai::cli
