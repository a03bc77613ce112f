#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "toriccode/clutter.hpp"
#include "toriccode/error.hpp"
#include "toriccode/eval_code.hpp"
#include "toriccode/finite_field.hpp"
#include "toriccode/intlattice.hpp"
#include "toriccode/mindist.hpp"
#include "toriccode/toric_set.hpp"
#include "toriccode/vanishing_ideal.hpp"

namespace toric::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { kText, kCsv, kJson };

struct RunConfig {
  std::string command;
  std::string clutter_path;
  std::string family;
  int torus = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  int d = 0;
  int dmin = 0;
  int dmax = 0;
  bool full = false;
  std::string method = "auto";
  Format format = Format::kText;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> enum_budget;
  std::optional<std::uint64_t> time_budget_ms;
  std::string points_path;
};

std::uint64_t parse_u64(const std::string& name, const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InputError(name + " must be a non-negative integer, got '" + text + "'");
  return v;
}

// Flag value, else environment, else default.
std::uint64_t resolve(const std::optional<std::uint64_t>& flag, const EnvLookup& env, const std::string& var,
                      std::uint64_t fallback) {
  if (flag) return *flag;
  if (auto v = env(var)) return parse_u64(var, *v);
  return fallback;
}

// "cycle:5", "complete:4", "path:3", "star:3", "singletons:3".
Clutter family_clutter(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("family must look like NAME:SIZE, got '" + text + "'");
  const std::string name = text.substr(0, colon);
  const int size = static_cast<int>(parse_u64("family size", text.substr(colon + 1)));
  if (name == "cycle") return families::cycle(size);
  if (name == "complete") return families::complete_graph(size);
  if (name == "path") return families::path(size);
  if (name == "star") return families::star(size);
  if (name == "singletons") return families::singletons(size);
  throw InputError("unknown family '" + name + "'");
}

struct Problem {
  Clutter clutter;
  FiniteField field;
  std::uint64_t enum_budget;
  SearchOptions search;
};

Problem load_problem(const RunConfig& cfg, const EnvLookup& env) {
  const int sources = !cfg.clutter_path.empty() + !cfg.family.empty() + (cfg.torus > 0);
  if (sources != 1) throw InputError("give exactly one of --clutter, --family, --torus");
  std::optional<Clutter> c;
  if (!cfg.clutter_path.empty()) {
    c = load_clutter(cfg.clutter_path);
  } else if (!cfg.family.empty()) {
    c = family_clutter(cfg.family);
  } else {
    // Singleton edges parameterize the whole torus.
    c = families::singletons(cfg.torus);
  }

  const std::uint64_t cap = resolve(std::nullopt, env, "TORICCODE_FIELD_CAP", kDefaultCardinalityCap);
  std::optional<FiniteField> f;
  if (cfg.q != 0) {
    if (cfg.p != 0 || cfg.k != 0) throw InputError("give either --q or --p/--k, not both");
    f = FiniteField::from_order(cfg.q, cap);
  } else if (cfg.p != 0) {
    f = FiniteField::make(cfg.p, cfg.k == 0 ? 1 : cfg.k, cap);
  } else {
    throw InputError("a field is required: --q or --p [--k]");
  }

  SearchOptions search;
  search.threads = std::max(1u, cfg.threads);
  search.class_budget = resolve(cfg.budget, env, "TORICCODE_BRUTE_BUDGET", kDefaultBruteforceBudget);
  search.time_budget = std::chrono::milliseconds(resolve(cfg.time_budget_ms, env, "TORICCODE_TIME_BUDGET", 0));
  return Problem{std::move(*c), std::move(*f), resolve(cfg.enum_budget, env, "TORICCODE_ENUM_BUDGET",
                                                       kDefaultEnumerationBudget),
                 search};
}

ToricSet points(const Problem& pr) {
  EnumerationOptions eo;
  eo.budget = pr.enum_budget;
  eo.threads = pr.search.threads;
  return enumerate_x(pr.clutter, pr.field, eo);
}

// Field element as in the point dump: 0 for zero, i+1 for g^i.
ordered_json element_json(const FiniteField& f, FieldElement a) {
  return a.is_zero() ? 0 : f.log(a) + 1;
}

ordered_json result_json(const FiniteField& f, const DistanceResult& r, bool with_witness) {
  ordered_json j;
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  j["exact"] = r.exact;
  if (with_witness) {
    ordered_json w = ordered_json::array();
    for (auto a : r.witness) w.push_back(element_json(f, a));
    j["witness"] = w;
  }
  return j;
}

std::string method_cell(const DistanceReport& r) {
  if (!r.delta) return "";
  return to_string(r.delta->method) + (r.delta->exact ? "" : "-upper");
}

std::string opt_cell(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

ordered_json report_json(const FiniteField& f, const DistanceReport& r, bool with_witness) {
  ordered_json j;
  j["d"] = r.d;
  j["length"] = r.length;
  j["dim"] = r.dimension;
  j["delta"] = r.delta ? result_json(f, *r.delta, with_witness) : ordered_json();
  j["delta_prime"] = r.delta_prime ? ordered_json(*r.delta_prime) : ordered_json();
  j["singleton"] = r.singleton;
  j["at_regularity"] = r.d == r.regularity;
  return j;
}

void write_csv_header(std::ostream& out) { out << "d,length,dim,delta,delta_method,delta_prime,singleton,reg\n"; }

void write_csv_row(std::ostream& out, const DistanceReport& r) {
  out << r.d << ',' << r.length << ',' << r.dimension << ',' << (r.delta ? std::to_string(r.delta->value) : "")
      << ',' << method_cell(r) << ',' << opt_cell(r.delta_prime) << ',' << r.singleton << ','
      << (r.d == r.regularity ? "*" : "") << '\n';
}

void write_text_table(std::ostream& out, const std::vector<DistanceReport>& rows) {
  const std::vector<std::string> head = {"d", "|X|", "dim", "delta", "method", "delta'", "singleton", ""};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.d), std::to_string(r.length), std::to_string(r.dimension),
                     r.delta ? std::to_string(r.delta->value) : "", method_cell(r), opt_cell(r.delta_prime),
                     std::to_string(r.singleton), r.d == r.regularity ? "<- reg" : ""});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::ostringstream cell;
      cell << std::setw(static_cast<int>(width[c])) << row[c];
      line += (c ? "  " : "") + cell.str();
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  emit(head);
  for (const auto& row : cells) emit(row);
}

ordered_json header_json(const Problem& pr, const ToricSet& x, int reg) {
  ordered_json j;
  j["field"] = {{"p", pr.field.p()}, {"k", pr.field.k()}, {"q", pr.field.q()}};
  j["n"] = pr.clutter.num_vertices();
  j["s"] = pr.clutter.num_edges();
  j["size"] = x.size();
  j["regularity"] = reg;
  j["is_torus"] = equals_torus(x);
  return j;
}

ReportOptions report_options(const RunConfig& cfg, const Problem& pr) {
  ReportOptions ro;
  ro.method = parse_method(cfg.method);
  ro.search = pr.search;
  return ro;
}

int cmd_params(const RunConfig& cfg, const Problem& pr, std::ostream& out) {
  const ToricSet x = points(pr);
  const int reg = regularity(x);
  int lo = 1, hi = std::max(1, reg);
  if (cfg.full) hi = std::max(hi, static_cast<int>(pr.field.q() - 2) * (pr.clutter.num_edges() - 1));
  if (cfg.d > 0) lo = hi = cfg.d;
  if (cfg.dmin > 0) lo = cfg.dmin;
  if (cfg.dmax > 0) hi = cfg.dmax;
  if (lo < 1 || hi < lo) throw InputError("empty or invalid d-range");

  const ReportOptions ro = report_options(cfg, pr);
  std::vector<DistanceReport> rows;
  for (int d = lo; d <= hi; ++d) rows.push_back(distance_report(&pr.clutter, x, d, reg, ro));

  switch (cfg.format) {
    case Format::kCsv:
      write_csv_header(out);
      for (const auto& r : rows) write_csv_row(out, r);
      break;
    case Format::kJson: {
      ordered_json j = header_json(pr, x, reg);
      j["rows"] = ordered_json::array();
      for (const auto& r : rows) j["rows"].push_back(report_json(pr.field, r, false));
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kText:
      out << "field " << pr.field.describe() << ", |X| = " << x.size() << ", reg = " << reg << '\n';
      write_text_table(out, rows);
      break;
  }
  return kExitOk;
}

int cmd_mindist(const RunConfig& cfg, const Problem& pr, std::ostream& out) {
  if (cfg.d < 1) throw InputError("mindist needs --d >= 1");
  const ToricSet x = points(pr);
  const int reg = regularity(x);
  const DistanceReport r = distance_report(&pr.clutter, x, cfg.d, reg, report_options(cfg, pr));
  switch (cfg.format) {
    case Format::kCsv:
      write_csv_header(out);
      write_csv_row(out, r);
      break;
    case Format::kJson: {
      ordered_json j = report_json(pr.field, r, true);
      j["regularity"] = reg;
      j["notes"] = r.notes;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kText:
      out << "delta = " << r.delta->value << " (" << method_cell(r) << ")\n";
      out << "length = " << r.length << ", dim = " << r.dimension << ", singleton = " << r.singleton;
      if (r.delta_prime) out << ", delta' = " << *r.delta_prime;
      out << '\n';
      for (const auto& n : r.notes) out << "note: " << n << '\n';
      break;
  }
  return kExitOk;
}

int cmd_ci(const RunConfig& cfg, const Problem& pr, std::ostream& out, std::ostream& err) {
  if (pr.field.q() < 3) throw InputError("q must be at least 3");
  const CiReport rep = ci_classify(pr.clutter, static_cast<std::int64_t>(pr.field.q()));
  std::optional<bool> torus;
  try {
    torus = equals_torus(points(pr));
  } catch (const BudgetExceeded& e) {
    err << "warning: torus test skipped: " << e.what() << '\n';
  }
  if (cfg.format == Format::kJson) {
    ordered_json j;
    j["applicable"] = rep.applicable;
    j["is_ci"] = rep.is_ci;
    j["vectors_independent"] = rep.vectors_independent;
    j["phi_injective"] = rep.phi_injective;
    j["rank"] = rep.rank;
    j["torsion"] = rep.torsion;
    j["reason"] = rep.reason;
    j["equals_torus"] = torus ? ordered_json(*torus) : ordered_json();
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (cfg.format == Format::kCsv) {
    out << "applicable,is_ci,vectors_independent,phi_injective,rank,equals_torus\n"
        << rep.applicable << ',' << rep.is_ci << ',' << rep.vectors_independent << ',' << rep.phi_injective << ','
        << rep.rank << ',' << (torus ? std::to_string(*torus) : "") << '\n';
    return kExitOk;
  }
  out << "complete intersection: " << (rep.applicable ? (rep.is_ci ? "yes" : "no") : "not decided") << '\n'
      << "reason: " << rep.reason << '\n'
      << "rank: " << rep.rank << '\n'
      << "torsion:";
  for (auto t : rep.torsion) out << ' ' << t;
  out << '\n' << "equals torus: " << (torus ? (*torus ? "yes" : "no") : "unknown") << '\n';
  return kExitOk;
}

int cmd_groebner(const RunConfig& cfg, const Problem& pr, std::ostream& out) {
  const ToricSet x = points(pr);
  const ReducedGB g = interpolate_gb(x);
  const auto& f = pr.field;
  switch (cfg.format) {
    case Format::kJson: {
      ordered_json j;
      j["s"] = g.s;
      j["degree_complexity"] = degree_complexity(g);
      j["elements"] = ordered_json::array();
      for (const auto& e : g.elements) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : e.terms)
          terms.push_back({{"exponents", t.monomial.exponents}, {"coeff", f.log(t.coeff)}});
        j["elements"].push_back({{"degree", e.degree()}, {"terms", terms}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "degree,polynomial\n";
      for (const auto& e : g.elements) out << e.degree() << ",\"" << e.to_string(f) << "\"\n";
      break;
    case Format::kText:
      for (const auto& e : g.elements) out << e.to_string(f) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_profile(const RunConfig& cfg, const Problem& pr, std::ostream& out) {
  const ToricSet x = points(pr);
  const ToricProfile p = profile(pr.clutter, x);
  const auto h = h_vector(x);
  if (!cfg.points_path.empty()) {
    std::ofstream os(cfg.points_path);
    if (!os) throw InputError("cannot write " + cfg.points_path);
    x.write_csv(os);
  }
  switch (cfg.format) {
    case Format::kJson: {
      ordered_json j;
      j["size"] = p.size;
      j["n"] = p.n;
      j["s"] = p.s;
      j["rank"] = p.rank;
      j["full_rank"] = p.full_rank;
      j["uniform"] = p.uniform;
      j["torus_degree"] = p.torus_degree;
      j["degree_matches"] = p.degree_matches;
      j["is_torus"] = equals_torus(x);
      j["regularity"] = static_cast<int>(h.size()) - 1;
      j["h_vector"] = h;
      j["note"] = p.note;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "size,n,s,rank,uniform,regularity\n"
          << p.size << ',' << p.n << ',' << p.s << ',' << p.rank << ',' << p.uniform << ',' << h.size() - 1 << '\n';
      break;
    case Format::kText:
      out << "|X| = " << p.size << "\nn = " << p.n << ", s = " << p.s << ", rank = " << p.rank
          << (p.uniform ? ", uniform" : ", not uniform") << "\nregularity = " << h.size() - 1 << "\nh-vector:";
      for (auto v : h) out << ' ' << v;
      out << '\n';
      if (!p.note.empty()) out << "note: " << p.note << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  RunConfig cfg;
  CLI::App app{"Parameterized codes and vanishing ideals of toric sets", "toriccode"};
  app.require_subcommand(1);

  std::string format = "text";
  std::optional<std::uint64_t> budget, enum_budget, time_budget;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--clutter", cfg.clutter_path, "clutter file (JSON or one edge per line)");
    sub->add_option("--family", cfg.family, "built-in clutter, e.g. cycle:5, complete:4, path:3, star:3");
    sub->add_option("--torus", cfg.torus, "use the projective torus with S coordinates")->check(CLI::PositiveNumber);
    sub->add_option("--q", cfg.q, "field order (a prime power)");
    sub->add_option("--p", cfg.p, "field characteristic");
    sub->add_option("--k", cfg.k, "extension degree");
    sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--enum-budget", enum_budget, "maximum unit tuples walked when enumerating X");
  };
  auto distance_opts = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "auto, bruteforce, isd or formula")
        ->check(CLI::IsMember({"auto", "bruteforce", "isd", "formula"}));
    sub->add_option("--budget", budget, "maximum codeword classes for brute force");
    sub->add_option("--time-budget", time_budget, "information-set search time limit in ms (0: none)");
  };

  auto* params = app.add_subcommand("params", "length, dimension, distances and bounds per degree");
  common(params);
  distance_opts(params);
  params->add_option("--d", cfg.d, "single degree")->check(CLI::PositiveNumber);
  auto* dmin = params->add_option("--dmin", cfg.dmin, "first degree")->check(CLI::PositiveNumber);
  auto* dmax = params->add_option("--dmax", cfg.dmax, "last degree")->check(CLI::PositiveNumber);
  params->get_option("--d")->excludes(dmin)->excludes(dmax);
  params->add_flag("--full", cfg.full, "extend the default range to (q-2)(s-1)");

  auto* mindist = app.add_subcommand("mindist", "minimum distance of one code");
  common(mindist);
  distance_opts(mindist);
  mindist->add_option("--d", cfg.d, "degree")->required()->check(CLI::PositiveNumber);

  auto* ci = app.add_subcommand("ci", "complete-intersection classification");
  common(ci);
  auto* groebner = app.add_subcommand("groebner", "reduced revlex Groebner basis of the vanishing ideal");
  common(groebner);
  auto* prof = app.add_subcommand("profile", "size, rank, regularity and h-vector of X");
  common(prof);
  prof->add_option("--points", cfg.points_path, "also write the points of X as CSV");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = formats.at(format);
  cfg.budget = budget;
  cfg.enum_budget = enum_budget;
  cfg.time_budget_ms = time_budget;

  try {
    const Problem pr = load_problem(cfg, env);
    for (const auto& w : pr.clutter.warnings()) err << "warning: " << w << '\n';
    if (cfg.command == "params") return cmd_params(cfg, pr, out);
    if (cfg.command == "mindist") return cmd_mindist(cfg, pr, out);
    if (cfg.command == "ci") return cmd_ci(cfg, pr, out, err);
    if (cfg.command == "groebner") return cmd_groebner(cfg, pr, out);
    return cmd_profile(cfg, pr, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise the budget by flag or environment)\n";
    return kExitBudget;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace toric::cli
