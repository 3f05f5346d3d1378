// hpt: command-line front end for the {4,q} hyperbolic Pascal triangles.
//
// Exit codes: 0 ok, 1 a check failed (or a library error), 2 usage error,
// 3 cell budget exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpt/acceptance.hpp"
#include "hpt/bigint.hpp"
#include "hpt/errors.hpp"
#include "hpt/kernels.hpp"
#include "hpt/linrec.hpp"
#include "hpt/locator.hpp"
#include "hpt/pattern.hpp"
#include "hpt/sequences.hpp"
#include "hpt/serialize.hpp"
#include "hpt/triangle.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hpt::BigInt parse_int(const std::string& flag, const std::string& text) {
  try {
    return hpt::BigInt(text, 10);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": not an integer: " + text);
  }
}

hpt::Rational parse_rational(const std::string& flag, const std::string& text) {
  const auto slash = text.find('/');
  const hpt::BigInt num = parse_int(flag, text.substr(0, slash));
  const hpt::BigInt den =
      slash == std::string::npos ? hpt::BigInt(1) : parse_int(flag, text.substr(slash + 1));
  if (den == 0) throw UsageError(flag + ": zero denominator");
  return hpt::make_rational(num, den);
}

std::string kind_letter(hpt::CellKind kind) {
  switch (kind) {
    case hpt::CellKind::Winger: return "W";
    case hpt::CellKind::TypeA: return "A";
    default: return "B";
  }
}

// --- rows ------------------------------------------------------------------

struct RowsOptions {
  int q = 5;
  std::size_t n_max = 0;
  std::size_t budget = hpt::kDefaultCellBudget;
  std::string format = "csv";
  std::string output;
};

int cmd_rows(const RowsOptions& opt) {
  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output);
    if (!file) throw UsageError("cannot open " + opt.output);
  }
  std::ostream& os = opt.output.empty() ? std::cout : file;
  const hpt::TriangleParams params(opt.q);
  std::unique_ptr<hpt::DotWriter> dot;
  if (opt.format == "dot") dot = std::make_unique<hpt::DotWriter>(os, params);
  hpt::for_each_row(params, opt.n_max, opt.budget, [&](const hpt::Row& row) {
    if (opt.format == "csv")
      hpt::write_csv_row(os, row);
    else if (opt.format == "json")
      os << hpt::row_json(row).dump() << '\n';
    else
      dot->add_row(row);
  });
  if (dot) dot->finish();
  return kOk;
}

// --- counts / sums ---------------------------------------------------------

struct SeqOptions {
  int q = 5;
  std::size_t n = 1;
  std::string method = "coupled";
  std::size_t budget = hpt::kDefaultCellBudget;
  bool cross_check = false;
  bool json = false;
};

std::string show(const hpt::CountTriple& t) {
  return "a=" + t.a.get_str() + " b=" + t.b.get_str() + " s=" + t.s.get_str();
}
std::string show(const hpt::SumTriple& t) {
  return "a=" + t.sum_a.get_str() + " b=" + t.sum_b.get_str() + " s=" + t.sum.get_str();
}
ordered_json to_json(const hpt::CountTriple& t) {
  return {{"a", t.a.get_str()}, {"b", t.b.get_str()}, {"s", t.s.get_str()}};
}
ordered_json to_json(const hpt::SumTriple& t) {
  return {{"a", t.sum_a.get_str()}, {"b", t.sum_b.get_str()}, {"s", t.sum.get_str()}};
}

template <class Triple>
Triple by_method(const std::string& method, int q, std::size_t n, std::size_t budget) {
  if constexpr (std::is_same_v<Triple, hpt::CountTriple>) {
    if (method == "coupled") return hpt::counts_coupled(q, n);
    if (method == "ternary") return hpt::counts_ternary(q, n);
    if (method == "closed") return hpt::counts_closed(q, n);
    hpt::RowCache cache(hpt::TriangleParams(q), budget);
    return hpt::row_counts(cache.row(n));
  } else {
    if (method == "coupled") return hpt::sums_coupled(q, n);
    if (method == "ternary") return hpt::sums_ternary(q, n);
    if (method == "closed") return hpt::sums_closed(q, n);
    hpt::RowCache cache(hpt::TriangleParams(q), budget);
    return hpt::row_sums(cache.row(n));
  }
}

template <class Triple>
int cmd_sequence(const SeqOptions& opt, std::string_view what) {
  if (!opt.cross_check) {
    const Triple t = by_method<Triple>(opt.method, opt.q, opt.n, opt.budget);
    if (opt.json) {
      ordered_json out{{"q", opt.q}, {"n", opt.n}, {"method", opt.method}};
      out[std::string(what)] = to_json(t);
      std::cout << out.dump() << '\n';
    } else {
      std::cout << show(t) << '\n';
    }
    return kOk;
  }

  // Every method that applies; generation and the q = 4 closed form are
  // reported as skipped rather than failing the comparison.
  ordered_json results = ordered_json::object();
  std::optional<Triple> reference;
  bool agree = true;
  for (const std::string method : {"coupled", "ternary", "closed", "generate"}) {
    try {
      const Triple t = by_method<Triple>(method, opt.q, opt.n, opt.budget);
      if (!reference) reference = t;
      const bool same = t == *reference;
      agree = agree && same;
      results[method] = to_json(t);
      if (!opt.json) std::cout << method << ": " << show(t) << (same ? "" : "  MISMATCH") << '\n';
    } catch (const hpt::BudgetExceeded& e) {
      results[method] = "skipped: " + std::string(e.what());
      if (!opt.json) std::cout << method << ": skipped (" << e.what() << ")\n";
    } catch (const hpt::DegenerateDiscriminant& e) {
      results[method] = "skipped: " + std::string(e.what());
      if (!opt.json) std::cout << method << ": skipped (" << e.what() << ")\n";
    }
  }
  if (opt.json) {
    std::cout << ordered_json{{"q", opt.q}, {"n", opt.n}, {"cross_check", results},
                              {"agree", agree}}
                     .dump()
              << '\n';
  } else {
    std::cout << (agree ? "agree" : "DISAGREE") << '\n';
  }
  return agree ? kOk : kCheckFailed;
}

// --- altsum ----------------------------------------------------------------

struct AltOptions {
  std::size_t n = 0;
  std::vector<std::string> weights;
  std::size_t budget = hpt::kDefaultCellBudget;
  bool cross_check = false;
};

int cmd_altsum(const AltOptions& opt) {
  std::optional<std::pair<hpt::BigInt, hpt::BigInt>> w;
  if (!opt.weights.empty())
    w.emplace(parse_int("--weights", opt.weights[0]), parse_int("--weights", opt.weights[1]));
  const hpt::BigInt value = w ? hpt::weighted_sum(opt.n, w->first, w->second) : hpt::alt_sum(opt.n);
  std::cout << value.get_str() << '\n';
  if (!opt.cross_check) return kOk;

  hpt::RowCache cache(hpt::TriangleParams(5), opt.budget);
  const hpt::Row& row = cache.row(opt.n);
  const hpt::BigInt direct = w ? hpt::weighted_sum_direct(row, w->first, w->second)
                               : hpt::alt_triple_from_row(row).total;
  const bool same = direct == value;
  std::cout << "row " << opt.n << ": " << direct.get_str() << (same ? " (match)" : " (MISMATCH)")
            << '\n';
  return same ? kOk : kCheckFailed;
}

// --- pattern ---------------------------------------------------------------

struct PatternOptions {
  std::size_t n = 0;
  std::string check = "phi";
  std::size_t budget = hpt::kDefaultCellBudget;
};

int cmd_pattern(const PatternOptions& opt) {
  hpt::RowCache cache(hpt::TriangleParams(5), opt.budget);
  ordered_json out{{"n", opt.n}, {"check", opt.check}};
  bool pass = true;
  if (opt.check == "phi") {
    const hpt::PatternCode code = hpt::encode_row(cache.row(opt.n));
    out["phi"] = code.phi.get_str();
    out["binary"] = code.binary();
    if (opt.n >= 3) {
      pass = hpt::verify_phi_recurrence(cache, opt.n);
      out["recurrence"] = pass;
    }
  } else if (opt.check == "prefix") {
    pass = hpt::check_prefix(cache, opt.n);
  } else if (opt.check == "central-copy") {
    pass = hpt::check_central_copy(cache, opt.n);
  } else {
    pass = hpt::check_central_value(cache, opt.n);
  }
  out["pass"] = pass;
  std::cout << out.dump() << '\n';
  return pass ? kOk : kCheckFailed;
}

// --- locate / embed --------------------------------------------------------

ordered_json location_json(const hpt::PairLocation& loc) {
  ordered_json out{{"u", loc.u.get_str()}, {"v", loc.v.get_str()}, {"row", loc.row.get_str()}};
  if (loc.col)
    out["col"] = *loc.col;
  else
    out["col"] = "symbolic";
  out["verified"] = std::string(hpt::verification_name(loc.verified));
  if (loc.orientation) out["orientation"] = std::string(hpt::orientation_name(*loc.orientation));
  if (loc.kinds) out["kinds"] = {kind_letter((*loc.kinds)[0]), kind_letter((*loc.kinds)[1])};
  ordered_json trace = ordered_json::array();
  for (const hpt::DescentStep& step : loc.trace)
    trace.push_back({{"descend", step.rows.get_str()}, {"side", hpt::side_name(step.side)}});
  out["trace"] = std::move(trace);
  return out;
}

struct LocateOptions {
  std::string u, v;
  std::size_t budget = hpt::kDefaultCellBudget;
};

int cmd_locate(const LocateOptions& opt) {
  const hpt::PairLocation loc =
      hpt::locate_pair(parse_int("--u", opt.u), parse_int("--v", opt.v), opt.budget);
  std::cout << location_json(loc).dump() << '\n';
  return kOk;
}

struct EmbedOptions {
  std::string f0, f1, eta;
  std::size_t m = 1;
  std::size_t budget = hpt::kDefaultCellBudget;
};

int cmd_embed(const EmbedOptions& opt) {
  const auto locs = hpt::embed_recurrence(parse_int("--f0", opt.f0), parse_int("--f1", opt.f1),
                                          parse_int("--eta", opt.eta), opt.m, opt.budget);
  ordered_json out = ordered_json::array();
  for (const auto& loc : locs) out.push_back(location_json(loc));
  std::cout << out.dump() << '\n';
  return kOk;
}

// --- eliminate -------------------------------------------------------------

struct EliminateOptions {
  std::string a1, b1, c1 = "0", a2, b2, c2 = "0";
  bool waive = false;
};

int cmd_eliminate(const EliminateOptions& opt) {
  const hpt::CoupledSystem sys{
      parse_rational("--a1", opt.a1), parse_rational("--b1", opt.b1),
      parse_rational("--c1", opt.c1), parse_rational("--a2", opt.a2),
      parse_rational("--b2", opt.b2), parse_rational("--c2", opt.c2),
  };
  const auto policy = opt.waive ? hpt::Hypothesis::Waive : hpt::Hypothesis::Enforce;
  const hpt::TernaryCoeffs t = hpt::eliminate(sys, policy);
  std::cout << "ternary: A=" << hpt::to_string(t.A) << " B=" << hpt::to_string(t.B)
            << " C=" << hpt::to_string(t.C) << '\n';
  if (sys.c1 == 0 && sys.c2 == 0) {
    const hpt::BinaryCoeffs b = hpt::eliminate_homogeneous(sys, policy);
    std::cout << "binary: A=" << hpt::to_string(b.A) << " B=" << hpt::to_string(b.B) << '\n';
  }
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::vector<std::string> suites{"all"};
  std::size_t budget = hpt::kDefaultCellBudget;
  bool json = false;
};

std::vector<int> resolve_suites(const std::vector<std::string>& names) {
  std::vector<int> ids;
  for (const std::string& name : names) {
    if (name == "all") {
      for (const auto& c : hpt::criteria()) ids.push_back(c.id);
      continue;
    }
    bool found = false;
    for (const auto& c : hpt::criteria()) {
      if (name == c.name || name == std::to_string(c.id)) {
        ids.push_back(c.id);
        found = true;
      }
    }
    if (!found) throw UsageError("unknown suite: " + name);
  }
  return ids;
}

int cmd_verify(const VerifyOptions& opt) {
  const std::vector<int> ids = resolve_suites(opt.suites);
  bool all_pass = true;
  ordered_json report = ordered_json::array();
  for (int id : ids) {
    const hpt::CheckResult r = hpt::run_criterion(id, opt.budget);
    all_pass = all_pass && r.pass;
    if (opt.json)
      report.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.detail
                << std::endl;
  }
  if (opt.json) std::cout << report.dump(2) << '\n';
  return all_pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic Pascal triangles of the {4,q} mosaics"};
  app.require_subcommand(1);

  std::string backend = "auto";
  app.add_option("--backend", backend, "Kernel backend (auto, scalar, avx2, neon)")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  auto budget_option = [](CLI::App* sub, std::size_t& target) {
    sub->add_option("--budget", target, "Largest row, in cells, that may be generated")
        ->check(CLI::PositiveNumber);
  };
  const auto q_check = CLI::Range(4, 1'000'000);

  RowsOptions rows;
  auto* rows_cmd = app.add_subcommand("rows", "Print rows 0..n-max");
  rows_cmd->add_option("--q", rows.q, "Vertex degree q >= 4")->check(q_check);
  rows_cmd->add_option("--n-max", rows.n_max, "Last row")->required();
  budget_option(rows_cmd, rows.budget);
  rows_cmd->add_option("--format", rows.format, "csv, json (one object per line) or dot")
      ->check(CLI::IsMember({"csv", "json", "dot"}));
  rows_cmd->add_option("--output,-o", rows.output, "Write here instead of standard output");

  SeqOptions counts, sums;
  auto add_seq = [&](const char* name, const char* help, SeqOptions& o) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--q", o.q, "Vertex degree q >= 4")->check(q_check);
    sub->add_option("--n", o.n, "Row index n >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--method", o.method, "coupled, ternary, closed or generate")
        ->check(CLI::IsMember({"coupled", "ternary", "closed", "generate"}));
    sub->add_flag("--cross-check", o.cross_check, "Run every method and compare");
    sub->add_flag("--json", o.json, "JSON output");
    budget_option(sub, o.budget);
    return sub;
  };
  auto* counts_cmd = add_seq("counts", "Cell counts (a_n, b_n, s_n) of row n", counts);
  auto* sums_cmd = add_seq("sums", "Label sums of row n by kind", sums);

  AltOptions alt;
  auto* alt_cmd = app.add_subcommand("altsum", "Alternating (or weighted) row sum, q = 5");
  alt_cmd->add_option("--n", alt.n, "Row index")->required();
  alt_cmd->add_option("--weights", alt.weights, "Weights v w of even / odd positions")
      ->expected(2);
  alt_cmd->add_flag("--cross-check", alt.cross_check, "Compare against the generated row");
  budget_option(alt_cmd, alt.budget);

  PatternOptions pat;
  auto* pat_cmd = app.add_subcommand("pattern", "A/B pattern codes and checks, q = 5");
  pat_cmd->add_option("--n", pat.n, "Row index (k for central-value)")->required();
  pat_cmd->add_option("--check", pat.check, "phi, prefix, central-copy or central-value")
      ->check(CLI::IsMember({"phi", "prefix", "central-copy", "central-value"}));
  budget_option(pat_cmd, pat.budget);

  LocateOptions loc;
  auto* loc_cmd = app.add_subcommand("locate", "Row where u and v are neighbours, q = 5");
  loc_cmd->add_option("--u", loc.u)->required();
  loc_cmd->add_option("--v", loc.v)->required();
  budget_option(loc_cmd, loc.budget);

  EmbedOptions emb;
  auto* emb_cmd = app.add_subcommand("embed", "Place f_j = eta f_{j-1} + f_{j-2} pairs, q = 5");
  emb_cmd->add_option("--f0", emb.f0)->required();
  emb_cmd->add_option("--f1", emb.f1)->required();
  emb_cmd->add_option("--eta", emb.eta)->required();
  emb_cmd->add_option("--m", emb.m, "Number of pairs")->required()->check(CLI::PositiveNumber);
  budget_option(emb_cmd, emb.budget);

  EliminateOptions el;
  auto* el_cmd =
      app.add_subcommand("eliminate", "Ternary recurrence of x' = a1 x + b1 y + c1, y' = ...");
  el_cmd->add_option("--a1", el.a1)->required();
  el_cmd->add_option("--b1", el.b1)->required();
  el_cmd->add_option("--c1", el.c1);
  el_cmd->add_option("--a2", el.a2)->required();
  el_cmd->add_option("--b2", el.b2)->required();
  el_cmd->add_option("--c2", el.c2);
  el_cmd->add_flag("--waive-hypothesis", el.waive, "Accept a2 * b1 = 0");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run the acceptance suites");
  ver_cmd->add_option("--suite", ver.suites, "all, a criterion id 1..9, or its name");
  ver_cmd->add_flag("--json", ver.json, "JSON report");
  budget_option(ver_cmd, ver.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (backend != "auto") {
      const hpt::kernels::Backend b = backend == "scalar" ? hpt::kernels::Backend::Scalar
                             : backend == "avx2" ? hpt::kernels::Backend::Avx2
                                                 : hpt::kernels::Backend::Neon;
      if (!hpt::kernels::backend_supported(b)) throw UsageError("backend not supported here: " + backend);
      hpt::kernels::set_backend(b);
    }
    if (*rows_cmd) return cmd_rows(rows);
    if (*counts_cmd) return cmd_sequence<hpt::CountTriple>(counts, "counts");
    if (*sums_cmd) return cmd_sequence<hpt::SumTriple>(sums, "sums");
    if (*alt_cmd) return cmd_altsum(alt);
    if (*pat_cmd) return cmd_pattern(pat);
    if (*loc_cmd) return cmd_locate(loc);
    if (*emb_cmd) return cmd_embed(emb);
    if (*el_cmd) return cmd_eliminate(el);
    return cmd_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "hpt: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hpt: " << e.what() << '\n';
    return kUsage;
  } catch (const hpt::BudgetExceeded& e) {
    std::cerr << "hpt: budget exceeded at row " << e.row() << ": " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "hpt: " << e.what() << '\n';
    return kCheckFailed;
  }
}
