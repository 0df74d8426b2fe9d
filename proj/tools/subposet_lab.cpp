// subposet-lab: bounds, exact extremal values, interval chains, greedy
// embeddings and the verification suites from the command line.

#include "subposet/bounds.hpp"
#include "subposet/embedder.hpp"
#include "subposet/error.hpp"
#include "subposet/exact_solver.hpp"
#include "subposet/interval_chain.hpp"
#include "subposet/poset_spec.hpp"
#include "subposet/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace subposet;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

std::vector<unsigned> parse_grid(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string part;
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != s.size()) throw ParseError("bad grid value '" + s + "' in '" + text + "'");
    return static_cast<unsigned>(v);
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    const unsigned lo = num(part.substr(0, dots)), hi = num(part.substr(dots + 2));
    if (lo > hi) throw ParseError("empty range '" + part + "'");
    for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty grid '" + text + "'");
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

json family_json(const SetFamily& fam) {
  json out = json::array();
  for (const auto& s : fam) out.push_back(s.elements());
  return out;
}

json sets_json(const std::vector<Subset>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.elements());
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void print_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    w[c] = header[c].size();
    for (const auto& r : rows) w[c] = std::max(w[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c)
      os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(c + 1 == r.size() ? 0 : w[c])) << r[c];
    os << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto x : w) rule.emplace_back(x, '-');
  line(rule);
  for (const auto& r : rows) line(r);
}

// ---- bounds ---------------------------------------------------------------

bool is_generalized_diamond(const Poset& p) {
  const auto d = mirsky_decomposition(p);
  const auto sizes = d.layer_sizes();
  return sizes.size() == 3 && sizes[0] == 1 && sizes[2] == 1 && sizes[1] >= 2 &&
         p.relation_count() == 2 * sizes[1] + 1;
}

struct BoundsArgs {
  std::string poset;
  std::string k_grid = "2..6";
  std::string m_grid = "1..6";
  std::string format = "table";
  std::string out;
};

int cmd_bounds(const BoundsArgs& a) {
  const Poset p = parse_poset_spec(a.poset);
  const std::size_t sp = p.size(), h = height(p);
  std::vector<BoundReport> rows;
  rows.push_back(bound_burcsi_nagy(sp, h));
  for (unsigned m : parse_grid(a.m_grid)) rows.push_back(bound_chen_li(sp, h, m));
  for (unsigned k : parse_grid(a.k_grid)) rows.push_back(bound_main(sp, h, k));
  rows.push_back(best_main_k(sp, h));
  rows.push_back(bound_corollary_interval(sp, h));
  const auto dc = bound_corollary_diamond(mirsky_decomposition(p).layer_sizes());
  rows.push_back(dc.sum);
  rows.push_back(dc.jensen);
  if (is_generalized_diamond(p)) rows.push_back(bound_dk(sp - 2));
  const auto shape = complete_multilevel_shape(p);
  if (!shape.empty()) rows.push_back(lower_bound_complete_multilevel(shape[0], shape.size()));

  Output out(a.out);
  std::ostream& os = out.os();
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json params = json::object();
      for (const auto& [k, v] : r.params) params[k] = v;
      arr.push_back({{"poset_spec", a.poset},
                     {"sizeP", sp},
                     {"h", h},
                     {"bound_name", r.name},
                     {"params", params},
                     {"coefficient", r.coefficient.str()},
                     {"side", to_string(r.side)}});
    }
    os << json{{"schema", 1}, {"rows", arr}}.dump(2) << "\n";
  } else if (a.format == "csv") {
    os << "poset_spec,sizeP,h,bound_name,params,coefficient,side\n";
    for (const auto& r : rows)
      os << csv_field(a.poset) << "," << sp << "," << h << "," << r.name << "," << csv_field(r.param_string())
         << "," << r.coefficient.str() << "," << to_string(r.side) << "\n";
  } else {
    std::vector<std::vector<std::string>> t;
    for (const auto& r : rows)
      t.push_back({r.name, r.param_string(), r.coefficient.str(), to_string(r.side)});
    os << "poset " << a.poset << "  |P| = " << sp << "  h = " << h << "\n";
    print_table(os, {"bound", "params", "coefficient", "side"}, t);
  }
  return 0;
}

// ---- exact / alpha --------------------------------------------------------

struct SolveArgs {
  std::string poset;
  unsigned n = 0;
  std::string family;
  std::string mode = "weak";
  std::string objective = "cardinality";
  std::uint64_t budget = 0;
  bool allow_large_n = false;
  std::string format = "json";
  std::string out;
};

SolverOptions solver_options(const SolveArgs& a) {
  SolverOptions o;
  o.mode = parse_mode(a.mode);
  o.objective = parse_objective(a.objective);
  o.node_budget = a.budget;
  o.allow_large_n = a.allow_large_n;
  return o;
}

int emit_result(const SolveArgs& a, const ExtremalResult& r) {
  Output out(a.out);
  std::ostream& os = out.os();
  if (a.format == "json") {
    json j{{"schema", 1},
           {"value", to_string(r.value)},
           {"objective", to_string(r.objective)},
           {"mode", to_string(r.mode)},
           {"exhaustive", r.exhaustive},
           {"witness", family_json(r.witness)},
           {"nodes_explored", r.nodes_explored}};
    if (!r.exhaustive) j["error"] = SearchBudgetExceeded("node budget exhausted; value is a lower bound").what();
    os << j.dump(2) << "\n";
  } else {
    os << "value       " << to_string(r.value) << (r.exhaustive ? "" : "  (lower bound, budget exhausted)")
       << "\nobjective   " << to_string(r.objective) << "\nmode        " << to_string(r.mode)
       << "\nnodes       " << r.nodes_explored << "\nwitness\n";
    write_family(os, r.witness);
  }
  return r.exhaustive ? 0 : kExitBudget;
}

int cmd_exact(const SolveArgs& a) {
  const Poset p = parse_poset_spec(a.poset);
  const SolverOptions o = solver_options(a);
  const auto r = o.objective == Objective::Lubell ? lubell_max(a.n, p, o) : la_exact(a.n, p, o);
  return emit_result(a, r);
}

int cmd_alpha(const SolveArgs& a) {
  const Poset p = parse_poset_spec(a.poset);
  return emit_result(a, alpha(load_family(a.family), p, solver_options(a)));
}

// ---- chain ----------------------------------------------------------------

int cmd_chain(unsigned n, unsigned k, const std::string& out_path) {
  Output out(out_path);
  write_family(out.os(), interval_chain(IntervalChainSpec(n, k)));
  return 0;
}

// ---- embed ----------------------------------------------------------------

struct EmbedArgs {
  std::string poset;
  unsigned k = 2;
  unsigned n = 0;
  std::string family;
  std::string out;
};

int cmd_embed(const EmbedArgs& a) {
  const Poset p = parse_poset_spec(a.poset);
  SetFamily host;
  if (!a.family.empty()) {
    host = load_family(a.family);
  } else {
    if (a.n == 0) throw ParseError("embed needs --n or --family");
    std::vector<Subset> window;
    for (const auto& s : interval_chain(IntervalChainSpec(a.n, a.k)))
      if (s.weight() + 3 >= 3 * a.k && s.weight() + a.k <= a.n + 1) window.push_back(s);
    host = SetFamily(a.n, std::move(window));
  }
  const auto r = greedy_embed(host, p, a.k);
  json steps = json::array();
  for (const auto& st : r.trace.steps)
    steps.push_back({{"layer", st.layer},
                     {"H", sets_json(st.images)},
                     {"I", family_json(st.removed)},
                     {"newly_removed", st.newly_removed}});
  json j{{"schema", 1},
         {"poset_spec", a.poset},
         {"k", a.k},
         {"n", host.n()},
         {"host_size", host.size()},
         {"threshold", r.trace.threshold},
         {"removal_cap", r.trace.removal_cap},
         {"consumed", r.trace.consumed},
         {"assignment", r.embedding.assignment},
         {"images", sets_json(r.embedding.images)},
         {"total_order", sets_json(r.trace.total_order)},
         {"steps", steps}};
  Output out(a.out);
  out.os() << j.dump(2) << "\n";
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::string k_grid;
  unsigned n = 0;
  std::size_t steps = 64;
  std::size_t samples = 0;
  std::uint64_t seed = 20160101;
  std::string format = "table";
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyConfig cfg;
  if (!a.k_grid.empty()) cfg.k_grid = parse_grid(a.k_grid);
  cfg.n_max = a.n;
  cfg.steps = a.steps;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  std::vector<std::string> names = a.suites;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = suite_names();

  bool all = true;
  Output out(a.out);
  std::ostream& os = out.os();
  json arr = json::array();
  for (const auto& name : names) {
    const auto rep = run_suite(name, cfg);
    all = all && rep.pass();
    if (a.format == "json") {
      json checks = json::array();
      for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      arr.push_back({{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", checks}});
    } else {
      os << rep.render();
    }
  }
  if (a.format == "json") os << json{{"schema", 1}, {"pass", all}, {"suites", arr}}.dump(2) << "\n";
  return all ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden-subposet extremal set theory toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"table", "json", "csv"};

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds on La(n,P) / binom(n, n/2)");
  bounds->add_option("--poset,-p", ba.poset, "Poset spec")->required();
  bounds->add_option("--k", ba.k_grid, "Interval-chain widths for the main bound, e.g. 2..6");
  bounds->add_option("--m", ba.m_grid, "Chain lengths for the Chen-Li bound");
  bounds->add_option("--format,-f", ba.format)->check(CLI::IsMember(formats));
  bounds->add_option("--output,-o", ba.out);

  SolveArgs ea;
  auto* exact = app.add_subcommand("exact", "Exact La(n,P), La#(n,P) or maximum Lubell value");
  exact->add_option("--poset,-p", ea.poset)->required();
  exact->add_option("--n", ea.n)->required();
  exact->add_option("--mode", ea.mode)->check(CLI::IsMember({"weak", "induced"}));
  exact->add_option("--objective", ea.objective)->check(CLI::IsMember({"cardinality", "lubell"}));
  exact->add_option("--budget", ea.budget, "Node budget (0 = unlimited)");
  exact->add_flag("--allow-large-n", ea.allow_large_n);
  exact->add_option("--format,-f", ea.format)->check(CLI::IsMember({"json", "table"}));
  exact->add_option("--output,-o", ea.out);

  SolveArgs aa;
  auto* alpha_cmd = app.add_subcommand("alpha", "Largest P-free subfamily of a host family file");
  alpha_cmd->add_option("--poset,-p", aa.poset)->required();
  alpha_cmd->add_option("--family", aa.family)->required()->check(CLI::ExistingFile);
  alpha_cmd->add_option("--mode", aa.mode)->check(CLI::IsMember({"weak", "induced"}));
  alpha_cmd->add_option("--objective", aa.objective)->check(CLI::IsMember({"cardinality", "lubell"}));
  alpha_cmd->add_option("--budget", aa.budget);
  alpha_cmd->add_option("--format,-f", aa.format)->check(CLI::IsMember({"json", "table"}));
  alpha_cmd->add_option("--output,-o", aa.out);

  unsigned cn = 0, ck = 0;
  std::string cout_path;
  auto* chain_cmd = app.add_subcommand("chain", "Write the canonical k-interval chain as a family file");
  chain_cmd->add_option("--n", cn)->required();
  chain_cmd->add_option("--k", ck)->required();
  chain_cmd->add_option("--output,-o", cout_path);

  EmbedArgs ma;
  auto* embed = app.add_subcommand("embed", "Greedy antichain embedding into an interval chain");
  embed->add_option("--poset,-p", ma.poset)->required();
  embed->add_option("--k", ma.k);
  embed->add_option("--n", ma.n);
  embed->add_option("--family", ma.family)->check(CLI::ExistingFile);
  embed->add_option("--output,-o", ma.out);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite,-s", va.suites, "Suite name(s) or 'all'");
  verify->add_option("--k", va.k_grid, "Width grid, e.g. 2..5");
  verify->add_option("--n", va.n, "Largest ground set (or |P| for grid suites)");
  verify->add_option("--steps", va.steps);
  verify->add_option("--samples", va.samples);
  verify->add_option("--seed", va.seed);
  verify->add_option("--format,-f", va.format)->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--output,-o", va.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bounds) return cmd_bounds(ba);
    if (*exact) return cmd_exact(ea);
    if (*alpha_cmd) return cmd_alpha(aa);
    if (*chain_cmd) return cmd_chain(cn, ck, cout_path);
    if (*embed) return cmd_embed(ma);
    if (*verify) return cmd_verify(va);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
