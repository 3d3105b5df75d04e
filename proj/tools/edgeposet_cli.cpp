// edgeposet: inspect graded posets, quotients of B_n and their edge posets.
//
// Exit codes: 0 pass, 1 a requested property fails, 2 bad input, 3 internal
// inconsistency.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgeposet/action.hpp"
#include "edgeposet/edge.hpp"
#include "edgeposet/error.hpp"
#include "edgeposet/figures.hpp"
#include "edgeposet/io.hpp"
#include "edgeposet/partitions.hpp"
#include "edgeposet/peck.hpp"
#include "edgeposet/report.hpp"

using namespace edgeposet;

namespace {

constexpr int kPass = 0;
constexpr int kPropertyFail = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct Options {
  std::string source;
  std::string group;
  std::vector<std::string> gens;
  int n = -1;
  bool edge = false;
  bool hpos = false;
  std::string checks = "ranks,peck";
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  std::size_t oracle_threshold = 0;
  std::size_t group_cap = kDefaultGroupCap;
  int l = 0;
  int m = 0;
  int r = 1;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size() && value >= 0) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidInput, "bad " + what + " '" + text + "'");
}

GradedPoset load_source(const std::string& source, int& boolean_rank) {
  boolean_rank = -1;
  if (source.rfind("bn:", 0) == 0) {
    boolean_rank = parse_count(source.substr(3), "boolean rank");
    return boolean_algebra(boolean_rank);
  }
  if (source.rfind("chain:", 0) == 0) return chain(parse_count(source.substr(6), "chain length"));
  if (source.rfind("tree:", 0) == 0) return read_tree_file(source.substr(5)).poset();
  if (source == "fig1") return figures::fig1();
  if (source == "fig2") return figures::fig2();
  if (source == "diamond") return figures::diamond();
  return read_poset_file(source);
}

nlohmann::json scd_result(int boolean_rank, char variant) {
  if (boolean_rank < 0)
    throw Error(ErrorKind::InvalidInput, "scd is available for bn:N sources only");
  GradedPoset host;
  ChainDecomposition d;
  if (variant == 'P') {
    host = boolean_algebra(boolean_rank);
    d = scd_boolean(boolean_rank);
  } else {
    const HDecomposition h = h_bn_decomposition(boolean_rank);
    d = scd_h_boolean(h);
    host = h.h.poset();
    if (variant == 'E') {
      const PosetMorphism f = h_to_e_bijection(boolean_algebra(boolean_rank));
      d = scd_transport(d, f);
      host = f.target;
    }
  }
  return {{"valid", is_symmetric_chain_decomposition(host, d)}, {"chains", d.chains}};
}

int run_check(const Options& o) {
  int boolean_rank = -1;
  const GradedPoset base = load_source(o.source, boolean_rank);
  const char variant = o.hpos ? 'H' : (o.edge ? 'E' : 'P');
  GradedPoset p = base;
  if (variant == 'E') p = edge_poset(base).poset();
  if (variant == 'H') p = h_poset(base).poset();

  Output out(o.out);
  if (o.format == "dot") {
    out.stream() << to_dot(p);
    return kPass;
  }

  nlohmann::json checks = nlohmann::json::object();
  bool pass = true;
  for (const auto& check : split(o.checks, ',')) {
    if (check == "ranks") {
      checks["ranks"] = p.rank_vector();
    } else if (check == "peck") {
      const PeckReport r = peck_report(p, o.oracle_threshold);
      checks["peck"] = r.peck;
      checks["peck_details"] = to_json(r);
      pass = pass && r.peck;
    } else if (check == "unitary-peck") {
      const bool up = is_unitary_peck(p);
      checks["unitary-peck"] = up;
      pass = pass && up;
    } else if (check == "sperner") {
      const PeckReport r = peck_report(p, o.oracle_threshold);
      checks["sperner"] = r.strongly_sperner;
      checks["d"] = r.d;
      pass = pass && r.strongly_sperner;
    } else if (check == "self-dual") {
      const bool sd = is_isomorphic(p, dual(p)).has_value();
      checks["self-dual"] = sd;
      pass = pass && sd;
    } else if (check == "scd") {
      const auto scd = scd_result(boolean_rank, variant);
      checks["scd"] = scd.at("valid");
      checks["scd_chains"] = scd.at("chains");
      pass = pass && scd.at("valid").get<bool>();
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown check '" + check + "'");
    }
  }

  if (o.format == "csv") {
    out.stream() << "check,value\n";
    for (const auto& [name, value] : checks.items()) {
      if (name == "peck_details" || name == "scd_chains") continue;
      std::string text = value.dump();
      if (value.is_array()) {
        text.clear();
        for (const auto& v : value) text += (text.empty() ? "" : " ") + v.dump();
      }
      out.stream() << name << ',' << text << '\n';
    }
  } else {
    nlohmann::json j = {{"source", o.source},
                        {"variant", std::string(1, variant)},
                        {"size", p.size()},
                        {"checks", checks},
                        {"pass", pass}};
    out.stream() << j.dump() << '\n';
  }
  return pass ? kPass : kPropertyFail;
}

PermGroup load_group(const Options& o) {
  if (o.group.rfind("tree:", 0) == 0)
    return tree_automorphisms(read_tree_file(o.group.substr(5)), o.group_cap).group;
  if (o.group.rfind("elementary-abelian-2", 0) == 0) {
    if (o.gens.size() != 1 || o.n < 0)
      throw Error(ErrorKind::InvalidInput, "elementary-abelian-2 needs --gens FILE and --n");
    return elementary_abelian_2(o.n, read_generator_file(o.gens.front(), o.n));
  }
  if (!o.group.empty()) {
    PermGroup g = named_group(o.group, o.n, o.group_cap);
    if (o.n >= 0 && g.degree() != o.n)
      throw Error(ErrorKind::InvalidInput, "--n " + std::to_string(o.n) + " does not match group degree " +
                                               std::to_string(g.degree()));
    return g;
  }
  if (o.gens.size() == 1) {
    if (o.n < 0) throw Error(ErrorKind::InvalidInput, "--gens needs --n");
    return PermGroup::generate(o.n, read_generator_file(o.gens.front(), o.n), o.group_cap);
  }
  throw Error(ErrorKind::InvalidInput, "give exactly one of --group or --gens");
}

int run_quotient(const Options& o) {
  const PermGroup g = load_group(o);
  Output out(o.out);
  if (o.format == "dot") {
    const QuotientPoset q = quotient(induced_bn_action(g));
    out.stream() << to_dot(o.edge ? edge_poset(q.poset).poset() : q.poset);
    return kPass;
  }
  const SweepRecord r = analyse_bn_action(g, o.oracle_threshold);
  if (o.format == "csv")
    out.stream() << sweep_csv_header() << '\n' << to_csv_row(r) << '\n';
  else
    out.stream() << to_json(r).dump() << '\n';
  return r.quotient_edges.peck ? kPass : kPropertyFail;
}

int run_sweep_command(const Options& o) {
  if (o.n < 0) throw Error(ErrorKind::InvalidInput, "sweep needs --n");
  std::vector<PermGroup> groups;
  if (o.gens.empty()) {
    if (o.n < 1 || o.n > 5) throw Error(ErrorKind::InvalidInput, "exhaustive sweep needs 1 <= n <= 5");
    groups = subgroup_sweep(o.n);
  } else {
    for (const auto& file : o.gens)
      groups.push_back(PermGroup::generate(o.n, read_generator_file(file, o.n), o.group_cap));
  }
  const auto records = run_sweep(groups, o.jobs, o.oracle_threshold);
  Output out(o.out);
  if (o.format == "csv") out.stream() << sweep_csv_header() << '\n';
  std::vector<const SweepRecord*> failures;
  for (const auto& r : records) {
    if (o.format == "csv")
      out.stream() << to_csv_row(r) << '\n';
    else
      out.stream() << to_json(r).dump() << '\n';
    if (!r.quotient_edges.peck) failures.push_back(&r);
  }
  if (failures.empty()) return kPass;
  std::cerr << "\n########################################################\n"
            << "###  COUNTEREXAMPLE: E(B_n/G) is not Peck            ###\n"
            << "########################################################\n";
  for (const auto* r : failures) std::cerr << "  n=" << r->n << " order=" << r->order << " G=<" << r->generators << ">\n";
  return kPropertyFail;
}

int run_pak(const Options& o) {
  const PakSequence s = pak_sequence_check(o.l, o.m, o.r);
  Output out(o.out);
  if (o.format == "json") {
    out.stream() << nlohmann::json{{"l", o.l}, {"m", o.m}, {"r", o.r}, {"sequence", s.sequence},
                                   {"symmetric", s.symmetric}, {"unimodal", s.unimodal}}
                        .dump()
                 << '\n';
  } else {
    out.stream() << "k,p\n";
    for (std::size_t i = 0; i < s.sequence.size(); ++i) out.stream() << o.r + static_cast<int>(i) << ',' << s.sequence[i] << '\n';
    out.stream() << "symmetric," << (s.symmetric ? "true" : "false") << '\n'
                 << "unimodal," << (s.unimodal ? "true" : "false") << '\n';
  }
  return s.symmetric && s.unimodal ? kPass : kPropertyFail;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Internal:
    case ErrorKind::ImageChainNotSaturated:
    case ErrorKind::ImageNotCover:
      return kInternal;
    default:
      return kInputError;
  }
}

CLI::Option* add_common(CLI::App* cmd, Options& o) {
  auto* format = cmd->add_option("--format", o.format, "json, csv or dot")
                     ->envname("EPL_FORMAT")
                     ->check(CLI::IsMember({"json", "csv", "dot"}));
  cmd->add_option("--out", o.out, "write the report here instead of stdout")->envname("EPL_OUT");
  cmd->add_option("--oracle-threshold", o.oracle_threshold,
                  "recheck d_k exhaustively on posets up to this size")
      ->envname("EPL_ORACLE_THRESHOLD");
  return format;
}

void add_group(CLI::App* cmd, Options& o, bool many_gens) {
  cmd->add_option("--group", o.group, "symmetric:N, cyclic:N, dihedral:N, hyperoctahedral:N, trivial, tree:FILE")
      ->envname("EPL_GROUP");
  auto* gens = cmd->add_option("--gens", o.gens, "generator file, one 1-indexed cycle permutation per line")
                   ->envname("EPL_GENS");
  if (!many_gens) gens->expected(1);
  cmd->add_option("--n", o.n, "rank of the boolean algebra")->envname("EPL_N");
  cmd->add_option("--group-cap", o.group_cap, "largest group order to enumerate")->envname("EPL_GROUP_CAP");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge posets, quotients of boolean algebras and Peck checks"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run property checks on a poset");
  check->add_option("source", o.source, "bn:N, chain:N, fig1, fig2, diamond, tree:FILE or a JSON poset file")
      ->required();
  auto* edge = check->add_flag("--edge", o.edge, "check E(P)")->envname("EPL_EDGE");
  check->add_flag("--hpos", o.hpos, "check H(P)")->envname("EPL_HPOS")->excludes(edge);
  check->add_option("--checks", o.checks, "ranks, peck, unitary-peck, sperner, self-dual, scd")
      ->envname("EPL_CHECKS");
  add_common(check, o);

  auto* quot = app.add_subcommand("quotient", "analyse an induced action on B_n");
  add_group(quot, o, false);
  quot->add_flag("--edge", o.edge, "with --format dot, draw E(B_n/G)")->envname("EPL_EDGE");
  add_common(quot, o);

  auto* sweep = app.add_subcommand("sweep", "check E(B_n/G) for every subgroup class of S_n");
  add_group(sweep, o, true);
  sweep->add_option("--jobs", o.jobs, "worker threads")->envname("EPL_JOBS")->check(CLI::PositiveNumber);
  add_common(sweep, o);

  auto* pak = app.add_subcommand("pak", "partition statistic sequence p_r..p_{lm}");
  pak->add_option("--l", o.l, "rows")->required()->envname("EPL_L");
  pak->add_option("--m", o.m, "columns")->required()->envname("EPL_M");
  pak->add_option("--r", o.r, "binomial exponent")->envname("EPL_R");
  auto* pak_format = add_common(pak, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return run_check(o);
    if (*quot) return run_quotient(o);
    if (*sweep) return run_sweep_command(o);
    if (*pak) {
      if (pak_format->count() == 0) o.format = "csv";
      return run_pak(o);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInputError;
}
