// Command-line front end: flagged key polynomials, Schubert polynomials,
// tableau and factorization enumeration, insertion, crystal graphs with DOT
// export, and exhaustive verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.  Standard
// output is deterministic; timings go to standard error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "flagkey/flagkey.hpp"

namespace {

using namespace flagkey;

struct Options {
  bool json = false;
  std::string dot_path;
  long long max_instances = 0;

  std::string alpha_str, flag_str, w_str, word_str, blocks_str;
  int n = 0;
  std::string route = "pichain";
  bool all_routes = false;

  std::string theorem = "all";
  int sn = -1, deg = -1, flag_excess = -1;
};

WeakComposition read_alpha(const std::string& s) {
  WeakComposition a = parse_int_list(s);
  for (int x : a)
    if (x < 0) throw std::invalid_argument("composition entries must be nonnegative");
  return a;
}

Flag read_flag(const std::string& s) {
  if (s.empty()) return Flag::standard();
  return Flag(parse_int_list(s));
}

Permutation read_perm(const std::string& s) { return Permutation::from_oneline(parse_int_list(s)); }

std::string display_string(const IncreasingFactorization& f) {
  std::string s;
  const auto& d = f.display();
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += "|";
    for (size_t t = 0; t < d[i].size(); ++t) {
      if (t) s += ",";
      s += std::to_string(d[i][t]);
    }
  }
  return s;
}

void require_no_dot(const Options& opt) {
  if (!opt.dot_path.empty())
    throw std::invalid_argument("--dot is only supported by crystal, sskt, and rfc");
}

void write_dot_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open DOT output file: " + path);
  writer(out);
}

void enforce_budget(const Options& opt, long long count) {
  if (opt.max_instances > 0 && count > opt.max_instances)
    throw std::invalid_argument("instance budget exceeded: " + std::to_string(count) + " > " +
                                std::to_string(opt.max_instances));
}

int cmd_kappa(const Options& opt) {
  require_no_dot(opt);
  WeakComposition alpha = read_alpha(opt.alpha_str);
  Flag phi = read_flag(opt.flag_str);
  if (opt.all_routes) {
    IntPolynomial by_enum = flagged_key_enum(alpha, phi);
    IntPolynomial by_chain = flagged_key_pichain(alpha, phi);
    IntPolynomial by_rec = flagged_key_recursive(alpha, phi);
    IntPolynomial by_rs = flagged_key_rs(alpha, phi);
    bool agree = by_enum == by_chain && by_enum == by_rec && by_enum == by_rs;
    json out{{"agree", agree},
             {"enum", json_of(by_enum)},
             {"pichain", json_of(by_chain)},
             {"recursive", json_of(by_rec)},
             {"rs", json_of(by_rs)}};
    std::cout << out.dump() << "\n";
    return agree ? 0 : 1;
  }
  IntPolynomial p;
  if (opt.route == "enum")
    p = flagged_key_enum(alpha, phi);
  else if (opt.route == "pichain")
    p = flagged_key_pichain(alpha, phi);
  else if (opt.route == "recursive")
    p = flagged_key_recursive(alpha, phi);
  else if (opt.route == "rs")
    p = flagged_key_rs(alpha, phi);
  else
    throw std::invalid_argument("unknown route: " + opt.route);
  std::cout << json_of(p).dump() << "\n";
  return 0;
}

int cmd_schubert(const Options& opt) {
  require_no_dot(opt);
  Permutation w = read_perm(opt.w_str);
  Flag phi = read_flag(opt.flag_str);
  std::cout << json_of(flagged_schubert(w, phi)).dump() << "\n";
  return 0;
}

int cmd_sskt(const Options& opt) {
  WeakComposition alpha = read_alpha(opt.alpha_str);
  Flag phi = read_flag(opt.flag_str);
  auto tabs = enumerate_sskt(alpha, phi);
  enforce_budget(opt, static_cast<long long>(tabs.size()));
  if (!opt.dot_path.empty()) {
    int rank = std::max(2, phi(std::max(1, comp_length(alpha))));
    auto g = crystal_graph(tabs, rank, [](const Tableau& T, int i) { return kt_raise(T, i); });
    write_dot_file(opt.dot_path, [&](std::ostream& os) {
      write_dot(os, g, [](const Tableau& T) { return json_of(T).dump(); });
    });
  }
  if (opt.json) {
    json out = json::array();
    for (const Tableau& T : tabs) out.push_back(json_of(T));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "count " << tabs.size() << "\n";
    for (const Tableau& T : tabs) std::cout << json_of(T).dump() << "\n";
  }
  return 0;
}

int cmd_rfc(const Options& opt) {
  Permutation w = read_perm(opt.w_str);
  Flag phi = read_flag(opt.flag_str);
  int n = opt.n > 0 ? opt.n : default_block_count(w, phi);
  auto facs = enumerate_rfc(w, phi, n);
  enforce_budget(opt, static_cast<long long>(facs.size()));
  if (!opt.dot_path.empty()) {
    auto g = crystal_graph(facs, n, [](const IncreasingFactorization& f, int i) { return rf_raise(f, i); });
    write_dot_file(opt.dot_path, [&](std::ostream& os) {
      write_dot(os, g, [](const IncreasingFactorization& f) { return display_string(f); });
    });
  }
  if (opt.json) {
    json out = json::array();
    for (const auto& f : facs) out.push_back(json_of(f));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "count " << facs.size() << "\n";
    for (const auto& f : facs) std::cout << "(" << display_string(f) << ")\n";
  }
  return 0;
}

int cmd_insert(const Options& opt, bool weak) {
  require_no_dot(opt);
  if (opt.word_str.empty() == opt.blocks_str.empty())
    throw std::invalid_argument("provide exactly one of --word or --blocks");
  IncreasingFactorization f = opt.blocks_str.empty()
                                  ? IncreasingFactorization::trivial(parse_int_list(opt.word_str))
                                  : IncreasingFactorization(parse_blocks(opt.blocks_str));
  Tableau P, Q;
  if (weak) {
    P = weak_p(f);
    Q = weak_q(f);
  } else {
    auto pq = eg_pair(f);
    P = pq.first;
    Q = pq.second;
  }
  std::cout << json{{"P", json_of(P)}, {"Q", json_of(Q)}}.dump() << "\n";
  return 0;
}

int cmd_crystal(const Options& opt, bool sskt_source) {
  json summary;
  if (sskt_source) {
    WeakComposition alpha = read_alpha(opt.alpha_str);
    Flag phi = read_flag(opt.flag_str);
    auto tabs = enumerate_sskt(alpha, phi);
    enforce_budget(opt, static_cast<long long>(tabs.size()));
    int rank = std::max(2, phi(std::max(1, comp_length(alpha))));
    auto g = crystal_graph(tabs, rank, [](const Tableau& T, int i) { return kt_raise(T, i); });
    if (!opt.dot_path.empty())
      write_dot_file(opt.dot_path, [&](std::ostream& os) {
        write_dot(os, g, [](const Tableau& T) { return json_of(T).dump(); });
      });
    summary = json{{"character", json_of(character(g.verts))},
                   {"edges", g.edges.size()},
                   {"vertices", g.verts.size()}};
  } else {
    Permutation w = read_perm(opt.w_str);
    Flag phi = read_flag(opt.flag_str);
    int n = opt.n > 0 ? opt.n : default_block_count(w, phi);
    auto facs = enumerate_rfc(w, phi, n);
    enforce_budget(opt, static_cast<long long>(facs.size()));
    auto g = crystal_graph(facs, n, [](const IncreasingFactorization& f, int i) { return rf_raise(f, i); });
    if (!opt.dot_path.empty())
      write_dot_file(opt.dot_path, [&](std::ostream& os) {
        write_dot(os, g, [](const IncreasingFactorization& f) { return display_string(f); });
      });
    summary = json{{"character", json_of(character(g.verts))},
                   {"edges", g.edges.size()},
                   {"vertices", g.verts.size()}};
  }
  if (opt.json) {
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "vertices " << summary["vertices"] << "\n";
    std::cout << "edges " << summary["edges"] << "\n";
    std::cout << "character " << summary["character"].dump() << "\n";
  }
  return 0;
}

// Supported sweep bounds per suite; requesting anything else is a usage
// error rather than a silently different sweep.
struct SuiteBounds {
  int sn = -1, deg = -1, flag_excess = -1; // -1: not a parameter of this suite
};

const std::map<std::string, std::pair<std::string, SuiteBounds>>& theorem_table() {
  static const std::map<std::string, std::pair<std::string, SuiteBounds>> table = {
      {"eq1", {"pi-recursion", {-1, 5, -1}}},
      {"recursion", {"kappa-routes", {-1, 5, 1}}},
      {"rs-equality", {"rs-model", {-1, 5, 2}}},
      {"bijection", {"weak-eg-bijection", {4, -1, 1}}},
      {"intertwine", {"crystal-intertwining", {4, -1, 1}}},
      {"demazure-chain", {"demazure-chain", {4, -1, 1}}},
      {"demazure-character", {"demazure-character", {4, -1, -1}}},
      {"schubert-key", {"schubert", {4, -1, 1}}},
      {"lift-roundtrip", {"yamanouchi", {4, -1, -1}}},
  };
  return table;
}

void check_bound(const char* name, int given, int supported) {
  if (given < 0) return;
  if (supported < 0)
    throw std::invalid_argument(std::string(name) + " does not apply to this suite");
  if (given != supported)
    throw std::invalid_argument(std::string(name) + " must be " + std::to_string(supported) +
                                " for this suite");
}

int cmd_verify(const Options& opt) {
  require_no_dot(opt);
  std::vector<std::pair<std::string, SuiteFn>> todo;
  if (opt.theorem == "all") {
    if (opt.sn >= 0 || opt.deg >= 0 || opt.flag_excess >= 0)
      throw std::invalid_argument("bounds may only be given with a single theorem");
    for (const auto& [name, entry] : theorem_table()) {
      (void)name;
      for (const auto& [id, fn] : verification_suites())
        if (id == entry.first) todo.push_back({id, fn});
    }
  } else {
    auto it = theorem_table().find(opt.theorem);
    if (it == theorem_table().end())
      throw std::invalid_argument("unknown theorem: " + opt.theorem);
    check_bound("--sn", opt.sn, it->second.second.sn);
    check_bound("--deg", opt.deg, it->second.second.deg);
    check_bound("--flag-excess", opt.flag_excess, it->second.second.flag_excess);
    for (const auto& [id, fn] : verification_suites())
      if (id == it->second.first) todo.push_back({id, fn});
  }

  std::vector<VerificationReport> reports;
  for (const auto& [id, fn] : todo) {
    reports.push_back(fn(opt.max_instances));
    std::cerr << id << ": " << reports.back().wall_ms << " ms\n";
  }

  bool any_failed = false, any_aborted = false;
  if (opt.json) {
    json out = json::array();
    for (const auto& rep : reports) {
      out.push_back(json{{"aborted", rep.aborted},
                         {"failed", rep.failed},
                         {"failures", rep.failures},
                         {"id", rep.id},
                         {"instances", rep.instances},
                         {"params", rep.params}});
      any_failed |= rep.failed > 0;
      any_aborted |= rep.aborted;
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& rep : reports) {
      print_report(std::cout, rep);
      any_failed |= rep.failed > 0;
      any_aborted |= rep.aborted;
    }
  }
  if (any_aborted) return 2;
  return any_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"flagged key polynomial and crystal toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "emit JSON on standard output");
  app.add_option("--dot", opt.dot_path, "write a crystal graph in DOT format to this path");
  app.add_option("--max-instances", opt.max_instances,
                 "abort with a usage error beyond this many instances (0 = unlimited)");

  auto* kappa = app.add_subcommand("kappa", "flagged key polynomial of a composition");
  kappa->add_option("--alpha", opt.alpha_str, "weak composition, e.g. 1,2,0,1")->required();
  kappa->add_option("--flag", opt.flag_str, "flag values, e.g. 2,3,4,4 (default standard)");
  kappa->add_option("--route", opt.route, "enum | pichain | recursive | rs")
      ->check(CLI::IsMember({"enum", "pichain", "recursive", "rs"}));
  kappa->add_flag("--all-routes", opt.all_routes, "compute all four routes and compare");

  auto* schubert_cmd = app.add_subcommand("schubert", "flagged Schubert polynomial");
  schubert_cmd->add_option("--w", opt.w_str, "permutation in one-line notation, e.g. 2,1,4,3")
      ->required();
  schubert_cmd->add_option("--flag", opt.flag_str, "flag values (default standard)");

  auto* sskt_cmd = app.add_subcommand("sskt", "enumerate flagged key tableaux");
  sskt_cmd->add_option("--alpha", opt.alpha_str)->required();
  sskt_cmd->add_option("--flag", opt.flag_str);

  auto* rfc_cmd = app.add_subcommand("rfc", "enumerate flagged reduced factorizations");
  rfc_cmd->add_option("--w", opt.w_str)->required();
  rfc_cmd->add_option("--flag", opt.flag_str);
  rfc_cmd->add_option("--n", opt.n, "number of blocks (default: flag of largest letter)");

  auto* insert_cmd = app.add_subcommand("insert", "insertion algorithms");
  insert_cmd->require_subcommand(1);
  auto* ins_eg = insert_cmd->add_subcommand("eg", "Edelman-Greene insertion");
  auto* ins_weak = insert_cmd->add_subcommand("weak-eg", "weak Edelman-Greene insertion");
  for (auto* sub : {ins_eg, ins_weak}) {
    sub->add_option("--word", opt.word_str, "reduced word, e.g. 3,2,6,5,6,4");
    sub->add_option("--blocks", opt.blocks_str, "factorization, e.g. \"3|26|56|4\"");
  }

  auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph with character");
  crystal_cmd->require_subcommand(1);
  auto* cry_sskt = crystal_cmd->add_subcommand("sskt", "crystal on flagged key tableaux");
  cry_sskt->add_option("--alpha", opt.alpha_str)->required();
  cry_sskt->add_option("--flag", opt.flag_str);
  auto* cry_rfc = crystal_cmd->add_subcommand("rfc", "crystal on flagged factorizations");
  cry_rfc->add_option("--w", opt.w_str)->required();
  cry_rfc->add_option("--flag", opt.flag_str);
  cry_rfc->add_option("--n", opt.n);

  auto* verify_cmd = app.add_subcommand("verify", "run exhaustive verification suites");
  verify_cmd->add_option("theorem", opt.theorem,
                         "eq1 | recursion | rs-equality | bijection | intertwine | demazure-chain | "
                         "demazure-character | schubert-key | lift-roundtrip | all");
  verify_cmd->add_option("--sn", opt.sn, "symmetric group bound (supported: 4)");
  verify_cmd->add_option("--deg", opt.deg, "degree bound (supported: 5)");
  verify_cmd->add_option("--flag-excess", opt.flag_excess, "flag excess bound");

  for (auto* sub : {kappa, schubert_cmd, sskt_cmd, rfc_cmd, insert_cmd, ins_eg, ins_weak,
                    crystal_cmd, cry_sskt, cry_rfc, verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (kappa->parsed()) return cmd_kappa(opt);
    if (schubert_cmd->parsed()) return cmd_schubert(opt);
    if (sskt_cmd->parsed()) return cmd_sskt(opt);
    if (rfc_cmd->parsed()) return cmd_rfc(opt);
    if (insert_cmd->parsed()) return cmd_insert(opt, ins_weak->parsed());
    if (crystal_cmd->parsed()) return cmd_crystal(opt, cry_sskt->parsed());
    if (verify_cmd->parsed()) return cmd_verify(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
