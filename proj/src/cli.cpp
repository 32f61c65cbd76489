#include "gste/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "gste/agraph.hpp"
#include "gste/diagnostics.hpp"
#include "gste/gste.hpp"
#include "gste/netlist.hpp"
#include "gste/oracle.hpp"
#include "gste/ste.hpp"

#ifndef GSTE_VERSION
#define GSTE_VERSION "0.0.0"
#endif

namespace gste {

namespace {

using Json = nlohmann::ordered_json;

// Failure that has already been reported as a diagnostic.
struct Reported {};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err_ << path << ": error: cannot read file\n";
      throw Reported{};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  template <typename F>
  auto parse(const std::string& origin, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError& e) {
      err_ << format_diagnostic(e.diagnostic(), origin) << '\n';
      throw Reported{};
    }
  }

  Netlist netlist(const std::string& path) {
    const std::string text = read(path);
    return parse(path, [&] { return parse_netlist(text); });
  }

  AssertionGraph agraph(const std::string& path, const Netlist* net) {
    const std::string text = read(path);
    return parse(path, [&] {
      AssertionGraph g = parse_agraph(text);
      return net ? bind(g, *net) : g;
    });
  }

  SteFile ste_file(const std::string& path, const Netlist& net) {
    const std::string text = read(path);
    return parse(path, [&] {
      SteFile f = parse_ste_file(text);
      for (auto& a : f.assertions) {
        a.antecedent = bind(a.antecedent, net);
        a.consequent = bind(a.consequent, net);
      }
      return f;
    });
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

Json valuation_json(const Valuation& phi, const Constants& constants) {
  Json j = Json::object();
  for (std::size_t i = 0; i < constants.size(); ++i) j[constants.names()[i]] = phi[i] ? 1 : 0;
  return j;
}

std::string quad_str(Quad q) { return std::string(1, to_char(q)); }

Json witness_json(const Witness& w, const Constants& constants, const AssertionGraph* g) {
  Json j;
  j["valuation"] = valuation_json(w.valuation, constants);
  j["kind"] = std::string(to_string(w.kind));
  if (w.time) j["time"] = *w.time;
  if (w.edge) {
    j["edge"] = *w.edge;
    if (g) j["endpoints"] = g->describe_edge(*g->find_edge(*w.edge));
  }
  j["node"] = w.node;
  j["required"] = quad_str(w.required);
  j["actual"] = quad_str(w.actual);
  return j;
}

Json verdict_json(const Verdict& v, const AssertionGraph* g) {
  Json j;
  j["semantics"] = std::string(to_string(v.semantics));
  j["satisfied"] = v.satisfied;
  j["constants"] = v.constants.names();
  Json vals = Json::array();
  for (const auto& r : v.valuations) {
    Json e;
    e["valuation"] = valuation_json(r.valuation, v.constants);
    e["satisfied"] = r.satisfied;
    if (g) e["iterations"] = r.iterations;
    vals.push_back(std::move(e));
  }
  j["valuations"] = std::move(vals);
  if (g) j["iterations"] = v.total_iterations();
  Json ws = Json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness_json(w, v.constants, g));
  j["witnesses"] = std::move(ws);
  return j;
}

void witness_text(std::ostream& os, const Witness& w, const Constants& constants, const AssertionGraph* g) {
  os << "  " << to_string(w.valuation, constants) << ": ";
  if (w.edge) {
    os << "edge " << *w.edge;
    if (g) os << " (" << g->describe_edge(*g->find_edge(*w.edge)) << ")";
  }
  if (w.time) os << "time " << *w.time;
  os << ", node " << w.node << ": ";
  if (w.kind == WitnessKind::Consequent) {
    os << "required " << to_char(w.required) << ", got " << to_char(w.actual);
  } else {
    os << "antecedent failure, value " << to_char(w.actual);
  }
  os << '\n';
}

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string valuation_tag(const Valuation& phi, const Constants& constants) {
  if (constants.empty()) return "trajectory";
  std::string tag = "trajectory_";
  for (std::size_t i = 0; i < constants.size(); ++i) tag += phi[i] ? '1' : '0';
  return tag;
}

void write_file(Session& s, const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    s.err() << path.string() << ": error: cannot write file\n";
    throw Reported{};
  }
}

struct GsteArgs {
  std::string netlist;
  std::string agraph;
  std::string semantics = "simple";
  std::string dump_dir;
  bool fail_fast = false;
  std::size_t max_consts = 20;
  unsigned jobs = 1;
  std::string format = "text";
};

int cmd_check_gste(Session& s, const GsteArgs& a) {
  const Netlist net = s.netlist(a.netlist);
  const AssertionGraph g = s.agraph(a.agraph, &net);
  const Semantics sem = *parse_semantics(a.semantics);

  GsteOptions opts;
  opts.fail_fast = a.fail_fast;
  opts.max_consts = a.max_consts;
  opts.jobs = a.jobs;
  if (!a.dump_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(a.dump_dir, ec);
    if (ec) {
      s.err() << a.dump_dir << ": error: cannot create directory\n";
      throw Reported{};
    }
    opts.on_trajectory = [&](const Valuation& phi, const SequenceGraph& traj) {
      const std::string tag = valuation_tag(phi, g.constants);
      const std::filesystem::path dir(a.dump_dir);
      write_file(s, dir / (tag + ".json"), sequence_graph_json(g, net, traj).dump(2) + "\n");
      write_file(s, dir / (tag + ".dot"), sequence_graph_dot(g, net, traj, tag));
    };
  }

  Verdict v;
  try {
    v = check_gste(net, g, sem, opts);
  } catch (const LimitExceeded& e) {
    s.err() << a.agraph << ": error: " << e.what() << '\n';
    return kExitError;
  }

  if (a.format == "json") {
    Json j;
    j["command"] = "check-gste";
    j["netlist"] = a.netlist;
    j["agraph"] = a.agraph;
    j.update(verdict_json(v, &g));
    s.out() << j.dump(2) << '\n';
  } else {
    s.out() << (v.satisfied ? "satisfied" : "refuted") << " (" << to_string(sem) << "), "
            << plural(v.valuations.size(), "valuation") << ", " << plural(v.total_iterations(), "iteration") << '\n';
    for (const auto& w : v.witnesses) witness_text(s.out(), w, v.constants, &g);
  }
  return v.satisfied ? kExitSatisfied : kExitRefuted;
}

struct SteArgs {
  std::string netlist;
  std::string assertions;
  std::string semantics = "simple";
  bool fail_fast = false;
  std::string format = "text";
};

int cmd_check_ste(Session& s, const SteArgs& a) {
  const Netlist net = s.netlist(a.netlist);
  const SteFile file = s.ste_file(a.assertions, net);
  const Semantics sem = *parse_semantics(a.semantics);

  bool all = true;
  Json list = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < file.assertions.size(); ++k) {
    const SteAssertion& as = file.assertions[k];
    const Verdict v = check_ste(net, as, file.constants, sem, a.fail_fast);
    all = all && v.satisfied;
    Json j;
    j["line"] = file.lines[k];
    j["assertion"] = render(as);
    j["depth"] = as.depth;
    j.update(verdict_json(v, nullptr));
    list.push_back(std::move(j));
    text << a.assertions << ':' << file.lines[k] << ": " << (v.satisfied ? "satisfied" : "refuted") << ": "
         << render(as) << '\n';
    for (const auto& w : v.witnesses) witness_text(text, w, v.constants, nullptr);
  }

  if (a.format == "json") {
    Json j;
    j["command"] = "check-ste";
    j["netlist"] = a.netlist;
    j["assertions_file"] = a.assertions;
    j["semantics"] = std::string(to_string(sem));
    j["satisfied"] = all;
    j["constants"] = file.constants.names();
    j["assertions"] = std::move(list);
    s.out() << j.dump(2) << '\n';
  } else {
    s.out() << (all ? "satisfied" : "refuted") << " (" << to_string(sem) << "), "
            << plural(file.assertions.size(), "assertion") << '\n'
            << text.str();
  }
  return all ? kExitSatisfied : kExitRefuted;
}

struct EnumerateArgs {
  std::string agraph;
  std::size_t bound = 0;
  std::string format = "text";
};

int cmd_enumerate(Session& s, const EnumerateArgs& a) {
  const AssertionGraph g = s.agraph(a.agraph, nullptr);
  const auto listed = enumerate_assertions(g, a.bound);
  if (a.format == "json") {
    Json list = Json::array();
    for (const auto& e : listed) {
      Json j;
      Json path = Json::array();
      for (std::size_t id : e.path.edges) path.push_back(g.edge_ids[id]);
      j["path"] = std::move(path);
      j["depth"] = e.path.depth();
      j["antecedent"] = render(e.assertion.antecedent);
      j["consequent"] = render(e.assertion.consequent);
      list.push_back(std::move(j));
    }
    Json j;
    j["command"] = "enumerate";
    j["agraph"] = a.agraph;
    j["bound"] = a.bound;
    j["assertions"] = std::move(list);
    s.out() << j.dump(2) << '\n';
  } else {
    for (const auto& e : listed) s.out() << render(e.assertion) << '\n';
  }
  return kExitSatisfied;
}

struct OracleArgs {
  std::string netlist;
  std::string second;
  std::size_t bound = 0;
  std::size_t max_slots = oracle::kDefaultMaxSlots;
  std::string semantics = "simple";
  std::string format = "text";
};

int cmd_oracle_forall(Session& s, const OracleArgs& a) {
  const Netlist net = s.netlist(a.netlist);
  const AssertionGraph g = s.agraph(a.second, &net);
  bool ok = false;
  try {
    ok = oracle::forall_semantics_check(net, g, a.bound, a.max_slots);
  } catch (const LimitExceeded& e) {
    s.err() << a.second << ": error: " << e.what() << '\n';
    return kExitError;
  }
  if (a.format == "json") {
    Json j;
    j["command"] = "oracle forall";
    j["bound"] = a.bound;
    j["satisfied"] = ok;
    s.out() << j.dump(2) << '\n';
  } else {
    s.out() << (ok ? "satisfied" : "refuted") << " (all initial paths to depth " << a.bound << ")\n";
  }
  return ok ? kExitSatisfied : kExitRefuted;
}

int cmd_oracle_fixpoints(Session& s, const OracleArgs& a) {
  const Netlist net = s.netlist(a.netlist);
  const AssertionGraph g = s.agraph(a.second, &net);
  Json vals = Json::array();
  std::ostringstream text;
  for (const Valuation& phi : all_valuations(g.constants)) {
    const SequenceGraph sigma = defining_seq_graph(phi, g.ant, net.node_count());
    std::vector<SequenceGraph> fps;
    try {
      fps = oracle::enum_fixpoints(net, g.shape, sigma, a.max_slots);
    } catch (const LimitExceeded& e) {
      s.err() << a.second << ": error: " << e.what() << '\n';
      return kExitError;
    }
    const SequenceGraph gfp = gfp_delta(net, g.shape, sigma).graph;
    Json j;
    j["valuation"] = valuation_json(phi, g.constants);
    Json list = Json::array();
    text << to_string(phi, g.constants) << ": " << plural(fps.size(), "fixpoint") << '\n';
    for (const auto& fp : fps) {
      list.push_back(sequence_graph_json(g, net, fp));
      text << ' ';
      for (std::size_t e = 0; e < fp.edge_count(); ++e) text << ' ' << g.edge_ids[e] << '=' << fp[e].to_string();
      text << (fp == gfp ? "  (greatest)" : "") << '\n';
    }
    j["fixpoints"] = std::move(list);
    j["greatest"] = sequence_graph_json(g, net, gfp);
    vals.push_back(std::move(j));
  }
  if (a.format == "json") {
    Json j;
    j["command"] = "oracle fixpoints";
    j["valuations"] = std::move(vals);
    s.out() << j.dump(2) << '\n';
  } else {
    s.out() << text.str();
  }
  return kExitSatisfied;
}

int cmd_oracle_ste(Session& s, const OracleArgs& a) {
  const Netlist net = s.netlist(a.netlist);
  const SteFile file = s.ste_file(a.second, net);
  const Semantics sem = *parse_semantics(a.semantics);
  const auto valuations = all_valuations(file.constants);
  bool all = true;
  Json list = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < file.assertions.size(); ++k) {
    const SteAssertion& as = file.assertions[k];
    std::vector<Sequence> trajs;
    try {
      trajs = oracle::enum_trajectories(net, as.depth, false, a.max_slots);
    } catch (const LimitExceeded& e) {
      s.err() << a.second << ':' << file.lines[k] << ": error: " << e.what() << '\n';
      return kExitError;
    }
    bool ok = true;
    Json per = Json::array();
    for (const Valuation& phi : valuations) {
      const oracle::SteTruth t = oracle::oracle_check_ste(trajs, as.antecedent, as.consequent, phi);
      ok = ok && t.get(sem);
      Json v;
      v["valuation"] = valuation_json(phi, file.constants);
      v["normal"] = t.normal;
      v["simple"] = t.simple;
      v["cautious"] = t.cautious;
      per.push_back(std::move(v));
    }
    all = all && ok;
    Json j;
    j["line"] = file.lines[k];
    j["assertion"] = render(as);
    j["satisfied"] = ok;
    j["valuations"] = std::move(per);
    list.push_back(std::move(j));
    text << a.second << ':' << file.lines[k] << ": " << (ok ? "satisfied" : "refuted") << ": " << render(as) << '\n';
  }
  if (a.format == "json") {
    Json j;
    j["command"] = "oracle ste";
    j["semantics"] = std::string(to_string(sem));
    j["satisfied"] = all;
    j["assertions"] = std::move(list);
    s.out() << j.dump(2) << '\n';
  } else {
    s.out() << (all ? "satisfied" : "refuted") << " (" << to_string(sem) << ", oracle)\n" << text.str();
  }
  return all ? kExitSatisfied : kExitRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checker for generalized symbolic trajectory evaluation", "gste"};
  app.set_version_flag("--version", GSTE_VERSION);
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});

  GsteArgs gargs;
  auto* gste_cmd = app.add_subcommand("check-gste", "Check a netlist against an assertion graph");
  gste_cmd->add_option("netlist", gargs.netlist, "Netlist file")->required();
  gste_cmd->add_option("agraph", gargs.agraph, "Assertion graph file")->required();
  gste_cmd->add_option("--semantics", gargs.semantics, "simple or cautious")
      ->check(CLI::IsMember({"simple", "cautious"}));
  gste_cmd->add_option("--dump-trajectory", gargs.dump_dir,
                       "Write the defining trajectory graph per valuation as JSON and DOT into this directory");
  gste_cmd->add_flag("--fail-fast", gargs.fail_fast, "Stop at the first refuted valuation");
  gste_cmd->add_option("--max-consts", gargs.max_consts, "Largest number of symbolic constants to enumerate");
  gste_cmd->add_option("--jobs", gargs.jobs, "Valuations checked in parallel")->check(CLI::PositiveNumber);
  gste_cmd->add_option("--format", gargs.format, "text or json")->check(formats);

  SteArgs sargs;
  auto* ste_cmd = app.add_subcommand("check-ste", "Check a netlist against STE assertions");
  ste_cmd->add_option("netlist", sargs.netlist, "Netlist file")->required();
  ste_cmd->add_option("assertions", sargs.assertions, "Assertion file")->required();
  ste_cmd->add_option("--semantics", sargs.semantics, "normal, simple or cautious")
      ->check(CLI::IsMember({"normal", "simple", "cautious"}));
  ste_cmd->add_flag("--fail-fast", sargs.fail_fast, "Stop each assertion at its first refuted valuation");
  ste_cmd->add_option("--format", sargs.format, "text or json")->check(formats);

  EnumerateArgs eargs;
  auto* enum_cmd = app.add_subcommand("enumerate", "List the STE assertions of all initial paths up to a depth");
  enum_cmd->add_option("agraph", eargs.agraph, "Assertion graph file")->required();
  enum_cmd->add_option("--bound", eargs.bound, "Largest path depth")->required();
  enum_cmd->add_option("--format", eargs.format, "text or json")->check(formats);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference checks on small instances");
  oracle_cmd->require_subcommand(1);
  OracleArgs oargs;
  auto common = [&](CLI::App* c, const char* second, const char* what) {
    c->add_option("netlist", oargs.netlist, "Netlist file")->required();
    c->add_option(second, oargs.second, what)->required();
    c->add_option("--max-slots", oargs.max_slots, "Largest number of enumerated value slots");
    c->add_option("--format", oargs.format, "text or json")->check(formats);
  };
  auto* forall_cmd = oracle_cmd->add_subcommand("forall", "Check every path assertion up to a depth by enumeration");
  common(forall_cmd, "agraph", "Assertion graph file");
  forall_cmd->add_option("--bound", oargs.bound, "Largest path depth")->required();
  auto* fix_cmd = oracle_cmd->add_subcommand("fixpoints", "List all fixpoints of the antecedent graph operator");
  common(fix_cmd, "agraph", "Assertion graph file");
  auto* ostecmd = oracle_cmd->add_subcommand("ste", "Check STE assertions by trajectory enumeration");
  common(ostecmd, "assertions", "Assertion file");
  ostecmd->add_option("--semantics", oargs.semantics, "normal, simple or cautious")
      ->check(CLI::IsMember({"normal", "simple", "cautious"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSatisfied : kExitError;
  }

  Session session(out, err);
  try {
    if (*gste_cmd) return cmd_check_gste(session, gargs);
    if (*ste_cmd) return cmd_check_ste(session, sargs);
    if (*enum_cmd) return cmd_enumerate(session, eargs);
    if (*forall_cmd) return cmd_oracle_forall(session, oargs);
    if (*fix_cmd) return cmd_oracle_fixpoints(session, oargs);
    if (*ostecmd) return cmd_oracle_ste(session, oargs);
  } catch (const Reported&) {
    return kExitError;
  }
  return kExitError;
}

}  // namespace gste
