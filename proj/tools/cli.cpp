#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chessarm/chessarm.hpp"
#include "config.hpp"

namespace chessarm::cli {
namespace {

struct Options {
  std::string config_path;
  std::string mode;
  std::string trace_path;
  std::string format;  // empty: json for traces, text for reports

  std::string script_path;

  std::vector<std::string> moments;
  std::vector<std::string> spin;
  std::vector<std::string> gripper;
  std::vector<std::string> tip;

  double l0 = 0.0;
  double l1 = 1.0;
  double l2 = 1.0;
  double shoulder_min = -kPi;
  double shoulder_max = kPi;
  double elbow_min = -kPi;
  double elbow_max = kPi;
  std::size_t resolution = 100;
  std::string out_path;
};

void report(std::ostream& err, const Error& e) {
  err << "error: " << e.name() << ": " << e.what() << '\n';
}

Config resolve_config(const Options& opt) {
  Config cfg = opt.config_path.empty() ? Config{} : load_config(opt.config_path);
  if (!opt.mode.empty()) cfg.ik_mode = parse_ik_mode(opt.mode);
  return cfg;
}

nlohmann::json trace_header(const Config& cfg) {
  return {{"tool", "chessarm"}, {"config", config_to_json(cfg)}};
}

std::string render_trace(const MotionTrace& trace, const Config& cfg, const std::string& format) {
  if (format == "csv") return trace_to_csv(trace);
  return trace_to_json_text(trace, trace_header(cfg));
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << contents;
}

void print_step(std::ostream& out, const MotionStep& s) {
  switch (s.op) {
    case StepOp::Rotate:
      out << "  rotate " << to_string(s.joint) << ' ' << format_double(s.delta) << " rad";
      if (s.tag == StepTag::Lift) out << " (lift)";
      if (s.tag == StepTag::Lower) out << " (lower)";
      out << '\n';
      break;
    case StepOp::Grab: out << "  grab\n"; break;
    case StepOp::Release: out << "  release\n"; break;
  }
}

void print_help(std::ostream& out) {
  for (const auto& h : query_help()) out << "  " << h.form << "\n      " << h.description << '\n';
  out << "  help | quit\n";
}

// Builds the engine; failures here are configuration problems.
std::optional<Engine> make_engine(const Config& cfg, std::ostream& err) {
  try {
    return Engine(cfg.board(), cfg.arm(), cfg.ik_mode, cfg.trace_cap);
  } catch (const Error& e) {
    report(err, e);
    return std::nullopt;
  }
}

int finish_trace(const Engine& engine, const Config& cfg, const Options& opt, std::ostream& out,
                 std::ostream& err, bool print_when_no_file) {
  const std::string text = render_trace(engine.trace(), cfg, opt.format);
  if (!opt.trace_path.empty()) {
    try {
      write_file(opt.trace_path, text);
    } catch (const Error& e) {
      report(err, e);
      return kExitCommandError;
    }
  } else if (print_when_no_file) {
    out << text;
  }
  return kExitOk;
}

int cmd_repl(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve_config(opt);
  auto engine = make_engine(cfg, err);
  if (!engine) return kExitConfigError;

  out << "chessarm repl (" << to_string(cfg.ik_mode) << " mode). Type help for commands.\n";
  std::string line;
  while (out << "> " << std::flush, std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    std::string_view word = line;
    while (!word.empty() && (word.front() == ' ' || word.front() == '\t')) word.remove_prefix(1);
    while (!word.empty() && (word.back() == ' ' || word.back() == '\t' || word.back() == '\r')) {
      word.remove_suffix(1);
    }
    if (word == "quit" || word == "exit") break;
    if (word == "help") {
      print_help(out);
      continue;
    }
    try {
      const MotionTrace delta = engine->run(parse_command(line));
      for (const auto& s : delta.steps) print_step(out, s);
    } catch (const Error& e) {
      report(err, e);
    }
  }
  out << '\n';
  return finish_trace(*engine, cfg, opt, out, err, false);
}

int cmd_exec(const Options& opt, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve_config(opt);
  std::ifstream f(opt.script_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open script " << opt.script_path << '\n';
    return kExitCommandError;
  }
  std::stringstream buf;
  buf << f.rdbuf();

  std::vector<ScriptLine> script;
  try {
    script = parse_script(buf.str());
  } catch (const SyntaxError& e) {
    report(err, e);
    return kExitCommandError;
  }

  auto engine = make_engine(cfg, err);
  if (!engine) return kExitConfigError;

  int code = kExitOk;
  for (const auto& line : script) {
    try {
      engine->run(line.command);
    } catch (const Error& e) {
      err << "line " << line.line << ": ";
      report(err, e);
      code = kExitCommandError;
      break;
    }
  }
  const int written = finish_trace(*engine, cfg, opt, out, err, true);
  return code != kExitOk ? code : written;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve_config(opt);
  ReachReport rep;
  try {
    rep = validate_board_reach(cfg.arm(), cfg.board(), cfg.ik_mode);
  } catch (const Error& e) {
    report(err, e);
    return kExitConfigError;
  }

  if (opt.format == "json") {
    out << to_json(rep).dump(2) << '\n';
  } else {
    out << "mode: " << to_string(rep.mode) << '\n'
        << "reachable: " << rep.reachable_count << "/64\n"
        << "home (0, 0): " << (rep.home.ok ? "ok" : rep.home.message) << '\n';
    for (const auto& c : rep.cells) {
      if (c.ok) continue;
      out << "  (" << c.cell.x << ", " << c.cell.y << ") Xf=" << format_double(c.center.x)
          << " Yf=" << format_double(c.center.y) << ": " << error_name(*c.error) << '\n';
    }
  }
  return rep.ok && rep.home.ok ? kExitOk : kExitCommandError;
}

using KeyValues = std::map<std::string, double>;

KeyValues parse_pairs(const std::vector<std::string>& items, const std::vector<std::string>& keys,
                      const char* group) {
  KeyValues kv;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ConfigError,
                  std::string("--") + group + " expects key=value, got \"" + item + "\"");
    }
    const std::string key = item.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw Error(ErrorCode::ConfigError,
                  std::string("--") + group + ": unknown key \"" + key + "\"");
    }
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      kv[key] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError,
                  std::string("--") + group + ": \"" + item + "\" is not a number");
    }
  }
  return kv;
}

double get(const KeyValues& kv, const std::string& key, double fallback = 0.0) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

int cmd_size(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.moments.empty() && opt.spin.empty() && opt.gripper.empty() && opt.tip.empty()) {
    err << "error: size needs at least one of --moments, --spin, --gripper, --tip\n";
    return kExitConfigError;
  }
  KeyValues moments, spin, gripper, tip;
  try {
    moments = parse_pairs(opt.moments, {"l1", "l2", "l3", "w1", "w2", "w3", "w4"}, "moments");
    spin = parse_pairs(opt.spin, {"m_arm", "m", "L", "omega", "t"}, "spin");
    gripper = parse_pairs(opt.gripper, {"F", "L_jaw", "M_part", "a_total"}, "gripper");
    tip = parse_pairs(opt.tip, {"R", "f"}, "tip");
  } catch (const Error& e) {
    report(err, e);
    return kExitConfigError;
  }

  try {
    if (!opt.moments.empty()) {
      const auto m = joint_moments({get(moments, "l1"), get(moments, "l2"), get(moments, "l3"),
                                    get(moments, "w1"), get(moments, "w2"), get(moments, "w3"),
                                    get(moments, "w4")});
      out << "M1 = " << format_double(m.m1) << '\n' << "M2 = " << format_double(m.m2) << '\n';
    }
    if (!opt.spin.empty()) {
      const auto s = spin_up_torque({get(spin, "m_arm"), get(spin, "m"), get(spin, "L"),
                                     get(spin, "omega"), get(spin, "t")});
      out << "tau_arm = " << format_double(s.tau_arm) << '\n'
          << "tau_obj = " << format_double(s.tau_obj) << '\n'
          << "tau_motor = " << format_double(s.tau_motor) << '\n';
    }
    if (!opt.gripper.empty()) {
      const auto g = gripper_torque({get(gripper, "F"), get(gripper, "L_jaw"),
                                     get(gripper, "M_part"), get(gripper, "a_total")});
      out << "tau_gripper = " << format_double(g.tau_gripper) << '\n'
          << "tau_part = " << format_double(g.tau_part) << '\n'
          << "tau_total = " << format_double(g.tau_total) << '\n';
    }
    if (!opt.tip.empty()) {
      out << "V = " << format_double(tip_speed(get(tip, "R"), get(tip, "f"))) << '\n';
    }
  } catch (const Error& e) {
    report(err, e);
    return kExitCommandError;
  }
  return kExitOk;
}

int cmd_workspace(const Options& opt, std::ostream& out, std::ostream& err) {
  std::string csv = "x,y\n";
  try {
    const PlanarArm arm(opt.l0, opt.l1, opt.l2, {opt.shoulder_min, opt.shoulder_max},
                        {opt.elbow_min, opt.elbow_max});
    const WorkspaceCloud cloud = sample_workspace(arm, opt.resolution);
    csv.reserve(cloud.points.size() * 40);
    for (const auto& p : cloud.points) {
      csv += format_double(p.x);
      csv += ',';
      csv += format_double(p.y);
      csv += '\n';
    }
  } catch (const Error& e) {
    report(err, e);
    return kExitConfigError;
  }
  if (opt.out_path.empty()) {
    out << csv;
    return kExitOk;
  }
  try {
    write_file(opt.out_path, csv);
  } catch (const Error& e) {
    report(err, e);
    return kExitCommandError;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Board-arm kinematics, sizing and motion sequencing", "chessarm"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file");
  app.add_option("--mode", opt.mode, "IK mode override")->check(CLI::IsMember({"paper", "standard"}));
  app.add_option("--trace", opt.trace_path, "write the motion trace to this file");
  app.add_option("--format", opt.format, "trace / report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* repl = app.add_subcommand("repl", "interactive command loop");
  auto* exec = app.add_subcommand("exec", "run a command script");
  exec->add_option("script", opt.script_path, "command file")->required();
  auto* validate = app.add_subcommand("validate", "check every board cell is reachable");
  auto* size = app.add_subcommand("size", "torque and speed sizing formulas");
  size->add_option("--moments", opt.moments, "l1= l2= l3= w1= w2= w3= w4=");
  size->add_option("--spin", opt.spin, "m_arm= m= L= omega= t=");
  size->add_option("--gripper", opt.gripper, "F= L_jaw= M_part= a_total=");
  size->add_option("--tip", opt.tip, "R= f=");
  auto* workspace = app.add_subcommand("workspace", "sample the planar workspace as CSV");
  workspace->add_option("--l0", opt.l0, "base column height");
  workspace->add_option("--l1", opt.l1, "first link length");
  workspace->add_option("--l2", opt.l2, "second link length");
  workspace->add_option("--shoulder-min", opt.shoulder_min, "radians");
  workspace->add_option("--shoulder-max", opt.shoulder_max, "radians");
  workspace->add_option("--elbow-min", opt.elbow_min, "radians (absolute)");
  workspace->add_option("--elbow-max", opt.elbow_max, "radians (absolute)");
  workspace->add_option("--resolution", opt.resolution, "samples per joint");
  workspace->add_option("--out", opt.out_path, "CSV output path (default stdout)");

  std::vector<const char*> argv{"chessarm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (*repl) return cmd_repl(opt, in, out, err);
    if (*exec) return cmd_exec(opt, out, err);
    if (*validate) return cmd_validate(opt, out, err);
    if (*size) return cmd_size(opt, out, err);
    if (*workspace) return cmd_workspace(opt, out, err);
  } catch (const Error& e) {
    report(err, e);
    return e.code() == ErrorCode::ConfigError ? kExitConfigError : kExitCommandError;
  }
  return kExitConfigError;
}

}  // namespace chessarm::cli
