#include "prefdist/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "prefdist/bba_json.hpp"
#include "prefdist/belief.hpp"
#include "prefdist/bfm.hpp"
#include "prefdist/enumeration.hpp"
#include "prefdist/error.hpp"
#include "prefdist/model.hpp"
#include "prefdist/psm.hpp"

namespace prefdist::cli {

namespace {

using json = nlohmann::ordered_json;

/// A failure attributable to one command-line field.
struct UsageError {
  std::string field;
  std::string message;
};

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> labels;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) {
    const auto first = current.find_first_not_of(" \t");
    const auto last = current.find_last_not_of(" \t");
    labels.push_back(first == std::string::npos ? "" : current.substr(first, last - first + 1));
  }
  if (!text.empty() && text.back() == ',') labels.emplace_back();
  return labels;
}

ObjectUniverse make_universe(const std::string& objects) {
  try {
    return ObjectUniverse(split_labels(objects));
  } catch (const Error& e) {
    throw UsageError{"--objects", e.message()};
  }
}

WeakOrder parse_field(const std::string& field, const std::string& text, const ObjectUniverse& universe) {
  try {
    return parse_preference(text, universe);
  } catch (const Error& e) {
    throw UsageError{field, std::string(to_string(e.kind())) + ": " + e.message()};
  }
}

/// --cap wins over PREFDIST_CAP, which wins over the built-in default.
std::size_t resolve_cap(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PREFDIST_CAP")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw UsageError{"PREFDIST_CAP", std::string("not a non-negative integer: '") + env + "'"};
    }
    return static_cast<std::size_t>(value);
  }
  return kDefaultEnumerationCap;
}

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

/// Renders a flat report object as aligned `key  value` lines; nested
/// arrays (the grid) go one row per line.
std::string as_table(const json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    out << std::left << std::setw(16) << key;
    if (value.is_number_float()) {
      out << format_number(value.get<double>()) << '\n';
    } else if (value.is_string()) {
      out << value.get<std::string>() << '\n';
    } else if (value.is_array() && !value.empty() && value.front().is_array()) {
      out << '\n';
      for (const auto& row : value) {
        out << "  ";
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << format_number(row[k].get<double>());
        out << '\n';
      }
    } else if (value.is_array()) {
      std::vector<std::string> parts;
      for (const auto& item : value) parts.push_back(item.is_string() ? item.get<std::string>() : item.dump());
      out << join(parts, " ") << '\n';
    } else {
      out << value.dump() << '\n';
    }
  }
  return out.str();
}

std::string emit(const json& report, const std::string& format) {
  return format == "table" ? as_table(report) : report.dump(2) + "\n";
}

void put_distance(json& report, const DistanceReport& d) {
  report["raw"] = d.raw;
  report["max"] = d.max;
  report["normalized"] = d.normalized;
}

struct DistOptions {
  std::string method = "direct";
  std::string objects;
  std::string pref1;
  std::string pref2;
  std::string convention = "eq1";
  std::string attitude = "all";
  double alpha = 0.5;
  std::optional<std::size_t> cap;
  std::string format = "json";
};

std::string run_dist(const DistOptions& opt, bool attitude_given, bool alpha_given) {
  if (opt.method != "bfm" && (attitude_given || alpha_given)) {
    throw UsageError{attitude_given ? "--attitude" : "--alpha", "only applies to --method bfm"};
  }
  if (!(opt.alpha >= 0.0 && opt.alpha <= 1.0)) {
    throw UsageError{"--alpha", "must lie in [0, 1], got " + format_number(opt.alpha)};
  }
  const auto universe = make_universe(opt.objects);
  const auto p1 = parse_field("--pref1", opt.pref1, universe);
  const auto p2 = parse_field("--pref2", opt.pref2, universe);
  if (universe.size() < 2) throw UsageError{"--objects", "distances need at least two objects"};

  json report;
  report["method"] = opt.method;
  report["objects"] = universe.labels();
  report["pref1"] = render(p1, universe);
  report["pref2"] = render(p2, universe);

  if (opt.method == "bfm") {
    const auto conv = opt.convention == "eq2" ? PsmConvention::Unit : PsmConvention::Signed;
    const std::map<std::string, Attitude> attitudes{
        {"all", Attitude::average()},         {"optim", Attitude::optimistic()},
        {"pessim", Attitude::pessimistic()},  {"aver", Attitude::average()},
        {"hurwicz", Attitude::hurwicz(opt.alpha)},
    };
    auto attitude = attitudes.at(opt.attitude);
    if (opt.attitude == "all") attitude = Attitude::hurwicz(opt.alpha);
    const auto bfm = bfm_distance(p1, p2, attitude, conv, resolve_cap(opt.cap));
    const double max = max_psm_distance(universe.size(), conv);
    // "all" headlines the average attitude.
    const double headline = opt.attitude == "all" ? bfm.average : bfm.selected();
    report["psm_convention"] = opt.convention;
    report["attitude"] = opt.attitude;
    report["raw"] = headline * max;
    report["max"] = max;
    report["normalized"] = headline;
    report["optim"] = bfm.optimistic;
    report["pessim"] = bfm.pessimistic;
    report["aver"] = bfm.average;
    report["hurwicz"] = bfm.hurwicz;
    report["alpha"] = opt.alpha;
    report["n_ctpo"] = {bfm.ctpos1.size(), bfm.ctpos2.size()};
    report["grid"] = json(matrix_to_json(bfm.grid));
  } else if (opt.method == "direct") {
    put_distance(report, direct_distance(p1, p2));
  } else {
    const auto metric = opt.method == "indirect-j" ? BbaMetric::Jousselme : BbaMetric::BeliefInterval;
    put_distance(report, indirect_distance(p1, p2, metric));
  }
  return emit(report, opt.format);
}

BbaMatrix load_bba(const std::string& field, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{field, "cannot open '" + path + "'"};
  try {
    return bba_matrix_from_json(nlohmann::json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError{field, "'" + path + "' is not valid JSON: " + e.what()};
  } catch (const Error& e) {
    throw UsageError{field, "'" + path + "': " + std::string(to_string(e.kind())) + ": " + e.message()};
  }
}

std::string run_dist_general(const std::string& path1, const std::string& path2, const std::string& format) {
  const auto b1 = load_bba("--bba1", path1);
  const auto b2 = load_bba("--bba2", path2);
  if (b1.size() != b2.size()) {
    throw UsageError{"--bba2", "DimensionMismatch: n = " + std::to_string(b2.size()) + " but --bba1 has n = " +
                                   std::to_string(b1.size())};
  }
  if (b1.size() < 2) throw UsageError{"--bba1", "DegenerateUniverse: distances need at least two objects"};
  json report;
  report["method"] = "direct";
  report["bba1"] = path1;
  report["bba2"] = path2;
  report["n"] = b1.size();
  put_distance(report, direct_distance_general(b1, b2));
  return emit(report, format);
}

std::string run_enumerate(std::optional<std::size_t> n, const std::string& objects, std::optional<std::size_t> cap) {
  std::optional<ObjectUniverse> universe;
  if (!objects.empty()) universe = make_universe(objects);
  if (!n && !universe) throw UsageError{"--n", "give --n or --objects"};
  if (n && universe && *n != universe->size()) {
    throw UsageError{"--n", "disagrees with the " + std::to_string(universe->size()) + " labels of --objects"};
  }
  const std::size_t count = n ? *n : universe->size();
  if (count == 0) throw UsageError{"--n", "must be at least 1"};
  if (!universe) universe = ObjectUniverse::numbered(count);

  std::ostringstream out;
  std::size_t emitted = 0;
  for (const auto& order : enumerate_weak_orders(count, resolve_cap(cap))) {
    out << render(order, *universe) << '\n';
    ++emitted;
  }
  out << "count: " << emitted << '\n';
  return out.str();
}

std::string run_compatible(const std::string& objects, const std::string& pref, std::optional<std::size_t> cap) {
  const auto universe = make_universe(objects);
  const auto ppo = parse_field("--pref", pref, universe);
  const auto set = compatible_tpos(ppo, resolve_cap(cap));
  std::ostringstream out;
  for (const auto& order : set.ctpos) out << render(order, universe) << '\n';
  out << "count: " << set.count() << '\n';
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances between total and partial preference orderings", "prefdist"};
  app.require_subcommand(1);

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two preference expressions");
  dist_cmd->add_option("--method", dist.method, "bfm | direct | indirect-j | indirect-bi")
      ->check(CLI::IsMember({"bfm", "direct", "indirect-j", "indirect-bi"}))
      ->capture_default_str();
  dist_cmd->add_option("--objects", dist.objects, "Comma-separated object labels")->required();
  dist_cmd->add_option("--pref1", dist.pref1, "First preference, e.g. \"C > (A = B)\"")->required();
  dist_cmd->add_option("--pref2", dist.pref2, "Second preference")->required();
  dist_cmd->add_option("--psm-convention", dist.convention, "eq1 (+1/-1/0) | eq2 (1/0/0.5), bfm only")
      ->check(CLI::IsMember({"eq1", "eq2"}))
      ->capture_default_str();
  auto* attitude_opt = dist_cmd->add_option("--attitude", dist.attitude, "all | optim | pessim | aver | hurwicz")
                           ->check(CLI::IsMember({"all", "optim", "pessim", "aver", "hurwicz"}));
  auto* alpha_opt = dist_cmd->add_option("--alpha", dist.alpha, "Hurwicz weight on the optimistic term");
  dist_cmd->add_option("--cap", dist.cap, "Largest universe the brute-force method may enumerate");
  dist_cmd->add_option("--format", dist.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string bba1, bba2, general_format = "json";
  auto* general_cmd = app.add_subcommand("dist-general", "Direct distance between two BBA-matrix files");
  general_cmd->add_option("--bba1,bba1", bba1, "First BBA JSON file")->required();
  general_cmd->add_option("--bba2,bba2", bba2, "Second BBA JSON file")->required();
  general_cmd->add_option("--format", general_format, "json | table")->check(CLI::IsMember({"json", "table"}));

  std::optional<std::size_t> enum_n, enum_cap;
  std::string enum_objects;
  auto* enum_cmd = app.add_subcommand("enumerate", "List every weak order of n objects");
  enum_cmd->add_option("--n", enum_n, "Number of objects");
  enum_cmd->add_option("--objects", enum_objects, "Comma-separated labels (default X1..Xn)");
  enum_cmd->add_option("--cap", enum_cap, "Largest n allowed");

  std::string compat_objects, compat_pref;
  std::optional<std::size_t> compat_cap;
  auto* compat_cmd = app.add_subcommand("compatible", "List the total orders compatible with a preference");
  compat_cmd->add_option("--objects", compat_objects, "Comma-separated object labels")->required();
  compat_cmd->add_option("--pref", compat_pref, "Preference expression")->required();
  compat_cmd->add_option("--cap", compat_cap, "Largest universe allowed");

  std::vector<std::string> argv_storage{"prefdist"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    if (dist_cmd->parsed()) {
      text = run_dist(dist, attitude_opt->count() > 0, alpha_opt->count() > 0);
    } else if (general_cmd->parsed()) {
      text = run_dist_general(bba1, bba2, general_format);
    } else if (enum_cmd->parsed()) {
      text = run_enumerate(enum_n, enum_objects, enum_cap);
    } else {
      text = run_compatible(compat_objects, compat_pref, compat_cap);
    }
    out << text << std::flush;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.field << ": " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) {
      err << "error: --cap: " << e.message() << '\n';
      return kExitCapExceeded;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace prefdist::cli
