#include "nervekit/cli.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <ostream>

#include "nervekit/census.h"
#include "nervekit/codec.h"
#include "nervekit/collapse.h"
#include "nervekit/complex.h"
#include "nervekit/errors.h"
#include "nervekit/formats.h"
#include "nervekit/geometry.h"
#include "nervekit/interval.h"
#include "nervekit/replay.h"

namespace nervekit {
namespace {

struct Options {
  std::string input, second, output, cert_path, golden, format = "csv";
  std::vector<std::string> reps;
  int dim = -1, d = -1, n = -1, max_n = -1, v = -1, w = -1, jobs = 1;
  bool relabel = false, all = false, force = false;
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

int run_nerve(const Options& o, std::ostream& out) {
  const Representation rep = parse_representation(read_file(o.input));
  const int d = o.dim < 0 ? rep.dim : o.dim;
  if (d < rep.dim) {
    throw InputError("--dim " + std::to_string(d) + " is below the ambient dimension " +
                     std::to_string(rep.dim));
  }
  emit(out, o.output, format_complex(helly_completion(nerve(rep, d), d)));
  return kExitOk;
}

int run_collapse_check(const Options& o, std::ostream& out) {
  if (o.d < 0) throw InputError("--d must be non-negative");
  const SimplicialComplex k = parse_complex(read_file(o.input));
  const auto cert = is_d_collapsible(k, o.d);
  if (!cert) {
    out << "no " << o.d << "-collapse sequence\n";
    return kExitFalse;
  }
  out << o.d << "-collapsible: " << cert->steps.size() << " steps\n";
  if (!o.cert_path.empty()) emit(out, o.cert_path, format_certificate(*cert));
  return kExitOk;
}

int run_collapse_replay(const Options& o, std::ostream& out) {
  const SimplicialComplex k = parse_complex(read_file(o.input));
  const CollapseCertificate cert = parse_certificate(read_file(o.second));
  const ReplayResult r = replay(k, cert, o.d);
  if (!r.ok) {
    out << "rejected at step " << r.failed_step + 1 << ": " << r.message << "\n";
    return kExitFalse;
  }
  out << "ok: " << cert.steps.size() << " steps, collapses with d = " << r.min_d << "\n";
  return kExitOk;
}

int run_interval_recognize(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.input));
  const auto rep = is_interval_graph(g);
  if (!rep) {
    out << "not an interval graph\n";
    return kExitFalse;
  }
  emit(out, o.output, format_intervals(*rep));
  return kExitOk;
}

int run_interval_order(const Options& o, std::ostream& out) {
  const IntervalRep rep = parse_intervals(read_file(o.input));
  emit(out, o.output, format_poset(interval_order(rep)));
  return kExitOk;
}

int run_codec_encode(const Options& o, std::ostream& out) {
  const Poset p = parse_poset(read_file(o.input));
  if (!is_interval_order(p)) {
    out << "not an interval order\n";
    return kExitFalse;
  }
  emit(out, o.output, format_graph(encode(p)));
  return kExitOk;
}

int run_codec_decode(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.input));
  CompressedRep rep;
  try {
    rep = decode(g);
  } catch (const NotCodecImage& e) {
    out << "not a codec image: " << e.what() << "\n";
    return kExitFalse;
  }
  emit(out, o.output, format_poset(interval_order(rep.to_intervals())));
  return kExitOk;
}

int run_codec_roundtrip(const Options& o, std::ostream& out) {
  if (o.relabel) {
    const RelabelReport r = relabel_experiment(o.n);
    out << "n,pairs,images,max_fiber\n"
        << r.n << "," << r.pairs << "," << r.images << "," << r.max_fiber << "\n";
    return kExitOk;
  }
  const RoundtripReport r = roundtrip_check(o.n, o.jobs);
  out << to_csv(r) << "\n";
  return r.failures == 0 && r.images == r.orders ? kExitOk : kExitFalse;
}

// Census ------------------------------------------------------------------

std::pair<int, int> census_range(const Options& o, int lowest) {
  if (o.max_n >= 0) return {lowest, o.max_n};
  if (o.n >= 0) return {o.n, o.n};
  throw InputError("give --n or --max-n");
}

CensusLimits census_limits(const Options& o, int top) {
  CensusLimits limits = CensusLimits::from_env();
  return o.force ? limits.raised_to(top) : limits;
}

void merge(CensusReport& into, CensusReport&& part) {
  if (into.columns.empty()) into.columns = part.columns;
  for (auto& row : part.rows) into.rows.push_back(std::move(row));
  for (Check& c : part.checks) {
    c.name = part.title + ": " + c.name;
    into.checks.push_back(std::move(c));
  }
  for (auto& note : part.notes) into.notes.push_back(std::move(note));
}

CensusReport census_counts(const Options& o, const std::string& kind) {
  const auto [lo, hi] = census_range(o, 1);
  const CensusLimits limits = census_limits(o, hi);
  CensusReport r;
  r.title = kind;
  if (kind == "f1") {
    r.columns = {"n", "f1", "f1_endpoints"};
  } else if (kind == "g") {
    r.columns = {"n", "g", "posets"};
  } else {
    r.columns = {"n", "g1", "collapse_disagreements"};
  }
  uint64_t previous = 0;
  bool increasing = true;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    uint64_t value = 0;
    if (kind == "f1") {
      value = count_interval_graphs(n, o.jobs, limits);
      row.push_back(std::to_string(value));
      if (n <= 5) {
        const uint64_t alt = count_interval_graphs_by_endpoints(n, std::max(n, 1));
        row.push_back(std::to_string(alt));
        r.checks.push_back({"f1(" + std::to_string(n) + ") endpoint oracle", alt == value});
      } else {
        row.push_back("");
      }
    } else if (kind == "g") {
      value = count_interval_orders(n, limits);
      row.push_back(std::to_string(value));
      row.push_back(std::to_string(count_posets(n, limits)));
    } else {
      value = count_1_collapsible(n, o.jobs, limits);
      row.push_back(std::to_string(value));
      if (n <= 5) {
        const uint64_t bad = chordal_collapse_disagreements(n);
        row.push_back(std::to_string(bad));
        r.checks.push_back({"g1(" + std::to_string(n) + ") collapse engine agrees", bad == 0});
      } else {
        row.push_back("");
      }
    }
    if (n > lo && value <= previous) increasing = false;
    previous = value;
    r.rows.push_back(std::move(row));
  }
  if (hi > lo) r.checks.push_back({"strictly increasing", increasing});
  return r;
}

CensusReport census_gd(const Options& o) {
  if (o.d < 0) throw InputError("--d is required");
  const auto [lo, hi] = census_range(o, 1);
  const CensusLimits limits = census_limits(o, hi);
  CensusReport r;
  r.title = "gd d=" + std::to_string(o.d);
  r.columns = {"n",           "d",          "families",         "collapsible",
               "nonvoid",     "full",       "full_collapsible", "skeleton_bound_log2",
               "skeleta_distinct"};
  for (int n = lo; n <= hi; ++n) {
    const CollapsibleCount c = count_d_collapsible(n, o.d, limits);
    r.rows.push_back({std::to_string(n), std::to_string(o.d), std::to_string(c.families),
                      std::to_string(c.collapsible), std::to_string(c.collapsible - 1),
                      std::to_string(c.full_complexes), std::to_string(c.full_collapsible),
                      std::to_string(c.skeleton_bound_log2), c.skeleta_distinct ? "1" : "0"});
    const std::string tag = "(" + std::to_string(n) + ")";
    r.checks.push_back({"skeleta distinct" + tag, c.skeleta_distinct});
    const bool bounded =
        c.skeleton_bound_log2 >= 63 || c.collapsible <= (uint64_t{1} << c.skeleton_bound_log2);
    r.checks.push_back({"skeleton bound" + tag, bounded});
    if (o.d >= n) {
      r.checks.push_back({"d >= n collapses everything" + tag, c.collapsible == c.families});
    }
  }
  r.notes = {"families counts every downward-closed family on [n] including the void one; "
             "full counts complexes whose vertex set is exactly [n]"};
  return r;
}

CensusReport census_sandwich(const Options& o) {
  const auto [lo, hi] = census_range(o, 2);
  const CensusLimits limits = census_limits(o, hi);
  CensusReport r;
  r.title = "sandwich";
  for (int n = lo; n <= hi; ++n) merge(r, verify_sandwich(n, o.jobs, limits));
  return r;
}

// Rows are keyed by n ("VxW" for split). Object entries compare the named
// columns; bare numbers compare the first column after the key.
void check_golden(CensusReport& r, const std::string& key, const std::string& path) {
  const auto golden = nlohmann::json::parse(read_file(path), nullptr, false);
  if (golden.is_discarded()) throw InputError("golden file is not valid JSON");
  if (!golden.contains(key)) throw InputError("golden file has no entry '" + key + "'");
  const auto& table = golden[key];
  for (const auto& row : r.rows) {
    const std::string id = key == "split" ? row[0] + "x" + row[1] : row[0];
    if (!table.contains(id)) continue;
    const auto& expected = table[id];
    bool ok = true;
    if (expected.is_object()) {
      for (std::size_t c = 1; c < r.columns.size(); ++c) {
        if (expected.contains(r.columns[c]) &&
            std::to_string(expected[r.columns[c]].get<uint64_t>()) != row[c]) {
          ok = false;
        }
      }
    } else {
      ok = std::to_string(expected.get<uint64_t>()) == row[1];
    }
    r.checks.push_back({"golden " + key + "(" + id + ")", ok});
  }
}

int run_census(const Options& o, const std::string& kind, std::ostream& out) {
  if (o.format != "csv" && o.format != "json") throw InputError("--format is csv or json");
  CensusReport r;
  std::string golden_key = kind;
  if (kind == "f1" || kind == "g" || kind == "g1") {
    r = census_counts(o, kind);
  } else if (kind == "gd") {
    r = census_gd(o);
    golden_key = "gd" + std::to_string(o.d);
  } else if (kind == "sandwich") {
    r = census_sandwich(o);
  } else if (kind == "split") {
    if (o.v < 0 || o.w < 0) throw InputError("--v and --w are required");
    const int d = o.d < 0 ? 2 : o.d;
    r = split_count_check(d, o.v, o.w, census_limits(o, std::max(o.v, o.w)));
  } else {
    const auto [lo, hi] = census_range(o, 1);
    (void)lo;
    r = asymptotic_report(hi, census_limits(o, hi));
  }
  if (!o.golden.empty()) check_golden(r, golden_key, o.golden);
  out << (o.format == "json" ? r.to_json() : r.to_csv());
  return r.passed() ? kExitOk : kExitFalse;
}

int run_construct_split(const Options& o, std::ostream& out) {
  if (o.v < 1) throw InputError("--v must be positive");
  if (o.all) {
    if (o.w < 1) throw InputError("--w must be positive");
    const CensusReport r = split_count_check(2, o.v, o.w, census_limits(o, std::max(o.v, o.w)));
    out << (o.format == "json" ? r.to_json() : r.to_csv());
    return r.passed() ? kExitOk : kExitFalse;
  }
  if (o.reps.empty()) throw InputError("give --all or --reps");
  if (o.w >= 0 && o.w != static_cast<int>(o.reps.size())) {
    throw InputError("--w does not match the number of --reps files");
  }
  std::vector<LineRep> lines;
  for (const std::string& path : o.reps) lines.push_back(parse_line_rep(read_file(path)));
  emit(out, o.output, format_representation(split_representation(o.v, lines)));
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nervekit: nerves, collapses, interval codecs and small-n census"};
  app.name("nervekit");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a .vrep family as a .cplx");
  nerve_cmd->add_option("file", o.input, "representation (.vrep)")->required();
  nerve_cmd->add_option("--dim", o.dim, "Helly dimension (defaults to the ambient one)");
  nerve_cmd->add_option("-o,--output", o.output, "output .cplx");
  bind(nerve_cmd, [&] { return run_nerve(o, out); });

  auto* collapse_cmd = app.add_subcommand("collapse", "d-collapsibility");
  collapse_cmd->require_subcommand(1);
  auto* check_cmd = collapse_cmd->add_subcommand("check", "search for a d-collapse sequence");
  check_cmd->add_option("file", o.input, "complex (.cplx)")->required();
  check_cmd->add_option("--d", o.d, "collapse dimension bound")->required();
  check_cmd->add_option("--cert", o.cert_path, "write the sequence (.collapse)");
  bind(check_cmd, [&] { return run_collapse_check(o, out); });
  auto* replay_cmd = collapse_cmd->add_subcommand("replay", "verify a .collapse certificate");
  replay_cmd->add_option("file", o.input, "complex (.cplx)")->required();
  replay_cmd->add_option("cert", o.second, "certificate (.collapse)")->required();
  replay_cmd->add_option("--d", o.d, "enforce this dimension bound");
  bind(replay_cmd, [&] { return run_collapse_replay(o, out); });

  auto* interval_cmd = app.add_subcommand("interval", "interval graphs and orders");
  interval_cmd->require_subcommand(1);
  auto* recognize_cmd = interval_cmd->add_subcommand("recognize", "interval graph recognition");
  recognize_cmd->add_option("file", o.input, "graph (.edges)")->required();
  recognize_cmd->add_option("-o,--output", o.output, "output .ivl");
  bind(recognize_cmd, [&] { return run_interval_recognize(o, out); });
  auto* order_cmd = interval_cmd->add_subcommand("order", "interval order of a representation");
  order_cmd->add_option("file", o.input, "intervals (.ivl)")->required();
  order_cmd->add_option("-o,--output", o.output, "output .poset");
  bind(order_cmd, [&] { return run_interval_order(o, out); });

  auto* codec_cmd = app.add_subcommand("codec", "interval order to interval graph codec");
  codec_cmd->require_subcommand(1);
  auto* encode_cmd = codec_cmd->add_subcommand("encode", "interval order to graph");
  encode_cmd->add_option("file", o.input, "interval order (.poset)")->required();
  encode_cmd->add_option("-o,--output", o.output, "output .edges");
  bind(encode_cmd, [&] { return run_codec_encode(o, out); });
  auto* decode_cmd = codec_cmd->add_subcommand("decode", "graph back to interval order");
  decode_cmd->add_option("file", o.input, "graph (.edges)")->required();
  decode_cmd->add_option("-o,--output", o.output, "output .poset");
  bind(decode_cmd, [&] { return run_codec_decode(o, out); });
  auto* roundtrip_cmd = codec_cmd->add_subcommand("roundtrip", "exhaustive codec check");
  roundtrip_cmd->add_option("--n", o.n, "graph size (orders have n-1 elements)")->required();
  roundtrip_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  roundtrip_cmd->add_flag("--relabel", o.relabel, "count images under all labelings");
  bind(roundtrip_cmd, [&] { return run_codec_roundtrip(o, out); });

  auto* census_cmd = app.add_subcommand("census", "exact counts at small n");
  census_cmd->require_subcommand(1);
  const std::pair<const char*, const char*> kinds[] = {
      {"f1", "labeled interval graphs"},
      {"g", "labeled interval orders"},
      {"g1", "labeled chordal graphs (1-collapsible flag complexes)"},
      {"gd", "d-collapsible complexes on [n] (--d required)"},
      {"sandwich", "g(n-1) <= f1(n) <= g(n) with codec checks"},
      {"split", "split construction tuples (--v, --w)"},
      {"asymptotics", "exact counts against leading terms"}};
  for (const auto& [kind, about] : kinds) {
    auto* sub = census_cmd->add_subcommand(kind, about);
    sub->add_option("--n", o.n, "single size");
    sub->add_option("--max-n", o.max_n, "tabulate sizes up to this one");
    sub->add_option("--d", o.d, "collapse / representation dimension");
    sub->add_option("--v", o.v, "split construction: |V|");
    sub->add_option("--w", o.w, "split construction: |W|");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--golden", o.golden, "compare against a golden JSON file");
    sub->add_option("--format", o.format, "csv or json");
    sub->add_flag("--force", o.force, "raise the size caps to the requested n");
    const std::string name = kind;
    bind(sub, [&, name] { return run_census(o, name, out); });
  }

  auto* construct_cmd = app.add_subcommand("construct", "explicit constructions");
  construct_cmd->require_subcommand(1);
  auto* split_cmd = construct_cmd->add_subcommand("split", "planar split representations");
  split_cmd->add_option("--v", o.v, "|V|")->required();
  split_cmd->add_option("--w", o.w, "|W|");
  auto* all_flag = split_cmd->add_flag("--all", o.all, "check every tuple of interval inputs");
  split_cmd->add_option("--reps", o.reps, "one .ivl per apex")->excludes(all_flag);
  split_cmd->add_option("-o,--output", o.output, "output .vrep");
  split_cmd->add_option("--format", o.format, "report format with --all: csv or json");
  split_cmd->add_flag("--force", o.force, "raise the size caps");
  bind(split_cmd, [&] { return run_construct_split(o, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }
  if (!action) {
    err << app.help();
    return kExitInput;
  }
  try {
    return action();
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitLimit;
  }
}

}  // namespace nervekit
