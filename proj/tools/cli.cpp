#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dsr/canonical.hpp"
#include "dsr/completability.hpp"
#include "dsr/degseq.hpp"
#include "dsr/enumeration.hpp"
#include "dsr/error.hpp"
#include "dsr/generator.hpp"
#include "dsr/graph.hpp"
#include "dsr/rules.hpp"

namespace dsr::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Json, Csv, Graph6 };

struct Config {
  std::string input;
  bool oracle = false;
  long budget = 100000;
  std::optional<std::uint64_t> seed;
  bool verify = false;
  bool baseline = false;
  bool count_only = false;
  bool deck = false;
  bool deterministic = false;
  int jobs = 1;
  std::optional<Format> format;
};

int default_jobs() {
  if (const char* env = std::getenv("DSR_JOBS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// The input items: lines of a file ("-" is stdin) or the argument itself.
std::vector<std::string> input_items(const std::string& input) {
  std::vector<std::string> items;
  auto read = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      items.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
    }
  };
  if (input == "-") {
    read(std::cin);
  } else if (std::filesystem::is_regular_file(input)) {
    std::ifstream f(input);
    read(f);
  } else {
    items.push_back(input);
  }
  return items;
}

ordered_json roles_json(const RuleReport& r) {
  ordered_json roles = ordered_json::object();
  if (r.partition_used)
    for (const auto& [name, degs] : *r.partition_used) roles[name] = degs;
  return roles;
}

ordered_json verdict_json(const DegreeSequence& s, const ForcingVerdict& v) {
  ordered_json j;
  j["sequence"] = s.to_string();
  j["verdict"] = to_string(v.status);
  j["rule"] = v.proved_forcing() ? ordered_json(v.rule) : ordered_json(nullptr);
  if (v.witness) j["witness"] = write_graph6(*v.witness);
  return j;
}

std::string csv_field(const ordered_json& j) {
  if (j.is_null()) return "";
  if (!j.is_string()) return j.dump();
  const auto text = j.get<std::string>();
  return text.find(',') == std::string::npos ? text : '"' + text + '"';
}

int classify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Format fmt = cfg.format.value_or(Format::Json);
  if (fmt == Format::Csv) out << "sequence,verdict,rule,oracle_checked\n";
  int status = kOk;
  for (const auto& item : input_items(cfg.input)) {
    const auto s = DegreeSequence::parse(item);
    const RuleReport report = apply_catalog(s);
    ForcingVerdict v = report.verdict;
    if (cfg.oracle) {
      const ForcingVerdict truth = is_forcing_oracle(s);
      if (v.proved_forcing() && !truth.proved_forcing()) {
        err << "soundness violation: " << s.to_string() << " proved forcing by " << v.rule
            << " but the oracle found a witness\n";
        status = kContradiction;
      }
      if (!v.proved_forcing()) v = truth;
    } else if (v.is_unknown() && cfg.seed) {
      v = switching_walk(s, cfg.budget, *cfg.seed);
    }
    ordered_json j = verdict_json(s, v);
    if (report.fired_rule && v.rule == *report.fired_rule) {
      j["via_complement"] = report.via_complement;
      j["partition"] = roles_json(report);
    }
    j["oracle_checked"] = cfg.oracle;
    if (fmt == Format::Csv)
      out << csv_field(j["sequence"]) << ',' << csv_field(j["verdict"]) << ',' << csv_field(j["rule"]) << ','
          << (cfg.oracle ? "true" : "false") << '\n';
    else
      out << j.dump() << '\n';
  }
  return status;
}

void emit_graphs(const std::vector<std::string>& g6, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    out << ordered_json(g6).dump() << '\n';
  } else if (fmt == Format::Csv) {
    out << "index,graph6\n";
    for (std::size_t i = 0; i < g6.size(); ++i) out << i << ',' << g6[i] << '\n';
  } else {
    for (const auto& line : g6) out << line << '\n';
  }
}

int enumerate(const Config& cfg, std::ostream& out) {
  const auto s = DegreeSequence::parse(cfg.input);
  std::vector<std::string> g6;
  enumerate_realizations(s, [&](const Graph& g) {
    g6.push_back(write_graph6(g));
    return true;
  });
  if (cfg.deterministic) std::sort(g6.begin(), g6.end());
  if (cfg.count_only)
    out << g6.size() << '\n';
  else
    emit_graphs(g6, cfg.format.value_or(Format::Graph6), out);
  return kOk;
}

int stats(const Config& cfg, std::ostream& out) {
  // "N" or "LO..HI".
  int lo = 0, hi = 0;
  const auto dots = cfg.input.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(cfg.input, &used);
      if (used != cfg.input.size()) throw std::invalid_argument("trailing");
    } else {
      lo = std::stoi(cfg.input.substr(0, dots));
      hi = std::stoi(cfg.input.substr(dots + 2), &used);
      if (dots + 2 + used != cfg.input.size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedToken, "order '" + cfg.input + "'");
  }
  if (lo < 1 || hi < lo || hi > 12) throw Error(ErrorCode::DegreeOutOfRange, "order must be in 1..12");
  const Format fmt = cfg.format.value_or(Format::Csv);
  if (fmt == Format::Csv)
    out << "n,sequences,forcing_sequences,graphs,ds_reconstructible,forced_graphs,weakly_ds_reconstructible,"
           "good_sequences,good_graphs\n";
  for (int n = lo; n <= hi; ++n) {
    const CensusRow r = census(n, cfg.jobs);
    if (fmt == Format::Csv) {
      out << r.n << ',' << r.num_sequences << ',' << r.num_forcing_sequences << ',' << r.num_graphs << ','
          << r.num_ds_reconstructible << ',' << r.num_forced_graphs << ',' << r.num_weakly << ','
          << r.num_good_sequences << ',' << r.num_good_graphs << '\n';
    } else {
      ordered_json j{{"n", r.n},
                     {"sequences", r.num_sequences},
                     {"forcing_sequences", r.num_forcing_sequences},
                     {"graphs", r.num_graphs},
                     {"ds_reconstructible", r.num_ds_reconstructible},
                     {"forced_graphs", r.num_forced_graphs},
                     {"weakly_ds_reconstructible", r.num_weakly},
                     {"good_sequences", r.num_good_sequences},
                     {"good_graphs", r.num_good_graphs}};
      out << j.dump() << '\n';
    }
  }
  return kOk;
}

ordered_json completion_json(const CompletionOutcome& oc) {
  ordered_json groups = ordered_json::array();
  for (const auto& g : oc.groups)
    groups.push_back({{"card_degree", g.card_degree}, {"size", g.size}, {"neighbours", g.neighbours}});
  ordered_json completions = ordered_json::array();
  for (const auto& c : oc.completions) completions.push_back(write_graph6(c.result));
  ordered_json j;
  j["status"] = to_string(oc.status);
  j["deleted_degree"] = oc.deleted_degree < 0 ? ordered_json(nullptr) : ordered_json(oc.deleted_degree);
  j["neighbour_degree_groups"] = groups;
  j["completions"] = completions;
  return j;
}

/// `complete CARD SEQ` completes one card; `complete --deck G` reports
/// every card of G against G's own degree sequence.
int complete(const Config& cfg, const std::string& context, std::ostream& out) {
  const Graph g = read_graph6(cfg.input);
  if (cfg.deck) {
    const DegreeSequence pi = g.degree_sequence();
    for (int v = 0; v < g.n(); ++v) {
      ordered_json j{{"vertex", v}};
      j.update(completion_json(complete_card({delete_vertex(g, v), pi})));
      out << j.dump() << '\n';
    }
    return kOk;
  }
  if (context.empty()) throw Error(ErrorCode::MalformedToken, "complete needs a context sequence or --deck");
  ordered_json j{{"vertex", nullptr}};
  j.update(completion_json(complete_card({g, DegreeSequence::parse(context)})));
  out << j.dump() << '\n';
  return kOk;
}

int generate(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto s = DegreeSequence::parse(cfg.input);
  GenerateOptions opt;
  opt.verify = cfg.verify;
  opt.baseline = cfg.baseline;
  opt.jobs = cfg.jobs;
  opt.deterministic = cfg.deterministic;
  std::vector<std::string> g6;
  const GenerateStats st = generate_accelerated(s, [&](const Graph& g) { g6.push_back(write_graph6(g)); }, opt);

  ordered_json summary = verdict_json(s, st.verdict);
  ordered_json templates = ordered_json::array();
  for (const auto& t : st.templates)
    templates.push_back({{"sequence", t.sequence.to_string()},
                         {"realizations", t.realizations},
                         {"emitted", t.emitted},
                         {"rejected", t.rejected}});
  summary["templates"] = templates;
  summary["emitted"] = st.emitted;
  if (cfg.verify) summary["collisions"] = st.collisions;
  if (cfg.baseline) summary["baseline"] = st.baseline;

  const Format fmt = cfg.format.value_or(Format::Graph6);
  if (cfg.count_only) {
    out << summary.dump() << '\n';
  } else if (fmt == Format::Json) {
    summary["graphs"] = g6;
    out << summary.dump() << '\n';
  } else {
    emit_graphs(g6, fmt, out);
    err << summary.dump() << '\n';
  }
  if (st.collisions > 0) {
    err << "soundness violation: " << st.collisions << " certificate collisions\n";
    return kContradiction;
  }
  return kOk;
}

int walk(const Config& cfg, std::ostream& out) {
  const auto s = DegreeSequence::parse(cfg.input);
  if (!is_graphic(s)) throw Error(ErrorCode::NotGraphic, s.to_string() + " is not graphic");
  ordered_json j = verdict_json(s, switching_walk(s, cfg.budget, *cfg.seed));
  j["budget"] = cfg.budget;
  j["seed"] = *cfg.seed;
  out << j.dump() << '\n';
  return kOk;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotGraphic: return kNotGraphic;
    case ErrorCode::CompletionContradiction: return kContradiction;
    case ErrorCode::NotForcing: return kNotForcing;
    default: return kMalformed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-sequence reconstruction toolkit", "dsr"};
  app.require_subcommand(1);
  Config cfg;
  cfg.jobs = default_jobs();
  std::string context;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"graph6", Format::Graph6}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: json, csv or graph6")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default $DSR_JOBS or 1; 0 = all cores)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Run the rule catalogue on a sequence (or a file of them)");
  classify_cmd->add_option("input", cfg.input, "Sequence, file path, or - for stdin")->required();
  classify_cmd->add_flag("--oracle", cfg.oracle, "Confirm with exhaustive enumeration");
  classify_cmd->add_option("--budget", cfg.budget, "Switching-walk steps when the catalogue is silent");
  classify_cmd->add_option("--seed", cfg.seed, "Run a switching walk with this seed when the catalogue is silent");
  add_format(classify_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "All realizations up to isomorphism");
  enumerate_cmd->add_option("sequence", cfg.input)->required();
  enumerate_cmd->add_flag("--count", cfg.count_only, "Print only the number of graphs");
  enumerate_cmd->add_flag("--deterministic", cfg.deterministic, "Sort the output");
  add_format(enumerate_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "Census row(s) for order N or LO..HI");
  stats_cmd->add_option("order", cfg.input)->required();
  add_format(stats_cmd);
  add_jobs(stats_cmd);

  auto* complete_cmd = app.add_subcommand("complete", "Degree-table completion of a graph6 card");
  complete_cmd->add_option("card", cfg.input, "graph6 card (or whole graph with --deck)")->required();
  complete_cmd->add_option("context", context, "Degree sequence of the parent graph");
  complete_cmd->add_flag("--deck", cfg.deck, "Treat the input as a graph and complete each of its cards");

  auto* generate_cmd = app.add_subcommand("generate", "Realizations of a forcing sequence from its templates");
  generate_cmd->add_option("sequence", cfg.input)->required();
  generate_cmd->add_flag("--verify", cfg.verify, "Cross-check the output by certificates");
  generate_cmd->add_flag("--baseline", cfg.baseline, "Also report the naive pre-dedup completion count");
  generate_cmd->add_flag("--count", cfg.count_only, "Print only the summary");
  generate_cmd->add_flag("--deterministic", cfg.deterministic, "Emit in certificate order");
  add_format(generate_cmd);
  add_jobs(generate_cmd);

  auto* walk_cmd = app.add_subcommand("walk", "Switching-walk search for a non-reconstructible realization");
  walk_cmd->add_option("sequence", cfg.input)->required();
  walk_cmd->add_option("--seed", cfg.seed)->required();
  walk_cmd->add_option("--budget", cfg.budget, "Maximum switches");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kMalformed;
  }

  try {
    if (*classify_cmd) return classify(cfg, out, err);
    if (*enumerate_cmd) return enumerate(cfg, out);
    if (*stats_cmd) return stats(cfg, out);
    if (*complete_cmd) return complete(cfg, context, out);
    if (*generate_cmd) return generate(cfg, out, err);
    if (*walk_cmd) return walk(cfg, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kMalformed;
}

}  // namespace dsr::cli
