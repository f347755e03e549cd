#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "quivernc/cluster.hpp"
#include "quivernc/errors.hpp"
#include "quivernc/json_io.hpp"
#include "quivernc/latt.hpp"
#include "quivernc/ncmap.hpp"
#include "quivernc/stab.hpp"
#include "quivernc/tors.hpp"
#include "quivernc/weyl.hpp"

namespace quivernc::cli {

namespace {

constexpr std::size_t table_rank_cap = 4;

struct Options {
  std::string quiver_source;
  std::string what = "torsion";
  std::string format = "tsv";
  std::string suite = "all";
  std::string from;
  std::string to;
  std::string object;
  std::uint64_t seed = 1;
  int cap = 12;
};

Quiver load_quiver(const std::string& source) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_quiver(ss.str());
  }
  if (source.rfind("vertices", 0) == 0) return parse_quiver(source);
  throw std::invalid_argument("quiver source is neither a readable file nor inline DSL: " + source);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw std::invalid_argument("format " + o.format + " is not available for this command");
}

std::string word_string(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " s" : "s") + std::to_string(w[i]);
  return out;
}

std::string matrix_string(const GroupElement& g) {
  std::string out;
  for (std::size_t r = 0; r < g.dim(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < g.dim(); ++c) out += (c ? " " : "") + std::to_string(g(r, c));
  }
  return out;
}

std::string seq_string(const ExceptionalSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + seq[i].to_string();
  return out + ")";
}

// Objects of the bijection chain.

enum class Kind { clusters, support_tilting, torsion, wide, nc, sortables };

Kind parse_kind(const std::string& s) {
  static const std::map<std::string, Kind> kinds{{"clusters", Kind::clusters}, {"support-tilting", Kind::support_tilting},
                                                 {"torsion", Kind::torsion},   {"wide", Kind::wide},
                                                 {"nc", Kind::nc},             {"sortables", Kind::sortables}};
  const auto it = kinds.find(s);
  if (it == kinds.end()) throw std::invalid_argument("unknown object kind: " + s);
  return it->second;
}

struct Object {
  IndecSet set;
  ClusterTilting cluster;
  GroupElement element;
};

Object from_torsion(const RepCategory& cat, Kind k, const IndecSet& t) {
  Object o;
  switch (k) {
    case Kind::clusters: o.cluster = complete_support_tilting(cat, ext_projectives(cat, t)); break;
    case Kind::support_tilting: o.set = ext_projectives(cat, t); break;
    case Kind::torsion: o.set = t; break;
    case Kind::wide: o.set = a_of(cat, t); break;
    case Kind::nc: o.element = nc_of_torsion(cat, t); break;
    case Kind::sortables: o.element = sortable_of_torsion(cat, t); break;
  }
  return o;
}

IndecSet to_torsion(const RepCategory& cat, Kind k, const Object& o) {
  switch (k) {
    case Kind::clusters: return gen_of(cat, o.cluster);
    case Kind::support_tilting:
      if (!is_support_tilting(cat, o.set)) throw DomainError("not support tilting: " + o.set.to_string());
      return gen(cat, o.set);
    case Kind::torsion:
      if (!is_torsion_class(cat, o.set)) throw DomainError("not a torsion class: " + o.set.to_string());
      return o.set;
    case Kind::wide: {
      const IndecSet t = gen(cat, o.set);
      if (!is_wide(cat, o.set) || a_of(cat, t) != o.set) throw DomainError("not a wide subcategory: " + o.set.to_string());
      return t;
    }
    case Kind::nc:
      for (const auto& t : enumerate_torsion_classes(cat))
        if (nc_of_torsion(cat, t) == o.element) return t;
      throw DomainError("element is not a noncrossing partition");
    case Kind::sortables:
      if (!is_c_sortable(cat.quiver(), o.element, coxeter_element_word(cat.quiver())))
        throw DomainError("element is not cox(Q)-sortable");
      return torsion_of_sortable(cat, o.element);
  }
  throw DomainError("unknown object kind");
}

GroupElement element_from_json(const Quiver& q, const Json& j) {
  if (j.is_array()) return word_element(q, j.get<std::vector<int>>());
  if (j.is_object() && j.contains("word")) return word_element(q, j.at("word").get<std::vector<int>>());
  if (j.is_object() && j.contains("matrix")) {
    std::vector<std::int64_t> data;
    for (const auto& row : j.at("matrix"))
      for (const auto& x : row) data.push_back(x.get<std::int64_t>());
    return GroupElement(q.size(), std::move(data));
  }
  throw ParseError(ParseErrorKind::syntax, "group element must be a word array or an object with word or matrix");
}

Object parse_object(const RepCategory& cat, Kind k, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorKind::syntax, std::string("--object is not valid JSON: ") + e.what());
  }
  Object o;
  if (k == Kind::clusters) o.cluster = cluster_from_json(j);
  else if (k == Kind::nc || k == Kind::sortables) o.element = element_from_json(cat.quiver(), j);
  else o.set = indec_set_from_json(j);
  for (const auto& r : o.set) cat.require_index(r);
  return o;
}

Json object_json(const RepCategory& cat, Kind k, const Object& o) {
  if (k == Kind::clusters) return cluster_to_json(o.cluster);
  if (k == Kind::nc || k == Kind::sortables) return group_element_to_json(cat.quiver(), o.element);
  return indec_set_to_json(o.set);
}

std::string object_text(const RepCategory& cat, Kind k, const Object& o) {
  if (k == Kind::clusters) return o.cluster.to_string();
  if (k == Kind::nc) return describe(cat.quiver(), o.element);
  if (k == Kind::sortables) return word_string(reduced_word(cat.quiver(), o.element));
  return o.set.to_string();
}

// Commands.

int cmd_roots(const Options& o, std::ostream& out) {
  require_format(o, {"tsv", "json"});
  RepCategory cat(load_quiver(o.quiver_source), o.cap);
  const auto order = ar_total_order(cat);
  Json rows = Json::array();
  if (o.format == "tsv") out << "index\troot\tar_position\ttau\n";
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const Root& r = cat.roots()[i];
    const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), r) - order.begin()) + 1;
    const auto t = tau(cat.quiver(), r);
    if (o.format == "tsv") {
      out << i + 1 << '\t' << r.to_string() << '\t' << pos << '\t' << (t ? t->to_string() : "-") << '\n';
    } else {
      rows.push_back(Json{{"root", root_to_json(r)}, {"ar_position", pos}, {"tau", t ? root_to_json(*t) : Json(nullptr)}});
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return exit_pass;
}

int cmd_ar(const Options& o, std::ostream& out) {
  require_format(o, {"tsv", "json", "dot"});
  const ARQuiver ar = ar_quiver(load_quiver(o.quiver_source));
  if (o.format == "dot") {
    out << ar_quiver_dot(ar);
  } else if (o.format == "json") {
    Json v = Json::array();
    for (const auto& r : ar.vertices) v.push_back(root_to_json(r));
    Json e = Json::array();
    for (auto [a, b] : ar.edges) e.push_back({a, b});
    out << Json{{"vertices", v}, {"edges", e}}.dump(2) << '\n';
  } else {
    out << "source\ttarget\n";
    for (auto [a, b] : ar.edges) out << ar.vertices[a].to_string() << '\t' << ar.vertices[b].to_string() << '\n';
  }
  return exit_pass;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_format(o, {"tsv", "json"});
  RepCategory cat(load_quiver(o.quiver_source), o.cap);
  const Quiver& q = cat.quiver();
  const bool tsv = o.format == "tsv";
  Json rows = Json::array();
  std::size_t index = 0;
  auto emit_set = [&](const IndecSet& s) {
    if (tsv) out << ++index << '\t' << s.to_string() << '\n';
    else rows.push_back(indec_set_to_json(s));
  };
  auto emit_element = [&](const GroupElement& w) {
    if (tsv) {
      out << ++index << '\t' << describe(q, w) << '\t' << word_string(reduced_word(q, w)) << '\t'
          << absolute_length(q, w) << '\t' << matrix_string(w) << '\n';
    } else {
      rows.push_back(group_element_to_json(q, w));
    }
  };
  if (o.what == "torsion") {
    for (const auto& t : enumerate_torsion_classes(cat)) emit_set(t);
  } else if (o.what == "support-tilting") {
    for (const auto& c : enumerate_support_tilting(cat)) emit_set(c);
  } else if (o.what == "wide") {
    for (const auto& a : enumerate_wide_subcategories(cat)) emit_set(a);
  } else if (o.what == "clusters") {
    for (const auto& t : cluster_tilting_objects(cat)) {
      if (tsv) out << ++index << '\t' << t.to_string() << '\n';
      else rows.push_back(cluster_to_json(t));
    }
  } else if (o.what == "nc") {
    for (const auto& w : noncrossing_partitions(q).elements) emit_element(w);
  } else if (o.what == "sortables") {
    for (const auto& w : sortable_elements(cat)) emit_element(w);
  } else if (o.what == "exceptional") {
    for (const auto& seq : complete_exceptional_sequences(cat)) {
      if (tsv) {
        out << ++index << '\t' << seq_string(seq) << '\n';
      } else {
        Json s = Json::array();
        for (const auto& r : seq) s.push_back(root_to_json(r));
        rows.push_back(s);
      }
    }
  } else {
    throw std::invalid_argument("unknown --what value: " + o.what);
  }
  if (!tsv) out << rows.dump(2) << '\n';
  return exit_pass;
}

int cmd_map(const Options& o, std::ostream& out) {
  require_format(o, {"tsv", "json"});
  RepCategory cat(load_quiver(o.quiver_source), o.cap);
  const Kind from = parse_kind(o.from);
  const Kind to = parse_kind(o.to);
  if (!o.object.empty()) {
    const Object src = parse_object(cat, from, o.object);
    const Object dst = from_torsion(cat, to, to_torsion(cat, from, src));
    if (o.format == "json") out << object_json(cat, to, dst).dump() << '\n';
    else out << object_text(cat, to, dst) << '\n';
    return exit_pass;
  }
  Json rows = Json::array();
  if (o.format == "tsv") out << o.from << '\t' << o.to << '\n';
  for (const auto& t : enumerate_torsion_classes(cat)) {
    const Object src = from_torsion(cat, from, t);
    const Object dst = from_torsion(cat, to, to_torsion(cat, from, src));
    if (o.format == "tsv") out << object_text(cat, from, src) << '\t' << object_text(cat, to, dst) << '\n';
    else rows.push_back(Json{{"from", object_json(cat, from, src)}, {"to", object_json(cat, to, dst)}});
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return exit_pass;
}

int cmd_table(const Options& o, std::ostream& out) {
  require_format(o, {"tsv", "json"});
  RepCategory cat(load_quiver(o.quiver_source), o.cap);
  const Quiver& q = cat.quiver();
  if (q.size() > table_rank_cap) throw CapExceededError("table limited to rank " + std::to_string(table_rank_cap));
  const auto order = ar_total_order(cat);
  auto positions = [&](const IndecSet& s) {
    std::vector<std::size_t> p;
    for (const auto& r : s) p.push_back(static_cast<std::size_t>(std::find(order.begin(), order.end(), r) - order.begin()) + 1);
    std::sort(p.begin(), p.end());
    return p;
  };
  Json rows = Json::array();
  if (o.format == "tsv") out << "cluster_tilting\tsupport_tilting\ttorsion_class\tar_positions\twide_subcategory\tnc_element\tsortable_word\n";
  for (const auto& t : enumerate_torsion_classes(cat)) {
    const IndecSet c = ext_projectives(cat, t);
    const ClusterTilting ct = complete_support_tilting(cat, c);
    const IndecSet a = a_of(cat, t);
    const GroupElement nc = nc_of_torsion(cat, t);
    const GroupElement w = sortable_of_torsion(cat, t);
    const auto pos = positions(t);
    if (o.format == "tsv") {
      std::string p;
      for (std::size_t i = 0; i < pos.size(); ++i) p += (i ? "," : "") + std::to_string(pos[i]);
      out << ct.to_string() << '\t' << c.to_string() << '\t' << t.to_string() << '\t' << "{" << p << "}" << '\t'
          << a.to_string() << '\t' << describe(q, nc) << '\t' << word_string(reduced_word(q, w)) << '\n';
    } else {
      rows.push_back(Json{{"cluster_tilting", cluster_to_json(ct)},
                          {"support_tilting", indec_set_to_json(c)},
                          {"torsion_class", indec_set_to_json(t)},
                          {"ar_positions", pos},
                          {"wide_subcategory", indec_set_to_json(a)},
                          {"nc_element", group_element_to_json(q, nc)},
                          {"sortable", group_element_to_json(q, w)}});
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return exit_pass;
}

struct SuiteResult {
  std::string name;
  std::vector<Report> reports;
  std::vector<std::string> notes;
  double seconds = 0;
};

using SuiteFn = std::function<SuiteResult(const RepCategory&, const Options&)>;

SuiteResult suite_bijections(const RepCategory& cat, const Options&) {
  SuiteResult s{"bijections", {}, {}, 0};
  s.reports.push_back(check_bijections(cat));
  s.reports.push_back(check_torsion_oracle(cat));
  s.reports.push_back(check_order_isomorphism(cat));
  s.reports.push_back(check_exchange_alternative(cat));
  s.reports.push_back(check_mutation_order(cat));
  s.reports.push_back(check_exchange_graph(cat));
  s.reports.push_back(check_rs_theorem(cat));
  return s;
}

SuiteResult suite_lattice(const RepCategory& cat, const Options&) {
  return {"lattice", {check_nc_lattice(cat.quiver()), check_cambrian_lattice(cat), check_splitting_chain(cat)}, {}, 0};
}

SuiteResult suite_stability(const RepCategory& cat, const Options& o) {
  return {"stability", {stability_suite(cat, o.seed)}, {}, 0};
}

SuiteResult suite_exceptional(const RepCategory& cat, const Options&) {
  return {"exceptional", {check_exceptional_sequences(cat)}, {}, 0};
}

SuiteResult suite_reading(const RepCategory& cat, const Options&) {
  return {"reading", {check_reading_coincidence(cat), check_cox_of_wide_independence(cat)}, {}, 0};
}

std::size_t thread_count() {
  if (const char* env = std::getenv("QUIVERNC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"tsv", "json"});
  RepCategory cat(load_quiver(o.quiver_source), o.cap);
  const std::vector<std::pair<std::string, SuiteFn>> all{{"bijections", suite_bijections},
                                                         {"lattice", suite_lattice},
                                                         {"stability", suite_stability},
                                                         {"exceptional", suite_exceptional},
                                                         {"reading", suite_reading}};
  std::vector<std::pair<std::string, SuiteFn>> chosen;
  for (const auto& [name, fn] : all)
    if (o.suite == "all" || o.suite == name) chosen.emplace_back(name, fn);
  if (chosen.empty()) throw std::invalid_argument("unknown --suite value: " + o.suite);

  std::vector<SuiteResult> results(chosen.size());
  auto run_one = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    if (o.suite == "all" && chosen[i].first == "exceptional" && cat.quiver().size() > 3) {
      results[i] = {"exceptional", {}, {"skipped: exceptional sequence enumeration is limited to rank 3"}, 0};
    } else {
      results[i] = chosen[i].second(cat, o);
    }
    results[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  // Warm the shared caches before fanning out.
  cat.oracle();
  const std::size_t threads = std::min(thread_count(), chosen.size());
  for (std::size_t start = 0; start < chosen.size(); start += threads) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = start; i < std::min(start + threads, chosen.size()); ++i)
      batch.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, run_one, i));
    for (auto& f : batch) f.get();
  }

  bool ok = true;
  Json doc = Json::array();
  for (const auto& s : results) {
    bool suite_ok = true;
    for (const auto& r : s.reports) suite_ok = suite_ok && r.passed();
    ok = ok && suite_ok;
    err << "suite " << s.name << ": " << s.seconds << " s\n";
    if (o.format == "tsv") {
      for (const auto& note : s.notes) out << s.name << "\t-\t0\t0\t" << note << '\n';
      for (const auto& r : s.reports) {
        out << s.name << '\t' << r.check << '\t' << r.instances << '\t' << r.failures.size() << '\t'
            << (r.passed() ? "pass" : "FAIL") << '\n';
        for (const auto& f : r.failures) out << "  counterexample\t" << f << '\n';
      }
    } else {
      Json reports = Json::array();
      for (const auto& r : s.reports) reports.push_back(report_to_json(r));
      doc.push_back(Json{{"suite", s.name}, {"status", suite_ok ? "pass" : "fail"}, {"notes", s.notes}, {"reports", reports}});
    }
  }
  if (o.format == "json") out << doc.dump(2) << '\n';
  return ok ? exit_pass : exit_verification_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion classes, noncrossing partitions and their bijections for Dynkin quivers", "quivernc"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("quiver", o.quiver_source, "Quiver file or inline DSL")->required();
    sub->add_option("--format", o.format, "tsv, json or dot")->capture_default_str();
    sub->add_option("--cap", o.cap, "Oracle dimension cap")->capture_default_str()->check(CLI::Range(1, 30));
  };
  auto* roots = app.add_subcommand("roots", "Positive roots with AR positions");
  auto* ar = app.add_subcommand("ar", "Auslander-Reiten quiver");
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate one family of objects");
  auto* map = app.add_subcommand("map", "Map objects along the bijection chain");
  auto* table = app.add_subcommand("table", "Correspondence table, one row per torsion class");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  for (auto* sub : {roots, ar, enumerate, map, table, verify}) add_common(sub);
  enumerate->add_option("--what", o.what, "torsion|support-tilting|wide|clusters|nc|sortables|exceptional")
      ->capture_default_str();
  map->add_option("--from", o.from, "Source kind")->required();
  map->add_option("--to", o.to, "Target kind")->required();
  map->add_option("--object", o.object, "Single source object as JSON; all objects if omitted");
  verify->add_option("--suite", o.suite, "bijections|lattice|stability|exceptional|reading|all")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for random stability coefficients")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*roots) return cmd_roots(o, out);
    if (*ar) return cmd_ar(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*map) return cmd_map(o, out);
    if (*table) return cmd_table(o, out);
    return cmd_verify(o, out, err);
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return exit_cap_or_type;
  } catch (const NotFiniteTypeError& e) {
    err << "not finite type: " << e.what() << '\n';
    return exit_cap_or_type;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_verification_failure;
  }
}

}  // namespace quivernc::cli
