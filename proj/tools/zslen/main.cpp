#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"
#include "verify.hpp"
#include "zslen/atom_cache.hpp"
#include "zslen/errors.hpp"

namespace zslen::cli {
namespace {

struct RunConfig {
  std::string group;
  std::string subset = "all";
  std::optional<std::uint64_t> bound;
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t node_limit = Options{}.node_limit;
  std::size_t memo_limit = Options{}.memo_limit;
  std::size_t product_limit = Options{}.product_limit;
  std::int64_t max_order = kDefaultMaxGroupOrder;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 42;
  bool stable = false;

  Options options() const {
    Options o;
    o.node_limit = node_limit;
    o.memo_limit = memo_limit;
    o.product_limit = product_limit;
    o.threads = threads;
    return o;
  }
  FiniteAbelianGroup make() const {
    if (group.empty()) throw InvalidArgument("--group is required");
    return parse_group(group, max_order);
  }
  std::uint64_t bound_or(std::uint64_t fallback) const { return bound.value_or(fallback); }
  std::string cache() const {
    if (const char* env = std::getenv("ZSLEN_CACHE_DIR"); env && *env) return env;
    return cache_dir;
  }
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InvalidArgument("empty entry in list '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidArgument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

// "all", "nonzero", or elements such as "1,2" / "[(1,0),(0,1)]".
std::vector<ElementId> parse_subset(const FiniteAbelianGroup& group, std::string text) {
  if (text == "all") return all_elements(group);
  if (text == "nonzero") return nonzero_elements(group);
  if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::vector<ElementId> out;
  int depth = 0;
  std::string item;
  auto flush = [&] {
    if (item.find_first_not_of(" \t") == std::string::npos) throw InvalidArgument("empty element in subset");
    out.push_back(parse_element(group, item));
    item.clear();
  };
  for (const char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      flush();
    else
      item += c;
  }
  flush();
  return normalize_subset(group, out);
}

std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto k = parse_int_list(text);
    if (k.size() != 1) throw InvalidArgument("expected k or a..b, got '" + text + "'");
    return {k[0], k[0]};
  }
  const auto lo = parse_int_list(text.substr(0, dots));
  const auto hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] < 1 || hi[0] < lo[0])
    throw InvalidArgument("invalid k range '" + text + "'");
  return {lo[0], hi[0]};
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "csv") return Format::kCsv;
  if (f == "text") return Format::kText;
  throw InvalidArgument("unknown format '" + f + "'");
}

json entry_json(const LengthSetEntry& e) {
  return {{"lengths", to_json(e.lengths)}, {"witness", to_json(e.witness)}};
}

std::string join_values(std::span<const std::int64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

AtomSet atoms_for(const RunConfig& cfg, const FiniteAbelianGroup& g, std::span<const ElementId> subset,
                  Report& report) {
  const auto dir = cfg.cache();
  if (dir.empty()) return enumerate_atoms(g, subset, cfg.options());
  auto cached = load_or_compute_atoms(dir, g, subset, cfg.options());
  if (!cached.warning.empty()) {
    std::cerr << "warning: " << cached.warning << '\n';
    report.warnings.push_back(cached.warning);
  }
  report.counters["atom_cache_hit"] = cached.from_cache;
  return std::move(cached.atoms);
}

}  // namespace

int run(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Sets of lengths in monoids of zero-sum sequences and numerical monoids", "zslen"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--group", cfg.group, "Group moduli, e.g. 3,3");
  app.add_option("--subset", cfg.subset, "all | nonzero | element list such as \"(1,0),(0,1)\"");
  app.add_option("--bound", cfg.bound, "Maximal sequence length scanned");
  app.add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Atom cache directory (ZSLEN_CACHE_DIR overrides)");
  app.add_option("--node-limit", cfg.node_limit, "Atom search node ceiling")->check(CLI::PositiveNumber);
  app.add_option("--memo-limit", cfg.memo_limit, "Factorization memo ceiling")->check(CLI::PositiveNumber);
  app.add_option("--product-limit", cfg.product_limit, "Distinct atom products ceiling")->check(CLI::PositiveNumber);
  app.add_option("--max-order", cfg.max_order, "Largest accepted group order")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_flag("--stable", cfg.stable, "Omit timing so identical runs print identical bytes");

  Report report;
  std::function<void()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->parse_complete_callback([&report, name] { report.command = name; });
    return s;
  };

  auto* atoms_cmd = sub("atoms", "List the minimal zero-sum sequences over a subset");
  atoms_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto subset = parse_subset(g, cfg.subset);
      const auto atoms = atoms_for(cfg, g, subset, report);
      json list = json::array();
      for (const auto& a : atoms.atoms()) list.push_back(a.to_string());
      report.result = {{"group", g.to_string()},
                       {"subset", elements_to_json(g, atoms.subset())},
                       {"count", atoms.size()},
                       {"max_length", atoms.max_length()},
                       {"atoms", list}};
      report.counters["atoms"] = atoms.size();
    };
  });

  auto* dav_cmd = sub("davenport", "Davenport constant D(G) and the lower bound D*(G)");
  dav_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto atoms = atoms_for(cfg, g, all_elements(g), report);
      const auto d = davenport(atoms);
      const auto star = davenport_star(g);
      const auto star_witness = davenport_star_witness(g);
      report.result = {{"group", g.to_string()},
                       {"davenport", d.value},
                       {"davenport_star", star},
                       {"witness", d.witness.to_string()},
                       {"davenport_star_witness", star_witness.to_string()}};
      report.counters["atoms"] = atoms.size();
      add_verdict(report, "D*(G) <= D(G)", star <= d.value, d.witness.to_string());
      add_verdict(report, "D*(G) witness is an atom", is_atom(star_witness), star_witness.to_string());
    };
  });

  std::string sequence_text;
  auto* len_cmd = sub("lengths", "Set of lengths L(B) of one zero-sum sequence");
  len_cmd->add_option("--sequence", sequence_text, "Sequence such as \"[1:3,2:3]\"")->required();
  len_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto b = parse_sequence(g, sequence_text);
      const auto l = length_set_in_support(b, cfg.options());
      report.result = {{"group", g.to_string()},
                       {"sequence", b.to_string()},
                       {"lengths", to_json(l)},
                       {"delta", delta_of(l)},
                       {"elasticity", elasticity_of(l).to_string()}};
    };
  });

  auto* sys_cmd = sub("system", "System of sets of lengths up to a length bound");
  sys_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto subset = parse_subset(g, cfg.subset);
      const auto s = system_of_length_sets(g, subset, cfg.bound_or(12), cfg.options());
      json entries = json::array();
      for (const auto& e : s.entries) {
        entries.push_back(entry_json(e));
        report.rows.push_back({e.lengths.to_string(), e.witness.to_string(), std::to_string(e.witness.length())});
      }
      report.columns = {"lengths", "witness", "witness_length"};
      report.result = {{"group", g.to_string()},
                       {"subset", elements_to_json(g, s.subset)},
                       {"bound", s.bound},
                       {"davenport", s.davenport},
                       {"entries", entries}};
      report.counters["sequences_scanned"] = s.sequences_scanned;
      report.counters["sets"] = s.entries.size();
      if (has_closed_form_system(g) && s.subset.size() == static_cast<std::size_t>(g.order())) {
        const auto cmp = compare_with_closed_form(s);
        json missing = json::array();
        for (const auto& m : cmp.missing) missing.push_back(to_json(m));
        json unexpected = json::array();
        for (const auto& e : cmp.unexpected) unexpected.push_back(entry_json(e));
        report.result["closed_form"] = {{"sound", cmp.sound},
                                        {"complete", cmp.complete},
                                        {"compared", cmp.compared},
                                        {"missing", missing},
                                        {"unexpected", unexpected}};
        add_verdict(report, "system matches closed form", cmp.ok(),
                    !cmp.unexpected.empty() ? cmp.unexpected.front().witness.to_string()
                    : !cmp.missing.empty()  ? "missing " + cmp.missing.front().to_string()
                                            : "");
      }
    };
  });

  std::string k_text = "1..6";
  auto* uni_cmd = sub("unions", "Unions of sets of lengths U_k");
  uni_cmd->add_option("--k", k_text, "k or a range a..b");
  uni_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto subset = parse_subset(g, cfg.subset);
      const auto [lo, hi] = parse_k_range(k_text);
      const auto u = unions_up_to(g, subset, hi, cfg.options());
      json list = json::array();
      std::uint64_t products = 0;
      for (const auto& x : u.unions) {
        products += x.products;
        if (x.k < lo) continue;
        json witnesses = json::array();
        for (const auto& [v, w] : x.witnesses) witnesses.push_back({{"value", v}, {"product", w.to_string()}});
        list.push_back({{"k", x.k},
                        {"values", x.values},
                        {"lambda_k", x.lambda_k},
                        {"rho_k", x.rho_k},
                        {"interval", x.is_interval()},
                        {"products", x.products},
                        {"witnesses", witnesses}});
        report.rows.push_back({std::to_string(x.k), std::to_string(x.lambda_k), std::to_string(x.rho_k),
                               std::to_string(x.values.size()), x.is_interval() ? "true" : "false",
                               join_values(x.values)});
        add_verdict(report, "U_" + std::to_string(x.k) + " is an interval", x.is_interval(),
                    "U=" + LengthSet(x.values).to_string());
      }
      report.columns = {"k", "lambda_k", "rho_k", "size", "interval", "values"};
      report.result = {{"group", g.to_string()},
                       {"subset", elements_to_json(g, subset)},
                       {"unions", list},
                       {"distances", u.distances}};
      report.counters["products"] = products;
    };
  });

  auto* delta_cmd = sub("delta", "Set of distances accumulated up to a bound");
  delta_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto subset = parse_subset(g, cfg.subset);
      const auto d = delta_of_group(g, subset, cfg.bound_or(12), cfg.options());
      json witnesses = json::array();
      for (const auto& [gap, w] : d.witnesses) witnesses.push_back({{"distance", gap}, {"witness", w.to_string()}});
      report.result = {{"group", g.to_string()},
                       {"subset", elements_to_json(g, subset)},
                       {"bound", d.bound},
                       {"distances", d.distances},
                       {"witnesses", witnesses},
                       {"stable", d.stable}};
    };
  });

  auto* dstar_cmd = sub("delta-star", "Minimal distances min Delta(G0) over subsets G0");
  dstar_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto d = delta_star(g, cfg.bound_or(10), cfg.options());
      json witnesses = json::array();
      for (const auto& [v, subset] : d.witnesses)
        witnesses.push_back({{"value", v}, {"subset", elements_to_json(g, subset)}});
      report.result = {{"group", g.to_string()},
                       {"bound", d.bound},
                       {"values", d.values},
                       {"witnesses", witnesses},
                       {"subsets_with_distances", d.subsets_with_distances}};
    };
  });

  std::string set_text, period_text, candidates_text;
  std::optional<std::int64_t> fit_d;
  auto* fit_cmd = sub("fit", "Fit a finite set as an almost arithmetical multiprogression");
  fit_cmd->add_option("--set", set_text, "Set such as 2,3,7,8")->required();
  fit_cmd->add_option("--d", fit_d, "Fixed difference");
  fit_cmd->add_option("--period", period_text, "Fixed period, e.g. 0,1,5 (default 0,d)");
  fit_cmd->add_option("--candidates", candidates_text, "Candidate differences for the best fit");
  fit_cmd->callback([&] {
    action = [&] {
      const LengthSet l(parse_int_list(set_text));
      std::optional<AAMPFit> fit;
      if (fit_d) {
        const auto period = period_text.empty() ? std::vector<std::int64_t>{0, *fit_d} : parse_int_list(period_text);
        fit = fit_aamp(l, *fit_d, period);
        report.result["mode"] = "fixed";
      } else {
        std::vector<std::int64_t> candidates;
        if (!candidates_text.empty()) {
          candidates = parse_int_list(candidates_text);
        } else {
          for (std::int64_t d = 1; d <= std::max<std::int64_t>(1, l.max() - l.min()); ++d) candidates.push_back(d);
        }
        fit = best_aamp(l, candidates);
        report.result["mode"] = "best";
      }
      report.result["set"] = to_json(l);
      report.result["fit"] = fit ? to_json(*fit) : json(nullptr);
      if (fit) add_verdict(report, "fit reconstructs the set", fit->reconstruct() == l, l.to_string());
    };
  });

  std::string report_path;
  std::optional<std::int64_t> structure_kmax;
  auto* vs_cmd = sub("verify-structure", "Fit every set of lengths and report the largest bound M");
  vs_cmd->add_option("--report", report_path, "Also write the JSON report to this file");
  vs_cmd->add_option("--kmax", structure_kmax, "Also check the structure of U_1..U_kmax");
  std::int64_t trend_start = 10;
  double tolerance = 0.1;
  vs_cmd->add_option("--trend-start", trend_start, "Smallest even k used in the |U_k|/k trend check")
      ->check(CLI::PositiveNumber);
  vs_cmd->add_option("--tolerance", tolerance, "Allowed |U_k|/k deviation from its limit")
      ->check(CLI::NonNegativeNumber);
  vs_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto r = verify_structure_theorem(g, cfg.bound_or(12), cfg.options());
      bool round_trip = true;
      for (const auto& f : r.fits) round_trip = round_trip && f.fit.reconstruct() == f.entry.lengths;
      json hist = json::array();
      for (const auto& [key, count] : r.histogram)
        hist.push_back({{"d", std::get<0>(key)}, {"period_size", std::get<1>(key)}, {"M", std::get<2>(key)},
                        {"count", count}});
      const auto& w = r.fits[r.witness];
      report.result = {{"group", g.to_string()},
                       {"bound", r.bound},
                       {"differences", r.differences},
                       {"sets", r.fits.size()},
                       {"max_M", r.max_bound},
                       {"witness", {{"lengths", to_json(w.entry.lengths)},
                                    {"sequence", w.entry.witness.to_string()},
                                    {"fit", to_json(w.fit)}}},
                       {"histogram", hist}};
      add_verdict(report, "every fit reconstructs its set", round_trip, "");
      if (structure_kmax) {
        const auto u = verify_unions_structure(g, *structure_kmax, cfg.options(), trend_start, tolerance);
        json rows = json::array();
        for (const auto& row : u.rows)
          rows.push_back({{"k", row.k},
                          {"lambda_k", row.lambda_k},
                          {"rho_k", row.rho_k},
                          {"size", row.size},
                          {"interval", row.interval},
                          {"aap_bound", row.aap_bound},
                          {"density", row.density.to_string()}});
        report.result["unions"] = {{"kmax", u.kmax},
                                   {"difference", u.difference},
                                   {"density_limit", u.density_limit},
                                   {"trend_start", u.trend_start},
                                   {"tolerance", u.tolerance},
                                   {"trend_checked", u.trend_checked},
                                   {"tail_max_deviation", u.tail_max_deviation},
                                   {"rows", rows}};
        add_verdict(report, "U_k are intervals", u.all_intervals, "");
        add_verdict(report, "U_k AAP bound 0", u.max_aap_bound == 0, std::to_string(u.max_aap_bound));
        if (u.trend_checked)
          add_verdict(report, "|U_k|/k near its limit", u.trend_ok, std::to_string(u.tail_max_deviation));
      }
    };
  });

  std::string gens_text;
  std::optional<std::int64_t> num_n;
  auto* num_cmd = sub("numerical", "Invariants of a numerical monoid");
  num_cmd->add_option("--gens", gens_text, "Generators such as 3,5,7")->required();
  num_cmd->add_option("--n", num_n, "Element to factor");
  num_cmd->callback([&] {
    action = [&] {
      const auto h = make_numerical(parse_int_list(gens_text));
      const auto md = num_min_delta(h);
      report.result = {{"generators", std::vector<std::int64_t>(h.generators().begin(), h.generators().end())},
                       {"frobenius", h.frobenius()},
                       {"elasticity", num_elasticity(h).to_string()},
                       {"min_delta", md ? json(*md) : json(nullptr)}};
      if (num_n) {
        json n = {{"n", *num_n}, {"member", contains(h, *num_n)}};
        if (contains(h, *num_n)) {
          const auto l = num_length_set(h, *num_n);
          n["lengths"] = to_json(l);
          n["delta"] = delta_of(l);
          n["elasticity"] = elasticity_of(l).to_string();
        }
        report.result["element"] = n;
      }
    };
  });

  unsigned primes_per_class = 2;
  std::uint64_t samples = 100;
  std::uint64_t max_word_length = 12;
  bool random_primes = false;
  auto* tr_cmd = sub("transfer-check", "Compare lengths in a Krull monoid with lengths of its block images");
  tr_cmd->add_option("--primes-per-class", primes_per_class, "Primes in every class")->check(CLI::PositiveNumber);
  tr_cmd->add_flag("--random-primes", random_primes, "Draw 1 to 3 primes per class from the seed");
  tr_cmd->add_option("--samples", samples, "Random elements to test");
  tr_cmd->add_option("--max-word-length", max_word_length, "Largest sampled word");
  tr_cmd->callback([&] {
    action = [&] {
      const auto g = cfg.make();
      const auto subset = parse_subset(g, cfg.subset);
      const auto instance = random_primes ? random_krull_instance(g, subset, cfg.seed)
                                          : make_krull_instance(g, subset, primes_per_class);
      const auto r = check_transfer(instance, samples, max_word_length, cfg.seed, cfg.options());
      const auto a = check_atom_correspondence(instance, cfg.options());
      report.result = {{"group", g.to_string()},
                       {"subset", elements_to_json(g, instance.subset)},
                       {"primes", instance.labels},
                       {"seed", r.seed},
                       {"samples", r.samples},
                       {"length_passes", r.passes},
                       {"homomorphism_passes", r.homomorphism_passes},
                       {"lifting_passes", r.lifting_passes},
                       {"h_atoms", a.h_atoms},
                       {"words_checked", a.words_checked},
                       {"beta_atoms", a.beta_atoms}};
      std::string witness;
      if (r.counterexample) {
        witness = r.failure + " a=" + word_to_string(instance, *r.counterexample) +
                  " L_H=" + r.direct_lengths->to_string() + " L_B=" + r.transferred_lengths->to_string();
        report.result["counterexample"] = witness;
      }
      add_verdict(report, "L_H(a) = L(beta(a))", r.passes == r.samples, witness);
      add_verdict(report, "beta is a homomorphism", r.homomorphism_passes == r.samples, witness);
      add_verdict(report, "splits of beta(a) lift", r.lifting_passes == r.samples, witness);
      add_verdict(report, "atoms of H are the preimages of atoms", a.ok(),
                  a.mismatch ? word_to_string(instance, *a.mismatch) : "");
    };
  });

  std::string verify_name;
  bool small = false;
  auto* ver_cmd = sub("verify", "Run a property suite");
  ver_cmd->add_option("name", verify_name, "Suite name")->required()->check(CLI::IsMember(verify_names()));
  ver_cmd->add_flag("--small", small, "Smaller groups and bounds");
  ver_cmd->callback([&] {
    action = [&] {
      VerifyConfig vc;
      if (!cfg.group.empty()) vc.group = cfg.make();
      vc.bound = cfg.bound;
      vc.small = small;
      vc.seed = cfg.seed;
      vc.options = cfg.options();
      report.result = json::object();
      run_verify(verify_name, vc, report);
    };
  });

  Format format = Format::kJson;
  auto emit = [&](int code) {
    std::cout << render(report, format, cfg.stable);
    return code;
  };
  auto fail = [&](const std::string& reason, const std::string& message, int code) {
    report.error = {{"reason", reason}, {"message", message}};
    std::cerr << "error: " << message << '\n';
    return emit(code);
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("invalid_argument", e.what(), 2);
  }

  format = parse_format(cfg.format);
  report.config = {{"group", cfg.group},       {"subset", cfg.subset},         {"format", cfg.format},
                   {"node_limit", cfg.node_limit}, {"memo_limit", cfg.memo_limit}, {"product_limit", cfg.product_limit},
                   {"max_order", cfg.max_order}, {"threads", cfg.threads},     {"seed", cfg.seed}};
  report.config["bound"] = cfg.bound ? json(*cfg.bound) : json(nullptr);
  if (!cfg.cache().empty()) report.config["cache_dir"] = cfg.cache();

  const auto start = std::chrono::steady_clock::now();
  try {
    if (format == Format::kCsv && report.command != "system" && report.command != "unions")
      throw InvalidArgument("csv output is available for system and unions only");
    action();
  } catch (const ResourceLimit& e) {
    report.error = {{"reason", "resource_limit"}, {"bound", e.bound()}, {"limit", e.limit()}, {"message", e.what()}};
    std::cerr << "error: " << e.what() << '\n';
    return emit(3);
  } catch (const InvalidArgument& e) {
    return fail("invalid_argument", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("error", e.what(), 2);
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << report.to_json(cfg.stable).dump(2) << '\n';
    if (!out) return fail("error", "cannot write " + report_path, 2);
  }
  return emit(report.all_pass() ? 0 : 1);
}

}  // namespace zslen::cli

int main(int argc, char** argv) { return zslen::cli::run(argc, argv); }
