#pragma once

// Front end for the `il` tool. run_cli takes argv (without the program name)
// and returns the exit status: 0 ok, 1 property violation, 2 input error,
// 3 resource limit.

#include "il/il.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace il::cli {

enum exit_code : int { ok = 0, violation = 1, bad_input = 2, over_limit = 3 };

using json = nlohmann::ordered_json;

namespace detail {

inline bool looks_like_cotree(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '(';
}

struct loaded_graph {
  graph g;
  std::optional<cotree> tree;  // set when the file was a cotree
};

inline loaded_graph load_graph_or_cotree(const std::string& path) {
  std::string text = read_text(path);
  if (looks_like_cotree(text)) {
    cotree t = parse_cotree(text);
    return {t.realize(), std::move(t)};
  }
  return {graph_from_string(text), std::nullopt};
}

inline graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

inline json rational(const ratio& r) { return r.str_full(); }

inline json vertex_list(const vertex_set& s) {
  json a = json::array();
  s.for_each([&](vertex v) { a.push_back(v); });
  return a;
}

inline std::string vertex_text(const vertex_set& s) {
  std::string t;
  s.for_each([&](vertex v) { t += (t.empty() ? "" : " ") + std::to_string(v); });
  return t;
}

inline json base_record(const std::string& command, const std::vector<std::string>& inputs) {
  json j;
  j["command"] = command;
  j["input"] = inputs;
  j["engine"] = nullptr;
  j["a"] = nullptr;
  j["a_star"] = nullptr;
  j["alpha"] = nullptr;
  j["witness"] = nullptr;
  j["fpm"] = nullptr;
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct product_args {
  std::vector<std::string> files;
  std::size_t power = 0;
  std::string output;
  bool as_json = false;
};

inline int cmd_product(const product_args& a, std::ostream& out) {
  graph result(0);
  if (a.power > 0) {
    if (a.files.size() != 1) throw input_error("product --power takes exactly one graph file");
    result = graph_power(detail::load_graph(a.files[0]), a.power);
  } else {
    if (a.files.size() != 2) throw input_error("product takes two graph files (or one with --power)");
    result = categorical_product(detail::load_graph(a.files[0]), detail::load_graph(a.files[1]));
  }
  result = result.with_labels({});
  if (!a.output.empty()) {
    std::ofstream f(a.output);
    if (!f) throw input_error("cannot write '" + a.output + "'");
    write_graph(f, result);
  }
  if (a.as_json) {
    json j = detail::base_record("product", a.files);
    j["vertices"] = result.num_vertices();
    j["edges"] = result.num_edges();
    if (a.power > 0) j["power"] = a.power;
    out << j.dump() << '\n';
  } else if (a.output.empty()) {
    write_graph(out, result);
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct alpha_args {
  std::vector<std::string> files;
  bool cotree = false;
  bool split = false;
  bool oracle = false;
  bool witness = false;
  bool as_json = false;
  std::size_t threads = 1;
};

inline int cmd_alpha(const alpha_args& a, std::ostream& out) {
  if (a.files.size() != 2) throw input_error("alpha takes two graph files");
  if (int(a.cotree) + int(a.split) + int(a.oracle) > 1)
    throw input_error("alpha: choose at most one of --cotree, --split, --oracle");
  auto g = detail::load_graph_or_cotree(a.files[0]);
  auto h = detail::load_graph_or_cotree(a.files[1]);
  if (g.g.empty() || h.g.empty()) throw input_error("alpha: empty graph");

  std::string engine;
  alpha_result r;
  auto tree_of = [](const detail::loaded_graph& x) { return x.tree ? *x.tree : cograph_recognize(x.g); };
  auto use_cotrees = [&] {
    engine = "cograph";
    r = alpha_product_cographs(tree_of(g), tree_of(h));
  };
  auto use_split = [&] {
    engine = "split";
    r = alpha_product_split(g.g, find_split_partition(g.g), h.g, find_split_partition(h.g));
  };
  auto use_oracle = [&] {
    engine = "oracle";
    r = alpha_exact(categorical_product(g.g, h.g));
  };
  if (a.cotree) {
    use_cotrees();
  } else if (a.split) {
    use_split();
  } else if (a.oracle) {
    use_oracle();
  } else if ((g.tree || is_cograph(g.g)) && (h.tree || is_cograph(h.g))) {
    use_cotrees();
  } else if (is_splitgraph(g.g) && is_splitgraph(h.g)) {
    use_split();
  } else {
    use_oracle();
  }

  const std::size_t nh = h.g.num_vertices();
  if (a.as_json) {
    json j = detail::base_record("alpha", a.files);
    j["engine"] = engine;
    j["alpha"] = r.alpha;
    json w = json::array();
    r.witness.for_each([&](vertex v) { w.push_back(json::array({v / nh, v % nh})); });
    j["witness"] = w;
    out << j.dump() << '\n';
    return ok;
  }
  out << "alpha=" << r.alpha << " engine=" << engine << '\n';
  if (a.witness) {
    out << "witness=";
    bool first = true;
    r.witness.for_each([&](vertex v) {
      out << (first ? "" : " ") << '(' << v / nh << ',' << v % nh << ')';
      first = false;
    });
    out << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct capacity_args {
  std::string file;
  bool interval = false;
  bool permutation = false;
  bool cotree = false;
  bool split = false;
  std::string td;
  bool witness = false;
  bool as_json = false;
  std::size_t threads = 1;
};

inline void print_capacity(std::ostream& out, const capacity_result& r, bool witness) {
  out << "a=" << r.a.str() << " theta=" << r.a_star.str() << " fpm=" << (r.has_fpm ? "true" : "false")
      << " engine=" << engine_name(r.engine) << '\n';
  out << "approx a~" << r.a.decimal() << " theta~" << r.a_star.decimal() << '\n';
  if (witness) out << "witness=" << detail::vertex_text(r.witness) << '\n';
}

inline json capacity_record(const std::string& command, const std::vector<std::string>& inputs,
                            const capacity_result& r) {
  json j = detail::base_record(command, inputs);
  j["engine"] = std::string(engine_name(r.engine));
  j["a"] = detail::rational(r.a);
  j["a_star"] = detail::rational(r.a_star);
  j["witness"] = detail::vertex_list(r.witness);
  j["fpm"] = r.has_fpm;
  j["theta"] = detail::rational(r.a_star);
  return j;
}

inline int cmd_capacity(const capacity_args& a, std::ostream& out) {
  const int forced = int(a.interval) + int(a.permutation) + int(a.cotree) + int(a.split) + int(!a.td.empty());
  if (forced > 1) throw input_error("capacity: choose at most one of --interval, --permutation, --td, --cotree, --split");
  capacity_options opt;
  opt.threads = a.threads;
  std::vector<std::string> inputs{a.file};
  capacity_result r;
  if (a.interval) {
    auto in = open_input(a.file);
    r = a_interval(read_interval_model(in));
  } else if (a.permutation) {
    auto in = open_input(a.file);
    r = a_permutation(read_permutation_model(in));
  } else if (!a.td.empty()) {
    graph g = detail::load_graph(a.file);
    auto in = open_input(a.td);
    auto f = read_tree_decomposition(in);
    if (f.vertex_count != g.num_vertices())
      throw input_error("decomposition declares " + std::to_string(f.vertex_count) + " vertices, graph has " +
                        std::to_string(g.num_vertices()));
    r = a_treewidth(g, validate_and_nicify(g, f.td));
    inputs.push_back(a.td);
  } else {
    auto loaded = detail::load_graph_or_cotree(a.file);
    if (loaded.g.empty()) throw input_error("capacity: empty graph");
    if (a.cotree) {
      r = a_cograph(loaded.tree ? *loaded.tree : cograph_recognize(loaded.g));
    } else if (a.split) {
      r = a_split(loaded.g, find_split_partition(loaded.g));
    } else if (loaded.tree) {
      r = a_cograph(*loaded.tree);
    } else if (is_cograph(loaded.g)) {
      r = a_cograph(cograph_recognize(loaded.g));
    } else if (is_splitgraph(loaded.g)) {
      r = a_split(loaded.g, find_split_partition(loaded.g));
    } else {
      r = tensor_capacity(loaded.g, opt);
    }
  }
  if (a.as_json) {
    out << capacity_record("capacity", inputs, r).dump() << '\n';
  } else {
    print_capacity(out, r, a.witness);
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct domination_args {
  std::vector<std::size_t> bipartite;
  std::size_t kmax = 0;
  std::vector<std::size_t> multipartite;
  bool as_json = false;
};

inline int cmd_domination(const domination_args& a, std::ostream& out) {
  const bool bi = !a.bipartite.empty(), multi = !a.multipartite.empty();
  if (bi == multi) throw input_error("domination: give exactly one of --bipartite m n or --multipartite sizes...");
  std::vector<std::string> inputs;
  std::vector<std::size_t> sizes = bi ? a.bipartite : a.multipartite;
  for (auto s : sizes) inputs.push_back(std::to_string(s));
  if (bi) {
    if (a.bipartite.size() != 2) throw input_error("domination: --bipartite needs m and n");
    if (a.kmax == 0) throw input_error("domination: --bipartite needs --kmax K (K >= 1)");
    if (!a.as_json) out << "k,r_i\n";
    for (std::size_t k = 1; k <= a.kmax; ++k) {
      auto r = ri_complete_bipartite_power(a.bipartite[0], a.bipartite[1], k);
      if (a.as_json) {
        json j = detail::base_record("domination", inputs);
        j["k"] = k;
        j["r_i"] = r.str_full();
        out << j.dump() << '\n';
      } else {
        out << k << ',' << r.str() << '\n';
      }
    }
  }
  auto limit = ultimate_independent_domination_multipartite(sizes);
  if (a.as_json) {
    json j = detail::base_record("domination", inputs);
    j["I"] = detail::rational(limit);
    out << j.dump() << '\n';
  } else {
    out << "I=" << limit.str() << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct check_args {
  std::string file;
  std::string cotree;
  std::string interval;
  std::string permutation;
  std::string td;
  bool as_json = false;
  std::size_t threads = 1;
};

inline int cmd_check(const check_args& a, std::ostream& out) {
  graph g = detail::load_graph(a.file);
  if (g.empty()) throw input_error("check: empty graph");
  const std::size_t n = g.num_vertices();
  const limits& lim = default_limits();
  capacity_options opt;
  opt.threads = a.threads;

  struct line {
    std::string name, status, detail;
  };
  std::vector<line> report;
  bool failed = false;
  auto note = [&](std::string name, std::string status, std::string detail) {
    if (status == "violation") failed = true;
    report.push_back({std::move(name), std::move(status), std::move(detail)});
  };

  std::vector<capacity_result> results;
  auto attempt = [&](const std::string& name, auto&& run) {
    try {
      results.push_back(run());
    } catch (const limit_exceeded& e) {
      note(name, "skipped", e.what());
    } catch (const input_error& e) {
      note(name, "violation", std::string("certificate rejected: ") + e.what());
    }
  };

  // User certificates: a certificate that does not describe the graph is a violation.
  if (!a.cotree.empty()) {
    attempt("cotree certificate", [&] {
      cotree t = parse_cotree(read_text(a.cotree));
      if (!(t.realize() == g)) throw input_error("cotree does not realise the graph");
      return a_cograph(t);
    });
  }
  if (!a.interval.empty()) {
    attempt("interval certificate", [&] {
      auto in = open_input(a.interval);
      auto m = read_interval_model(in);
      if (!(realize_interval(m) == g)) throw input_error("interval model does not realise the graph");
      return a_interval(m);
    });
  }
  if (!a.permutation.empty()) {
    attempt("permutation certificate", [&] {
      auto in = open_input(a.permutation);
      auto m = read_permutation_model(in);
      if (!(realize_permutation(m) == g)) throw input_error("permutation model does not realise the graph");
      return a_permutation(m);
    });
  }
  if (!a.td.empty()) {
    attempt("decomposition certificate", [&] {
      auto in = open_input(a.td);
      auto f = read_tree_decomposition(in);
      if (f.vertex_count != n) throw input_error("decomposition vertex count differs from the graph");
      return a_treewidth(g, validate_and_nicify(g, f.td));
    });
  }
  // Derived certificates.
  if (a.cotree.empty() && is_cograph(g)) attempt("cograph", [&] { return a_cograph(cograph_recognize(g)); });
  if (is_splitgraph(g)) attempt("split", [&] { return a_split(g, find_split_partition(g)); });
  if (a.td.empty()) {
    if (n <= lim.exact_treewidth_vertices)
      attempt("treewidth", [&] { return a_treewidth(g, validate_and_nicify(g, exact_tree_decomposition(g, lim))); });
    else
      note("treewidth", "skipped", "no decomposition given and graph too large for the exact finder");
  }
  attempt("general", [&] { return tensor_capacity(g, opt); });
  if (n <= lim.brute_force_vertices)
    attempt("brute", [&] { return a_brute(g, lim); });
  else
    note("brute", "skipped", "graph exceeds the brute-force bound");

  std::optional<ratio> agreed;
  if (!results.empty()) {
    std::string names;
    bool same = true;
    for (const auto& r : results) {
      names += (names.empty() ? "" : " vs ") + std::string(engine_name(r.engine));
      same = same && r.a == results.front().a && r.a_star == results.front().a_star;
    }
    if (same) {
      agreed = results.front().a;
      note("engines agree", "ok", names);
    } else {
      std::string values;
      for (const auto& r : results)
        values += (values.empty() ? "" : ", ") + std::string(engine_name(r.engine)) + "=" + r.a.str();
      note("engines agree", "violation", values);
    }
    bool all_witnesses = true;
    for (const auto& r : results)
      all_witnesses = all_witnesses && is_independent(g, r.witness) && !r.witness.empty() &&
                      independence_fraction(r.witness.size(), neighborhood(g, r.witness).size()) == r.a;
    note("witnesses verified", all_witnesses ? "ok" : "violation", std::to_string(results.size()) + " witnesses");
  }

  const bool fpm = has_fractional_perfect_matching(g);
  if (agreed) {
    bool holds = (a_star(*agreed) == ratio(1)) == !fpm;
    note("a*=1 iff no fractional perfect matching", holds ? "ok" : "violation",
         "a*=" + a_star(*agreed).str() + " fpm=" + (fpm ? "true" : "false"));
    if (n * n <= 36) {
      try {
        auto sq = a_general_exact(graph_power(g, 2, lim), opt);
        bool holds2 = sq.a_star == a_star(*agreed);
        note("square a*(G^2)=a*(G)", holds2 ? "ok" : "violation", "a*(G^2)=" + sq.a_star.str());
      } catch (const limit_exceeded& e) {
        note("square a*(G^2)=a*(G)", "skipped", e.what());
      }
    } else {
      note("square a*(G^2)=a*(G)", "skipped", "|V|^2 = " + std::to_string(n * n) + " exceeds 36");
    }
  }

  if (a.as_json) {
    json j = detail::base_record("check", {a.file});
    if (!results.empty()) {
      j["engine"] = std::string(engine_name(results.front().engine));
      j["a"] = detail::rational(results.front().a);
      j["a_star"] = detail::rational(results.front().a_star);
      j["witness"] = detail::vertex_list(results.front().witness);
    }
    j["fpm"] = fpm;
    json checks = json::array();
    for (const auto& l : report) checks.push_back({{"name", l.name}, {"status", l.status}, {"detail", l.detail}});
    j["checks"] = checks;
    j["ok"] = !failed;
    out << j.dump() << '\n';
  } else {
    for (const auto& l : report) {
      if (l.status == "ok")
        out << l.name << ": " << l.detail << ": ok\n";
      else
        out << l.name << ": " << l.status << " (" << l.detail << ")\n";
    }
    out << (failed ? "result: violation\n" : "result: ok\n");
  }
  return failed ? violation : ok;
}

// ---------------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence numbers of categorical products and tensor capacity", "il"};
  app.require_subcommand(1);

  product_args pa;
  auto* product = app.add_subcommand("product", "Write the categorical product (or power) of graph files");
  product->add_option("files", pa.files, "Graph files")->required();
  product->add_option("--power", pa.power, "k-fold power of a single graph")->check(CLI::PositiveNumber);
  product->add_option("-o,--output", pa.output, "Output file (default stdout)");
  product->add_flag("--json", pa.as_json, "Print a JSON summary line");

  alpha_args aa;
  auto* alpha = app.add_subcommand("alpha", "Independence number of G x H");
  alpha->add_option("files", aa.files, "Graph or cotree files G and H")->required();
  alpha->add_flag("--cotree", aa.cotree, "Use the cograph engine (fails on non-cographs)");
  alpha->add_flag("--split", aa.split, "Use the split graph engine (fails on non-split graphs)");
  alpha->add_flag("--oracle", aa.oracle, "Explicit product and exact branch and bound");
  alpha->add_flag("--witness", aa.witness, "Print a maximum independent set");
  alpha->add_flag("--json", aa.as_json, "JSON lines output");
  alpha->add_option("--threads", aa.threads, "Worker threads")->check(CLI::PositiveNumber);

  capacity_args ca;
  auto* capacity = app.add_subcommand("capacity", "a(G) and tensor capacity a*(G)");
  capacity->add_option("file", ca.file, "Graph, cotree or model file")->required();
  capacity->add_flag("--interval", ca.interval, "File is an interval model");
  capacity->add_flag("--permutation", ca.permutation, "File is a permutation model");
  capacity->add_option("--td", ca.td, "Tree decomposition of the graph");
  capacity->add_flag("--cotree", ca.cotree, "Use the cograph engine");
  capacity->add_flag("--split", ca.split, "Use the split graph engine");
  capacity->add_flag("--witness", ca.witness, "Print the witness set");
  capacity->add_flag("--json", ca.as_json, "JSON lines output");
  capacity->add_option("--threads", ca.threads, "Worker threads")->check(CLI::PositiveNumber);

  domination_args da;
  auto* domination = app.add_subcommand("domination", "Independent domination ratios of powers");
  domination->add_option("--bipartite", da.bipartite, "m n of K(m,n)")->expected(2);
  domination->add_option("--kmax", da.kmax, "Largest power")->check(CLI::PositiveNumber);
  domination->add_option("--multipartite", da.multipartite, "Class sizes")->expected(1, -1);
  domination->add_flag("--json", da.as_json, "JSON lines output");

  check_args ka;
  auto* check = app.add_subcommand("check", "Cross-check engines and identities on a graph");
  check->add_option("file", ka.file, "Graph file")->required();
  check->add_option("--cotree", ka.cotree, "Cotree certificate");
  check->add_option("--interval", ka.interval, "Interval model certificate");
  check->add_option("--permutation", ka.permutation, "Permutation model certificate");
  check->add_option("--td", ka.td, "Tree decomposition certificate");
  check->add_flag("--json", ka.as_json, "JSON output");
  check->add_option("--threads", ka.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (product->parsed()) return cmd_product(pa, out);
    if (alpha->parsed()) return cmd_alpha(aa, out);
    if (capacity->parsed()) return cmd_capacity(ca, out);
    if (domination->parsed()) return cmd_domination(da, out);
    if (check->parsed()) return cmd_check(ka, out);
  } catch (const limit_exceeded& e) {
    err << "limit: " << e.what() << '\n';
    return over_limit;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return violation;
  }
  return bad_input;
}

}  // namespace il::cli
