#pragma once

// Text formats.
//
//   graph           "p il <n> <m>" then m lines "e <u> <v>" (0-indexed)
//   cotree          s-expression, "(* (+ 0 1) 2)"; + is union, * is join
//   interval model  lines "<id> <left> <right>", ids 0..n-1 each once
//   permutation     "<n>" then pi(1..n), whitespace separated
//   decomposition   "s td <bags> <width+1> <n>", "b <bag> <v...>" (bags
//                   numbered from 1, vertices from 0), then "<bag> <bag>" tree edges
//
// '#' starts a comment everywhere; decomposition files also accept 'c' lines.

#include "il/cotree.hpp"
#include "il/error.hpp"
#include "il/graph.hpp"
#include "il/interval.hpp"
#include "il/permutation.hpp"
#include "il/tree_decomposition.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace il {

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

template <class Int = std::int64_t>
Int parse_int(const std::string& word, std::size_t line, std::string_view what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw parse_error(line, "expected integer " + std::string(what) + ", got '" + word + "'");
  return v;
}

inline std::size_t parse_count(const std::string& word, std::size_t line, std::string_view what) {
  auto v = parse_int<std::int64_t>(word, line, what);
  if (v < 0) throw parse_error(line, std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

// Non-blank, comment-stripped lines with their 1-based numbers.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto words = split_words(strip_comment(line));
    if (!words.empty()) out.emplace_back(no, std::move(words));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs.

inline graph read_graph(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw parse_error(1, "missing header 'p il <n> <m>'");
  const auto& [hline, header] = lines.front();
  if (header.size() != 4 || header[0] != "p" || header[1] != "il")
    throw parse_error(hline, "expected header 'p il <n> <m>'");
  const std::size_t n = detail::parse_count(header[2], hline, "vertex count");
  const std::size_t m = detail::parse_count(header[3], hline, "edge count");
  std::vector<edge> edges;
  std::set<edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, w] = lines[i];
    if (w.size() != 3 || w[0] != "e") throw parse_error(no, "expected 'e <u> <v>'");
    auto u = detail::parse_count(w[1], no, "vertex");
    auto v = detail::parse_count(w[2], no, "vertex");
    if (u >= n || v >= n) throw parse_error(no, "vertex out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw parse_error(no, "self-loop at vertex " + std::to_string(u));
    edge e{static_cast<vertex>(std::min(u, v)), static_cast<vertex>(std::max(u, v))};
    if (!seen.insert(e).second) throw parse_error(no, "duplicate edge");
    edges.push_back(e);
  }
  if (edges.size() != m) {
    std::size_t last = lines.back().first;
    throw parse_error(last, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return graph(n, edges);
}

inline void write_graph(std::ostream& out, const graph& g) {
  out << "p il " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const graph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

inline graph graph_from_string(const std::string& text) {
  std::istringstream s(text);
  return read_graph(s);
}

// ---------------------------------------------------------------------------
// Cotrees.

inline cotree_expr parse_cotree_expr(const std::string& text) {
  std::size_t pos = 0, line = 1;
  auto skip = [&] {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '\n') {
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto node = [&](auto&& self) -> cotree_expr {
    skip();
    if (pos >= text.size()) throw parse_error(line, "cotree: unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      skip();
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '*'))
        throw parse_error(line, "cotree: expected '+' or '*' after '('");
      cotree_kind kind = text[pos] == '+' ? cotree_kind::union_node : cotree_kind::join_node;
      ++pos;
      std::vector<cotree_expr> children;
      for (;;) {
        skip();
        if (pos >= text.size()) throw parse_error(line, "cotree: missing ')'");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        children.push_back(self(self));
      }
      return {kind, 0, std::move(children)};
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw parse_error(line, std::string("cotree: unexpected character '") + text[pos] + "'");
    return cotree_expr::make_leaf(
        static_cast<vertex>(detail::parse_count(text.substr(start, pos - start), line, "leaf")));
  };
  cotree_expr e = node(node);
  skip();
  if (pos != text.size()) throw parse_error(line, "cotree: trailing input");
  return e;
}

inline cotree parse_cotree(const std::string& text) {
  auto e = parse_cotree_expr(text);
  try {
    return cotree::from_expr(e);
  } catch (const parse_error&) {
    throw;
  } catch (const input_error& err) {
    throw parse_error(1, err.what());
  }
}

inline cotree read_cotree(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_cotree(text);
}

// ---------------------------------------------------------------------------
// Interval and permutation models.

inline interval_model read_interval_model(std::istream& in) {
  auto lines = detail::content_lines(in);
  interval_model m;
  m.intervals.resize(lines.size());
  std::vector<bool> seen(lines.size(), false);
  for (const auto& [no, w] : lines) {
    if (w.size() != 3) throw parse_error(no, "expected '<id> <left> <right>'");
    auto id = detail::parse_count(w[0], no, "id");
    if (id >= lines.size()) throw parse_error(no, "interval id out of range");
    if (seen[id]) throw parse_error(no, "duplicate interval id " + std::to_string(id));
    seen[id] = true;
    interval iv{detail::parse_int(w[1], no, "left endpoint"), detail::parse_int(w[2], no, "right endpoint")};
    if (iv.left > iv.right) throw parse_error(no, "left endpoint exceeds right endpoint");
    m.intervals[id] = iv;
  }
  return m;
}

inline void write_interval_model(std::ostream& out, const interval_model& m) {
  for (std::size_t i = 0; i < m.size(); ++i) out << i << ' ' << m.intervals[i].left << ' ' << m.intervals[i].right << '\n';
}

inline permutation_model read_permutation_model(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw parse_error(1, "permutation: missing size");
  std::vector<std::pair<std::size_t, std::string>> words;
  for (const auto& [no, w] : lines)
    for (const auto& x : w) words.emplace_back(no, x);
  const std::size_t n = detail::parse_count(words[0].second, words[0].first, "size");
  if (words.size() != n + 1)
    throw parse_error(words.back().first, "permutation: expected " + std::to_string(n) + " entries, found " +
                                              std::to_string(words.size() - 1));
  permutation_model m;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    auto v = detail::parse_count(words[i].second, words[i].first, "entry");
    if (v < 1 || v > n || seen[v]) throw parse_error(words[i].first, "permutation: not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
    m.pi.push_back(v);
  }
  return m;
}

inline void write_permutation_model(std::ostream& out, const permutation_model& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m.pi[i];
  out << '\n';
}

// ---------------------------------------------------------------------------
// Tree decompositions.

struct decomposition_file {
  tree_decomposition td;
  std::size_t vertex_count = 0;
};

inline decomposition_file read_tree_decomposition(std::istream& in) {
  decomposition_file f;
  std::string line;
  bool header = false;
  std::size_t bag_count = 0, bag_limit = 0;
  std::vector<bool> bag_seen;
  std::size_t last = 0;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto w = detail::split_words(detail::strip_comment(line));
    if (w.empty() || w[0] == "c") continue;
    last = no;
    if (!header) {
      if (w.size() != 5 || w[0] != "s" || w[1] != "td") throw parse_error(no, "expected 's td <bags> <width+1> <n>'");
      bag_count = detail::parse_count(w[2], no, "bag count");
      bag_limit = detail::parse_count(w[3], no, "bag size");
      f.vertex_count = detail::parse_count(w[4], no, "vertex count");
      f.td.bags.resize(bag_count);
      bag_seen.assign(bag_count, false);
      header = true;
      continue;
    }
    if (w[0] == "b") {
      if (w.size() < 2) throw parse_error(no, "expected 'b <bag> <v...>'");
      auto id = detail::parse_count(w[1], no, "bag id");
      if (id < 1 || id > bag_count) throw parse_error(no, "bag id out of range 1.." + std::to_string(bag_count));
      if (bag_seen[id - 1]) throw parse_error(no, "duplicate bag " + std::to_string(id));
      bag_seen[id - 1] = true;
      if (w.size() - 2 > bag_limit) throw parse_error(no, "bag larger than declared width+1");
      for (std::size_t i = 2; i < w.size(); ++i) {
        auto v = detail::parse_count(w[i], no, "vertex");
        if (v >= f.vertex_count) throw parse_error(no, "vertex out of range");
        f.td.bags[id - 1].push_back(static_cast<vertex>(v));
      }
      continue;
    }
    if (w.size() != 2) throw parse_error(no, "expected tree edge '<bag> <bag>'");
    auto a = detail::parse_count(w[0], no, "bag id");
    auto b = detail::parse_count(w[1], no, "bag id");
    if (a < 1 || a > bag_count || b < 1 || b > bag_count) throw parse_error(no, "tree edge bag id out of range");
    f.td.tree_edges.emplace_back(a - 1, b - 1);
  }
  if (!header) throw parse_error(1, "missing header 's td <bags> <width+1> <n>'");
  for (std::size_t i = 0; i < bag_count; ++i)
    if (!bag_seen[i]) throw parse_error(last, "bag " + std::to_string(i + 1) + " never listed");
  return f;
}

inline void write_tree_decomposition(std::ostream& out, const tree_decomposition& td, std::size_t n) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (auto v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

// ---------------------------------------------------------------------------

/// Opens a file for reading; input_error if it cannot be opened.
inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return in;
}

inline std::string read_text(const std::string& path) {
  auto in = open_input(path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace il
