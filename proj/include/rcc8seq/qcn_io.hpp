#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "rcc8seq/network.hpp"

namespace rcc8seq {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip_comment_and_trim(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

}  // namespace detail

/// Line-oriented network format:
///   semantics: neighbour | partition
///   length: <m>
///   vars: x y z ...
///   x y : <rel> ... <rel>      (exactly m relation tokens)
/// `#` starts a comment; unlisted pairs are universal.
inline Network parse_network(std::istream& in) {
  std::optional<SemanticsKind> kind;
  std::optional<int> length;
  std::optional<std::vector<std::string>> vars;
  std::optional<Network> net;
  std::vector<char> seen_pair;

  int line_no = 0;
  std::string raw;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_comment_and_trim(raw);
    if (line.empty()) continue;

    if (line.rfind("semantics:", 0) == 0) {
      if (kind) fail("duplicate semantics line");
      std::string value = detail::strip_comment_and_trim(line.substr(10));
      if (value == "neighbour") kind = SemanticsKind::NeighbourInstants;
      else if (value == "partition") kind = SemanticsKind::TimePartition;
      else fail("semantics must be 'neighbour' or 'partition', got '" + value + "'");
      continue;
    }
    if (line.rfind("length:", 0) == 0) {
      if (length) fail("duplicate length line");
      std::string value = detail::strip_comment_and_trim(line.substr(7));
      try {
        std::size_t pos = 0;
        length = std::stoi(value, &pos);
        if (pos != value.size()) fail("malformed length '" + value + "'");
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        fail("malformed length '" + value + "'");
      }
      continue;
    }
    if (line.rfind("vars:", 0) == 0) {
      if (vars) fail("duplicate vars line");
      vars = detail::split_ws(line.substr(5));
      if (vars->empty()) fail("vars line lists no variables");
      continue;
    }

    // Pair line. The header must be complete by now.
    if (!kind || !length || !vars) fail("constraint line before semantics/length/vars header");
    if (!net) {
      try {
        net.emplace(Semantics(*kind, *length), *vars);
      } catch (const std::exception& e) {
        fail(e.what());
      }
      seen_pair.assign(vars->size() * vars->size(), 0);
    }

    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected '<x> <y> : <relations>'");
    auto names = detail::split_ws(line.substr(0, colon));
    if (names.size() != 2) fail("expected exactly two variable names before ':'");
    if (!net->has_var(names[0])) fail("unknown variable '" + names[0] + "'");
    if (!net->has_var(names[1])) fail("unknown variable '" + names[1] + "'");
    int x = net->var_index(names[0]);
    int y = net->var_index(names[1]);
    if (x == y) fail("constraint relates '" + names[0] + "' to itself");
    std::size_t slot = static_cast<std::size_t>(std::min(x, y) * net->var_count() + std::max(x, y));
    if (seen_pair[slot]) fail("duplicate constraint for pair " + names[0] + " " + names[1]);
    seen_pair[slot] = 1;

    auto tokens = detail::split_ws(line.substr(colon + 1));
    if (static_cast<int>(tokens.size()) != *length)
      fail("expected " + std::to_string(*length) + " relation tokens, got " +
           std::to_string(tokens.size()));
    std::vector<Relation> parts;
    parts.reserve(tokens.size());
    for (const std::string& token : tokens) {
      try {
        parts.push_back(parse_relation(token));
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    net->set_rel(x, y, SeqRelation(net->semantics(), std::move(parts)));
  }

  if (!kind || !length || !vars) {
    line_no = 0;
    fail("missing semantics/length/vars header");
  }
  if (!net) {
    try {
      net.emplace(Semantics(*kind, *length), *vars);
    } catch (const std::exception& e) {
      line_no = 0;
      fail(e.what());
    }
  }
  return *std::move(net);
}

inline Network parse_network(const std::string& text) {
  std::istringstream in(text);
  return parse_network(in);
}

inline Network parse_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_network(in);
}

/// Deterministic text form: header, then one line per variable pair in
/// variable order, relations in bit order.
inline std::string format_network(const Network& n) {
  std::string out;
  out += "semantics: ";
  out += n.semantics().kind() == SemanticsKind::NeighbourInstants ? "neighbour" : "partition";
  out += "\nlength: " + std::to_string(n.semantics().length());
  out += "\nvars:";
  for (const std::string& v : n.vars()) out += " " + v;
  out += '\n';
  for (int x = 0; x < n.var_count(); ++x)
    for (int y = x + 1; y < n.var_count(); ++y)
      out += n.var_name(x) + " " + n.var_name(y) + " : " + to_string(n.rel(x, y)) + "\n";
  return out;
}

}  // namespace rcc8seq
