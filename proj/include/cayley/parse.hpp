#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/numeric.hpp"
#include "cayley/subset.hpp"

namespace cayley {

std::pair<std::vector<std::vector<int>>, std::vector<std::string>>
read_cayley_table(std::istream& in);

namespace detail {

/// Single-line cursor with 1-based column tracking for located errors.
class Cursor {
public:
  explicit Cursor(std::string_view s, int column_offset = 0)
      : s_(s), offset_(column_offset) {}

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  char get() { return eof() ? '\0' : s_[pos_++]; }
  int column() const { return offset_ + static_cast<int>(pos_) + 1; }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", 1, column());
    ++pos_;
  }

  bool try_consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_spaces() {
    while (!eof() && s_[pos_] == ' ') ++pos_;
  }

  std::string take_while(bool (*pred)(char)) {
    std::string out;
    while (!eof() && pred(s_[pos_])) out += s_[pos_++];
    return out;
  }

  int parse_int() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", 1, column());
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 100'000'000) throw ParseError("number too large", 1, column());
    }
    return static_cast<int>(v);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int offset_ = 0;
};

inline bool is_ident_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

inline bool is_path_char(char c) { return c != ',' && c != ')'; }

GroupPtr parse_group_at(Cursor& cur);

inline std::vector<std::vector<int>> parse_perm_generators(Cursor& cur) {
  // [(0 1 2)(3 4),(0 3)] — comma-separated generators, each a run of cycles
  cur.expect('[');
  std::vector<std::vector<std::vector<int>>> gens;  // generator -> cycles
  int degree = 0;
  for (;;) {
    std::vector<std::vector<int>> cycles;
    while (cur.try_consume('(')) {
      std::vector<int> cycle;
      cur.skip_spaces();
      while (!cur.try_consume(')')) {
        int v = cur.parse_int();
        cycle.push_back(v);
        degree = std::max(degree, v + 1);
        cur.skip_spaces();
      }
      if (cycle.empty()) throw ParseError("empty cycle", 1, cur.column());
      cycles.push_back(std::move(cycle));
    }
    if (cycles.empty())
      throw ParseError("expected a cycle '(...)'", 1, cur.column());
    gens.push_back(std::move(cycles));
    if (cur.try_consume(',')) continue;
    cur.expect(']');
    break;
  }
  std::vector<std::vector<int>> perms;
  perms.reserve(gens.size());
  for (const auto& cycles : gens) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    for (const auto& cycle : cycles)
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i];
        int to = cycle[(i + 1) % cycle.size()];
        if (img[static_cast<std::size_t>(from)] != from)
          throw ParseError("element " + std::to_string(from) +
                               " appears twice in one generator",
                           1, cur.column());
        img[static_cast<std::size_t>(from)] = to;
      }
    perms.push_back(std::move(img));
  }
  return perms;
}

inline GroupPtr parse_group_at(Cursor& cur) {
  const int start = cur.column();
  std::string name = cur.take_while(is_ident_char);
  if (name == "cyclic") {
    cur.expect(':');
    return Group::cyclic(cur.parse_int());
  }
  if (name == "ea") {
    cur.expect(':');
    int p = cur.parse_int();
    cur.expect(',');
    int k = cur.parse_int();
    return Group::elementary_abelian(p, k);
  }
  if (name == "dihedral") {
    cur.expect(':');
    return Group::dihedral(cur.parse_int());
  }
  if (name == "sym") {
    cur.expect(':');
    return Group::symmetric(cur.parse_int());
  }
  if (name == "prod") {
    cur.expect('(');
    GroupPtr a = parse_group_at(cur);
    cur.expect(',');
    GroupPtr b = parse_group_at(cur);
    cur.expect(')');
    return Group::direct_product(a, b);
  }
  if (name == "table") {
    cur.expect(':');
    std::string path = cur.take_while(is_path_char);
    if (path.empty()) throw ParseError("expected a file path", 1, cur.column());
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file: " + path);
    auto [table, labels] = read_cayley_table(in);
    return Group::from_cayley_table(table, std::move(labels), "table:" + path);
  }
  if (name == "perm") {
    cur.expect(':');
    auto gens = parse_perm_generators(cur);
    return Group::from_permutations(gens);
  }
  throw ParseError("unknown group constructor '" + name + "'", 1, start);
}

}  // namespace detail

/// Text Cayley-table format: a line "order n", then n rows of n indices,
/// then an optional "labels ..." line.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::string>>
read_cayley_table(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_tokens = [&](std::vector<std::pair<std::string, int>>& toks) -> bool {
    toks.clear();
    while (std::getline(in, line)) {
      ++lineno;
      for (std::size_t i = 0; i < line.size();) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        toks.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
        i = j;
      }
      if (!toks.empty()) return true;
    }
    return false;
  };
  auto to_index = [&](const std::pair<std::string, int>& tok) {
    for (char c : tok.first)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("expected a number, got '" + tok.first + "'", lineno, tok.second);
    if (tok.first.size() > 9)
      throw ParseError("number too large: '" + tok.first + "'", lineno, tok.second);
    return std::stoi(tok.first);
  };

  std::vector<std::pair<std::string, int>> toks;
  if (!next_tokens(toks)) throw ParseError("empty table file", 1, 1);
  if (toks.size() != 2 || toks[0].first != "order")
    throw ParseError("first line must be 'order n'", lineno, toks[0].second);
  const int n = to_index(toks[1]);
  if (n < 1) throw ParseError("order must be >= 1", lineno, toks[1].second);

  std::vector<std::vector<int>> table;
  for (int r = 0; r < n; ++r) {
    if (!next_tokens(toks))
      throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                           std::to_string(r),
                       lineno + 1, 1);
    if (static_cast<int>(toks.size()) != n)
      throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(n),
                       lineno, toks[0].second);
    std::vector<int> row;
    row.reserve(toks.size());
    for (const auto& t : toks) row.push_back(to_index(t));
    table.push_back(std::move(row));
  }

  std::vector<std::string> labels;
  if (next_tokens(toks)) {
    if (toks[0].first != "labels")
      throw ParseError("unexpected line after table (did you mean 'labels ...'?)", lineno,
                       toks[0].second);
    if (static_cast<int>(toks.size()) != n + 1)
      throw ParseError("expected " + std::to_string(n) + " labels, got " +
                           std::to_string(toks.size() - 1),
                       lineno, toks[0].second);
    for (std::size_t i = 1; i < toks.size(); ++i) labels.push_back(toks[i].first);
    if (next_tokens(toks))
      throw ParseError("unexpected content after labels line", lineno, toks[0].second);
  }
  return {std::move(table), std::move(labels)};
}

/// Constructor descriptor grammar: cyclic:6, ea:3,3, dihedral:4, sym:3,
/// prod(cyclic:2,cyclic:2), table:PATH, perm:[(0 1 2)(3 4),(0 3)].
inline GroupPtr parse_group(std::string_view descriptor) {
  detail::Cursor cur(descriptor);
  GroupPtr g = detail::parse_group_at(cur);
  if (!cur.eof())
    throw ParseError("unexpected trailing characters", 1, cur.column());
  return g;
}

/// Subset literal: comma-separated element indices or labels, `all` for the
/// whole group, `comp:<literal>` for a complement.
inline Subset parse_subset(std::string_view literal, const GroupPtr& g,
                           int column_offset = 0) {
  if (literal == "all") return Subset::full(g);
  if (literal.substr(0, 5) == "comp:")
    return complement(parse_subset(literal.substr(5), g, column_offset + 5));
  if (literal.empty())
    throw ParseError("empty subset literal", 1, column_offset + 1);
  Bitset m(g->order());
  std::size_t start = 0;
  while (start <= literal.size()) {
    std::size_t end = literal.find(',', start);
    if (end == std::string_view::npos) end = literal.size();
    std::string_view tok = literal.substr(start, end - start);
    const int col = column_offset + static_cast<int>(start) + 1;
    if (tok.empty()) throw ParseError("empty element token", 1, col);
    bool numeric = true;
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
    if (numeric) {
      if (tok.size() > 9) throw ParseError("element index too large", 1, col);
      long v = std::stol(std::string(tok));
      if (v >= g->order())
        throw ParseError("element index " + std::string(tok) +
                             " out of range for group of order " +
                             std::to_string(g->order()),
                         1, col);
      m.set(static_cast<int>(v));
    } else {
      bool found = false;
      for (int i = 0; i < g->order() && !found; ++i)
        if (g->has_labels() && g->labels()[static_cast<std::size_t>(i)] == tok) {
          m.set(i);
          found = true;
        }
      if (!found)
        throw ParseError("unknown element label '" + std::string(tok) + "'", 1, col);
    }
    if (end == literal.size()) break;
    start = end + 1;
  }
  return {g, std::move(m)};
}

/// Exact rational from "3", "1/1000", "0.001" or "1e-3" forms.
inline Rational parse_rational(std::string_view s) {
  detail::Cursor cur(s);
  bool neg = cur.try_consume('-');
  if (!neg) cur.try_consume('+');
  std::string digits = cur.take_while([](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
  std::string frac;
  if (cur.try_consume('.'))
    frac = cur.take_while([](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
  if (digits.empty() && frac.empty())
    throw ParseError("expected a number", 1, cur.column());

  if (cur.try_consume('/')) {
    if (!frac.empty()) throw ParseError("fraction with a decimal numerator", 1, cur.column());
    std::string den = cur.take_while([](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
    if (den.empty()) throw ParseError("expected a denominator", 1, cur.column());
    if (!cur.eof()) throw ParseError("unexpected trailing characters", 1, cur.column());
    BigInt num(digits), d(den);
    if (d == 0) throw ParseError("zero denominator", 1, cur.column());
    Rational r(num, d);
    return neg ? Rational(-r) : r;
  }

  long exp10 = 0;
  if (cur.try_consume('e') || cur.try_consume('E')) {
    bool eneg = cur.try_consume('-');
    if (!eneg) cur.try_consume('+');
    std::string ed = cur.take_while([](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
    if (ed.empty()) throw ParseError("expected an exponent", 1, cur.column());
    exp10 = std::stol(ed);
    if (exp10 > 10000) throw ParseError("exponent too large", 1, cur.column());
    if (eneg) exp10 = -exp10;
  }
  if (!cur.eof()) throw ParseError("unexpected trailing characters", 1, cur.column());

  BigInt mantissa((digits.empty() ? "0" : digits) + frac);
  exp10 -= static_cast<long>(frac.size());
  BigInt num = mantissa, den = 1;
  for (long i = 0; i < exp10; ++i) num *= 10;
  for (long i = 0; i < -exp10; ++i) den *= 10;
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace cayley
