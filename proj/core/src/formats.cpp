#include "moufang/formats.hpp"

#include <cctype>
#include <charconv>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "moufang/error.hpp"

namespace moufang {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t const eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t const start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos > start) parsed.tokens.push_back(line.substr(start, pos - start));
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::size_t parse_positive(std::string_view token, std::size_t line, char const* what) {
  std::size_t const v = parse_index(token, line);
  if (v == 0) throw ParseError(line, std::string(what) + " must be positive");
  return v;
}

std::size_t end_line(std::vector<Line> const& lines) {
  return lines.empty() ? 1 : lines.back().number + 1;
}

}  // namespace

CayleyTable parse_cayley(std::string_view text) {
  auto const lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing order line");
  if (lines[0].tokens.size() != 1) throw ParseError(lines[0].number, "expected the order n alone");
  std::size_t const n = parse_positive(lines[0].tokens[0], lines[0].number, "order");
  if (lines.size() != n + 1) {
    std::size_t const at = lines.size() < n + 1 ? end_line(lines) : lines[n + 1].number;
    throw ParseError(at, "expected " + std::to_string(n) + " table rows, found " +
                             std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Element>> rows(n);
  for (std::size_t g = 0; g < n; ++g) {
    Line const& line = lines[g + 1];
    if (line.tokens.size() != n) {
      throw ParseError(line.number, "expected " + std::to_string(n) + " entries, found " +
                                        std::to_string(line.tokens.size()));
    }
    for (auto token : line.tokens) {
      Element const v = parse_index(token, line.number);
      if (v >= n) {
        throw ParseError(line.number, "entry " + std::to_string(v) + " is not below " +
                                          std::to_string(n));
      }
      rows[g].push_back(v);
    }
  }
  return CayleyTable(rows);
}

std::string emit_cayley(CayleyTable const& tbl) {
  std::ostringstream out;
  out << tbl.order() << '\n';
  for (Element g = 0; g < tbl.order(); ++g) {
    auto row = tbl.row(g);
    for (std::size_t h = 0; h < row.size(); ++h) out << (h ? " " : "") << row[h];
    out << '\n';
  }
  return out.str();
}

TranslationTriple parse_triple(std::string_view text) {
  auto const lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  if (lines[0].tokens.size() != 2) throw ParseError(lines[0].number, "expected header 'n m'");
  std::size_t const n = parse_positive(lines[0].tokens[0], lines[0].number, "n");
  std::size_t const m = parse_positive(lines[0].tokens[1], lines[0].number, "m");
  if (lines.size() != 3 * n + 1) {
    std::size_t const at = lines.size() < 3 * n + 1 ? end_line(lines) : lines[3 * n + 1].number;
    throw ParseError(at, "expected " + std::to_string(3 * n) + " map lines, found " +
                             std::to_string(lines.size() - 1));
  }
  constexpr char letters[] = {'S', 'T', 'P'};
  std::vector<Perm> maps[3];
  for (std::size_t i = 0; i < 3 * n; ++i) {
    Line const& line = lines[i + 1];
    Element const g = i / 3;
    char const letter = letters[i % 3];
    std::span<std::string_view const> tokens = line.tokens;
    if (!tokens.empty() && !tokens[0].empty() && std::isalpha(static_cast<unsigned char>(tokens[0][0]))) {
      if (tokens[0] != std::string_view(&letter, 1)) {
        throw ParseError(line.number, "expected map " + std::string(1, letter) + " of element " +
                                          std::to_string(g) + ", got '" + std::string(tokens[0]) + "'");
      }
      tokens = tokens.subspan(1);
    }
    if (tokens.size() != m) {
      throw ParseError(line.number, std::string(1, letter) + " of element " + std::to_string(g) +
                                        ": expected " + std::to_string(m) + " images, found " +
                                        std::to_string(tokens.size()));
    }
    std::vector<std::size_t> images;
    images.reserve(m);
    for (auto token : tokens) images.push_back(parse_index(token, line.number));
    try {
      maps[i % 3].emplace_back(std::move(images));
    } catch (Error const& e) {
      throw ParseError(line.number, std::string(1, letter) + " of element " + std::to_string(g) +
                                        " is not a bijection: " + e.what());
    }
  }
  return TranslationTriple(std::move(maps[0]), std::move(maps[1]), std::move(maps[2]));
}

std::string emit_triple(TranslationTriple const& triple) {
  std::ostringstream out;
  out << triple.size() << ' ' << triple.degree() << '\n';
  auto write = [&out](char letter, Perm const& p) {
    out << letter;
    for (std::size_t x : p.images()) out << ' ' << x;
    out << '\n';
  };
  for (Element g = 0; g < triple.size(); ++g) {
    write('S', triple.s(g));
    write('T', triple.t(g));
    write('P', triple.p(g));
  }
  return out.str();
}

}  // namespace moufang
