#include "waldkit/text_format.hpp"

#include "waldkit/error.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

namespace waldkit {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::pair<std::string_view, std::size_t>> split_words(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    const auto start = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    if (i > start) words.emplace_back(line.substr(start, i - start), start);
  }
  return words;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// Parses a monomial written on `line_no`; `offset` is the 0-based column of
// text[0] within its line.
Monomial parse_monomial_at(const ContextPtr& context, std::string_view text, std::size_t line_no,
                           std::size_t offset) {
  ExponentVector exps(context->size(), 0);
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& what) -> Monomial {
    throw ParseError(line_no, offset + at + 1, what);
  };
  auto skip_blank = [&] {
    while (i < text.size() && is_blank(text[i])) ++i;
  };

  skip_blank();
  if (i == text.size()) return fail(i, "expected a monomial");
  if (text[i] == '1') {
    ++i;
    skip_blank();
    if (i != text.size()) return fail(i, "unexpected text after '1'");
    return Monomial::one(context);
  }

  bool expect_factor = true;
  while (true) {
    skip_blank();
    if (i == text.size()) {
      if (expect_factor) return fail(i, "expected a variable after '*'");
      break;
    }
    if (text[i] == '*') {
      if (expect_factor) return fail(i, "unexpected '*'");
      ++i;
      expect_factor = true;
      continue;
    }
    // Longest variable name that matches at position i.
    std::size_t best_len = 0;
    std::size_t best_index = 0;
    for (std::size_t v = 0; v < context->size(); ++v) {
      const auto& name = context->name(v);
      if (name.size() > best_len && text.substr(i, name.size()) == name) {
        best_len = name.size();
        best_index = v;
      }
    }
    if (best_len == 0) return fail(i, "unknown variable");
    const auto var_col = i;
    i += best_len;
    skip_blank();
    std::uint64_t power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_blank();
      const auto start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) return fail(start, "expected an exponent after '^'");
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, power);
      if (ec != std::errc() || power > std::numeric_limits<Exponent>::max()) {
        return fail(start, "exponent out of range");
      }
    }
    const std::uint64_t total = exps[best_index] + power;
    if (total > std::numeric_limits<Exponent>::max()) return fail(var_col, "exponent out of range");
    exps[best_index] = static_cast<Exponent>(total);
    expect_factor = false;
  }
  return Monomial(context, std::move(exps));
}

} // namespace

Monomial parse_monomial(const ContextPtr& context, std::string_view text) {
  return parse_monomial_at(context, text, 1, 0);
}

MonomialIdeal parse_ideal(std::string_view text) {
  ContextPtr context;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size() || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!context) {
      const auto words = split_words(line);
      if (words.front().first != "vars") {
        throw ParseError(line_no, words.front().second + 1, "expected a 'vars' header line");
      }
      if (words.size() < 2) throw ParseError(line_no, line.size() + 1, "'vars' needs at least one name or a count");
      const auto& second = words[1].first;
      if (words.size() == 2 && std::isdigit(static_cast<unsigned char>(second[0]))) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(second.data(), second.data() + second.size(), n);
        if (ec != std::errc() || ptr != second.data() + second.size() || n == 0) {
          throw ParseError(line_no, words[1].second + 1, "invalid variable count");
        }
        context = make_context(n);
      } else {
        std::vector<std::string> names;
        for (std::size_t w = 1; w < words.size(); ++w) {
          if (!valid_name(words[w].first)) {
            throw ParseError(line_no, words[w].second + 1, "invalid variable name");
          }
          for (const auto& existing : names) {
            if (existing == words[w].first) {
              throw ParseError(line_no, words[w].second + 1, "duplicate variable name");
            }
          }
          names.emplace_back(words[w].first);
        }
        context = make_context(std::move(names));
      }
    } else {
      gens.push_back(parse_monomial_at(context, line, line_no, 0));
    }
    if (end == text.size()) break;
  }
  if (!context) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'vars' header line");
  return make_ideal(context, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars";
  for (const auto& n : ideal.context()->names()) out += " " + n;
  out += '\n';
  for (const auto& g : ideal.generators()) out += g.to_string() + '\n';
  return out;
}

} // namespace waldkit
