#include "orbit_rank/lie_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace orbit_rank {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

LieFile parse_lie_file(std::string_view text) {
  LieFile file;
  enum class Stage { header, dim, basis, brackets } stage = Stage::header;
  std::set<std::string> declared;
  std::set<std::pair<std::string, std::string>> seen_pairs;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    auto fail = [&](const Token& t, const std::string& what) -> LieSyntaxError { return {line, t.column, what}; };

    switch (stage) {
      case Stage::header:
        if (tok[0].text != "lie" || tok.size() != 2) throw fail(tok[0], "expected header 'lie 1'");
        if (tok[1].text != "1") throw fail(tok[1], "unsupported version '" + tok[1].text + "'");
        file.version = 1;
        stage = Stage::dim;
        break;
      case Stage::dim:
        if (tok[0].text != "dim" || tok.size() != 2) throw fail(tok[0], "expected 'dim <n>'");
        if (tok[1].text.empty() || tok[1].text.size() > 3 ||
            tok[1].text.find_first_not_of("0123456789") != std::string::npos) {
          throw fail(tok[1], "dimension must be a natural number below 1000, got '" + tok[1].text + "'");
        }
        file.dim = std::stoul(tok[1].text);
        stage = Stage::basis;
        break;
      case Stage::basis:
        if (tok[0].text != "basis") throw fail(tok[0], "expected 'basis <names...>'");
        if (tok.size() - 1 != file.dim) {
          throw fail(tok[0], "basis lists " + std::to_string(tok.size() - 1) + " names for dim " +
                                 std::to_string(file.dim));
        }
        for (std::size_t i = 1; i < tok.size(); ++i) {
          if (!is_identifier(tok[i].text)) throw fail(tok[i], "invalid basis name '" + tok[i].text + "'");
          if (!declared.insert(tok[i].text).second) throw fail(tok[i], "duplicate basis name '" + tok[i].text + "'");
          file.basis.push_back(tok[i].text);
        }
        stage = Stage::brackets;
        break;
      case Stage::brackets: {
        const std::string& head = tok[0].text;
        auto comma = head.find(',');
        if (head.size() < 5 || head.front() != '[' || head.back() != ']' || comma == std::string::npos) {
          throw fail(tok[0], "expected '[A,B]', got '" + head + "'");
        }
        LieFileBracket b;
        b.left = head.substr(1, comma - 1);
        b.right = head.substr(comma + 1, head.size() - comma - 2);
        for (const auto* name : {&b.left, &b.right}) {
          if (!declared.count(*name)) throw fail(tok[0], "undeclared basis name '" + *name + "'");
        }
        if (b.left == b.right) throw fail(tok[0], "bracket of '" + b.left + "' with itself");
        auto key = std::minmax(b.left, b.right);
        if (!seen_pairs.insert({key.first, key.second}).second) {
          throw fail(tok[0], "duplicate bracket [" + b.left + "," + b.right + "]");
        }
        if (tok.size() < 2 || tok[1].text != "=") throw fail(tok.size() < 2 ? tok[0] : tok[1], "expected '='");
        std::size_t i = 2;
        while (true) {
          if (i + 1 >= tok.size()) {
            throw fail(i < tok.size() ? tok[i] : tok.back(), "expected '<coefficient> <name>'");
          }
          Rat c;
          try {
            c = parse_rat(tok[i].text);
          } catch (const std::invalid_argument& e) {
            throw fail(tok[i], e.what());
          }
          if (!declared.count(tok[i + 1].text)) {
            throw fail(tok[i + 1], "undeclared basis name '" + tok[i + 1].text + "'");
          }
          b.terms.emplace_back(c, tok[i + 1].text);
          i += 2;
          if (i == tok.size()) break;
          if (tok[i].text != "+") throw fail(tok[i], "expected '+' between terms");
          ++i;
        }
        file.brackets.push_back(std::move(b));
        break;
      }
    }
  }
  if (stage != Stage::brackets) {
    throw LieSyntaxError(line + 1, 1, "unexpected end of file: header, dim and basis lines are required");
  }
  return file;
}

BracketTable to_bracket_table(const LieFile& file) {
  BracketTable t;
  t.dim = file.dim;
  t.names = file.basis;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < file.basis.size(); ++i) index[file.basis[i]] = i;
  for (const auto& b : file.brackets) {
    RatVec v(file.dim);
    for (const auto& [c, name] : b.terms) v[index.at(name)] += c;
    t.brackets[{index.at(b.left), index.at(b.right)}] = std::move(v);
  }
  return t;
}

LieAlgebra load_lie_algebra(std::string_view text) { return validate(to_bracket_table(parse_lie_file(text))); }

std::string render_lie_file(const LieAlgebra& L) {
  std::ostringstream os;
  os << "lie 1\n";
  os << "dim " << L.dim() << "\n";
  os << "basis";
  for (const auto& n : L.basis_names()) os << " " << n;
  os << "\n";
  const auto& names = L.basis_names();
  for (const auto& [key, v] : L.constants()) {
    os << "[" << names[key.first] << "," << names[key.second] << "] =";
    bool first = true;
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (is_zero(v[l])) continue;
      os << (first ? " " : " + ") << to_string(v[l]) << " " << names[l];
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace orbit_rank
