#include "lsb/lsa_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lsb {

namespace {

struct Line {
  int number;
  std::string text;
};

// Content lines with comments stripped and blank lines dropped. The stored
// text keeps its original columns for error positions.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({number, raw});
  }
  return out;
}

class LineParser {
 public:
  LineParser(const Line& line) : line_(line.number), s_(line.text), pos_(0) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw LsaSyntaxError(line_, col(), std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) throw LsaSyntaxError(line_, col(), "expected an identifier");
    return s_.substr(start, pos_ - start);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) throw LsaSyntaxError(line_, col(), "expected an integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }
  bool looks_like_number() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if ((c == '-' || c == '+') && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
      return true;
    return false;
  }
  int col() { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }

 private:
  int line_;
  std::string s_;
  std::size_t pos_;
};

}  // namespace

LieSuperAlgebra parse_lsa(const std::string& text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.size() < 3) throw LsaSyntaxError(1, 1, "expected field, even and odd header lines");

  // Header: field, even, odd — in that order.
  LineParser fp(lines[0]);
  if (fp.identifier() != "field") throw LsaSyntaxError(fp.line(), fp.col(), "expected 'field'");
  Field field = Field::rationals();
  if (fp.looks_like_number()) {
    std::int64_t p = fp.integer();
    try {
      field = Field::prime(p);
    } catch (const FieldError& e) {
      throw LsaSyntaxError(fp.line(), fp.col(), e.what());
    }
  } else if (fp.identifier() != "rational") {
    throw LsaSyntaxError(fp.line(), fp.col(), "expected a prime modulus or 'rational'");
  }
  if (!fp.at_end()) throw LsaSyntaxError(fp.line(), fp.col(), "trailing input after field");

  auto name_list = [](const Line& line, const std::string& keyword) {
    LineParser p(line);
    if (p.identifier() != keyword)
      throw LsaSyntaxError(p.line(), p.col(), "expected '" + keyword + "'");
    std::vector<std::string> names;
    while (!p.at_end()) names.push_back(p.identifier());
    return names;
  };
  std::vector<std::string> even_names = name_list(lines[1], "even");
  std::vector<std::string> odd_names = name_list(lines[2], "odd");

  GradedDim dims{static_cast<int>(even_names.size()), static_cast<int>(odd_names.size())};
  std::vector<std::string> names = even_names;
  names.insert(names.end(), odd_names.begin(), odd_names.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (index.count(names[i]))
      throw LsaSyntaxError(lines[1].number, 1, "duplicate basis name '" + names[i] + "'");
    index[names[i]] = static_cast<int>(i);
  }

  // Bracket lines.
  const int n = dims.total();
  std::map<std::pair<int, int>, std::vector<Value>> given;
  for (std::size_t li = 3; li < lines.size(); ++li) {
    LineParser p(lines[li]);
    p.expect('[');
    std::string na = p.identifier();
    p.expect(',');
    std::string nb = p.identifier();
    p.expect(']');
    p.expect('=');
    auto lookup = [&](const std::string& nm) {
      auto it = index.find(nm);
      if (it == index.end())
        throw LsaSyntaxError(p.line(), p.col(), "unknown basis name '" + nm + "'");
      return it->second;
    };
    int i = lookup(na), j = lookup(nb);

    std::vector<Value> coeffs(n, field.zero());
    bool negate = false;
    bool first = true;
    while (true) {
      if (first) {
        negate = p.accept('-');
        first = false;
      }
      Value c = field.one();
      bool have_coeff = false;
      if (p.looks_like_number()) {
        std::int64_t num = p.integer();
        std::int64_t den = 1;
        if (p.accept('/')) den = p.integer();
        try {
          c = field.from_ratio(num, den);
        } catch (const FieldError& e) {
          throw LsaSyntaxError(p.line(), p.col(), e.what());
        }
        have_coeff = true;
      }
      if (have_coeff && !p.accept('*')) {
        // A bare number is only legal as the single term "0".
        if (!field.is_zero(c))
          throw LsaSyntaxError(p.line(), p.col(), "expected '*name' after coefficient");
      } else {
        std::string nm = p.identifier();
        auto it = index.find(nm);
        if (it == index.end())
          throw LsaSyntaxError(p.line(), p.col(), "unknown basis name '" + nm + "'");
        if (negate) c = field.neg(c);
        coeffs[it->second] = field.add(coeffs[it->second], c);
      }
      if (p.at_end()) break;
      if (p.accept('+')) {
        negate = false;
        continue;
      }
      if (p.accept('-')) {
        negate = true;
        continue;
      }
      throw LsaSyntaxError(p.line(), p.col(), "expected '+', '-' or end of line");
    }

    auto key = std::make_pair(i, j);
    if (given.count(key))
      throw LsaSyntaxError(p.line(), 1, "duplicate bracket [" + na + "," + nb + "]");
    given[key] = std::move(coeffs);
  }

  // Assemble the full tensor; both orders of a pair must agree with the sign
  // rule when both appear.
  StructureTensor t(field, dims);
  auto both_odd = [&](int i, int j) {
    return dims.parity(i) == Parity::odd && dims.parity(j) == Parity::odd;
  };
  std::set<std::pair<int, int>> done;
  for (const auto& [key, coeffs] : given) {
    auto [i, j] = key;
    if (done.count({j, i}) || done.count({i, j})) continue;
    if (i == j) {
      t.set_bracket(i, i, coeffs);
      done.insert(key);
      continue;
    }
    auto rev = given.find({j, i});
    if (rev != given.end()) {
      for (int k = 0; k < n; ++k) {
        Value expect = both_odd(i, j) ? coeffs[k] : field.neg(coeffs[k]);
        if (!(rev->second[k] == expect))
          throw AxiomError(AxiomViolation{Axiom::skew_symmetry, j, i, k,
                                          "[" + names[j] + "," + names[i] +
                                              "] inconsistent with the sign rule applied to [" +
                                              names[i] + "," + names[j] + "]"});
      }
    }
    if (i < j)
      t.set_bracket(i, j, coeffs);
    else {
      // store the reverse through the sign rule
      std::vector<Value> flipped(n, field.zero());
      for (int k = 0; k < n; ++k)
        flipped[k] = both_odd(i, j) ? coeffs[k] : field.neg(coeffs[k]);
      t.set_bracket(j, i, flipped);
    }
    done.insert(key);
    done.insert({j, i});
  }

  return LieSuperAlgebra::from_tensor(t, std::move(names));
}

std::string serialize_lsa(const LieSuperAlgebra& L) {
  const Field& f = L.field();
  std::ostringstream out;
  out << "field " << (f.is_prime() ? std::to_string(f.modulus()) : std::string("rational"))
      << "\n";
  out << "even";
  for (int i = 0; i < L.dims().even; ++i) out << " " << L.names()[i];
  out << "\nodd";
  for (int i = L.dims().even; i < L.n(); ++i) out << " " << L.names()[i];
  out << "\n";
  for (int i = 0; i < L.n(); ++i)
    for (int j = i; j < L.n(); ++j) {
      bool nonzero = false;
      for (int k = 0; k < L.n() && !nonzero; ++k) nonzero = !f.is_zero(L.sc(i, j, k));
      if (!nonzero) continue;
      out << "[" << L.names()[i] << "," << L.names()[j] << "] =";
      bool first = true;
      for (int k = 0; k < L.n(); ++k) {
        Value c = L.sc(i, j, k);
        if (f.is_zero(c)) continue;
        out << (first ? " " : " + ") << f.to_string(c) << "*" << L.names()[k];
        first = false;
      }
      out << "\n";
    }
  return out.str();
}

LieSuperAlgebra load_lsa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lsa(buf.str());
}

void save_lsa_file(const LieSuperAlgebra& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << serialize_lsa(L);
}

}  // namespace lsb
