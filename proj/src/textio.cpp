#include "udelta/textio.hpp"

#include <sstream>
#include <vector>

namespace udelta {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw parse_error("empty rational literal");
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int num(s);
      return Rat(num);
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator: " + text);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal: " + text);
  }
}

std::string rat_string(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

RatMat parse_rat_matrix(const std::string& text) {
  std::vector<std::string> rows = split(strip(text), ';');
  if (rows.empty()) throw parse_error("empty matrix literal");
  std::vector<std::vector<Rat>> vals;
  for (const std::string& row : rows) {
    std::vector<Rat> entries;
    for (const std::string& e : split(row, ',')) entries.push_back(parse_rat(e));
    if (!vals.empty() && entries.size() != vals.front().size())
      throw parse_error("ragged matrix literal: " + text);
    vals.push_back(std::move(entries));
  }
  RatMat m(vals.size(), vals.front().size());
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = 0; j < vals[i].size(); ++j) m(i, j) = vals[i][j];
  return m;
}

std::string matrix_string(const RatMat& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << rat_string(m(i, j));
    }
  }
  return os.str();
}

namespace {

std::pair<RatMat, RatMat> parse_two_fields(const std::string& text,
                                           const std::string& first,
                                           const std::string& second) {
  std::string s = strip(text);
  if (s.rfind(first + "=", 0) != 0)
    throw parse_error("expected '" + first + "=': " + text);
  size_t cut = s.find(";" + second + "=");
  if (cut == std::string::npos)
    throw parse_error("expected ';" + second + "=': " + text);
  std::string a = s.substr(first.size() + 1, cut - first.size() - 1);
  std::string b = s.substr(cut + second.size() + 2);
  return {parse_rat_matrix(a), parse_rat_matrix(b)};
}

}  // namespace

std::pair<RatMat, RatMat> parse_siegel_text(const std::string& text) {
  return parse_two_fields(text, "re", "im");
}

std::pair<RatMat, RatMat> parse_lagrangian_text(const std::string& text) {
  return parse_two_fields(text, "x", "y");
}

}  // namespace udelta
