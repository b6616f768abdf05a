#include "ribbonmc/io.hpp"

#include <fstream>
#include <sstream>

namespace ribbonmc {

namespace {

bool is_rat_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (!isdigit(t[i]) && t[i] != '/') return false;
  return true;
}

// "<coef> <basis> + <coef> <basis> + ..." or "0"
Vec parse_sum(const CyclicComplex& cx, const std::vector<std::string>& toks, size_t from,
              int lineno) {
  Vec out(cx.dim(), Rat(0));
  if (from < toks.size() && toks[from] == "0" && from + 1 == toks.size()) return out;
  Rat coef(1);
  bool have_coef = false;
  for (size_t i = from; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (t == "+") {
      coef = 1;
      have_coef = false;
      continue;
    }
    if (is_rat_token(t)) {
      if (have_coef) throw ParseError("line " + std::to_string(lineno) + ": two coefficients");
      coef = parse_rat(t);
      have_coef = true;
      continue;
    }
    out[cx.name_index(t)] += coef;
    coef = 1;
    have_coef = false;
  }
  return out;
}

}  // namespace

CyclicDGA parse_dga(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  // first pass: basis and n
  CyclicDGA a;
  a.cx.n = INT32_MIN;
  std::vector<std::array<std::vector<std::string>, 1>> deferred;
  std::vector<std::pair<int, std::vector<std::string>>> body;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (toks.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": bad n");
      a.cx.n = std::stoi(toks[1]);
    } else if (toks[0] == "basis") {
      if (toks.size() != 4 || toks[2] != "deg")
        throw ParseError("line " + std::to_string(lineno) + ": bad basis");
      a.cx.names.push_back(toks[1]);
      a.cx.degs.push_back(std::stoi(toks[3]));
    } else {
      body.push_back({lineno, toks});
    }
  }
  if (a.cx.n == INT32_MIN) throw ParseError("missing pairing degree (n)");
  if (a.cx.names.empty()) throw ParseError("no basis declared");
  int n = a.cx.dim();
  a.cx.pairing = zero_mat(n, n);
  a.cx.d = zero_mat(n, n);
  a.mul.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
  for (auto& [ln, toks] : body) {
    try {
      if (toks[0] == "pair") {
        if (toks.size() != 4) throw ParseError("bad pair");
        a.cx.pairing[a.cx.name_index(toks[1])][a.cx.name_index(toks[2])] = parse_rat(toks[3]);
      } else if (toks[0] == "d") {
        if (toks.size() < 4 || toks[2] != "->") throw ParseError("bad d");
        int src = a.cx.name_index(toks[1]);
        Vec v = parse_sum(a.cx, toks, 3, ln);
        for (int i = 0; i < n; ++i) a.cx.d[i][src] = v[i];
      } else if (toks[0] == "mul") {
        if (toks.size() < 5 || toks[3] != "->") throw ParseError("bad mul");
        a.mul[a.cx.name_index(toks[1])][a.cx.name_index(toks[2])] =
            parse_sum(a.cx, toks, 4, ln);
      } else {
        throw ParseError("unknown directive " + toks[0]);
      }
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(ln) + ": " + e.what());
    }
  }
  return a;
}

std::string serialize_dga(const CyclicDGA& a) {
  std::ostringstream os;
  const auto& cx = a.cx;
  os << "n " << cx.n << "\n";
  for (int i = 0; i < cx.dim(); ++i)
    os << "basis " << cx.names[i] << " deg " << cx.degs[i] << "\n";
  for (int i = 0; i < cx.dim(); ++i)
    for (int j = 0; j < cx.dim(); ++j)
      if (cx.pairing[i][j] != 0)
        os << "pair " << cx.names[i] << " " << cx.names[j] << " "
           << to_string(cx.pairing[i][j]) << "\n";
  auto sum = [&](const Vec& v) {
    std::string s;
    for (int i = 0; i < cx.dim(); ++i) {
      if (v[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += to_string(v[i]) + " " + cx.names[i];
    }
    return s.empty() ? std::string("0") : s;
  };
  for (int j = 0; j < cx.dim(); ++j) {
    Vec dj(cx.dim());
    bool nz = false;
    for (int i = 0; i < cx.dim(); ++i) {
      dj[i] = cx.d[i][j];
      if (dj[i] != 0) nz = true;
    }
    if (nz) os << "d " << cx.names[j] << " -> " << sum(dj) << "\n";
  }
  for (int i = 0; i < cx.dim(); ++i)
    for (int j = 0; j < cx.dim(); ++j) {
      bool nz = false;
      for (const auto& t : a.mul[i][j])
        if (t != 0) nz = true;
      if (nz)
        os << "mul " << cx.names[i] << " " << cx.names[j] << " -> " << sum(a.mul[i][j])
           << "\n";
    }
  return os.str();
}

CyclicDGA load_dga_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dga(ss.str());
}

}  // namespace ribbonmc
