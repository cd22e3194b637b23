#include "chered/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "chered/error.hpp"

namespace chered {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Splits on sep at zero parenthesis/bracket depth, trimming pieces.
std::vector<std::string> split_depth0(const std::string& s, char sep, int line) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) throw ConfigError("unbalanced bracket", line);
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (depth != 0) throw ConfigError("unbalanced bracket", line);
  out.push_back(trim(cur));
  return out;
}

Rational parse_rational(const std::string& tok, int line) {
  std::string t = trim(tok);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  if (t.empty()) throw ConfigError("empty rational literal", line);
  for (char ch : t)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
      throw ConfigError("malformed rational literal '" + t + "'", line);
  try {
    Rational r(t);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw ConfigError("malformed rational literal '" + t + "'", line);
  }
}

Cyclotomic parse_cyclotomic(const std::string& tok, int line) {
  const std::string t = trim(tok);
  if (t.size() >= 2 && (t[0] == 'c' || t[0] == 'C') && t[1] == '(') {
    if (t.back() != ')') throw ConfigError("malformed cyclotomic literal '" + t + "'", line);
    const std::string body = t.substr(2, t.size() - 3);
    const std::size_t semi = body.find(';');
    if (semi == std::string::npos)
      throw ConfigError("cyclotomic literal needs 'c(N; a0, ...)'", line);
    const std::string head = trim(body.substr(0, semi));
    unsigned n = 0;
    try {
      n = static_cast<unsigned>(std::stoul(head));
    } catch (const std::exception&) {
      throw ConfigError("malformed conductor '" + head + "'", line);
    }
    std::vector<Rational> coeffs;
    for (const std::string& piece : split_depth0(body.substr(semi + 1), ',', line))
      coeffs.push_back(parse_rational(piece, line));
    try {
      return Cyclotomic(n, std::move(coeffs));
    } catch (const Error& e) {
      throw ConfigError(std::string("bad cyclotomic literal: ") + e.what(), line);
    }
  }
  return Cyclotomic(parse_rational(t, line));
}

double parse_double(const std::string& tok, int line) {
  const std::string t = trim(tok);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ConfigError("malformed number '" + t + "'", line);
  }
  if (used != t.size()) throw ConfigError("malformed number '" + t + "'", line);
  return v;
}

Complex parse_complex(const std::string& tok, int line) {
  std::string t = trim(tok);
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw ConfigError("empty complex literal", line);
  if (t.back() != 'i' && t.back() != 'I') return Complex(parse_double(t, line), 0);
  t.pop_back();
  // Split at the last +/- that is not an exponent sign and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t p = t.size(); p-- > 1;) {
    if ((t[p] == '+' || t[p] == '-') && t[p - 1] != 'e' && t[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) {
    if (t.empty() || t == "+" || t == "-") t += "1";
    return Complex(0, parse_double(t, line));
  }
  std::string im = t.substr(split);
  if (im == "+" || im == "-") im += "1";
  return Complex(parse_double(t.substr(0, split), line), parse_double(im, line));
}

CycMatrix parse_matrix(const std::string& tok, int line) {
  const std::string t = trim(tok);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ConfigError("matrix literal needs '[a, b; c, d]'", line);
  std::vector<CycVector> rows;
  std::size_t width = 0;
  for (const std::string& row : split_depth0(t.substr(1, t.size() - 2), ';', line)) {
    CycVector entries;
    for (const std::string& piece : split_depth0(row, ',', line))
      entries.push_back(parse_cyclotomic(piece, line));
    if (width == 0) width = entries.size();
    if (entries.size() != width) throw ConfigError("ragged matrix literal", line);
    rows.push_back(std::move(entries));
  }
  return CycMatrix::from_rows(rows);
}

/// Param keys look like orbit3 or h12.
template <typename Scalar>
ParamEntry<Scalar> parse_param_key(const std::string& key, int line) {
  ParamEntry<Scalar> e;
  e.line = line;
  std::string digits;
  if (key.rfind("orbit", 0) == 0) {
    digits = key.substr(5);
  } else if (key.size() > 1 && key[0] == 'h') {
    e.per_hyperplane = true;
    digits = key.substr(1);
  } else {
    throw ConfigError("parameter key must be orbitN or hN, got '" + key + "'", line);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ConfigError("parameter key must end in an index, got '" + key + "'", line);
  try {
    e.index = static_cast<unsigned>(std::stoul(digits));
  } catch (const std::exception&) {
    throw ConfigError("parameter index out of range in '" + key + "'", line);
  }
  return e;
}

template <typename Scalar>
void fold_entries(const ReflectionGroup& W, const std::vector<ParamEntry<Scalar>>& entries,
                  std::vector<std::vector<Scalar>>& by_orbit) {
  const auto& orbits = W.hyperplane_orbits();
  by_orbit.clear();
  std::vector<int> set_by_line(orbits.size(), 0);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    by_orbit.emplace_back(W.hyperplanes()[orbits[o].front()].order, Scalar{});
  for (const auto& e : entries) {
    unsigned orbit = e.index;
    if (e.per_hyperplane) {
      if (e.index >= W.hyperplanes().size())
        throw ConfigError("hyperplane index out of range", e.line);
      orbit = static_cast<unsigned>(W.hyperplanes()[e.index].orbit);
    } else if (e.index >= orbits.size()) {
      throw ConfigError("orbit index out of range", e.line);
    }
    if (e.values.size() != by_orbit[orbit].size())
      throw ConfigError("parameter sequence length differs from m_H", e.line);
    if (set_by_line[orbit] != 0 && by_orbit[orbit] != e.values)
      throw ConfigError("parameters differ within hyperplane orbit " + std::to_string(orbit) +
                            " (also set at line " + std::to_string(set_by_line[orbit]) + ")",
                        e.line);
    by_orbit[orbit] = e.values;
    set_by_line[orbit] = e.line;
  }
}

}  // namespace

ReflectionGroup RunConfig::build_group() const {
  if (!generators.empty()) return ReflectionGroup::from_generators(generators);
  return ReflectionGroup::preset(preset);
}

ParameterSet RunConfig::exact_params(const ReflectionGroup& W) const {
  ParameterSet k = ParameterSet::zero(W);
  fold_entries(W, params, k.by_orbit);
  k.validate(W);
  return k;
}

ComplexParams RunConfig::complex_params(const ReflectionGroup& W) const {
  if (monodromy_params.empty()) return ComplexParams::from_exact(W, exact_params(W));
  ComplexParams k = ComplexParams::zero(W);
  fold_entries(W, monodromy_params, k.by_orbit);
  k.validate(W);
  return k;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool preset_set = false;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("malformed section header", line);
      section = trim(s.substr(1, s.size() - 2));
      if (section != "group" && section != "w0" && section != "params" &&
          section != "monodromy" && section.rfind("irreps.", 0) != 0)
        throw ConfigError("unknown section [" + section + "]", line);
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty() || val.empty()) throw ConfigError("expected key = value", line);

    // Scalar settings are recognized anywhere, so configs can keep them at
    // the end without opening a dedicated section.
    if (key == "degree") {
      cfg.degree = static_cast<unsigned>(parse_double(val, line));
      continue;
    } else if (key == "tol") {
      cfg.tol = parse_double(val, line);
      if (cfg.tol <= 0) throw ConfigError("tol must be positive", line);
      continue;
    } else if (key == "seed") {
      cfg.seed = static_cast<unsigned long>(parse_double(val, line));
      continue;
    } else if (key == "conductor_cap") {
      Cyclotomic::set_conductor_cap(static_cast<unsigned>(parse_double(val, line)));
      continue;
    }
    if (section.empty()) {
      throw ConfigError("unknown top-level key '" + key + "'", line);
    } else if (section == "group") {
      if (key == "preset") {
        if (preset_set) throw ConfigError("preset given twice", line);
        cfg.preset = val;
        preset_set = true;
      } else if (key == "generator") {
        cfg.generators.push_back(parse_matrix(val, line));
      } else {
        throw ConfigError("unknown [group] key '" + key + "'", line);
      }
    } else if (section == "w0") {
      if (key != "hyperplanes") throw ConfigError("unknown [w0] key '" + key + "'", line);
      for (const std::string& piece : split_depth0(val, ',', line)) {
        const Rational r = parse_rational(piece, line);
        if (r.get_den() != 1 || r < 0) throw ConfigError("hyperplane ids are nonnegative", line);
        cfg.w0_hyperplanes.push_back(static_cast<int>(r.get_num().get_si()));
      }
    } else if (section == "params") {
      auto e = parse_param_key<Rational>(key, line);
      for (const std::string& piece : split_depth0(val, ',', line))
        e.values.push_back(parse_rational(piece, line));
      cfg.params.push_back(std::move(e));
    } else if (section == "monodromy") {
      auto e = parse_param_key<Complex>(key, line);
      for (const std::string& piece : split_depth0(val, ',', line))
        e.values.push_back(parse_complex(piece, line));
      cfg.monodromy_params.push_back(std::move(e));
    } else {  // irreps.NAME
      if (key != "generator")
        throw ConfigError("unknown [" + section + "] key '" + key + "'", line);
      cfg.irrep_fixtures[section.substr(7)].push_back(parse_matrix(val, line));
    }
  }
  if (preset_set && !cfg.generators.empty())
    throw ConfigError("give either a preset or generator matrices, not both");
  if (!preset_set && cfg.generators.empty())
    throw ConfigError("config must name a group: set [group] preset or generator matrices");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace chered
