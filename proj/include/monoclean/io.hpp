#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "monoclean/complexes.hpp"
#include "monoclean/stanley.hpp"

namespace monoclean {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parsed contents of an input file. The grammar is line-based:
///   vars: x y z
///   gen: x^2*y
///   adjoin: x*y          (filtration files)
///   space: x^2 | x y     (decomposition files; "-" for an empty Z)
/// with '#' starting a comment.
struct InputFile {
  VariableSet vars;
  std::vector<Monomial> gens;
  std::vector<Monomial> adjoins;
  std::vector<StanleySpace> spaces;
  bool has_adjoins = false;
  bool has_spaces = false;

  MonomialIdeal ideal() const { return MonomialIdeal(vars, gens); }
  PrimeFiltration filtration() const { return PrimeFiltration(ideal(), adjoins); }
  StanleyDecomposition decomposition() const { return StanleyDecomposition{ideal(), spaces}; }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

inline Monomial parse_monomial(const std::string& text, const VariableSet& vars) {
  std::vector<Exponent> exponents(vars.size(), 0);
  if (text == "1") return Monomial(std::move(exponents));
  std::string factor;
  std::istringstream in(text);
  while (std::getline(in, factor, '*')) {
    if (factor.empty()) throw ParseError("empty factor in monomial '" + text + "'");
    std::string name = factor;
    Exponent power = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      std::string exp_text = factor.substr(caret + 1);
      if (exp_text.empty() || exp_text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad exponent in factor '" + factor + "'");
      power = Exponent(exp_text);
    }
    int index = vars.index_of(name);
    if (index < 0) throw ParseError("unknown variable '" + name + "'");
    exponents[index] += power;
  }
  return Monomial(std::move(exponents));
}

}  // namespace detail

inline InputFile parse_input(std::istream& in) {
  InputFile file;
  bool have_vars = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens.front();
    auto rest = std::vector<std::string>(tokens.begin() + 1, tokens.end());
    auto at = [&](const std::string& msg) {
      return ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (head == "vars:") {
      if (have_vars) throw at("duplicate vars line");
      if (rest.empty()) throw at("vars line needs at least one variable");
      try {
        file.vars = VariableSet(rest);
      } catch (const std::invalid_argument& e) {
        throw at(e.what());
      }
      have_vars = true;
    } else if (head == "gen:" || head == "adjoin:") {
      if (!have_vars) throw at("vars line must come first");
      if (rest.size() != 1) throw at(head + " expects exactly one monomial");
      Monomial m = detail::parse_monomial(rest[0], file.vars);
      if (head == "gen:") {
        file.gens.push_back(std::move(m));
      } else {
        file.adjoins.push_back(std::move(m));
        file.has_adjoins = true;
      }
    } else if (head == "space:") {
      if (!have_vars) throw at("vars line must come first");
      auto bar = std::find(rest.begin(), rest.end(), "|");
      if (bar == rest.end() || bar != rest.begin() + 1)
        throw at("space line is '<monomial> | <vars or ->'");
      StanleySpace space;
      space.u = detail::parse_monomial(rest[0], file.vars);
      std::vector<int> zvars;
      for (auto it = bar + 1; it != rest.end(); ++it) {
        if (*it == "-") continue;
        int index = file.vars.index_of(*it);
        if (index < 0) throw at("unknown variable '" + *it + "'");
        zvars.push_back(index);
      }
      std::sort(zvars.begin(), zvars.end());
      zvars.erase(std::unique(zvars.begin(), zvars.end()), zvars.end());
      space.zvars = std::move(zvars);
      file.spaces.push_back(std::move(space));
      file.has_spaces = true;
    } else {
      throw at("unknown directive '" + head + "'");
    }
  }
  if (!have_vars) throw ParseError("missing vars line");
  return file;
}

inline InputFile parse_input_string(const std::string& text) {
  std::istringstream in(text);
  return parse_input(in);
}

inline InputFile parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_input(in);
}

inline std::string format_monomial(const Monomial& m, const VariableSet& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (m[i] != 1) out += "^" + m[i].str();
  }
  return out;
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += " ";
    out += format_monomial(g, ideal.ambient());
  }
  return out.empty() ? "0" : out;
}

inline std::string format_prime(const PrimeSupport& p, const VariableSet& vars) {
  std::string out = "(";
  for (size_t i = 0; i < p.vars().size(); ++i) {
    if (i) out += ",";
    out += vars.name(p.vars()[i]);
  }
  return out + ")";
}

inline std::string format_face(const Face& a) {
  std::string out = "(";
  for (int i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += a.is_infinite(i) ? "inf" : (*a[i]).str();
  }
  return out + ")";
}

inline std::string format_poly(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [degree, coeff] : p) {
    if (!out.empty()) out += coeff > 0 ? " + " : " - ";
    else if (coeff < 0) out += "-";
    Exponent c = abs(coeff);
    if (c != 1 || degree == 0) out += c.str();
    if (degree != 0) {
      out += "t";
      if (degree != 1) out += "^" + degree.str();
    }
  }
  return out;
}

inline std::string format_space(const StanleySpace& space, const VariableSet& vars) {
  std::string out = format_monomial(space.u, vars) + " | ";
  if (space.zvars.empty()) return out + "-";
  for (size_t i = 0; i < space.zvars.size(); ++i) {
    if (i) out += " ";
    out += vars.name(space.zvars[i]);
  }
  return out;
}

/// Ideal in the input grammar, re-parseable.
inline std::string emit_ideal_file(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& name : ideal.ambient().names()) out += " " + name;
  out += "\n";
  for (const auto& g : ideal.generators())
    out += "gen: " + format_monomial(g, ideal.ambient()) + "\n";
  return out;
}

inline std::string emit_filtration_file(const PrimeFiltration& filtration) {
  std::string out = emit_ideal_file(filtration.base());
  for (const auto& u : filtration.adjoined())
    out += "adjoin: " + format_monomial(u, filtration.base().ambient()) + "\n";
  return out;
}

inline std::string emit_decomposition_file(const StanleyDecomposition& decomposition) {
  std::string out = emit_ideal_file(decomposition.ideal);
  for (const auto& space : decomposition.spaces)
    out += "space: " + format_space(space, decomposition.ideal.ambient()) + "\n";
  return out;
}

/// FNV-1a digest of the input bytes; keys machine reports to their input.
inline std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

/// Machine-readable report: one sorted "key: value" line per entry, so that
/// identical inputs produce byte-identical output.
inline std::string format_machine_report(const std::map<std::string, std::string>& fields) {
  std::string out;
  for (const auto& [key, value] : fields) out += key + ": " + value + "\n";
  return out;
}

}  // namespace monoclean
