#include "su2pf/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace su2pf {

void Report::sort_by_name() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string format_complex(const Cplx& z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

std::string render_json(const Report& rep, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["schema"] = "1";
  j["config"] = {{"tol", cfg.tol}, {"points", cfg.points}, {"seed", cfg.seed}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["paper_anchor"] = c.paper_anchor;
    e["status"] = c.pass ? "pass" : "fail";
    e["max_residual"] = c.max_residual;
    e["expected"] = c.expected;
    e["observed"] = c.observed;
    if (cfg.timings) e["runtime_ms"] = c.runtime_ms;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"total", rep.total()}, {"passed", rep.passed()}, {"failed", rep.failed()}};
  return j.dump(2) + "\n";
}

std::string render_markdown(const Report& rep, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "tol=" << format_double(cfg.tol) << " points=" << cfg.points << " seed=" << cfg.seed
     << "\n\n";
  os << "| check | status | max residual | expected | observed |";
  if (cfg.timings) os << " ms |";
  os << "\n";
  os << "|---|---|---|---|---|";
  if (cfg.timings) os << "---|";
  os << "\n";
  for (const auto& c : rep.checks) {
    os << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | "
       << format_double(c.max_residual) << " | " << c.expected << " | " << c.observed << " |";
    if (cfg.timings) os << " " << c.runtime_ms << " |";
    os << "\n";
  }
  os << "\n" << rep.passed() << "/" << rep.total() << " checks passed\n";
  return os.str();
}

std::string render(const Report& rep, const RunConfig& cfg) {
  return cfg.format == "markdown" ? render_markdown(rep, cfg) : render_json(rep, cfg);
}

namespace {

Cplx parse_complex_scalar(std::string s) {
  auto strip = [](std::string& t) {
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }),
            t.end());
  };
  strip(s);
  if (s.empty()) throw ConfigError("empty complex literal");

  const auto ipos = s.find('i');
  if (ipos == std::string::npos) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw ConfigError("trailing characters in number: " + s);
      return Cplx(v);
    } catch (const std::invalid_argument&) {
      throw ConfigError("not a number: " + s);
    } catch (const std::out_of_range&) {
      throw ConfigError("number out of range: " + s);
    }
  }

  // coefficient before 'i', optional "/denominator" after it
  std::string head = s.substr(0, ipos);
  std::string tail = s.substr(ipos + 1);
  double coef = 1.0;
  if (head == "-")
    coef = -1.0;
  else if (!head.empty() && head != "+") {
    std::size_t used = 0;
    try {
      coef = std::stod(head, &used);
    } catch (...) {
      throw ConfigError("bad imaginary coefficient: " + s);
    }
    if (used != head.size()) throw ConfigError("bad imaginary coefficient: " + s);
  }
  if (!tail.empty()) {
    if (tail[0] != '/') throw ConfigError("bad complex literal: " + s);
    std::size_t used = 0;
    double den = 0.0;
    try {
      den = std::stod(tail.substr(1), &used);
    } catch (...) {
      throw ConfigError("bad denominator: " + s);
    }
    if (used != tail.size() - 1 || den == 0.0) throw ConfigError("bad denominator: " + s);
    coef /= den;
  }
  return Cplx(0.0, coef);
}

Cplx complex_from_json(const nlohmann::json& v) {
  if (v.is_number()) return Cplx(v.get<double>());
  if (v.is_string()) return parse_complex_scalar(v.get<std::string>());
  if (v.is_array()) {
    if (v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw ConfigError("complex values must be [re, im]");
    return Cplx(v[0].get<double>(), v[1].get<double>());
  }
  throw ConfigError("cannot interpret complex value: " + v.dump());
}

}  // namespace

Cplx parse_complex(const std::string& text) {
  std::string s = text;
  const auto first = s.find_first_not_of(" \t");
  if (first != std::string::npos && s[first] == '[') {
    nlohmann::json v;
    try {
      v = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("bad complex array: ") + e.what());
    }
    return complex_from_json(v);
  }
  return parse_complex_scalar(s);
}

SystemParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open params file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("params file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("params file must hold a JSON object");

  auto get = [&j](const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("params file missing key: ") + key);
    return complex_from_json(j.at(key));
  };
  try {
    return SystemParams::make(get("a1"), get("b1"), get("c1"), get("a2"), get("b2"), get("c2"),
                              get("k"));
  } catch (const DegenerateParams& e) {
    throw ConfigError(std::string("invalid params: ") + e.what());
  }
}

}  // namespace su2pf
