#include "idxf/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "idxf/verification.hpp"
#include "idxf/version.hpp"

namespace idxf {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real_token(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ConfigError("malformed number: '" + text + "'");
  }
  if (used != t.size()) throw ConfigError("malformed number: '" + text + "'");
  return v;
}

// a:b:n range.
std::vector<double> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("malformed range: '" + text + "'");
  const double a = parse_real_token(parts[0]);
  const double b = parse_real_token(parts[1]);
  const long n = std::lround(parse_real_token(parts[2]));
  if (n < 1 || n > 1000000) throw ConfigError("range count out of bounds");
  std::vector<double> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) {
    out.push_back(n == 1 ? a : a + (b - a) * i / static_cast<double>(n - 1));
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  // %.17g round-trips every double and is deterministic for a fixed libc.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ComplexValue parse_complex(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw ConfigError("empty complex literal");
  if (t.back() != 'i' && t.back() != 'I' && t.back() != 'j') {
    return ComplexValue(parse_real_token(t), 0.0);
  }
  t.pop_back();  // strip the unit suffix
  // Find the split between real and imaginary parts: the last +/- that is
  // not an exponent sign and not leading.
  std::size_t pos = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      pos = i;
      break;
    }
  }
  if (pos == std::string::npos) {
    // Pure imaginary: "i", "-i", "2.5i".
    if (t.empty() || t == "+") return ComplexValue(0.0, 1.0);
    if (t == "-") return ComplexValue(0.0, -1.0);
    return ComplexValue(0.0, parse_real_token(t));
  }
  const std::string re = t.substr(0, pos);
  std::string im = t.substr(pos);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return ComplexValue(parse_real_token(re), parse_real_token(im));
}

std::vector<ComplexValue> parse_grid(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty grid");
  if (t.rfind("|z|=", 0) == 0) {
    const auto parts = split(t.substr(4), ':');
    const double r = parse_real_token(parts[0]);
    long n = 1;
    if (parts.size() == 2) {
      if (parts[1].rfind("n=", 0) == 0) {
        n = std::lround(parse_real_token(parts[1].substr(2)));
      } else {
        n = std::lround(parse_real_token(parts[1]));
      }
    } else if (parts.size() > 2) {
      throw ConfigError("malformed circle grid: '" + text + "'");
    }
    if (n < 1 || n > 100000) throw ConfigError("circle point count out of bounds");
    std::vector<ComplexValue> out;
    out.reserve(n);
    for (long k = 0; k < n; ++k) {
      out.push_back(std::polar(r, 2.0 * std::numbers::pi * k / n));
    }
    return out;
  }
  if (t.rfind("re=", 0) == 0) {
    // re=a:b:n,im=c:d:m
    const auto comma = t.find(",im=");
    if (comma == std::string::npos) {
      throw ConfigError("lattice grid needs both re= and im= parts");
    }
    const auto re = parse_range(t.substr(3, comma - 3));
    const auto im = parse_range(t.substr(comma + 4));
    std::vector<ComplexValue> out;
    out.reserve(re.size() * im.size());
    for (double y : im) {
      for (double x : re) out.emplace_back(x, y);
    }
    return out;
  }
  std::vector<ComplexValue> out;
  for (const auto& item : split(t, ',')) out.push_back(parse_complex(item));
  return out;
}

std::vector<double> parse_real_grid(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty grid");
  if (t.find(':') != std::string::npos) return parse_range(t);
  std::vector<double> out;
  for (const auto& item : split(t, ',')) out.push_back(parse_real_token(item));
  return out;
}

std::vector<int> parse_index_list(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty index list");
  const auto dots = t.find("..");
  std::vector<int> out;
  if (dots != std::string::npos) {
    const long a = std::lround(parse_real_token(t.substr(0, dots)));
    const long b = std::lround(parse_real_token(t.substr(dots + 2)));
    if (a < 0 || b < a || b > 100000) throw ConfigError("bad index range");
    for (long n = a; n <= b; ++n) out.push_back(static_cast<int>(n));
    return out;
  }
  for (const auto& item : split(t, ',')) {
    const long n = std::lround(parse_real_token(item));
    if (n < 0 || n > 100000) throw ConfigError("bad index");
    out.push_back(static_cast<int>(n));
  }
  return out;
}

std::string verify_report_json(const std::string& suite,
                               const std::map<std::string, std::string>& config,
                               const std::vector<VerificationReport>& reports) {
  ordered_json doc;
  doc["tool"] = "idxf";
  doc["version"] = kVersion;
  doc["command"] = "verify";
  doc["suite"] = suite;
  ordered_json cfg;
  for (const auto& [k, v] : config) cfg[k] = v;
  doc["config"] = cfg;
  ordered_json conv;
  for (const auto& [k, v] : convention_notes()) conv[k] = v;
  doc["conventions"] = conv;

  bool all_pass = true;
  ordered_json checks = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json c;
    c["name"] = r.check_name;
    ordered_json params;
    for (const auto& [k, v] : r.parameters) params[k] = v;
    c["parameters"] = params;
    c["tolerance"] = format_double(r.tolerance);
    c["max_abs_error"] = format_double(r.max_abs_error);
    c["pass"] = r.pass;
    c["total_cases"] = r.total_cases;
    ordered_json cases = ordered_json::array();
    for (const auto& cs : r.cases) {
      ordered_json cj;
      cj["inputs"] = cs.inputs;
      cj["expected"] = cs.expected;
      cj["got"] = cs.got;
      cj["error"] = format_double(cs.error);
      cases.push_back(cj);
    }
    c["cases"] = cases;
    ordered_json notes = ordered_json::array();
    for (const auto& n : r.errata_notes) notes.push_back(n);
    c["errata_notes"] = notes;
    checks.push_back(c);
    all_pass = all_pass && r.pass;
  }
  doc["checks"] = checks;
  doc["all_pass"] = all_pass;
  return doc.dump(2) + "\n";
}

std::string transform_csv(const TransformResult& result, bool linear_convention) {
  std::ostringstream os;
  os << "# idxf transform v" << kVersion << "\n";
  os << "# gamma=" << format_double(result.gamma.gamma)
     << " mode=" << (result.gamma.mode == GammaMode::kStrictHalfInteger ? "strict"
                                                                        : "extended")
     << " convention=" << (linear_convention ? "linear" : "conjugate-linear")
     << " input=" << result.input_descriptor << "\n";
  os << "z_re,z_im,F_re,F_im\n";
  for (const auto& [z, F] : result.values) {
    os << format_double(z.real()) << "," << format_double(z.imag()) << ","
       << format_double(F.real()) << "," << format_double(F.imag()) << "\n";
  }
  return os.str();
}

std::string eval_csv(const std::string& what,
                     const std::map<std::string, std::string>& meta,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "# idxf eval v" << kVersion << " what=" << what << "\n";
  os << "#";
  for (const auto& [k, v] : meta) os << " " << k << "=" << v;
  os << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    os << (i ? "," : "") << columns[i];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << row[i];
    }
    os << "\n";
  }
  return os.str();
}

SampledFunction parse_sampled_function(const std::string& text) {
  SampledFunction fn;
  bool have_envelope = false;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("envelope", 0) == 0) {
      const auto parts = split(t, ',');
      if (parts.size() != 5) {
        throw ConfigError("envelope line needs kind, rate, degree, amplitude");
      }
      const std::string kind = trim(parts[1]);
      if (kind == "exponential-rate") {
        fn.envelope.kind = DecayEnvelope::Kind::ExponentialRate;
      } else if (kind == "super-exponential") {
        fn.envelope.kind = DecayEnvelope::Kind::SuperExponential;
      } else {
        throw ConfigError("unknown envelope kind: '" + kind + "'");
      }
      fn.envelope.rate = parse_real_token(parts[2]);
      fn.envelope.poly_degree = parse_real_token(parts[3]);
      fn.envelope.amplitude = parse_real_token(parts[4]);
      if (!(fn.envelope.rate > 0.0) || fn.envelope.poly_degree < 0.0 ||
          !(fn.envelope.amplitude > 0.0)) {
        throw ConfigError("envelope parameters out of range");
      }
      have_envelope = true;
      continue;
    }
    const auto parts = split(t, ',');
    if (parts.size() != 3) throw ConfigError("sample rows must be x,re,im");
    const double x = parse_real_token(parts[0]);
    if (!fn.x.empty() && x <= fn.x.back()) {
      throw ConfigError("sample x values must be strictly increasing");
    }
    if (x <= 0.0) throw ConfigError("sample x values must be positive");
    fn.x.push_back(x);
    fn.value.emplace_back(parse_real_token(parts[1]), parse_real_token(parts[2]));
  }
  if (!have_envelope) throw ConfigError("sampled input is missing its envelope line");
  if (fn.x.size() < 4) throw ConfigError("sampled input needs at least 4 rows");
  return fn;
}

std::vector<ComplexValue> parse_coefficients(const std::string& text) {
  std::vector<ComplexValue> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    for (const auto& item : split(t, ',')) {
      if (!trim(item).empty()) out.push_back(parse_complex(item));
    }
  }
  if (out.empty()) throw ConfigError("coefficient input is empty");
  return out;
}

HalfLineFunction sampled_to_halfline(const SampledFunction& fn, double tol) {
  const std::size_t n = fn.x.size();
  // Tail beyond the last sample: refuse unless the declared envelope
  // already certifies it as negligible. Never extrapolate.
  const double tail = fn.envelope.tail_bound(fn.x.back());
  if (!(tail <= tol / 10.0)) {
    throw EnvelopeError(
        "sampled input does not reach far enough for its declared envelope");
  }
  // Every declared sample must respect the declared envelope.
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(fn.value[i]) > fn.envelope.value(fn.x[i]) * (1.0 + 1e-9)) {
      throw EnvelopeError("sample value above the declared envelope");
    }
  }

  // Natural cubic spline on the samples, separately for both components,
  // with a pinned zero at x = 0.
  auto xs = std::make_shared<std::vector<double>>();
  xs->push_back(0.0);
  xs->insert(xs->end(), fn.x.begin(), fn.x.end());
  auto ys = std::make_shared<std::vector<ComplexValue>>();
  ys->push_back(0.0);
  ys->insert(ys->end(), fn.value.begin(), fn.value.end());

  const std::size_t m = xs->size();
  auto m2 = std::make_shared<std::vector<ComplexValue>>(m, ComplexValue(0.0));
  // Tridiagonal solve for the second derivatives (natural boundary).
  std::vector<ComplexValue> rhs(m, 0.0);
  std::vector<double> diag(m, 1.0), upper(m, 0.0);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double h0 = (*xs)[i] - (*xs)[i - 1];
    const double h1 = (*xs)[i + 1] - (*xs)[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * (((*ys)[i + 1] - (*ys)[i]) / h1 - ((*ys)[i] - (*ys)[i - 1]) / h0);
  }
  // Forward elimination (lower entries equal previous h0).
  std::vector<double> lower(m, 0.0);
  for (std::size_t i = 1; i + 1 < m; ++i) lower[i] = (*xs)[i] - (*xs)[i - 1];
  for (std::size_t i = 2; i + 1 < m; ++i) {
    const double f = lower[i] / diag[i - 1];
    diag[i] -= f * upper[i - 1];
    rhs[i] -= f * rhs[i - 1];
  }
  for (std::size_t i = m - 2; i >= 1; --i) {
    (*m2)[i] = (rhs[i] - upper[i] * (*m2)[i + 1]) / diag[i];
    if (i == 1) break;
  }

  HalfLineFunction out;
  out.envelope = fn.envelope;
  out.eval = [xs, ys, m2](double x) -> ComplexValue {
    if (x <= 0.0) return 0.0;
    if (x >= xs->back()) return 0.0;  // tail certified negligible
    // Binary search for the interval.
    const auto it = std::upper_bound(xs->begin(), xs->end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs->begin());
    const double x0 = (*xs)[i - 1], x1 = (*xs)[i];
    const double h = x1 - x0;
    const double a = (x1 - x) / h, b = (x - x0) / h;
    return a * (*ys)[i - 1] + b * (*ys)[i] +
           ((a * a * a - a) * (*m2)[i - 1] + (b * b * b - b) * (*m2)[i]) * (h * h) /
               6.0;
  };
  return out;
}

}  // namespace idxf
