#include "qj/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace qj {

namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> w;
  for (std::string s; is >> s;) w.push_back(s);
  return w;
}

std::int64_t to_int(const std::string& s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(ErrorCode::Parse, "expected an integer, got '" + s + "'");
  return v;
}

// Parses "<kind> p=<p>" and returns p.
std::uint32_t prime_header(const std::vector<std::string>& ls, const std::string& kind) {
  if (ls.empty()) fail(ErrorCode::Parse, "empty " + kind + " file");
  const auto w = words(ls[0]);
  if (w.size() != 2 || w[0] != kind || w[1].rfind("p=", 0) != 0) {
    fail(ErrorCode::Parse, "expected header '" + kind + " p=<p>'");
  }
  const std::int64_t p = to_int(w[1].substr(2));
  if (p <= 0 || p > static_cast<std::int64_t>(UINT32_MAX)) fail(ErrorCode::Parse, "bad characteristic");
  return static_cast<std::uint32_t>(p);
}

// Element of F_p: either the full grammar or a bare integer.
Fe prime_element(const std::string& s, const Field& K) {
  if (s.find(':') == std::string::npos) return K.from_int(to_int(s));
  const Fe e = Fe::parse(s);
  if (e.field_ptr() != &K) fail(ErrorCode::Parse, "element " + s + " is not in F_" + std::to_string(K.p()));
  return e;
}

std::vector<Fe> labelled(const std::string& line, const std::string& label, std::size_t n, const Field& K) {
  auto w = words(line);
  if (w.empty() || w[0] != label + ":" || w.size() != n + 1) {
    fail(ErrorCode::Parse, "expected '" + label + ":' followed by " + std::to_string(n) + " elements");
  }
  std::vector<Fe> out;
  for (std::size_t i = 1; i < w.size(); ++i) out.push_back(prime_element(w[i], K));
  return out;
}

std::string join(const std::vector<Fe>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s;
}

}  // namespace

std::string header_kind(std::string_view text) {
  const auto ls = lines_of(text);
  if (ls.empty()) fail(ErrorCode::Parse, "empty input");
  return words(ls[0]).at(0);
}

std::string write_quartic(const Form& F) {
  return "quartic p=" + std::to_string(F.field().p()) + "\n" + F.to_string() + "\n";
}

Form read_quartic(std::string_view text) {
  const auto ls = lines_of(text);
  const Field& K = Field::prime(prime_header(ls, "quartic"));
  std::vector<Fe> c;
  for (std::size_t i = 1; i < ls.size(); ++i)
    for (const auto& w : words(ls[i])) c.push_back(prime_element(w, K));
  if (c.size() != 15) fail(ErrorCode::Parse, "a quartic has 15 coefficients, got " + std::to_string(c.size()));
  return Form(K, 4, std::move(c));
}

std::string write_divisor(const Divisor& D) { return D.to_string(); }

Divisor read_divisor(std::string_view text, const CurveContext* ctx) {
  const auto ls = lines_of(text);
  if (ls.empty()) fail(ErrorCode::Parse, "empty divisor file");
  const auto h = words(ls[0]);
  if (h.size() != 2 || h[0] != "divisor" || h[1].rfind("p^L=", 0) != 0) {
    fail(ErrorCode::Parse, "expected header 'divisor p^L=<p>^<L>'");
  }
  const std::string spec = h[1].substr(4);
  const auto caret = spec.find('^');
  if (caret == std::string::npos) fail(ErrorCode::Parse, "expected p^L in the divisor header");
  const std::int64_t p = to_int(spec.substr(0, caret)), L = to_int(spec.substr(caret + 1));
  if (p <= 0 || p > static_cast<std::int64_t>(UINT32_MAX) || L < 1 || L > kMaxExtensionDegree) {
    fail(ErrorCode::Parse, "unsupported field in the divisor header");
  }
  const Field& T = Field::extension(static_cast<std::uint32_t>(p), static_cast<int>(L));
  std::vector<Divisor::Entry> es;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto w = words(ls[i]);
    if (w.size() != 4) fail(ErrorCode::Parse, "divisor lines are 'x y z m'");
    Fe c[3];
    for (int j = 0; j < 3; ++j) {
      c[j] = Fe::parse(w[static_cast<std::size_t>(j)]);
      if (c[j].field_ptr() != &T) fail(ErrorCode::Parse, "coordinate " + w[static_cast<std::size_t>(j)] + " is not in the header's field");
    }
    const std::int64_t m = to_int(w[3]);
    if (m <= 0) fail(ErrorCode::Parse, "multiplicities must be positive");
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) fail(ErrorCode::Parse, "(0:0:0) is not a point");
    es.push_back({PlanePoint::make(c[0], c[1], c[2]), static_cast<int>(m)});
  }
  Divisor D(T, std::move(es));
  if (ctx) {
    const Form F = ctx->F().embedded(T);
    for (const auto& e : D.entries()) {
      if (!F.eval(e.point).is_zero()) fail(ErrorCode::PointOffCurve, e.point.to_string() + " is not on the curve");
    }
  }
  return D.canonical();
}

std::string write_zpoint(const ZPoint& z) {
  const Form& G = z.G;
  const Form& H = z.H;
  std::ostringstream os;
  os << "zpoint p=" << z.A.a00.field().p() << '\n';
  os << "A: " << join({z.A.a00, z.A.a10, z.A.a01}) << '\n';
  os << "B: " << join({z.B.b00, z.B.b10, z.B.b01}) << '\n';
  os << "G: " << join({G.coeff(0, 0), G.coeff(1, 0), G.coeff(0, 1), G.coeff(2, 0), G.coeff(0, 2)}) << '\n';
  os << "H: " << join({H.coeff(0, 0), H.coeff(1, 0), H.coeff(0, 1), H.coeff(2, 0), H.coeff(1, 1), H.coeff(0, 2)}) << '\n';
  return os.str();
}

ZPoint read_zpoint(std::string_view text) {
  const auto ls = lines_of(text);
  const Field& K = Field::prime(prime_header(ls, "zpoint"));
  if (ls.size() != 5) fail(ErrorCode::Parse, "a zpoint file has a header and four lines");
  const auto a = labelled(ls[1], "A", 3, K);
  const auto b = labelled(ls[2], "B", 3, K);
  const auto g = labelled(ls[3], "G", 5, K);
  const auto h = labelled(ls[4], "H", 6, K);
  ZPoint z{ConicA{a[0], a[1], a[2]}, ConicB{b[0], b[1], b[2]}, Form(K, 2), Form(K, 2)};
  z.G.set(0, 0, g[0]);
  z.G.set(1, 0, g[1]);
  z.G.set(0, 1, g[2]);
  z.G.set(2, 0, g[3]);
  z.G.set(1, 1, K.one());
  z.G.set(0, 2, g[4]);
  z.H.set(0, 0, h[0]);
  z.H.set(1, 0, h[1]);
  z.H.set(0, 1, h[2]);
  z.H.set(2, 0, h[3]);
  z.H.set(1, 1, h[4]);
  z.H.set(0, 2, h[5]);
  return z;
}

std::string write_plucker(const PluckerVector& v) {
  return "plucker p=" + std::to_string(v.coords[0].field().p()) + "\n" +
         join(std::vector<Fe>(v.coords.begin(), v.coords.end())) + "\n";
}

PluckerVector read_plucker(std::string_view text) {
  const auto ls = lines_of(text);
  const Field& K = Field::prime(prime_header(ls, "plucker"));
  if (ls.size() != 2) fail(ErrorCode::Parse, "a plucker file has a header and one line");
  const auto w = words(ls[1]);
  if (w.size() != 10) fail(ErrorCode::Parse, "a Plücker vector has 10 coordinates");
  PluckerVector v;
  for (std::size_t i = 0; i < 10; ++i) v.coords[i] = prime_element(w[i], K);
  return v;
}

std::string write_zeta(std::uint32_t p, const ZetaData& z) {
  std::ostringstream os;
  os << "zeta p=" << p << '\n' << z.N1 << ' ' << z.N2 << ' ' << z.N3 << '\n';
  for (int i = 1; i <= 6; ++i) os << z.L[static_cast<std::size_t>(i)] << (i < 6 ? ' ' : '\n');
  os << z.order << '\n';
  return os.str();
}

ZetaData read_zeta(std::string_view text) {
  const auto ls = lines_of(text);
  prime_header(ls, "zeta");
  if (ls.size() != 4) fail(ErrorCode::Parse, "a zeta file has a header and three lines");
  const auto n = words(ls[1]), l = words(ls[2]), o = words(ls[3]);
  if (n.size() != 3 || l.size() != 6 || o.size() != 1) fail(ErrorCode::Parse, "malformed zeta report");
  ZetaData z;
  z.N1 = to_int(n[0]);
  z.N2 = to_int(n[1]);
  z.N3 = to_int(n[2]);
  z.L[0] = 1;
  for (std::size_t i = 0; i < 6; ++i) z.L[i + 1] = to_int(l[i]);
  z.order = to_int(o[0]);
  return z;
}

std::string write_kummer(const KummerCoords& k, const KummerCheck& check) {
  std::ostringstream os;
  os << "kummer p=" << k.A.a00.field().p() << '\n';
  os << "A: " << join({k.A.a00, k.A.a10, k.A.a01}) << '\n';
  os << "G: " << k.G.to_string() << '\n';
  os << "Q: " << k.Q.to_string() << '\n';
  os << "pattern: " << (check.pattern_ok ? "ok" : "violated") << '\n';
  os << "reducible: " << (check.reducible ? "yes" : "no") << '\n';
  if (check.witness) {
    os << "B: " << check.witness->first.to_string() << '\n';
    os << "H: " << check.witness->second.to_string() << '\n';
  }
  return os.str();
}

}  // namespace qj
