#include "cgeom/manifold_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cgeom/errors.hpp"
#include "cgeom/report.hpp"
#include "expression.hpp"

namespace cgeom {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
  std::size_t value_offset;  // column of value within the raw line
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg, std::size_t column = 0) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, column, line);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

using Sections = std::map<std::string, std::vector<Line>>;

const std::vector<std::string>& known_sections() {
  static const std::vector<std::string> names{"manifold", "frame", "brackets", "contact", "soliton"};
  return names;
}

Sections split_sections(std::string_view text) {
  Sections sections;
  std::vector<Line>* current = nullptr;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      const auto& known = known_sections();
      if (std::find(known.begin(), known.end(), name) == known.end())
        fail_at(number, "unknown section [" + name + "]");
      if (sections.count(name)) fail_at(number, "duplicate section [" + name + "]");
      current = &sections[name];
      continue;
    }
    if (!current) fail_at(number, "content before the first section header");
    std::size_t eq = raw.find('=');
    if (eq == std::string_view::npos) fail_at(number, "expected 'key = value'");
    std::string key = trim(raw.substr(0, eq));
    std::string_view rest = raw.substr(eq + 1);
    std::size_t offset = eq + 1;
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
      rest.remove_prefix(1);
      ++offset;
    }
    current->push_back({number, key, trim(rest), offset});
    if (end == text.size()) break;
  }
  return sections;
}

// Re-raise expression errors with the document line attached.
template <class F>
auto with_line(const Line& line, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line.number) + ": " + e.what(), line.value_offset + e.position(),
                     line.number);
  } catch (const DomainError& e) {
    throw ParseError("line " + std::to_string(line.number) + ": " + e.what(), line.value_offset, line.number);
  }
}

struct Context {
  std::optional<std::string> param;
  std::vector<std::string> names;

  detail::SymbolTable symbols(bool allow_pressure) const {
    detail::SymbolTable t;
    if (param) t.param = *param;
    t.allow_pressure = allow_pressure;
    t.frame_names = names;
    return t;
  }

  Scalar scalar(const Line& line) const {
    return with_line(line, [&] {
      detail::ExpressionParser parser(line.value, symbols(false));
      PScalar v = parser.parse_expr();
      parser.expect_end();
      return *v.as_scalar();
    });
  }

  PScalar pscalar(const Line& line) const {
    return with_line(line, [&] {
      detail::ExpressionParser parser(line.value, symbols(true));
      PScalar v = parser.parse_expr();
      parser.expect_end();
      return v;
    });
  }

  Vector vector(const Line& line) const {
    return with_line(line, [&] {
      detail::ExpressionParser parser(line.value, symbols(false));
      auto coeffs = parser.parse_linear_combination();
      Vector v;
      for (auto& c : coeffs) v.push_back(*c.as_scalar());
      return v;
    });
  }

  std::size_t frame(const Line& line, std::string_view token) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == token) return i;
    fail_at(line.number, "unknown frame name '" + std::string(token) + "'");
  }
};

std::size_t parse_uint(const Line& line) {
  if (line.value.empty() || !std::all_of(line.value.begin(), line.value.end(), ::isdigit) || line.value.size() > 3)
    fail_at(line.number, "expected a small positive integer for '" + line.key + "'");
  return std::stoul(line.value);
}

bool parse_bool(const Line& line) {
  if (line.value == "true") return true;
  if (line.value == "false") return false;
  fail_at(line.number, "expected true or false for '" + line.key + "'");
}

}  // namespace

ManifoldDocument load_manifold(std::string_view text) {
  Sections sections = split_sections(text);
  if (!sections.count("manifold")) throw ParseError("missing [manifold] section", 0);
  if (!sections.count("frame")) throw ParseError("missing [frame] section", 0);

  std::string name;
  std::optional<std::size_t> dim;
  Context ctx;
  for (const Line& line : sections["manifold"]) {
    if (line.key == "name") {
      name = line.value;
    } else if (line.key == "dim") {
      dim = parse_uint(line);
    } else if (line.key == "param") {
      if (!is_identifier(line.value)) fail_at(line.number, "parameter must be an identifier");
      if (line.value == "p") fail_at(line.number, "'p' is reserved for the soliton pressure constant");
      ctx.param = line.value;
    } else {
      fail_at(line.number, "unknown key '" + line.key + "' in [manifold]");
    }
  }
  if (!dim) throw ParseError("[manifold] requires 'dim'", 0);
  if (*dim < 3 || *dim % 2 == 0)
    throw ValidationError("dimension must be odd and at least 3, got " + std::to_string(*dim));

  std::vector<const Line*> metric_lines;
  bool identity_metric = false;
  for (const Line& line : sections["frame"]) {
    if (line.key == "names") {
      ctx.names = split_list(line.value);
      for (const auto& n : ctx.names) {
        if (!is_identifier(n)) fail_at(line.number, "invalid frame name '" + n + "'");
        if (n == "p" || (ctx.param && n == *ctx.param))
          fail_at(line.number, "frame name '" + n + "' clashes with a scalar symbol");
      }
    } else if (line.key == "metric") {
      if (line.value != "identity") fail_at(line.number, "metric must be 'identity' or given by 'g X Y' lines");
      identity_metric = true;
    } else if (line.key.rfind("g ", 0) == 0) {
      metric_lines.push_back(&line);
    } else {
      fail_at(line.number, "unknown key '" + line.key + "' in [frame]");
    }
  }
  if (ctx.names.empty())
    for (std::size_t i = 1; i <= *dim; ++i) ctx.names.push_back("e" + std::to_string(i));
  if (ctx.names.size() != *dim)
    throw ValidationError("dim = " + std::to_string(*dim) + " but " + std::to_string(ctx.names.size()) +
                          " frame names given");
  const std::size_t n = *dim;

  Tensor metric(n, 0, 2);
  if (identity_metric && !metric_lines.empty())
    fail_at(metric_lines.front()->number, "metric given both as identity and componentwise");
  if (metric_lines.empty()) {
    for (std::size_t i = 0; i < n; ++i) metric(i, i) = 1;
  } else {
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const Line* line : metric_lines) {
      std::istringstream words(line->key);
      std::string g, a, b, extra;
      words >> g >> a >> b;
      if (a.empty() || b.empty() || (words >> extra)) fail_at(line->number, "expected 'g X Y = value'");
      std::size_t i = ctx.frame(*line, a), j = ctx.frame(*line, b);
      if (seen[i][j]) fail_at(line->number, "metric component given twice");
      seen[i][j] = seen[j][i] = true;
      metric(i, j) = metric(j, i) = ctx.scalar(*line);
    }
  }

  Tensor structure(n, 1, 2);
  for (const Line& line : sections["brackets"]) {
    auto pair = split_list(line.key);
    if (pair.size() != 2) fail_at(line.number, "bracket key must be 'X, Y'");
    std::size_t i = ctx.frame(line, pair[0]), j = ctx.frame(line, pair[1]);
    if (i == j) fail_at(line.number, "bracket of a frame field with itself is zero by definition");
    bool already = false;
    for (std::size_t k = 0; k < n; ++k) already |= !structure(k, i, j).is_zero();
    if (already) fail_at(line.number, "bracket [" + pair[0] + ", " + pair[1] + "] given twice");
    Vector v = ctx.vector(line);
    for (std::size_t k = 0; k < n; ++k) {
      structure(k, i, j) = v[k];
      structure(k, j, i) = -v[k];
    }
  }

  ManifoldDocument doc{FrameManifold(name, ctx.names, std::move(structure), std::move(metric), ctx.param),
                       std::nullopt, std::nullopt};

  if (sections.count("contact")) {
    ContactDecl decl{zero_vector(n), Tensor(n, 1, 1)};
    bool have_xi = false;
    for (const Line& line : sections["contact"]) {
      if (line.key == "xi") {
        decl.xi = ctx.vector(line);
        have_xi = true;
      } else if (line.key.rfind("phi ", 0) == 0) {
        std::size_t j = ctx.frame(line, trim(std::string_view(line.key).substr(4)));
        Vector col = ctx.vector(line);
        for (std::size_t i = 0; i < n; ++i) decl.phi(i, j) = col[i];
      } else {
        fail_at(line.number, "unknown key '" + line.key + "' in [contact]");
      }
    }
    if (!have_xi) throw ParseError("[contact] requires 'xi'", 0);
    doc.contact = std::move(decl);
  }

  if (sections.count("soliton")) {
    SolitonConfig cfg;
    cfg.V = zero_vector(n);
    bool have_v = false;
    for (const Line& line : sections["soliton"]) {
      if (line.key == "V") {
        cfg.V = ctx.vector(line);
        have_v = true;
      } else if (line.key == "p") {
        cfg.p = line.value == "p" ? PScalar::pressure() : PScalar(ctx.scalar(line));
      } else if (line.key == "lambda") {
        cfg.lambda = ctx.pscalar(line);
      } else if (line.key == "gradient") {
        cfg.gradient = parse_bool(line);
      } else {
        fail_at(line.number, "unknown key '" + line.key + "' in [soliton]");
      }
    }
    if (!have_v) throw ParseError("[soliton] requires 'V'", 0);
    if (cfg.lambda && !cfg.p.depends_on_pressure()) cfg.lambda = cfg.lambda->substitute_pressure(*cfg.p.as_scalar());
    doc.soliton = std::move(cfg);
  }
  return doc;
}

Vector parse_vector(std::string_view text, const FrameManifold& m) {
  detail::SymbolTable symbols;
  if (m.param()) symbols.param = *m.param();
  symbols.frame_names = m.frame_names();
  detail::ExpressionParser parser(text, symbols);
  Vector v;
  for (auto& c : parser.parse_linear_combination()) v.push_back(*c.as_scalar());
  return v;
}

ManifoldDocument load_manifold_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_manifold(buf.str());
}

std::string print_manifold(const ManifoldDocument& doc) {
  const FrameManifold& m = doc.manifold;
  const std::size_t n = m.dim();
  const std::string var = m.var();
  std::ostringstream out;
  out << "[manifold]\n";
  if (!m.name().empty()) out << "name = " << m.name() << "\n";
  out << "dim = " << n << "\n";
  if (m.param()) out << "param = " << *m.param() << "\n";

  out << "[frame]\nnames = ";
  for (std::size_t i = 0; i < n; ++i) out << (i ? ", " : "") << m.frame_names()[i];
  out << "\n";
  bool identity = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) identity &= m.metric()(i, j) == Scalar(i == j ? 1 : 0);
  if (identity) {
    out << "metric = identity\n";
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!m.metric()(i, j).is_zero())
          out << "g " << m.frame_names()[i] << " " << m.frame_names()[j] << " = " << m.metric()(i, j).str(var)
              << "\n";
  }

  out << "[brackets]\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = m.structure()(k, i, j);
      if (is_zero(v)) continue;
      out << m.frame_names()[i] << ", " << m.frame_names()[j] << " = " << format_vector(v, m) << "\n";
    }

  if (doc.contact) {
    out << "[contact]\nxi = " << format_vector(doc.contact->xi, m) << "\n";
    for (std::size_t j = 0; j < n; ++j) {
      Vector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = doc.contact->phi(i, j);
      if (is_zero(col)) continue;
      out << "phi " << m.frame_names()[j] << " = " << format_vector(col, m) << "\n";
    }
  }

  if (doc.soliton) {
    const SolitonConfig& s = *doc.soliton;
    out << "[soliton]\nV = " << format_vector(s.V, m) << "\n";
    out << "p = " << s.p.str(var) << "\n";
    if (s.lambda) out << "lambda = " << s.lambda->str(var) << "\n";
    out << "gradient = " << (s.gradient ? "true" : "false") << "\n";
  }
  return out.str();
}

namespace {

Vector substitute(const Vector& v, const Rational& value) {
  Vector r;
  for (const auto& c : v) r.push_back(c.substitute(value));
  return r;
}

Tensor substitute(const Tensor& t, const Rational& value) {
  Tensor r(t.dim(), t.upper(), t.lower());
  for (std::size_t i = 0; i < t.size(); ++i) r.components()[i] = t.components()[i].substitute(value);
  return r;
}

}  // namespace

ManifoldDocument substitute_parameter(const ManifoldDocument& doc, const Rational& value) {
  const FrameManifold& m = doc.manifold;
  if (!m.param()) throw ValidationError("manifold declares no parameter to substitute");
  ManifoldDocument out{FrameManifold(m.name(), m.frame_names(), substitute(m.structure(), value),
                                     substitute(m.metric(), value), std::nullopt),
                       std::nullopt, std::nullopt};
  if (doc.contact) out.contact = ContactDecl{substitute(doc.contact->xi, value), substitute(doc.contact->phi, value)};
  if (doc.soliton) {
    SolitonConfig s = *doc.soliton;
    s.V = substitute(s.V, value);
    s.p = s.p.substitute_parameter(value);
    if (s.lambda) s.lambda = s.lambda->substitute_parameter(value);
    out.soliton = std::move(s);
  }
  return out;
}

ManifoldDocument substitute_pressure(const ManifoldDocument& doc, const Scalar& value) {
  ManifoldDocument out = doc;
  if (out.soliton) {
    out.soliton->p = PScalar(value);
    if (out.soliton->lambda) out.soliton->lambda = out.soliton->lambda->substitute_pressure(value);
  }
  return out;
}

}  // namespace cgeom
