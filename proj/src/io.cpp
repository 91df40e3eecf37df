#include "pitop/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>
#include <toml++/toml.hpp>

namespace pitop {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n"), e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

Json toml_to_json(const toml::node& n) {
  if (auto t = n.as_table()) {
    Json o = Json::object();
    for (auto&& [k, v] : *t) o[std::string(k.str())] = toml_to_json(v);
    return o;
  }
  if (auto a = n.as_array()) {
    Json o = Json::array();
    for (auto&& v : *a) o.push_back(toml_to_json(v));
    return o;
  }
  if (auto v = n.as_integer()) return v->get();
  if (auto v = n.as_string()) return v->get();
  if (auto v = n.as_boolean()) return v->get();
  if (auto v = n.as_floating_point()) return v->get();
  throw ParseError("unsupported TOML value at line " + std::to_string(n.source().begin.line));
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json parse_toml(const std::string& text, const std::string& source) {
  try {
    toml::table t = toml::parse(text, source);
    return toml_to_json(t);
  } catch (const toml::parse_error& e) {
    const auto& b = e.source().begin;
    throw ParseError(source + ":" + std::to_string(b.line) + ":" + std::to_string(b.column) + ": " +
                     std::string(e.description()));
  }
}

/// Field access with a message naming the file and key.
struct Reader {
  const Json& j;
  std::string where;
  const Json& at(const std::string& key) const {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
    return j.at(key);
  }
  bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
  long integer(const std::string& key) const {
    const Json& v = at(key);
    if (!v.is_number_integer()) throw ParseError(where + ": '" + key + "' must be an integer");
    return v.get<long>();
  }
  std::string string(const std::string& key) const {
    const Json& v = at(key);
    if (!v.is_string()) throw ParseError(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
  }
};

/// Flattens a nested integer array with the given shape.
std::vector<long> flat_ints(const Json& v, const std::vector<int>& shape, const std::string& what, size_t depth = 0) {
  if (depth == shape.size()) {
    if (!v.is_number_integer()) throw ParseError(what + ": expected an integer");
    return {v.get<long>()};
  }
  if (!v.is_array() || static_cast<int>(v.size()) != shape[depth])
    throw ParseError(what + ": expected an array of length " + std::to_string(shape[depth]) + " at depth " +
                     std::to_string(depth));
  std::vector<long> out;
  for (const auto& e : v) {
    auto part = flat_ints(e, shape, what, depth + 1);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string ints_line(const std::vector<long>& v, size_t begin, size_t count) {
  std::string s = "[";
  for (size_t i = 0; i < count; ++i) s += (i ? ", " : "") + std::to_string(v[begin + i]);
  return s + "]";
}

std::vector<long> exponents(const std::vector<CycloNum>& xs, long N) {
  std::vector<long> out;
  for (const auto& x : xs) out.push_back(zeta_exponent(x, N));
  return out;
}

bool is_named_spec(const std::string& s) {
  return s == "trivial" || s.rfind("cyclic:", 0) == 0 || s.rfind("product:", 0) == 0;
}

/// Deterministic layout: arrays of scalars on one line, everything else expanded.
void pretty(const Json& j, int indent, std::string& out) {
  std::string pad(indent, ' '), inner(indent + 2, ' ');
  auto scalar = [](const Json& x) { return !x.is_array() && !x.is_object(); };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += inner + Json(it.key()).dump() + ": ";
      pretty(it.value(), indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), scalar);
    if (flat) {
      out += "[";
      for (size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      out += inner;
      pretty(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string render(const Json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

CategoryFile category_from_json(const Json& j, const std::string& where) {
  Reader r{j, where};
  CategoryFile f;
  if (r.has("name")) f.name = r.string("name");
  FiniteGroup g;
  try {
    if (r.has("group")) {
      g = FiniteGroup::parse(r.string("group"));
    } else {
      const Json& t = r.at("group_table");
      if (!t.is_array()) throw ParseError(where + ": 'group_table' must be an array");
      int n = static_cast<int>(t.size());
      auto flat = flat_ints(t, {n, n}, where + ": group_table");
      std::vector<std::vector<int>> table(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = static_cast<int>(flat[a * n + b]);
      g = FiniteGroup::from_table(table, r.has("group_name") ? r.string("group_name") : "table");
    }
  } catch (const GroupError& e) {
    throw ParseError(where + ": " + e.what());
  }
  long N = r.integer("order");
  if (N < 1) throw ParseError(where + ": 'order' must be positive");
  int n = g.order();
  auto a = flat_ints(r.at("a"), {n, n, n}, where + ": a");
  auto b = flat_ints(r.at("b"), {n}, where + ": b");
  auto c = flat_ints(r.at("c"), {n, n}, where + ": c");
  std::vector<long> th;
  if (r.has("theta")) th = flat_ints(r.at("theta"), {n}, where + ": theta");
  f.tuple = RibbonTuple::from_exponents(g, N, a, b, c, th);
  if (r.has("dsign")) {
    f.dsign = static_cast<int>(r.integer("dsign"));
    if (f.dsign != 1 && f.dsign != -1) throw ParseError(where + ": 'dsign' must be 1 or -1");
  }
  return f;
}

Json seed_json(const Seed& s) {
  Json j = Json::object();
  j["label"] = s.label;
  j["color"] = s.color;
  j["canonical"] = s.canonical;
  return j;
}

Seed seed_from(const Json& j, const std::string& where) {
  Reader r{j, where};
  Seed s;
  s.label = static_cast<int>(r.integer("label"));
  s.color = static_cast<int>(r.integer("color"));
  if (r.has("canonical")) {
    if (!j.at("canonical").is_boolean()) throw ParseError(where + ": 'canonical' must be a boolean");
    s.canonical = j.at("canonical").get<bool>();
  }
  return s;
}

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::Cross: return "cross";
    case EventKind::Kink: return "kink";
    case EventKind::Cup: return "cup";
    case EventKind::Cap: return "cap";
    case EventKind::Coupon: return "coupon";
  }
  return "?";
}

Json diagram_json(const Diagram& d) {
  Json j = Json::object();
  Json ins = Json::array();
  for (const auto& s : d.inputs) {
    Json e = seed_json(s.seed);
    e["orientation"] = s.eps;
    ins.push_back(e);
  }
  j["inputs"] = ins;
  Json evs = Json::array();
  for (const auto& e : d.events) {
    Json x = Json::object();
    x["event"] = kind_name(e.kind);
    x["position"] = e.pos;
    if (e.kind == EventKind::Coupon) {
      x["in"] = e.in;
      x["out"] = e.out_eps;
      x["value"] = e.scalar.str();
      Json ss = Json::array();
      for (const auto& s : e.seeds) ss.push_back(seed_json(s));
      x["seeds"] = ss;
    } else {
      x["orientation"] = e.sign;
      if (e.kind == EventKind::Cup) x["seed"] = seed_json(e.seeds.at(0));
    }
    evs.push_back(x);
  }
  j["events"] = evs;
  return j;
}

Diagram diagram_from(const Json& j, const std::string& where) {
  Reader r{j, where};
  Diagram d;
  if (r.has("inputs")) {
    for (const auto& e : r.at("inputs")) {
      InputStrand s;
      s.seed = seed_from(e, where + ": input");
      s.eps = static_cast<int>(Reader{e, where}.integer("orientation"));
      d.inputs.push_back(s);
    }
  }
  const Json& evs = r.at("events");
  if (!evs.is_array()) throw ParseError(where + ": 'events' must be an array");
  for (size_t i = 0; i < evs.size(); ++i) {
    std::string w = where + ": event " + std::to_string(i);
    Reader e{evs[i], w};
    std::string kind = e.string("event");
    int pos = static_cast<int>(e.integer("position"));
    if (kind == "coupon") {
      std::vector<int> out;
      for (const auto& o : e.at("out")) out.push_back(o.get<int>());
      std::vector<Seed> seeds;
      for (const auto& s : e.at("seeds")) seeds.push_back(seed_from(s, w));
      d.events.push_back(Event::coupon(pos, static_cast<int>(e.integer("in")), out, parse_cyclo(e.string("value")), seeds));
      continue;
    }
    int sign = static_cast<int>(e.integer("orientation"));
    if (sign != 1 && sign != -1) throw ParseError(w + ": orientation must be 1 or -1");
    if (kind == "cross") d.events.push_back(Event::cross(pos, sign));
    else if (kind == "kink") d.events.push_back(Event::kink(pos, sign));
    else if (kind == "cup") d.events.push_back(Event::cup(pos, sign, seed_from(e.at("seed"), w)));
    else if (kind == "cap") d.events.push_back(Event::cap(pos, sign));
    else throw ParseError(w + ": unknown event '" + kind + "'");
  }
  return d;
}

Json sparse(const Vec& v, const std::vector<int>& shape) {
  Json out = Json::array();
  for (size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    Json e = Json::array();
    size_t rest = idx;
    std::vector<int> t(shape.size());
    for (int k = static_cast<int>(shape.size()) - 1; k >= 0; --k) {
      t[k] = static_cast<int>(rest % shape[k]);
      rest /= shape[k];
    }
    for (int x : t) e.push_back(x);
    e.push_back(v[idx].str());
    out.push_back(e);
  }
  return out;
}

Vec dense(const Json& j, const std::vector<int>& shape, const std::string& what) {
  size_t total = 1;
  for (int s : shape) total *= s;
  Vec v(total, CycloNum(0));
  if (!j.is_array()) throw ParseError(what + ": expected a list of entries");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != shape.size() + 1 || !e.back().is_string())
      throw ParseError(what + ": entries are index lists followed by a value string");
    size_t idx = 0;
    for (size_t k = 0; k < shape.size(); ++k) {
      int i = e[k].get<int>();
      if (i < 0 || i >= shape[k]) throw ParseError(what + ": index out of range");
      idx = idx * shape[k] + i;
    }
    v[idx] += parse_cyclo(e.back().get<std::string>());
  }
  return v;
}

}  // namespace

CycloNum parse_cyclo(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty value");
  CycloNum total(0);
  size_t pos = 0;
  int sign = 1;
  if (s[0] == '-') {
    sign = -1;
    pos = 1;
  }
  while (pos <= s.size()) {
    size_t next = std::string::npos;
    int next_sign = 1;
    for (size_t k = pos; k + 2 < s.size(); ++k)
      if (s[k] == ' ' && (s[k + 1] == '+' || s[k + 1] == '-') && s[k + 2] == ' ') {
        next = k;
        next_sign = s[k + 1] == '+' ? 1 : -1;
        break;
      }
    std::string term = trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    try {
      size_t z = term.find("zeta");
      if (z == std::string::npos) {
        mpq_class q(term);
        q.canonicalize();
        total += CycloNum(q * sign);
      } else {
        mpq_class q(1);
        if (z > 0) {
          if (term[z - 1] != '*') throw ParseError("malformed term '" + term + "'");
          q = mpq_class(term.substr(0, z - 1));
          q.canonicalize();
        }
        size_t caret = term.find('^', z);
        if (caret == std::string::npos) throw ParseError("malformed term '" + term + "'");
        long N = std::stol(term.substr(z + 4, caret - z - 4));
        long k = std::stol(term.substr(caret + 1));
        if (N < 1) throw ParseError("malformed term '" + term + "'");
        total += CycloNum(q * sign) * CycloNum::root(N, k);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed value '" + text + "'");
    }
    if (next == std::string::npos) break;
    sign = next_sign;
    pos = next + 3;
  }
  return total;
}

long zeta_exponent(const CycloNum& x, long N) {
  auto r = x.as_root_of_unity();
  if (r) {
    long g = std::gcd(r->first, r->second);
    r->first /= g;
    r->second /= g;
  }
  if (!r || N % r->second != 0) throw DomainError("value " + x.str() + " is not a power of zeta_" + std::to_string(N));
  return r->first * (N / r->second) % N;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

CategoryFile parse_category_toml(const std::string& text, const std::string& source) {
  return category_from_json(parse_toml(text, source), source);
}

CategoryFile parse_category_json(const std::string& text, const std::string& source) {
  return category_from_json(parse_json(text, source), source);
}

std::string write_category_toml(const CategoryFile& f) {
  const RibbonTuple& t = f.tuple;
  const FiniteGroup& g = t.group;
  int n = g.order();
  std::ostringstream os;
  if (!f.name.empty()) os << "name = " << Json(f.name).dump() << "\n";
  if (is_named_spec(g.spec())) {
    os << "group = " << Json(g.spec()).dump() << "\n";
  } else {
    os << "group_name = " << Json(g.spec()).dump() << "\n";
    os << "group_table = [\n";
    for (int a = 0; a < n; ++a) {
      std::vector<long> row(g.table()[a].begin(), g.table()[a].end());
      os << "  " << ints_line(row, 0, n) << ",\n";
    }
    os << "]\n";
  }
  os << "order = " << t.order << "\n";
  os << "dsign = " << f.dsign << "\n";
  os << "b = " << ints_line(exponents(t.b, t.order), 0, n) << "\n";
  if (t.has_theta) os << "theta = " << ints_line(exponents(t.theta, t.order), 0, n) << "\n";
  auto c = exponents(t.c, t.order);
  os << "c = [\n";
  for (int x = 0; x < n; ++x) os << "  " << ints_line(c, x * n, n) << ",\n";
  os << "]\n";
  auto a = exponents(t.a, t.order);
  os << "a = [\n";
  for (int x = 0; x < n; ++x) {
    os << "  [";
    for (int y = 0; y < n; ++y) os << (y ? ", " : "") << ints_line(a, (x * n + y) * n, n);
    os << "],\n";
  }
  os << "]\n";
  return os.str();
}

CategoryFile load_category_file(const std::string& path) {
  std::string text = read_file(path);
  bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return json ? parse_category_json(text, path) : parse_category_toml(text, path);
}

ThinCategory category_of(const CategoryFile& f) {
  ThinCategory c = pointlike_category(f.tuple);
  if (!f.name.empty()) c.name = f.name;
  return c;
}

Diagram parse_diagram_json(const std::string& text, const std::string& source) {
  return diagram_from(parse_json(text, source), source);
}

std::string write_diagram_json(const Diagram& d) { return render(diagram_json(d)); }

SurgeryFile surgery_file(const SurgeryPresentation& p, const FiniteGroup& g) {
  SurgeryFile f;
  f.presentation = p;
  Tracing t = trace_components(p.diagram, g);
  for (const auto& ci : t.components) {
    if (!ci.canonical) continue;
    f.framings.push_back(ci.framing);
    f.labels.push_back(p.diagram.events[ci.base_cup].seeds[0].label);
  }
  return f;
}

Report check_surgery_file(const SurgeryFile& f, const FiniteGroup& g) {
  Report r("surgery file " + f.presentation.name);
  SurgeryFile traced = surgery_file(f.presentation, g);
  r.record("framings match the diagram", traced.framings == f.framings);
  r.record("labels match the diagram", traced.labels == f.labels);
  r.merge(check_special(f.presentation, g));
  return r;
}

SurgeryFile parse_surgery_json(const std::string& text, const std::string& source) {
  Json j = parse_json(text, source);
  Reader r{j, source};
  SurgeryFile f;
  if (r.has("name")) f.presentation.name = r.string("name");
  auto ints = [&](const std::string& key) {
    const Json& v = r.at(key);
    return flat_ints(v, {v.is_array() ? static_cast<int>(v.size()) : 0}, source + ": " + key);
  };
  for (long x : ints("framings")) f.framings.push_back(static_cast<int>(x));
  for (long x : ints("labels")) f.labels.push_back(static_cast<int>(x));
  f.presentation.diagram = diagram_from(r.at("diagram"), source);
  return f;
}

std::string write_surgery_json(const SurgeryFile& f) {
  Json j = Json::object();
  j["name"] = f.presentation.name;
  j["framings"] = f.framings;
  j["labels"] = f.labels;
  j["diagram"] = diagram_json(f.presentation.diagram);
  return render(j);
}

HopfFile parse_hopf_json(const std::string& text, const std::string& source) {
  Json j = parse_json(text, source);
  Reader r{j, source};
  HopfFile f;
  HopfAlgebraData& h = f.hopf;
  if (r.has("name")) h.name = r.string("name");
  int n = static_cast<int>(r.integer("dimension"));
  if (n < 1) throw ParseError(source + ": 'dimension' must be positive");
  h.alg.n = n;
  h.alg.mul = dense(r.at("mul"), {n, n, n}, source + ": mul");
  h.alg.unit = dense(r.at("unit"), {n}, source + ": unit");
  h.comul = dense(r.at("comul"), {n, n, n}, source + ": comul");
  h.counit = dense(r.at("counit"), {n}, source + ": counit");
  h.antipode = dense(r.at("antipode"), {n, n}, source + ": antipode");
  if (r.has("R")) f.R = dense(r.at("R"), {n, n}, source + ": R");
  if (r.has("v")) f.v = dense(r.at("v"), {n}, source + ": v");
  return f;
}

std::string write_hopf_json(const HopfFile& f) {
  const HopfAlgebraData& h = f.hopf;
  int n = h.alg.n;
  Json j = Json::object();
  j["name"] = h.name;
  j["dimension"] = n;
  j["mul"] = sparse(h.alg.mul, {n, n, n});
  j["unit"] = sparse(h.alg.unit, {n});
  j["comul"] = sparse(h.comul, {n, n, n});
  j["counit"] = sparse(h.counit, {n});
  j["antipode"] = sparse(h.antipode, {n, n});
  if (!f.R.empty()) j["R"] = sparse(f.R, {n, n});
  if (!f.v.empty()) j["v"] = sparse(f.v, {n});
  return render(j);
}

}  // namespace pitop
