#include "weakhopf/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "weakhopf/dual.hpp"
#include "weakhopf/errors.hpp"

namespace weakhopf {
namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& source, const std::string& what) {
  throw ParseError(source + ": " + what);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) bad(source, "top level must be an object");
    return j;
  } catch (const json::parse_error& e) {
    bad(source, std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& source) {
  const auto it = j.find(key);
  if (it == j.end()) bad(source, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_of(const json& j, std::size_t bound, const std::string& source) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(source, "index must be a non-negative integer, got " + j.dump());
  }
  const auto v = j.get<std::size_t>();
  if (v >= bound) bad(source, "index " + std::to_string(v) + " out of range");
  return v;
}

Scalar coeff_of(const json& j, const Field& field, const std::string& source) {
  try {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::integer(field, j.get<long>());
  } catch (const std::exception& e) {
    bad(source, std::string("bad coefficient: ") + e.what());
  }
  bad(source, "coefficient must be a fraction string, got " + j.dump());
}

json coeff_json(const Scalar& s) { return s.to_string(); }

const json& array_of(const json& j, const std::string& source, const std::string& what) {
  if (!j.is_array()) bad(source, what + " must be an array");
  return j;
}

/// Reads [[d_0, ..., d_{a-1}, [[c_0, ..., c_{b-1}, coeff], ...]], ...] into a map.
LinMap read_table(const json& table, const Space& domain, const std::vector<std::size_t>& domain_dims,
                  const Space& codomain, const std::vector<std::size_t>& codomain_dims, const std::string& source,
                  const std::string& what) {
  LinMap out(domain, codomain);
  std::vector<std::vector<bool>> seen(domain.dim(), std::vector<bool>(codomain.dim(), false));
  for (const json& row : array_of(table, source, what)) {
    if (!row.is_array() || row.size() != domain_dims.size() + 1) bad(source, what + ": malformed entry " + row.dump());
    std::size_t col = 0;
    for (std::size_t t = 0; t < domain_dims.size(); ++t) col = col * domain_dims[t] + index_of(row[t], domain_dims[t], source);
    for (const json& term : array_of(row.back(), source, what)) {
      if (!term.is_array() || term.size() != codomain_dims.size() + 1) {
        bad(source, what + ": malformed term " + term.dump());
      }
      std::size_t r = 0;
      for (std::size_t t = 0; t < codomain_dims.size(); ++t) {
        r = r * codomain_dims[t] + index_of(term[t], codomain_dims[t], source);
      }
      if (seen[col][r]) bad(source, what + ": repeated coefficient in " + row.dump());
      seen[col][r] = true;
      out.set(r, col, coeff_of(term.back(), out.field(), source));
    }
  }
  return out;
}

std::vector<std::size_t> split(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t t = dims.size(); t-- > 0;) {
    out[t] = flat % dims[t];
    flat /= dims[t];
  }
  return out;
}

/// Rows of a table, one per domain index with a nonzero column.
std::vector<json> write_table(const LinMap& f, const std::vector<std::size_t>& domain_dims,
                              const std::vector<std::size_t>& codomain_dims) {
  std::vector<json> rows;
  for (std::size_t col = 0; col < f.cols(); ++col) {
    const auto& entries = f.column_entries(col);
    if (entries.empty()) continue;
    json row = json::array();
    for (std::size_t d : split(col, domain_dims)) row.push_back(d);
    json terms = json::array();
    for (const auto& e : entries) {
      json term = json::array();
      for (std::size_t c : split(e.row, codomain_dims)) term.push_back(c);
      term.push_back(coeff_json(e.value));
      terms.push_back(std::move(term));
    }
    row.push_back(std::move(terms));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<json> write_vector_terms(const std::vector<Scalar>& coords) {
  std::vector<json> out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out.push_back(json::array({i, coeff_json(coords[i])}));
  }
  return out;
}

Vector read_vector_terms(const json& j, const Space& space, const std::string& source, const std::string& what) {
  std::vector<Scalar> coords(space.dim(), Scalar::zero(space.field()));
  std::vector<bool> seen(space.dim(), false);
  for (const json& term : array_of(j, source, what)) {
    if (!term.is_array() || term.size() != 2) bad(source, what + ": malformed term " + term.dump());
    const std::size_t i = index_of(term[0], space.dim(), source);
    if (seen[i]) bad(source, what + ": repeated index " + std::to_string(i));
    seen[i] = true;
    coords[i] = coeff_of(term[1], space.field(), source);
  }
  return Vector(space, std::move(coords));
}

/// Canonical document: fixed key order, one table entry per line.
class Writer {
 public:
  void scalar(const std::string& key, const json& value) { fields_.push_back(quoted(key) + ": " + value.dump()); }
  void lines(const std::string& key, const std::vector<json>& rows) {
    if (rows.empty()) {
      fields_.push_back(quoted(key) + ": []");
      return;
    }
    std::string s = quoted(key) + ": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s += "    " + rows[i].dump();
      s += i + 1 < rows.size() ? ",\n" : "\n";
    }
    fields_.push_back(s + "  ]");
  }
  std::string str() const {
    std::string s = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      s += "  " + fields_[i];
      s += i + 1 < fields_.size() ? ",\n" : "\n";
    }
    return s + "}\n";
  }

 private:
  static std::string quoted(const std::string& key) { return json(key).dump(); }
  std::vector<std::string> fields_;
};

json field_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Field field_of(const json& j, const std::string& source) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    try {
      return Field::prime(j["Fp"].get<std::uint64_t>());
    } catch (const PreconditionError& e) {
      bad(source, e.what());
    }
  }
  bad(source, "field must be \"Q\" or {\"Fp\": p}");
}

void write_coalgebra_part(Writer& w, const Space& s, const LinMap& comult, const LinMap& counit) {
  const std::size_t n = s.dim();
  w.lines("comult", write_table(comult, {n}, {n, n}));
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < n; ++i) values.push_back(counit.at(0, i));
  w.lines("counit", write_vector_terms(values));
}

std::vector<json> basis_rows(const Space& s) {
  std::vector<json> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.emplace_back(s.label(i));
  return out;
}

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.size() > 1 && text[0] == 'F') {
    digits = text.substr(1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw PreconditionError("field must be Q or F<p>, got " + text);
  }
  return Field::prime(std::stoull(digits));
}

Coalgebra StructureData::coalgebra() const { return Coalgebra(space, comult, counit); }

WeakBialgebra StructureData::bialgebra() const {
  if (!mult || !unit) throw ParseError("structure has no multiplication or unit");
  return WeakBialgebra::unchecked(space, *mult, *unit, comult, counit);
}

WeakHopf StructureData::hopf() const {
  if (!antipode) throw ParseError("structure has no antipode");
  return WeakHopf::unchecked(bialgebra(), *antipode);
}

StructureData parse_structure(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  const Field field = field_of(member(j, "field", source), source);
  const json& basis = array_of(member(j, "basis", source), source, "basis");
  std::vector<std::string> labels;
  for (const json& l : basis) {
    if (!l.is_string()) bad(source, "basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (labels.empty()) bad(source, "basis must be nonempty");
  Space space = [&] {
    try {
      return Space::basis(field, labels);
    } catch (const PreconditionError& e) {
      bad(source, e.what());
    }
  }();
  const std::size_t n = space.dim();
  const Space hh = tensor_space(space, space);
  LinMap comult = read_table(member(j, "comult", source), space, {n}, hh, {n, n}, source, "comult");
  LinMap counit = LinMap::functional(read_vector_terms(member(j, "counit", source), space, source, "counit"));
  StructureData out{space, std::nullopt, std::nullopt, std::move(comult), std::move(counit), std::nullopt};
  if (j.contains("mult")) out.mult = read_table(j["mult"], hh, {n, n}, space, {n}, source, "mult");
  if (j.contains("unit")) out.unit = read_vector_terms(j["unit"], space, source, "unit");
  if (j.contains("antipode")) out.antipode = read_table(j["antipode"], space, {n}, space, {n}, source, "antipode");
  if (out.mult.has_value() != out.unit.has_value()) bad(source, "mult and unit must be given together");
  return out;
}

std::string write_structure(const WeakBialgebra& wb, const std::optional<LinMap>& antipode) {
  const std::size_t n = wb.dim();
  Writer w;
  w.scalar("field", field_json(wb.field()));
  w.lines("basis", basis_rows(wb.space()));
  w.lines("mult", write_table(wb.mult(), {n, n}, {n}));
  w.lines("unit", write_vector_terms(wb.unit().coords()));
  write_coalgebra_part(w, wb.space(), wb.comult(), wb.counit());
  if (antipode) w.lines("antipode", write_table(*antipode, {n}, {n}));
  return w.str();
}

std::string write_structure(const WeakHopf& wh) { return write_structure(wh, wh.antipode()); }

std::string write_coalgebra(const Coalgebra& c) {
  Writer w;
  w.scalar("field", field_json(c.field()));
  w.lines("basis", basis_rows(c.space()));
  write_coalgebra_part(w, c.space(), c.comult(), c.counit());
  return w.str();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string() + ": cannot write");
  out << text;
}

StructureData load_structure(const std::filesystem::path& path) {
  return parse_structure(read_text(path), path.filename().string());
}

std::optional<StructureData> embedded_structure(const std::filesystem::path& path, const std::string& key) {
  const std::string source = path.filename().string();
  const json j = parse_json(read_text(path), source);
  const auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  if (it->is_string()) return load_structure(path.parent_path() / it->get<std::string>());
  if (it->is_object()) return parse_structure(it->dump(), source + "#" + key);
  bad(source, "\"" + key + "\" must be a path or an object");
}

LinMap parse_rho(const std::string& text, const WeakHopf& h, const Coalgebra& c, const std::string& source) {
  const json j = parse_json(text, source);
  return read_table(member(j, "rho", source), c.space(), {c.dim()}, tensor_space(h.space(), c.space()),
                    {h.dim(), c.dim()}, source, "rho");
}

std::string write_rho(const CoactionMap& cm) {
  Writer w;
  w.lines("rho", write_table(cm.rho(), {cm.coalgebra().dim()}, {cm.hopf().dim(), cm.coalgebra().dim()}));
  return w.str();
}

LinMap parse_projection(const std::string& text, const Coalgebra& c, const std::string& source) {
  const json j = parse_json(text, source);
  return read_table(member(j, "pi", source), c.space(), {c.dim()}, c.space(), {c.dim()}, source, "pi");
}

std::string write_projection(const LinMap& pi) {
  Writer w;
  w.lines("pi", write_table(pi, {pi.cols()}, {pi.rows()}));
  return w.str();
}

LinMap parse_action(const std::string& text, const WeakHopf& acting, const Coalgebra& c, const std::string& source) {
  const json j = parse_json(text, source);
  return read_table(member(j, "act", source), tensor_space(c.space(), acting.space()), {c.dim(), acting.dim()},
                    c.space(), {c.dim()}, source, "act");
}

std::string write_action(const ModuleActionMap& ma) {
  Writer w;
  w.lines("act", write_table(ma.act(), {ma.coalgebra().dim(), ma.acting().dim()}, {ma.coalgebra().dim()}));
  return w.str();
}

std::vector<Vector> parse_lambdas(const std::string& text, const WeakHopf& h, const std::string& source) {
  const json j = parse_json(text, source);
  const Space ds = dual_space(h.space());
  std::vector<Vector> out;
  if (j.contains("lambda")) out.push_back(read_vector_terms(j["lambda"], ds, source, "lambda"));
  if (j.contains("lambdas")) {
    for (const json& l : array_of(j["lambdas"], source, "lambdas")) out.push_back(read_vector_terms(l, ds, source, "lambda"));
  }
  if (out.empty()) bad(source, "missing \"lambda\" or \"lambdas\"");
  return out;
}

std::vector<FiniteGroup> parse_group_list(const std::string& comma_separated) {
  std::vector<FiniteGroup> out;
  std::stringstream ss(comma_separated);
  std::string name;
  while (std::getline(ss, name, ',')) out.push_back(FiniteGroup::named(name));
  if (out.empty()) throw PreconditionError("empty group list");
  return out;
}

Groupoid parse_groupoid(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  auto strings = [&](const json& arr, const std::string& what) {
    std::vector<std::string> out;
    for (const json& s : array_of(arr, source, what)) {
      if (!s.is_string()) bad(source, what + " entries must be strings");
      out.push_back(s.get<std::string>());
    }
    return out;
  };
  try {
    if (j.contains("groups")) {
      std::vector<FiniteGroup> groups;
      for (const json& g : array_of(j["groups"], source, "groups")) {
        if (g.is_string()) {
          groups.push_back(FiniteGroup::named(g.get<std::string>()));
          continue;
        }
        if (!g.is_object()) bad(source, "group must be a name or a Cayley table");
        std::vector<std::vector<std::string>> table;
        for (const json& row : array_of(member(g, "table", source), source, "table")) table.push_back(strings(row, "table row"));
        const json& id = member(g, "identity", source);
        if (!id.is_string()) bad(source, "identity must be a label");
        groups.push_back(FiniteGroup::from_table(strings(member(g, "elements", source), "elements"), id.get<std::string>(), table));
      }
      if (groups.empty()) bad(source, "groups must be nonempty");
      return Groupoid::disjoint_union(groups);
    }
    std::vector<Groupoid::Composition> compose;
    for (const json& t : array_of(member(j, "compose", source), source, "compose")) {
      const auto triple = strings(t, "compose entry");
      if (triple.size() != 3) bad(source, "compose entries are [g, h, gh]");
      compose.emplace_back(triple[0], triple[1], triple[2]);
    }
    return Groupoid::from_table(strings(member(j, "arrows", source), "arrows"),
                                strings(member(j, "identities", source), "identities"), compose);
  } catch (const PreconditionError& e) {
    bad(source, e.what());
  }
}

}  // namespace weakhopf
