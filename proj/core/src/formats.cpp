#include "matroidal/formats.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "matroidal/error.hpp"

namespace matroidal {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  fail(Errc::schema_error, msg + " at " + (path.empty() ? "/" : path), path);
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(path + "/" + key, "missing required field");
  return *it;
}

int int_field(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> label_vector(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of labels");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      schema_fail(path + "/" + std::to_string(i), "expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

int resolve_vertex(const json& v, const std::string& path,
                   const std::vector<std::string>& labels) {
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 1 || i > (int)labels.size())
      schema_fail(path, "vertex index out of range");
    return i - 1;
  }
  if (v.is_string()) {
    auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
    if (it == labels.end()) schema_fail(path, "unknown vertex label");
    return (int)(it - labels.begin());
  }
  schema_fail(path, "expected a vertex label or 1-based index");
}

Mask resolve_set(const json& j, const std::string& path,
                 const std::vector<std::string>& labels) {
  if (!j.is_array()) schema_fail(path, "expected an array of vertices");
  Mask m = 0;
  for (size_t i = 0; i < j.size(); ++i)
    m |= bit(resolve_vertex(j[i], path + "/" + std::to_string(i), labels));
  return m;
}

Matroid eval_expr(const json& j, const std::string& path) {
  const json& opj = member(j, path, "op");
  if (!opj.is_string()) schema_fail(path + "/op", "expected a string");
  std::string op = opj.get<std::string>();

  if (op == "uniform") {
    int r = int_field(member(j, path, "r"), path + "/r");
    int n = int_field(member(j, path, "n"), path + "/n");
    if (n < 0 || n > ground_set_cap())
      fail(Errc::size_bound_exceeded, "ground set exceeds MR_MAX_GROUND_SET");
    if (r < 0 || r > n) schema_fail(path + "/r", "rank out of range");
    return Matroid::uniform(r, n);
  }
  if (op == "fano") return Matroid::fano();
  if (op == "bases") {
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = label_vector(j["labels"], path + "/labels");
    } else {
      int n = int_field(member(j, path, "n"), path + "/n");
      if (n < 0) schema_fail(path + "/n", "expected a nonnegative integer");
      for (int v = 0; v < n; ++v) labels.push_back("x" + std::to_string(v + 1));
    }
    int n = (int)labels.size();
    if (n > ground_set_cap())
      fail(Errc::size_bound_exceeded, "ground set exceeds MR_MAX_GROUND_SET");
    Mask ground = full_mask(n);
    if (j.contains("ground")) ground = resolve_set(j["ground"], path + "/ground", labels);
    const json& bj = member(j, path, "bases");
    if (!bj.is_array()) schema_fail(path + "/bases", "expected an array of bases");
    if (bj.empty())
      fail(Errc::empty_basis_set, "a matroid needs at least one basis at " + path + "/bases",
           path + "/bases");
    std::vector<Mask> bases;
    for (size_t i = 0; i < bj.size(); ++i)
      bases.push_back(resolve_set(bj[i], path + "/bases/" + std::to_string(i), labels));
    return Matroid::from_bases_on_ground(n, ground, std::move(bases), std::move(labels));
  }
  if (op == "dual") return eval_expr(member(j, path, "of"), path + "/of").dual();
  if (op == "delete" || op == "restrict" || op == "contract") {
    Matroid m = eval_expr(member(j, path, "of"), path + "/of");
    Mask set = resolve_set(member(j, path, "set"), path + "/set", m.labels());
    if (op == "delete") return m.deletion(set);
    if (op == "restrict") return m.restrict_to(set);
    return m.contract(set);
  }
  if (op == "truncate") {
    Matroid m = eval_expr(member(j, path, "of"), path + "/of");
    return m.truncate(int_field(member(j, path, "rank"), path + "/rank"));
  }
  if (op == "direct_sum") {
    Matroid l = eval_expr(member(j, path, "left"), path + "/left");
    Matroid r = eval_expr(member(j, path, "right"), path + "/right");
    if (l.n() + r.n() > ground_set_cap())
      fail(Errc::size_bound_exceeded, "ground set exceeds MR_MAX_GROUND_SET");
    return Matroid::direct_sum(l, r);
  }
  schema_fail(path + "/op", "unknown operation '" + op + "'");
}

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::schema_error, "input is not valid JSON", "/");
  return j;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct Factor {
  std::string name;
  int exp = 1;
};

std::vector<Factor> parse_factors(const std::string& text) {
  std::vector<Factor> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, '*')) {
    piece = trimmed(piece);
    if (piece.empty())
      fail(Errc::schema_error, "empty factor in monomial '" + text + "'");
    Factor f;
    size_t caret = piece.find('^');
    std::string name = trimmed(caret == std::string::npos ? piece : piece.substr(0, caret));
    if (caret != std::string::npos) {
      std::string e = trimmed(piece.substr(caret + 1));
      try {
        size_t used = 0;
        f.exp = std::stoi(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        fail(Errc::schema_error, "bad exponent in monomial '" + text + "'");
      }
      if (f.exp < 0) fail(Errc::schema_error, "negative exponent in '" + text + "'");
    }
    f.name = name;
    out.push_back(std::move(f));
  }
  if (out.empty()) fail(Errc::schema_error, "empty monomial");
  return out;
}

int name_index(const std::string& name, const std::vector<std::string>& names) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    fail(Errc::schema_error, "unknown variable '" + name + "'");
  return (int)(it - names.begin());
}

// Accepts only x<k> names; returns the 1-based index.
int x_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x')
    fail(Errc::schema_error, "unknown variable '" + name + "'");
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit((unsigned char)name[i]))
      fail(Errc::schema_error, "unknown variable '" + name + "'");
  int k = std::stoi(name.substr(1));
  if (k < 1) fail(Errc::schema_error, "unknown variable '" + name + "'");
  return k;
}

std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == '\n') {
      if (!trimmed(cur).empty()) out.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trimmed(cur).empty()) out.push_back(trimmed(cur));
  return out;
}

}  // namespace

int ground_set_cap() {
  const char* env = std::getenv("MR_MAX_GROUND_SET");
  if (!env || !*env) return 12;
  int cap = std::atoi(env);
  return cap >= 1 ? std::min(cap, 31) : 12;
}

Matroid parse_matroid_expr(const std::string& json_text) {
  return eval_expr(parse_document(json_text), "");
}

std::string matroid_to_json(const Matroid& m) {
  json j;
  j["op"] = "bases";
  j["labels"] = m.labels();
  if (m.ground() != full_mask(m.n())) {
    json g = json::array();
    for (int v : bits_of(m.ground())) g.push_back(m.label_of(v));
    j["ground"] = g;
  }
  json bs = json::array();
  for (Mask b : m.bases()) {
    json one = json::array();
    for (int v : bits_of(b)) one.push_back(m.label_of(v));
    bs.push_back(one);
  }
  j["bases"] = bs;
  return j.dump(2) + "\n";
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int v = 0; v < n; ++v) out.push_back("x" + std::to_string(v + 1));
  return out;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
  std::string t = trimmed(text);
  if (t == "1") return Monomial::one((int)names.size());
  std::vector<int> exps(names.size(), 0);
  for (const Factor& f : parse_factors(t)) exps[name_index(f.name, names)] += f.exp;
  return Monomial::from_exponents(exps);
}

std::string monomial_to_text(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (int v = 0; v < m.n(); ++v) {
    if (m.exp(v) == 0) continue;
    if (!out.empty()) out += "*";
    out += v < (int)names.size() ? names[v] : "x" + std::to_string(v + 1);
    if (m.exp(v) > 1) out += "^" + std::to_string(m.exp(v));
  }
  return out;
}

MonomialIdeal ideal_from_text(const std::string& text,
                              const std::vector<std::string>& names) {
  auto terms = split_terms(text);
  if (terms.empty()) fail(Errc::schema_error, "empty ideal text");

  std::vector<std::string> resolved = names;
  if (resolved.empty()) {
    int n = 0;
    for (const auto& t : terms)
      if (t != "0" && t != "1")
        for (const Factor& f : parse_factors(t)) n = std::max(n, x_index(f.name));
    resolved = default_names(n);
  }
  if ((int)resolved.size() > ground_set_cap())
    fail(Errc::size_bound_exceeded, "variable count exceeds MR_MAX_GROUND_SET");

  if (terms.size() == 1 && terms[0] == "0")
    return MonomialIdeal::zero((int)resolved.size());
  std::vector<Monomial> gens;
  for (const auto& t : terms) {
    if (t == "0") fail(Errc::schema_error, "'0' must stand alone");
    gens.push_back(parse_monomial(t, resolved));
  }
  return MonomialIdeal::from_gens((int)resolved.size(), std::move(gens));
}

std::string ideal_to_text(const MonomialIdeal& i, const std::vector<std::string>& names) {
  if (i.is_zero()) return "0";
  auto use = names.empty() ? default_names(i.n()) : names;
  std::string out;
  for (const auto& g : i.gens()) {
    if (!out.empty()) out += ", ";
    out += monomial_to_text(g, use);
  }
  return out;
}

std::string ideal_to_json(const MonomialIdeal& i) {
  json j;
  j["n"] = i.n();
  json gens = json::array();
  for (const auto& g : i.gens()) gens.push_back(g.exponents());
  j["gens"] = gens;
  return j.dump(2) + "\n";
}

MonomialIdeal ideal_from_json(const std::string& json_text) {
  json j = parse_document(json_text);
  int n = int_field(member(j, "", "n"), "/n");
  if (n < 0) schema_fail("/n", "expected a nonnegative integer");
  if (n > ground_set_cap())
    fail(Errc::size_bound_exceeded, "variable count exceeds MR_MAX_GROUND_SET");
  const json& gj = member(j, "", "gens");
  if (!gj.is_array()) schema_fail("/gens", "expected an array");
  std::vector<Monomial> gens;
  for (size_t g = 0; g < gj.size(); ++g) {
    const json& row = gj[g];
    std::string path = "/gens/" + std::to_string(g);
    if (!row.is_array() || (int)row.size() != n)
      schema_fail(path, "expected an exponent list of length n");
    std::vector<int> exps;
    for (size_t v = 0; v < row.size(); ++v) {
      int e = int_field(row[v], path + "/" + std::to_string(v));
      if (e < 0) schema_fail(path + "/" + std::to_string(v), "negative exponent");
      exps.push_back(e);
    }
    gens.push_back(Monomial::from_exponents(exps));
  }
  return gens.empty() ? MonomialIdeal::zero(n) : MonomialIdeal::from_gens(n, std::move(gens));
}

std::string betti_to_json(const BettiTable& t) {
  json j;
  j["n"] = t.n();
  json rows = json::array();
  for (const auto& [h, row] : t.rows()) {
    json entries = json::array();
    for (const auto& [mu, cnt] : row) {
      json e;
      e["multidegree"] = mu.exponents();
      e["count"] = cnt;
      entries.push_back(e);
    }
    json r;
    r["h"] = h;
    r["entries"] = entries;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

BettiTable betti_from_json(const std::string& json_text) {
  json j = parse_document(json_text);
  int n = int_field(member(j, "", "n"), "/n");
  if (n < 0) schema_fail("/n", "expected a nonnegative integer");
  BettiTable t(n);
  const json& rows = member(j, "", "rows");
  if (!rows.is_array()) schema_fail("/rows", "expected an array");
  for (size_t r = 0; r < rows.size(); ++r) {
    std::string rpath = "/rows/" + std::to_string(r);
    int h = int_field(member(rows[r], rpath, "h"), rpath + "/h");
    const json& entries = member(rows[r], rpath, "entries");
    if (!entries.is_array()) schema_fail(rpath + "/entries", "expected an array");
    for (size_t e = 0; e < entries.size(); ++e) {
      std::string epath = rpath + "/entries/" + std::to_string(e);
      const json& mj = member(entries[e], epath, "multidegree");
      if (!mj.is_array() || (int)mj.size() != n)
        schema_fail(epath + "/multidegree", "expected an exponent list of length n");
      std::vector<int> exps;
      for (size_t v = 0; v < mj.size(); ++v)
        exps.push_back(int_field(mj[v], epath + "/multidegree/" + std::to_string(v)));
      long cnt = (long)int_field(member(entries[e], epath, "count"), epath + "/count");
      t.add(h, Monomial::from_exponents(exps), cnt);
    }
  }
  return t;
}

std::string betti_to_text(const BettiTable& t, const std::vector<std::string>& names) {
  auto use = names.empty() ? default_names(t.n()) : names;
  std::vector<std::array<std::string, 3>> cells;
  cells.push_back({"h", "multidegree", "count"});
  for (const auto& [h, row] : t.rows())
    for (const auto& [mu, cnt] : row)
      cells.push_back({std::to_string(h), monomial_to_text(mu, use), std::to_string(cnt)});
  size_t w0 = 0, w1 = 0;
  for (const auto& c : cells) {
    w0 = std::max(w0, c[0].size());
    w1 = std::max(w1, c[1].size());
  }
  std::ostringstream os;
  for (const auto& c : cells) {
    os << c[0] << std::string(w0 - c[0].size() + 2, ' ')
       << c[1] << std::string(w1 - c[1].size() + 2, ' ')
       << c[2] << "\n";
  }
  return os.str();
}

}  // namespace matroidal
