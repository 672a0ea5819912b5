#include "homcolim/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace homcolim::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw validation_error("document: not valid JSON");
  return j;
}

Rat rational_field(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw validation_error("document: rational must be an integer or a \"p/q\" string");
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw validation_error(std::string("document: missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

template <typename K>
Mat<K> parse_matrix(const json& rows, int nrows, int ncols, const std::string& what);

template <>
QMat parse_matrix<Rat>(const json& rows, int nrows, int ncols, const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != nrows)
    throw validation_error("document: matrix for " + what + " has wrong row count");
  QMat m(nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != ncols)
      throw validation_error("document: matrix for " + what + " has wrong column count");
    for (int j = 0; j < ncols; ++j) {
      Rat v = rational_field(row[j]);
      if (v != 0) m.set(i, j, v);
    }
  }
  return m;
}

template <>
ZMat parse_matrix<Int>(const json& rows, int nrows, int ncols, const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != nrows)
    throw validation_error("document: matrix for " + what + " has wrong row count");
  ZMat m(nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != ncols)
      throw validation_error("document: matrix for " + what + " has wrong column count");
    for (int j = 0; j < ncols; ++j) {
      if (!row[j].is_number_integer())
        throw validation_error("document: integer matrix for " + what +
                               " has a non-integer entry");
      long v = row[j].get<long>();
      if (v != 0) m.set(i, j, Int(v));
    }
  }
  return m;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CategoryDoc parse_category(const std::string& text) {
  json j = parse_json(text);
  CategoryDoc doc;
  if (!j.contains("objects") || !j["objects"].is_array())
    throw validation_error("category: missing \"objects\" array");
  for (const json& o : j["objects"]) {
    if (!o.is_string()) throw validation_error("category: object names must be strings");
    std::string name = o.get<std::string>();
    if (doc.obj_index.count(name)) throw validation_error("category: duplicate object " + name);
    doc.obj_index[name] = static_cast<int>(doc.objects.size());
    doc.objects.push_back(name);
  }
  FinCategory& c = doc.cat;
  c.n_objects = static_cast<int>(doc.objects.size());

  auto add_morphism = [&](const std::string& name, int d, int cd) {
    if (doc.mor_index.count(name)) throw validation_error("category: duplicate morphism " + name);
    doc.mor_index[name] = static_cast<int>(doc.morphisms.size());
    doc.morphisms.push_back(name);
    c.dom.push_back(d);
    c.cod.push_back(cd);
  };
  if (j.contains("morphisms")) {
    if (!j["morphisms"].is_array()) throw validation_error("category: \"morphisms\" not an array");
    for (const json& m : j["morphisms"]) {
      if (!m.contains("name") || !m.contains("dom") || !m.contains("cod"))
        throw validation_error("category: morphism needs name/dom/cod");
      std::string d = m["dom"].get<std::string>(), cd = m["cod"].get<std::string>();
      if (!doc.obj_index.count(d) || !doc.obj_index.count(cd))
        throw validation_error("category: morphism endpoint not an object");
      add_morphism(m["name"].get<std::string>(), doc.obj_index[d], doc.obj_index[cd]);
    }
  }
  c.identity.assign(c.n_objects, -1);
  for (int o = 0; o < c.n_objects; ++o) {
    std::string idname = "id:" + doc.objects[o];
    auto it = doc.mor_index.find(idname);
    if (it != doc.mor_index.end()) {
      if (c.dom[it->second] != o || c.cod[it->second] != o)
        throw validation_error("category: " + idname + " is not an endomorphism of " +
                               doc.objects[o]);
      c.identity[o] = it->second;
    } else {
      add_morphism(idname, o, o);
      c.identity[o] = static_cast<int>(c.dom.size()) - 1;
    }
  }

  int nm = c.n_morphisms();
  c.comp.assign(nm, std::vector<int>(nm, -1));
  auto set_comp = [&](int g, int f, int gf) {
    if (c.cod[f] != c.dom[g]) throw validation_error("category: compose entry not composable");
    if (c.comp[g][f] != -1 && c.comp[g][f] != gf)
      throw validation_error("category: conflicting compose entries");
    c.comp[g][f] = gf;
  };
  for (int f = 0; f < nm; ++f) {
    set_comp(c.identity[c.cod[f]], f, f);
    set_comp(f, c.identity[c.dom[f]], f);
  }
  if (j.contains("compose")) {
    if (!j["compose"].is_array()) throw validation_error("category: \"compose\" not an array");
    for (const json& e : j["compose"]) {
      if (!e.is_array() || e.size() != 3)
        throw validation_error("category: compose entries are [g, f, gf] triples");
      for (const json& n : e)
        if (!n.is_string() || !doc.mor_index.count(n.get<std::string>()))
          throw validation_error("category: compose entry names an unknown morphism");
      set_comp(doc.mor_index[e[0].get<std::string>()], doc.mor_index[e[1].get<std::string>()],
               doc.mor_index[e[2].get<std::string>()]);
    }
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.cod[f] == c.dom[g] && c.comp[g][f] == -1)
        throw validation_error("category: composable pair " + doc.morphisms[g] + "∘" +
                               doc.morphisms[f] + " has no compose entry");
  c.validate(std::max(64, nm));
  return doc;
}

namespace {

template <typename K>
DiagramFunctorT<K> parse_functor_maps(const json& j, const CategoryDoc& c) {
  DiagramFunctorT<K> fun;
  fun.cat = &c.cat;
  if (!j.contains("dims") || !j["dims"].is_object())
    throw validation_error("functor: missing \"dims\" object");
  fun.dims.assign(c.cat.n_objects, -1);
  for (const auto& [name, d] : j["dims"].items()) {
    auto it = c.obj_index.find(name);
    if (it == c.obj_index.end()) throw validation_error("functor: unknown object " + name);
    if (!d.is_number_integer() || d.template get<int>() < 0)
      throw validation_error("functor: dims must be nonnegative integers");
    fun.dims[it->second] = d.template get<int>();
  }
  for (int o = 0; o < c.cat.n_objects; ++o)
    if (fun.dims[o] < 0)
      throw validation_error("functor: no dimension for object " + c.objects[o]);

  int nm = c.cat.n_morphisms();
  fun.maps.assign(nm, Mat<K>());
  std::vector<bool> given(nm, false);
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) throw validation_error("functor: \"maps\" not an object");
    for (const auto& [name, rows] : j["maps"].items()) {
      auto it = c.mor_index.find(name);
      if (it == c.mor_index.end()) throw validation_error("functor: unknown morphism " + name);
      int f = it->second;
      fun.maps[f] =
          parse_matrix<K>(rows, fun.dims[c.cat.cod[f]], fun.dims[c.cat.dom[f]], name);
      given[f] = true;
    }
  }
  for (int f = 0; f < nm; ++f)
    if (!given[f]) {
      if (!c.cat.is_identity(f))
        throw validation_error("functor: no matrix for morphism " + c.morphisms[f]);
      fun.maps[f] = Mat<K>::identity(fun.dims[c.cat.dom[f]]);
    }
  fun.validate();
  return fun;
}

}  // namespace

FunctorDoc parse_functor(const std::string& text, const CategoryDoc& c) {
  json j = parse_json(text);
  FunctorDoc doc;
  if (!j.contains("coeff") || !j["coeff"].is_string())
    throw validation_error("functor: missing \"coeff\" (\"Q\" or \"Z\")");
  doc.coeff = j["coeff"].get<std::string>();
  if (doc.coeff == "Q")
    doc.q = parse_functor_maps<Rat>(j, c);
  else if (doc.coeff == "Z")
    doc.z = parse_functor_maps<Int>(j, c);
  else
    throw validation_error("functor: coeff must be \"Q\" or \"Z\"");
  return doc;
}

FinGroup parse_group(const std::string& text) {
  json j = parse_json(text);
  if (j.contains("table")) {
    const json& t = j["table"];
    if (!t.is_array() || t.empty()) throw validation_error("group: empty table");
    FinGroup g;
    g.order = static_cast<int>(t.size());
    for (const json& row : t) {
      if (!row.is_array() || static_cast<int>(row.size()) != g.order)
        throw validation_error("group: table must be square");
      std::vector<int> r;
      for (const json& v : row) {
        if (!v.is_number_integer()) throw validation_error("group: table entries are indices");
        r.push_back(v.get<int>());
      }
      g.mult.push_back(r);
    }
    // locate the identity before full validation
    g.identity = -1;
    for (int e = 0; e < g.order && g.identity < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < g.order; ++x) {
        int ex = g.mult[e][x], xe = g.mult[x][e];
        ok &= ex >= 0 && ex < g.order && ex == x && xe == x;
        if (!ok) break;
      }
      if (ok) g.identity = e;
    }
    if (g.identity < 0) throw validation_error("group: no identity element in table");
    g.validate();
    return g;
  }
  if (j.contains("perm_generators")) {
    const json& gens = j["perm_generators"];
    if (!gens.is_array() || gens.empty())
      throw validation_error("group: empty \"perm_generators\"");
    std::vector<std::vector<int>> perms;
    size_t n = gens[0].is_array() ? gens[0].size() : 0;
    if (n == 0) throw validation_error("group: generators are permutations of {0..n-1}");
    for (const json& p : gens) {
      if (!p.is_array() || p.size() != n)
        throw validation_error("group: generators must have equal length");
      std::vector<int> perm;
      for (const json& v : p) perm.push_back(v.get<int>());
      perms.push_back(perm);
    }
    return permutation_group(static_cast<int>(n), perms);
  }
  throw validation_error("group: need \"table\" or \"perm_generators\"");
}

StructAlgebra parse_algebra(const std::string& text) {
  json j = parse_json(text);
  StructAlgebra a;
  a.dim = int_field(j, "dim");
  if (a.dim < 0) throw validation_error("algebra: negative dimension");
  if (!j.contains("table") || !j["table"].is_array() ||
      static_cast<int>(j["table"].size()) != a.dim)
    throw validation_error("algebra: \"table\" must have one row block per basis element");
  a.prod.assign(a.dim, std::vector<QVec>(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    const json& block = j["table"][i];
    if (!block.is_array() || static_cast<int>(block.size()) != a.dim)
      throw validation_error("algebra: table block has wrong length");
    for (int jj = 0; jj < a.dim; ++jj) {
      const json& cell = block[jj];
      if (!cell.is_array() || static_cast<int>(cell.size()) != a.dim)
        throw validation_error("algebra: product vectors need one coefficient per basis element");
      QVec v;
      for (int k = 0; k < a.dim; ++k) {
        Rat c = rational_field(cell[k]);
        if (c != 0) v.push_back_unchecked(k, c);
      }
      a.prod[i][jj] = v;
    }
  }
  if (j.contains("unital") && j["unital"].is_boolean() && j["unital"].get<bool>()) {
    a.unital = true;
    if (!j.contains("unit") || !j["unit"].is_array() ||
        static_cast<int>(j["unit"].size()) != a.dim)
      throw validation_error("algebra: unital algebras need a \"unit\" vector");
    for (int k = 0; k < a.dim; ++k) {
      Rat c = rational_field(j["unit"][k]);
      if (c != 0) a.unit.push_back_unchecked(k, c);
    }
  }
  if (j.contains("weights")) {
    if (!j["weights"].is_array() || static_cast<int>(j["weights"].size()) != a.dim)
      throw validation_error("algebra: \"weights\" needs one entry per basis element");
    for (const json& w : j["weights"]) a.weights.push_back(w.get<int>());
  }
  a.validate();
  return a;
}

GradedStructView::GradedStructView(const StructAlgebra* a) : a_(a) {
  if (!a->graded()) throw validation_error("graded view: algebra is ungraded");
  pos_.assign(a->dim, -1);
  for (int i = 0; i < a->dim; ++i) {
    std::vector<int>& slot = slots_[a->weights[i]];
    pos_[i] = static_cast<int>(slot.size());
    slot.push_back(i);
  }
}

int GradedStructView::dim(int w) const {
  auto it = slots_.find(w);
  return it == slots_.end() ? 0 : static_cast<int>(it->second.size());
}

QVec GradedStructView::mul(int w1, int i1, int w2, int i2) const {
  const std::vector<int>& s1 = slots_.at(w1);
  const std::vector<int>& s2 = slots_.at(w2);
  QVec prod = a_->prod[s1.at(i1)][s2.at(i2)];
  QVec out;
  for (const auto& [k, c] : prod.entries()) {
    if (a_->weights[k] != w1 + w2)
      throw validation_error("graded view: product is not weight-homogeneous");
    out.push_back_unchecked(pos_[k], c);
  }
  out.normalize();
  return out;
}

GradedPresentation PresentationDoc::presentation() const {
  return GradedPresentation(&free_algebra, view.get(), images);
}

std::unique_ptr<PresentationDoc> parse_presentation(const std::string& text, int truncation) {
  json j = parse_json(text);
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw validation_error("presentation: missing \"generators\"");
  std::vector<int> weights;
  std::vector<std::string> names;
  for (const json& g : j["generators"]) {
    if (!g.contains("name") || !g.contains("weight"))
      throw validation_error("presentation: generators need name and weight");
    names.push_back(g["name"].get<std::string>());
    int w = g["weight"].get<int>();
    if (w < 1) throw validation_error("presentation: generator weights must be >= 1");
    weights.push_back(w);
  }
  if (!j.contains("algebra")) throw validation_error("presentation: missing \"algebra\"");

  auto doc = std::make_unique<PresentationDoc>(
      PresentationDoc{GradedFreeAlgebra(weights, truncation), parse_algebra(j["algebra"].dump()),
                      nullptr, names, {}});
  if (!doc->target.graded())
    throw validation_error("presentation: target algebra must carry weights");
  doc->view = std::make_unique<GradedStructView>(&doc->target);

  if (!j.contains("images") || !j["images"].is_object())
    throw validation_error("presentation: missing \"images\"");
  for (size_t g = 0; g < names.size(); ++g) {
    if (!j["images"].contains(names[g]))
      throw validation_error("presentation: no image for generator " + names[g]);
    const json& vec = j["images"][names[g]];
    int d = doc->view->dim(weights[g]);
    if (!vec.is_array() || static_cast<int>(vec.size()) != d)
      throw validation_error("presentation: image of " + names[g] +
                             " must list one coefficient per weight-" +
                             std::to_string(weights[g]) + " basis element");
    QVec v;
    for (int k = 0; k < d; ++k) {
      Rat c = rational_field(vec[k]);
      if (c != 0) v.push_back_unchecked(k, c);
    }
    doc->images.push_back(v);
  }
  doc->presentation().validate(truncation);
  return doc;
}

FiniteRing parse_ring(const std::string& text) {
  json j = parse_json(text);
  if (j.contains("zmod")) {
    if (!j["zmod"].is_number_integer()) throw validation_error("ring: \"zmod\" must be an integer");
    return zmod(j["zmod"].get<int>());
  }
  FiniteRing r;
  r.size = int_field(j, "size");
  auto table = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array())
      throw validation_error(std::string("ring: missing table \"") + key + "\"");
    std::vector<std::vector<int>> t;
    for (const json& row : j[key]) {
      std::vector<int> rr;
      for (const json& v : row) rr.push_back(v.get<int>());
      t.push_back(rr);
    }
    return t;
  };
  r.add = table("add");
  r.mul = table("mul");
  r.one = int_field(j, "one");
  r.zero = 0;
  for (int z = 0; z < r.size; ++z) {
    bool ok = true;
    for (int x = 0; x < r.size && ok; ++x)
      ok = z < static_cast<int>(r.add.size()) && x < static_cast<int>(r.add[z].size()) &&
           r.add[z][x] == x;
    if (ok) {
      r.zero = z;
      break;
    }
  }
  r.validate();
  return r;
}

RingHom parse_ring_hom(const std::string& text, const FiniteRing& src, const FiniteRing& dst) {
  json j = parse_json(text);
  if (!j.contains("map") || !j["map"].is_array())
    throw validation_error("homomorphism: missing \"map\" array");
  RingHom f;
  f.src = &src;
  f.dst = &dst;
  for (const json& v : j["map"]) f.image.push_back(v.get<int>());
  f.validate();
  return f;
}

}  // namespace homcolim::io
