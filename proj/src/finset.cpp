#include "idsem/finset.hpp"

#include <algorithm>
#include <map>

namespace idsem {

Obj make_obj(Elem id, std::vector<Elem> elems, const char* construction) {
  if (elems.size() > kMaxSetSize)
    throw Error("set.size-cap", std::string(construction) + " would materialize " +
                                    std::to_string(elems.size()) + " elements (cap " +
                                    std::to_string(kMaxSetSize) + ") for " + id.str());
  auto d = std::make_shared<ObjData>();
  d->id = std::move(id);
  d->elems = std::move(elems);
  return d;
}

Obj skeletal_set(std::size_t n) {
  std::vector<Elem> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back(Elem::num(static_cast<std::int64_t>(i)));
  return make_obj(Elem::tup({Elem::sym("skel"), Elem::num(static_cast<std::int64_t>(n))}),
                  std::move(e));
}

bool same_obj(const Obj& a, const Obj& b) {
  return a == b || a->id == b->id;
}

std::optional<std::size_t> elem_index(const Obj& o, const Elem& e) {
  for (std::size_t i = 0; i < o->elems.size(); ++i)
    if (o->elems[i] == e) return i;
  return std::nullopt;
}

const Elem& Mor::apply(const Elem& x) const {
  auto i = elem_index(dom, x);
  if (!i) throw Error("mor.apply", "element " + x.str() + " not in " + dom->id.str());
  return cod->elems.at(table.at(*i));
}

bool operator==(const Mor& a, const Mor& b) {
  return a.dom->id == b.dom->id && a.cod->id == b.cod->id && a.table == b.table;
}

Mor make_mor(Obj dom, Obj cod, std::vector<std::uint32_t> table) {
  if (table.size() != dom->elems.size())
    throw Error("mor.shape", "table size " + std::to_string(table.size()) +
                                 " does not match |" + dom->id.str() + "| = " +
                                 std::to_string(dom->elems.size()));
  for (auto v : table)
    if (v >= cod->elems.size())
      throw Error("mor.shape", "table entry out of range for " + cod->id.str());
  return Mor{std::move(dom), std::move(cod), std::move(table)};
}

Mor mor_from_fn(const Obj& dom, const Obj& cod, const std::function<Elem(const Elem&)>& fn) {
  std::vector<std::uint32_t> t;
  t.reserve(dom->elems.size());
  for (const Elem& x : dom->elems) {
    Elem y = fn(x);
    auto i = elem_index(cod, y);
    if (!i)
      throw Error("mor.value", "value " + y.str() + " of " + x.str() + " not in " +
                                   cod->id.str());
    t.push_back(static_cast<std::uint32_t>(*i));
  }
  return Mor{dom, cod, std::move(t)};
}

Mor identity_mor(const Obj& o) {
  std::vector<std::uint32_t> t(o->elems.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  return Mor{o, o, std::move(t)};
}

Mor compose(const Mor& f, const Mor& g) {
  if (f.cod->id != g.dom->id)
    throw Error("fincat.compose", "codomain " + f.cod->id.str() +
                                      " does not match domain " + g.dom->id.str());
  std::vector<std::uint32_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return Mor{f.dom, g.cod, std::move(t)};
}

bool is_injective(const Mor& m) {
  std::vector<bool> seen(m.cod->elems.size(), false);
  for (auto v : m.table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_surjective(const Mor& m) {
  std::vector<bool> seen(m.cod->elems.size(), false);
  for (auto v : m.table) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_iso(const Mor& m) {
  return m.dom->elems.size() == m.cod->elems.size() && is_injective(m);
}

Mor inverse(const Mor& m) {
  if (!is_iso(m)) throw Error("mor.inverse", "not an isomorphism: " + mor_enc(m).str());
  std::vector<std::uint32_t> t(m.cod->elems.size());
  for (std::size_t i = 0; i < m.table.size(); ++i) t[m.table[i]] = static_cast<std::uint32_t>(i);
  return Mor{m.cod, m.dom, std::move(t)};
}

Mor unique_to_singleton(const Obj& from, const Obj& pt) {
  if (pt->elems.size() != 1)
    throw Error("mor.to-final", pt->id.str() + " is not a singleton");
  return Mor{from, pt, std::vector<std::uint32_t>(from->elems.size(), 0)};
}

Elem graph_enc(const Mor& m) {
  std::vector<Elem> pairs;
  pairs.reserve(m.table.size());
  for (std::size_t i = 0; i < m.table.size(); ++i)
    pairs.push_back(Elem::tup({m.dom->elems[i], m.cod->elems[m.table[i]]}));
  std::sort(pairs.begin(), pairs.end());
  return Elem::tup(std::move(pairs));
}

Elem mor_enc(const Mor& m) {
  return Elem::tup({Elem::sym("mor"), m.dom->id, m.cod->id, graph_enc(m)});
}

std::vector<Mor> all_functions(const Obj& a, const Obj& b, std::size_t limit) {
  const std::size_t n = a->elems.size(), k = b->elems.size();
  if (n == 0) return {Mor{a, b, {}}};
  if (k == 0) return {};
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= static_cast<double>(k);
    if (count > static_cast<double>(limit))
      throw Error("bound.overflow", "hom(" + a->id.str() + ", " + b->id.str() +
                                        ") exceeds enumeration limit");
  }
  std::vector<Mor> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::uint32_t> t(n, 0);
  for (;;) {
    out.push_back(Mor{a, b, t});
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++t[i] < k) break;
      t[i] = 0;
      if (i == 0) return out;
    }
  }
}

FinCategory finset_category(std::vector<Obj> verification_objects) {
  auto pool = std::make_shared<std::vector<Obj>>(std::move(verification_objects));
  FinCategory c;
  c.objects = [pool](std::size_t bound) {
    std::vector<Obj> out;
    for (const Obj& o : *pool) {
      if (out.size() >= bound) break;
      out.push_back(o);
    }
    return out;
  };
  c.hom = [](const Obj& a, const Obj& b) { return all_functions(a, b); };
  c.identity = [](const Obj& o) { return identity_mor(o); };
  c.compose = [](const Mor& f, const Mor& g) { return compose(f, g); };
  return c;
}

bool square_commutes(const CommSquare& sq) {
  return compose(sq.top, sq.right) == compose(sq.left, sq.bottom);
}

bool verify_pullback(const CommSquare& sq, const FinCategory& cat, std::size_t object_bound) {
  if (!square_commutes(sq))
    throw Error("fincat.square", "square does not commute: top∘right ≠ left∘bottom");
  const Obj& apex = sq.top.dom;
  for (const Obj& w : cat.objects(object_bound)) {
    for (const Mor& u : cat.hom(w, sq.top.cod)) {
      Mor ur = cat.compose(u, sq.right);
      for (const Mor& v : cat.hom(w, sq.left.cod)) {
        if (!(ur == cat.compose(v, sq.bottom))) continue;
        std::size_t mediators = 0;
        for (const Mor& m : cat.hom(w, apex)) {
          if (cat.compose(m, sq.top) == u && cat.compose(m, sq.left) == v) ++mediators;
          if (mediators > 1) return false;
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

Mor mediate(const Obj& apex, const Mor& leg_b, const Mor& leg_c, const Mor& cone_b,
            const Mor& cone_c) {
  if (cone_b.dom->id != cone_c.dom->id)
    throw Error("fincat.mediate", "cone legs have different domains");
  const Obj& w = cone_b.dom;
  std::vector<std::uint32_t> t(w->elems.size());
  for (std::size_t i = 0; i < w->elems.size(); ++i) {
    std::optional<std::size_t> found;
    for (std::size_t z = 0; z < apex->elems.size(); ++z) {
      if (leg_b.table[z] == cone_b.table[i] && leg_c.table[z] == cone_c.table[i]) {
        if (found)
          throw Error("fincat.mediate", "mediator not unique at " + w->elems[i].str() +
                                            " into " + apex->id.str());
        found = z;
      }
    }
    if (!found)
      throw Error("fincat.mediate",
                  "no mediator at " + w->elems[i].str() + " into " + apex->id.str());
    t[i] = static_cast<std::uint32_t>(*found);
  }
  return Mor{w, apex, std::move(t)};
}

Report check_category_axioms(const FinCategory& cat, std::size_t bound) {
  Report rep;
  std::vector<Obj> objs = cat.objects(bound);
  bool complete = cat.objects(bound + 1).size() == objs.size();

  auto& unit = rep.begin_check("fincat.unit", "unit laws");
  auto& assoc = rep.begin_check("fincat.assoc", "associativity");
  struct HomSet {
    Obj a, b;
    std::vector<Mor> ms;
  };
  std::vector<HomSet> homs;
  for (const Obj& a : objs)
    for (const Obj& b : objs) homs.push_back({a, b, cat.hom(a, b)});

  for (const auto& h : homs)
    for (const Mor& f : h.ms) {
      bool ok1 = cat.compose(cat.identity(h.a), f) == f;
      bool ok2 = cat.compose(f, cat.identity(h.b)) == f;
      rep.note_instance(unit, ok1 && ok2, "unit law fails for " + mor_enc(f).str());
    }

  for (const auto& hab : homs)
    for (const auto& hbc : homs) {
      if (!same_obj(hab.b, hbc.a)) continue;
      for (const auto& hcd : homs) {
        if (!same_obj(hbc.b, hcd.a)) continue;
        for (const Mor& f : hab.ms)
          for (const Mor& g : hbc.ms) {
            Mor fg = cat.compose(f, g);
            for (const Mor& h : hcd.ms) {
              bool ok = cat.compose(fg, h) == cat.compose(f, cat.compose(g, h));
              rep.note_instance(assoc, ok,
                                "associativity fails for " + mor_enc(f).str() + " ; " +
                                    mor_enc(g).str() + " ; " + mor_enc(h).str());
            }
          }
      }
    }

  if (!complete) {
    auto& inc = rep.begin_check("fincat.enumeration", "object enumeration");
    inc.status = Status::skipped;
    inc.detail = "enumeration exceeds bound " + std::to_string(bound) + "; report incomplete";
  }
  return rep;
}

bool is_final(const FinCategory& cat, const Obj& x, std::size_t bound) {
  for (const Obj& w : cat.objects(bound))
    if (cat.hom(w, x).size() != 1) return false;
  return true;
}

FunctorData identity_functor() {
  FunctorData fd;
  fd.on_obj = [](const Obj& o) { return o; };
  fd.on_mor = [](const Mor& m) { return m; };
  return fd;
}

Report check_functor(const FunctorData& fd, const FinCategory& src, const FinCategory& dst,
                     std::size_t bound, const std::vector<CommSquare>& designated_squares) {
  Report rep;
  std::vector<Obj> objs = src.objects(bound);

  auto& shape = rep.begin_check("fincat.functor-shape", "domain/codomain preservation");
  auto& idp = rep.begin_check("fincat.functor-identity", "identity preservation");
  auto& cp = rep.begin_check("fincat.functor-compose", "composition preservation");

  for (const Obj& a : objs) {
    rep.note_instance(idp, fd.on_mor(src.identity(a)) == dst.identity(fd.on_obj(a)),
                      "identity image differs at " + a->id.str());
  }
  for (const Obj& a : objs)
    for (const Obj& b : objs)
      for (const Mor& f : src.hom(a, b)) {
        Mor ff = fd.on_mor(f);
        bool okshape = same_obj(ff.dom, fd.on_obj(a)) && same_obj(ff.cod, fd.on_obj(b));
        rep.note_instance(shape, okshape, "image endpoints differ for " + mor_enc(f).str());
        if (!okshape) continue;
        for (const Obj& c : objs)
          for (const Mor& g : src.hom(b, c)) {
            bool ok = fd.on_mor(src.compose(f, g)) == dst.compose(ff, fd.on_mor(g));
            rep.note_instance(cp, ok, "composite image differs for " + mor_enc(f).str() +
                                          " ; " + mor_enc(g).str());
          }
      }

  if (!designated_squares.empty()) {
    auto& sq = rep.begin_check("fincat.functor-squares", "designated squares → pullbacks");
    for (const CommSquare& s : designated_squares) {
      CommSquare img{fd.on_mor(s.top), fd.on_mor(s.right), fd.on_mor(s.left),
                     fd.on_mor(s.bottom)};
      bool ok = verify_pullback(img, dst);
      rep.note_instance(sq, ok, "image square not a pullback");
    }
  }
  return rep;
}

}  // namespace idsem
