#include "idsem/lcc.hpp"

#include <algorithm>

namespace idsem {

namespace {

Elem graph_lookup(const Elem& graph, const Elem& key) {
  for (const Elem& pr : graph.parts())
    if (pr.parts()[0] == key) return pr.parts()[1];
  throw Error("lcc.graph", "no entry for " + key.str() + " in " + graph.str());
}

std::vector<Elem> fiber_of(const Mor& proj, const Elem& b) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < proj.dom->elems.size(); ++i)
    if (proj.apply_idx(i) == b) out.push_back(proj.dom->elems[i]);
  return out;
}

void require_same_base(const SliceObj& a, const SliceObj& b, const char* who) {
  if (a.base()->id != b.base()->id)
    throw Error("lcc.base", std::string(who) + ": slices over different bases " +
                                a.base()->id.str() + " vs " + b.base()->id.str());
}

void require_over(const Mor& m, const Mor& via, const Mor& expected, const char* who) {
  if (!(compose(m, via) == expected))
    throw Error("lcc.over-base", std::string(who) + ": morphism is not over the base");
}

}  // namespace

Mor FiberProductChoice::pair(const Mor& u, const Mor& v) const {
  if (!(compose(u, left) == compose(v, right)))
    throw Error("lcc.fp-pair", "cone does not commute over " + left.cod->id.str());
  return mediate(apex, pr1, pr2, u, v);
}

FiberProductChoice Lcc::fiber_product(const Mor& left, const Mor& right) const {
  if (left.cod->id != right.cod->id)
    throw Error("lcc.fp", "cospan codomains differ: " + left.cod->id.str() + " vs " +
                              right.cod->id.str());
  std::vector<Elem> elems;
  for (const Elem& x : left.dom->elems)
    for (const Elem& y : right.dom->elems)
      if (left.apply(x) == right.apply(y)) elems.push_back(Elem::tup({x, y}));
  std::sort(elems.begin(), elems.end());
  Obj apex = make_obj(Elem::tup({Elem::sym("fp"), mor_enc(left), mor_enc(right)}),
                      std::move(elems), "lcc.fiber_product");
  Mor pr1 = mor_from_fn(apex, left.dom, [](const Elem& e) { return e.parts()[0]; });
  Mor pr2 = mor_from_fn(apex, right.dom, [](const Elem& e) { return e.parts()[1]; });
  return FiberProductChoice{left, right, apex, pr1, pr2};
}

Obj Lcc::product(const Obj& a, const Obj& b) const {
  std::vector<Elem> elems;
  for (const Elem& x : a->elems)
    for (const Elem& y : b->elems) elems.push_back(Elem::tup({x, y}));
  std::sort(elems.begin(), elems.end());
  return make_obj(Elem::tup({Elem::sym("prod"), a->id, b->id}), std::move(elems),
                  "lcc.product");
}

Mor Lcc::prod_pr1(const Obj& a, const Obj& b) const {
  return mor_from_fn(product(a, b), a, [](const Elem& e) { return e.parts()[0]; });
}

Mor Lcc::prod_pr2(const Obj& a, const Obj& b) const {
  return mor_from_fn(product(a, b), b, [](const Elem& e) { return e.parts()[1]; });
}

Mor Lcc::prod_pair(const Mor& f, const Mor& g) const {
  if (f.dom->id != g.dom->id) throw Error("lcc.prod", "pairing legs have different domains");
  Obj p = product(f.cod, g.cod);
  return mor_from_fn(f.dom, p,
                     [&](const Elem& w) { return Elem::tup({f.apply(w), g.apply(w)}); });
}

Mor Lcc::prod_map(const Mor& f, const Mor& g) const {
  Obj src = product(f.dom, g.dom), dst = product(f.cod, g.cod);
  return mor_from_fn(src, dst, [&](const Elem& e) {
    return Elem::tup({f.apply(e.parts()[0]), g.apply(e.parts()[1])});
  });
}

SliceHomChoice Lcc::slice_hom(const SliceObj& e, const SliceObj& f) const {
  require_same_base(e, f, "slice_hom");
  const Obj& base = e.base();
  std::vector<Elem> elems;
  for (const Elem& b : base->elems) {
    std::vector<Elem> ef = fiber_of(e.proj, b), ff = fiber_of(f.proj, b);
    // all graphs ef→ff, odometer over value-sorted fibers
    if (ef.empty()) {
      elems.push_back(Elem::tup({b, Elem::tup({})}));
      continue;
    }
    if (ff.empty()) continue;
    std::vector<std::size_t> idx(ef.size(), 0);
    for (;;) {
      std::vector<Elem> graph;
      for (std::size_t i = 0; i < ef.size(); ++i)
        graph.push_back(Elem::tup({ef[i], ff[idx[i]]}));
      elems.push_back(Elem::tup({b, Elem::tup(std::move(graph))}));
      std::size_t i = ef.size();
      bool done = false;
      while (i > 0) {
        --i;
        if (++idx[i] < ff.size()) break;
        idx[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  std::sort(elems.begin(), elems.end());
  Obj hom = make_obj(Elem::tup({Elem::sym("shom"), mor_enc(e.proj), mor_enc(f.proj)}),
                     std::move(elems), "lcc.slice_hom");
  Mor proj = mor_from_fn(hom, base, [](const Elem& h) { return h.parts()[0]; });
  return SliceHomChoice{e, f, hom, proj};
}

Mor Lcc::hom_post(const SliceObj& e, const SliceObj& f1, const SliceObj& f2,
                  const Mor& g) const {
  require_over(g, f2.proj, f1.proj, "hom_post");
  SliceHomChoice h1 = slice_hom(e, f1), h2 = slice_hom(e, f2);
  return mor_from_fn(h1.hom, h2.hom, [&](const Elem& h) {
    std::vector<Elem> graph;
    for (const Elem& pr : h.parts()[1].parts())
      graph.push_back(Elem::tup({pr.parts()[0], g.apply(pr.parts()[1])}));
    std::sort(graph.begin(), graph.end());
    return Elem::tup({h.parts()[0], Elem::tup(std::move(graph))});
  });
}

Mor Lcc::hom_pre(const SliceObj& e1, const SliceObj& e2, const SliceObj& f,
                 const Mor& h) const {
  require_over(h, e2.proj, e1.proj, "hom_pre");
  SliceHomChoice h2 = slice_hom(e2, f), h1 = slice_hom(e1, f);
  return mor_from_fn(h2.hom, h1.hom, [&](const Elem& el) {
    const Elem& b = el.parts()[0];
    std::vector<Elem> graph;
    for (const Elem& x : fiber_of(e1.proj, b))
      graph.push_back(Elem::tup({x, graph_lookup(el.parts()[1], h.apply(x))}));
    std::sort(graph.begin(), graph.end());
    return Elem::tup({b, Elem::tup(std::move(graph))});
  });
}

Mor Lcc::ev(const SliceObj& e, const SliceObj& f) const {
  SliceHomChoice h = slice_hom(e, f);
  FiberProductChoice fp = fiber_product(h.proj, e.proj);
  return mor_from_fn(fp.apex, f.total, [](const Elem& z) {
    return graph_lookup(z.parts()[0].parts()[1], z.parts()[1]);
  });
}

Mor Lcc::adj(const SliceObj& a, const SliceObj& e, const SliceObj& f, const Mor& m) const {
  SliceHomChoice h = slice_hom(e, f);
  if (m.cod->id != h.hom->id)
    throw Error("lcc.adj", "morphism does not land in the internal Hom");
  require_over(m, h.proj, a.proj, "adj");
  FiberProductChoice fp = fiber_product(a.proj, e.proj);
  return mor_from_fn(fp.apex, f.total, [&](const Elem& z) {
    return graph_lookup(m.apply(z.parts()[0]).parts()[1], z.parts()[1]);
  });
}

Mor Lcc::adj_inv(const SliceObj& a, const SliceObj& e, const SliceObj& f,
                 const Mor& m) const {
  FiberProductChoice fp = fiber_product(a.proj, e.proj);
  if (m.dom->id != fp.apex->id)
    throw Error("lcc.adj", "morphism does not start at the fiber product");
  require_over(m, f.proj, fp.diamond(), "adj_inv");
  SliceHomChoice h = slice_hom(e, f);
  return mor_from_fn(a.total, h.hom, [&](const Elem& x) {
    Elem b = a.proj.apply(x);
    std::vector<Elem> graph;
    for (const Elem& ee : fiber_of(e.proj, b))
      graph.push_back(Elem::tup({ee, m.apply(Elem::tup({x, ee}))}));
    std::sort(graph.begin(), graph.end());
    return Elem::tup({b, Elem::tup(std::move(graph))});
  });
}

Mor Lcc::fp_map(const FiberProductChoice& from, const FiberProductChoice& to, const Mor& u,
                const Mor& v) const {
  return to.pair(compose(from.pr1, u), compose(from.pr2, v));
}

SliceObj u_times_v(const Lcc& lcc, const Obj& u, const Obj& v) {
  return SliceObj{lcc.product(u, v), lcc.prod_pr1(u, v)};
}

IpObj i_p(const Lcc& lcc, const Mor& p, const Obj& v) {
  SliceHomChoice h = lcc.slice_hom(SliceObj{p.dom, p}, u_times_v(lcc, p.cod, v));
  return IpObj{h.hom, h.proj};
}

Mor i_p_mor(const Lcc& lcc, const Mor& p, const Mor& f) {
  SliceObj e{p.dom, p};
  const Obj& u = p.cod;
  return lcc.hom_post(e, u_times_v(lcc, u, f.dom), u_times_v(lcc, u, f.cod),
                      lcc.prod_map(identity_mor(u), f));
}

Mor i_hom(const Lcc& lcc, const Mor& h, const Mor& p, const Mor& p_prime, const Obj& v) {
  if (!(compose(h, p) == p_prime))
    throw Error("lcc.over-base", "i_hom: h is not over the base universe object");
  return lcc.hom_pre(SliceObj{p_prime.dom, p_prime}, SliceObj{p.dom, p},
                     u_times_v(lcc, p.cod, v), h);
}

bool operator==(const DpElement& x, const DpElement& y) {
  return x.family == y.family && x.a == y.a;
}

DpElement d_p_act(const UniverseStructure& u, const Mor& f, const DpElement& d) {
  return DpElement{compose(f, d.family), compose(u.q_of(f, d.family), d.a)};
}

DpElement d_p_post(const DpElement& d, const Mor& g) {
  return DpElement{d.family, compose(d.a, g)};
}

DpElement d_hom_act(const UniverseStructure& to, const UniverseStructure& from, const Mor& f,
                    const DpElement& d) {
  return DpElement{d.family, compose(star(to, from, d.family, f), d.a)};
}

Mor eta(const Lcc& lcc, const UniverseStructure& u, const DpElement& d) {
  const Obj& v = d.a.cod;
  IpObj ip = i_p(lcc, u.p(), v);
  CanonicalSquare sq = u.ext(d.family);
  if (d.a.dom->id != sq.ext->id)
    throw Error("lcc.eta", "second component does not start at the chosen (X;F)");
  return mor_from_fn(d.family.dom, ip.obj, [&](const Elem& x) {
    Elem b = d.family.apply(x);
    std::vector<Elem> graph;
    for (std::size_t zi = 0; zi < sq.ext->elems.size(); ++zi) {
      if (!(sq.proj.apply_idx(zi) == x)) continue;
      graph.push_back(
          Elem::tup({sq.q.apply_idx(zi), Elem::tup({b, d.a.apply_idx(zi)})}));
    }
    std::sort(graph.begin(), graph.end());
    return Elem::tup({b, Elem::tup(std::move(graph))});
  });
}

DpElement eta_bang(const Lcc& lcc, const UniverseStructure& u, const Mor& g, const Obj& v) {
  IpObj ip = i_p(lcc, u.p(), v);
  if (g.cod->id != ip.obj->id)
    throw Error("lcc.eta", "morphism does not land in I_p(V)");
  // st = ι ∘ ev ∘ pr2 : (I_p(V);pr) → V
  CanonicalSquare sq = u.ext(ip.pr);
  FiberProductChoice fp = lcc.fiber_product(ip.pr, u.p());
  Mor iota = fp.pair(sq.proj, sq.q);
  Mor evm = lcc.ev(SliceObj{u.p().dom, u.p()}, u_times_v(lcc, u.u(), v));
  Mor st = compose(compose(iota, evm), lcc.prod_pr2(u.u(), v));
  return DpElement{compose(g, ip.pr), compose(u.q_of(g, ip.pr), st)};
}

}  // namespace idsem
