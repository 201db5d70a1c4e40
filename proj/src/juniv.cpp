#include "idsem/juniv.hpp"

namespace idsem {

namespace {

// Enumerate all m: dom→cod with m(x) constrained to candidates[x]; canonical
// odometer order over the per-point candidate lists.
std::vector<Mor> constrained_functions(const Obj& dom, const Obj& cod,
                                       const std::vector<std::vector<std::uint32_t>>& cands,
                                       std::size_t cap) {
  double count = 1;
  for (const auto& c : cands) {
    if (c.empty()) return {};
    count *= static_cast<double>(c.size());
    if (count > static_cast<double>(cap))
      throw Error("bound.overflow", "constrained enumeration exceeds cap");
  }
  std::vector<Mor> out;
  std::vector<std::size_t> idx(cands.size(), 0);
  for (;;) {
    std::vector<std::uint32_t> t(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) t[i] = cands[i][idx[i]];
    out.push_back(Mor{dom, cod, std::move(t)});
    std::size_t i = cands.size();
    bool done = cands.empty();
    while (i > 0) {
      --i;
      if (++idx[i] < cands[i].size()) break;
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

}  // namespace

Mor build_omega(const UnivCat& uc, const Mor& eq, const Mor& omega) {
  const UniverseStructure& u = *uc.univ;
  Mor delta = u.diag();
  if (!(compose(delta, eq) == compose(omega, u.p())))
    throw Error("2015.03.27.sq1", "Δ∘Eq ≠ Ω∘p: (Eq, Ω) is not a J1-structure");
  // ω mediates into EŨ = ((Ũ;p);Eq) through the canonical square for Eq.
  return u.pair(eq, delta, omega);
}

JUnivContext j_univ_context(const UnivCat& uc, const Mor& eq, const Mor& omega) {
  JUnivContext ctx;
  ctx.uc = uc;
  ctx.eq = eq;
  ctx.omega = omega;
  ctx.omega_e = build_omega(uc, eq, omega);
  ctx.e_univ = e_universe(uc.univ, eq);
  ctx.p_e = ctx.e_univ->p();
  ctx.e_ut = ctx.p_e.dom;

  const Lcc& lcc = *uc.lcc;
  const Mor& p = uc.univ->p();
  ctx.ip_u = i_p(lcc, p, uc.u());
  ctx.ip_ut = i_p(lcc, p, uc.ut());
  ctx.ipe_u = i_p(lcc, ctx.p_e, uc.u());
  ctx.ipe_ut = i_p(lcc, ctx.p_e, uc.ut());
  ctx.ihom_u = i_hom(lcc, ctx.omega_e, ctx.p_e, p, uc.u());
  ctx.ihom_ut = i_hom(lcc, ctx.omega_e, ctx.p_e, p, uc.ut());
  ctx.ip_p = i_p_mor(lcc, p, p);
  ctx.ipe_p = i_p_mor(lcc, ctx.p_e, p);

  ctx.fp = lcc.fiber_product(ctx.ihom_u, ctx.ip_p);
  ctx.p_fp = compose(compose(ctx.fp.pr1, ctx.ihom_u), ctx.ip_u.pr);
  // square 2010.sq1 commutes, so (I_pEŨ(p), I^ω(Ũ)) is a cone over I_p(U)
  ctx.coj = ctx.fp.pair(ctx.ipe_p, ctx.ihom_ut);

  ctx.fp_ut = lcc.fiber_product(ctx.p_fp, p);
  ctx.fp_eu = lcc.fiber_product(ctx.p_fp, ctx.p_e);
  SliceObj sl_fp{ctx.fp.apex, ctx.p_fp};
  SliceObj sl_ut{uc.ut(), p};
  SliceObj sl_eu{ctx.e_ut, ctx.p_e};
  ctx.adj_pr1 = lcc.adj(sl_fp, sl_eu, u_times_v(lcc, uc.u(), uc.u()), ctx.fp.pr1);
  ctx.adj_pr2 = lcc.adj(sl_fp, sl_ut, u_times_v(lcc, uc.u(), uc.ut()), ctx.fp.pr2);
  return ctx;
}

Mor j_to_filler(const JUnivContext& ctx, const Mor& jp) {
  if (jp.dom->id != ctx.fp.apex->id || jp.cod->id != ctx.ipe_ut.obj->id)
    throw Error("2015.03.27.def6", "Jp must be Fp→I_pEŨ(Ũ)");
  if (!(compose(jp, ctx.coj) == identity_mor(ctx.fp.apex)))
    throw Error("2015.03.27.def6", "Jp∘coJ ≠ Id: not a J2-structure");
  const Lcc& lcc = *ctx.uc.lcc;
  Mor adj_jp = lcc.adj(SliceObj{ctx.fp.apex, ctx.p_fp}, SliceObj{ctx.e_ut, ctx.p_e},
                       u_times_v(lcc, ctx.uc.u(), ctx.uc.ut()), jp);
  return compose(adj_jp, lcc.prod_pr2(ctx.uc.u(), ctx.uc.ut()));
}

Mor filler_to_j(const JUnivContext& ctx, const Mor& filler) {
  const Lcc& lcc = *ctx.uc.lcc;
  const Mor& p = ctx.uc.univ->p();
  if (filler.dom->id != ctx.fp_eu.apex->id || filler.cod->id != ctx.uc.ut()->id)
    throw Error("2015.05.12.l1", "filler must be (Fp,pFp)×_U(EŨ,pEŨ)→Ũ");
  Mor id_x_omega = lcc.fp_map(ctx.fp_ut, ctx.fp_eu, identity_mor(ctx.fp.apex), ctx.omega_e);
  Mor upper = compose(ctx.adj_pr2, lcc.prod_pr2(ctx.uc.u(), ctx.uc.ut()));
  Mor lower = compose(ctx.adj_pr1, lcc.prod_pr2(ctx.uc.u(), ctx.uc.u()));
  if (!(compose(id_x_omega, filler) == upper))
    throw Error("2015.05.22.sq1.upper", "upper triangle fails: (Id×ω)∘g ≠ adj(pr2)∘pr2");
  if (!(compose(filler, p) == lower))
    throw Error("2015.05.22.sq1.lower", "lower triangle fails: g∘p ≠ adj(pr1)∘pr2");
  // repackage as the U×Ũ-valued filler over U, then un-curry
  Mor packed = lcc.prod_pair(ctx.fp_eu.diamond(), filler);
  Mor jp = lcc.adj_inv(SliceObj{ctx.fp.apex, ctx.p_fp}, SliceObj{ctx.e_ut, ctx.p_e},
                       u_times_v(lcc, ctx.uc.u(), ctx.uc.ut()), packed);
  if (!(compose(jp, ctx.coj) == identity_mor(ctx.fp.apex)))
    throw Error("2015.03.27.def6", "converted filler is not a section of coJ");
  return jp;
}

Report check_univ_j(const JUnivContext& ctx, const Mor& jp) {
  Report rep;
  auto& shape = rep.begin_check("2015.03.27.def6.shape", ctx.uc.name);
  bool shape_ok = jp.dom->id == ctx.fp.apex->id && jp.cod->id == ctx.ipe_ut.obj->id;
  rep.note_instance(shape, shape_ok, "Jp endpoints are not Fp→I_pEŨ(Ũ)");
  if (!shape_ok) return rep;

  auto& over = rep.begin_check("2015.03.27.def6.over-u", ctx.uc.name);
  rep.note_instance(over, compose(jp, ctx.ipe_ut.pr) == ctx.p_fp, "Jp is not over U");

  auto& sq1 = rep.begin_check("2015.03.27.sq1", ctx.uc.name);
  rep.note_instance(sq1,
                    compose(ctx.uc.univ->diag(), ctx.eq) == compose(ctx.omega, ctx.uc.univ->p()),
                    "Δ∘Eq ≠ Ω∘p");

  auto& sec = rep.begin_check("2015.03.27.def6", ctx.uc.name);
  Mor jc = compose(jp, ctx.coj);
  for (std::size_t i = 0; i < ctx.fp.apex->elems.size(); ++i)
    rep.note_instance(sec, jc.table[i] == i,
                      "Jp∘coJ moves " + ctx.fp.apex->elems[i].str());

  auto& eq1 = rep.begin_check("2015.04.04.eq1", ctx.uc.name);
  rep.note_instance(eq1, compose(jp, ctx.ihom_ut) == ctx.fp.pr2, "Jp∘I^ω(Ũ) ≠ pr2");
  auto& eq2 = rep.begin_check("2015.04.04.eq2", ctx.uc.name);
  rep.note_instance(eq2, compose(jp, ctx.ipe_p) == ctx.fp.pr1, "Jp∘I_pEŨ(p) ≠ pr1");
  return rep;
}

std::vector<Mor> enumerate_jp(const JUnivContext& ctx, std::size_t cap) {
  // f(coJ(y)) = y forced; elsewhere any value keeping f over U.
  const Obj& fp = ctx.fp.apex;
  const Obj& tgt = ctx.ipe_ut.obj;
  std::vector<std::vector<std::uint32_t>> cands(fp->elems.size());
  for (std::size_t z = 0; z < fp->elems.size(); ++z) {
    std::optional<std::uint32_t> forced;
    bool conflict = false;
    for (std::size_t y = 0; y < tgt->elems.size(); ++y)
      if (ctx.coj.table[y] == z) {
        if (forced && *forced != y) conflict = true;  // coJ not injective: no section
        forced = static_cast<std::uint32_t>(y);
      }
    if (conflict) continue;
    if (forced) {
      cands[z] = {*forced};
    } else {
      for (std::uint32_t y = 0; y < tgt->elems.size(); ++y)
        if (ctx.ipe_ut.pr.table[y] == ctx.p_fp.table[z]) cands[z].push_back(y);
    }
  }
  std::vector<Mor> out = constrained_functions(fp, tgt, cands, cap);
  std::vector<Mor> sections;
  for (const Mor& f : out)
    if (compose(f, ctx.coj) == identity_mor(fp)) sections.push_back(f);
  return sections;
}

std::vector<Mor> enumerate_fillers(const JUnivContext& ctx, std::size_t cap) {
  const Lcc& lcc = *ctx.uc.lcc;
  const Mor& p = ctx.uc.univ->p();
  Mor id_x_omega = lcc.fp_map(ctx.fp_ut, ctx.fp_eu, identity_mor(ctx.fp.apex), ctx.omega_e);
  Mor upper = compose(ctx.adj_pr2, lcc.prod_pr2(ctx.uc.u(), ctx.uc.ut()));
  Mor lower = compose(ctx.adj_pr1, lcc.prod_pr2(ctx.uc.u(), ctx.uc.u()));
  const Obj& w = ctx.fp_eu.apex;
  std::vector<std::vector<std::uint32_t>> cands(w->elems.size());
  for (std::size_t i = 0; i < w->elems.size(); ++i) {
    std::optional<std::uint32_t> forced;
    bool conflict = false;
    for (std::size_t z = 0; z < ctx.fp_ut.apex->elems.size(); ++z)
      if (id_x_omega.table[z] == i) {
        if (forced && *forced != upper.table[z]) conflict = true;
        forced = upper.table[z];
      }
    if (conflict) continue;  // no candidates
    if (forced) {
      if (p.table[*forced] == lower.table[i]) cands[i] = {*forced};
    } else {
      for (std::uint32_t y = 0; y < ctx.uc.ut()->elems.size(); ++y)
        if (p.table[y] == lower.table[i]) cands[i].push_back(y);
    }
  }
  return constrained_functions(w, ctx.uc.ut(), cands, cap);
}

}  // namespace idsem
