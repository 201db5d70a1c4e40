#include "idsem/models.hpp"

#include "idsem/juniv.hpp"

namespace idsem {

void CodedFamilySpec::validate() const {
  if (codes.empty()) throw Error("models.spec", "fixture needs at least one code");
  for (const auto& [c, size] : codes)
    if (size < 0)
      throw Error("models.spec", "fiber size of code " + c + " is negative");
}

bool CodedFamilySpec::supports_extensional() const {
  bool has_one = false, has_zero = false, has_big = false;
  for (const auto& [c, size] : codes) {
    has_one |= size == 1;
    has_zero |= size == 0;
    has_big |= size >= 2;
  }
  return has_one && (!has_big || has_zero);
}

UnivCat coded_universe(const CodedFamilySpec& spec) {
  spec.validate();
  std::vector<Elem> u_elems, ut_elems;
  for (const auto& [c, size] : spec.codes) {
    u_elems.push_back(Elem::sym(c));
    for (int k = 0; k < size; ++k)
      ut_elems.push_back(Elem::tup({Elem::sym(c), Elem::num(k)}));
  }
  Obj u = make_obj(Elem::tup({Elem::sym("set"), Elem::sym(spec.name), Elem::sym("U")}),
                   std::move(u_elems));
  Obj ut = make_obj(Elem::tup({Elem::sym("set"), Elem::sym(spec.name), Elem::sym("Ut")}),
                    std::move(ut_elems));
  Obj pt = make_obj(Elem::tup({Elem::sym("set"), Elem::sym(spec.name), Elem::sym("pt")}),
                    {Elem::sym("*")});
  Mor p = mor_from_fn(ut, u, [](const Elem& e) { return e.parts()[0]; });
  std::string tag = spec.name + (spec.skew_seed ? ":s" + std::to_string(spec.skew_seed) : "");
  UnivPtr univ = finset_universe(tag, p, pt, spec.skew_seed);

  std::vector<Obj> verification = {pt, u, ut};
  for (std::size_t n = 0; n <= 3; ++n) verification.push_back(skeletal_set(n));
  return UnivCat{spec.name, finset_category(std::move(verification)), univ,
                 std::make_shared<Lcc>()};
}

UnivCat skew_structure(const UnivCat& uc, std::uint64_t seed) {
  std::string tag = uc.univ->tag() + (seed ? ":s" + std::to_string(seed) : "");
  UnivCat out = uc;
  out.univ = finset_universe(tag, uc.univ->p(), uc.univ->pt(), seed);
  return out;
}

UnivJ extensional_j(const UnivCat& uc) {
  const UniverseStructure& u = *uc.univ;
  // locate the required codes by fiber size
  std::optional<Elem> code1, code0;
  bool has_big = false;
  for (const Elem& c : u.u()->elems) {
    std::size_t n = 0;
    for (const Elem& e : u.ut()->elems)
      if (e.parts()[0] == c) ++n;
    if (n == 1 && !code1) code1 = c;
    if (n == 0 && !code0) code0 = c;
    has_big |= n >= 2;
  }
  if (!code1 || (has_big && !code0))
    throw Error("models.extensional", "fixture " + uc.name +
                                          " lacks the codes required for the extensional "
                                          "bundle (size-1, and size-0 when a fiber has "
                                          "size ≥ 2)");
  CanonicalSquare psq = u.ext(u.p());
  Mor eq = mor_from_fn(psq.ext, u.u(), [&](const Elem& z) {
    return z.parts()[0] == z.parts()[1] ? *code1 : *code0;
  });
  Elem omega_pt;
  for (const Elem& e : u.ut()->elems)
    if (e.parts()[0] == *code1) omega_pt = e;
  Mor omega = mor_from_fn(u.ut(), u.ut(), [&](const Elem&) { return omega_pt; });

  JUnivContext ctx = j_univ_context(uc, eq, omega);
  if (!is_iso(ctx.omega_e))
    throw Error("models.extensional", "ω is not bijective on the extensional fixture");
  // filler = (Id×ω)⁻¹ followed by the square's upper edge
  FiberProductChoice fp_ut = ctx.fp_ut, fp_eu = ctx.fp_eu;
  Mor id_x_omega = uc.lcc->fp_map(fp_ut, fp_eu, identity_mor(ctx.fp.apex), ctx.omega_e);
  Mor upper = compose(ctx.adj_pr2, uc.lcc->prod_pr2(u.u(), u.ut()));
  Mor filler = compose(inverse(id_x_omega), upper);
  return UnivJ{eq, omega, filler_to_j(ctx, filler)};
}

CodedFamilySpec spec_u3() { return CodedFamilySpec{"U3", {{"0", 0}, {"1", 1}, {"2", 2}}, 0}; }
CodedFamilySpec spec_u1() { return CodedFamilySpec{"U1", {{"a", 1}, {"b", 1}}, 0}; }
CodedFamilySpec spec_u2() { return CodedFamilySpec{"U2", {{"0", 0}, {"1", 1}}, 0}; }
CodedFamilySpec spec_u12() { return CodedFamilySpec{"U12", {{"1", 1}, {"2", 2}}, 0}; }

}  // namespace idsem
