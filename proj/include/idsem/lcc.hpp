#pragma once

#include "idsem/universe.hpp"

#include <map>
#include <mutex>

namespace idsem {

// An object placed over a base by a structural projection.
struct SliceObj {
  Obj total;
  Mor proj;  // total→base
  const Obj& base() const { return proj.cod; }
};

// Chosen fiber product of a cospan (left: B'→B, right: E→B):
//   apex = {(b',e) | left(b') = right(e)}, value-ordered.
struct FiberProductChoice {
  Mor left, right;
  Obj apex;
  Mor pr1, pr2;  // apex→B', apex→E

  // left⋄right: the composite projection apex→B.
  Mor diamond() const { return compose(pr1, left); }
  // Unique mediator for a commuting cone (u: W→B', v: W→E).
  Mor pair(const Mor& u, const Mor& v) const;
};

// Chosen internal Hom over a base: fiber over b = functions fib_E(b)→fib_F(b),
// elements encoded as (b, ((e f) ...)) with value-sorted graphs.
struct SliceHomChoice {
  SliceObj e, f;
  Obj hom;
  Mor proj;  // hom→base
  SliceObj sl() const { return SliceObj{hom, proj}; }
};

// Canonical locally cartesian closed choices for finite coded sets. No
// compatibility with any universe structure's chosen squares is assumed.
class Lcc {
 public:
  Lcc() = default;

  FiberProductChoice fiber_product(const Mor& left, const Mor& right) const;

  Obj product(const Obj& a, const Obj& b) const;  // elements (a b)
  Mor prod_pr1(const Obj& a, const Obj& b) const;
  Mor prod_pr2(const Obj& a, const Obj& b) const;
  Mor prod_pair(const Mor& f, const Mor& g) const;           // ⟨f,g⟩: W→A×B
  Mor prod_map(const Mor& f, const Mor& g) const;            // f×g: A×B→A'×B'

  SliceHomChoice slice_hom(const SliceObj& e, const SliceObj& f) const;

  // Functoriality of Hom in each argument (post/precomposition over the base).
  Mor hom_post(const SliceObj& e, const SliceObj& f1, const SliceObj& f2, const Mor& g) const;
  Mor hom_pre(const SliceObj& e1, const SliceObj& e2, const SliceObj& f, const Mor& h) const;

  // ev: Hom(E,F)×_B E → F.total over the base.
  Mor ev(const SliceObj& e, const SliceObj& f) const;

  // adj: Hom_B(A, Hom(E,F)) ≅ Hom_B(A×_B E, F): mutually inverse bijections.
  Mor adj(const SliceObj& a, const SliceObj& e, const SliceObj& f, const Mor& m) const;
  Mor adj_inv(const SliceObj& a, const SliceObj& e, const SliceObj& f, const Mor& m) const;

  // Induced morphism between chosen fiber products from leg morphisms
  // u: B1'→B2', v: E1→E2 with left2∘? commuting (validated via pair()).
  Mor fp_map(const FiberProductChoice& from, const FiberProductChoice& to, const Mor& u,
             const Mor& v) const;
};

// ---- universe-indexed machinery on top of the LCC choices ----

// I_p(V) = Hom_U((Ũ,p),(U×V,pr1)) with its structural projection prI.
struct IpObj {
  Obj obj;
  Mor pr;  // prI_p(V): I_p(V)→U
  SliceObj sl() const { return SliceObj{obj, pr}; }
};

IpObj i_p(const Lcc& lcc, const Mor& p, const Obj& v);
SliceObj u_times_v(const Lcc& lcc, const Obj& u, const Obj& v);  // (U×V, pr1)

// I_p(f): I_p(V)→I_p(V') for f: V→V'.
Mor i_p_mor(const Lcc& lcc, const Mor& p, const Mor& f);

// I^h(V): I_p(V)→I_{p'}(V) for h: Ũ'→Ũ over U with h∘p = p'.
Mor i_hom(const Lcc& lcc, const Mor& h, const Mor& p, const Mor& p_prime, const Obj& v);

// I_p(p)-style morphisms need only i_p_mor; D_p below carries the universe.
struct DpElement {
  Mor family;  // F: X→U
  Mor a;       // a: (X;F)→V, domain the universe-chosen apex
};

bool operator==(const DpElement& x, const DpElement& y);

// D_p(f,V): (F,a) ↦ (f∘F, Q(f,F)∘a) for f: X'→X.
DpElement d_p_act(const UniverseStructure& u, const Mor& f, const DpElement& d);
// Post-composition action in V: (F,a) ↦ (F, a∘g).
DpElement d_p_post(const DpElement& d, const Mor& g);
// D^f(X,V): (F,F') ↦ (F, F*(f)∘F') for f: Ũ'→Ũ over U (universe pair).
DpElement d_hom_act(const UniverseStructure& to, const UniverseStructure& from, const Mor& f,
                    const DpElement& d);

// η_{p,X,V}: D_p(X,V) → Hom(X, I_p(V)) and its inverse η!.
Mor eta(const Lcc& lcc, const UniverseStructure& u, const DpElement& d);
DpElement eta_bang(const Lcc& lcc, const UniverseStructure& u, const Mor& g, const Obj& v);

// A universe category: carrier category, universe structure, LCC choices.
struct UnivCat {
  std::string name;
  FinCategory cat;
  UnivPtr univ;
  std::shared_ptr<Lcc> lcc;
  const Obj& pt() const { return univ->pt(); }
  const Obj& u() const { return univ->u(); }
  const Obj& ut() const { return univ->ut(); }
};

}  // namespace idsem
