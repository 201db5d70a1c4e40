#pragma once

#include "idsem/lcc.hpp"
#include "idsem/report.hpp"

namespace idsem {

// Everything derived from a J1-structure (Eq, Ω) on a universe: the pEŨ
// universe, ω, the I-objects, the fiber product Fp with coJ, and the two
// squares of the filler correspondence.
struct JUnivContext {
  UnivCat uc;
  Mor eq;     // Eq: (Ũ;p)→U
  Mor omega;  // Ω: Ũ→Ũ

  UnivPtr e_univ;  // universe structure on pEŨ
  Obj e_ut;        // EŨ
  Mor p_e;         // pEŨ: EŨ→U
  Mor omega_e;     // ω: Ũ→EŨ

  IpObj ip_u, ip_ut;    // I_p(U), I_p(Ũ)
  IpObj ipe_u, ipe_ut;  // I_pEŨ(U), I_pEŨ(Ũ)
  Mor ihom_u, ihom_ut;  // I^ω(U), I^ω(Ũ)
  Mor ip_p, ipe_p;      // I_p(p), I_pEŨ(p)

  FiberProductChoice fp;  // Fp = (I_pEŨ(U),I^ω(U)) ×_{I_p(U)} (I_p(Ũ),I_p(p))
  Mor p_fp;               // pFp: Fp→U
  Mor coj;                // coJ: I_pEŨ(Ũ)→Fp

  FiberProductChoice fp_ut;  // (Fp,pFp)×_U(Ũ,p)
  FiberProductChoice fp_eu;  // (Fp,pFp)×_U(EŨ,pEŨ)
  Mor adj_pr1;               // adj(pr1): Fp×_U EŨ → U×U
  Mor adj_pr2;               // adj(pr2): Fp×_U Ũ → U×Ũ
};

// Validates the J1 square Δ∘Eq = Ω∘p ("2015.03.27.sq1") and builds the rest.
JUnivContext j_univ_context(const UnivCat& uc, const Mor& eq, const Mor& omega);

// ω alone (also validates sq1).
Mor build_omega(const UnivCat& uc, const Mor& eq, const Mor& omega);

// The filler correspondence. A filler splits
//
//   (Fp,pFp)×_U(Ũ,p) --adj(pr2)∘pr2--> Ũ
//        |Id×ω                          |p
//   (Fp,pFp)×_U(EŨ,pEŨ) --adj(pr1)∘pr2--> U
//
// into two commutative triangles. Inputs failing their defining equations
// are rejected with the violated equation named.
Mor j_to_filler(const JUnivContext& ctx, const Mor& jp);
Mor filler_to_j(const JUnivContext& ctx, const Mor& filler);

// Validates shapes, sq1, over-U, and Jp∘coJ = Id elementwise, plus the two
// projection consequences.
Report check_univ_j(const JUnivContext& ctx, const Mor& jp);

// Exhaustive enumerations for the counting tests (fail if the search space
// exceeds `cap` candidates).
std::vector<Mor> enumerate_jp(const JUnivContext& ctx, std::size_t cap = 4096);
std::vector<Mor> enumerate_fillers(const JUnivContext& ctx, std::size_t cap = 4096);

}  // namespace idsem
