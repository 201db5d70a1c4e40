#pragma once

#include "idsem/finset.hpp"

#include <map>
#include <mutex>
#include <string>

namespace idsem {

// Chosen pullback square for a family F: X→U:
//
//   ext --q--> Ũ
//    |proj      |p
//   X  --F-->  U
struct CanonicalSquare {
  Mor family;  // F
  Obj ext;     // (X;F)
  Mor q;       // Q(F)
  Mor proj;    // p_{X,F}
  CommSquare square(const Mor& p) const { return CommSquare{q, p, proj, family}; }
};

// A universe structure: p: Ũ→U, a final object pt, and a deterministic
// chooser of canonical squares keyed by (X, F). Nothing may assume the
// chooser is normalized — Q(Id_U) need not be Id_Ũ.
class UniverseStructure {
 public:
  using Chooser = std::function<CanonicalSquare(const Mor& family)>;

  // Canonical finite-set chooser; a nonzero skew seed permutes each apex.
  UniverseStructure(std::string tag, Mor p, Obj pt, std::uint64_t skew_seed = 0);
  UniverseStructure(std::string tag, Mor p, Obj pt, Chooser chooser);

  const std::string& tag() const { return tag_; }
  const Mor& p() const { return p_; }
  const Obj& u() const { return p_.cod; }
  const Obj& ut() const { return p_.dom; }
  const Obj& pt() const { return pt_; }

  // (X;F) with its two projections; memoized on (X id, graph of F).
  CanonicalSquare ext(const Mor& family) const;

  // f*g : W→(X;F), the unique morphism with (f*g)∘proj = f, (f*g)∘q = g.
  Mor pair(const Mor& family, const Mor& f, const Mor& g) const;

  // Q(f,F) = (p_{X',f∘F}∘f)*Q(f∘F) : (X';f∘F)→(X;F)
  Mor q_of(const Mor& f, const Mor& family) const;

  // Δ = Id*Id : Ũ→(Ũ;p)
  Mor diag() const;

 private:
  std::string tag_;
  Mor p_;
  Obj pt_;
  Chooser chooser_;
  mutable std::mutex mu_;
  mutable std::map<Elem, CanonicalSquare> memo_;
};

using UnivPtr = std::shared_ptr<const UniverseStructure>;

UnivPtr finset_universe(std::string tag, Mor p, Obj pt, std::uint64_t skew_seed = 0);

// Universe structure on pEŨ: EŨ = (Ũ;p,Eq) → U, with the canonical square
// for F obtained by concatenating the three base squares vertically:
//   (X;F)_E  = (X;F, Q(F)∘p, Q(Q(F),p)∘Eq)
//   Q(F)_E   = Q(Q(Q(F),p),Eq)
//   p^E_X,F  = the composite of the three projections
UnivPtr e_universe(const UnivPtr& base, const Mor& eq);

// F*(f) for f: Ũ'→Ũ over U between two universe structures on a common U:
// the unique (X;F)'→(X;F) with F*(f)∘Q(F) = Q'(F)∘f and F*(f)∘p = p'.
Mor star(const UniverseStructure& to, const UniverseStructure& from, const Mor& family,
         const Mor& f);

}  // namespace idsem
