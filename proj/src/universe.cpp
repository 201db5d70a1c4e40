#include "idsem/universe.hpp"

#include <algorithm>

namespace idsem {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic seeded shuffle; seed 0 leaves the order untouched.
void skew_order(std::vector<Elem>& elems, std::uint64_t seed, std::uint64_t key_hash) {
  if (seed == 0 || elems.size() < 2) return;
  std::uint64_t s = splitmix64(seed ^ key_hash);
  for (std::size_t i = elems.size() - 1; i > 0; --i) {
    s = splitmix64(s);
    std::swap(elems[i], elems[s % (i + 1)]);
  }
}

UniverseStructure::Chooser finset_chooser(std::string tag, Mor p, std::uint64_t seed) {
  return [tag = std::move(tag), p = std::move(p), seed](const Mor& family) {
    if (family.cod->id != p.cod->id)
      throw Error("universe.ext", "family " + mor_enc(family).str() + " is not into " +
                                      p.cod->id.str());
    const Obj& x = family.dom;
    Elem key = Elem::tup({Elem::sym("ext"), Elem::sym(tag), x->id, graph_enc(family)});
    std::vector<Elem> elems;
    for (const Elem& xe : x->elems)
      for (std::size_t ui = 0; ui < p.dom->elems.size(); ++ui)
        if (family.apply(xe) == p.apply_idx(ui))
          elems.push_back(Elem::tup({xe, p.dom->elems[ui]}));
    std::sort(elems.begin(), elems.end());
    skew_order(elems, seed, key.hash());
    Obj ext = make_obj(key, std::move(elems), "universe.ext");
    Mor proj = mor_from_fn(ext, x, [](const Elem& e) { return e.parts()[0]; });
    Mor q = mor_from_fn(ext, p.dom, [](const Elem& e) { return e.parts()[1]; });
    return CanonicalSquare{family, ext, q, proj};
  };
}

}  // namespace

UniverseStructure::UniverseStructure(std::string tag, Mor p, Obj pt, std::uint64_t skew_seed)
    : tag_(std::move(tag)), p_(std::move(p)), pt_(std::move(pt)) {
  chooser_ = finset_chooser(tag_, p_, skew_seed);
}

UniverseStructure::UniverseStructure(std::string tag, Mor p, Obj pt, Chooser chooser)
    : tag_(std::move(tag)), p_(std::move(p)), pt_(std::move(pt)), chooser_(std::move(chooser)) {}

CanonicalSquare UniverseStructure::ext(const Mor& family) const {
  Elem key = Elem::tup({family.dom->id, graph_enc(family)});
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  CanonicalSquare sq = chooser_(family);
  std::lock_guard<std::mutex> lk(mu_);
  return memo_.emplace(std::move(key), std::move(sq)).first->second;
}

Mor UniverseStructure::pair(const Mor& family, const Mor& f, const Mor& g) const {
  CanonicalSquare sq = ext(family);
  if (!(compose(f, family) == compose(g, p_)))
    throw Error("universe.pair", "cone does not commute over " + family.cod->id.str() +
                                     " for family " + graph_enc(family).str());
  return mediate(sq.ext, sq.proj, sq.q, f, g);
}

Mor UniverseStructure::q_of(const Mor& f, const Mor& family) const {
  if (f.cod->id != family.dom->id)
    throw Error("universe.q_of", "shape mismatch: f lands in " + f.cod->id.str() +
                                     " but family starts at " + family.dom->id.str());
  Mor pulled = compose(f, family);
  CanonicalSquare src = ext(pulled);
  return pair(family, compose(src.proj, f), src.q);
}

Mor UniverseStructure::diag() const {
  return pair(p_, identity_mor(p_.dom), identity_mor(p_.dom));
}

UnivPtr finset_universe(std::string tag, Mor p, Obj pt, std::uint64_t skew_seed) {
  return std::make_shared<UniverseStructure>(std::move(tag), std::move(p), std::move(pt),
                                             skew_seed);
}

UnivPtr e_universe(const UnivPtr& base, const Mor& eq) {
  CanonicalSquare psq = base->ext(base->p());
  if (eq.dom->id != psq.ext->id || eq.cod->id != base->u()->id)
    throw Error("universe.e", "Eq must be (Ũ;p)→U, got " + eq.dom->id.str() + "→" +
                                  eq.cod->id.str());
  CanonicalSquare esq = base->ext(eq);  // EŨ = ((Ũ;p);Eq)
  Mor p_e = compose(compose(esq.proj, psq.proj), base->p());
  auto chooser = [base, eq](const Mor& family) {
    CanonicalSquare s1 = base->ext(family);
    Mor f2 = compose(s1.q, base->p());
    CanonicalSquare s2 = base->ext(f2);
    Mor qq = base->q_of(s1.q, base->p());  // Q(Q(F),p): (X;F,Q(F)∘p)→(Ũ;p)
    Mor f3 = compose(qq, eq);
    CanonicalSquare s3 = base->ext(f3);
    Mor q_e = base->q_of(qq, eq);  // Q(Q(Q(F),p),Eq): (X;F)_E→EŨ
    Mor proj_e = compose(compose(s3.proj, s2.proj), s1.proj);
    return CanonicalSquare{family, s3.ext, q_e, proj_e};
  };
  return std::make_shared<UniverseStructure>(base->tag() + ".E", p_e, base->pt(),
                                             std::move(chooser));
}

Mor star(const UniverseStructure& to, const UniverseStructure& from, const Mor& family,
         const Mor& f) {
  if (!(compose(f, to.p()) == from.p()))
    throw Error("universe.star", "morphism is not over " + to.u()->id.str());
  CanonicalSquare src = from.ext(family);
  return to.pair(family, src.proj, compose(src.q, f));
}

}  // namespace idsem
