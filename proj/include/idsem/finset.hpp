#pragma once

#include "idsem/elem.hpp"
#include "idsem/report.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace idsem {

// Materialization cap: constructions producing larger carriers fail loudly.
inline constexpr std::size_t kMaxSetSize = 64;

// An object is a coded finite set: a fresh tagged id plus an ordered element
// list. Object equality is id equality; constructions key their memo tables
// on ids, so equal ids always carry identical element lists.
struct ObjData {
  Elem id;
  std::vector<Elem> elems;
};
using Obj = std::shared_ptr<const ObjData>;

Obj make_obj(Elem id, std::vector<Elem> elems, const char* construction = "make_obj");
Obj skeletal_set(std::size_t n);
bool same_obj(const Obj& a, const Obj& b);
std::optional<std::size_t> elem_index(const Obj& o, const Elem& e);

// A morphism is a total function table in positional form. Equality is
// structural: same dom id, same cod id, same table.
struct Mor {
  Obj dom, cod;
  std::vector<std::uint32_t> table;

  const Elem& apply(const Elem& x) const;
  Elem apply_idx(std::size_t i) const { return cod->elems.at(table.at(i)); }
};

bool operator==(const Mor& a, const Mor& b);
inline bool operator!=(const Mor& a, const Mor& b) { return !(a == b); }

Mor make_mor(Obj dom, Obj cod, std::vector<std::uint32_t> table);
Mor mor_from_fn(const Obj& dom, const Obj& cod, const std::function<Elem(const Elem&)>& fn);
Mor identity_mor(const Obj& o);
Mor compose(const Mor& f, const Mor& g);  // diagrammatic: f then g
bool is_injective(const Mor& m);
bool is_surjective(const Mor& m);
bool is_iso(const Mor& m);
Mor inverse(const Mor& m);
Mor unique_to_singleton(const Obj& from, const Obj& pt);

// Value-based sorted graph ((x y) ...) — stable across apex reorderings.
Elem graph_enc(const Mor& m);
// Full structural encoding ("mor" dom-id cod-id graph), used as memo key.
Elem mor_enc(const Mor& m);

// Enumerates all functions a→b in canonical (odometer) order.
// Throws Error("bound.overflow") if the count exceeds `limit`.
std::vector<Mor> all_functions(const Obj& a, const Obj& b,
                               std::size_t limit = 4'000'000);

// A finite (boundedly enumerable) category presented operationally. The
// object enumerator is for verifiers only; constructions never draw on it.
struct FinCategory {
  std::function<std::vector<Obj>(std::size_t bound)> objects;
  std::function<std::vector<Mor>(const Obj&, const Obj&)> hom;
  std::function<Mor(const Obj&)> identity;
  std::function<Mor(const Mor&, const Mor&)> compose;
};

FinCategory finset_category(std::vector<Obj> verification_objects);

// apex --top--> B, B --right--> D, apex --left--> C, C --bottom--> D.
// Commutativity: top∘right = left∘bottom.
struct CommSquare {
  Mor top, right, left, bottom;
};

bool square_commutes(const CommSquare& sq);

// Pullback test by cone enumeration: for every object W drawn from the
// category's enumerator and every commuting cone (u: W→B, v: W→C) there must
// be exactly one mediating W→apex. Throws on a non-commuting square.
bool verify_pullback(const CommSquare& sq, const FinCategory& cat,
                     std::size_t object_bound = 64);

// Unique mediator into a pullback square from a commuting cone, solved
// pointwise; throws if some point has no (or several) solutions.
Mor mediate(const Obj& apex, const Mor& leg_b, const Mor& leg_c,
            const Mor& cone_b, const Mor& cone_c);

Report check_category_axioms(const FinCategory& cat, std::size_t bound);
bool is_final(const FinCategory& cat, const Obj& x, std::size_t bound = 64);

struct FunctorData {
  std::function<Obj(const Obj&)> on_obj;
  std::function<Mor(const Mor&)> on_mor;
};

FunctorData identity_functor();
Report check_functor(const FunctorData& fd, const FinCategory& src,
                     const FinCategory& dst, std::size_t bound,
                     const std::vector<CommSquare>& designated_squares = {});

}  // namespace idsem
