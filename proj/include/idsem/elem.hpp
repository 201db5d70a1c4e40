#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace idsem {

// Immutable value tree with a total order: every set element, object id and
// table key in the library is an Elem, so equality, ordering, hashing and
// printing are uniform and deterministic.
class Elem {
 public:
  Elem() : Elem(num(0)) {}

  static Elem num(std::int64_t v);
  static Elem sym(std::string s);
  static Elem tup(std::vector<Elem> parts);

  bool is_num() const;
  bool is_sym() const;
  bool is_tup() const;

  std::int64_t as_num() const;
  const std::string& as_sym() const;
  const std::vector<Elem>& parts() const;

  // Total order: num < sym < tup, then by value / lexicographic.
  int cmp(const Elem& o) const;
  bool operator==(const Elem& o) const { return cmp(o) == 0; }
  bool operator!=(const Elem& o) const { return cmp(o) != 0; }
  bool operator<(const Elem& o) const { return cmp(o) < 0; }

  std::uint64_t hash() const;

  // S-expression rendering, e.g. (ext U3 (skel 2) ((0 1) (1 0)))
  std::string str() const;

 private:
  struct Rep;
  explicit Elem(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

}  // namespace idsem
