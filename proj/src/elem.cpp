#include "idsem/elem.hpp"

#include <sstream>
#include <stdexcept>

namespace idsem {

struct Elem::Rep {
  enum Kind { kNum, kSym, kTup } kind;
  std::int64_t n = 0;
  std::string s;
  std::vector<Elem> t;
};

Elem Elem::num(std::int64_t v) {
  auto r = std::make_shared<Rep>();
  r->kind = Rep::kNum;
  r->n = v;
  return Elem(std::move(r));
}

Elem Elem::sym(std::string s) {
  auto r = std::make_shared<Rep>();
  r->kind = Rep::kSym;
  r->s = std::move(s);
  return Elem(std::move(r));
}

Elem Elem::tup(std::vector<Elem> parts) {
  auto r = std::make_shared<Rep>();
  r->kind = Rep::kTup;
  r->t = std::move(parts);
  return Elem(std::move(r));
}

bool Elem::is_num() const { return rep_->kind == Rep::kNum; }
bool Elem::is_sym() const { return rep_->kind == Rep::kSym; }
bool Elem::is_tup() const { return rep_->kind == Rep::kTup; }

std::int64_t Elem::as_num() const {
  if (!is_num()) throw std::logic_error("Elem: not a number: " + str());
  return rep_->n;
}

const std::string& Elem::as_sym() const {
  if (!is_sym()) throw std::logic_error("Elem: not a symbol: " + str());
  return rep_->s;
}

const std::vector<Elem>& Elem::parts() const {
  if (!is_tup()) throw std::logic_error("Elem: not a tuple: " + str());
  return rep_->t;
}

int Elem::cmp(const Elem& o) const {
  if (rep_ == o.rep_) return 0;
  if (rep_->kind != o.rep_->kind)
    return rep_->kind < o.rep_->kind ? -1 : 1;
  switch (rep_->kind) {
    case Rep::kNum:
      return rep_->n < o.rep_->n ? -1 : rep_->n > o.rep_->n ? 1 : 0;
    case Rep::kSym:
      return rep_->s.compare(o.rep_->s) < 0   ? -1
             : rep_->s.compare(o.rep_->s) > 0 ? 1
                                              : 0;
    case Rep::kTup: {
      const auto& a = rep_->t;
      const auto& b = o.rep_->t;
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = a[i].cmp(b[i]);
        if (c != 0) return c;
      }
      return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
    }
  }
  return 0;
}

std::uint64_t Elem::hash() const {
  // FNV-1a over the structure; deterministic across runs.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  switch (rep_->kind) {
    case Rep::kNum:
      mix(0x11);
      mix(static_cast<std::uint64_t>(rep_->n));
      break;
    case Rep::kSym:
      mix(0x22);
      for (char c : rep_->s) mix(static_cast<unsigned char>(c));
      break;
    case Rep::kTup:
      mix(0x33);
      for (const Elem& e : rep_->t) mix(e.hash());
      break;
  }
  return h;
}

std::string Elem::str() const {
  std::ostringstream os;
  switch (rep_->kind) {
    case Rep::kNum:
      os << rep_->n;
      break;
    case Rep::kSym:
      os << rep_->s;
      break;
    case Rep::kTup: {
      os << '(';
      bool first = true;
      for (const Elem& e : rep_->t) {
        if (!first) os << ' ';
        os << e.str();
        first = false;
      }
      os << ')';
      break;
    }
  }
  return os.str();
}

}  // namespace idsem
