#pragma once

#include <memory>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace fjump {

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
  Field field;
  std::vector<std::string> vars;
  MonOrder order;

  Ring(Field f, std::vector<std::string> names, MonOrder ord)
      : field(std::move(f)), vars(std::move(names)), order(ord) {}

  size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return int(i);
    return -1;
  }

  static RingPtr make(Field f, std::vector<std::string> names) {
    if (names.empty()) fail_pre("ring needs at least one variable");
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) fail_pre("duplicate variable name: " + names[i]);
    if (f.k() > 1)
      for (auto& n : names)
        if (n == "t") fail_pre("variable name t is reserved for the extension generator");
    return std::make_shared<Ring>(std::move(f), std::move(names), MonOrder{});
  }

  // Ring with a fresh tag variable in front, ordered to eliminate it.
  RingPtr with_elim_tag() const {
    std::vector<std::string> names;
    names.reserve(vars.size() + 1);
    names.push_back("@w");
    names.insert(names.end(), vars.begin(), vars.end());
    return std::make_shared<Ring>(field, std::move(names), MonOrder{1});
  }

  bool same(const Ring& o) const {
    return field.same(o.field) && vars == o.vars && order.elim == o.order.elim;
  }

  std::string to_string() const {
    std::string s = "F" + std::to_string(field.p());
    if (field.k() > 1) {
      s += "^" + std::to_string(field.k()) + ":";
      const auto& m = field.modulus();
      std::string ms;
      for (size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!ms.empty()) ms += "+";
        if (i == 0) {
          ms += std::to_string(m[i]);
        } else {
          if (m[i] != 1) ms += std::to_string(m[i]) + "*";
          ms += "t";
          if (i > 1) ms += "^" + std::to_string(i);
        }
      }
      s += ms;
    }
    s += "[";
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) s += ",";
      s += vars[i];
    }
    s += "]";
    return s;
  }
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) fail_pre("operands live in different rings");
}

}  // namespace fjump
