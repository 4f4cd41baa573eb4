#include "germcalc/ring.hpp"

#include <cctype>
#include <set>

namespace germcalc {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

PolyRing::PolyRing(PrimeField field, std::vector<std::string> var_names,
                   MonomialOrder order)
    : field_(field), var_names_(std::move(var_names)), order_(std::move(order)) {
  if (var_names_.empty())
    throw Error("a ring needs at least one variable");
  if (var_names_.size() > static_cast<std::size_t>(kMaxVars))
    throw Error("a ring supports at most " + std::to_string(kMaxVars) + " variables");
  std::set<std::string> seen;
  for (const std::string& name : var_names_) {
    if (!valid_identifier(name))
      throw Error("invalid variable name '" + name + "'");
    if (!seen.insert(name).second)
      throw Error("duplicate variable name '" + name + "'");
  }
  if (order_.nvars() != nvars())
    throw Error("order covers " + std::to_string(order_.nvars()) +
                " variables, ring has " + std::to_string(nvars()));
}

int PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < var_names_.size(); ++i)
    if (var_names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(PrimeField field, std::vector<std::string> var_names,
                  MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(var_names), std::move(order));
}

}  // namespace germcalc
