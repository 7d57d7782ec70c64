#include "enr/kodaira.hpp"

#include <stdexcept>

namespace enr {

std::string KodairaType::str() const {
  switch (cls) {
    case KodairaClass::kIn: return "I" + std::to_string(n);
    case KodairaClass::kInStar: return "I" + std::to_string(n) + "*";
    case KodairaClass::kII: return "II";
    case KodairaClass::kIII: return "III";
    case KodairaClass::kIV: return "IV";
    case KodairaClass::kIVStar: return "IV*";
    case KodairaClass::kIIIStar: return "III*";
    case KodairaClass::kIIStar: return "II*";
  }
  return "?";
}

KodairaType parse_kodaira(const std::string& s) {
  if (s == "II") return KodairaType::II();
  if (s == "III") return KodairaType::III();
  if (s == "IV") return KodairaType::IV();
  if (s == "II*") return KodairaType::IIStar();
  if (s == "III*") return KodairaType::IIIStar();
  if (s == "IV*") return KodairaType::IVStar();
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string num = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    int n = std::stoi(num);
    return star ? KodairaType::InStar(n) : KodairaType::In(n);
  }
  throw std::invalid_argument("parse_kodaira: unknown type '" + s + "'");
}

int euler_contribution(const KodairaType& t) {
  switch (t.cls) {
    case KodairaClass::kIn: return t.n;
    case KodairaClass::kInStar: return t.n + 6;
    case KodairaClass::kII: return 2;
    case KodairaClass::kIII: return 3;
    case KodairaClass::kIV: return 4;
    case KodairaClass::kIVStar: return 8;
    case KodairaClass::kIIIStar: return 9;
    case KodairaClass::kIIStar: return 10;
  }
  return 0;
}

int component_count(const KodairaType& t) {
  switch (t.cls) {
    case KodairaClass::kIn: return t.n == 0 ? 1 : t.n;
    case KodairaClass::kInStar: return t.n + 5;
    case KodairaClass::kII: return 1;
    case KodairaClass::kIII: return 2;
    case KodairaClass::kIV: return 3;
    case KodairaClass::kIVStar: return 7;
    case KodairaClass::kIIIStar: return 8;
    case KodairaClass::kIIStar: return 9;
  }
  return 0;
}

int root_rank(const KodairaType& t) { return component_count(t) - 1; }

Integer root_lattice_det(const KodairaType& t) {
  switch (t.cls) {
    case KodairaClass::kIn: return t.n == 0 ? Integer(1) : Integer(t.n);
    case KodairaClass::kInStar: return Integer(4);
    case KodairaClass::kII: return Integer(1);
    case KodairaClass::kIII: return Integer(2);
    case KodairaClass::kIV: return Integer(3);
    case KodairaClass::kIVStar: return Integer(3);
    case KodairaClass::kIIIStar: return Integer(2);
    case KodairaClass::kIIStar: return Integer(1);
  }
  return Integer(1);
}

MatZ root_lattice_gram(const KodairaType& t) {
  switch (t.cls) {
    case KodairaClass::kIn:
      return t.n <= 1 ? MatZ(0, 0) : cartan_gram_A(t.n - 1);
    case KodairaClass::kInStar: return cartan_gram_D(t.n + 4);
    case KodairaClass::kII: return MatZ(0, 0);
    case KodairaClass::kIII: return cartan_gram_A(1);
    case KodairaClass::kIV: return cartan_gram_A(2);
    case KodairaClass::kIVStar: return cartan_gram_E(6);
    case KodairaClass::kIIIStar: return cartan_gram_E(7);
    case KodairaClass::kIIStar: return cartan_gram_E(8);
  }
  return MatZ(0, 0);
}

Rational local_contribution(const KodairaType& t, int component) {
  if (component < 0 || component >= contact_choices(t))
    throw std::invalid_argument("local_contribution: invalid component for " + t.str());
  if (component == 0) return Rational(0);
  switch (t.cls) {
    case KodairaClass::kIn:
      return make_fraction(Integer(component) * Integer(t.n - component), Integer(t.n));
    case KodairaClass::kInStar:
      if (component == 1) return Rational(1);
      return Rational(1) + make_fraction(Integer(t.n), Integer(4));
    case KodairaClass::kIII: return make_fraction(1, 2);
    case KodairaClass::kIV: return make_fraction(2, 3);
    case KodairaClass::kIVStar: return make_fraction(4, 3);
    case KodairaClass::kIIIStar: return make_fraction(3, 2);
    case KodairaClass::kII:
    case KodairaClass::kIIStar:
      return Rational(0);  // unreachable: only component 0 is allowed
  }
  return Rational(0);
}

int contact_choices(const KodairaType& t) {
  switch (t.cls) {
    case KodairaClass::kIn: return t.n == 0 ? 1 : t.n;
    case KodairaClass::kInStar: return 4;
    case KodairaClass::kII: return 1;
    case KodairaClass::kIII: return 2;
    case KodairaClass::kIV: return 3;
    case KodairaClass::kIVStar: return 4;
    case KodairaClass::kIIIStar: return 2;
    case KodairaClass::kIIStar: return 1;
  }
  return 1;
}

}  // namespace enr
