#include "epist/jsonio.hpp"

#include <sstream>

namespace epist {

namespace {

std::string dec(const BigRat& v, Rounding r) { return to_decimal(v, kJsonFracDigits, r); }

const char* kind_name(ExponentKind k) {
  switch (k) {
    case ExponentKind::Exact: return "Exact";
    case ExponentKind::SupCandidate: return "SupCandidate";
    case ExponentKind::LimitEstimate: return "LimitEstimate";
    case ExponentKind::Infinite: return "Infinite";
  }
  return "?";
}

}  // namespace

nlohmann::json to_json(const Word& w) { return w.str(); }

nlohmann::json to_json(const Morphism& m) {
  nlohmann::json images = nlohmann::json::array();
  for (int j = 0; j < m.alphabet_size(); ++j)
    images.push_back(m.image(static_cast<Letter>(j)).str());
  return {{"d", m.alphabet_size()}, {"images", images}};
}

nlohmann::json to_json(const BispecialRecord& r) {
  nlohmann::json j{{"N", r.n}, {"lenB", r.len_b.str()}, {"lenR", r.len_r.str()}};
  if (r.b) j["b"] = r.b->str();
  if (r.r) j["r"] = r.r->str();
  return j;
}

nlohmann::json to_json(const ExponentEstimate& e) {
  nlohmann::json j;
  if (e.kind == ExponentKind::Infinite) {
    j["lo"] = "inf";
    j["hi"] = "inf";
  } else {
    j["lo"] = dec(e.lo, Rounding::Down);
    j["hi"] = dec(e.hi, Rounding::Up);
  }
  j["kind"] = kind_name(e.kind);
  if (e.witness_n >= 0)
    j["witnessN"] = e.witness_n;
  else
    j["witnessN"] = nullptr;
  if (e.has_finite_sup) j["sup"] = dec(e.finite_sup, Rounding::Down);
  return j;
}

nlohmann::json to_json(const RatInterval& iv) {
  return {{"lo", dec(iv.lo, Rounding::Down)}, {"hi", dec(iv.hi, Rounding::Up)}};
}

nlohmann::json to_json(const ComplexEnclosure& c) {
  return {{"re", dec(c.re, Rounding::Nearest)},
          {"im", dec(c.im, Rounding::Nearest)},
          {"radius", dec(c.radius, Rounding::Up)}};
}

nlohmann::json to_json(const DBonacciConstants& c) {
  nlohmann::json roots = nlohmann::json::array(), coeffs = nlohmann::json::array();
  for (const auto& r : c.roots) roots.push_back(to_json(r));
  for (const auto& k : c.coeffs) coeffs.push_back(to_json(k));
  return {{"d", c.d},       {"precisionBits", c.precision_bits},
          {"t", to_json(c.t)}, {"roots", roots},
          {"coeffs", coeffs},  {"E", to_json(c.critical_exponent)}};
}

nlohmann::json to_json(const SearchResult& r, bool all_argmax) {
  nlohmann::json argmax = nlohmann::json::array();
  if (all_argmax) {
    for (const auto& w : r.argmax)
      for (const auto& img : permutation_orbit(w))
        argmax.push_back(Word(img.d, img.letters).str());
  } else {
    for (const auto& w : r.argmax) argmax.push_back(Word(w.d, w.letters).str());
  }
  return {{"d", r.d},
          {"n", r.n},
          {"maxValue", r.max_value.str()},
          {"argmax", argmax},
          {"exploredCount", r.explored},
          {"steps", r.steps}};
}

nlohmann::json to_json(const oracle::RepetitionRecord& r) {
  return {{"period", r.period},
          {"length", r.length},
          {"exponent", dec(r.exponent, Rounding::Down)},
          {"exponentExact", numerator(r.exponent).str() + "/" + denominator(r.exponent).str()},
          {"occurrence", r.occurrence},
          {"root", r.root.str()}};
}

nlohmann::json to_json(const oracle::ExtensionProfile& p) {
  nlohmann::json left = nlohmann::json::array(), right = nlohmann::json::array();
  for (Letter l : p.left) left.push_back(static_cast<int>(l));
  for (Letter l : p.right) right.push_back(static_cast<int>(l));
  return {{"factor", p.factor.str()},
          {"length", p.factor.size()},
          {"left", left},
          {"right", right}};
}

nlohmann::json envelope(const std::string& command, nlohmann::json params,
                        nlohmann::json result) {
  return {{"command", command},
          {"params", std::move(params)},
          {"result", std::move(result)},
          {"versions", "episturmian 1.0.0"}};
}

namespace {

void render(const nlohmann::json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out << indent << it.key() << ":\n";
        render(it.value(), indent + "  ", out);
      } else {
        out << indent << it.key() << ": ";
        render(it.value(), "", out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& el : j) {
      if (el.is_object() || el.is_array()) {
        out << indent << "-\n";
        render(el, indent + "  ", out);
      } else {
        out << indent << "- ";
        render(el, "", out);
      }
    }
  } else if (j.is_string()) {
    out << j.get<std::string>() << "\n";
  } else {
    out << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::json& env) {
  std::ostringstream out;
  render(env, "", out);
  return out.str();
}

}  // namespace epist
