#include "cotwist/report.hpp"

#include <sstream>

#include <json.hpp>

#include "cotwist/errors.hpp"

namespace cotwist {

bool CheckReport::ok() const {
  for (const auto& e : entries_)
    if (!e.pass) return false;
  return true;
}

void CheckReport::add_pass(const std::string& name) { add({name, true, std::nullopt}); }

void CheckReport::add_fail(const std::string& name, std::optional<Witness> w) {
  add({name, false, std::move(w)});
}

std::optional<Witness> first_difference(const LinMap& lhs, const LinMap& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() || !(lhs.field() == rhs.field()))
    throw ShapeMismatch("equation sides have different shapes: " +
                        std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                        " vs " + std::to_string(rhs.rows()) + "x" +
                        std::to_string(rhs.cols()));
  for (int j = 0; j < lhs.cols(); ++j)
    for (int i = 0; i < lhs.rows(); ++i)
      if (!(lhs.at(i, j) == rhs.at(i, j))) {
        Witness w;
        w.input_label = lhs.domain().basis[j];
        if (w.input_label.empty()) w.input_label = "1";  // ground-field basis vector
        w.lhs = lhs.column_strs(j);
        w.rhs = rhs.column_strs(j);
        return w;
      }
  return std::nullopt;
}

void CheckReport::add_equal(const std::string& name, const LinMap& lhs, const LinMap& rhs) {
  auto w = first_difference(lhs, rhs);
  if (w)
    add_fail(name, std::move(w));
  else
    add_pass(name);
}

void CheckReport::merge(const std::string& prefix, const CheckReport& other) {
  for (const auto& e : other.entries_)
    add({prefix + "/" + e.name, e.pass, e.witness});
}

const CheckEntry* CheckReport::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

bool CheckReport::passed(const std::string& name) const {
  const auto* e = find(name);
  return e && e->pass;
}

namespace {
std::string join(const std::vector<std::string>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i];
  }
  return s + ")";
}
}  // namespace

std::string CheckReport::text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << (e.pass ? "[pass] " : "[FAIL] ") << e.name << "\n";
    if (!e.pass && e.witness) {
      os << "       at basis vector: " << e.witness->input_label << "\n";
      os << "       lhs = " << join(e.witness->lhs) << "\n";
      os << "       rhs = " << join(e.witness->rhs) << "\n";
    }
  }
  os << (ok() ? "VERDICT: pass" : "VERDICT: fail") << "\n";
  return os.str();
}

std::string CheckReport::json_str() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json c;
    c["name"] = e.name;
    c["pass"] = e.pass;
    if (e.witness) {
      c["witness"] = {{"input", e.witness->input_label},
                      {"lhs", e.witness->lhs},
                      {"rhs", e.witness->rhs}};
    }
    checks.push_back(std::move(c));
  }
  nlohmann::ordered_json out;
  out["checks"] = std::move(checks);
  out["verdict"] = ok() ? "pass" : "fail";
  return out.dump(2);
}

}  // namespace cotwist
