#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lemoine {

// Minimal JSON value with deterministic serialization: object keys are sorted,
// numbers print as %.17g, output is compact. Non-finite numbers are rejected.
class Json {
 public:
  Json() = default;

  static Json object() { return Json(Kind::Object); }
  static Json array() { return Json(Kind::Array); }
  static Json num(double v);
  static Json str(std::string v);
  static Json boolean(bool v);
  static Json null() { return Json(Kind::Null); }

  Json& set(const std::string& key, Json v);
  Json& push(Json v);

  std::string dump() const;
  std::string dump_pretty() const;  // 2-space indentation, same ordering rules

  bool is_object() const { return kind_ == Kind::Object; }

 private:
  enum class Kind { Null, Bool, Number, String, Object, Array };

  explicit Json(Kind k) : kind_(k) {}

  void dump_to(std::string& out, int indent) const;

  Kind kind_ = Kind::Null;
  bool b_ = false;
  double n_ = 0.0;
  std::string s_;
  std::vector<std::pair<std::string, Json>> obj_;
  std::vector<Json> arr_;
};

}  // namespace lemoine
