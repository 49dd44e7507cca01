#include "lemoine/json_writer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lemoine/error.hpp"

namespace lemoine {

Json Json::num(double v) {
  if (!std::isfinite(v)) fail(ErrorCode::NonFinite, "non-finite number in JSON output");
  Json j(Kind::Number);
  j.n_ = v;
  return j;
}

Json Json::str(std::string v) {
  Json j(Kind::String);
  j.s_ = std::move(v);
  return j;
}

Json Json::boolean(bool v) {
  Json j(Kind::Bool);
  j.b_ = v;
  return j;
}

Json& Json::set(const std::string& key, Json v) {
  if (kind_ != Kind::Object) fail(ErrorCode::InvalidArgument, "set() on non-object JSON value");
  obj_.emplace_back(key, std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  if (kind_ != Kind::Array) fail(ErrorCode::InvalidArgument, "push() on non-array JSON value");
  arr_.push_back(std::move(v));
  return *this;
}

namespace {

void escape_to(const std::string& s, std::string& out) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

}  // namespace

void Json::dump_to(std::string& out, int indent) const {
  const bool pretty = indent >= 0;
  auto newline = [&](int level) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<size_t>(level) * 2, ' ');
  };
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += b_ ? "true" : "false"; break;
    case Kind::Number: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", n_);
      out += buf;
      break;
    }
    case Kind::String: escape_to(s_, out); break;
    case Kind::Array: {
      out += '[';
      for (size_t i = 0; i < arr_.size(); ++i) {
        if (i) out += ',';
        newline(indent + 1);
        arr_[i].dump_to(out, pretty ? indent + 1 : -1);
      }
      if (!arr_.empty()) newline(indent);
      out += ']';
      break;
    }
    case Kind::Object: {
      std::vector<const std::pair<std::string, Json>*> sorted;
      sorted.reserve(obj_.size());
      for (const auto& kv : obj_) sorted.push_back(&kv);
      std::stable_sort(sorted.begin(), sorted.end(),
                       [](const auto* a, const auto* b) { return a->first < b->first; });
      out += '{';
      for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ',';
        newline(indent + 1);
        escape_to(sorted[i]->first, out);
        out += pretty ? ": " : ":";
        sorted[i]->second.dump_to(out, pretty ? indent + 1 : -1);
      }
      if (!sorted.empty()) newline(indent);
      out += '}';
      break;
    }
  }
}

std::string Json::dump() const {
  std::string out;
  dump_to(out, -1);
  return out;
}

std::string Json::dump_pretty() const {
  std::string out;
  dump_to(out, 0);
  out += '\n';
  return out;
}

}  // namespace lemoine
