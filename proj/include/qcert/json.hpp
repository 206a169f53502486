#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qcert/coloring.hpp"
#include "qcert/qsim/mub.hpp"
#include "qcert/qsim/types.hpp"
#include "qcert/stairs.hpp"

namespace qcert::json {

/// Minimal JSON document with deterministic serialization: object keys
/// are emitted in sorted order and doubles with 17 significant digits,
/// so identical content is always identical bytes.
class Value {
 public:
  Value() : node_(nullptr) {}

  static Value object() { return Value(Object{}); }
  static Value array() { return Value(Array{}); }
  static Value str(std::string s) { return Value(std::move(s)); }
  static Value num(double v);
  static Value integer(std::int64_t v) { return Value(v); }
  static Value boolean(bool v) { return Value(v); }

  Value& set(std::string key, Value v);
  Value& push(Value v);

  void dump(std::ostream& os) const;
  std::string dump() const;

 private:
  using Object = std::map<std::string, Value>;
  using Array = std::vector<Value>;
  using Node = std::variant<std::nullptr_t, bool, std::int64_t, double,
                            std::string, Array, Object>;

  template <typename T>
  explicit Value(T&& v) : node_(std::forward<T>(v)) {}

  Node node_;
};

Value to_json(const ks::SearchCertificate& cert);
Value to_json(const stairs::SteeringReport& report);

/// Matrices and state vectors as nested [re, im] arrays, row-major.
Value matrix_json(const qsim::Matrix& m);
Value vector_json(const qsim::Vector& v);

/// Probability rows keyed by basis label.
Value prob_table_json(const qsim::ProbTable& table, const qsim::MubSet& mub);

}  // namespace qcert::json
