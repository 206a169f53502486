#include "qcert/json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcert::json {

Value Value::num(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("json: non-finite number");
  return Value(v);
}

Value& Value::set(std::string key, Value v) {
  auto* obj = std::get_if<Object>(&node_);
  if (!obj) throw std::logic_error("json: set() on a non-object");
  (*obj)[std::move(key)] = std::move(v);
  return *this;
}

Value& Value::push(Value v) {
  auto* arr = std::get_if<Array>(&node_);
  if (!arr) throw std::logic_error("json: push() on a non-array");
  arr->push_back(std::move(v));
  return *this;
}

namespace {

void write_escaped(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      case '\r': os << "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << c;  // UTF-8 passes through
        }
    }
  }
  os << '"';
}

}  // namespace

void Value::dump(std::ostream& os) const {
  struct Visitor {
    std::ostream& os;
    void operator()(std::nullptr_t) { os << "null"; }
    void operator()(bool b) { os << (b ? "true" : "false"); }
    void operator()(std::int64_t n) { os << n; }
    void operator()(double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
    }
    void operator()(const std::string& s) { write_escaped(os, s); }
    void operator()(const Array& a) {
      os << '[';
      for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        a[i].dump(os);
      }
      os << ']';
    }
    void operator()(const Object& o) {
      os << '{';
      bool first = true;
      for (const auto& [key, value] : o) {  // std::map: keys sorted
        if (!first) os << ',';
        first = false;
        write_escaped(os, key);
        os << ':';
        value.dump(os);
      }
      os << '}';
    }
  };
  std::visit(Visitor{os}, node_);
}

std::string Value::dump() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

Value to_json(const ks::SearchCertificate& cert) {
  Value v = Value::object();
  v.set("result", Value::str(cert.result == ks::Coloring::Sat ? "SAT" : "UNSAT"));
  v.set("nodes_explored", Value::integer(std::int64_t(cert.nodes_explored)));
  v.set("max_depth", Value::integer(cert.max_depth));
  if (cert.result == ks::Coloring::Sat) {
    Value a = Value::array();
    for (std::uint8_t x : cert.assignment) a.push(Value::integer(x));
    v.set("assignment", std::move(a));
  }
  return v;
}

Value to_json(const stairs::SteeringReport& report) {
  Value records = Value::array();
  for (const stairs::CertaintyRecord& rec : report.records) {
    Value r = Value::object();
    r.set("k", Value::integer(rec.k));
    r.set("outcome", Value::integer(rec.outcome));
    r.set("prob_at_A", Value::num(rec.prob_at_a));
    r.set("fidelity_B", Value::num(rec.fidelity_b));
    Value cert = Value::object();
    for (int j = 0; j < 3; ++j) {
      cert.set(std::to_string(j + 1), Value::num(rec.certainty[j]));
    }
    r.set("certainty", std::move(cert));
    records.push(std::move(r));
  }
  Value summary = Value::object();
  summary.set("all_certain", Value::boolean(report.all_certain));
  if (report.coloring) {
    summary.set("coloring", Value::str(*report.coloring == ks::Coloring::Unsat
                                           ? "UNSAT"
                                           : "SAT"));
  }
  Value v = Value::object();
  v.set("records", std::move(records));
  v.set("summary", std::move(summary));
  return v;
}

Value matrix_json(const qsim::Matrix& m) {
  Value rows = Value::array();
  for (int i = 0; i < m.rows(); ++i) {
    Value row = Value::array();
    for (int j = 0; j < m.cols(); ++j) {
      Value entry = Value::array();
      entry.push(Value::num(m(i, j).real()));
      entry.push(Value::num(m(i, j).imag()));
      row.push(std::move(entry));
    }
    rows.push(std::move(row));
  }
  return rows;
}

Value vector_json(const qsim::Vector& v) {
  Value out = Value::array();
  for (int i = 0; i < v.size(); ++i) {
    Value entry = Value::array();
    entry.push(Value::num(v[i].real()));
    entry.push(Value::num(v[i].imag()));
    out.push(std::move(entry));
  }
  return out;
}

Value prob_table_json(const qsim::ProbTable& table, const qsim::MubSet& mub) {
  if (static_cast<int>(table.size()) != mub.basis_count()) {
    throw std::invalid_argument("prob_table_json: row count mismatch");
  }
  Value rows = Value::array();
  for (int k = 0; k < mub.basis_count(); ++k) {
    Value row = Value::object();
    row.set("basis", Value::str(mub.label(k)));
    Value probs = Value::array();
    for (double p : table[k]) probs.push(Value::num(p));
    row.set("probs", std::move(probs));
    rows.push(std::move(row));
  }
  return rows;
}

}  // namespace qcert::json
