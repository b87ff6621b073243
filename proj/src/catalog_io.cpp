#include "catalog_io.hpp"

#include <cstdio>
#include <fstream>

#include "errors.hpp"
#include "json.hpp"

namespace e2z {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << body;
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

ordered_json constants_block() {
  ordered_json c;
  c["v0"] = format_real17(kV0);
  c["lambda0"] = format_real17(kLambda0);
  c["strip_eps"] = format_real17(kStripEps);
  return c;
}

}  // namespace

std::string format_real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string generated_by() { return std::string("e2zeros ") + kVersion; }

std::string catalog_csv(const std::vector<ZeroRecord>& catalog) {
  std::string out =
      "c,d,a,b,x_pred1,y_pred1,x_pred2,y_pred2,x_refined,y_refined,"
      "residual,theta_scaled,newton_iters\n";
  for (const ZeroRecord& r : catalog) {
    out += std::to_string(r.c) + ',' + std::to_string(r.d) + ',';
    out += std::to_string(r.g.a) + ',' + std::to_string(r.g.b) + ',';
    out += format_real17(r.predicted1.real()) + ',' + format_real17(r.predicted1.imag()) + ',';
    out += format_real17(r.predicted2.real()) + ',' + format_real17(r.predicted2.imag()) + ',';
    out += format_real17(r.refined.real()) + ',' + format_real17(r.refined.imag()) + ',';
    out += format_real17(r.residual) + ',' + format_real17(r.theta_scaled) + ',';
    out += std::to_string(r.newton_iters) + '\n';
  }
  return out;
}

void write_catalog_csv(const std::vector<ZeroRecord>& catalog, const std::string& path) {
  write_file(path, catalog_csv(catalog));
}

std::string catalog_json(const std::vector<ZeroRecord>& catalog) {
  ordered_json doc;
  doc["constants"] = constants_block();
  ordered_json records = ordered_json::array();
  for (const ZeroRecord& r : catalog) {
    ordered_json rec;
    rec["c"] = r.c;
    rec["d"] = r.d;
    rec["a"] = r.g.a;
    rec["b"] = r.g.b;
    rec["x_pred1"] = format_real17(r.predicted1.real());
    rec["y_pred1"] = format_real17(r.predicted1.imag());
    rec["x_pred2"] = format_real17(r.predicted2.real());
    rec["y_pred2"] = format_real17(r.predicted2.imag());
    rec["x_refined"] = format_real17(r.refined.real());
    rec["y_refined"] = format_real17(r.refined.imag());
    rec["residual"] = format_real17(r.residual);
    rec["theta_scaled"] = format_real17(r.theta_scaled);
    rec["newton_iters"] = r.newton_iters;
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  doc["generated_by"] = generated_by();
  return doc.dump(2) + "\n";
}

void write_catalog_json(const std::vector<ZeroRecord>& catalog, const std::string& path) {
  write_file(path, catalog_json(catalog));
}

std::string report_json(const std::vector<Check>& checks) {
  ordered_json doc;
  doc["constants"] = constants_block();
  ordered_json arr = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["measured"] = format_real17(c.measured);
    entry["threshold"] = format_real17(c.threshold);
    entry["comparison"] = c.greater_is_pass ? "gt" : "lt";
    arr.push_back(std::move(entry));
  }
  doc["checks"] = std::move(arr);
  doc["generated_by"] = generated_by();
  return doc.dump(2) + "\n";
}

void write_report_json(const std::vector<Check>& checks, const std::string& path) {
  write_file(path, report_json(checks));
}

}  // namespace e2z
