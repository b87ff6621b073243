#pragma once

// Serialization of catalogs and verification reports. Reals are printed
// with 17 significant digits everywhere (exact binary64 round trip); in
// JSON they are decimal strings so no parser rounds them.

#include <string>
#include <vector>

#include "verify.hpp"
#include "zerofinder.hpp"

namespace e2z {

std::string format_real17(double v);

std::string generated_by();  // tool name + version stamp for exports

// Header row, then one row per record:
// c,d,a,b,x_pred1,y_pred1,x_pred2,y_pred2,x_refined,y_refined,residual,theta_scaled,newton_iters
std::string catalog_csv(const std::vector<ZeroRecord>& catalog);
void write_catalog_csv(const std::vector<ZeroRecord>& catalog, const std::string& path);

// {"constants": {...}, "records": [...], "generated_by": "..."}
std::string catalog_json(const std::vector<ZeroRecord>& catalog);
void write_catalog_json(const std::vector<ZeroRecord>& catalog, const std::string& path);

// {"constants": {...}, "checks": [...], "generated_by": "..."}
std::string report_json(const std::vector<Check>& checks);
void write_report_json(const std::vector<Check>& checks, const std::string& path);

}  // namespace e2z
