#pragma once

#include <string>

#include "json.hpp"

#include "darboux3/certificates.hpp"
#include "darboux3/search.hpp"

namespace dbx {

using Json = nlohmann::ordered_json;

Json certificate_json(const DarbouxCertificate& cert);
Json search_report_json(const SearchReport& report);
Json first_integral_json(const DarbouxFirstIntegral& integral);

// Plain-text rendering for the terminal; one certificate per line.
std::string render_search_report(const SearchReport& report);

}  // namespace dbx
