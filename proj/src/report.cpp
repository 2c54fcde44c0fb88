#include "darboux3/report.hpp"

#include <sstream>

#include "darboux3/parse.hpp"

namespace dbx {

Json certificate_json(const DarbouxCertificate& cert) {
    Json j;
    if (cert.kind == DarbouxCertificate::Kind::polynomial) {
        j["kind"] = "polynomial";
        j["f"] = format_polynomial(cert.f);
    } else {
        j["kind"] = "exponential";
        j["g"] = format_polynomial(cert.g);
        j["h"] = format_polynomial(cert.h);
    }
    j["cofactor"] = Json::array();
    for (const auto& k : cert.cofactor.coeffs()) j["cofactor"].push_back(k.str());
    j["verified"] = cert.verified;
    return j;
}

Json search_report_json(const SearchReport& report) {
    Json j;
    j["system"] = report.system;
    j["degree_bound"] = report.degree_bound;
    j["mode"] = report.mode;
    j["certificates"] = Json::array();
    for (const auto& c : report.certificates) j["certificates"].push_back(certificate_json(c));
    j["branches"] = Json::array();
    for (const auto& b : report.branches) {
        Json jb;
        jb["constraints"] = b.constraints;
        jb["nullity"] = b.nullity;
        j["branches"].push_back(std::move(jb));
    }
    j["unresolved"] = report.unresolved;
    if (report.partial) j["partial"] = true;
    return j;
}

Json first_integral_json(const DarbouxFirstIntegral& integral) {
    Json j;
    j["factors"] = Json::array();
    for (const auto& [cert, exponent] : integral.factors) {
        Json jf;
        jf["certificate"] = certificate_json(cert);
        jf["exponent"] = exponent.str();
        j["factors"].push_back(std::move(jf));
    }
    j["description"] = integral.description();
    return j;
}

std::string render_search_report(const SearchReport& report) {
    std::ostringstream out;
    out << "system: " << report.system << "\n";
    out << "mode: " << report.mode << "   degree bound: " << report.degree_bound << "\n";
    if (report.certificates.empty()) {
        out << "certificates: none\n";
    } else {
        out << "certificates:\n";
        for (const auto& c : report.certificates) {
            if (c.kind == DarbouxCertificate::Kind::polynomial) {
                out << "  f = " << format_polynomial(c.f);
            } else {
                out << "  exp((" << format_polynomial(c.g) << ")/(" << format_polynomial(c.h)
                    << "))";
            }
            out << "   cofactor = " << format_polynomial(c.cofactor.to_polynomial())
                << (c.verified ? "   [verified]" : "   [UNVERIFIED]") << "\n";
        }
    }
    out << "branches: " << report.branches.size() << (report.partial ? " (partial)" : "") << "\n";
    if (!report.unresolved.empty()) {
        out << "unresolved factors:\n";
        for (const auto& u : report.unresolved) out << "  " << u << "\n";
    }
    return out.str();
}

}  // namespace dbx
