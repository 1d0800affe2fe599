#pragma once

#include <optional>
#include <string>

namespace pis {

struct CertificateCheck {
    bool ok = false;
    std::string message;
    int verified_lower = 0;
    std::optional<int> verified_upper;
};

// Re-validates a certificate file against a graph file. Deliberately
// self-contained: its graph model, face tracer, reachability and block
// checks are local to this module and independent of the search code.
CertificateCheck verify_certificate(const std::string& graph_json,
                                    const std::string& certificate_json);

} // namespace pis
