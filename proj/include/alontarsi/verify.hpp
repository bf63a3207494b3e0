#pragma once

#include <string>
#include <vector>

#include "alontarsi/certificate.hpp"
#include "alontarsi/graph.hpp"

namespace alontarsi {

/// Outcome of re-checking a certificate. Built on the counting and graph
/// layers only, with no access to the certifying recursion.
struct VerifyResult {
    bool pass = false;
    std::vector<std::string> failures;
    int64_t even_count = 0;
    int64_t odd_count = 0;
    int64_t diff = 0;
    int max_out_degree = 0;
};

/// Re-checks the certificate against its embedded graph: arcs must cover the
/// edge set exactly once, the stored out-degrees and caps must match, and the
/// Eulerian difference is recounted from scratch and must be nonzero.
VerifyResult verify_certificate(const Certificate& cert);

/// Same, but additionally requires the certificate to describe this graph.
VerifyResult verify_certificate(const Certificate& cert, const Graph& g);

}  // namespace alontarsi
