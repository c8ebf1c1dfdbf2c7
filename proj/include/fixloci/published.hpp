#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixloci/numeric.hpp"

namespace fixloci {

// Reference values transcribed from the published tables and example
// expansions that this engine reproduces. They are comparison data, not
// inputs to any computation: where a published value disagrees with the
// engine, the audit reports the divergence and the engine's value stands.

struct PublishedTopRow {
    int label;
    const char* name;
    long long p;                                  // printed p column
    std::vector<long long> eps0;                  // printed counts row
    std::vector<std::optional<long long>> eps1;   // second row; nullopt = star
};

const std::vector<PublishedTopRow>& published_top_rows();

/// Printed series prefixes, as (exponent, value) pairs.
struct PublishedSeries {
    const char* key;
    std::vector<std::pair<long long, long long>> coefficients;
};

const PublishedSeries& published_series_c2_k3();       // 1+8q+28q^2+40q^3
const PublishedSeries& published_series_c3_k3();       // 1+6q+27q^2+80q^3
const PublishedSeries& published_series_c2x2_k3();     // even coefficients
const PublishedSeries& published_series_d8_example();  // the order-16-style expansion
/// Printed identity-projected Kummer rows through q^6, keyed C_2/C_3/C_4/C_6.
const std::vector<PublishedSeries>& published_kummer_identity_rows();

/// Printed configuration variants that differ from the stored catalog.
struct PublishedVariant {
    const char* key;
    const char* stored;
    const char* printed;
};
const std::vector<PublishedVariant>& published_config_variants();

/// One engine-vs-published divergence.
struct Discrepancy {
    std::string code;    // stable identifier, e.g. "C2_Q3"
    std::string detail;  // human-readable: computed vs published
};

/// Recomputes everything the published tables print and lists every cell
/// that disagrees with the engine. Pure reporting; never throws on a
/// mismatch.
std::vector<Discrepancy> audit_published_values();

} // namespace fixloci
