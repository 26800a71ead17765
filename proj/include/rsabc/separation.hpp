#ifndef RSABC_SEPARATION_HPP
#define RSABC_SEPARATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rsabc/cut.hpp"
#include "rsabc/parallel.hpp"
#include "rsabc/pools.hpp"

namespace rsabc {

struct SepOptions {
    double eps = 0.0;               // minimum violation to keep a row
    Exec exec = Exec::openmp;
    std::uint64_t seed = 0;         // per-call structure sampling
    int structure_sample = 200;     // brooms / arc sets drawn per call
    int row_cap = 500;              // most-violated rows kept (capped families)
    bool enable_triples = false;    // |D'|=3 sets for the kDemands families
};

/// All family tags, in the canonical registry order used for stats and CLI.
const std::vector<std::string>& all_family_tags();
bool is_family_tag(const std::string& tag);
CutKind family_kind(const std::string& tag);

/// Ad hoc separation: every returned cut is violated by at least
/// max(eps, tol::min_violation) at the point and carries its family tag.
std::vector<Cut> separate_family(const std::string& tag, const Instance& inst,
                                 const StructurePools& pools, const FractionalPoint& point,
                                 const SepOptions& opts);

/// Full enumeration of a family's rows over the unsampled pools; used for
/// witness bases and audits. No violation filtering.
std::vector<LinearRow> enumerate_family_rows(const std::string& tag, const Instance& inst,
                                             const StructurePools& pools,
                                             bool enable_triples = false);

}  // namespace rsabc

#endif
