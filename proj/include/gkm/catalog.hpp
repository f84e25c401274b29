#pragma once

#include "gkm/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

// Expected values bundled with a catalog graph. Every table starts at
// degree 0; `provenance` records, per table, how the value was obtained
// (hand computation, closed form, or a cross-checked solver run).
struct GoldenData {
    std::optional<std::vector<long>> hilbert_dims;
    std::optional<std::vector<int>> generator_degrees;
    std::optional<std::vector<int>> mod_delta;
    std::optional<std::vector<long>> weyl_invariant_dims;
    std::map<std::string, std::string> provenance;
};

struct CatalogEntry {
    std::string name;
    std::string summary; // one-line description for listings
    GkmGraph graph;
    GoldenData expected;
};

// n-dimensional projective space with the standard rank-n torus action:
// vertices e1..e(n+1), an edge for each pair. Golden tables are attached
// for n <= 3.
CatalogEntry projective_space(int n);

// Rational ruled surface over P^1 with a rank-1 skeleton: four fixed points
// on two invariant sections, one four-point ruled relation. The tables do
// not depend on n (n >= 0).
CatalogEntry hirzebruch(int n);

// Weighted projective plane P(1,1,n) collapsed to a rank-1 skeleton: three
// fixed points on a chain of invariant curves with a three-point plane
// relation. Tables independent of n (n >= 1).
CatalogEntry weighted_plane(int n);

// Plane with an involution-type collapse: same constraint data as
// weighted_plane but presented on its own vertex names.
CatalogEntry plane_sl2();

// Smooth complete toric surface from a 2d fan. `rays` are primitive integer
// vectors; `max_cones` lists counterclockwise ray-index pairs covering the
// plane once. Throws IncompleteFan (chain broken, wrong orientation, or a
// direction covered more than once) or NonSimplicial (degenerate cone).
CatalogEntry toric_from_fan_2d(const std::vector<Character>& rays,
                               const std::vector<std::pair<int, int>>& max_cones);

CatalogEntry toric_p2();
CatalogEntry toric_p1xp1();

// Full flag variety of SL3: six vertices indexed by the symmetric group S3,
// nine edges labeled by the three positive roots in simple-root coordinates,
// with the two simple reflections attached as symmetry generators.
CatalogEntry flag_sl3();

// Mixed demonstration graph: a three-point plane relation and a four-point
// ruled relation sharing a vertex, plus one connecting edge; three strata.
CatalogEntry spherical_demo();

// All named entries in listing order.
std::vector<CatalogEntry> all_entries();

CatalogEntry entry_by_name(const std::string& name); // throws BadArgument

std::string golden_to_json(const GoldenData& g);
std::string catalog_entry_to_json(const CatalogEntry& e);

} // namespace gkm
