#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsurf/report.hpp"
#include "bsurf/surface.hpp"

namespace bsurf {

enum class EdgeKind { Plain, Loop, TwistedLoop };

struct BEdge {
  std::string id;
  EdgeKind kind = EdgeKind::Plain;
  std::string u, v;  // endpoints; u == v for loops
};

/// The associated graph: one vertex per face, one edge per curve. Loops and
/// parallel edges are allowed; a twisted loop marks a one-sided curve.
struct BGraph {
  std::vector<std::string> vertices;
  std::vector<BEdge> edges;
};

BGraph build_graph(const SurfacePresentation& p);

struct TwoColoring {
  std::map<std::string, int> color;  // vertex -> +1/-1
};

struct TwoColorResult {
  std::optional<TwoColoring> coloring;
  std::optional<std::string> bad_edge;    // loop or twisted loop
  std::vector<std::string> odd_cycle;     // edge ids of an odd cycle
};

TwoColorResult two_colorable(const BGraph& g);

/// Existence of a b^m-symplectic structure with critical set given by the
/// presentation's curves.
Decision exists_bm(const SurfacePresentation& p, int m);

/// Same decision when the non-orientable surface is handed over as its
/// orientation double cover plus deck involution.
Decision exists_bm_cover(const SurfacePresentation& cover, const DeckInvolution& deck, int m);

/// A 2-coloring of the cover graph that the deck transformation inverts,
/// if one exists among the 2^{#components} candidates.
std::optional<TwoColoring> deck_inverting_coloring(const SurfacePresentation& cover,
                                                   const DeckInvolution& deck);

struct GraphLabels {
  std::map<std::string, std::string> vertex;
  std::map<std::string, std::string> edge;
};

struct GraphIso {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};

/// All vertex+edge bijections preserving edge kinds and the supplied labels.
std::vector<GraphIso> graph_isomorphisms(const BGraph& g1, const BGraph& g2,
                                         const GraphLabels& l1 = {}, const GraphLabels& l2 = {});

std::vector<std::vector<std::string>> graph_components(const BGraph& g);

std::string to_dot(const BGraph& g, const TwoColoring* coloring = nullptr);

}  // namespace bsurf
