#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsurf/report.hpp"

namespace bsurf {

enum class Sidedness { TwoSided, OneSided };

/// A connected component of S\Z, as a compact surface with boundary.
/// `euler_char` is the Euler characteristic of the compact face including
/// its boundary circles (disk = 1, annulus = 0). Faces are required to be
/// orientable; non-orientability of S enters only through one-sided curves
/// and the gluing-sign cocycle.
struct Face {
  std::string id;
  int euler_char = 0;
  std::vector<std::string> boundary_slots;
};

struct Attachment {
  std::string face;
  std::string slot;
};

/// A component of the critical set Z. A two-sided curve carries exactly two
/// attachments and a gluing sign (orientation agreement across the curve,
/// relative to the two faces' reference orientations). A one-sided curve has
/// a Moebius-band neighborhood and a single attachment.
struct Curve {
  std::string id;
  Sidedness sided = Sidedness::TwoSided;
  std::vector<Attachment> attachments;
  int gluing_sign = +1;  // two-sided only
};

struct SurfacePresentation {
  std::vector<Face> faces;
  std::vector<Curve> curves;
  int declared_euler_char = 0;
  std::optional<bool> declared_orientable;

  const Face* find_face(const std::string& id) const;
  const Curve* find_curve(const std::string& id) const;
};

ValidationReport validate(const SurfacePresentation& p);

/// Per-face orientation flips making every effective gluing sign +1.
struct OrientationCertificate {
  std::map<std::string, int> flip;
};

struct OrientationResult {
  std::optional<OrientationCertificate> certificate;
  std::vector<std::string> obstruction;  // one-sided curve or odd-sign cycle
};

OrientationResult is_orientable(const SurfacePresentation& p);

/// The combinatorics of an involutive b-diffeomorphism: face/curve
/// permutations with an orientation sign per face, and transverse (side
/// swap) / tangential (curve reversal) signs per curve.
struct DeckInvolution {
  std::map<std::string, std::string> face_map;
  std::map<std::string, std::string> curve_map;
  std::map<std::string, int> face_sigma;
  std::map<std::string, int> curve_t;
  std::map<std::string, int> curve_u;
};

ValidationReport validate_involution(const SurfacePresentation& p, const DeckInvolution& inv);

struct DoubleCover {
  SurfacePresentation cover;
  DeckInvolution deck;
  std::map<std::string, std::vector<std::string>> face_lifts;   // base face -> 2 lifts
  std::map<std::string, std::vector<std::string>> curve_lifts;  // base curve -> lifts
};

/// Orientation double cover with its deck involution. One-sided curves lift
/// to a single two-sided curve joining the two face copies; all cover gluing
/// signs are +1 in the covering orientation.
DoubleCover orientation_double_cover(const SurfacePresentation& p);

/// Connected components of the face-adjacency structure (used for cover
/// component counting and certificate normalization).
std::vector<std::vector<std::string>> face_components(const SurfacePresentation& p);

}  // namespace bsurf
