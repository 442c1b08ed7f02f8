#pragma once

namespace sphbary {

/// Floating-point bands used by every classification and guard in the
/// library. Defaults are the documented contract; the CLI `--tol` flag
/// replaces `geom`.
struct Tolerances {
  /// Triple products, face-plane offsets, hemisphere margin.
  double geom = 1e-10;
  /// Angles: vertex coincidence, winding comparison, near-degenerate angles.
  double angle = 1e-9;
  /// Smallest norm accepted by normalize().
  double zero_norm = 1e-14;
  /// Consecutive vertices must satisfy |<v_i, v_{i+1}>| < 1 - edge.
  double edge = 1e-12;
  /// Cross-product norms and mean-value denominators inside a face.
  double triangle = 1e-12;
  /// phi_{n+2}(0) - phi_{n+1}(0) must exceed this.
  double denominator = 1e-12;
  /// Gnomonic projection needs <v_i, x> above this.
  double projection = 1e-10;
  /// Convexity flag: every triple product of consecutive vertices >= -convexity.
  double convexity = 1e-12;
  /// Face-through-point guard in the Wachspress backend.
  double face_offset = 1e-12;
};

}  // namespace sphbary
