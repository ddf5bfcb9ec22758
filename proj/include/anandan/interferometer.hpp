#pragma once

#include "anandan/dynamics.hpp"
#include "anandan/fields.hpp"
#include "anandan/holonomy.hpp"
#include "anandan/path.hpp"

namespace anandan {

/// One interferometer path (an open polyline) and the fields it sees.
struct ArmSpec {
  PathSpec path;
  FieldConfig fields;
};

/// Two arms sharing start and end points. Reversing arm 2 closes the circuit.
struct InterferometerSpec {
  ArmSpec arm1;
  ArmSpec arm2;
  DipoleParticle particle;

  /// Throws InvalidGeometry unless both arms are open and share endpoints within 1e-12.
  void validate() const;
};

struct FringeResult {
  double delta_gamma = 0.0;  // arm1 - arm2
  double intensity = 1.0;    // (1 + cos delta_gamma) / 2
  double arm1_phase = 0.0;
  double arm2_phase = 0.0;
};

struct CasellaParams {
  double d = 0.0;
  double mu = 0.0;
  double B0 = 0.0;
  double E0 = 0.0;
  double a = 1.0;  // length of the field plates/magnets along the beam
  double w = 1.0;  // separation of the arms
  /// Length along the beam of the field-free lead-in and lead-out; 0 selects w.
  double lead = 0.0;
  double mass = 1.0;
};

/// Two-arm layout with the beam along +y, d along x and mu along z. Arm 1 (at
/// x = -w/2) crosses a block with E = (E0, 0, 0), B = (0, 0, B0); arm 2 (at
/// x = +w/2) crosses one with both fields reversed. Diagonal field-free legs join
/// the arms at a common source and detector point.
InterferometerSpec build_casella(const CasellaParams& params);

/// Open-path phase of one arm.
double arm_phase(const ArmSpec& arm, const DipoleParticle& particle,
                 const QuadratureOptions& options = {});

FringeResult phase_difference(const InterferometerSpec& spec,
                              const QuadratureOptions& options = {});

}  // namespace anandan
