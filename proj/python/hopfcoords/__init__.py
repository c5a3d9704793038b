# Copyright 2026 The hopfcoords Authors.
# SPDX-License-Identifier: Apache-2.0
"""Coordinates and checks for round Hopf links."""

from ._core import (
    HopfError,
    HopfLink,
    RoundCircle,
    arc_of_intersection,
    canonical_great_hopf,
    canonical_prism_point,
    config_of_frame,
    conjugation_action,
    dihedral_angle,
    frame_of,
    lift_path,
    lift_rotation,
    linking_number,
    loop_holonomy,
    mu,
    nu,
    orthogonal_complement,
    retract_to_Y,
    retraction_stages,
    schedule,
    verify,
    xi,
)


def basepoint():
    """Unit circles in the xy- and xz-planes, centred at the origin and (1,0,0)."""
    return HopfLink(RoundCircle([0, 0, 0], 1, [0, 0, 1]), RoundCircle([1, 0, 0], 1, [0, 1, 0]))


__all__ = [name for name in dir() if not name.startswith("_")]
