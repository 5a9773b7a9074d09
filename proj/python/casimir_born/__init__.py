# Copyright 2026 The casimir-born Authors
# Licensed under the Apache License, Version 2.0

"""Born-series Casimir forces and energy densities."""

from ._core import (  # noqa: F401
    Permittivity,
    QuadResult,
    QuadSpec,
    SlabPair,
    box_density,
    density_profile,
    energy_density,
    force_from_energy,
    h_prop_realspace,
    infinite_plate_density,
    integrate_semi_inf,
    lifshitz_force_exact,
    m1,
    m2_lr,
    stress_parts_second_order,
    stress_zz_second_order,
    stress_zz_second_order_closed,
    total_energy_second_order_regularized,
    verify,
)

__version__ = "0.1.0"
