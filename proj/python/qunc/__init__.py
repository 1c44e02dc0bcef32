# Copyright 2026 The qunc Authors.
# SPDX-License-Identifier: Apache-2.0
"""Variance lower bounds for finite-dimensional quantum states."""

from ._core import (
    DensityMatrix,
    Observable,
    QuncError,
    averaged_bounds,
    averaged_bounds_monte_carlo,
    bloch_state,
    bound_report,
    classical_variance,
    comm_norm_sq,
    lemma_ratio,
    optimal_coefficient,
    pinch,
    product_report,
    random_density,
    random_observable,
    tight_witness,
    variance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
