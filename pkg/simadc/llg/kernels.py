'''Compiled inner loops of the integrator.

Vectors are passed around as scalar triples so that no array is allocated
per step. field_coefficients is the array built by
MagnetConfig.field_coefficients: (Ms N_x, Ms N_y, Ms N_z, H_k, H_i).
'''

import math
from typing import Tuple
import numpy as np
from numba import njit


__all__ = ['rhs', 'heun_update', 'heun_chunk', 'as_triple']


Triple = Tuple[float, float, float]


@njit(cache=True)
def rhs(mx, my, mz, hx, hy, hz, gamma, alpha):
    '''Explicit Landau-Lifshitz form of the Gilbert equation.'''
    pref = -gamma / (1.0 + alpha * alpha)
    cx = my * hz - mz * hy
    cy = mz * hx - mx * hz
    cz = mx * hy - my * hx
    dx = my * cz - mz * cy
    dy = mz * cx - mx * cz
    dz = mx * cy - my * cx
    return (
        pref * (cx + alpha * dx),
        pref * (cy + alpha * dy),
        pref * (cz + alpha * dz),
    )


@njit(cache=True)
def _field(mx, my, mz, coeffs, bx, by, bz):
    return (
        (coeffs[3] - coeffs[0]) * mx + bx,
        -coeffs[1] * my + by,
        (coeffs[4] - coeffs[2]) * mz + bz,
    )


@njit(cache=True)
def heun_update(mx, my, mz, bx, by, bz, coeffs, gamma, alpha, dt):
    '''One predictor-corrector step without renormalization. (bx, by, bz)
    is every field that does not depend on m, thermal field included, so it
    is the same for both stages.'''
    hx, hy, hz = _field(mx, my, mz, coeffs, bx, by, bz)
    k1x, k1y, k1z = rhs(mx, my, mz, hx, hy, hz, gamma, alpha)
    px = mx + dt * k1x
    py = my + dt * k1y
    pz = mz + dt * k1z
    hx, hy, hz = _field(px, py, pz, coeffs, bx, by, bz)
    k2x, k2y, k2z = rhs(px, py, pz, hx, hy, hz, gamma, alpha)
    half = 0.5 * dt
    return (
        mx + half * (k1x + k2x),
        my + half * (k1y + k2y),
        mz + half * (k1z + k2z),
    )


@njit(cache=True)
def heun_chunk(
    m,
    noise,
    coeffs,
    h_bias,
    gamma,
    alpha,
    dt,
    stride,
    phase,
    renormalize,
    records,
):
    '''Advances m in place over noise.shape[0] steps. Every stride steps the
    state is appended to records. phase counts the steps since the last
    record so that a cadence can span chunks.

    Returns (steps done, records written, largest per-step norm change,
    phase). Fewer steps than requested means the state became non finite.
    '''
    mx, my, mz = m[0], m[1], m[2]
    norm_old = math.sqrt(mx * mx + my * my + mz * mz)
    n_rec = 0
    max_drift = 0.0
    for i in range(noise.shape[0]):
        nx, ny, nz = heun_update(
            mx,
            my,
            mz,
            h_bias[0] + noise[i, 0],
            h_bias[1] + noise[i, 1],
            h_bias[2] + noise[i, 2],
            coeffs,
            gamma,
            alpha,
            dt,
        )
        norm = math.sqrt(nx * nx + ny * ny + nz * nz)
        if not math.isfinite(norm) or norm == 0.0:
            m[0], m[1], m[2] = mx, my, mz
            return i, n_rec, max_drift, phase
        drift = abs(norm - norm_old)
        if drift > max_drift:
            max_drift = drift
        if renormalize:
            nx /= norm
            ny /= norm
            nz /= norm
            norm = 1.0
        mx, my, mz = nx, ny, nz
        norm_old = norm
        phase += 1
        if phase == stride:
            records[n_rec, 0] = mx
            records[n_rec, 1] = my
            records[n_rec, 2] = mz
            n_rec += 1
            phase = 0
    m[0], m[1], m[2] = mx, my, mz
    return noise.shape[0], n_rec, max_drift, phase


def as_triple(v: np.ndarray) -> Triple:
    return float(v[0]), float(v[1]), float(v[2])
