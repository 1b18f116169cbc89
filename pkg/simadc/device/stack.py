'''Behavioral model of the three terminal ME-MTJ.

The input voltage reaches the ME capacitor as V_ME = me_polarity * v_in. The
MTJ conductance is interpolated between its parallel and antiparallel values
with the cosine of the angle to the pinned layer, the MTJ and a reference
resistance form a divider, and a comparator digitizes the node.
'''

import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, List, Optional, Tuple, Union
import numpy as np
from simadc import logging
from simadc.exceptions import ConfigException, InputException
from simadc.llg.integrator import TraceRecord


__all__ = [
    'MtjParams',
    'SenseParams',
    'StateBit',
    'DeviceStack',
    'mtj_resistance',
    'sense_node_voltage',
    'read_state',
    'read_current',
    'device_report',
]


logger = logging.getLogger(__name__)

Resistance = Union[float, np.ndarray]


class StateBit(IntEnum):
    P = 0
    AP = 1


@dataclass(frozen=True)
class MtjParams:
    r_p: float = 1e6
    r_ap: float = 3e6
    m_pinned: Tuple[float, float, float] = (1.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        if not 0 < self.r_p < self.r_ap:
            raise ConfigException(
                'Need 0 < r_p < r_ap, got r_p={}, r_ap={}'.format(
                    self.r_p, self.r_ap
                ),
                extra={'key': 'r_p' if self.r_p <= 0 else 'r_ap'},
            )
        norm = math.sqrt(sum(c * c for c in self.m_pinned))
        if abs(norm - 1) > 1e-9:
            raise ConfigException(
                'Pinned layer direction must be a unit vector, got {}'.format(
                    self.m_pinned
                ),
                extra={'key': 'pinned_x'},
            )

    @property
    def g_p(self) -> float:
        return 1 / self.r_p

    @property
    def g_ap(self) -> float:
        return 1 / self.r_ap


@dataclass(frozen=True)
class SenseParams:
    r_ref: float = math.sqrt(1e6 * 3e6)
    v_read: float = 0.17
    v_threshold: float = 0.085

    def __post_init__(self) -> None:
        if not self.r_ref > 0:
            raise ConfigException(
                'r_ref must be positive, got {}'.format(self.r_ref),
                extra={'key': 'r_ref'},
            )
        if not 0 < self.v_threshold < self.v_read:
            raise ConfigException(
                'Need 0 < v_threshold < v_read, got {} and {}'.format(
                    self.v_threshold, self.v_read
                ),
                extra={'key': 'v_threshold'},
            )

    @classmethod
    def for_mtj(
        cls,
        mtj: MtjParams,
        v_read: float = 0.17,
        r_ref: Optional[float] = None,
        v_threshold: Optional[float] = None,
    ) -> 'SenseParams':
        '''Geometric mean reference and a comparator at half the read
        voltage unless given.'''
        if r_ref is None:
            r_ref = math.sqrt(mtj.r_p * mtj.r_ap)
        if v_threshold is None:
            v_threshold = v_read / 2
        return cls(r_ref=r_ref, v_read=v_read, v_threshold=v_threshold)


def mtj_resistance(mtj: MtjParams, m: np.ndarray) -> Resistance:
    '''Resistance for magnetization m, shape (3,) or (n, 3).'''
    cos_theta = np.asarray(m, dtype=np.float64) @ np.asarray(mtj.m_pinned)
    g = 0.5 * (mtj.g_p + mtj.g_ap) + 0.5 * (mtj.g_p - mtj.g_ap) * cos_theta
    r = 1 / g
    return float(r) if np.ndim(r) == 0 else r


def _check_resistance(r_mtj: Resistance) -> None:
    if np.any(np.asarray(r_mtj) <= 0):
        raise InputException(
            'MTJ resistance must be positive', extra={'r_mtj': r_mtj}
        )


def sense_node_voltage(sense: SenseParams, r_mtj: Resistance) -> Resistance:
    _check_resistance(r_mtj)
    r_mtj = np.asarray(r_mtj, dtype=np.float64)
    # The ratio first keeps r_mtj == r_ref at exactly v_read / 2
    v = sense.v_read * (r_mtj / (r_mtj + sense.r_ref))
    return float(v) if np.ndim(v) == 0 else v


def read_state(
    sense: SenseParams, r_mtj: Resistance
) -> Union[StateBit, np.ndarray]:
    '''STATE is 1 when the node is strictly above the threshold. Arrays of
    resistances give an int8 array of bits.'''
    bits = np.asarray(sense_node_voltage(sense, r_mtj)) > sense.v_threshold
    if np.ndim(bits) == 0:
        return StateBit(int(bits))
    return bits.astype(np.int8)


def read_current(sense: SenseParams, r_mtj: Resistance) -> Resistance:
    _check_resistance(r_mtj)
    i = sense.v_read / (sense.r_ref + np.asarray(r_mtj, dtype=np.float64))
    return float(i) if np.ndim(i) == 0 else i


@dataclass(frozen=True)
class DeviceStack:
    mtj: MtjParams = field(default_factory=MtjParams)
    sense: SenseParams = field(default_factory=SenseParams)
    me_polarity: int = -1

    def __post_init__(self) -> None:
        if self.me_polarity not in (-1, 1):
            raise ConfigException(
                'me_polarity must be -1 or 1, got {}'.format(
                    self.me_polarity
                ),
                extra={'key': 'me_polarity'},
            )
        if not self.mtj.r_p < self.sense.r_ref < self.mtj.r_ap:
            raise ConfigException(
                'r_ref ({}) must lie between r_p ({}) and r_ap ({})'.format(
                    self.sense.r_ref, self.mtj.r_p, self.mtj.r_ap
                ),
                extra={'key': 'r_ref'},
            )

    def me_voltage(self, v_in: float) -> float:
        return self.me_polarity * v_in

    def state_trace(self, trace: TraceRecord) -> Tuple[np.ndarray, np.ndarray]:
        '''Sense node voltage and STATE for every recorded sample.'''
        r = mtj_resistance(self.mtj, trace.m)
        return (
            np.atleast_1d(sense_node_voltage(self.sense, r)),
            np.atleast_1d(read_state(self.sense, r)),
        )

    def read_trace(self, trace: TraceRecord) -> TraceRecord:
        v_sense, state = self.state_trace(trace)
        return trace.with_readout(v_sense, state)


def device_report(device: DeviceStack) -> List[Dict[str, float]]:
    '''Readout figures of the P and AP states.'''
    pinned = np.asarray(device.mtj.m_pinned)
    rows = []
    for name, m in (('P', pinned), ('AP', -pinned)):
        r = mtj_resistance(device.mtj, m)
        rows.append(
            {
                'state': name,
                'resistance_ohm': r,
                'v_sense': sense_node_voltage(device.sense, r),
                'read_current_a': read_current(device.sense, r),
                'state_bit': int(read_state(device.sense, r)),
            }
        )
    return rows
