from simadc.device.stack import (
    DeviceStack,
    MtjParams,
    SenseParams,
    StateBit,
    device_report,
    mtj_resistance,
    read_current,
    read_state,
    sense_node_voltage,
)


__all__ = [
    'DeviceStack',
    'MtjParams',
    'SenseParams',
    'StateBit',
    'device_report',
    'mtj_resistance',
    'read_current',
    'read_state',
    'sense_node_voltage',
]
