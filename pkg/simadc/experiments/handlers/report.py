from typing import List
from simadc.device.stack import device_report
from simadc.experiments.artifacts import Table
from simadc.experiments.handlers.base import ExperimentHandler
from simadc.experiments.queue import WorkQueue
from simadc.magnet.report import derived_report


__all__ = ['ReportHandler']


DEVICE_COLUMNS = (
    'state',
    'resistance_ohm',
    'v_sense',
    'read_current_a',
    'state_bit',
)


class ReportHandler(ExperimentHandler):
    kind = 'report'
    plottable = False

    def run_raw(self, queue: WorkQueue) -> List[Table]:
        derived = derived_report(self.config.magnet, self.config.integrator.dt)
        device = [
            tuple(row[column] for column in DEVICE_COLUMNS)
            for row in device_report(self.config.device)
        ]
        return [
            Table('derived.csv', ('quantity', 'value', 'unit'), derived),
            Table('device_report.csv', DEVICE_COLUMNS, device),
        ]
