from simadc.units.service import UnitsService

__all__ = ['UnitsService']
