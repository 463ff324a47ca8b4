from .periodic import PeriodicCF

__all__ = ["PeriodicCF"]
