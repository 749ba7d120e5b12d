# config/__init__.py

from config.settings import Settings, Tolerances, settings

__all__ = ['Settings', 'Tolerances', 'settings']
