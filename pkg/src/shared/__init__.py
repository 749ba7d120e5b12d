# src/shared/__init__.py

from src.shared.utils import *  # noqa: F401,F403
from src.shared.utils import __all__  # noqa: F401
