"""
Utilities Package

Shared configuration management for the workbench.

Modules:
- config: WorkbenchConfig (pydantic-settings), SearchLimits and load_config
"""

from .config import LOG_LEVELS, SearchLimits, WorkbenchConfig, load_config

__all__ = [
    "LOG_LEVELS",
    "SearchLimits",
    "WorkbenchConfig",
    "load_config",
]
