"""
Configuration module for HeckeLab.
"""

from .lab_config import LabConfig, TrialConfig, default_config

__all__ = [
    "LabConfig",
    "TrialConfig",
    "default_config"
]
