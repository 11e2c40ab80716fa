"""
Configuration module for vertex-forms.
Handles loading, saving, validating and accessing run settings.
"""

from .run_config import (
    SUITES,
    FunctionalFile,
    ModelSpec,
    RunConfig,
    RunSettings,
    load_functional_file,
    setup_logging,
)

__all__ = ['SUITES', 'FunctionalFile', 'ModelSpec', 'RunConfig', 'RunSettings',
           'load_functional_file', 'setup_logging']
