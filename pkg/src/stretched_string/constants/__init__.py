"""
This package stores constants used throughout the stretched_string package.

Modules
-------
methods : Enum classes for the period methods, the lower-bound variants and the CLI exit codes
defaults : Default tolerances, thresholds and environment variable keys
"""
