"""
This module contains utility functions, classes and variables that are used throughout the project.

Modules
-------
errors : Exception hierarchy shared by the engines and the CLI
config_helpers : Module containing functions to read default settings from the environment
"""
