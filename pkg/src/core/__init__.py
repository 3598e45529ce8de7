"""Core utilities (logging, settings, guards)."""
