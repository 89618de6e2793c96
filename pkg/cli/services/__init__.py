"""CLI services module."""
