"""CLI subcommands module."""
