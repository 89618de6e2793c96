"""Tests for the algebra engine."""
