"""Makes the repository root importable for the test suites."""
