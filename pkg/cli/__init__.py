"""Command-line entry point for starcover."""
