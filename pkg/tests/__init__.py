"""Test package for ghsimplex."""
