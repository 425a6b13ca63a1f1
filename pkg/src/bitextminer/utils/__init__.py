"""Utility functions for bitextminer."""
