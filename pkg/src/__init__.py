"""Application entry point - bitextminer."""
