"""Input parsing and shared data models."""
